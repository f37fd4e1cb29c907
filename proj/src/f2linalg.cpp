#include "ss3/f2linalg.hpp"

#include <stdexcept>

namespace ss3 {

std::vector<std::uint64_t> transpose_map(const std::vector<std::uint64_t>& img, int nrows) {
    std::vector<std::uint64_t> t(static_cast<std::size_t>(nrows), 0);
    for (std::size_t c = 0; c < img.size(); ++c)
        for (int r = 0; r < nrows; ++r)
            if ((img[c] >> r) & 1) t[static_cast<std::size_t>(r)] |= 1ull << c;
    return t;
}

static int msb(std::uint64_t x) { return 63 - __builtin_clzll(x); }

LinearSolver::LinearSolver(const std::vector<std::uint64_t>& img)
    : dim_(static_cast<int>(img.size())) {
    for (std::size_t c = 0; c < img.size(); ++c) {
        std::uint64_t val = img[c], comb = 1ull << c;
        for (const auto& [rv, rc] : rows_) {
            if (val && msb(val) == msb(rv)) {
                val ^= rv;
                comb ^= rc;
            }
        }
        if (val) {
            rows_.emplace_back(val, comb);
            // keep rows sorted by descending pivot so reduction is one pass
            for (std::size_t i = rows_.size() - 1; i > 0; --i) {
                if (msb(rows_[i].first) > msb(rows_[i - 1].first))
                    std::swap(rows_[i], rows_[i - 1]);
                else
                    break;
            }
        } else {
            kernel_.push_back(comb);
        }
    }
    rank_ = static_cast<int>(rows_.size());
    // echelonize the kernel by leading bit for coset minimization
    std::vector<std::uint64_t> ech;
    for (std::uint64_t k : kernel_) {
        for (std::uint64_t e : ech)
            if (k && msb(k) == msb(e)) k ^= e;
        if (k) {
            ech.push_back(k);
            for (std::size_t i = ech.size() - 1; i > 0; --i) {
                if (msb(ech[i]) > msb(ech[i - 1]))
                    std::swap(ech[i], ech[i - 1]);
                else
                    break;
            }
        }
    }
    kernel_ = std::move(ech);
}

std::optional<std::uint64_t> LinearSolver::solve(std::uint64_t b) const {
    std::uint64_t comb = 0;
    for (const auto& [rv, rc] : rows_) {
        if (b && msb(b) == msb(rv)) {
            b ^= rv;
            comb ^= rc;
        }
    }
    if (b) return std::nullopt;
    return comb;
}

std::optional<std::uint64_t> LinearSolver::solve_least(std::uint64_t b) const {
    auto v = solve(b);
    if (!v) return std::nullopt;
    std::uint64_t r = *v;
    for (std::uint64_t k : kernel_)
        if ((r >> msb(k)) & 1) r ^= k;
    return r;
}

std::vector<std::uint64_t> LinearSolver::solve_all(std::uint64_t b, int max_kernel_bits) const {
    auto v = solve(b);
    if (!v) return {};
    if (static_cast<int>(kernel_.size()) > max_kernel_bits)
        throw std::length_error("solution set too large to materialize");
    std::vector<std::uint64_t> out;
    out.reserve(1ull << kernel_.size());
    std::uint64_t count = 1ull << kernel_.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::uint64_t s = *v;
        for (std::size_t i = 0; i < kernel_.size(); ++i)
            if ((mask >> i) & 1) s ^= kernel_[i];
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ss3
