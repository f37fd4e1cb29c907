#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Dense linear algebra over F2 for dimensions <= 64, with vectors packed in
// uint64 words.  Used for Artin-Schreier solvers, linearized-polynomial
// kernels and subfield-membership tests.

namespace ss3 {

// An F2-linear map given by the images of the unit vectors.
inline std::uint64_t apply_map(const std::vector<std::uint64_t>& img, std::uint64_t x) {
    std::uint64_t r = 0;
    while (x) {
        int i = __builtin_ctzll(x);
        x &= x - 1;
        r ^= img[static_cast<std::size_t>(i)];
    }
    return r;
}

// Transpose of the map (dim in = img.size(), dim out = nrows).
std::vector<std::uint64_t> transpose_map(const std::vector<std::uint64_t>& img, int nrows);

// Echelonized solver for  sum_{i in v} img[i] = b  with kernel tracking.
class LinearSolver {
public:
    LinearSolver() = default;
    explicit LinearSolver(const std::vector<std::uint64_t>& img);

    int rank() const noexcept { return rank_; }
    int dim() const noexcept { return dim_; }
    const std::vector<std::uint64_t>& kernel() const noexcept { return kernel_; }

    // Some solution of L(v) = b, or nullopt when b is outside the image.
    std::optional<std::uint64_t> solve(std::uint64_t b) const;
    // The solution of least integer value in its coset.
    std::optional<std::uint64_t> solve_least(std::uint64_t b) const;
    // The full solution set, ascending.  Throws std::length_error when the
    // kernel is larger than max_kernel_bits allows.
    std::vector<std::uint64_t> solve_all(std::uint64_t b, int max_kernel_bits = 20) const;

    bool in_image(std::uint64_t b) const { return solve(b).has_value(); }

private:
    int dim_ = 0;
    int rank_ = 0;
    // Echelon rows: (value, combination) pairs with distinct value pivots.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows_;
    std::vector<std::uint64_t> kernel_;  // echelonized, distinct leading bits
};

}  // namespace ss3
