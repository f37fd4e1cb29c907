#include "ss3/field.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ss3 {

namespace {

std::mutex g_moduli_mu;
std::map<int, std::uint64_t> g_overrides;
std::map<int, std::uint64_t> g_least_cache;

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 qq = r / newr;
        t -= qq * newt;
        std::swap(t, newt);
        r -= qq * newr;
        std::swap(r, newr);
    }
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

}  // namespace

std::uint64_t Field::least_irreducible(int n) {
    std::lock_guard<std::mutex> lk(g_moduli_mu);
    auto it = g_least_cache.find(n);
    if (it != g_least_cache.end()) return it->second;
    std::uint64_t top = 1ull << n;
    for (std::uint64_t low = 1; low < top; low += 2) {
        if (gf2x::irreducible(top | low, n)) {
            g_least_cache[n] = top | low;
            return top | low;
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

void Field::set_modulus_override(int n, std::uint64_t modulus) {
    if (!gf2x::irreducible(modulus, n))
        throw std::invalid_argument("modulus override is not irreducible of degree " +
                                    std::to_string(n));
    std::lock_guard<std::mutex> lk(g_moduli_mu);
    g_overrides[n] = modulus;
}

void Field::clear_modulus_overrides() {
    std::lock_guard<std::mutex> lk(g_moduli_mu);
    g_overrides.clear();
}

void Field::load_moduli_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open moduli file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("bad moduli line: " + line);
        int n = std::stoi(line.substr(0, colon));
        auto hex = Field::parse_hex(line.substr(colon + 1));
        if (!hex) throw std::invalid_argument("bad moduli hex: " + line);
        set_modulus_override(n, *hex);
    }
}

Field Field::make(int n) {
    if (n < 1 || n > kMaxDegree)
        throw std::invalid_argument("field degree out of range [1,63]: " + std::to_string(n));
    {
        std::lock_guard<std::mutex> lk(g_moduli_mu);
        auto it = g_overrides.find(n);
        if (it != g_overrides.end()) return Field(n, it->second);
    }
    return Field(n, least_irreducible(n));
}

Field Field::with_modulus(int n, std::uint64_t modulus) {
    if (!gf2x::irreducible(modulus, n))
        throw std::invalid_argument("modulus is not irreducible of the requested degree");
    return Field(n, modulus);
}

Field::Field(int n, std::uint64_t modulus) : n_(n), mod_(modulus) {
    q_ = (n == 63) ? (1ull << 63) : (1ull << n);
    for (int i = 0; i < n_; ++i) {
        fe x = fe{1} << i;
        fe t = 0, p = x;
        for (int j = 0; j < n_; ++j) {
            t ^= p;
            p = sqr(p);
        }
        if (t & 1) tr_mask_ |= 1ull << i;  // t is 0 or 1 here
    }
    // Elements below 2^i0 combine only trace-0 basis vectors, so the least
    // trace-1 element is the lowest trace-1 basis vector itself.
    if (tr_mask_ == 0) throw std::logic_error("absolute trace cannot vanish identically");
    c0_ = fe{1} << __builtin_ctzll(tr_mask_);
    as_solver_ = linear_solver([this](fe v) { return sqr(v) ^ v; });
    as4_solver_ = linear_solver([this](fe v) { return sqr(sqr(v)) ^ v; });
    if (n_ % 2 == 0) {
        std::uint64_t qm1 = q_ - 1;
        sylow_s_ = 0;
        m3_ = qm1;
        while (m3_ % 3 == 0) {
            m3_ /= 3;
            ++sylow_s_;
        }
        inv3_ = (m3_ == 1) ? 0 : inv_mod_u64(3, m3_);
        // least non-cube generates the 3-Sylow after raising to m3
        fe g = 2;
        while (g < q_ && is_cube(g)) ++g;
        sylow_gen_ = pow(g, m3_);
    } else {
        inv3_ = inv_mod_u64(3, q_ - 1);
    }
}

fe Field::pow(fe a, std::uint64_t e) const noexcept {
    fe r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = sqr(a);
        e >>= 1;
    }
    return r;
}

fe Field::inv(fe a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return pow(a, q_ - 2);
}

fe Field::sqrt(fe a) const noexcept { return frob(a, n_ - 1); }

fe Field::trace_to_f4(fe a) const {
    if (n_ % 2 != 0) throw std::invalid_argument("trace_to_f4 requires even degree");
    fe t = 0, p = a;
    for (int i = 0; i < n_ / 2; ++i) {
        t ^= p;
        p = sqr(sqr(p));
    }
    return t;
}

std::optional<fe> Field::solve_as(fe z) const { return as_solver_.solve_least(z); }

std::optional<fe> Field::solve_as4(fe w) const { return as4_solver_.solve_least(w); }

std::vector<fe> Field::solve_linearized(std::span<const std::pair<fe, std::uint32_t>> terms,
                                        fe b) const {
    for (const auto& [coeff, e] : terms) {
        (void)coeff;
        if (e == 0 || (e & (e - 1)) != 0)
            throw std::invalid_argument("linearized term exponent must be a power of two");
    }
    auto solver = linear_solver([&](fe v) {
        fe acc = 0;
        for (const auto& [coeff, e] : terms) {
            fe p = v;
            for (std::uint32_t t = e; t > 1; t >>= 1) p = sqr(p);
            acc ^= mul(coeff, p);
        }
        return acc;
    });
    return solver.solve_all(b);
}

bool Field::is_cube(fe a) const {
    if (a == 0 || n_ % 2 == 1) return true;
    return pow(a, (q_ - 1) / 3) == 1;
}

fe Field::omega() const {
    if (n_ % 2 != 0) throw std::invalid_argument("omega requires even degree");
    auto w = solve_as(1);  // roots of z^2+z+1
    return *w;
}

std::optional<fe> Field::cube_root(fe a) const {
    if (a == 0) return fe{0};
    if (n_ % 2 == 1) return pow(a, inv3_);
    if (!is_cube(a)) return std::nullopt;
    // Adleman-Manders-Miller within the cyclic 3-Sylow subgroup.
    std::uint64_t s3 = 1;
    for (int i = 0; i < sylow_s_; ++i) s3 *= 3;
    fe r = (m3_ == 1) ? fe{1} : pow(a, inv3_);
    fe h = mul(mul(r, mul(r, r)), inv(a));  // r^3 / a, lies in the 3-Sylow
    // digits of dlog_z(h) base 3, z = sylow_gen_
    fe zeta = pow(sylow_gen_, s3 / 3);  // order 3
    fe zeta2 = mul(zeta, zeta);
    std::uint64_t j = 0;
    for (int k = 0; k < sylow_s_; ++k) {
        std::uint64_t step = 1;
        for (int i = 0; i < sylow_s_ - 1 - k; ++i) step *= 3;
        fe probe = pow(mul(h, pow(inv(sylow_gen_), j)), step);
        std::uint64_t digit;
        if (probe == 1)
            digit = 0;
        else if (probe == zeta)
            digit = 1;
        else if (probe == zeta2)
            digit = 2;
        else
            throw std::logic_error("cube_root: element outside 3-Sylow");
        std::uint64_t p3 = 1;
        for (int i = 0; i < k; ++i) p3 *= 3;
        j += digit * p3;
    }
    if (j % 3 != 0) throw std::logic_error("cube_root: non-cube slipped through");
    fe y = pow(sylow_gen_, j / 3);
    fe root = mul(r, inv(y));
    // minimize over the three roots root * {1, w, w^2}
    fe w = omega();
    fe best = root;
    fe r2 = mul(root, w);
    fe r3 = mul(r2, w);
    if (r2 < best) best = r2;
    if (r3 < best) best = r3;
    return best;
}

std::string Field::to_hex(fe a) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(a));
    return buf;
}

std::optional<fe> Field::parse_hex(std::string_view s) {
    if (s.empty() || s.size() > 16) return std::nullopt;
    fe v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            d = c - 'A' + 10;
        else
            return std::nullopt;
        v = (v << 4) | static_cast<fe>(d);
    }
    return v;
}

}  // namespace ss3
