#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ss3/f2linalg.hpp"
#include "ss3/gf2x.hpp"

// Binary fields F_{2^n} in polynomial basis.  An element is a uint64 whose
// bit i is the coefficient of x^i; the canonical enumeration order is the
// integer order of these words.  All operations are pure; a Field is
// immutable after construction and safe to share across threads.

namespace ss3 {

using fe = std::uint64_t;  // field element (owning Field implied by context)

class Field {
public:
    static constexpr int kMaxDegree = 63;

    // Field with the enumeration-least irreducible modulus of degree n,
    // unless an override for n was installed via set_modulus_override /
    // load_moduli_file.
    static Field make(int n);
    static Field with_modulus(int n, std::uint64_t modulus);

    int n() const noexcept { return n_; }
    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t modulus() const noexcept { return mod_; }
    fe c0() const noexcept { return c0_; }
    bool q_square() const noexcept { return n_ % 2 == 0; }

    fe add(fe a, fe b) const noexcept { return a ^ b; }
    fe mul(fe a, fe b) const noexcept { return gf2x::mod128(gf2x::clmul(a, b), mod_); }
    fe sqr(fe a) const noexcept { return gf2x::mod128(gf2x::clmul(a, a), mod_); }
    fe pow(fe a, std::uint64_t e) const noexcept;
    fe inv(fe a) const;  // throws std::domain_error on 0
    fe sqrt(fe a) const noexcept;

    int trace(fe a) const noexcept {
        return __builtin_parityll(a & tr_mask_) & 1;
    }
    fe trace_to_f4(fe a) const;  // requires n even

    // Least y with y^2+y = z, or nullopt when Tr(z) = 1.
    std::optional<fe> solve_as(fe z) const;
    // Least v with v^4+v = w, or nullopt.
    std::optional<fe> solve_as4(fe w) const;

    // Full solution set of sum_i coeff_i * v^(e_i) = b where every e_i is a
    // power of two; ascending order, empty when unsolvable.
    std::vector<fe> solve_linearized(std::span<const std::pair<fe, std::uint32_t>> terms,
                                     fe b) const;
    // The echelonized solver for an arbitrary F2-linear map v -> L(v).
    template <typename Fn>
    LinearSolver linear_solver(Fn&& map) const {
        std::vector<std::uint64_t> img(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) img[static_cast<std::size_t>(i)] = map(fe{1} << i);
        return LinearSolver(img);
    }

    // Cube structure.  0 counts as a cube with root 0.  For n odd every
    // element is a cube; for n even the cubes are the index-3 subgroup.
    bool is_cube(fe a) const;
    std::optional<fe> cube_root(fe a) const;  // enumeration-least root
    fe omega() const;                         // least primitive cube root of 1 (n even)

    // Frobenius x -> x^(2^k) iterated.
    fe frob(fe a, int k) const noexcept {
        for (int i = 0; i < k; ++i) a = sqr(a);
        return a;
    }

    // Serialization: lowercase hex of the coefficient word.
    static std::string to_hex(fe a);
    static std::optional<fe> parse_hex(std::string_view s);

    // Modulus table management ("n:hex" lines; bad lines rejected).
    static void set_modulus_override(int n, std::uint64_t modulus);
    static void clear_modulus_overrides();
    static void load_moduli_file(const std::string& path);
    static std::uint64_t least_irreducible(int n);

private:
    Field(int n, std::uint64_t modulus);

    int n_ = 0;
    std::uint64_t mod_ = 0;
    std::uint64_t q_ = 0;
    fe c0_ = 0;
    std::uint64_t tr_mask_ = 0;
    LinearSolver as_solver_;    // v -> v^2+v
    LinearSolver as4_solver_;   // v -> v^4+v
    // 3-Sylow data for cube roots, n even: q-1 = 3^s * m3.
    int sylow_s_ = 0;
    std::uint64_t m3_ = 0;
    fe sylow_gen_ = 0;  // element of exact order 3^s
    std::uint64_t inv3_ = 0;  // 3^-1 mod m3 (n even) or mod q-1 (n odd)
};

}  // namespace ss3
