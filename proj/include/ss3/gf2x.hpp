#pragma once

#include <cstdint>

// Carry-less polynomial arithmetic over F2, the innermost kernel of every
// field operation.  A scalar shift-xor reference implementation is always
// available; on x86 with PCLMULQDQ a SIMD variant is selected at startup.
// Both compute the full 128-bit product of two 64-bit polynomials.

namespace ss3::gf2x {

struct U128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool operator==(const U128&) const = default;
};

U128 clmul_scalar(std::uint64_t a, std::uint64_t b) noexcept;

// Best implementation for this machine (scalar or pclmul), chosen once.
using ClmulFn = U128 (*)(std::uint64_t, std::uint64_t) noexcept;
extern const ClmulFn clmul;

// Name of the selected kernel ("scalar" or "pclmul"), for diagnostics.
const char* active_kernel() noexcept;

// True when a non-scalar kernel exists on this machine (used by the
// equivalence tests to decide whether there is anything to compare).
bool has_accelerated_kernel() noexcept;

// Degree of a polynomial held in a 64-bit word (-1 for the zero polynomial).
inline int degree(std::uint64_t p) noexcept {
    return 63 - __builtin_clzll(p | 1) + (p == 0 ? -63 : 0);
}

// Remainder of a 128-bit polynomial modulo a polynomial of degree <= 63.
std::uint64_t mod128(U128 a, std::uint64_t m) noexcept;

// Remainder / gcd on 64-bit polynomials.
std::uint64_t mod64(std::uint64_t a, std::uint64_t m) noexcept;
std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) noexcept;

// Irreducibility over F2 (moduli are required to have nonzero constant
// term, so the degree-1 modulus is x+1).
bool irreducible(std::uint64_t m, int n) noexcept;

}  // namespace ss3::gf2x
