#include "ss3/gf2x.hpp"

#if defined(__x86_64__)
#include <immintrin.h>
#define SS3_X86 1
#endif

namespace ss3::gf2x {

U128 clmul_scalar(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t lo = 0, hi = 0;
    while (b) {
        int i = __builtin_ctzll(b);
        b &= b - 1;
        lo ^= a << i;
        if (i) hi ^= a >> (64 - i);
    }
    return {lo, hi};
}

#ifdef SS3_X86
__attribute__((target("pclmul,sse4.1")))
static U128 clmul_pclmul(std::uint64_t a, std::uint64_t b) noexcept {
    __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
    __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
    __m128i p = _mm_clmulepi64_si128(va, vb, 0x00);
    return {static_cast<std::uint64_t>(_mm_cvtsi128_si64(p)),
            static_cast<std::uint64_t>(_mm_extract_epi64(p, 1))};
}
#endif

static ClmulFn pick_kernel() noexcept {
#ifdef SS3_X86
    if (__builtin_cpu_supports("pclmul") && __builtin_cpu_supports("sse4.1"))
        return &clmul_pclmul;
#endif
    return &clmul_scalar;
}

const ClmulFn clmul = pick_kernel();

const char* active_kernel() noexcept {
    return clmul == &clmul_scalar ? "scalar" : "pclmul";
}

bool has_accelerated_kernel() noexcept { return clmul != &clmul_scalar; }

std::uint64_t mod128(U128 a, std::uint64_t m) noexcept {
    int dm = degree(m);
    while (a.hi) {
        int d = 64 + degree(a.hi);
        int sh = d - dm;
        if (sh >= 64) {
            a.hi ^= m << (sh - 64);
        } else {
            a.hi ^= m >> (64 - sh);
            a.lo ^= m << sh;
        }
    }
    std::uint64_t r = a.lo;
    int d;
    while ((d = degree(r)) >= dm && r) r ^= m << (d - dm);
    return r;
}

std::uint64_t mod64(std::uint64_t a, std::uint64_t m) noexcept {
    return mod128({a, 0}, m);
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) noexcept {
    while (b) {
        std::uint64_t r = mod64(a, b);
        a = b;
        b = r;
    }
    return a;
}

bool irreducible(std::uint64_t m, int n) noexcept {
    if (n < 1 || degree(m) != n) return false;
    if ((m & 1) == 0) return false;
    // x^(2^n) == x mod m, and x^(2^(n/p)) != x for every prime p | n.
    auto frob_pow = [m](int k) {
        std::uint64_t r = mod64(2, m);
        for (int i = 0; i < k; ++i) r = mod128(clmul(r, r), m);
        return r;
    };
    std::uint64_t x = mod64(2, m);
    if (frob_pow(n) != x) return false;
    int nn = n;
    for (int p = 2; p * p <= nn; ++p) {
        if (nn % p) continue;
        while (nn % p == 0) nn /= p;
        if (gcd64(frob_pow(n / p) ^ x, m) != 1) return false;
    }
    if (nn > 1 && gcd64(frob_pow(n / nn) ^ x, m) != 1) return false;
    return true;
}

}  // namespace ss3::gf2x
