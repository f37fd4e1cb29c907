#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ss3/field.hpp"

// Auxiliary geometry: explicit genus-0 parametrizations with exact cubic-sum
// identities, point counts of the genus-4 curves y^2+y = Ax^9+Bx^3+Cx (+D),
// and the count of nonzero cube triples summing to zero.

namespace ss3 {

// --- genus-0 parametrizations ------------------------------------------

// Pencil parametrization of a+bx+c^4x^4 = a'+b'y+(c')^4y^4 (b'c != bc').
struct PencilData {
    fe a, b, c, a2, b2, c2;
};
std::pair<fe, fe> param_pencil(const Field& F, const PencilData& p, fe mu);

struct TripleXYZ {
    fe x, y, z;
};

// Solution of x+x^4 r^8 = y+y^4 s^8 = z+z^4 t^8 for r+s+t = 0, r,s,t != 0,
// parametrized by lambda; and the closed form of x^3 r^8 + y^3 s^8 + z^3 t^8.
TripleXYZ param_sum_zero(const Field& F, fe r, fe s, fe t, fe lam);
fe cubic_sum_closed(const Field& F, fe r, fe s, fe t, fe lam);

// Solution of r^16(1+x+x^4) = s^16(1+y+y^4) = t^16(1+z+z^4) for
// r^-3+s^-3+t^-3 = 0; and the closed form of x^3+x + y^3+y + z^3+z.
TripleXYZ param_inv_cubes(const Field& F, fe r, fe s, fe t, fe lam);
fe as_sum_closed(const Field& F, fe r, fe s, fe t, fe lam);

// Trace-form coefficients: Tr of the cubic sums collapses to
// Tr(A L^9 + B L^3) resp. Tr(A L^9 + B L^3 + C L + D).
std::array<fe, 2> dcoeffs_sum_zero(const Field& F, fe r, fe s, fe t);
std::array<fe, 4> dcoeffs_inv_cubes(const Field& F, fe r, fe s, fe t);

// --- the curves D_ABC(D) -------------------------------------------------

struct DCurveParams {
    fe A = 0, B = 0, C = 0, D = 0;
};

struct DCurveAnalysis {
    int w = 0;                   // dim of W = Ker(A^8 x^64 + B^8 x^16 + B^4 x^4 + A x) in k
    std::vector<fe> basis;       // basis of W
    bool q_vanishes = false;     // Tr(Ax^9+Bx^3+Cx) = 0 on all of W
    std::uint64_t count = 0;     // |curve(k)| including the point at infinity
    int sign = 0;                // count = q+1 + sign*sqrt(2^w q) when q_vanishes, else 0
};

// Exact analysis by enumeration; the count law and the linearity of Q on W
// are checked and violations throw std::logic_error.
DCurveAnalysis analyze_d(const Field& F, const DCurveParams& p);

// Least lambda with Tr(A L^9 + B L^3 + C L + D) = eps, if any.
std::optional<fe> search_lambda(const Field& F, fe A, fe B, fe C, fe D, int eps);

// (q-1)(|E1(k)| - 3 mu) with mu = |mu_3(k)|: the number of points with
// nonzero coordinates on x^3+y^3+z^3 = 0.
std::int64_t fermat_surface_count(const Field& F);

}  // namespace ss3
