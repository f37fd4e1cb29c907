#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "ss3/elliptic.hpp"
#include "ss3/tower.hpp"

// Supersingular plane quartics  Y^4 + f Y^2 + g Y = X^3 + d X^2 + e  over k,
// g != 0, with one point at infinity.  Each nonzero root theta of
// R(Y) = Y^4+fY^2+gY gives an elliptic quotient with Artin-Schreier data
// a = (theta/g)^2, b = a d, c = a e; the three a's sum to zero and their
// Galois structure (3, 1, or 0 roots of R in k*) splits the quartics into
// split / quadratic / cubic type.

namespace ss3 {

struct Quartic {
    fe d = 0, e = 0, f = 0, g = 0;
    bool operator==(const Quartic&) const = default;
};

enum class QuarticKind : std::uint8_t { Split, Quadratic, Cubic };
std::string_view kind_name(QuarticKind k);

struct QuarticType {
    QuarticKind kind;
    std::array<fe, 3> roots_k{};  // Split: the three roots, ascending
    fe root_k = 0;                // Quadratic: the unique root in k*
    fe root_ext = 0;              // Quadratic: least conjugate root in k2;
                                  // Cubic: least conjugate root in k3
};

QuarticType type_of(const Tower& tw, const Quartic& c);

struct Quotient {
    ASModel model;
    int ext;  // 1, 2 or 3: field of definition k, k2, k3
};
std::vector<Quotient> elliptic_quotients(const Tower& tw, const Quartic& c);

// x^6 + a1 x^5 + a2 x^4 + a3 x^3 + q a2 x^2 + q^2 a1 x + q^3.
struct WeilPoly {
    std::int64_t a1 = 0, a2 = 0, a3 = 0;
    std::uint64_t q = 0;
    auto operator<=>(const WeilPoly&) const = default;
};

WeilPoly weil_of_split(const Field& k, std::array<std::int64_t, 3> traces);
WeilPoly weil_of_quadratic(const Field& k, std::int64_t s, std::int64_t t2);
WeilPoly weil_of_cubic(const Field& k, std::int64_t t3);
WeilPoly weil_negated(const WeilPoly& w);  // the polynomial f(-x)

// Classification route (type + quotient classes + trace tables).
WeilPoly weil_poly(const Tower& tw, const Quartic& c);
WeilPoly weil_poly_with_type(const Tower& tw, const Quartic& c, const QuarticType& t);

// Counting route: N_i = |C(F_{q^i})| for i = 1,2,3 by enumeration, then the
// coefficients via Newton's identities.  Independent of classify().
WeilPoly naive_weil_poly(const Tower& tw, const Quartic& c, int max_count_degree = 24);

// |C(F)| for the quartic with coefficients already living in F.
std::uint64_t quartic_count(const Field& F, fe d, fe e, fe f, fe g);

// Maximal/minimal at genus 3 over square fields: |C(k)| = q+1 +- 6 sqrt(q).
bool is_maximal(const Tower& tw, const Quartic& c);
bool is_minimal(const Tower& tw, const Quartic& c);

}  // namespace ss3
