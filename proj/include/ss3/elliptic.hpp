#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "ss3/field.hpp"

// Supersingular elliptic curves over F_{2^n} in normal Artin-Schreier form
//   y^2 + y = a x^3 + b x^2 + c,   a != 0.
// classify() gives the isomorphism class straight from (a,b,c); the twist
// replaces c by c + c0 and negates the Frobenius trace.  All such curves
// have j-invariant 0; ordinary curves are out of scope.

namespace ss3 {

struct ASModel {
    fe a = 0, b = 0, c = 0;
    bool operator==(const ASModel&) const = default;
};

// Isomorphism-class labels.  E1/E1'/Ea/Ea'/E0 occur over fields of square
// order, E1/H/H' otherwise.  Ea stands for the non-cube classes (two cosets,
// one isogeny class).
enum class EllLabel : std::uint8_t { E1, E1t, Ea, Eat, E0, H, Ht };

std::string_view label_name(EllLabel l);           // "E1" "E1'" "Ea" "Ea'" "E0" "H" "H'"
// The label of the canonical twist.  Depends on the parity of n: over
// non-square fields E1 is its own twist, over square fields E0 is.
EllLabel twisted_label(EllLabel l, int n);
bool label_is_cube_family(EllLabel l);             // true away from Ea/Ea'

struct IsomClass {
    EllLabel label;
    fe coset = 0;  // a^((q-1)/3) for Ea/Ea' (a primitive cube root of 1), else 0
    bool operator==(const IsomClass&) const = default;
};

// The labels realized over a field of degree n (5 or 3 at isogeny level).
std::vector<EllLabel> labels_for(int n);

// Frobenius trace t of the class, with x^2+tx+q the Frobenius polynomial
// and |E(k)| = q+1+t.  Throws on a parity mismatch between label and n.
std::int64_t frobenius_trace_deg(int n, EllLabel l);
std::int64_t frobenius_trace(const Field& F, EllLabel l);

// Normal model from a Weierstrass supersingular model
// y^2 + a3 y = x^3 + a2 x^2 + a4 x + a6 (a3 != 0), with c reduced to {0,c0}.
ASModel normalize(const Field& F, fe a3, fe a2, fe a4, fe a6);

ASModel twist(const Field& F, const ASModel& E);

std::uint64_t naive_count(const Field& F, const ASModel& E);

// Classification with the cubic data of `a` resolved once, so sweeps over
// (b, c) pay only for trace evaluations and one linear solve per b.
class ClassifierA {
public:
    ClassifierA(const Field& F, fe a);

    struct BPart {
        int branch;   // 0: Ea-row (labels by trace bit), 1: E0, 2: E1-row, 3: H-row
        fe v = 0;     // witness of the change of variables, when used
    };
    BPart resolve_b(fe b) const;
    IsomClass with_c(const BPart& p, fe c) const;
    IsomClass classify(fe b, fe c) const { return with_c(resolve_b(b), c); }

    fe a() const noexcept { return a_; }
    bool a_is_cube() const noexcept { return cube_; }

private:
    const Field& F_;
    fe a_ = 0;
    bool cube_ = false;
    fe u_ = 0;        // least cube root when cube_
    fe u2inv_ = 0;    // u^-2
    fe coset_ = 0;    // a^((q-1)/3) when non-cube
    LinearSolver va_; // v -> a^2 v^4 + a v   (n even)
};

IsomClass classify(const Field& F, const ASModel& E);

}  // namespace ss3
