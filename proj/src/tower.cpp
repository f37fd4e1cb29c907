#include "ss3/tower.hpp"

#include <stdexcept>

namespace ss3 {

namespace {

// Enumeration-least root of the base modulus inside ext, searching the
// 2^n-element subfield fixed by Frobenius^n.
fe least_root_of_modulus(const Field& base, const Field& ext) {
    int n = base.n();
    auto fixer = ext.linear_solver([&](fe v) { return ext.frob(v, n) ^ v; });
    const auto& kb = fixer.kernel();
    if (static_cast<int>(kb.size()) != n)
        throw std::logic_error("subfield fixed by Frobenius^n has wrong dimension");
    std::uint64_t m = base.modulus();
    bool found = false;
    fe best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        fe cand = 0;
        std::uint64_t mm = mask;
        while (mm) {
            int i = __builtin_ctzll(mm);
            mm &= mm - 1;
            cand ^= kb[static_cast<std::size_t>(i)];
        }
        // Horner evaluation of the base modulus at cand
        fe acc = 0;
        for (int d = n; d >= 0; --d) {
            acc = ext.mul(acc, cand);
            if ((m >> d) & 1) acc ^= 1;
        }
        if (acc == 0 && (!found || cand < best)) {
            found = true;
            best = cand;
        }
    }
    if (!found) throw std::logic_error("base modulus has no root in extension");
    return best;
}

std::vector<std::uint64_t> embedding_images(const Field& base, const Field& ext, fe root) {
    std::vector<std::uint64_t> img(static_cast<std::size_t>(base.n()));
    fe p = 1;
    for (int i = 0; i < base.n(); ++i) {
        img[static_cast<std::size_t>(i)] = p;
        p = ext.mul(p, root);
    }
    return img;
}

}  // namespace

Tower::Tower(int n) : Tower(Field::make(n)) {}

Tower::Tower(Field base)
    : k_(std::move(base)),
      k2_(Field::make(2 * k_.n())),
      k3_(Field::make(3 * k_.n())) {
    if (3 * k_.n() > Field::kMaxDegree)
        throw std::invalid_argument("tower requires 3n <= 63");
    build();
}

void Tower::build() {
    int n = k_.n();
    fe r2 = least_root_of_modulus(k_, k2_);
    fe r3 = least_root_of_modulus(k_, k3_);
    emb2_ = embedding_images(k_, k2_, r2);
    emb3_ = embedding_images(k_, k3_, r3);
    ret2_ = LinearSolver(emb2_);
    ret3_ = LinearSolver(emb3_);
    frob2_.resize(static_cast<std::size_t>(k2_.n()));
    for (int i = 0; i < k2_.n(); ++i)
        frob2_[static_cast<std::size_t>(i)] = k2_.frob(fe{1} << i, n);
    frob3_.resize(static_cast<std::size_t>(k3_.n()));
    for (int i = 0; i < k3_.n(); ++i)
        frob3_[static_cast<std::size_t>(i)] = k3_.frob(fe{1} << i, n);
}

fe Tower::rel_trace2(fe x) const {
    auto r = retract2(x ^ conj2(x));
    if (!r) throw std::logic_error("relative trace escaped the base field (broken embedding)");
    return *r;
}

fe Tower::rel_trace3(fe x) const {
    fe c = conj3(x);
    auto r = retract3(x ^ c ^ conj3(c));
    if (!r) throw std::logic_error("relative trace escaped the base field (broken embedding)");
    return *r;
}

namespace {

// Degree <= 2 polynomials over a field, reduced modulo the monic cubic
// Y^3 + f Y + g.  Enough machinery for trace-gcd root splitting.
struct Poly2 {
    fe c0 = 0, c1 = 0, c2 = 0;
    bool zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
    int deg() const { return c2 ? 2 : c1 ? 1 : c0 ? 0 : -1; }
};

Poly2 mulmod(const Field& F, const Poly2& a, const Poly2& b, fe f, fe g) {
    // full product has degree <= 4; reduce with Y^3 = fY + g
    fe d0 = F.mul(a.c0, b.c0);
    fe d1 = F.mul(a.c0, b.c1) ^ F.mul(a.c1, b.c0);
    fe d2 = F.mul(a.c0, b.c2) ^ F.mul(a.c1, b.c1) ^ F.mul(a.c2, b.c0);
    fe d3 = F.mul(a.c1, b.c2) ^ F.mul(a.c2, b.c1);
    fe d4 = F.mul(a.c2, b.c2);
    // Y^4 = f Y^2 + g Y
    d2 ^= F.mul(f, d4);
    d1 ^= F.mul(g, d4);
    d0 ^= F.mul(g, d3);
    d1 ^= F.mul(f, d3);
    return {d0, d1, d2};
}

// gcd of Y^3+fY+g with a degree <= 2 polynomial; returns the monic gcd.
Poly2 gcd_with_cubic(const Field& F, Poly2 b, fe f, fe g) {
    // first remainder: (Y^3+fY+g) mod b
    Poly2 a;
    if (b.deg() == 2) {
        // Y^3+fY+g = (Y/c2 + c1/c2^2 ...) * b + rem; do it by two subtraction steps
        fe inv2 = F.inv(b.c2);
        // subtract (Y * inv2) * b: removes Y^3
        fe r2 = F.mul(b.c1, inv2);  // coefficient left at Y^2 after step 1
        fe r1 = f ^ F.mul(b.c0, inv2);
        fe r0 = g;
        // subtract (r2/c2) * b
        fe t = F.mul(r2, inv2);
        r1 ^= F.mul(b.c1, t);
        r0 ^= F.mul(b.c0, t);
        a = b;
        b = {r0, r1, 0};
    } else if (b.deg() == 1) {
        fe root = F.mul(b.c0, F.inv(b.c1));  // b = c1 (Y + root/..); root of b is c0/c1
        fe val = F.mul(root, F.sqr(root)) ^ F.mul(f, root) ^ g;  // S(root)... sign-free in char 2
        a = b;
        b = {val, 0, 0};
    } else {
        return {1, 0, 0};  // constant b: coprime to the cubic
    }
    while (!b.zero()) {
        // a mod b with deg a <= 2
        Poly2 r = a;
        while (r.deg() >= b.deg() && !r.zero()) {
            int shift = r.deg() - b.deg();
            fe lead_r = r.deg() == 2 ? r.c2 : r.deg() == 1 ? r.c1 : r.c0;
            fe lead_b = b.deg() == 2 ? b.c2 : b.deg() == 1 ? b.c1 : b.c0;
            fe t = F.mul(lead_r, F.inv(lead_b));
            Poly2 sub{};
            if (shift == 0)
                sub = b;
            else if (shift == 1)
                sub = {0, b.c0, b.c1};
            else
                sub = {0, 0, b.c0};
            r.c0 ^= F.mul(t, sub.c0);
            r.c1 ^= F.mul(t, sub.c1);
            r.c2 ^= F.mul(t, sub.c2);
        }
        a = b;
        b = r;
    }
    // normalize monic
    fe lead = a.deg() == 2 ? a.c2 : a.deg() == 1 ? a.c1 : a.c0;
    fe li = F.inv(lead);
    return {F.mul(a.c0, li), F.mul(a.c1, li), F.mul(a.c2, li)};
}

}  // namespace

fe irreducible_cubic_root(const Tower& tw, fe f, fe g) {
    const Field& k3 = tw.k3();
    if (g == 0) throw std::invalid_argument("cubic must have nonzero constant term");
    fe F3 = tw.embed3(f), G3 = tw.embed3(g);
    // The cubic splits completely over k3.  Split it deterministically with
    // trace polynomials: for c in the F2-basis of k3, T_c(Y) = sum (cY)^(2^i)
    // takes values Tr(c theta) on the roots, and some c separates them.
    for (int ci = 0; ci < k3.n(); ++ci) {
        fe c = fe{1} << ci;
        Poly2 term{0, c, 0};  // cY
        Poly2 acc{};
        for (int i = 0; i < k3.n(); ++i) {
            acc.c0 ^= term.c0;
            acc.c1 ^= term.c1;
            acc.c2 ^= term.c2;
            term = mulmod(k3, term, term, F3, G3);
        }
        for (fe delta : {fe{0}, fe{1}}) {
            Poly2 h{acc.c0 ^ delta, acc.c1, acc.c2};
            if (h.zero()) continue;
            if (h.deg() == 0) continue;
            Poly2 d = gcd_with_cubic(k3, h, F3, G3);
            fe root = 0;
            if (d.deg() == 1) {
                root = d.c0;  // monic: Y + c0, root c0
            } else if (d.deg() == 2) {
                // the complementary factor is linear: Y^3+fY+g = d * (Y + r)
                // with constant term d.c0 * r = g
                root = k3.mul(G3, k3.inv(d.c0));
            } else {
                continue;
            }
            fe chk = k3.mul(root, k3.sqr(root)) ^ k3.mul(F3, root) ^ G3;
            if (chk != 0) throw std::logic_error("cubic root splitting produced a non-root");
            return root;
        }
    }
    throw std::logic_error("trace splitting failed to separate the cubic's roots");
}

}  // namespace ss3
