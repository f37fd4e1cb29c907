#include <stdexcept>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "ss3/elliptic.hpp"

using namespace ss3;

TEST_CASE("normalize eliminates the linear term and reduces c") {
    Field f8 = Field::make(3);
    CHECK(normalize(f8, 1, 0, 0, 0) == ASModel{1, 0, 0});
    CHECK(normalize(f8, 1, 1, 0, 0) == ASModel{1, 1, 0});
    for (fe a3 = 1; a3 < 8; ++a3) {
        ASModel m = normalize(f8, a3, 0, 0, 0);
        CHECK(m == ASModel{f8.inv(f8.sqr(a3)), 0, 0});
    }
    CHECK_THROWS_AS(normalize(f8, 0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("normalization preserves the point count") {
    std::mt19937_64 rng(31);
    for (int n : {2, 3, 4}) {
        Field f = Field::make(n);
        for (int i = 0; i < 40; ++i) {
            fe a3 = 1 + static_cast<fe>(rng() % (f.q() - 1));
            fe a2 = static_cast<fe>(rng() & (f.q() - 1));
            fe a4 = static_cast<fe>(rng() & (f.q() - 1));
            fe a6 = static_cast<fe>(rng() & (f.q() - 1));
            // count the Weierstrass model y^2 + a3 y = x^3 + a2 x^2 + a4 x + a6
            std::uint64_t cnt = 1;
            for (fe x = 0; x < f.q(); ++x)
                for (fe y = 0; y < f.q(); ++y) {
                    fe lhs = f.sqr(y) ^ f.mul(a3, y);
                    fe rhs = f.mul(f.sqr(x), x ^ a2) ^ f.mul(a4, x) ^ a6;
                    if (lhs == rhs) ++cnt;
                }
            CHECK(naive_count(f, normalize(f, a3, a2, a4, a6)) == cnt);
        }
    }
}

TEST_CASE("pinned classifications over F2") {
    Field f2 = Field::make(1);
    CHECK(classify(f2, {1, 0, 0}).label == EllLabel::E1);
    CHECK(classify(f2, {1, 1, 0}).label == EllLabel::H);
    CHECK(classify(f2, {1, 1, 1}).label == EllLabel::Ht);
    CHECK(frobenius_trace(f2, EllLabel::H) == 2);
    CHECK(naive_count(f2, {1, 1, 0}) == 5);
    CHECK(naive_count(f2, {1, 0, 0}) == 3);
}

TEST_CASE("pinned classifications over F4") {
    Field f4 = Field::make(2);
    fe w = 2;  // non-cube
    IsomClass c = classify(f4, {w, 0, 0});
    CHECK(c.label == EllLabel::Ea);
    CHECK(c.coset == f4.pow(w, 1));  // (q-1)/3 = 1
    CHECK(frobenius_trace(f4, EllLabel::E1) == 4);
    CHECK(naive_count(f4, {1, 0, 0}) == 9);
    CHECK(frobenius_trace(f4, EllLabel::E0) == 0);
    // E0's defining model: y^2+y = c0^-3 x^3 + x^2
    fe a0 = f4.inv(f4.mul(f4.c0(), f4.sqr(f4.c0())));
    CHECK(classify(f4, {a0, 1, 0}).label == EllLabel::E0);
    CHECK(naive_count(f4, {a0, 1, 0}) == 5);
}

TEST_CASE("trace table against counts, exhaustive q <= 16") {
    for (int n = 1; n <= 4; ++n) {
        Field f = Field::make(n);
        std::set<std::pair<EllLabel, fe>> classes;
        for (fe a = 1; a < f.q(); ++a) {
            ClassifierA cls(f, a);
            for (fe b = 0; b < f.q(); ++b) {
                auto bp = cls.resolve_b(b);
                for (fe c = 0; c < f.q(); ++c) {
                    IsomClass ic = cls.with_c(bp, c);
                    classes.insert({ic.label, ic.coset});
                    std::int64_t t = frobenius_trace(f, ic.label);
                    CHECK(static_cast<std::int64_t>(naive_count(f, {a, b, c})) ==
                          static_cast<std::int64_t>(f.q()) + 1 + t);
                }
            }
        }
        // seven isomorphism classes for even n (coset splits Ea/Ea'), three for odd
        CHECK(classes.size() == (n % 2 == 0 ? 7 : 3));
    }
}

TEST_CASE("twist flips the label and negates the trace") {
    std::mt19937_64 rng(37);
    for (int n = 1; n <= 6; ++n) {
        Field f = Field::make(n);
        for (int i = 0; i < 200; ++i) {
            fe a = 1 + static_cast<fe>(rng() % (f.q() - 1));
            fe b = static_cast<fe>(rng() & (f.q() - 1));
            fe c = static_cast<fe>(rng() & (f.q() - 1));
            ASModel m{a, b, c};
            IsomClass base = classify(f, m);
            ASModel tw = twist(f, m);
            IsomClass twc = classify(f, tw);
            CHECK(twc.label == twisted_label(base.label, n));
            CHECK(frobenius_trace(f, twc.label) == -frobenius_trace(f, base.label));  // trace negation
            CHECK(twist(f, tw) == m);
        }
    }
}

TEST_CASE("classification is invariant under admissible changes of variables") {
    // (x,y) -> (u(x+v), y + a v^2 x + t) maps normal models to normal models:
    // a' = u^-3 a, b' = u^-2 (b + a^2 v^4 + a v), c' = c + a^2 v^6 + b v^2 + t^2 + t
    std::mt19937_64 rng(41);
    for (int n = 1; n <= 5; ++n) {
        Field f = Field::make(n);
        for (int i = 0; i < 300; ++i) {
            fe a = 1 + static_cast<fe>(rng() % (f.q() - 1));
            fe b = static_cast<fe>(rng() & (f.q() - 1));
            fe c = static_cast<fe>(rng() & (f.q() - 1));
            fe u = 1 + static_cast<fe>(rng() % (f.q() - 1));
            fe v = static_cast<fe>(rng() & (f.q() - 1));
            fe t = static_cast<fe>(rng() & (f.q() - 1));
            fe ui = f.inv(u);
            fe a2 = f.mul(f.mul(ui, f.sqr(ui)), a);
            fe b2 = f.mul(f.sqr(ui), b ^ f.mul(f.sqr(a), f.sqr(f.sqr(v))) ^ f.mul(a, v));
            fe c2 = c ^ f.mul(f.sqr(a), f.mul(f.sqr(v), f.sqr(f.sqr(v)))) ^
                    f.mul(b, f.sqr(v)) ^ f.sqr(t) ^ t;
            IsomClass lhs = classify(f, {a, b, c});
            IsomClass rhs = classify(f, {a2, b2, c2});
            CHECK(lhs.label == rhs.label);
            CHECK(lhs.coset == rhs.coset);
        }
    }
}

TEST_CASE("frobenius_trace parity guards") {
    Field f4 = Field::make(2);
    Field f8 = Field::make(3);
    CHECK_THROWS_AS(frobenius_trace(f4, EllLabel::H), std::invalid_argument);
    CHECK_THROWS_AS(frobenius_trace(f8, EllLabel::E0), std::invalid_argument);
    CHECK(frobenius_trace(f8, EllLabel::H) == -4);
    Field f16 = Field::make(4);
    CHECK(frobenius_trace(f16, EllLabel::E1) == -8);
    CHECK(naive_count(f16, {1, 0, 0}) == 9);
}
