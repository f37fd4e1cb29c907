#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ss3/field.hpp"

using namespace ss3;

namespace {

// Independent irreducibility oracle: trial division by all lower-degree
// polynomials.
bool irred_by_trial_division(std::uint64_t m, int n) {
    for (int d = 1; d <= n / 2; ++d)
        for (std::uint64_t f = (1ull << d); f < (2ull << d); ++f)
            if (gf2x::mod64(m, f) == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("least irreducible moduli match the trial-division oracle") {
    for (int n = 1; n <= 12; ++n) {
        std::uint64_t expect = 0;
        for (std::uint64_t low = 1; low < (1ull << n) && !expect; low += 2)
            if (irred_by_trial_division((1ull << n) | low, n)) expect = (1ull << n) | low;
        CHECK(Field::least_irreducible(n) == expect);
    }
    CHECK(Field::least_irreducible(1) == 0b11);    // x+1
    CHECK(Field::least_irreducible(3) == 0b1011);  // x^3+x+1
    CHECK(Field::least_irreducible(8) == 0x11b);
}

TEST_CASE("c0 is the least trace-1 element") {
    Field f1 = Field::make(1);
    CHECK(f1.c0() == 1);
    CHECK(f1.trace(1) == 1);
    Field f2 = Field::make(2);
    // least root of x^2+x+1 (the two roots are 2 and 3)
    CHECK(f2.c0() == 2);
    CHECK(f2.trace(f2.c0()) == 1);
    for (int n = 1; n <= 10; ++n) {
        Field f = Field::make(n);
        for (fe x = 0; x < f.c0(); ++x) CHECK(f.trace(x) == 0);
        CHECK(f.trace(f.c0()) == 1);
    }
}

TEST_CASE("F4 multiplication table") {
    Field f = Field::make(2);
    fe w = 2;  // the class of x
    CHECK(f.mul(w, w) == (w ^ 1));  // w^2 = w+1
    CHECK(f.mul(w, w ^ 1) == 1);    // w * w^2 = 1
    CHECK(f.trace(w) == 1);         // w + w^2 = 1
}

TEST_CASE("field axioms and involutions, random") {
    std::mt19937_64 rng(11);
    for (int n : {1, 2, 3, 5, 8, 13, 16, 24, 33, 48, 63}) {
        Field f = Field::make(n);
        auto rnd = [&] { return static_cast<fe>(rng() & (f.q() - 1)); };
        for (int i = 0; i < 300; ++i) {
            fe a = rnd(), b = rnd();
            CHECK(f.sqr(a ^ b) == (f.sqr(a) ^ f.sqr(b)));  // Frobenius additivity
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.sqr(f.sqrt(a)) == a);
            CHECK(f.sqrt(f.sqr(a)) == a);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
        }
        CHECK(f.sqrt(1) == 1);
        CHECK_THROWS_AS(f.inv(0), std::domain_error);
    }
}

TEST_CASE("trace kernel has q/2 elements; AS^2 kernel has index 4") {
    for (int n = 1; n <= 10; ++n) {
        Field f = Field::make(n);
        std::uint64_t zeros = 0;
        for (fe x = 0; x < f.q(); ++x)
            if (f.trace(x) == 0) ++zeros;
        CHECK(zeros == f.q() / 2);
        CHECK(f.trace(0) == 0);
        CHECK(f.trace(1) == n % 2);
        if (n % 2 == 0) {
            std::set<fe> image;
            for (fe x = 0; x < f.q(); ++x) image.insert(f.sqr(f.sqr(x)) ^ x);  // AS^2
            CHECK(image.size() == f.q() / 4);
            for (fe v : image) CHECK(f.trace_to_f4(v) == 0);
        }
    }
}

TEST_CASE("solve_as returns the least root and respects solvability") {
    for (int n = 1; n <= 9; ++n) {
        Field f = Field::make(n);
        for (fe z = 0; z < f.q(); ++z) {
            auto y = f.solve_as(z);
            if (f.trace(z) == 1) {
                CHECK(!y);
            } else {
                REQUIRE(y);
                CHECK((f.sqr(*y) ^ *y) == z);
                CHECK((*y & 1) == 0);  // the two roots differ by 1
            }
        }
        CHECK(f.solve_as(0) == fe{0});
    }
    Field f1 = Field::make(1);
    CHECK(!f1.solve_as(1));
}

TEST_CASE("solve_linearized against exhaustive search") {
    std::mt19937_64 rng(23);
    for (int n : {2, 3, 4, 6, 8}) {
        Field f = Field::make(n);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<std::pair<fe, std::uint32_t>> terms;
            int nt = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < nt; ++i)
                terms.push_back({static_cast<fe>(rng() & (f.q() - 1)),
                                 std::uint32_t{1} << (rng() % 4)});
            fe b = static_cast<fe>(rng() & (f.q() - 1));
            auto got = f.solve_linearized(terms, b);
            std::vector<fe> want;
            for (fe v = 0; v < f.q(); ++v) {
                fe acc = 0;
                for (auto [cf, e] : terms) {
                    fe p = v;
                    for (std::uint32_t t = e; t > 1; t >>= 1) p = f.sqr(p);
                    acc ^= f.mul(cf, p);
                }
                if (acc == b) want.push_back(v);
            }
            CHECK(got == want);
        }
    }
}

TEST_CASE("identity and AS-image edge cases of solve_linearized") {
    Field f = Field::make(4);
    std::vector<std::pair<fe, std::uint32_t>> ident{{1, 1}};
    for (fe b : {fe{0}, fe{5}, fe{9}})
        CHECK(f.solve_linearized(ident, b) == std::vector<fe>{b});
    std::vector<std::pair<fe, std::uint32_t>> as{{1, 2}, {1, 1}};
    fe b1 = f.c0();  // trace 1: not in the AS image
    CHECK(f.solve_linearized(as, b1).empty());
}

TEST_CASE("a^2 v^4 + a v is bijective exactly for non-cube a") {
    for (int n : {2, 4, 6}) {
        Field f = Field::make(n);
        for (fe a = 1; a < f.q(); ++a) {
            auto solver = f.linear_solver([&](fe v) {
                return f.mul(f.sqr(a), f.sqr(f.sqr(v))) ^ f.mul(a, v);
            });
            if (!f.is_cube(a))
                CHECK(solver.rank() == n);
            else
                CHECK(solver.rank() == n - 2);  // kernel {0, u^-1 mu_3}
        }
    }
}

TEST_CASE("cube structure") {
    Field f4 = Field::make(2);
    CHECK_FALSE(f4.is_cube(2));  // w
    CHECK_FALSE(f4.is_cube(3));
    CHECK(f4.is_cube(1));
    CHECK(f4.is_cube(0));
    CHECK(f4.cube_root(0) == fe{0});
    CHECK(f4.cube_root(1) == fe{1});
    CHECK(!f4.cube_root(2));
    Field f8 = Field::make(3);
    for (fe x = 1; x < 8; ++x) CHECK(f8.is_cube(x));

    for (int n : {2, 3, 4, 5, 6, 8, 12}) {
        Field f = Field::make(n);
        for (fe x = 0; x < std::min<std::uint64_t>(f.q(), 4096); ++x) {
            auto r = f.cube_root(x);
            if (!f.is_cube(x)) {
                CHECK(!r);
                continue;
            }
            REQUIRE(r);
            CHECK(f.mul(*r, f.sqr(*r)) == x);
            // least root: no smaller cube root exists
            if (n <= 8) {
                for (fe y = 0; y < *r; ++y) CHECK(f.mul(y, f.sqr(y)) != x);
            }
        }
    }
}

TEST_CASE("cube count is (q-1)/3 + 1 for even degree") {
    for (int n : {2, 4, 6}) {
        Field f = Field::make(n);
        std::uint64_t cubes = 0;
        for (fe x = 1; x < f.q(); ++x)
            if (f.is_cube(x)) ++cubes;
        CHECK(cubes == (f.q() - 1) / 3);
    }
}

TEST_CASE("duality: trace pairing against independent tuples is onto") {
    std::mt19937_64 rng(5);
    for (int n : {1, 2, 3, 4, 5, 6}) {
        Field f = Field::make(n);
        for (int trial = 0; trial < 60; ++trial) {
            int r = 1 + static_cast<int>(rng() % 3);
            if (r > n) continue;
            std::vector<fe> us;
            // random F2-independent tuple
            while (static_cast<int>(us.size()) < r) {
                fe u = static_cast<fe>(rng() & (f.q() - 1));
                std::vector<std::uint64_t> test(us);
                test.push_back(u);
                LinearSolver s(test);
                if (s.rank() == static_cast<int>(test.size())) us = test;
            }
            std::set<std::uint32_t> hit;
            for (fe x = 0; x < f.q(); ++x) {
                std::uint32_t v = 0;
                for (int i = 0; i < r; ++i)
                    v |= static_cast<std::uint32_t>(
                            f.trace(f.mul(x, us[static_cast<std::size_t>(i)])))
                         << i;
                hit.insert(v);
            }
            CHECK(hit.size() == (1u << r));
        }
    }
}

TEST_CASE("hex serialization round-trip") {
    CHECK(Field::to_hex(0) == "0");
    CHECK(Field::to_hex(0x1a) == "1a");
    CHECK(Field::parse_hex("1a") == fe{0x1a});
    CHECK(Field::parse_hex("0") == fe{0});
    CHECK(!Field::parse_hex(""));
    CHECK(!Field::parse_hex("xyz"));
    CHECK(Field::parse_hex("FF") == fe{255});
}

TEST_CASE("modulus overrides") {
    Field::set_modulus_override(3, 0b1101);  // x^3+x^2+1, the other cubic
    Field f = Field::make(3);
    CHECK(f.modulus() == 0b1101);
    Field::clear_modulus_overrides();
    CHECK(Field::make(3).modulus() == 0b1011);
    CHECK_THROWS_AS(Field::set_modulus_override(3, 0b1111), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(64), std::invalid_argument);
}
