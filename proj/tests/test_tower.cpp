#include <random>
#include <stdexcept>

#include "doctest.h"
#include "ss3/tower.hpp"

using namespace ss3;

TEST_CASE("embeddings are ring homomorphisms fixing 1") {
    std::mt19937_64 rng(17);
    for (int n : {1, 2, 3, 4, 5, 6, 8, 10}) {
        Tower tw(n);
        const Field& k = tw.k();
        CHECK(tw.embed2(1) == 1);
        CHECK(tw.embed3(1) == 1);
        CHECK(tw.embed2(0) == 0);
        for (int i = 0; i < 200; ++i) {
            fe a = static_cast<fe>(rng() & (k.q() - 1));
            fe b = static_cast<fe>(rng() & (k.q() - 1));
            CHECK(tw.embed2(k.mul(a, b)) == tw.k2().mul(tw.embed2(a), tw.embed2(b)));
            CHECK(tw.embed3(k.mul(a, b)) == tw.k3().mul(tw.embed3(a), tw.embed3(b)));
            CHECK(tw.embed2(a ^ b) == (tw.embed2(a) ^ tw.embed2(b)));
        }
    }
}

TEST_CASE("embed then retract is the identity on every element") {
    for (int n : {1, 2, 3, 4, 5, 8, 10}) {  // covers q <= 1024
        Tower tw(n);
        for (fe a = 0; a < tw.k().q(); ++a) {
            CHECK(tw.retract2(tw.embed2(a)) == a);
            CHECK(tw.retract3(tw.embed3(a)) == a);
        }
    }
}

TEST_CASE("retract rejects elements outside the base field") {
    Tower tw(2);
    int outside = 0;
    for (fe y = 0; y < tw.k2().q(); ++y)
        if (!tw.retract2(y)) ++outside;
    CHECK(outside == 16 - 4);
}

TEST_CASE("relative traces") {
    std::mt19937_64 rng(29);
    for (int n : {1, 2, 3, 4, 6}) {
        Tower tw(n);
        const Field& k = tw.k();
        for (fe a = 0; a < k.q(); ++a) {
            // embedded elements are Galois-fixed: trace is m*a = (m mod 2)*a
            CHECK(tw.rel_trace2(tw.embed2(a)) == 0);
            CHECK(tw.rel_trace3(tw.embed3(a)) == a);
        }
        for (int i = 0; i < 100; ++i) {
            fe x = static_cast<fe>(rng() & (tw.k2().q() - 1));
            fe tr = tw.rel_trace2(x);  // would throw if it escaped k
            CHECK(tw.rel_trace2(tw.conj2(x)) == tr);
            fe y = static_cast<fe>(rng() & (tw.k3().q() - 1));
            fe tr3 = tw.rel_trace3(y);
            CHECK(tw.rel_trace3(tw.conj3(y)) == tr3);
        }
    }
}

TEST_CASE("trace of a root of x^2+x+c0 is 1") {
    for (int n : {1, 2, 3, 4, 5}) {
        Tower tw(n);
        auto z = tw.k2().solve_as(tw.embed2(tw.k().c0()));
        REQUIRE(z);  // Tr_{k2}(embed(c0)) = 0, so solvable in k2
        CHECK(tw.rel_trace2(*z) == 1);
    }
}

TEST_CASE("q=2: relative trace of a root of x^3+x+1 vanishes") {
    Tower tw(1);
    fe theta = irreducible_cubic_root(tw, 1, 1);
    CHECK(tw.rel_trace3(theta) == 0);
    // theta + theta^2 + theta^4 = 0 computed directly
    const Field& k3 = tw.k3();
    CHECK((theta ^ k3.sqr(theta) ^ k3.sqr(k3.sqr(theta))) == 0);
}

TEST_CASE("irreducible cubic roots across parities") {
    for (int n : {1, 2, 3, 4, 5}) {
        Tower tw(n);
        const Field& k = tw.k();
        const Field& k3 = tw.k3();
        int tested = 0;
        for (fe f = 0; f < k.q() && tested < 8; ++f) {
            for (fe g = 1; g < k.q() && tested < 8; ++g) {
                bool has_root = false;
                for (fe y = 0; y < k.q(); ++y)
                    if ((k.mul(k.sqr(y), y) ^ k.mul(f, y) ^ g) == 0) has_root = true;
                if (has_root) continue;
                fe th = irreducible_cubic_root(tw, f, g);
                fe chk = k3.mul(k3.sqr(th), th) ^ k3.mul(tw.embed3(f), th) ^ tw.embed3(g);
                CHECK(chk == 0);
                CHECK(!tw.retract3(th));  // genuinely outside k
                ++tested;
            }
        }
        CHECK(tested > 0);
    }
}

TEST_CASE("tower rejects degrees beyond the element width") {
    CHECK_THROWS_AS(Tower(22), std::invalid_argument);
}
