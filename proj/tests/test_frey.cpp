#include "apcheck/frey.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace apcheck;

TEST_CASE("progression enumeration") {
    auto s4 = enumerate_progressions(4);
    CHECK(s4.triple_count == 2);
    REQUIRE(s4.quad_count == 3);
    CHECK(s4.quad_count_closed_form == 3);
    CHECK((s4.quads[0].j1 == 0 && s4.quads[0].i1 == 1 && s4.quads[0].i2 == 1 && s4.quads[0].j2 == 2));
    CHECK((s4.quads[1].j1 == 0 && s4.quads[1].i1 == 1 && s4.quads[1].i2 == 2 && s4.quads[1].j2 == 3));
    CHECK((s4.quads[2].j1 == 1 && s4.quads[2].i1 == 2 && s4.quads[2].i2 == 2 && s4.quads[2].j2 == 3));
    CHECK(s4.triples[0].i == 0);
    CHECK(s4.triples[0].third() == 2);

    CHECK(enumerate_progressions(5).quad_count == 7);
    CHECK(enumerate_progressions(2).quad_count == 0);
    CHECK(enumerate_progressions(2).triple_count == 0);

    SECTION("closed form matches the enumeration for k up to 64") {
        for (int64_t k = 3; k <= 64; ++k) {
            Integer counted = 0;
            for_each_quad(k, [&](const Quad& q) {
                CHECK(q.i1 + q.i2 == q.j1 + q.j2);
                CHECK((0 <= q.j1 && q.j1 < q.i1 && q.i1 <= q.i2 && q.i2 < q.j2 && q.j2 <= k - 1));
                ++counted;
            });
            REQUIRE(counted == quad_count_formula(k));
        }
    }

    SECTION("triples stay inside the index range") {
        for_each_triple(12, [&](const APTriple& t) {
            CHECK(t.i < t.j);
            CHECK(t.third() <= 11);
        });
    }
}

TEST_CASE("term decomposition") {
    Solution sol{1, 2, 5, 2};
    auto terms = decompose_terms(sol);
    REQUIRE(terms.size() == 5);
    for (const auto& t : terms) {
        CHECK(t.split.smooth == t.term);  // 1,3,5,7,9 are all 5-smooth
        CHECK(t.split.rough == 1);
        CHECK(t.split.rough_is_power);
    }

    Solution cube{1331, 2, 5, 3};
    auto ct = decompose_terms(cube);
    CHECK(ct[0].split.smooth == 1);
    CHECK(ct[0].split.rough == 1331);
    CHECK(ct[0].split.rough_is_power);

    Solution degenerate{0, 1, 5, 2};
    CHECK_THROWS(decompose_terms(degenerate));
}

TEST_CASE("gcd lemma") {
    CHECK(gcd_lemma_check(Solution{1, 6, 10, 2}));
    CHECK(gcd_lemma_check(Solution{5, 7, 50, 2}));
    CHECK_THROWS(gcd_lemma_check(Solution{2, 4, 5, 2}));

    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        Integer n = 1 + rng() % 1'000'000;
        Integer d = 1 + rng() % 1'000'000;
        if (gcd(n, d) != 1) continue;
        CHECK(gcd_lemma_check(Solution{n, d, 3 + (int64_t)(rng() % 198), 2}));
    }
}

TEST_CASE("Frey family with signature (l, l, l)") {
    Solution s{1, 2, 5, 2};
    auto f = build_frey_A(s, APTriple{0, 1});
    CHECK(f.g == 1);
    CHECK(f.a == 1);
    CHECK(f.b == -6);
    CHECK(f.c == 5);
    CHECK(f.delta == 57600);

    Solution s2{1, 1, 5, 2};
    auto f2 = build_frey_A(s2, APTriple{0, 1});
    CHECK(f2.a == 1);
    CHECK(f2.b == -4);
    CHECK(f2.c == 3);
    CHECK(f2.delta == 9216);

    Solution z{-1, 1, 5, 2};
    CHECK_THROWS(build_frey_A(z, APTriple{0, 1}));  // n + d = 0
}

TEST_CASE("Frey family with signature (l, l, 2)") {
    Solution s{1, 1, 4, 2};
    auto f = build_frey_I(s, Quad{0, 1, 2, 3});
    CHECK(f.A == 4);
    CHECK(f.B == 6);
    CHECK(f.kappa == -2);
    CHECK(f.delta == 49152);

    Solution s2{3, 2, 3, 2};
    auto f2 = build_frey_I(s2, Quad{0, 1, 1, 2});
    CHECK(f2.A == 21);
    CHECK(f2.B == 25);
    CHECK(f2.kappa == -1);
    CHECK(f2.A - f2.B == f2.kappa * 4);

    Solution z{-2, 1, 4, 2};
    CHECK_THROWS(build_frey_I(z, Quad{0, 1, 2, 3}));  // a vanishing term
}

TEST_CASE("level bounds") {
    Solution s{1, 2, 5, 2};
    auto f = build_frey_A(s, APTriple{0, 1});
    auto lb = level_bounds(f, {Integer(1), Integer(3), Integer(5)}, 5);
    CHECK(lb.odd_radical == 15);
    CHECK(lb.two_exponent == 8);
    CHECK(is_squarefree(lb.odd_radical));

    Solution si{1, 1, 4, 2};
    auto fi = build_frey_I(si, Quad{0, 1, 2, 3});
    auto lbi = level_bounds(fi, 4);
    CHECK(lbi.divisor_bound == Integer(128) * 243 * 4 * 36);

    SECTION("caps are monotone in k") {
        auto c100 = level_bounds(f, {Integer(1), Integer(1), Integer(1)}, 100).log_cap;
        auto c101 = level_bounds(f, {Integer(1), Integer(1), Integer(1)}, 101).log_cap;
        CHECK(c100 < c101);
    }

    SECTION("odd radical of a repeated-factor product is squarefree") {
        auto lb2 = level_bounds(f, {Integer(9), Integer(15), Integer(12)}, 5);
        CHECK(lb2.odd_radical == 15);  // rad_odd(9*15*12) = 3*5
    }
}

TEST_CASE("exponent bound") {
    auto b1 = ell_bound(5, 6);
    CHECK(b1.exact);
    CHECK(b1.value == 3);

    auto b2 = ell_bound(2, 11);
    CHECK(b2.value == 5);

    CHECK(ell_bound(2, 1).value >= 1);
    CHECK_THROWS(ell_bound(1, 5));
    CHECK_THROWS(ell_bound(5, 0));

    SECTION("floor is exact against the power comparison") {
        std::mt19937_64 rng(41);
        for (int i = 0; i < 200; ++i) {
            Integer p = 2 + rng() % 1000;
            Integer m0 = 1 + rng() % 40;
            auto b = ell_bound(p, m0);
            REQUIRE(b.exact);
            long double exact = std::pow(std::sqrt((long double)p.convert_to<double>()) + 1.0L,
                                         (m0.convert_to<long double>() + 1.0L) / 6.0L);
            CHECK(b.value.convert_to<long double>() <= exact * (1 + 1e-15L));
            CHECK((b.value + 1).convert_to<long double>() > exact * (1 - 1e-15L));
        }
    }
}

TEST_CASE("Kraus H") {
    auto k6 = kraus_H(6);
    CHECK(k6.g == Catch::Approx(9.0).epsilon(1e-12));
    CHECK(k6.f == Catch::Approx(2.796).margin(5e-3));
    CHECK(k6.h == Catch::Approx(9.0).epsilon(1e-12));

    auto k1 = kraus_H(1);
    CHECK(k1.g == Catch::Approx(4.0).epsilon(1e-12));

    CHECK_THROWS(kraus_H(0));

    SECTION("H dominates G and log scale matches the direct value") {
        for (int64_t n = 1; n <= 200; ++n) {
            auto k = kraus_H(n);
            CHECK(k.h >= k.g);
            CHECK(k.h >= k.f);
            if (std::isfinite(k.h)) CHECK(std::log(k.h) == Catch::Approx((double)k.log_h).epsilon(1e-9));
        }
    }
}

TEST_CASE("contradiction threshold") {
    CHECK_FALSE(contradiction_threshold(2, std::log(1e20L), 1));
    CHECK(contradiction_threshold(1009, 0.0L, 1));  // cap = 1
    // the asymptotic regime: cap = 2^7 exp(1.000081 k) against exp(10^k)
    const int64_t k = 100'000'000;
    long double log_cap = 7.0L * std::log(2.0L) + 1.000081L * (long double)k;
    CHECK(contradiction_threshold(Integer(k), log_cap, k));
    CHECK_THROWS(contradiction_threshold(1, 0.0L, 1));
}

TEST_CASE("construction identities on random inputs") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        Integer n = 1 + rng() % 1'000'000;
        Integer d = 1 + rng() % 1'000'000;
        if (trial % 2) n = -n;
        if (gcd(n, d) != 1) continue;
        const int64_t k = 3 + (int64_t)(rng() % 18);
        bool zero = false;
        for (int64_t i = 0; i < k; ++i)
            if (n + i * d == 0) zero = true;
        if (zero) continue;
        Solution sol{n, d, k, 2};
        for_each_triple(k, [&](const APTriple& t) {
            auto f = build_frey_A(sol, t);
            CHECK(f.a + f.b + f.c == 0);
            CHECK(f.delta == 64 * pow(f.a * f.b * f.c, 2));
        });
        for_each_quad(k, [&](const Quad& q) {
            auto f = build_frey_I(sol, q);
            CHECK(f.A - f.B == f.kappa * d * d);
            CHECK(abs(f.kappa) < Integer(k) * k);
        });
    }
}
