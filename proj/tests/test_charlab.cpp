#include "apcheck/charlab.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace apcheck;

TEST_CASE("fundamental discriminants") {
    auto c = fundamental_discriminant(Rational(3, 5), 1);
    CHECK(c.discriminant() == 60);
    CHECK(c.conductor() == 60);

    auto cm1 = fundamental_discriminant(Rational(-1), 1);
    CHECK(cm1.discriminant() == -4);
    CHECK(cm1.conductor() == 4);

    auto sq = fundamental_discriminant(Rational(9, 4), 1);
    CHECK(sq.trivial());
    CHECK(sq.conductor() == 1);

    CHECK_THROWS(fundamental_discriminant(Rational(0), 1));
    CHECK_THROWS(fundamental_discriminant(Rational(3), 5));
    CHECK_THROWS(QuadChar::from_discriminant(Integer(6)));   // 2 mod 4
    CHECK_THROWS(QuadChar::from_discriminant(Integer(20)));  // 4*5, 5 = 1 mod 4
    CHECK_NOTHROW(QuadChar::from_discriminant(Integer(-20)));

    SECTION("enumeration lists exactly the valid shapes") {
        for (int64_t d : enumerate_fundamental_discriminants(400))
            CHECK(is_fundamental_discriminant(Integer(d)));
        auto list = enumerate_fundamental_discriminants(8);
        CHECK(list == std::vector<int64_t>{-3, -4, 5, -7, -8, 8});
    }
}

TEST_CASE("character evaluation matches the defining symbol") {
    std::mt19937_64 rng(17);
    const int omegas[4] = {1, -1, 2, -2};
    for (int trial = 0; trial < 100; ++trial) {
        int64_t a = (int64_t)(rng() % 601) - 300;
        int64_t b = 1 + (int64_t)(rng() % 300);
        if (a == 0) continue;
        Rational r(a, b);
        int omega = omegas[rng() % 4];
        QuadChar chi = fundamental_discriminant(r, omega);
        for_each_prime(3, 500, [&](uint64_t p) {
            if (numerator(r) % p == 0 || denominator(r) % p == 0) return;
            Rational wr = r * omega;
            CHECK(chi(Integer(p)) == kronecker(wr, Integer(p)));
        });
    }
}

TEST_CASE("constructed characters are primitive with squarefree odd conductor") {
    for (int64_t d : enumerate_fundamental_discriminants(300)) {
        QuadChar chi = QuadChar::from_discriminant(Integer(d));
        CHECK(is_primitive(chi));
        CHECK(is_squarefree(chi.odd_conductor()));
    }
}

TEST_CASE("case I and case II constructions") {
    auto mu1 = char_from_case_I(Rational(3, 5), 1);
    CHECK(mu1.conductor() == 60);
    auto mu2 = char_from_case_I(Rational(3, 5), 2);
    CHECK(mu2.discriminant() == -15);
    CHECK(mu2.conductor() == 15);
    CHECK_THROWS(char_from_case_I(Rational(1), 1));
    CHECK_THROWS(char_from_case_I(Rational(3, 5), 5));

    auto cii = char_from_case_II(Rational(7, 10), Rational(1, 10), 1);
    CHECK(cii.chi.discriminant() == 28);  // kernel 7
    CHECK_FALSE(cii.trivial_kernel);

    auto cm = char_from_case_II(Rational(1, 2), Rational(1, 2), 1);
    CHECK(cm.trivial_kernel);

    CHECK_THROWS(char_from_case_II(Rational(1, 2), Rational(1, 3), 1));   // off the conic
    CHECK_THROWS(char_from_case_II(Rational(-1, 2), Rational(1, 2), 1));  // sign

    SECTION("odd conductor divides the odd radical of ab(a-b)") {
        std::mt19937_64 rng(19);
        for (int trial = 0; trial < 200; ++trial) {
            int64_t a = 1 + (int64_t)(rng() % 500);
            int64_t b = 1 + (int64_t)(rng() % 500);
            if (a == b) continue;
            Rational lambda(b, a);
            if (lambda == 0 || lambda == 1) continue;
            Integer rad = rad_odd(Integer(a) * b * (a - b));
            for (int which = 1; which <= 4; ++which) {
                QuadChar chi = char_from_case_I(lambda, which);
                CHECK(rad % chi.odd_conductor() == 0);
            }
        }
    }
}

TEST_CASE("character sums") {
    QuadChar cm4 = QuadChar::from_discriminant(Integer(-4));
    CHECK(char_sum_unweighted(cm4, 0, 4) == 0);
    CHECK(char_sum_unweighted(cm4, 0, 3) == 1 + 0 - 1);

    SECTION("trivial character with Mangoldt weight is a psi difference") {
        const uint64_t k = 1000;
        double lhs = char_sum_mangoldt(QuadChar(), k / 2, k);
        CHECK(lhs == Catch::Approx(psi(k) - psi(k / 2)).epsilon(1e-12));
    }

    SECTION("nonprincipal characters vanish over a full period") {
        for (int64_t d : enumerate_fundamental_discriminants(60)) {
            QuadChar chi = QuadChar::from_discriminant(Integer(d));
            uint64_t n = (uint64_t)to_i64(chi.conductor());
            CHECK(char_sum_unweighted(chi, 0, n) == 0);
            CHECK(char_sum_unweighted(chi, 7, 7 + 3 * n) == 0);
        }
    }

    SECTION("prime-power tail is bounded by the psi-theta gap") {
        const uint64_t k = 100'000;
        QuadChar chi = QuadChar::from_discriminant(Integer(5));
        double full = char_sum_mangoldt(chi, k / 2, k);
        // prime-only sum
        CompensatedSum prime_only;
        for_each_prime(k / 2 + 1, k, [&](uint64_t p) {
            int v = chi.at((int64_t)p);
            if (v) prime_only.add(v * std::log((double)p));
        });
        double gap = (psi(k) - theta(k)) - (psi(k / 2) - theta(k / 2));
        CHECK(std::abs(full - prime_only.value()) <= gap + 1e-9);
    }

    CHECK_THROWS(char_sum_unweighted(cm4, 10, 10));
}

TEST_CASE("mu quadruple identity") {
    CHECK(mu_quadruple_identity(Rational(3, 5), 11));
    CHECK(mu_quadruple_identity(Rational(3, 5), 7));
    CHECK_THROWS(mu_quadruple_identity(Rational(3, 5), 5));

    std::mt19937_64 rng(23);
    auto primes = sieve_primes(10'000);
    for (int trial = 0; trial < 1000; ++trial) {
        int64_t a = (int64_t)(rng() % 601) - 300;
        int64_t b = 1 + (int64_t)(rng() % 300);
        if (a == 0) continue;
        Rational lam(a, b);
        if (lam == 0 || lam == 1) continue;
        uint64_t p = primes[1 + rng() % (primes.size() - 1)];
        if (numerator(lam) % p == 0 || denominator(lam) % p == 0) continue;
        CHECK(mu_quadruple_identity(lam, p));
    }
}

TEST_CASE("product decomposition") {
    auto d1 = char_product_decompose(QuadChar::from_discriminant(Integer(-4)),
                                     QuadChar::from_discriminant(Integer(8)));
    CHECK(d1.eta.discriminant() == -8);
    CHECK(d1.M2 == 1);
    CHECK(d1.identity_verified);

    auto d2 = char_product_decompose(QuadChar::from_discriminant(Integer(5)),
                                     QuadChar::from_discriminant(Integer(60)));
    CHECK(d2.eta.conductor() == 12);
    CHECK(d2.M2 == 5);

    // shared 2-power between lcm/M1 and M1: the coprime refinement drops it
    auto d3 = char_product_decompose(QuadChar::from_discriminant(Integer(8)),
                                     QuadChar::from_discriminant(Integer(24)));
    CHECK(d3.eta.conductor() == 12);
    CHECK(d3.M2 == 1);

    auto d4 = char_product_decompose(QuadChar::from_discriminant(Integer(8)),
                                     QuadChar::from_discriminant(Integer(-8)));
    CHECK(d4.eta.discriminant() == -4);
    CHECK(d4.M2 == 1);

    auto d5 = char_product_decompose(QuadChar::from_discriminant(Integer(-4)),
                                     QuadChar::from_discriminant(Integer(-20)));
    CHECK(d5.eta.discriminant() == 5);
    CHECK(d5.M2 == 4);

    CHECK_THROWS(char_product_decompose(QuadChar::from_discriminant(Integer(5)),
                                        QuadChar::from_discriminant(Integer(5))));

    SECTION("structure on random pairs") {
        std::mt19937_64 rng(29);
        auto discs = enumerate_fundamental_discriminants(150);
        for (int trial = 0; trial < 300; ++trial) {
            Integer a(discs[rng() % discs.size()]), b(discs[rng() % discs.size()]);
            if (a == b) continue;
            auto d = char_product_decompose(QuadChar::from_discriminant(a),
                                            QuadChar::from_discriminant(b));
            CHECK(gcd(d.eta.conductor(), d.M2) == 1);
            CHECK(gcd(abs(a), abs(b)) % d.M2 == 0);
            CHECK(d.identity_verified);
        }
    }
}

TEST_CASE("grouped modulus factorization") {
    const int64_t k = 10'000;  // window [7.50, 56.2]

    auto dd = char_product_decompose(QuadChar::from_kernel(Integer(11 * 13)),
                                     QuadChar::from_kernel(Integer(17 * 19)));
    auto mf = smooth_modulus_factorization(dd, k);
    CHECK(mf.s >= 1);
    Integer m1 = 1;
    for (size_t i = 0; i < mf.s; ++i) m1 *= mf.q[i];
    CHECK(m1 == dd.eta.conductor());
    CHECK(mf.q[0] % 2 == 1);
    CHECK(mf.r0 > 0);

    SECTION("small primes pack into the window") {
        auto dp = char_product_decompose(QuadChar::from_kernel(Integer(3 * 5 * 7 * 11 * 13 * 17)),
                                         QuadChar::from_kernel(Integer(23)));
        auto mp = smooth_modulus_factorization(dp, k);
        double win_lo = std::pow((double)k, 7.0 / 32.0), win_hi = std::pow((double)k, 7.0 / 16.0);
        for (size_t i = 0; i + 1 < mp.s; ++i) {
            double v = mp.q[i].convert_to<double>();
            CHECK(v >= win_lo);
            CHECK(v <= win_hi);
        }
    }

    SECTION("a prime above the window is rejected") {
        auto db = char_product_decompose(QuadChar::from_kernel(Integer(61 * 5)),
                                         QuadChar::from_kernel(Integer(7)));
        CHECK_THROWS(smooth_modulus_factorization(db, 100));  // 100^(7/16) = 7.5 < 61
    }

    SECTION("below the grouping threshold is rejected") {
        auto ds = char_product_decompose(QuadChar::from_discriminant(Integer(5)),
                                         QuadChar::from_discriminant(Integer(-3)));
        CHECK_THROWS(smooth_modulus_factorization(ds, 10'000'000));
    }
}

TEST_CASE("short-sum bound check") {
    QuadChar chi15 = QuadChar::from_kernel(Integer(15));
    double obs = (double)char_sum_unweighted(chi15, 0, 60);
    auto g1 = gr_bound_check(Integer(15), 1, Integer(60), obs);
    CHECK(g1.holds);

    // q = 105 with a mod-8 companion: admissible R starts at 8 * 105^(5/4)
    QuadChar chi105 = QuadChar::from_discriminant(Integer(105));
    QuadChar chi8 = QuadChar::from_discriminant(Integer(8));
    Integer R(2688);
    int64_t sum = 0;
    for (int64_t m = 1; m <= 2688; ++m) sum += chi105.at(m) * chi8.at(m);
    auto g2 = gr_bound_check(Integer(105), 2, R, (double)sum, {Integer(8)});
    CHECK(g2.holds);

    auto g3 = gr_bound_check(Integer(15), 1, Integer(60), 0.0);
    CHECK(g3.holds);

    CHECK_THROWS(gr_bound_check(Integer(15), 1, Integer(10), 0.0));   // interval too short
    CHECK_THROWS(gr_bound_check(Integer(12), 1, Integer(100), 0.0));  // not squarefree
}

TEST_CASE("Moebius unfolding") {
    CHECK(moebius_unfold_check(QuadChar::from_discriminant(Integer(-4)), 15, 100));
    CHECK(moebius_unfold_check(QuadChar::from_discriminant(Integer(5)), 6, 1000));
    CHECK(moebius_unfold_check(QuadChar::from_discriminant(Integer(-4)), 1, 50));
    CHECK_THROWS(moebius_unfold_check(QuadChar::from_discriminant(Integer(-4)), 6, 100));

    std::mt19937_64 rng(37);
    auto discs = enumerate_fundamental_discriminants(200);
    for (int trial = 0; trial < 300; ++trial) {
        QuadChar eta = QuadChar::from_discriminant(Integer(discs[rng() % discs.size()]));
        Integer m2 = 1 + rng() % 300;
        if (!is_squarefree(m2) || gcd(m2, eta.conductor()) != 1) continue;
        CHECK(moebius_unfold_check(eta, m2, 50 + rng() % 5000));
    }
}
