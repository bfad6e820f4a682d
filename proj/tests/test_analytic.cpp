#include "apcheck/analytic.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace apcheck;

TEST_CASE("Selberg inequality") {
    SECTION("single vector gives equality") {
        std::vector<double> x{1.0, 2.0, 3.0};
        auto r = selberg_check(x, {x});
        CHECK(r.lhs == Catch::Approx(r.rhs).epsilon(1e-12));
        CHECK(r.holds);
    }

    SECTION("orthonormal family reduces to Bessel") {
        std::vector<double> x{0.3, -0.7, 0.2};
        std::vector<std::vector<double>> ys{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        auto r = selberg_check(x, ys);
        double norm2 = 0.3 * 0.3 + 0.7 * 0.7 + 0.2 * 0.2;
        CHECK(r.lhs == Catch::Approx(norm2).epsilon(1e-12));
        CHECK(r.rhs == Catch::Approx(norm2).epsilon(1e-12));
        CHECK(r.holds);
    }

    SECTION("random instances always hold") {
        std::mt19937_64 rng(47);
        std::uniform_real_distribution<double> unit(-1, 1);
        for (int trial = 0; trial < 2000; ++trial) {
            size_t dim = 1 + rng() % 50, m = 1 + rng() % 20;
            std::vector<double> x(dim);
            for (auto& v : x) v = unit(rng);
            std::vector<std::vector<double>> ys(m, std::vector<double>(dim));
            for (auto& y : ys)
                for (auto& v : y) v = unit(rng);
            CHECK(selberg_check(x, ys).holds);
        }
    }

    CHECK_THROWS(selberg_check({1.0, 2.0}, {{1.0}}));
}

TEST_CASE("large sieve pipeline") {
    std::vector<QuadChar> chars;
    for (int64_t d : enumerate_fundamental_discriminants(50))
        chars.push_back(QuadChar::from_discriminant(Integer(d)));

    auto ls = large_sieve_pipeline(10'000, chars);
    CHECK(ls.norm_x2_capped);
    CHECK(ls.max_diag <= 10'000 / 2 + 1);
    CHECK(ls.max_offdiag < 10'000 / 10);  // far below the interval length
    CHECK(ls.sixty_eighth_below_varpi);
    CHECK_FALSE(ls.sixty_eighth_below_varpi_sq);
    CHECK(ls.dots.size() == chars.size());

    SECTION("duplicates are rejected") {
        auto dup = chars;
        dup.push_back(chars.front());
        CHECK_THROWS(large_sieve_pipeline(10'000, dup));
    }

    SECTION("single character gives a diagonal-only report") {
        auto one = large_sieve_pipeline(2'000, {chars.front()});
        CHECK(one.max_offdiag == 0);
        CHECK(one.max_diag > 0);
    }

    SECTION("adding a character never shrinks the max row sum") {
        double prev = 0;
        for (size_t n = 1; n <= chars.size(); ++n) {
            std::vector<QuadChar> head(chars.begin(), chars.begin() + n);
            auto r = large_sieve_pipeline(2'000, head);
            double row = r.max_row_avg * static_cast<double>(n);  // un-normalized row sum
            CHECK(row >= prev - 1e-9);
            prev = row;
        }
    }

    SECTION("exact pair sums match a direct loop") {
        auto t1 = chars[0].period_table(), t2 = chars[3].period_table();
        int64_t direct = 0;
        for (uint64_t m = 1001; m <= 9000; ++m)
            direct += int64_t(t1[m % t1.size()]) * t2[m % t2.size()];
        CHECK(detail::periodic_pair_sum(t1, t2, 1000, 9000) == direct);
    }
}

TEST_CASE("repulsion chain") {
    CHECK(repulsion_threshold() == 373743);

    auto over = repulsion_chain(373744, 4);
    CHECK(over.refutes_hypothesis);
    auto at = repulsion_chain(373743, 4);
    CHECK_FALSE(at.refutes_hypothesis);

    auto c = repulsion_chain(400000, 3);
    REQUIRE(c.exact_lower.size() == 3);
    CHECK(c.exact_lower[1] == Integer("160000000000"));
    CHECK(c.exact_lower[2] == pow(Integer(400000), 4));
    CHECK(c.recip_sum_bound < c.recip_geometric);
    CHECK(c.recip_geometric < c.paper_recip_bound);
    CHECK(static_cast<double>(c.paper_recip_bound) ==
          Catch::Approx(2.13 / std::log(400000.0)).epsilon(1e-12));

    SECTION("per-step lower bounds double in log scale") {
        auto chain = repulsion_chain(1000, 6);
        for (size_t j = 1; j < chain.log_lower.size(); ++j)
            CHECK(static_cast<double>(chain.log_lower[j]) ==
                  Catch::Approx(2.0 * static_cast<double>(chain.log_lower[j - 1])).epsilon(1e-15));
    }

    CHECK_THROWS(repulsion_chain(2, 3));
    CHECK_THROWS(repulsion_chain(100, 0));
}

TEST_CASE("conductor ratio scan") {
    auto r = condbound_scan(10'000);
    CHECK(r.argmin == 24);
    CHECK(r.argmin_p == 3);
    CHECK(r.min_ratio == Catch::Approx(3.0 / std::log(24.0)).epsilon(1e-12));
    CHECK(r.violations.empty());

    auto small = condbound_scan(23);
    CHECK(small.argmin == 8);
    CHECK(small.min_ratio > 0.94);
    CHECK(small.violations.empty());

    SECTION("row sink sees every scanned conductor") {
        int64_t rows = 0;
        auto res = condbound_scan(500, [&](int64_t, int64_t, double, double) { ++rows; });
        CHECK(rows == res.scanned);
    }

    SECTION("scanned values are exactly the fundamental conductors") {
        std::vector<int64_t> scanned;
        condbound_scan(200, [&](int64_t n, int64_t, double, double) { scanned.push_back(n); });
        std::vector<int64_t> expected;
        int64_t last = 0;
        for (int64_t d : enumerate_fundamental_discriminants(200)) {
            int64_t n = std::llabs(d);
            if (n != last) expected.push_back(n);  // +-8m share one conductor
            last = n;
        }
        CHECK(scanned == expected);
    }

    CHECK_THROWS(condbound_scan(2));
}

TEST_CASE("explicit theta checks") {
    auto rep = explicit_theta_checks(1'000'000, {1'000'000});
    CHECK(rep.schoenfeld_ok);
    CHECK(rep.first_violation == 0);
    CHECK(rep.max_theta_over_x < 1.000081);
    REQUIRE(rep.progression_samples.size() == 1);
    CHECK(rep.progression_samples[0].ratio == Catch::Approx(1.0).margin(0.05));
    REQUIRE(rep.euler_product_samples.size() == 1);
    CHECK_FALSE(rep.euler_product_samples[0].asserted);  // k below 1e8
    CHECK(rep.euler_product_samples[0].ratio > 0.0);
    CHECK_THROWS(explicit_theta_checks(10));
}

TEST_CASE("PNT residuals") {
    auto trivial = pnt_residual(QuadChar(), 100'000);
    CHECK(trivial.ratio < 0.01);
    CHECK(trivial.sum == Catch::Approx(psi(100'000)).epsilon(1e-12));

    auto cm4 = pnt_residual(QuadChar::from_discriminant(Integer(-4)), 1'000'000);
    CHECK(cm4.ratio < 0.01);

    auto c5 = pnt_residual(QuadChar::from_discriminant(Integer(5)), 1'000);
    CHECK(std::isfinite(c5.ratio));  // informational at small X

    CHECK_THROWS(pnt_residual(QuadChar(), 50));
}
