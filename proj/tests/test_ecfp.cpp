#include "apcheck/ecfp.hpp"

#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

using namespace apcheck;

namespace {

std::vector<PointFp> all_points(const CurveOverFp& c) {
    std::vector<PointFp> pts{PointFp::infinity()};
    for (uint64_t x = 0; x < c.p(); ++x) {
        auto y = sqrt_mod(c.f(x), c.p());
        if (!y) continue;
        pts.push_back(PointFp::affine(x, *y));
        if (*y != 0) pts.push_back(PointFp::affine(x, c.p() - *y));
    }
    return pts;
}

// 2-Sylow shape (a <= b) from brute-force point orders
std::pair<unsigned, unsigned> sylow_oracle(const CurveOverFp& c) {
    auto pts = all_points(c);
    auto count_killed_by = [&](uint64_t n) {
        uint64_t cnt = 0;
        for (const auto& q : pts)
            if (c.mul(q, n).inf) ++cnt;
        return cnt;
    };
    // #E[2^j] = 2^(min(j,a) + min(j,b))
    unsigned a = 0, b = 0;
    uint64_t prev = 1;
    for (unsigned j = 1; j <= 8; ++j) {
        uint64_t now = count_killed_by(1ull << j);
        uint64_t growth = now / prev;
        if (growth == 4) ++a, ++b;
        else if (growth == 2) ++b;
        else break;
        prev = now;
    }
    return {a, b};
}

CurveOverFp random_factored_curve(std::mt19937_64& rng, uint64_t p) {
    while (true) {
        uint64_t e1 = rng() % p, e2 = rng() % p, e3 = rng() % p;
        if (e1 != e2 && e1 != e3 && e2 != e3) return CurveOverFp::from_roots(p, e1, e2, e3);
    }
}

}  // namespace

TEST_CASE("trace and supersingularity") {
    auto t7 = trace_ap(CurveOverFp::from_coeffs(7, 0, 7 - 1, 0));  // Y^2 = X^3 - X
    CHECK(t7.count == 8);
    CHECK(t7.ap == 0);
    CHECK(t7.supersingular);

    auto t5 = trace_ap(CurveOverFp::from_roots(5, 0, 1, 4));  // Y^2 = X(X-1)(X+1)
    CHECK(t5.count == 8);
    CHECK(t5.ap == -2);
    CHECK_FALSE(t5.supersingular);

    auto t13 = trace_ap(CurveOverFp::from_roots(13, 0, 1, 12));
    CHECK(t13.count == 8);
    CHECK(t13.ap == 6);

    CHECK_THROWS(CurveOverFp::from_roots(7, 0, 1, 1));          // repeated root
    CHECK_THROWS(CurveOverFp::from_coeffs(7, 0, 0, 0));         // singular
    CHECK_THROWS(CurveOverFp::from_roots(15, 0, 1, 2));         // not prime
}

TEST_CASE("quadratic twist flips the trace") {
    std::mt19937_64 rng(21);
    auto primes = sieve_primes(400);
    int done = 0;
    while (done < 1000) {
        uint64_t p = primes[2 + rng() % (primes.size() - 2)];
        auto c = random_factored_curve(rng, p);
        uint64_t w = 2;
        while (euler_symbol(w, p) != -1) ++w;
        const auto& e = c.roots();
        auto twist = CurveOverFp::from_roots(p, mulmod(w, e[0], p), mulmod(w, e[1], p), mulmod(w, e[2], p));
        CHECK(trace_ap(twist).ap == -trace_ap(c).ap);
        ++done;
    }
}

TEST_CASE("group law basics") {
    auto c = CurveOverFp::from_roots(13, 0, 1, 12);
    for (const auto& q : all_points(c)) {
        CHECK(c.on_curve(q));
        CHECK(c.add(q, c.negate(q)).inf);
        CHECK(c.add(q, PointFp::infinity()) == q);
    }
    // associativity on samples
    auto pts = all_points(c);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto a = pts[rng() % pts.size()], b = pts[rng() % pts.size()], d = pts[rng() % pts.size()];
        CHECK(c.add(c.add(a, b), d) == c.add(a, c.add(b, d)));
    }
}

TEST_CASE("descent map") {
    SECTION("images of the 2-torsion of F_{-1} for p = 5 (mod 8)") {
        for (uint64_t p : {5ull, 13ull, 29ull, 37ull, 53ull}) {
            auto c = CurveOverFp::from_roots(p, 0, 1, p - 1);
            CHECK(descent_theta(c, PointFp::affine(0, 0)).trivial());
            auto img1 = descent_theta(c, PointFp::affine(1, 0));
            CHECK(img1.cls == std::array<int, 3>{1, -1, -1});
            auto img2 = descent_theta(c, PointFp::affine(p - 1, 0));
            CHECK(img2.cls == std::array<int, 3>{1, -1, -1});
        }
    }

    SECTION("identity at infinity and error off the curve") {
        auto c = CurveOverFp::from_roots(13, 0, 1, 12);
        CHECK(descent_theta(c, PointFp::infinity()).trivial());
        CHECK_THROWS(descent_theta(c, PointFp::affine(2, 1)));
    }

    SECTION("homomorphism on random point pairs") {
        std::mt19937_64 rng(5);
        auto primes = sieve_primes(150);
        for (int trial = 0; trial < 300; ++trial) {
            uint64_t p = primes[3 + rng() % (primes.size() - 3)];
            auto c = random_factored_curve(rng, p);
            auto pts = all_points(c);
            auto a = pts[rng() % pts.size()], b = pts[rng() % pts.size()];
            auto lhs = descent_theta(c, c.add(a, b));
            auto rhs = descent_theta(c, a) * descent_theta(c, b);
            CHECK(lhs == rhs);
        }
    }

    SECTION("kernel is exactly 2E(F_p)") {
        std::mt19937_64 rng(6);
        auto primes = sieve_primes(200);
        for (int trial = 0; trial < 40; ++trial) {
            uint64_t p = primes[3 + rng() % (primes.size() - 3)];
            auto c = random_factored_curve(rng, p);
            auto pts = all_points(c);
            std::set<std::pair<uint64_t, uint64_t>> doubled;
            bool dbl_inf = false;
            for (const auto& q : pts) {
                auto d = c.dbl(q);
                if (d.inf) dbl_inf = true;
                else doubled.insert({d.x, d.y});
            }
            for (const auto& q : pts) {
                bool in_2e = q.inf ? dbl_inf : doubled.count({q.x, q.y}) > 0;
                CHECK(descent_theta(c, q).trivial() == in_2e);
            }
        }
    }

    SECTION("component product is always a square class") {
        std::mt19937_64 rng(7);
        auto c = random_factored_curve(rng, 97);
        for (const auto& q : all_points(c)) {
            auto img = descent_theta(c, q);
            CHECK(img.cls[0] * img.cls[1] * img.cls[2] == 1);
        }
    }
}

TEST_CASE("two-sylow shape") {
    auto s5 = two_sylow_shape(CurveOverFp::from_roots(5, 0, 1, 4));
    CHECK(s5.v == 3);

    auto s7 = two_sylow_shape(CurveOverFp::from_roots(7, 0, 1, 4));  // eta = 2
    CHECK(s7.has_z2x4);

    auto s13 = two_sylow_shape(CurveOverFp::from_roots(13, 0, 1, 12));
    CHECK(s13.v == 3);
    CHECK_FALSE(s13.has_z2x8);

    SECTION("agrees with the brute-force group structure") {
        std::mt19937_64 rng(9);
        auto primes = sieve_primes(60);
        for (int trial = 0; trial < 200; ++trial) {
            uint64_t p = primes[3 + rng() % (primes.size() - 3)];
            auto c = random_factored_curve(rng, p);
            auto shape = two_sylow_shape(c);
            auto [a, b] = sylow_oracle(c);
            REQUIRE(a >= 1);  // full 2-torsion
            CHECK(shape.has_z2x4 == (b >= 2));
            CHECK(shape.has_z2x8 == (b >= 3));
            CHECK(shape.v == a + b);
        }
    }
}

TEST_CASE("lambda orbit") {
    auto orbit2 = lambda_orbit(Rational(2));
    CHECK(orbit2 == std::vector<Rational>{-1, -1, Rational(1, 2), Rational(1, 2), 2, 2});

    auto orbit35 = lambda_orbit(Rational(3, 5));
    CHECK(orbit35.size() == 6);
    CHECK(std::set<Rational>(orbit35.begin(), orbit35.end()).size() == 6);
    for (const Rational& v : {Rational(5, 3), Rational(2, 5), Rational(-2, 3)})
        CHECK(std::count(orbit35.begin(), orbit35.end(), v) == 1);

    auto orbitm1 = lambda_orbit(Rational(-1));
    CHECK(orbitm1 == std::vector<Rational>{-1, -1, Rational(1, 2), Rational(1, 2), 2, 2});

    CHECK_THROWS(lambda_orbit(Rational(0)));
    CHECK_THROWS(lambda_orbit(Rational(1)));

    SECTION("orbit is closed under the orbit map") {
        std::mt19937_64 rng(10);
        for (int i = 0; i < 200; ++i) {
            int64_t a = (int64_t)(rng() % 401) - 200;
            int64_t b = 1 + (int64_t)(rng() % 200);
            Rational lam(a, b);
            if (lam == 0 || lam == 1) continue;
            auto orbit = lambda_orbit(lam);
            for (const auto& member : orbit) CHECK(lambda_orbit(member) == orbit);
        }
    }
}

TEST_CASE("j-invariant from a Frey triple") {
    CHECK(j_from_abc(1, -2, 1) == 1728);
    CHECK(j_from_abc(1, -6, 5) == Rational(256 * 29791, 900));
    CHECK(j_from_abc(2, -3, 1) == Rational(256 * 343, 36));
    CHECK_THROWS(j_from_abc(1, 2, 3));   // a+b+c != 0
    CHECK_THROWS(j_from_abc(0, 1, -1));  // degenerate
}

TEST_CASE("mod-4 lemma scan") {
    CHECK(verify_mod4_lemma(3));  // vacuous
    CHECK(verify_mod4_lemma(7));
    CHECK(verify_mod4_lemma(11));
    CHECK(verify_mod4_lemma(499));
    CHECK_THROWS(verify_mod4_lemma(13));

    SECTION("order divisible by 8 when lambda is a square, p = 3 (mod 4)") {
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 100; ++trial) {
            uint64_t p;
            do p = sieve_primes(300)[2 + rng() % 60]; while (p % 4 != 3);
            uint64_t eta = 2 + rng() % (p - 3);
            uint64_t e = mulmod(eta, eta, p);
            if (e == 0 || e == 1) continue;
            auto shape = two_sylow_shape(CurveOverFp::from_roots(p, 0, 1, e));
            CHECK(shape.order % 8 == 0);
        }
    }
}

TEST_CASE("F_{-1} two-power scan") {
    CHECK(verify_fminus1(5));
    CHECK(verify_fminus1(13));
    CHECK(verify_fminus1(29));
    CHECK_THROWS(verify_fminus1(7));
    CHECK_THROWS(verify_fminus1(17));  // 1 mod 8
}

TEST_CASE("order-4 point on the twisted Legendre curve") {
    CHECK(verify_order4_point(5, 3, 3));
    int checked = 0;
    for (uint64_t t = 1; t < 13; ++t) {
        uint64_t t2 = mulmod(t, t, 13);
        auto v = sqrt_mod(mulmod(submod(1, addmod(t2, t2, 13), 13), invmod(2, 13), 13), 13);
        if (!v || *v == 0) continue;
        CHECK(verify_order4_point(13, t, *v));
        ++checked;
    }
    CHECK(checked > 0);
    CHECK_THROWS(verify_order4_point(13, 1, 1));  // not on the conic
    CHECK_THROWS(verify_order4_point(7, 1, 1));   // p = 3 (mod 4)
}

TEST_CASE("supersingular nonresidue scan") {
    auto entries = verify_kro_scan(Integer(0), Integer(1), Integer(2), 3, 1000);
    int passes = 0;
    for (const auto& e : entries) {
        CHECK(e.status != KroStatus::fail);
        if (e.status == KroStatus::pass) ++passes;
    }
    CHECK(passes > 0);  // the CM curve is supersingular at every p = 3 (mod 4)

    auto entries2 = verify_kro_scan(Integer(0), Integer(1), Integer(-1), 3, 1000);
    for (const auto& e : entries2) CHECK(e.status != KroStatus::fail);

    auto empty = verify_kro_scan(Integer(0), Integer(1), Integer(2), 13, 18);
    CHECK(empty.empty());  // no p = 3 (mod 8) in range

    CHECK_THROWS(verify_kro_scan(Integer(0), Integer(1), Integer(1), 3, 100));
}
