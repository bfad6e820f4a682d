#pragma once

// The verification battery. Each criterion is an independent check with
// pinned tolerances; `full` runs the whole suite at its stated scale,
// `quick` at reduced ranges plus per-module smoke checks so that every
// module is exercised.

#include "apcheck/analytic.hpp"
#include "apcheck/charlab.hpp"
#include "apcheck/chebyshev.hpp"
#include "apcheck/ecfp.hpp"
#include "apcheck/frey.hpp"
#include "apcheck/identities.hpp"
#include "apcheck/parallel.hpp"
#include "apcheck/report.hpp"
#include "apcheck/sieve.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace apcheck {

struct VerifyProfile {
    std::string name;
    int64_t cardinality_k_max = 64;
    uint64_t mod4_p_max = 2003;
    uint64_t fminus1_p_max = 50'000;
    int order4_trials = 10'000;
    uint64_t order4_p_max = 10'000;
    int64_t condbound_limit = 10'000'000;
    uint64_t theta_limit = 100'000'000;
    int64_t descent_limit = 10'000;
    int frey_pairs = 1'000;
    int64_t frey_k = 40;
    int mu_trials = 1'000;
    int moebius_trials = 1'000;
    int selberg_trials = 100'000;
    int gr_instances = 100;
    int64_t gr_q_max = 100'000;
    uint64_t pnt_x = 10'000'000;
    int64_t pnt_cond_max = 50;
    bool module_smokes = false;
    uint64_t seed = 0x5eed5eedULL;

    static VerifyProfile full() { return VerifyProfile{"full"}; }

    static VerifyProfile quick() {
        VerifyProfile p{"quick"};
        p.cardinality_k_max = 40;
        p.mod4_p_max = 499;
        p.fminus1_p_max = 5'000;
        p.order4_trials = 500;
        p.order4_p_max = 2'000;
        p.condbound_limit = 100'000;
        p.theta_limit = 1'000'000;
        p.descent_limit = 1'000;
        p.frey_pairs = 50;
        p.frey_k = 20;
        p.mu_trials = 100;
        p.moebius_trials = 100;
        p.selberg_trials = 5'000;
        p.gr_instances = 15;
        p.gr_q_max = 5'000;
        p.pnt_x = 1'000'000;
        p.module_smokes = true;
        return p;
    }
};

namespace verify_detail {

inline CheckRecord make(const std::string& name, bool pass, Json inputs, Json observed, Json expected,
                        double ms) {
    CheckRecord r;
    r.name = name;
    r.inputs = std::move(inputs);
    r.observed = std::move(observed);
    r.expected = std::move(expected);
    r.status = pass ? CheckStatus::pass : CheckStatus::fail;
    r.wall_ms = ms;
    return r;
}

inline std::vector<uint64_t> primes_in_class(uint64_t limit, uint64_t residue, uint64_t modulus,
                                             uint64_t lo = 2) {
    std::vector<uint64_t> out;
    for_each_prime(lo, limit, [&](uint64_t p) {
        if (p % modulus == residue) out.push_back(p);
    });
    return out;
}

}  // namespace verify_detail

// 1. enumerated #I equals k^3/12 - k^2/8 - k/12 + delta/8 for k in [3, kmax]
inline CheckRecord criterion_cardinality(const VerifyProfile& prof) {
    WallTimer timer;
    int64_t mismatches = 0;
    for (int64_t k = 3; k <= prof.cardinality_k_max; ++k) {
        Integer counted = 0;
        for_each_quad(k, [&](const Quad&) { ++counted; });
        if (counted != quad_count_formula(k)) ++mismatches;
    }
    return verify_detail::make("01-cardinality-formula", mismatches == 0,
                               {{"k_range", {3, prof.cardinality_k_max}}}, {{"mismatches", mismatches}},
                               {{"mismatches", 0}}, timer.ms());
}

// 2. Z/2 x Z/4 subgroup for every eta, every prime p = 3 (mod 4) up to the cap
inline CheckRecord criterion_mod4(const VerifyProfile& prof) {
    WallTimer timer;
    auto primes = verify_detail::primes_in_class(prof.mod4_p_max, 3, 4);
    std::vector<uint64_t> failures = parallel_chunks<std::vector<uint64_t>>(
        0, static_cast<int64_t>(primes.size()), 8, {},
        [&](int64_t lo, int64_t hi) {
            std::vector<uint64_t> bad;
            for (int64_t i = lo; i < hi; ++i)
                if (!verify_mod4_lemma(primes[static_cast<size_t>(i)]))
                    bad.push_back(primes[static_cast<size_t>(i)]);
            return bad;
        },
        [](std::vector<uint64_t>& acc, const std::vector<uint64_t>& part) {
            acc.insert(acc.end(), part.begin(), part.end());
        });
    return verify_detail::make("02-mod4-two-by-four", failures.empty(),
                               {{"p_max", prof.mod4_p_max}, {"primes", primes.size()}},
                               {{"failures", failures}}, {{"failures", Json::array()}}, timer.ms());
}

// 3. 2^3 exactly divides #F_{-1}(F_p) for p = 5 (mod 8)
inline CheckRecord criterion_fminus1(const VerifyProfile& prof) {
    WallTimer timer;
    auto primes = verify_detail::primes_in_class(prof.fminus1_p_max, 5, 8);
    std::vector<uint64_t> failures = parallel_chunks<std::vector<uint64_t>>(
        0, static_cast<int64_t>(primes.size()), 16, {},
        [&](int64_t lo, int64_t hi) {
            std::vector<uint64_t> bad;
            for (int64_t i = lo; i < hi; ++i)
                if (!verify_fminus1(primes[static_cast<size_t>(i)]))
                    bad.push_back(primes[static_cast<size_t>(i)]);
            return bad;
        },
        [](std::vector<uint64_t>& acc, const std::vector<uint64_t>& part) {
            acc.insert(acc.end(), part.begin(), part.end());
        });
    return verify_detail::make("03-fminus1-eight-exactly", failures.empty(),
                               {{"p_max", prof.fminus1_p_max}, {"primes", primes.size()}},
                               {{"failures", failures}}, {{"failures", Json::array()}}, timer.ms());
}

// 4. random conic points: the explicit point doubles to (2 lambda, 0) for
// both square roots of -1
inline CheckRecord criterion_order4(const VerifyProfile& prof) {
    WallTimer timer;
    auto primes = verify_detail::primes_in_class(prof.order4_p_max, 1, 4, 5);
    std::mt19937_64 rng(prof.seed ^ 0x04);
    int64_t failures = 0, done = 0;
    while (done < prof.order4_trials) {
        uint64_t p = primes[rng() % primes.size()];
        uint64_t t = 1 + rng() % (p - 1);
        uint64_t t2 = mulmod(t, t, p);
        uint64_t rhs = submod(1, addmod(t2, t2, p), p);
        uint64_t half = mulmod(rhs, invmod(2, p), p);
        auto v = sqrt_mod(half, p);
        if (!v || *v == 0) continue;
        ++done;
        if (!verify_order4_point(p, t, *v)) ++failures;
    }
    return verify_detail::make("04-order4-point", failures == 0,
                               {{"trials", prof.order4_trials}, {"p_max", prof.order4_p_max}},
                               {{"failures", failures}}, {{"failures", 0}}, timer.ms());
}

// 5. min P(N)/log N over conductors N <= limit sits at N = 24
inline CheckRecord criterion_condbound(const VerifyProfile& prof) {
    WallTimer timer;
    auto res = condbound_scan(prof.condbound_limit);
    const double expect = 3.0 / std::log(24.0);
    bool pass = res.argmin == 24 && std::abs(res.min_ratio - expect) < 1e-5 && res.violations.empty();
    return verify_detail::make(
        "05-condbound-scan", pass, {{"limit", prof.condbound_limit}},
        {{"argmin", res.argmin}, {"min_ratio", res.min_ratio}, {"violations", res.violations.size()}},
        {{"argmin", 24}, {"min_ratio", expect}, {"violations", 0}}, timer.ms());
}

// 6. theta(x) < 1.000081 x for all x up to the limit
inline CheckRecord criterion_theta(const VerifyProfile& prof) {
    WallTimer timer;
    auto rep = explicit_theta_checks(prof.theta_limit);
    return verify_detail::make("06-schoenfeld-theta", rep.schoenfeld_ok, {{"limit", prof.theta_limit}},
                               {{"first_violation", rep.first_violation},
                                {"max_theta_over_x", rep.max_theta_over_x},
                                {"argmax", rep.argmax}},
                               {{"first_violation", 0}}, timer.ms());
}

// 7. T^4 + V^4 = 2U^2 with T, V odd coprime has only (1,1,1)
inline CheckRecord criterion_descent(const VerifyProfile& prof) {
    WallTimer timer;
    auto sols = quartic_descent_search(prof.descent_limit);
    bool pass = sols.size() == 1 && sols[0].t == 1 && sols[0].v == 1 && sols[0].u == 1;
    Json found = Json::array();
    for (const auto& s : sols) found.push_back({s.t, s.v, s.u});
    return verify_detail::make("07-quartic-descent", pass, {{"limit", prof.descent_limit}},
                               {{"solutions", found}}, {{"solutions", {{1, 1, 1}}}}, timer.ms());
}

// 8. the repulsion chain inverts to N1 <= 373743, integer exact
inline CheckRecord criterion_repulsion(const VerifyProfile&) {
    WallTimer timer;
    int64_t threshold = repulsion_threshold();
    bool boundary = repulsion_chain(Integer(373744), 4).refutes_hypothesis &&
                    !repulsion_chain(Integer(373743), 4).refutes_hypothesis;
    bool pass = threshold == 373743 && boundary;
    return verify_detail::make("08-repulsion-threshold", pass, Json::object(),
                               {{"threshold", threshold}, {"boundary_exact", boundary}},
                               {{"threshold", 373743}, {"boundary_exact", true}}, timer.ms());
}

// 9. Frey identities, exact, over random coprime pairs and every index tuple
inline CheckRecord criterion_frey_identities(const VerifyProfile& prof) {
    WallTimer timer;
    std::mt19937_64 rng(prof.seed ^ 0x09);
    const int64_t k = prof.frey_k;
    int64_t failures = 0;
    for (int pair = 0; pair < prof.frey_pairs; ++pair) {
        Integer n, d;
        while (true) {
            n = Integer(1 + rng() % 1'000'000);
            d = Integer(1 + rng() % 1'000'000);
            if (pair % 2 == 1) n = -n;
            if (gcd(n, d) != 1) continue;
            bool zero_term = false;
            for (int64_t i = 0; i < k; ++i)
                if (n + i * d == 0) zero_term = true;
            if (!zero_term) break;
        }
        Solution sol{n, d, k, 2};
        if (!gcd_lemma_check(sol)) ++failures;
        for_each_triple(k, [&](const APTriple& t) {
            FreyA f = build_frey_A(sol, t);  // asserts a+b+c = 0 and both delta routes
            if (f.delta != 64 * pow(f.a * f.b * f.c, 2)) ++failures;
            // standard model discriminant of Y^2 = X(X-a)(X+c) is a quarter of it
            Integer model = 16 * pow(f.a * f.b * f.c, 2);
            if (f.delta != 4 * model) ++failures;
        });
        for_each_quad(k, [&](const Quad& q) {
            FreyI f = build_frey_I(sol, q);
            if (f.A - f.B != f.kappa * d * d) ++failures;
            // discriminant of x^3 + 2 kappa d x^2 + kappa A x, times 16
            Integer b2 = 2 * f.kappa * d, b4 = f.kappa * f.A;
            Integer disc_cubic = b4 * b4 * (b2 * b2 - 4 * b4);
            if (16 * disc_cubic != f.delta) ++failures;
        });
    }
    return verify_detail::make("09-frey-identities", failures == 0,
                               {{"pairs", prof.frey_pairs}, {"k", k}}, {{"failures", failures}},
                               {{"failures", 0}}, timer.ms());
}

// 10. mu-quadruple identity and the Moebius unfolding, exact equality
inline CheckRecord criterion_mu_and_moebius(const VerifyProfile& prof) {
    WallTimer timer;
    std::mt19937_64 rng(prof.seed ^ 0x10);
    int64_t failures = 0;
    auto small_primes = sieve_primes(10'000);
    for (int trial = 0; trial < prof.mu_trials; ++trial) {
        Rational lambda;
        while (true) {
            int64_t a = static_cast<int64_t>(rng() % 601) - 300;
            int64_t b = 1 + static_cast<int64_t>(rng() % 300);
            if (a == 0) continue;
            lambda = Rational(a, b);
            if (lambda != 0 && lambda != 1) break;
        }
        uint64_t p;
        while (true) {
            p = small_primes[rng() % small_primes.size()];
            if (p > 2 && numerator(lambda) % p != 0 && denominator(lambda) % p != 0) break;
        }
        if (!mu_quadruple_identity(lambda, p)) ++failures;
    }
    auto discs = enumerate_fundamental_discriminants(300);
    for (int trial = 0; trial < prof.moebius_trials; ++trial) {
        QuadChar eta = QuadChar::from_discriminant(Integer(discs[rng() % discs.size()]));
        Integer m2;
        while (true) {
            m2 = Integer(1 + rng() % 400);
            if (gcd(m2, eta.conductor()) == 1 && is_squarefree(m2)) break;
        }
        uint64_t k = 50 + rng() % 20'000;
        if (!moebius_unfold_check(eta, m2, k)) ++failures;
    }
    return verify_detail::make("10-mu-quadruple-and-moebius", failures == 0,
                               {{"mu_trials", prof.mu_trials}, {"moebius_trials", prof.moebius_trials}},
                               {{"failures", failures}}, {{"failures", 0}}, timer.ms());
}

// 11. Selberg's inequality on random instances; equality for a single vector
inline CheckRecord criterion_selberg(const VerifyProfile& prof) {
    WallTimer timer;
    std::mt19937_64 rng(prof.seed ^ 0x11);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    int64_t failures = 0;
    for (int trial = 0; trial < prof.selberg_trials; ++trial) {
        size_t dim = 1 + rng() % 50;
        size_t m = 1 + rng() % 20;
        std::vector<double> x(dim);
        for (auto& v : x) v = unit(rng);
        std::vector<std::vector<double>> ys(m, std::vector<double>(dim));
        for (auto& y : ys)
            for (auto& v : y) v = unit(rng);
        if (!selberg_check(x, ys).holds) ++failures;
    }
    std::vector<double> x(30);
    for (auto& v : x) v = unit(rng);
    auto single = selberg_check(x, {x});
    bool equality = std::abs(single.lhs - single.rhs) <= 1e-12 * std::abs(single.rhs);
    return verify_detail::make("11-selberg-inequality", failures == 0 && equality,
                               {{"trials", prof.selberg_trials}},
                               {{"failures", failures}, {"single_vector_equality", equality}},
                               {{"failures", 0}, {"single_vector_equality", true}}, timer.ms());
}

// 12. short character sums stay below the divisor-power bound
inline CheckRecord criterion_graham_ringrose(const VerifyProfile& prof) {
    WallTimer timer;
    std::mt19937_64 rng(prof.seed ^ 0x12);
    const std::vector<int64_t> aux_pool = {-4, 8, -3, 5, -7, 12, 13, -11};
    int64_t failures = 0;
    for (int inst = 0; inst < prof.gr_instances; ++inst) {
        // log-uniform odd squarefree q
        double lo = std::log(31.0), hi = std::log(static_cast<double>(prof.gr_q_max));
        Integer q;
        while (true) {
            double u = std::uniform_real_distribution<double>(lo, hi)(rng);
            int64_t cand = static_cast<int64_t>(std::exp(u)) | 1;
            if (cand > 1 && is_squarefree(Integer(cand))) {
                q = cand;
                break;
            }
        }
        int r = 1 + static_cast<int>(rng() % 3);
        std::vector<QuadChar> aux;
        std::vector<Integer> aux_mods;
        for (int64_t d : aux_pool) {
            if (static_cast<int>(aux.size()) + 1 >= r) break;
            QuadChar chi = QuadChar::from_discriminant(Integer(d));
            bool coprime = gcd(chi.conductor(), q) == 1;
            for (const auto& m : aux_mods) coprime = coprime && gcd(chi.conductor(), m) == 1;
            if (coprime) {
                aux.push_back(chi);
                aux_mods.push_back(chi.conductor());
            }
        }
        r = static_cast<int>(aux.size()) + 1;
        // conductor exactly q: D = q for q = 1 (mod 4), D = -q for q = 3 (mod 4)
        QuadChar pi1 = QuadChar::from_discriminant(mod_floor(q, 4) == 1 ? q : -q);
        long double r0 = std::pow(q.convert_to<long double>(), 0.25L);
        for (const auto& m : aux_mods) r0 = std::max(r0, m.convert_to<long double>());
        r0 *= std::pow(q.convert_to<long double>(), 1.25L);
        Integer R(static_cast<long double>(std::ceil(r0 * (1.0L + 0.2L * (rng() % 3)))));
        uint64_t offset = rng() % 1'000'000;

        const std::vector<int8_t> t1 = pi1.period_table();
        std::vector<std::vector<int8_t>> taux;
        for (const auto& chi : aux) taux.push_back(chi.period_table());
        int64_t sum = 0;
        const uint64_t n1 = t1.size();
        const uint64_t len = static_cast<uint64_t>(to_i64(R));
        for (uint64_t m = offset + 1; m <= offset + len; ++m) {
            int v = t1[m % n1];
            for (const auto& t : taux) {
                if (!v) break;
                v *= t[m % t.size()];
            }
            sum += v;
        }
        auto gb = gr_bound_check(q, r, R, static_cast<double>(sum), aux_mods);
        if (!gb.holds) ++failures;
    }
    return verify_detail::make("12-graham-ringrose-bound", failures == 0,
                               {{"instances", prof.gr_instances}, {"q_max", prof.gr_q_max}},
                               {{"failures", failures}}, {{"failures", 0}}, timer.ms());
}

// 13. the 3-AP finder agrees with a brute-force triple loop on all subsets
// of {0..15}
inline CheckRecord criterion_roth_oracle(const VerifyProfile&) {
    WallTimer timer;
    int64_t mismatches = 0;
    for (uint32_t mask = 0; mask < (1u << 16); ++mask) {
        IndexSet s(16);
        for (int b = 0; b < 16; ++b)
            if (mask & (1u << b)) s.insert(b);
        auto found = find_3ap(s);
        // oracle: first (a, b) in lexicographic order with 2b - a present
        std::optional<APTriple> oracle;
        for (int a = 0; a < 16 && !oracle; ++a)
            for (int b = a + 1; b < 16 && !oracle; ++b) {
                int c = 2 * b - a;
                if (c < 16 && (mask & (1u << a)) && (mask & (1u << b)) && (mask & (1u << c)))
                    oracle = APTriple{a, b};
            }
        bool same = found.has_value() == oracle.has_value() &&
                    (!found || (found->i == oracle->i && found->j == oracle->j));
        if (!same) ++mismatches;
    }
    return verify_detail::make("13-roth-finder-oracle", mismatches == 0, {{"subsets", 65536}},
                               {{"mismatches", mismatches}}, {{"mismatches", 0}}, timer.ms());
}

// 14. PNT residuals for every quadratic character of conductor <= 50
inline CheckRecord criterion_pnt(const VerifyProfile& prof) {
    WallTimer timer;
    std::vector<QuadChar> chars{QuadChar()};  // trivial first (delta subtracted)
    for (int64_t d : enumerate_fundamental_discriminants(prof.pnt_cond_max))
        chars.push_back(QuadChar::from_discriminant(Integer(d)));
    std::vector<std::vector<int8_t>> tables;
    for (const auto& c : chars) tables.push_back(c.period_table());
    std::vector<CompensatedSum> sums(chars.size());
    for_each_prime_power(2, prof.pnt_x, [&](uint64_t m, uint64_t, double logp) {
        for (size_t i = 0; i < chars.size(); ++i) {
            int v = tables[i][m % tables[i].size()];
            if (v) sums[i].add(v * logp);
        }
    });
    double worst = 0;
    std::string worst_char;
    int64_t failures = 0;
    for (size_t i = 0; i < chars.size(); ++i) {
        double resid = sums[i].value() - (chars[i].trivial() ? static_cast<double>(prof.pnt_x) : 0.0);
        double ratio = std::abs(resid) / static_cast<double>(prof.pnt_x);
        if (ratio >= 0.01) ++failures;
        if (ratio > worst) {
            worst = ratio;
            worst_char = chars[i].discriminant().str();
        }
    }
    return verify_detail::make("14-pnt-residuals", failures == 0,
                               {{"X", prof.pnt_x}, {"cond_max", prof.pnt_cond_max}},
                               {{"failures", failures}, {"worst_ratio", worst}, {"worst_D", worst_char}},
                               {{"failures", 0}, {"worst_ratio_below", 0.01}}, timer.ms());
}

// Small cross-module checks so a quick run touches every module.
inline std::vector<CheckRecord> module_smoke_checks() {
    std::vector<CheckRecord> out;
    {
        WallTimer t;
        bool ok = std::abs(theta(10) - std::log(210.0)) < 1e-9 && mu_kraus(12) == 24 &&
                  kronecker(2LL, 7LL) == 1 && smooth_split(2662, 10, 3).rough_is_power &&
                  oddprod_identity_check(3, 1) && oddprod_identity_check(2, 2);
        out.push_back(verify_detail::make("smoke-arith", ok, Json::object(), Json::object(),
                                          Json::object(), t.ms()));
    }
    {
        WallTimer t;
        auto scan = verify_kro_scan(Integer(0), Integer(1), Integer(2), 3, 500);
        bool ok = !scan.empty();
        for (const auto& e : scan) ok = ok && e.status != KroStatus::fail;
        auto orbit = lambda_orbit(Rational(2));
        ok = ok && orbit.size() == 6 && j_from_abc(Integer(1), Integer(-2), Integer(1)) == 1728;
        out.push_back(verify_detail::make("smoke-ecfp", ok, Json::object(), Json::object(),
                                          Json::object(), t.ms()));
    }
    {
        WallTimer t;
        auto eb = ell_bound(Integer(5), Integer(6));
        auto kh = kraus_H(Integer(6));
        bool ok = eb.exact && eb.value == 3 && std::abs(kh.g - 9.0) < 1e-9 && kh.h >= kh.g;
        out.push_back(verify_detail::make("smoke-frey-bounds", ok, Json::object(), Json::object(),
                                          Json::object(), t.ms()));
    }
    {
        WallTimer t;
        auto d = char_product_decompose(QuadChar::from_discriminant(Integer(5)),
                                        QuadChar::from_discriminant(Integer(60)));
        bool ok = d.eta.conductor() == 12 && d.M2 == 5 && d.identity_verified;
        auto mf = smooth_modulus_factorization(
            char_product_decompose(QuadChar::from_kernel(Integer(11 * 13)),
                                   QuadChar::from_kernel(Integer(17 * 19))),
            10'000);
        ok = ok && mf.s >= 1 && !mf.q.empty();
        out.push_back(verify_detail::make("smoke-charlab", ok, Json::object(), Json::object(),
                                          Json::object(), t.ms()));
    }
    {
        WallTimer t;
        std::vector<QuadChar> chars;
        for (int64_t d : enumerate_fundamental_discriminants(30))
            chars.push_back(QuadChar::from_discriminant(Integer(d)));
        auto ls = large_sieve_pipeline(2000, chars);
        bool ok = ls.norm_x2_capped && ls.sixty_eighth_below_varpi && !ls.sixty_eighth_below_varpi_sq;
        out.push_back(verify_detail::make("smoke-analytic-pipeline", ok, Json::object(),
                                          {{"max_offdiag", ls.max_offdiag}}, Json::object(), t.ms()));
    }
    {
        WallTimer t;
        SieveConfig cfg;
        cfg.k = 500;
        auto rep = proposition_S_pipeline(cfg);
        std::vector<BCandidate> cands{{APTriple{0, 1}, Integer(3)}, {APTriple{0, 2}, Integer(5)}};
        auto mb = maximal_B_construction(500, cands);
        bool ok = rep.deletion.divides_factorial && mb.B.size() <= 2;
        out.push_back(verify_detail::make("smoke-sieve-pipeline", ok, {{"k", 500}},
                                          {{"diagnosis", rep.diagnosis}}, Json::object(), t.ms()));
    }
    return out;
}

inline RunReport verify_all(const VerifyProfile& prof) {
    WallTimer timer;
    RunReport report;
    report.command = "verify all";
    report.config = {{"profile", prof.name}, {"seed", prof.seed}};
    report.add(criterion_cardinality(prof));
    report.add(criterion_mod4(prof));
    report.add(criterion_fminus1(prof));
    report.add(criterion_order4(prof));
    report.add(criterion_condbound(prof));
    report.add(criterion_theta(prof));
    report.add(criterion_descent(prof));
    report.add(criterion_repulsion(prof));
    report.add(criterion_frey_identities(prof));
    report.add(criterion_mu_and_moebius(prof));
    report.add(criterion_selberg(prof));
    report.add(criterion_graham_ringrose(prof));
    report.add(criterion_roth_oracle(prof));
    report.add(criterion_pnt(prof));
    if (prof.module_smokes)
        for (auto& r : module_smoke_checks()) report.add(std::move(r));
    report.wall_ms = timer.ms();
    return report;
}

}  // namespace apcheck
