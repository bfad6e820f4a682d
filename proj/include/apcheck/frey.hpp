#pragma once

// The two Frey-Hellegouarch families attached to a candidate tuple
// (n, d, k, ell): index-set enumeration with the exact cardinality formula,
// the (a, b, c) and (kappa, A, B) constructions with their discriminant
// identities, level-bound records, and the exponent-bound arithmetic.

#include "apcheck/chebyshev.hpp"
#include "apcheck/factor.hpp"
#include "apcheck/integer.hpp"
#include "apcheck/primes.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <functional>
#include <stdexcept>
#include <vector>

namespace apcheck {

struct Solution {
    Integer n;
    Integer d;
    int64_t k;
    Integer ell;

    void validate() const {
        if (k < 3) throw std::domain_error("k must be at least 3");
        if (gcd(n, d) != 1) throw std::domain_error("not coprime");
        if (ell < 2 || !is_probable_prime(ell)) throw std::domain_error("ell must be prime");
    }

    Integer term(int64_t i) const { return n + i * d; }
};

// 3-term arithmetic progression of indices (i, j, 2j - i)
struct APTriple {
    int64_t i, j;
    int64_t third() const { return 2 * j - i; }
};

// index quadruple (j1, i1, i2, j2) with i1 + i2 = j1 + j2
struct Quad {
    int64_t j1, i1, i2, j2;
};

// Triples in lexicographic (i, j) order.
template <class Fn>
void for_each_triple(int64_t k, Fn&& fn) {
    for (int64_t i = 0; i < k; ++i)
        for (int64_t j = i + 1; 2 * j - i <= k - 1; ++j) fn(APTriple{i, j});
}

// Quadruples ordered by (j1, j2, i1); the constraints force i1 <= (j1+j2)/2.
template <class Fn>
void for_each_quad(int64_t k, Fn&& fn) {
    for (int64_t j1 = 0; j1 + 2 < k; ++j1)
        for (int64_t j2 = j1 + 2; j2 <= k - 1; ++j2) {
            int64_t s = j1 + j2;
            for (int64_t i1 = j1 + 1; 2 * i1 <= s; ++i1) fn(Quad{j1, i1, s - i1, j2});
        }
}

// #I = k^3/12 - k^2/8 - k/12 + delta/8 exactly, delta = [k odd]
inline Integer quad_count_formula(int64_t k) {
    if (k < 3) return 0;
    Integer kk(k);
    Integer delta = (k % 2 == 1) ? 1 : 0;
    Integer num = 2 * kk * kk * kk - 3 * kk * kk - 2 * kk + 3 * delta;
    if (num % 24 != 0) throw std::logic_error("cardinality formula must be integral");
    return num / 24;
}

struct ProgressionSets {
    std::vector<APTriple> triples;
    std::vector<Quad> quads;
    Integer triple_count;
    Integer quad_count;
    Integer quad_count_closed_form;
};

inline ProgressionSets enumerate_progressions(int64_t k) {
    ProgressionSets out;
    if (k >= 3) {
        for_each_triple(k, [&](APTriple a) { out.triples.push_back(a); });
        for_each_quad(k, [&](Quad q) { out.quads.push_back(q); });
    }
    out.triple_count = Integer(out.triples.size());
    out.quad_count = Integer(out.quads.size());
    out.quad_count_closed_form = quad_count_formula(k);
    return out;
}

// gcd(n + id, n + jd) | (j - i) for all pairs
inline bool gcd_lemma_check(const Solution& sol) {
    if (gcd(sol.n, sol.d) != 1) throw std::domain_error("not coprime");
    for (int64_t i = 0; i < sol.k; ++i)
        for (int64_t j = i + 1; j < sol.k; ++j) {
            Integer g = gcd(sol.term(i), sol.term(j));
            if (g == 0 || (j - i) % g != 0) return false;
        }
    return true;
}

struct TermDecomposition {
    int64_t index;
    Integer term;
    SmoothSplit split;
};

inline std::vector<TermDecomposition> decompose_terms(const Solution& sol) {
    sol.validate();
    unsigned ell = sol.ell > 1000 ? 2u : static_cast<unsigned>(sol.ell);
    std::vector<TermDecomposition> out;
    out.reserve(static_cast<size_t>(sol.k));
    for (int64_t i = 0; i < sol.k; ++i) {
        Integer t = sol.term(i);
        if (t == 0) throw std::domain_error("degenerate term");
        out.push_back({i, t, smooth_split(abs(t), Integer(sol.k), ell)});
    }
    return out;
}

// Y^2 = X(X - a)(X + c) with a + b + c = 0 and Delta = 64(abc)^2
struct FreyA {
    APTriple triple;
    Integer g;
    Integer a, b, c;
    Integer delta;
};

inline FreyA build_frey_A(const Solution& sol, const APTriple& t) {
    Integer t1 = sol.term(t.i), t2 = sol.term(t.j), t3 = sol.term(t.third());
    if (t1 == 0 || t2 == 0 || t3 == 0) throw std::domain_error("degenerate term");
    FreyA f;
    f.triple = t;
    f.g = gcd(gcd(t1, 2 * t2), t3);
    f.a = t1 / f.g;
    f.b = -2 * t2 / f.g;
    f.c = t3 / f.g;
    if (f.a + f.b + f.c != 0) throw std::logic_error("a + b + c must vanish");
    f.delta = 64 * pow(f.a * f.b * f.c, 2);
    // same discriminant through the product of the terms
    if (f.delta * pow(f.g, 6) != 256 * pow(t1 * t2 * t3, 2))
        throw std::logic_error("discriminant identity failed");
    return f;
}

// Y^2 = X(X^2 + 2*kappa*d*X + kappa*A) with A - B = kappa d^2 and
// Delta = -64 kappa^3 A^2 B
struct FreyI {
    Quad quad;
    Integer kappa;
    Integer A, B;
    Integer delta;
};

inline FreyI build_frey_I(const Solution& sol, const Quad& q) {
    FreyI f;
    f.quad = q;
    f.A = sol.term(q.j1) * sol.term(q.j2);
    f.B = sol.term(q.i1) * sol.term(q.i2);
    f.kappa = Integer(q.j1) * q.j2 - Integer(q.i1) * q.i2;
    if (f.kappa == 0) throw std::domain_error("degenerate quadruple");
    if (f.A == 0 || f.B == 0) throw std::domain_error("degenerate term");
    if (f.A - f.B != f.kappa * sol.d * sol.d) throw std::logic_error("A - B = kappa d^2 failed");
    if (abs(f.kappa) >= Integer(sol.k) * sol.k) throw std::logic_error("kappa out of range");
    f.delta = -64 * pow(f.kappa, 3) * f.A * f.A * f.B;
    return f;
}

inline Integer primorial(int64_t k) {
    Integer p = 1;
    for (uint64_t q : sieve_primes(k < 0 ? 0 : static_cast<uint64_t>(k))) p *= q;
    return p;
}

// level divides 2^8 * A_i A_j A_{2j-i} with squarefree odd part; the
// numeric cap is 2^7 exp(1.000081 k)
struct LevelBoundA {
    Integer odd_radical;  // squarefree odd divisor bound
    int two_exponent = 8;
    long double log_cap;
};

inline LevelBoundA level_bounds(const FreyA&, const std::array<Integer, 3>& a_values, int64_t k) {
    LevelBoundA lb;
    lb.odd_radical = rad_odd(a_values[0] * a_values[1] * a_values[2]);
    lb.log_cap = 7.0L * std::log(2.0L) + 1.000081L * static_cast<long double>(k);
    return lb;
}

// level divides 2^7 3^5 kappa^2 (prod_{q <= k} q)^2; numeric cap
// 2^7 3^5 k^4 exp(2.000162 k)
struct LevelBoundI {
    Integer divisor_bound;
    long double log_cap;
};

inline LevelBoundI level_bounds(const FreyI& f, int64_t k) {
    LevelBoundI lb;
    lb.divisor_bound = Integer(128) * 243 * f.kappa * f.kappa * pow(primorial(k), 2);
    lb.log_cap = 7.0L * std::log(2.0L) + 5.0L * std::log(3.0L) +
                 4.0L * std::log(static_cast<long double>(k)) + 2.000162L * static_cast<long double>(k);
    return lb;
}

// floor of (sqrt(p) + 1)^((M0+1)/6). Exact whenever the result is of
// manageable size: x <= (sqrt(p)+1)^e iff x^12 <= (p + 1 + 2 sqrt(p))^e
// compared in Z[sqrt(p)].
struct EllBound {
    bool exact;
    Integer value;          // meaningful when exact
    long double log_value;  // natural log of the bound, always set
};

namespace detail {

// (a + b sqrt(p))^e by binary powering in Z[sqrt(p)]
inline std::pair<Integer, Integer> zsqrt_pow(Integer a, Integer b, const Integer& p, uint64_t e) {
    Integer ra = 1, rb = 0;
    while (e) {
        if (e & 1) {
            Integer na = ra * a + rb * b * p;
            Integer nb = ra * b + rb * a;
            ra = na;
            rb = nb;
        }
        Integer sa = a * a + b * b * p;
        Integer sb = 2 * a * b;
        a = sa;
        b = sb;
        e >>= 1;
    }
    return {ra, rb};
}

// x^12 <= (p+1+2 sqrt(p))^(m0+1), exactly
inline bool ell_bound_ok(const Integer& x, const Integer& p, uint64_t m0) {
    auto [a, b] = zsqrt_pow(p + 1, Integer(2), p, m0 + 1);  // a + b sqrt(p)
    Integer lhs = pow(x, 12);
    if (lhs <= a) return true;
    Integer diff = lhs - a;
    return diff * diff <= b * b * p;
}

}  // namespace detail

inline EllBound ell_bound(const Integer& p, const Integer& m0) {
    if (p < 2 || m0 < 1) throw std::domain_error("requires p >= 2 and M0 >= 1");
    EllBound out;
    long double sp = std::sqrt(p.convert_to<long double>()) + 1.0L;
    out.log_value = (m0.convert_to<long double>() + 1.0L) / 6.0L * std::log(sp);
    // exact route while the operands stay manageable
    if (m0 < (1 << 20) && out.log_value < 5000.0L) {
        uint64_t m = static_cast<uint64_t>(m0);
        Integer mid(std::exp(out.log_value));
        Integer margin = mid / 100'000'000'000 + 4;  // floats are good to ~1e-15 here
        Integer lo = mid > margin ? mid - margin : Integer(1);
        Integer hi = mid + margin;
        while (!detail::ell_bound_ok(lo, p, m)) {
            hi = lo;
            lo = lo > margin ? lo - margin : Integer(1);
        }
        while (detail::ell_bound_ok(hi, p, m)) hi += margin;
        // invariant: ok(lo), !ok(hi); the bound is the last ok value
        while (hi - lo > 1) {
            Integer cand = (lo + hi) / 2;
            if (detail::ell_bound_ok(cand, p, m))
                lo = cand;
            else
                hi = cand;
        }
        out.exact = true;
        out.value = lo;
    } else {
        out.exact = false;
        out.value = 0;
    }
    return out;
}

// Kraus's F, G, H with the newform-dimension bound (n+1)/12 standing in
// for g0+(n); values returned in log scale with a direct double rendering.
struct KrausH {
    long double log_f, log_g, log_h;
    double f, g, h;  // +inf when out of double range
};

inline KrausH kraus_H(const Integer& n) {
    if (n <= 0) throw std::domain_error("requires n >= 1");
    auto base = [](const Integer& mu) {
        // log(sqrt(mu/6) + 1)
        long double m = mu.convert_to<long double>();
        return std::log(std::sqrt(m / 6.0L) + 1.0L);
    };
    KrausH out;
    Integer mu_n = mu_kraus(n);
    Integer mu_l = mu_kraus(lcm(n, Integer(4)));
    long double ghat = (n.convert_to<long double>() + 1.0L) / 12.0L;
    out.log_f = 2.0L * ghat * base(mu_n);
    out.log_g = 2.0L * base(mu_l);
    out.log_h = std::max(out.log_f, out.log_g);
    auto render = [](long double lg) {
        return lg > 700.0L ? std::numeric_limits<double>::infinity()
                           : static_cast<double>(std::exp(lg));
    };
    out.f = render(out.log_f);
    out.g = render(out.log_g);
    out.h = render(out.log_h);
    return out;
}

// True iff (sqrt(p)+1)^((cap+1)/6) < exp(10^k), evaluated in log-log scale.
// cap is passed as its natural log; the comparison is conservative (a
// borderline case reports no contradiction).
inline bool contradiction_threshold(const Integer& p, long double log_cap, int64_t k) {
    if (p < 2) throw std::domain_error("requires p >= 2");
    long double log_exponent;
    if (log_cap < 50.0L)
        log_exponent = std::log((std::exp(log_cap) + 1.0L) / 6.0L);
    else
        log_exponent = log_cap - std::log(6.0L);
    long double loglog_base = std::log(std::log(std::sqrt(static_cast<long double>(p)) + 1.0L));
    long double lhs = log_exponent + loglog_base;
    long double rhs = static_cast<long double>(k) * std::log(10.0L);
    return lhs < rhs - std::abs(rhs) * 1e-15L;
}

}  // namespace apcheck
