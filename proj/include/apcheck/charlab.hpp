#pragma once

// Quadratic Dirichlet characters represented by fundamental discriminants
// and evaluated through the Kronecker symbol: construction from
// lambda-invariants and conic data, interval sums, the mu1..mu4 identity,
// the primitive-times-principal product decomposition, the grouped-modulus
// factorization feeding the short-sum bound, and that bound itself.

#include "apcheck/chebyshev.hpp"
#include "apcheck/factor.hpp"
#include "apcheck/integer.hpp"
#include "apcheck/kronecker.hpp"
#include "apcheck/summation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace apcheck {

inline bool is_fundamental_discriminant(const Integer& d) {
    if (d == 1) return true;  // the trivial character
    Integer r = mod_floor(d, 4);
    if (r == 1) return is_squarefree(d);
    if (r == 0) {
        Integer m = d / 4;
        Integer rm = mod_floor(m, 4);
        return (rm == 2 || rm == 3) && is_squarefree(m);
    }
    return false;
}

// D from a squarefree kernel s: D = s when s = 1 (mod 4), else 4s.
inline Integer fundamental_from_kernel(const Integer& s) {
    if (s == 0) throw std::domain_error("zero kernel");
    return mod_floor(s, 4) == 1 ? s : 4 * s;
}

class QuadChar {
public:
    QuadChar() : d_(1) {}

    static QuadChar from_discriminant(const Integer& d) {
        if (!is_fundamental_discriminant(d))
            throw std::domain_error("not a fundamental discriminant: " + d.str());
        QuadChar c;
        c.d_ = d;
        return c;
    }

    static QuadChar from_kernel(const Integer& s) {
        return from_discriminant(fundamental_from_kernel(squarefree_kernel(s)));
    }

    const Integer& discriminant() const { return d_; }
    Integer conductor() const { return abs(d_); }
    bool trivial() const { return d_ == 1; }

    Integer odd_conductor() const {
        Integer n = conductor();
        while (n % 2 == 0) n /= 2;
        return n;
    }

    int operator()(const Integer& m) const { return kronecker(d_, m); }
    int at(int64_t m) const {
        if (d_ >= std::numeric_limits<long long>::min() && d_ <= std::numeric_limits<long long>::max())
            return kronecker(static_cast<long long>(d_), static_cast<long long>(m));
        return kronecker(d_, Integer(m));
    }

    // chi values on one full period, indexed by residue
    std::vector<int8_t> period_table() const {
        uint64_t n = static_cast<uint64_t>(conductor());
        std::vector<int8_t> t(n);
        for (uint64_t r = 0; r < n; ++r) t[r] = static_cast<int8_t>(at(static_cast<int64_t>(r)));
        return t;
    }

    friend bool operator==(const QuadChar& a, const QuadChar& b) { return a.d_ == b.d_; }
    friend bool operator!=(const QuadChar& a, const QuadChar& b) { return a.d_ != b.d_; }

private:
    Integer d_;
};

// All fundamental discriminants with 1 < |D| <= limit, ordered by (|D|, sign).
inline std::vector<int64_t> enumerate_fundamental_discriminants(int64_t limit) {
    std::vector<int64_t> out;
    for (int64_t n = 2; n <= limit; ++n) {
        if (is_fundamental_discriminant(Integer(-n))) out.push_back(-n);
        if (is_fundamental_discriminant(Integer(n))) out.push_back(n);
    }
    return out;
}

// The primitive character agreeing with (omega * r | p) at odd primes p
// away from the support of r.
inline QuadChar fundamental_discriminant(const Rational& r, int omega) {
    if (r == 0) throw std::domain_error("zero parameter");
    if (omega != 1 && omega != -1 && omega != 2 && omega != -2)
        throw std::domain_error("omega must be in {1, -1, 2, -2}");
    return QuadChar::from_kernel(Integer(omega) * numerator(r) * denominator(r));
}

// Case (I): the four characters built from +-lambda and +-2*lambda.
inline QuadChar char_from_case_I(const Rational& lambda, int which) {
    if (lambda == 0 || lambda == 1) throw std::domain_error("degenerate Legendre parameter");
    switch (which) {
        case 1: return fundamental_discriminant(lambda, 1);
        case 2: return fundamental_discriminant(lambda, -1);
        case 3: return fundamental_discriminant(lambda, 2);
        case 4: return fundamental_discriminant(lambda, -2);
        default: throw std::invalid_argument("character index must be 1..4");
    }
}

inline std::array<QuadChar, 4> mu_quadruple(const Rational& lambda) {
    return {char_from_case_I(lambda, 1), char_from_case_I(lambda, 2), char_from_case_I(lambda, 3),
            char_from_case_I(lambda, 4)};
}

struct CaseIIChar {
    QuadChar chi;
    bool trivial_kernel;  // omega * t * v is a square: the CM endpoint
    Integer odd_conductor;
};

// Case (II): character of omega * t * v for a conic point 2t^2 + 2v^2 = 1.
inline CaseIIChar char_from_case_II(const Rational& t, const Rational& v, int omega) {
    if (t <= 0 || v <= 0) throw std::domain_error("conic parameters must be positive");
    if (2 * t * t + 2 * v * v != 1) throw std::domain_error("not on the descent conic");
    CaseIIChar out;
    out.chi = fundamental_discriminant(t * v, omega);
    out.trivial_kernel = out.chi.trivial();
    out.odd_conductor = out.chi.odd_conductor();
    return out;
}

enum class Weight { unweighted, mangoldt };

// Exact sum of chi(m)[chi2(m)] over lo < m <= hi.
inline int64_t char_sum_unweighted(const QuadChar& chi, uint64_t lo, uint64_t hi,
                                   const QuadChar* chi2 = nullptr) {
    if (lo >= hi) throw std::domain_error("empty interval");
    const std::vector<int8_t> t1 = chi.period_table();
    const std::vector<int8_t> t2 = chi2 ? chi2->period_table() : std::vector<int8_t>{};
    const uint64_t n1 = t1.size(), n2 = t2.size();
    uint64_t r1 = (lo + 1) % n1, r2 = n2 ? (lo + 1) % n2 : 0;
    int64_t sum = 0;
    for (uint64_t m = lo + 1; m <= hi; ++m) {
        int v = t1[r1];
        if (chi2) v *= t2[r2];
        sum += v;
        if (++r1 == n1) r1 = 0;
        if (n2 && ++r2 == n2) r2 = 0;
    }
    return sum;
}

// Lambda-weighted sum over lo < m <= hi.
inline double char_sum_mangoldt(const QuadChar& chi, uint64_t lo, uint64_t hi,
                                const QuadChar* chi2 = nullptr) {
    if (lo >= hi) throw std::domain_error("empty interval");
    CompensatedSum sum;
    for_each_prime_power(lo + 1, hi, [&](uint64_t m, uint64_t, double logp) {
        int v = chi.at(static_cast<int64_t>(m));
        if (chi2) v *= chi2->at(static_cast<int64_t>(m));
        if (v) sum.add(v * logp);
    });
    return sum.value();
}

inline double char_sum(const QuadChar& chi, uint64_t lo, uint64_t hi, Weight w,
                       const QuadChar* chi2 = nullptr) {
    return w == Weight::unweighted ? static_cast<double>(char_sum_unweighted(chi, lo, hi, chi2))
                                   : char_sum_mangoldt(chi, lo, hi, chi2);
}

// mu1(p) - mu2(p) - mu3(p) + mu4(p) equals 4(lambda|p) when p = 3 (mod 8)
// and 0 otherwise.
inline bool mu_quadruple_identity(const Rational& lambda, uint64_t p) {
    if (lambda == 0 || lambda == 1) throw std::domain_error("degenerate Legendre parameter");
    if (p < 3 || !is_prime_u64(p)) throw std::domain_error("p must be an odd prime");
    if (numerator(lambda) % p == 0 || denominator(lambda) % p == 0)
        throw std::domain_error("p lies in the support of lambda");
    auto mus = mu_quadruple(lambda);
    Integer ip(p);
    int lhs = mus[0](ip) - mus[1](ip) - mus[2](ip) + mus[3](ip);
    int rhs = (p % 8 == 3) ? 4 * kronecker(lambda, ip) : 0;
    return lhs == rhs;
}

// chi1 * chi2 written as eta * psi with eta primitive and psi principal
// mod M2, gcd(M1, M2) = 1.
struct CharProductDecomp {
    QuadChar eta;
    Integer M2;
    bool identity_verified;  // chi1(m)chi2(m) = eta(m)[gcd(m, M2)=1] on a full period
};

inline CharProductDecomp char_product_decompose(const QuadChar& chi1, const QuadChar& chi2,
                                                uint64_t verify_limit = 10'000'000) {
    if (chi1 == chi2) throw std::domain_error("principal product");
    CharProductDecomp out;
    out.eta = QuadChar::from_kernel(chi1.discriminant() * chi2.discriminant());
    const Integer m1 = out.eta.conductor();
    const Integer big = lcm(chi1.conductor(), chi2.conductor());
    if (big % m1 != 0) throw std::logic_error("product conductor must divide the lcm");
    out.M2 = big / m1;
    // lcm/M1 can share a 2-power with M1; peel it so the parts are coprime
    for (Integer g = gcd(out.M2, m1); g > 1; g = gcd(out.M2, m1)) out.M2 /= g;
    if (gcd(out.M2, m1) != 1) throw std::logic_error("decomposition parts must be coprime");
    if (gcd(chi1.conductor(), chi2.conductor()) % out.M2 != 0)
        throw std::logic_error("M2 must divide gcd(N1, N2)");
    Integer m2_odd = out.M2;
    while (m2_odd % 2 == 0) m2_odd /= 2;
    if (m2_odd != 1 && !is_squarefree(m2_odd)) throw std::logic_error("odd part of M2 must be squarefree");
    out.identity_verified = false;
    if (big <= verify_limit) {
        const int64_t period = to_i64(big);
        const int64_t m2 = to_i64(out.M2);
        for (int64_t m = 1; m <= period; ++m) {
            int lhs = chi1(Integer(m)) * chi2(Integer(m));
            int rhs = std::gcd(m, m2) == 1 ? out.eta(Integer(m)) : 0;
            if (lhs != rhs) throw std::logic_error("product identity failed at m=" + std::to_string(m));
        }
        out.identity_verified = true;
    }
    return out;
}

// Grouping of the prime factors of M1 * M2 into moduli q_1 .. q_r for the
// short-sum bound: q_1..q_s covers M1 with q_1 odd and coprime to the rest,
// interior moduli inside [k^(7/32), k^(7/16)], trailing moduli merely
// bounded by k^(7/16).
struct ModulusFactorization {
    std::vector<Integer> q;
    size_t s = 0;       // q[0..s) multiply to M1
    long double r0 = 0; // max(q_2..q_r, q_1^(1/4)) * q_1^(5/4)
};

namespace detail {

inline std::vector<Integer> pack_factors(std::vector<Integer> parts, long double win_lo,
                                         long double win_hi) {
    // singletons for parts already at window size, ascending packing for
    // the rest; a sub-window leftover trails
    std::vector<Integer> groups;
    std::vector<Integer> small;
    std::sort(parts.begin(), parts.end(), std::greater<Integer>());
    for (const Integer& p : parts) {
        long double v = p.convert_to<long double>();
        if (v > win_hi) throw std::domain_error("modulus not smooth enough");
        if (v >= win_lo)
            groups.push_back(p);
        else
            small.push_back(p);
    }
    std::sort(small.begin(), small.end());
    Integer cur = 1;
    for (const Integer& p : small) {
        cur *= p;
        if (cur.convert_to<long double>() >= win_lo) {
            groups.push_back(cur);
            cur = 1;
        }
    }
    if (cur > 1) groups.push_back(cur);  // leftover, possibly below the window
    return groups;
}

}  // namespace detail

inline ModulusFactorization smooth_modulus_factorization(const CharProductDecomp& decomp, int64_t k) {
    if (k < 3) throw std::domain_error("k too small");
    const long double kk = static_cast<long double>(k);
    const long double win_lo = std::pow(kk, 7.0L / 32.0L);
    const long double win_hi = std::pow(kk, 7.0L / 16.0L);
    const Integer m1 = decomp.eta.conductor();
    if (m1.convert_to<long double>() < 8.0L * win_lo)
        throw std::domain_error("M1 below the grouping threshold 8 k^(7/32)");

    // M1: odd primes individually, the 2-part as one unit
    std::vector<Integer> m1_parts;
    Integer two_part = 1;
    for (const auto& fe : factorize(m1)) {
        if (fe.prime == 2)
            two_part = pow(fe.prime, fe.exp);
        else
            m1_parts.push_back(fe.prime);  // odd part squarefree, exp = 1
    }
    std::vector<Integer> m1_groups = detail::pack_factors(m1_parts, win_lo, win_hi);
    if (m1_groups.empty()) throw std::domain_error("M1 has no odd part to lead the grouping");
    if (two_part > 1) {
        // attach the 2-part to the trailing group when the window allows,
        // otherwise let it stand alone in the q_s slot
        Integer merged = m1_groups.back() * two_part;
        if (m1_groups.size() > 1 && merged.convert_to<long double>() <= win_hi)
            m1_groups.back() = merged;
        else
            m1_groups.push_back(two_part);
    }

    std::vector<Integer> m2_parts;
    if (decomp.M2 > 1)
        for (const auto& fe : factorize(decomp.M2)) m2_parts.push_back(pow(fe.prime, fe.exp));
    std::vector<Integer> m2_groups =
        m2_parts.empty() ? std::vector<Integer>{} : detail::pack_factors(m2_parts, win_lo, win_hi);

    ModulusFactorization out;
    out.q = m1_groups;
    out.q.insert(out.q.end(), m2_groups.begin(), m2_groups.end());
    out.s = m1_groups.size();

    // validate the grouping conditions
    Integer prod_m1 = 1, prod_m2 = 1;
    for (size_t i = 0; i < out.s; ++i) prod_m1 *= out.q[i];
    for (size_t i = out.s; i < out.q.size(); ++i) prod_m2 *= out.q[i];
    if (prod_m1 != m1 || prod_m2 != decomp.M2) throw std::logic_error("grouping must cover M1 and M2");
    if (out.q[0] % 2 == 0) throw std::logic_error("q1 must be odd");
    Integer rest = 1;
    for (size_t i = 1; i < out.q.size(); ++i) rest *= out.q[i];
    if (gcd(out.q[0], rest) != 1) throw std::logic_error("q1 must be coprime to the rest");
    auto in_window = [&](const Integer& v) {
        long double x = v.convert_to<long double>();
        return win_lo <= x && x <= win_hi;
    };
    for (size_t i = 0; i + 1 < out.s; ++i)
        if (!in_window(out.q[i])) throw std::logic_error("interior M1 modulus outside the window");
    for (size_t i = out.s; i + 1 < out.q.size(); ++i)
        if (!in_window(out.q[i])) throw std::logic_error("interior M2 modulus outside the window");
    const Integer& last = out.q.back();
    if (last <= 1 || last.convert_to<long double>() > win_hi)
        throw std::logic_error("trailing modulus out of range");
    // bound on the number of groups
    long double m = (m1 * decomp.M2).convert_to<long double>();
    long double r_cap = std::ceil(std::log(m) / std::log(win_lo)) + 2.0L;
    if (static_cast<long double>(out.q.size()) > r_cap) throw std::logic_error("too many moduli");

    long double q1 = out.q[0].convert_to<long double>();
    long double aux = std::pow(q1, 0.25L);
    for (size_t i = 1; i < out.q.size(); ++i)
        aux = std::max(aux, out.q[i].convert_to<long double>());
    out.r0 = aux * std::pow(q1, 1.25L);
    return out;
}

struct GrBound {
    double bound;
    bool holds;
};

// |observed| against 4R (tau(q)^(r^2) / q)^(2^-r); aux_moduli are
// q_2..q_r for the R >= R0 admissibility check.
inline GrBound gr_bound_check(const Integer& q, int r, const Integer& R, double observed,
                              const std::vector<Integer>& aux_moduli = {}) {
    if (q <= 1 || !is_squarefree(q)) throw std::domain_error("q must be squarefree and > 1");
    if (r < 1) throw std::domain_error("r must be >= 1");
    long double qd = q.convert_to<long double>();
    long double r0 = std::pow(qd, 0.25L);
    for (const Integer& m : aux_moduli) r0 = std::max(r0, m.convert_to<long double>());
    r0 *= std::pow(qd, 1.25L);
    if (R.convert_to<long double>() < r0 * (1.0L - 1e-12L))
        throw std::domain_error("interval too short for the theorem");
    long double tau = tau_of(q).convert_to<long double>();
    long double log_bound = std::log(4.0L * R.convert_to<long double>()) +
                            std::pow(2.0L, -static_cast<long double>(r)) *
                                (static_cast<long double>(r) * r * std::log(tau) - std::log(qd));
    GrBound out;
    out.bound = static_cast<double>(std::exp(log_bound));
    out.holds = std::abs(observed) <= out.bound * (1.0 + 1e-12);
    return out;
}

// Direct evaluation of sum_{k/2 < m <= k, gcd(m, M2) = 1} eta(m) against its
// Moebius unfolding over the divisors of M2; exact integers on both sides.
inline bool moebius_unfold_check(const QuadChar& eta, const Integer& m2, uint64_t k) {
    if (gcd(eta.conductor(), m2) != 1) throw std::domain_error("eta conductor must be coprime to M2");
    if (m2 < 1) throw std::domain_error("M2 must be positive");
    if (k < 2) throw std::domain_error("k too small");
    const int64_t m2i = to_i64(m2);
    const std::vector<int8_t> table = eta.period_table();
    const uint64_t n = table.size();

    int64_t lhs = 0;
    for (uint64_t m = k / 2 + 1; m <= k; ++m)
        if (std::gcd(static_cast<int64_t>(m % static_cast<uint64_t>(m2i)), m2i) == 1)
            lhs += table[m % n];

    // square-free divisors carry the Moebius weight
    Factorization f = m2 == 1 ? Factorization{} : factorize(m2);
    int64_t rhs = 0;
    const size_t np = f.size();
    for (size_t mask = 0; mask < (size_t(1) << np); ++mask) {
        Integer d = 1;
        int mu = 1;
        for (size_t b = 0; b < np; ++b)
            if (mask & (size_t(1) << b)) {
                d *= f[b].prime;
                mu = -mu;
            }
        const uint64_t dd = static_cast<uint64_t>(to_i64(d));
        int64_t inner = 0;
        for (uint64_t nn = k / (2 * dd) + 1; nn <= k / dd; ++nn) inner += table[nn % n];
        rhs += mu * eta(d) * inner;
    }
    return lhs == rhs;
}

// No proper divisor of the conductor induces the same function.
inline bool is_primitive(const QuadChar& chi) {
    Integer n = chi.conductor();
    if (n == 1) return true;
    const int64_t N = to_i64(n);
    for (const auto& fe : factorize(n)) {
        const int64_t M = N / to_i64(fe.prime);
        bool witness = false;
        for (int64_t a = 1; a <= N && !witness; ++a) {
            int64_t b = a + M <= N ? a + M : a + M - N;
            if (std::gcd(a, N) != 1 || std::gcd(b, N) != 1) continue;
            if (chi.at(a) != chi.at(b)) witness = true;
        }
        if (!witness) return false;  // periodic mod N/p on units: induced
    }
    return true;
}

}  // namespace apcheck
