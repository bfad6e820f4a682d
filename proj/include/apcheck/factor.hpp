#pragma once

// Factorization and the multiplicative statistics built on it: greatest
// prime factor P(n), odd radical, divisor count, p-adic valuations, the
// squarefree kernel, Kraus's mu, and the smooth/rough splitting of a term.
//
// Strategy: trial division by sieved primes up to 1e6, then Brent's rho
// with a fixed seed sequence on whatever survives. Deterministic.

#include "apcheck/integer.hpp"
#include "apcheck/primes.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace apcheck {

struct FactorExp {
    Integer prime;
    unsigned exp;
};

using Factorization = std::vector<FactorExp>;

namespace detail {

inline const std::vector<uint64_t>& trial_primes() {
    static const std::vector<uint64_t> table = sieve_primes(1'000'000);
    return table;
}

inline uint64_t pollard_rho_u64(uint64_t n) {
    // Floyd cycle with batched gcds; n must be odd, composite, > 1.
    // The polynomial constant c advances deterministically on failure.
    for (uint64_t c = 1;; ++c) {
        auto f = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        uint64_t x = 2, y = 2, d = 1, q = 1;
        int batch = 0;
        bool cycled = false;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) {
                cycled = true;
                break;
            }
            q = mulmod_u64(q, diff, n);
            if (++batch == 64) {
                d = std::gcd(q, n);
                q = 1;
                batch = 0;
            }
        }
        if (d == 1 && !cycled) d = std::gcd(q, n);
        if (d == n) {
            // a batch swallowed the factor: redo this c with per-step gcds
            x = 2, y = 2, d = 1;
            while (d == 1) {
                x = f(x);
                y = f(f(y));
                uint64_t diff = x > y ? x - y : y - x;
                if (diff == 0) break;
                d = std::gcd(diff, n);
            }
        }
        if (d > 1 && d != n) return d;
    }
}

inline Integer pollard_rho_big(const Integer& n) {
    for (Integer c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        auto step = [&](const Integer& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = gcd(abs(x - y) == 0 ? n : abs(x - y), n);
        }
        if (d != n) return d;
    }
}

inline void factor_tail(Integer m, std::map<Integer, unsigned>& out) {
    if (m == 1) return;
    if (is_probable_prime(m)) {
        ++out[m];
        return;
    }
    Integer d;
    if (m <= std::numeric_limits<uint64_t>::max())
        d = Integer(pollard_rho_u64(static_cast<uint64_t>(m)));
    else
        d = pollard_rho_big(m);
    factor_tail(d, out);
    factor_tail(m / d, out);
}

}  // namespace detail

// Factorization of |n|; throws for n = 0.
inline Factorization factorize(const Integer& n) {
    if (n == 0) throw std::domain_error("zero has no factorization");
    Integer m = abs(n);
    std::map<Integer, unsigned> acc;
    for (uint64_t p : detail::trial_primes()) {
        if (Integer(p) * p > m) break;
        while (m % p == 0) {
            m /= p;
            ++acc[Integer(p)];
        }
        if (m == 1) break;
    }
    if (m > 1) detail::factor_tail(m, acc);
    Factorization out;
    out.reserve(acc.size());
    for (const auto& [p, e] : acc) out.push_back({p, e});
    return out;
}

inline Integer rebuild(const Factorization& f) {
    Integer v = 1;
    for (const auto& fe : f) v *= pow(fe.prime, fe.exp);
    return v;
}

struct NumberStats {
    Integer n;  // the input (may be negative)
    Factorization factors;
    Integer greatest_prime;  // P(n); P(+-1) = 1
    Integer rad_odd;         // product of distinct odd primes dividing n
    Integer tau;             // divisor count of |n|

    unsigned ord(const Integer& p) const {
        for (const auto& fe : factors)
            if (fe.prime == p) return fe.exp;
        return 0;
    }
};

inline NumberStats multiplicative_stats(const Integer& n) {
    NumberStats s;
    s.n = n;
    s.factors = factorize(n);
    s.greatest_prime = 1;
    s.rad_odd = 1;
    s.tau = 1;
    for (const auto& fe : s.factors) {
        if (fe.prime > s.greatest_prime) s.greatest_prime = fe.prime;
        if (fe.prime != 2) s.rad_odd *= fe.prime;
        s.tau *= fe.exp + 1;
    }
    return s;
}

inline unsigned ord_p(const Integer& n, const Integer& p) {
    if (n == 0) throw std::domain_error("ord_p of zero");
    Integer m = abs(n);
    unsigned e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

inline Integer radical(const Integer& n) {
    Integer r = 1;
    for (const auto& fe : factorize(n)) r *= fe.prime;
    return r;
}

inline Integer rad_odd(const Integer& n) { return multiplicative_stats(n).rad_odd; }

inline Integer tau_of(const Integer& n) { return multiplicative_stats(n).tau; }

inline bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    for (const auto& fe : factorize(n))
        if (fe.exp > 1) return false;
    return true;
}

// sign(n) times the product of primes with odd exponent in n
inline Integer squarefree_kernel(const Integer& n) {
    if (n == 0) throw std::domain_error("squarefree kernel of zero");
    Integer k = n < 0 ? Integer(-1) : Integer(1);
    for (const auto& fe : factorize(n))
        if (fe.exp % 2 == 1) k *= fe.prime;
    return k;
}

// n * prod_{q | n} (1 + 1/q), always an integer
inline Integer mu_kraus(const Integer& n) {
    if (n <= 0) throw std::domain_error("mu is defined for positive integers");
    Integer v = n;
    for (const auto& fe : factorize(n)) v = v / fe.prime * (fe.prime + 1);
    return v;
}

struct SmoothSplit {
    Integer smooth;         // product of prime powers with prime < k
    Integer rough;          // the complementary part
    bool rough_is_power;    // rough part is a perfect ell-th power
};

// Splits m >= 1 as (k-smooth part) * (rough part) and tests whether the
// rough part is a perfect ell-th power.
inline SmoothSplit smooth_split(const Integer& m, const Integer& k, unsigned ell) {
    if (m <= 0) throw std::domain_error("smooth_split requires a positive integer");
    if (k < 2 || ell < 2) throw std::domain_error("smooth_split requires k >= 2, ell >= 2");
    SmoothSplit out{1, m, false};
    for (uint64_t p : detail::trial_primes()) {
        if (Integer(p) >= k) break;
        while (out.rough % p == 0) {
            out.rough /= p;
            out.smooth *= p;
        }
    }
    if (k > 1'000'001 && out.rough > 1) {
        // rare path: smoothness bound beyond the trial table
        for (const auto& fe : factorize(out.rough)) {
            if (fe.prime < k) {
                Integer q = pow(fe.prime, fe.exp);
                out.smooth *= q;
                out.rough /= q;
            }
        }
    }
    out.rough_is_power = is_perfect_power(out.rough, ell);
    return out;
}

}  // namespace apcheck
