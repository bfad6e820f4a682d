#pragma once

// The von Mangoldt function and the Chebyshev sums theta, psi, and
// theta(x; a, m) restricted to a residue class. All sums use compensated
// accumulation; ranges are swept with the segmented prime iterator.

#include "apcheck/factor.hpp"
#include "apcheck/primes.hpp"
#include "apcheck/summation.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace apcheck {

// log p if m = p^r, else 0
inline double mangoldt(uint64_t m) {
    if (m < 2) return 0.0;
    for (uint64_t p : detail::trial_primes()) {
        if (p * p > m) return std::log(static_cast<double>(m));  // m is prime
        if (m % p == 0) {
            uint64_t q = m;
            while (q % p == 0) q /= p;
            return q == 1 ? std::log(static_cast<double>(p)) : 0.0;
        }
    }
    // no factor below 1e6 and m > 1e12
    if (is_prime_u64(m)) return std::log(static_cast<double>(m));
    Factorization f = factorize(Integer(m));
    return f.size() == 1 ? std::log(f[0].prime.convert_to<double>()) : 0.0;
}

// Calls fn(m, p, log p) for every prime power m = p^r in [lo, hi].
template <class Fn>
void for_each_prime_power(uint64_t lo, uint64_t hi, Fn&& fn) {
    if (hi < 2) return;
    if (lo < 2) lo = 2;
    // proper powers p^r <= hi have p <= sqrt(hi)
    uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
    for_each_prime(2, root, [&](uint64_t p) {
        double lp = std::log(static_cast<double>(p));
        for (unsigned __int128 q = static_cast<unsigned __int128>(p) * p; q <= hi; q *= p)
            if (q >= lo) fn(static_cast<uint64_t>(q), p, lp);
    });
    for_each_prime(lo, hi, [&](uint64_t p) { fn(p, p, std::log(static_cast<double>(p))); });
}

struct ResidueClass {
    uint64_t a;
    uint64_t m;
};

struct ChebyshevSums {
    double theta = 0.0;     // sum of log p over primes in range
    double psi = 0.0;       // sum of Lambda(m) over range
    double theta_ap = 0.0;  // theta restricted to p = a (mod m), if requested
    uint64_t primes = 0;
};

// Sums over the half-open interval (lo, hi]; lo = 1 gives the classical
// theta(hi), psi(hi). Throws if the residue class is not reduced.
inline ChebyshevSums mangoldt_sums(uint64_t lo, uint64_t hi,
                                   std::optional<ResidueClass> residue = std::nullopt) {
    if (residue && std::gcd(residue->a, residue->m) != 1)
        throw std::domain_error("residue not coprime");
    ChebyshevSums out;
    if (hi <= lo) return out;
    CompensatedSum theta, psi, theta_ap;
    for_each_prime(lo + 1, hi, [&](uint64_t p) {
        double lp = std::log(static_cast<double>(p));
        theta.add(lp);
        psi.add(lp);
        ++out.primes;
        if (residue && p % residue->m == residue->a) theta_ap.add(lp);
    });
    // proper prime powers in (lo, hi]
    uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
    for_each_prime(2, root, [&](uint64_t p) {
        double lp = std::log(static_cast<double>(p));
        for (unsigned __int128 q = static_cast<unsigned __int128>(p) * p; q <= hi; q *= p)
            if (q > lo) psi.add(lp);
    });
    out.theta = theta.value();
    out.psi = psi.value();
    out.theta_ap = theta_ap.value();
    return out;
}

inline double theta(uint64_t x) { return mangoldt_sums(1, x).theta; }
inline double psi(uint64_t x) { return mangoldt_sums(1, x).psi; }

// first Chebyshev function over the progression a mod m; empty range is 0
inline double theta_progression(uint64_t x, uint64_t a, uint64_t m) {
    return mangoldt_sums(1, x, ResidueClass{a % m, m}).theta_ap;
}

}  // namespace apcheck
