#pragma once

// Prime generation and primality testing. The segmented iterator keeps
// memory flat for scans up to 1e8 and beyond; Miller-Rabin with the fixed
// 12-base set is deterministic for all n < 3.317e24.

#include "apcheck/integer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace apcheck {

inline std::vector<uint64_t> sieve_primes(uint64_t limit) {
    std::vector<uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<uint8_t> composite(limit + 1, 0);
    for (uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    for (uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

// Calls fn(p) for every prime p in [lo, hi], ascending. Segmented, so the
// working set is O(sqrt(hi) + segment).
template <class Fn>
void for_each_prime(uint64_t lo, uint64_t hi, Fn&& fn) {
    if (hi < 2 || lo > hi) return;
    if (lo < 2) lo = 2;
    const uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
    const std::vector<uint64_t> base = sieve_primes(root);
    constexpr uint64_t kSegment = 1 << 20;
    std::vector<uint8_t> seg;
    for (uint64_t start = lo; start <= hi; start += kSegment) {
        const uint64_t end = std::min(hi, start + kSegment - 1);
        seg.assign(end - start + 1, 1);
        for (uint64_t p : base) {
            if (p * p > end) break;
            uint64_t first = std::max(p * p, ((start + p - 1) / p) * p);
            for (uint64_t m = first; m <= end; m += p) seg[m - start] = 0;
        }
        for (uint64_t m = start; m <= end; ++m)
            if (seg[m - start] && m >= 2) fn(m);
        if (end == hi) break;  // avoid wraparound when hi is near UINT64_MAX
    }
}

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

inline constexpr uint64_t kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace detail

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    for (uint64_t a : detail::kMrBases) {
        uint64_t x = detail::powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Deterministic for n < 3.317e24 (12-base Miller-Rabin); the same bases are
// used beyond that, where the test is only probabilistic.
inline bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    if (n <= std::numeric_limits<uint64_t>::max()) return is_prime_u64(static_cast<uint64_t>(n));
    for (uint64_t p : detail::kMrBases)
        if (n % p == 0) return false;
    Integer d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    for (uint64_t a : detail::kMrBases) {
        Integer x = boost::multiprecision::powm(Integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace apcheck
