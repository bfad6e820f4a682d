#pragma once

// Arithmetic in F_p for word-sized odd primes: modular exponentiation,
// inversion, Euler-criterion square testing (kept table-free so parallel
// scans stay memory flat) and Tonelli-Shanks square roots.

#include "apcheck/integer.hpp"
#include "apcheck/kronecker.hpp"
#include "apcheck/primes.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

namespace apcheck {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return detail::mulmod_u64(a, b, p); }
inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) { return detail::powmod_u64(a, e, p); }

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint64_t invmod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("not invertible");
    // extended Euclid on int64 is fine for p < 2^62
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a);
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("not invertible");
    return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(p)) : static_cast<uint64_t>(t);
}

// Legendre symbol via Euler's criterion; p an odd prime
inline int euler_symbol(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    uint64_t r = powmod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

inline bool is_square_mod(uint64_t a, uint64_t p) { return euler_symbol(a, p) != -1; }

// Smaller of the two square roots of a mod p, if a is a QR.
inline std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (euler_symbol(a, p) != 1) return std::nullopt;
    uint64_t root;
    if (p % 4 == 3) {
        root = powmod(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        uint64_t q = p - 1;
        unsigned s = 0;
        while (q % 2 == 0) q /= 2, ++s;
        uint64_t z = 2;
        while (euler_symbol(z, p) != -1) ++z;
        uint64_t m = s;
        uint64_t c = powmod(z, q, p);
        uint64_t t = powmod(a, q, p);
        uint64_t r = powmod(a, (q + 1) / 2, p);
        while (t != 1) {
            uint64_t i = 0, tt = t;
            while (tt != 1) {
                tt = mulmod(tt, tt, p);
                ++i;
            }
            uint64_t b = c;
            for (uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
        root = r;
    }
    return std::min(root, p - root);
}

// v reduced into [0, p)
inline uint64_t reduce_mod(const Integer& v, uint64_t p) {
    Integer r = v % p;
    if (r < 0) r += p;
    return static_cast<uint64_t>(r);
}

// r = num/den mod p; throws when p divides the denominator
inline uint64_t reduce_mod(const Rational& r, uint64_t p) {
    uint64_t den = reduce_mod(denominator(r), p);
    if (den == 0) throw std::domain_error("denominator vanishes mod p");
    return mulmod(reduce_mod(numerator(r), p), invmod(den, p), p);
}

}  // namespace apcheck
