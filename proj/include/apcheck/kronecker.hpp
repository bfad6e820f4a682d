#pragma once

// Kronecker symbol (a|n), the full extension of the Jacobi symbol to all
// integer n (negative, even or zero). Agrees with the Legendre symbol for
// odd prime n, and is completely multiplicative in both arguments.

#include "apcheck/integer.hpp"

#include <cstdint>
#include <limits>
#include <utility>

namespace apcheck {

namespace detail {

template <class T>
int kronecker_impl(T a, T n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // peel the 2-part of n; (a|2) is 0 for even a, +-1 by a mod 8 otherwise
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int flips = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++flips;
        }
        if (flips % 2 == 1) {
            int r8 = static_cast<int>(a % 8);
            if (r8 < 0) r8 += 8;
            if (r8 == 3 || r8 == 5) result = -result;
        }
    }
    // n now odd and positive: Jacobi loop with reciprocity
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            int r8 = static_cast<int>(n % 8);
            if (r8 == 3 || r8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace detail

inline int kronecker(long long a, long long n) { return detail::kronecker_impl<long long>(a, n); }

inline int kronecker(const Integer& a, const Integer& n) {
    if (a >= std::numeric_limits<long long>::min() && a <= std::numeric_limits<long long>::max() &&
        n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
        return detail::kronecker_impl<long long>(static_cast<long long>(a), static_cast<long long>(n));
    return detail::kronecker_impl<Integer>(a, n);
}

// (r|n) for a rational r with ord_q(r) = 0 at every prime q | n.
inline int kronecker(const Rational& r, const Integer& n) {
    return kronecker(numerator(r), n) * kronecker(denominator(r), n);
}

}  // namespace apcheck
