#pragma once

// Exact integer and rational arithmetic used everywhere else.
// Integer is arbitrary precision; Rational is always normalized
// (positive denominator, gcd(num, den) = 1).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace apcheck {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::pow;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

inline int64_t to_i64(const Integer& v) {
    if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
        throw std::overflow_error("value does not fit in 64 bits: " + v.str());
    return static_cast<int64_t>(v);
}

inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

// Floor of the r-th root of n >= 0.
inline Integer iroot(const Integer& n, unsigned r) {
    if (r == 0) throw std::domain_error("0th root");
    if (n < 0) throw std::domain_error("iroot of negative value");
    if (n == 0 || n == 1 || r == 1) return n;
    if (r == 2) return isqrt(n);
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    if (r >= bits) return 1;  // 2^r > n, so the root collapses to 1
    Integer x = Integer(1) << (bits / r + 1);  // always above the true root
    while (true) {
        Integer y = ((r - 1) * x + n / pow(x, r - 1)) / r;
        if (y >= x) break;
        x = y;
    }
    while (pow(x, r) > n) --x;
    while (pow(x + 1, r) <= n) ++x;
    return x;
}

inline bool is_perfect_power(const Integer& n, unsigned r) {
    if (n < 0) {
        if (r % 2 == 0) return false;
        return is_perfect_power(-n, r);
    }
    if (n <= 1) return true;
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    if (r >= bits) return false;  // would need a base >= 2 and 2^r > n
    return pow(iroot(n, r), r) == n;
}

// normalized residue in [0, m)
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += abs(m);
    return r;
}

inline Integer parse_integer(const std::string& s) {
    try {
        return Integer(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

// "a/b" or plain "a"
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(num, den);
}

}  // namespace apcheck
