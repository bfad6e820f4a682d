#pragma once

// Exact integer identities and searches that sit outside the modular
// machinery: the two odd-product square identities that force the signed
// form of the main conjecture, and the exhaustive search for coprime odd
// solutions of T^4 + V^4 = 2 U^2.

#include "apcheck/integer.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace apcheck {

// variant 1:  prod_{j=-2m}^{2m-1} (2j+1) = ( prod_{j=0}^{2m-1} (2j+1) )^2
// variant 2:  prod_{j=-2m^2-2m}^{2m^2+2m} (2j+1)
//               = ( (2m+1) * prod_{j=0}^{2m^2+2m-1} (2j+1) )^2
inline bool oddprod_identity_check(const Integer& m, int variant) {
    if (m < 1) throw std::domain_error("identity requires m >= 1");
    if (variant != 1 && variant != 2) throw std::invalid_argument("variant must be 1 or 2");
    Integer lo, hi, half_hi, extra = 1;
    if (variant == 1) {
        lo = -2 * m;
        hi = 2 * m - 1;
        half_hi = 2 * m - 1;
    } else {
        Integer b = 2 * m * m + 2 * m;
        lo = -b;
        hi = b;
        half_hi = b - 1;
        extra = 2 * m + 1;
    }
    Integer lhs = 1;
    for (Integer j = lo; j <= hi; ++j) lhs *= 2 * j + 1;
    Integer rhs = extra;
    for (Integer j = 0; j <= half_hi; ++j) rhs *= 2 * j + 1;
    return lhs == rhs * rhs;
}

struct QuarticSolution {
    int64_t t, v, u;
};

// All (t, v, u) with t^4 + v^4 = 2 u^2, t <= v <= limit, t and v odd and
// coprime, u > 0. The classical descent says only (1, 1, 1) exists; the
// search is the desk-scale witness.
inline std::vector<QuarticSolution> quartic_descent_search(int64_t limit) {
    if (limit < 1) throw std::domain_error("limit must be positive");
    using u128 = unsigned __int128;
    std::vector<QuarticSolution> out;
    std::vector<u128> fourth(static_cast<size_t>(limit) + 1, 0);
    for (int64_t t = 1; t <= limit; t += 2) {
        u128 t2 = static_cast<u128>(t) * static_cast<u128>(t);
        fourth[static_cast<size_t>(t)] = t2 * t2;
    }
    for (int64_t t = 1; t <= limit; t += 2) {
        for (int64_t v = t; v <= limit; v += 2) {
            u128 half = (fourth[static_cast<size_t>(t)] + fourth[static_cast<size_t>(v)]) / 2;
            u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(half)));
            while (r > 0 && r * r > half) --r;
            while ((r + 1) * (r + 1) <= half) ++r;
            if (r * r != half) continue;
            if (std::gcd(t, v) != 1) continue;
            out.push_back({t, v, static_cast<int64_t>(static_cast<uint64_t>(r))});
        }
    }
    return out;
}

}  // namespace apcheck
