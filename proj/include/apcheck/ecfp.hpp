#pragma once

// Elliptic curves over prime fields: exhaustive point counting and traces,
// the 2-descent map Theta with kernel 2E(F_p), 2-power torsion shape via
// explicit halving, Legendre lambda-orbits, and the per-lemma verifiers
// built from them.

#include "apcheck/integer.hpp"
#include "apcheck/kronecker.hpp"
#include "apcheck/modp.hpp"
#include "apcheck/parallel.hpp"
#include "apcheck/primes.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace apcheck {

struct PointFp {
    bool inf = true;
    uint64_t x = 0, y = 0;

    static PointFp infinity() { return PointFp{}; }
    static PointFp affine(uint64_t x, uint64_t y) { return PointFp{false, x, y}; }

    friend bool operator==(const PointFp& a, const PointFp& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.x == b.x && a.y == b.y;
    }
};

// Y^2 = X^3 + c2 X^2 + c4 X + c6 over F_p, optionally in factored form
// Y^2 = (X - e1)(X - e2)(X - e3) with the root order preserved (the descent
// map components are indexed by it).
class CurveOverFp {
public:
    static CurveOverFp from_coeffs(uint64_t p, uint64_t c2, uint64_t c4, uint64_t c6) {
        CurveOverFp c(p);
        c.c2_ = c2 % p;
        c.c4_ = c4 % p;
        c.c6_ = c6 % p;
        c.factored_ = false;
        c.check_nonsingular();
        return c;
    }

    static CurveOverFp from_roots(uint64_t p, uint64_t e1, uint64_t e2, uint64_t e3) {
        CurveOverFp c(p);
        c.factored_ = true;
        c.roots_ = {e1 % p, e2 % p, e3 % p};
        const auto& e = c.roots_;
        if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2])
            throw std::domain_error("singular reduction");
        c.c2_ = (p - addmod(addmod(e[0], e[1], p), e[2], p)) % p;
        c.c4_ = addmod(addmod(mulmod(e[0], e[1], p), mulmod(e[0], e[2], p), p), mulmod(e[1], e[2], p), p);
        c.c6_ = (p - mulmod(mulmod(e[0], e[1], p), e[2], p)) % p;
        return c;
    }

    // Legendre curve Y^2 = X(X-1)(X-lambda)
    static CurveOverFp legendre(uint64_t p, uint64_t lambda) { return from_roots(p, 0, 1, lambda); }

    uint64_t p() const { return p_; }
    bool factored() const { return factored_; }
    const std::array<uint64_t, 3>& roots() const {
        if (!factored_) throw std::logic_error("requires full 2-torsion (factored model)");
        return roots_;
    }

    uint64_t f(uint64_t x) const {
        uint64_t v = addmod(x, c2_, p_);
        v = addmod(mulmod(v, x, p_), c4_, p_);
        return addmod(mulmod(v, x, p_), c6_, p_);
    }

    bool on_curve(const PointFp& q) const {
        if (q.inf) return true;
        return mulmod(q.y, q.y, p_) == f(q.x);
    }

    PointFp negate(const PointFp& q) const {
        if (q.inf) return q;
        return PointFp::affine(q.x, (p_ - q.y) % p_);
    }

    PointFp add(const PointFp& a, const PointFp& b) const {
        if (a.inf) return b;
        if (b.inf) return a;
        uint64_t s;
        if (a.x == b.x) {
            if (addmod(a.y, b.y, p_) == 0) return PointFp::infinity();
            // tangent slope
            uint64_t num = addmod(mulmod(3 % p_, mulmod(a.x, a.x, p_), p_),
                                  addmod(mulmod(2 % p_, mulmod(c2_, a.x, p_), p_), c4_, p_), p_);
            s = mulmod(num, invmod(addmod(a.y, a.y, p_), p_), p_);
        } else {
            s = mulmod(submod(b.y, a.y, p_), invmod(submod(b.x, a.x, p_), p_), p_);
        }
        uint64_t x3 = submod(submod(submod(mulmod(s, s, p_), c2_, p_), a.x, p_), b.x, p_);
        uint64_t y3 = submod(mulmod(s, submod(a.x, x3, p_), p_), a.y, p_);
        return PointFp::affine(x3, y3);
    }

    PointFp dbl(const PointFp& a) const { return add(a, a); }

    PointFp mul(PointFp a, uint64_t n) const {
        PointFp r = PointFp::infinity();
        while (n) {
            if (n & 1) r = add(r, a);
            a = dbl(a);
            n >>= 1;
        }
        return r;
    }

private:
    explicit CurveOverFp(uint64_t p) : p_(p) {
        if (p < 3 || !is_prime_u64(p)) throw std::domain_error("p must be an odd prime");
    }

    void check_nonsingular() const {
        // disc(x^3 + a x^2 + b x + c) = 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2
        uint64_t a = c2_, b = c4_, c = c6_;
        uint64_t t1 = mulmod(mulmod(mulmod(18 % p_, a, p_), b, p_), c, p_);
        uint64_t t2 = mulmod(mulmod(4 % p_, mulmod(mulmod(a, a, p_), a, p_), p_), c, p_);
        uint64_t t3 = mulmod(mulmod(a, a, p_), mulmod(b, b, p_), p_);
        uint64_t t4 = mulmod(4 % p_, mulmod(mulmod(b, b, p_), b, p_), p_);
        uint64_t t5 = mulmod(27 % p_, mulmod(c, c, p_), p_);
        uint64_t disc = submod(submod(addmod(submod(t1, t2, p_), t3, p_), t4, p_), t5, p_);
        if (disc == 0) throw std::domain_error("singular reduction");
    }

    uint64_t p_;
    bool factored_ = false;
    std::array<uint64_t, 3> roots_{};
    uint64_t c2_ = 0, c4_ = 0, c6_ = 0;
};

struct TraceResult {
    uint64_t count;  // #E(F_p)
    int64_t ap;      // p + 1 - count
    bool supersingular;
};

// #E(F_p) = p + 1 + sum_x (f(x)|p) by exhaustive x-enumeration: O(p) field
// operations, intended for p up to ~1e7.
inline TraceResult trace_ap(const CurveOverFp& curve) {
    const uint64_t p = curve.p();
    const long long pll = static_cast<long long>(p);
    int64_t sum = 0;
    for (uint64_t x = 0; x < p; ++x)
        sum += kronecker(static_cast<long long>(curve.f(x)), pll);
    TraceResult r;
    r.count = static_cast<uint64_t>(static_cast<int64_t>(p) + 1 + sum);
    r.ap = static_cast<int64_t>(p) + 1 - static_cast<int64_t>(r.count);
    if (r.ap * r.ap > 4 * static_cast<int64_t>(p))
        throw std::logic_error("Hasse bound violated; counting bug");
    r.supersingular = (r.ap % static_cast<int64_t>(p) == 0);
    return r;
}

// Image of Q under the 2-descent map, one square-class indicator (+1
// square, -1 nonsquare) per root. Entries always multiply to +1.
struct DescentImage {
    std::array<int, 3> cls{1, 1, 1};

    bool trivial() const { return cls[0] == 1 && cls[1] == 1 && cls[2] == 1; }
    DescentImage operator*(const DescentImage& o) const {
        return DescentImage{{cls[0] * o.cls[0], cls[1] * o.cls[1], cls[2] * o.cls[2]}};
    }
    friend bool operator==(const DescentImage& a, const DescentImage& b) { return a.cls == b.cls; }
};

// Theta(Q) = (classes of x(Q) - e_i). At a 2-torsion point the vanishing
// component is recovered from the product-of-entries-is-a-square rule;
// Theta(Q) = (1,1,1) exactly when Q is in 2E(F_p).
inline DescentImage descent_theta(const CurveOverFp& curve, const PointFp& q) {
    if (!curve.on_curve(q)) throw std::domain_error("point not on curve");
    DescentImage img;
    if (q.inf) return img;
    const uint64_t p = curve.p();
    const auto& e = curve.roots();
    int zero_at = -1;
    for (int i = 0; i < 3; ++i) {
        uint64_t d = submod(q.x, e[i], p);
        if (d == 0)
            zero_at = i;
        else
            img.cls[i] = euler_symbol(d, p);
    }
    if (zero_at >= 0) img.cls[zero_at] = img.cls[(zero_at + 1) % 3] * img.cls[(zero_at + 2) % 3];
    return img;
}

// (e_i, 0) is 2-divisible iff both differences to the other roots are squares.
inline bool two_torsion_divisible(const CurveOverFp& curve, int root_index) {
    const uint64_t p = curve.p();
    const auto& e = curve.roots();
    int j = (root_index + 1) % 3, k = (root_index + 2) % 3;
    return euler_symbol(submod(e[root_index], e[j], p), p) == 1 &&
           euler_symbol(submod(e[root_index], e[k], p), p) == 1;
}

struct TwoSylowShape {
    uint64_t order;   // #E(F_p)
    unsigned v;       // ord_2 of the order
    bool has_z2x4;    // some 2-torsion point is 2-divisible
    bool has_z2x8;    // some order-4 point is 2-divisible
};

inline TwoSylowShape two_sylow_shape(const CurveOverFp& curve) {
    const uint64_t p = curve.p();
    const auto& e = curve.roots();  // throws for non-factored models
    TwoSylowShape shape{};
    shape.order = trace_ap(curve).count;
    shape.v = 0;
    for (uint64_t n = shape.order; n % 2 == 0; n /= 2) ++shape.v;
    shape.has_z2x4 = false;
    shape.has_z2x8 = false;
    for (int i = 0; i < 3; ++i) {
        if (!two_torsion_divisible(curve, i)) continue;
        shape.has_z2x4 = true;
        // halve (e_i, 0): with s^2 = e_i - e_j, t^2 = e_i - e_k the four
        // preimages have x = e_i +- st
        int j = (i + 1) % 3, k = (i + 2) % 3;
        uint64_t s = *sqrt_mod(submod(e[i], e[j], p), p);
        uint64_t t = *sqrt_mod(submod(e[i], e[k], p), p);
        uint64_t st = mulmod(s, t, p);
        for (uint64_t x : {addmod(e[i], st, p), submod(e[i], st, p)}) {
            uint64_t fx = curve.f(x);
            auto y = sqrt_mod(fx, p);
            if (!y) throw std::logic_error("halving preimage not on curve");
            if (descent_theta(curve, PointFp::affine(x, *y)).trivial()) shape.has_z2x8 = true;
        }
    }
    return shape;
}

// The six lambda-invariants of a curve with full 2-torsion, as a sorted
// multiset.
inline std::vector<Rational> lambda_orbit(const Rational& lambda) {
    if (lambda == 0 || lambda == 1) throw std::domain_error("degenerate Legendre parameter");
    Rational one(1);
    std::vector<Rational> orbit{lambda,
                                one / lambda,
                                one - lambda,
                                one / (one - lambda),
                                (lambda - one) / lambda,
                                lambda / (lambda - one)};
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

// j-invariant of Y^2 = X(X-a)(X+c) for a Frey triple a + b + c = 0:
// j = 2^8 (a^2 - bc)^3 / (abc)^2.
inline Rational j_from_abc(const Integer& a, const Integer& b, const Integer& c) {
    if (a + b + c != 0) throw std::domain_error("not a Frey triple");
    if (a == 0 || b == 0 || c == 0) throw std::domain_error("degenerate triple");
    Integer num = 256 * pow(a * a - b * c, 3);
    Integer den = pow(a * b * c, 2);
    return Rational(num, den);
}

// For p = 3 (mod 4): every Y^2 = X(X-1)(X-eta^2) has a 2-divisible
// 2-torsion point. Scans eta in [2, (p-1)/2]; eta and p - eta give the
// same curve.
inline bool verify_mod4_lemma(uint64_t p) {
    if (!is_prime_u64(p) || p % 4 != 3) throw std::domain_error("requires a prime p = 3 (mod 4)");
    for (uint64_t eta = 2; eta <= (p - 1) / 2; ++eta) {
        uint64_t e = mulmod(eta, eta, p);
        CurveOverFp curve = CurveOverFp::from_roots(p, 0, 1, e);
        bool divisible = false;
        for (int i = 0; i < 3 && !divisible; ++i) divisible = two_torsion_divisible(curve, i);
        if (!divisible) return false;
    }
    return true;
}

// For p = 5 (mod 8): 2^3 exactly divides #F_{-1}(F_p).
inline bool verify_fminus1(uint64_t p) {
    if (!is_prime_u64(p) || p % 8 != 5) throw std::domain_error("requires a prime p = 5 (mod 8)");
    CurveOverFp curve = CurveOverFp::from_roots(p, 0, 1, p - 1);
    uint64_t count = trace_ap(curve).count;
    unsigned v = 0;
    for (uint64_t n = count; n % 2 == 0; n /= 2) ++v;
    return v == 3;
}

// The explicit order-4 point above (2*lambda, 0) on Y^2 = X(X-2)(X-2*lambda)
// for a conic point 2t^2 + 2v^2 = 1, checked for both square roots of -1.
// On the conic, (128iv^5 - 64iv^3)t - 128v^6 + 96v^4 - 16v^2 equals
// X(X-2)(X-2*lambda) at X = 4ivt + 2*lambda, i.e. it is the SQUARE of the
// point's second coordinate; the point itself is (X, 8itv(t + iv)).
inline bool verify_order4_point(uint64_t p, uint64_t t, uint64_t v) {
    if (!is_prime_u64(p) || p % 4 != 1) throw std::domain_error("requires a prime p = 1 (mod 4)");
    t %= p;
    v %= p;
    uint64_t t2 = mulmod(t, t, p), v2 = mulmod(v, v, p);
    if (addmod(addmod(t2, t2, p), addmod(v2, v2, p), p) != 1)
        throw std::domain_error("not on the descent conic");
    if (t == 0 || v == 0) throw std::domain_error("degenerate conic point");
    uint64_t lambda = addmod(t2, t2, p);
    uint64_t two_lambda = addmod(lambda, lambda, p);
    CurveOverFp curve = CurveOverFp::from_roots(p, 0, 2, two_lambda);
    // i = g^((p-1)/4) for the first nonresidue g >= 2
    uint64_t g = 2;
    while (euler_symbol(g, p) != -1) ++g;
    uint64_t i0 = powmod(g, (p - 1) / 4, p);
    PointFp two_torsion = PointFp::affine(two_lambda, 0);
    for (uint64_t i : {i0, p - i0}) {
        uint64_t x = addmod(mulmod(mulmod(4 % p, i, p), mulmod(v, t, p), p), two_lambda, p);
        uint64_t v3 = mulmod(v2, v, p), v4 = mulmod(v2, v2, p);
        uint64_t v5 = mulmod(v4, v, p), v6 = mulmod(v4, v2, p);
        uint64_t y_sq = submod(
            mulmod(mulmod(i, submod(mulmod(128 % p, v5, p), mulmod(64 % p, v3, p), p), p), t, p),
            submod(addmod(mulmod(128 % p, v6, p), mulmod(16 % p, v2, p), p), mulmod(96 % p, v4, p), p), p);
        if (y_sq != curve.f(x)) return false;
        // y = 8itv(t + iv)
        uint64_t y = mulmod(mulmod(mulmod(8 % p, i, p), mulmod(t, v, p), p),
                            addmod(t, mulmod(i, v, p), p), p);
        PointFp pt = PointFp::affine(x, y);
        if (!curve.on_curve(pt)) return false;
        if (!(curve.dbl(pt) == two_torsion)) return false;
    }
    return true;
}

enum class KroStatus { pass, fail, bad_reduction, ordinary };

struct KroScanEntry {
    uint64_t p;
    KroStatus status;
};

// Scans primes p = 3 (mod 8) in [lo, hi] for an integral curve
// Y^2 = (X-e1)(X-e2)(X-e3): at every prime of good supersingular reduction,
// all six lambda-invariants must be nonresidues.
inline std::vector<KroScanEntry> verify_kro_scan(const Integer& e1, const Integer& e2, const Integer& e3,
                                                 uint64_t lo, uint64_t hi) {
    if (e1 == e2 || e1 == e3 || e2 == e3) throw std::domain_error("requires full 2-torsion");
    const Integer bad = (e1 - e2) * (e1 - e3) * (e2 - e3);
    const std::vector<Rational> orbit = lambda_orbit(Rational(e3 - e1, e2 - e1));
    std::vector<KroScanEntry> entries;
    for_each_prime(std::max<uint64_t>(lo, 3), hi, [&](uint64_t p) {
        if (p % 8 != 3) return;
        KroScanEntry entry{p, KroStatus::pass};
        if (bad % p == 0) {
            entry.status = KroStatus::bad_reduction;
        } else {
            CurveOverFp curve = CurveOverFp::from_roots(p, reduce_mod(e1, p), reduce_mod(e2, p), reduce_mod(e3, p));
            if (!trace_ap(curve).supersingular) {
                entry.status = KroStatus::ordinary;
            } else {
                for (const Rational& lam : orbit)
                    if (kronecker(lam, Integer(p)) != -1) entry.status = KroStatus::fail;
            }
        }
        entries.push_back(entry);
    });
    return entries;
}

}  // namespace apcheck
