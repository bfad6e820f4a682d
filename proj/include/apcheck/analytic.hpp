#pragma once

// The analytic toolbox: Selberg's inner-product form of the large sieve,
// the averaged character-sum pipeline it feeds, exceptional-zero repulsion
// arithmetic, the conductor scan for P(N) > 0.94 log N, explicit Chebyshev
// bound checks, and prime-number-theorem residuals for quadratic
// characters.

#include "apcheck/charlab.hpp"
#include "apcheck/chebyshev.hpp"
#include "apcheck/parallel.hpp"
#include "apcheck/summation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace apcheck {

struct SelbergResult {
    double lhs;  // sum over i of |x . y_i|^2
    double rhs;  // |x|^2 max_i sum_j |y_i . y_j|
    bool holds;
};

// sum_i |x.y_i|^2 <= |x|^2 max_i sum_j |y_i.y_j| for vectors in an inner
// product space.
inline SelbergResult selberg_check(const std::vector<double>& x,
                                   const std::vector<std::vector<double>>& ys) {
    for (const auto& y : ys)
        if (y.size() != x.size()) throw std::domain_error("length mismatch");
    auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
        CompensatedSum s;
        for (size_t i = 0; i < a.size(); ++i) s.add(a[i] * b[i]);
        return s.value();
    };
    SelbergResult out{0.0, 0.0, false};
    CompensatedSum lhs;
    for (const auto& y : ys) {
        double d = dot(x, y);
        lhs.add(d * d);
    }
    out.lhs = lhs.value();
    double norm_x = dot(x, x);
    double max_row = 0.0;
    for (size_t i = 0; i < ys.size(); ++i) {
        CompensatedSum row;
        for (size_t j = 0; j < ys.size(); ++j) row.add(std::abs(dot(ys[i], ys[j])));
        max_row = std::max(max_row, row.value());
    }
    out.rhs = norm_x * max_row;
    out.holds = out.lhs <= out.rhs + 1e-9 * std::abs(out.rhs);
    return out;
}

namespace detail {

// exact sum of chi1(m)chi2(m) over (lo, hi] using periodicity
inline int64_t periodic_pair_sum(const std::vector<int8_t>& t1, const std::vector<int8_t>& t2,
                                 uint64_t lo, uint64_t hi) {
    const uint64_t n1 = t1.size(), n2 = t2.size();
    const uint64_t period = std::lcm(n1, n2);
    const uint64_t len = hi - lo;
    auto value_at = [&](uint64_t m) { return int64_t(t1[m % n1]) * t2[m % n2]; };
    if (len <= 2 * period) {
        int64_t s = 0;
        for (uint64_t m = lo + 1; m <= hi; ++m) s += value_at(m);
        return s;
    }
    int64_t per = 0;
    for (uint64_t m = 0; m < period; ++m) per += value_at(m);
    const uint64_t full = len / period, rem = len % period;
    int64_t s = per * static_cast<int64_t>(full);
    for (uint64_t i = 1; i <= rem; ++i) s += value_at(lo + i);
    return s;
}

}  // namespace detail

struct LargeSievePipeline {
    int64_t k = 0;
    size_t num_chars = 0;
    double norm_x2 = 0;           // sum of Lambda(m)^2 over (k/2, k]
    double norm_x2_cap = 0;       // log k * (psi(k) - psi(k/2))
    bool norm_x2_capped = false;
    std::vector<double> dots;     // x . y per character
    double avg_sq = 0;            // (1/#) sum |x.y|^2
    int64_t max_diag = 0;         // max |y.y|
    int64_t max_offdiag = 0;      // max |y.y'| over distinct pairs
    double max_row_avg = 0;       // max_i (1/#) sum_j |y_i.y_j|
    double selberg_rhs = 0;       // |x|^2 * max_row_avg
    double varpi = 0.1239 * 0.1239;
    double varpi_k2 = 0;
    bool avg_below_varpi_k2 = false;
    double diag_avg_cap = 0;      // (k+1) / (34 log k), the counted-diagonal line
    // the text asserts "1/68 < varpi^2" while only 1/68 < varpi holds
    bool sixty_eighth_below_varpi = false;
    bool sixty_eighth_below_varpi_sq = false;
};

inline LargeSievePipeline large_sieve_pipeline(int64_t k, const std::vector<QuadChar>& chars) {
    if (k < 4) throw std::domain_error("k too small");
    if (chars.empty()) throw std::domain_error("need at least one character");
    for (size_t i = 0; i < chars.size(); ++i)
        for (size_t j = i + 1; j < chars.size(); ++j)
            if (chars[i] == chars[j]) throw std::domain_error("duplicate characters");

    LargeSievePipeline out;
    out.k = k;
    out.num_chars = chars.size();
    const uint64_t lo = static_cast<uint64_t>(k) / 2, hi = static_cast<uint64_t>(k);

    CompensatedSum norm_x2, psi_range;
    for_each_prime_power(lo + 1, hi, [&](uint64_t, uint64_t, double logp) {
        norm_x2.add(logp * logp);
        psi_range.add(logp);
    });
    out.norm_x2 = norm_x2.value();
    out.norm_x2_cap = std::log(static_cast<double>(k)) * psi_range.value();
    out.norm_x2_capped = out.norm_x2 <= out.norm_x2_cap * (1 + 1e-12);

    CompensatedSum avg_sq;
    for (const auto& chi : chars) {
        double d = char_sum_mangoldt(chi, lo, hi);
        out.dots.push_back(d);
        avg_sq.add(d * d);
    }
    out.avg_sq = avg_sq.value() / static_cast<double>(chars.size());

    std::vector<std::vector<int8_t>> tables;
    tables.reserve(chars.size());
    for (const auto& chi : chars) tables.push_back(chi.period_table());
    for (size_t i = 0; i < chars.size(); ++i) {
        int64_t row = 0;
        for (size_t j = 0; j < chars.size(); ++j) {
            int64_t g = detail::periodic_pair_sum(tables[i], tables[j], lo, hi);
            if (i == j)
                out.max_diag = std::max(out.max_diag, g);
            else
                out.max_offdiag = std::max(out.max_offdiag, std::abs(g));
            row += std::abs(g);
        }
        out.max_row_avg = std::max(out.max_row_avg, static_cast<double>(row) / chars.size());
    }
    out.selberg_rhs = out.norm_x2 * out.max_row_avg;
    out.varpi_k2 = out.varpi * static_cast<double>(k) * static_cast<double>(k);
    out.avg_below_varpi_k2 = out.avg_sq <= out.varpi_k2;
    out.diag_avg_cap = (static_cast<double>(k) + 1) / (34.0 * std::log(static_cast<double>(k)));
    out.sixty_eighth_below_varpi = (1.0 / 68.0) < out.varpi;
    out.sixty_eighth_below_varpi_sq = (1.0 / 68.0) < out.varpi * out.varpi;
    return out;
}

struct RepulsionChain {
    Integer n1;
    int steps;
    std::vector<long double> log_lower;   // log of N_j lower bound: 2^(j-1) log N1
    std::vector<Integer> exact_lower;     // N1^(2^(j-1)) while representable
    std::vector<long double> p_lower;     // 0.94 * 2^(j-1) * log N1
    long double recip_sum_bound = 0;      // finite sum of 1/p_lower
    long double recip_geometric = 0;      // its limit, 2 / (0.94 log N1)
    long double paper_recip_bound = 0;    // 2.13 / log N1
    bool refutes_hypothesis = false;      // paper bound < 0.166
};

inline RepulsionChain repulsion_chain(const Integer& n1, int steps) {
    if (n1 < 3 || steps < 1) throw std::domain_error("requires N1 >= 3 and s >= 1");
    RepulsionChain out;
    out.n1 = n1;
    out.steps = steps;
    const long double log_n1 = std::log(n1.convert_to<long double>());
    long double scale = 1.0L;
    CompensatedSum recip;
    for (int j = 1; j <= steps; ++j) {
        out.log_lower.push_back(scale * log_n1);
        if (scale * log_n1 < 4096.0L * 0.6931L)
            out.exact_lower.push_back(pow(n1, static_cast<unsigned>(1) << (j - 1)));
        out.p_lower.push_back(0.94L * scale * log_n1);
        recip.add(static_cast<double>(1.0L / (0.94L * scale * log_n1)));
        scale *= 2.0L;
    }
    out.recip_sum_bound = recip.value();
    out.recip_geometric = 2.0L / (0.94L * log_n1);
    out.paper_recip_bound = 2.13L / log_n1;
    out.refutes_hypothesis = out.paper_recip_bound < 0.166L;
    return out;
}

// Largest N1 consistent with 0.166 <= 2.13 / log N1, integer exact.
inline int64_t repulsion_threshold() {
    long double target = 2.13L / 0.166L;
    int64_t n = static_cast<int64_t>(std::exp(target));
    while (std::log(static_cast<long double>(n)) > target) --n;
    while (std::log(static_cast<long double>(n + 1)) <= target) ++n;
    return n;
}

struct CondboundResult {
    int64_t limit = 0;
    int64_t scanned = 0;
    int64_t argmin = 0;
    int64_t argmin_p = 0;
    double min_ratio = 0;
    std::vector<int64_t> violations;  // N with P(N)/log N <= 0.94
};

using CondboundRow = std::function<void(int64_t n, int64_t p, double log_n, double ratio)>;

// Scans every quadratic-character conductor N <= limit (equivalently all
// |fundamental discriminants|: odd squarefree, 4m and 8m with m odd
// squarefree) for the minimum of P(N)/log N.
inline CondboundResult condbound_scan(int64_t limit, const CondboundRow& row_sink = nullptr) {
    if (limit < 3) throw std::domain_error("limit must be at least 3");
    if (limit > 200'000'000) throw std::domain_error("scan limit capped at 2e8");
    const size_t n = static_cast<size_t>(limit) + 1;
    std::vector<uint32_t> gpf(n, 0);
    for (size_t i = 2; i < n; ++i)
        if (gpf[i] == 0)
            for (size_t j = i; j < n; j += i) gpf[j] = static_cast<uint32_t>(i);
    std::vector<uint8_t> sf(n, 1);
    for (size_t p = 2; p * p < n; ++p)
        if (gpf[p] == p)
            for (size_t j = p * p; j < n; j += p * p) sf[j] = 0;

    CondboundResult out;
    out.limit = limit;
    out.min_ratio = std::numeric_limits<double>::infinity();
    auto consider = [&](int64_t N, int64_t P) {
        double logn = std::log(static_cast<double>(N));
        double ratio = static_cast<double>(P) / logn;
        ++out.scanned;
        if (row_sink) row_sink(N, P, logn, ratio);
        if (ratio < out.min_ratio) {
            out.min_ratio = ratio;
            out.argmin = N;
            out.argmin_p = P;
        }
        if (ratio <= 0.94) out.violations.push_back(N);
    };
    for (int64_t N = 3; N <= limit; ++N) {
        if (N % 2 == 1) {
            if (sf[static_cast<size_t>(N)]) consider(N, gpf[static_cast<size_t>(N)]);
        } else if (N % 8 == 4) {
            int64_t m = N / 4;
            if (m == 1 || (m % 2 == 1 && sf[static_cast<size_t>(m)]))
                consider(N, m == 1 ? 2 : gpf[static_cast<size_t>(m)]);
        } else if (N % 16 == 8) {
            int64_t m = N / 8;
            if (m == 1 || (m % 2 == 1 && sf[static_cast<size_t>(m)]))
                consider(N, m == 1 ? 2 : gpf[static_cast<size_t>(m)]);
        }
    }
    return out;
}

struct ThetaSampleB {
    uint64_t k;
    double lhs;  // theta(k;3,8) - theta(k/2;3,8)
    double rhs;  // (1 - 3*eps) k / 8 with eps = 0.002811
    double ratio;
    bool meets;
};

struct ThetaSampleC {
    uint64_t k;
    double lhs_log;  // log prod_{q<=k} (1 + 1/q)
    double rhs_log;  // log(2 log k)
    double ratio;    // lhs/rhs in log space
    bool asserted;   // the bound is only claimed for k >= 1e8
    bool holds;
};

struct ThetaCheckReport {
    uint64_t limit = 0;
    bool schoenfeld_ok = true;     // theta(x) < 1.000081 x for all x <= limit
    uint64_t first_violation = 0;
    double max_theta_over_x = 0;
    uint64_t argmax = 0;
    std::vector<ThetaSampleB> progression_samples;
    std::vector<ThetaSampleC> euler_product_samples;
};

inline ThetaCheckReport explicit_theta_checks(uint64_t limit,
                                              const std::vector<uint64_t>& samples = {}) {
    if (limit < 1000) throw std::domain_error("limit must be at least 1000");
    ThetaCheckReport out;
    out.limit = limit;
    constexpr double kSchoenfeldSlope = 1.000081;
    CompensatedSum theta_acc;
    for_each_prime(2, limit, [&](uint64_t p) {
        theta_acc.add(std::log(static_cast<double>(p)));
        double t = theta_acc.value();
        double ratio = t / static_cast<double>(p);
        if (ratio > out.max_theta_over_x) {
            out.max_theta_over_x = ratio;
            out.argmax = p;
        }
        if (t >= kSchoenfeldSlope * static_cast<double>(p) && out.schoenfeld_ok) {
            out.schoenfeld_ok = false;
            out.first_violation = p;
        }
    });
    constexpr double kEps = 0.002811;
    for (uint64_t k : samples) {
        ThetaSampleB b;
        b.k = k;
        b.lhs = theta_progression(k, 3, 8) - theta_progression(k / 2, 3, 8);
        b.rhs = (1.0 - 3.0 * kEps) * static_cast<double>(k) / 8.0;
        b.ratio = b.lhs / b.rhs;
        b.meets = b.lhs >= b.rhs;
        out.progression_samples.push_back(b);

        ThetaSampleC c;
        c.k = k;
        CompensatedSum lhs;
        for_each_prime(2, k, [&](uint64_t q) { lhs.add(std::log1p(1.0 / static_cast<double>(q))); });
        c.lhs_log = lhs.value();
        c.rhs_log = std::log(2.0 * std::log(static_cast<double>(k)));
        c.ratio = c.lhs_log / c.rhs_log;
        c.asserted = k >= 100'000'000ull;
        c.holds = c.lhs_log <= c.rhs_log;
        out.euler_product_samples.push_back(c);
    }
    return out;
}

struct PntResidual {
    double sum;       // sum_{m<=X} chi(m) Lambda(m)
    double residual;  // sum - delta_chi X
    double ratio;     // |residual| / X
};

inline PntResidual pnt_residual(const QuadChar& chi, uint64_t x) {
    if (x < 100) throw std::domain_error("X must be at least 100");
    CompensatedSum sum;
    if (chi.trivial()) {
        for_each_prime_power(2, x, [&](uint64_t, uint64_t, double logp) { sum.add(logp); });
    } else {
        const std::vector<int8_t> table = chi.period_table();
        const uint64_t n = table.size();
        for_each_prime_power(2, x, [&](uint64_t m, uint64_t, double logp) {
            int v = table[m % n];
            if (v) sum.add(v * logp);
        });
    }
    PntResidual out;
    out.sum = sum.value();
    out.residual = out.sum - (chi.trivial() ? static_cast<double>(x) : 0.0);
    out.ratio = std::abs(out.residual) / static_cast<double>(x);
    return out;
}

}  // namespace apcheck
