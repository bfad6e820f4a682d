#pragma once

// The combinatorial engine: index sets I_p, the deletion sieve
// J -> J1 -> J2 with the factorial-divisibility certificate, the 3-AP
// finder, the double-log threshold for the quantitative Roth input, the
// full pipeline, and the maximal-set construction of the endgame.

#include "apcheck/factor.hpp"
#include "apcheck/frey.hpp"
#include "apcheck/integer.hpp"
#include "apcheck/modp.hpp"
#include "apcheck/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apcheck {

// subset of {0, .., k-1} with O(1) membership
class IndexSet {
public:
    explicit IndexSet(int64_t universe) : universe_(universe), in_(static_cast<size_t>(universe), 0) {}

    IndexSet(int64_t universe, const std::vector<int64_t>& members) : IndexSet(universe) {
        for (int64_t i : members) insert(i);
    }

    static IndexSet full(int64_t universe) {
        IndexSet s(universe);
        for (int64_t i = 0; i < universe; ++i) s.insert(i);
        return s;
    }

    int64_t universe() const { return universe_; }
    int64_t size() const { return count_; }

    bool contains(int64_t i) const { return i >= 0 && i < universe_ && in_[static_cast<size_t>(i)]; }

    void insert(int64_t i) {
        if (i < 0 || i >= universe_) throw std::out_of_range("index outside the universe");
        if (!in_[static_cast<size_t>(i)]) {
            in_[static_cast<size_t>(i)] = 1;
            ++count_;
        }
    }

    void erase(int64_t i) {
        if (i >= 0 && i < universe_ && in_[static_cast<size_t>(i)]) {
            in_[static_cast<size_t>(i)] = 0;
            --count_;
        }
    }

    std::vector<int64_t> members() const {
        std::vector<int64_t> m;
        m.reserve(static_cast<size_t>(count_));
        for (int64_t i = 0; i < universe_; ++i)
            if (in_[static_cast<size_t>(i)]) m.push_back(i);
        return m;
    }

private:
    int64_t universe_;
    std::vector<uint8_t> in_;
    int64_t count_ = 0;
};

// I_p = { i in [0, k) : p | n + i d }; empty when p | d. The size is
// delta_p (k/p + theta_p) with |theta_p| < 1.
inline IndexSet index_set_Ip(const Integer& n, const Integer& d, int64_t k, const Integer& p) {
    if (gcd(n, d) != 1) throw std::domain_error("not coprime");
    IndexSet s(k);
    if (d % p == 0) return s;  // delta_p = 0
    // i = -n / d (mod p)
    const Integer i0 = mod_floor(-n * Integer(invmod(reduce_mod(d, static_cast<uint64_t>(to_i64(p))),
                                                     static_cast<uint64_t>(to_i64(p)))),
                                 p);
    for (Integer i = i0; i < k; i += p) s.insert(to_i64(i));
    const double dev = std::abs(static_cast<double>(s.size()) - static_cast<double>(k) / to_i64(p));
    if (dev >= 1.0) throw std::logic_error("index-set size deviates by a full unit");
    return s;
}

struct SieveParams {
    double t_exponent = 7.0 / 16.0;   // T = primes in (k^t_exponent, k]
    double c1 = 1e-4;                 // U = primes in ((log k)^(1-c1), u_hi_factor log k]
    double u_hi_factor = 1e4;
    int smooth_cap_exp = 139;         // J2 keeps A_i <= k^smooth_cap_exp
    int cond_cap_exp = 418;           // conductor target N < k^cond_cap_exp
    double s_budget = 0.17;           // sum of 1/p over S must stay below
    double j_density = 0.0032;        // #J > j_density k in the proof regime
    double j1_density = 0.00319;
    double j2_density = 0.00001;
    double b_count_factor = 17.0;     // branch at #B > 17 log k
    double d_recip_threshold = 0.1683;
};

struct SieveConfig {
    int64_t k = 0;
    Integer n = 1;
    Integer d = 1;
    std::vector<int64_t> s_primes;
    SieveParams params;
    bool enforce_hypotheses = true;

    void validate() const {
        if (k < 3) throw std::domain_error("k must be at least 3");
        if (gcd(n, d) != 1) throw std::domain_error("not coprime");
        double recip = 0;
        for (int64_t p : s_primes) {
            if (p < 2 || !is_prime_u64(static_cast<uint64_t>(p)) || p > k)
                throw std::domain_error("S must consist of primes in [2, k]");
            recip += 1.0 / static_cast<double>(p);
        }
        if (enforce_hypotheses && recip >= params.s_budget)
            throw std::domain_error("sum of 1/p over S exceeds the budget");
    }
};

struct FamilyRemoval {
    std::string family;
    int64_t primes = 0;
    int64_t removed = 0;     // total index deletions attributed to the family
    double budget = 0;       // the proof's per-family allowance, times k
};

struct JReport {
    IndexSet J{0};
    std::vector<FamilyRemoval> removals;
    int64_t removed_total = 0;
    double density = 0;            // #J / k
    bool meets_paper_density = false;  // #J > 0.0032 k (asymptotic regime only)
};

inline JReport build_J(const SieveConfig& config) {
    config.validate();
    const int64_t k = config.k;
    const double logk = std::log(static_cast<double>(k));
    JReport out;
    out.J = IndexSet::full(k);

    auto remove_family = [&](const std::string& name, const std::vector<int64_t>& primes,
                             double budget_per_k) {
        FamilyRemoval fam;
        fam.family = name;
        fam.budget = budget_per_k * static_cast<double>(k);
        for (int64_t p : primes) {
            ++fam.primes;
            IndexSet ip = index_set_Ip(config.n, config.d, k, Integer(p));
            for (int64_t i : ip.members())
                if (out.J.contains(i)) {
                    out.J.erase(i);
                    ++fam.removed;
                }
        }
        out.removed_total += fam.removed;
        out.removals.push_back(fam);
    };

    remove_family("S", config.s_primes, config.params.s_budget);

    std::vector<int64_t> t_primes;
    const double t_lo = std::pow(static_cast<double>(k), config.params.t_exponent);
    for_each_prime(static_cast<uint64_t>(t_lo) + 1, static_cast<uint64_t>(k),
                   [&](uint64_t p) { t_primes.push_back(static_cast<int64_t>(p)); });
    remove_family("T", t_primes, std::log(16.0 / 7.0));

    std::vector<int64_t> u_primes;
    const double u_lo = std::pow(logk, 1.0 - config.params.c1);
    const double u_hi = config.params.u_hi_factor * logk;
    for_each_prime(static_cast<uint64_t>(u_lo) + 1, static_cast<uint64_t>(u_hi), [&](uint64_t p) {
        if (p <= static_cast<uint64_t>(k)) u_primes.push_back(static_cast<int64_t>(p));
    });
    remove_family("U", u_primes, std::log(1.0 / (1.0 - 1e-4)));

    out.density = static_cast<double>(out.J.size()) / static_cast<double>(k);
    out.meets_paper_density = out.density > config.params.j_density;
    return out;
}

struct Deletion {
    int64_t prime;
    int64_t index;
    unsigned ord;
};

struct DeletionCertificate {
    IndexSet J1{0};
    std::vector<Deletion> deletions;
    bool divides_factorial = false;  // prod_{i in J1} A_i | (k-1)!
};

// For each prime p <= k, deletes one index of J maximizing ord_p(A_i)
// (ties: smallest index); certifies the factorial divisibility per prime
// through Legendre's formula.
inline DeletionCertificate erdos_deletion(const IndexSet& J, const std::vector<Integer>& a_values,
                                          int64_t k) {
    if (static_cast<int64_t>(a_values.size()) < J.universe())
        throw std::domain_error("A-values must cover the universe");
    for (int64_t i : J.members()) {
        const Integer& a = a_values[static_cast<size_t>(i)];
        if (a <= 0) throw std::domain_error("A-values must be positive");
        if (multiplicative_stats(a).greatest_prime >= k)
            throw std::domain_error("A-value not k-smooth");
    }
    DeletionCertificate out;
    out.J1 = J;
    const std::vector<int64_t> members = J.members();
    std::map<int64_t, std::map<int64_t, unsigned>> ords;  // index -> prime -> ord
    for (int64_t i : members)
        for (const auto& fe : factorize(a_values[static_cast<size_t>(i)]))
            if (fe.prime > 1) ords[i][to_i64(fe.prime)] = fe.exp;

    for_each_prime(2, static_cast<uint64_t>(k), [&](uint64_t pu) {
        const int64_t p = static_cast<int64_t>(pu);
        int64_t best = -1;
        unsigned best_ord = 0;
        for (int64_t i : members) {
            auto it = ords[i].find(p);
            unsigned o = it == ords[i].end() ? 0 : it->second;
            if (o > best_ord) {
                best_ord = o;
                best = i;
            }
        }
        if (best >= 0) {
            out.deletions.push_back({p, best, best_ord});
            out.J1.erase(best);
        }
    });

    // per-prime valuation against ord_p((k-1)!)
    out.divides_factorial = true;
    std::map<int64_t, uint64_t> total;
    for (int64_t i : out.J1.members())
        for (const auto& [p, o] : ords[i]) total[p] += o;
    for (const auto& [p, o] : total) {
        uint64_t legendre = 0;
        for (Integer q = p; q <= k - 1; q *= p) legendre += static_cast<uint64_t>((k - 1) / to_i64(q));
        if (o > legendre) out.divides_factorial = false;
    }
    return out;
}

// Lexicographically first (i, j) with i, j, 2j - i in the set; exhaustive.
inline std::optional<APTriple> find_3ap(const IndexSet& set) {
    const std::vector<int64_t> members = set.members();
    for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b) {
            int64_t third = 2 * members[b] - members[a];
            if (third < set.universe() && set.contains(third)) return APTriple{members[a], members[b]};
        }
    return std::nullopt;
}

struct RothThreshold {
    Rational loglog_coefficient;  // 132 / delta, multiplying log 2
    long double loglog_value;     // 132 log(2) / delta
};

// loglog K0(delta) for K0(delta) = exp(exp(132 log 2 / delta)).
inline RothThreshold roth_threshold(const Rational& delta) {
    if (delta <= 0 || delta >= 1) throw std::domain_error("delta must be in (0, 1)");
    RothThreshold out;
    out.loglog_coefficient = Rational(132) / delta;
    out.loglog_value = out.loglog_coefficient.convert_to<long double>() * std::log(2.0L);
    return out;
}

struct PipelineReport {
    JReport j_report;
    DeletionCertificate deletion;
    IndexSet J2{0};
    bool j2_meets_budget = false;
    std::optional<APTriple> triple;
    Integer conductor_bound;      // 2^8 A_i A_j A_{2j-i} for the found triple
    Integer conductor_cap;        // k^418
    bool conductor_within_cap = false;
    std::string diagnosis;        // which budget line failed, if any
};

// build_J -> erdos_deletion -> smooth cap filter -> 3-AP finder, with every
// intermediate cardinality reported against the proof's budget lines.
inline PipelineReport proposition_S_pipeline(const SieveConfig& config) {
    config.validate();
    const int64_t k = config.k;
    PipelineReport out;
    out.j_report = build_J(config);

    std::vector<Integer> a_values;
    a_values.reserve(static_cast<size_t>(k));
    for (int64_t i = 0; i < k; ++i) {
        Integer t = config.n + i * config.d;
        if (t == 0) throw std::domain_error("degenerate term");
        a_values.push_back(smooth_split(abs(t), Integer(k), 2).smooth);
    }
    out.deletion = erdos_deletion(out.j_report.J, a_values, k);

    const Integer cap = pow(Integer(k), static_cast<unsigned>(config.params.smooth_cap_exp));
    out.J2 = IndexSet(k);
    for (int64_t i : out.deletion.J1.members())
        if (a_values[static_cast<size_t>(i)] <= cap) out.J2.insert(i);
    out.j2_meets_budget =
        static_cast<double>(out.J2.size()) > config.params.j2_density * static_cast<double>(k);

    out.triple = find_3ap(out.J2);
    out.conductor_cap = pow(Integer(k), static_cast<unsigned>(config.params.cond_cap_exp));
    if (out.triple) {
        const APTriple t = *out.triple;
        out.conductor_bound = Integer(256) * a_values[static_cast<size_t>(t.i)] *
                              a_values[static_cast<size_t>(t.j)] *
                              a_values[static_cast<size_t>(t.third())];
        out.conductor_within_cap = out.conductor_bound < out.conductor_cap;
        out.diagnosis = "triple found";
    } else if (!out.j_report.meets_paper_density) {
        out.diagnosis = "no triple; #J fell below the 0.0032 k budget (expected outside the asymptotic regime)";
    } else if (!out.j2_meets_budget) {
        out.diagnosis = "no triple; #J2 fell below the 0.00001 k budget";
    } else {
        out.diagnosis = "no triple found by the exhaustive search";
    }
    return out;
}

struct BCandidate {
    APTriple triple;
    Integer conductor;
};

struct MaximalB {
    std::vector<size_t> B;  // indices of accepted candidates
    std::vector<size_t> C;  // members with P(N) > 1e4 log k
    std::vector<size_t> D;  // members with P(N) <= (log k)^(1-c1)
    std::vector<std::string> rejection_reasons;  // aligned with the input
    double sum_recip_C = 0;
    double sum_recip_D = 0;
    double c_recip_cap = 0;       // #B / (1e4 log k)
    bool branch_large_sieve = false;  // #B > 17 log k
    bool d_branch_fires = false;      // sum_recip_D >= 0.1683
};

// Greedy maximal subset under (i) distinct P(N), (ii) P(N) <= k^(7/16),
// (iii) no prime factor in ((log k)^(1-c1), 1e4 log k], (iv) N < k^418,
// then the C/D split and the endgame branch decision.
inline MaximalB maximal_B_construction(int64_t k, const std::vector<BCandidate>& candidates,
                                       const SieveParams& params = {}) {
    if (k < 3) throw std::domain_error("k must be at least 3");
    const double logk = std::log(static_cast<double>(k));
    const double p_cap = std::pow(static_cast<double>(k), params.t_exponent);
    const double window_lo = std::pow(logk, 1.0 - params.c1);
    const double window_hi = params.u_hi_factor * logk;
    const Integer cond_cap = pow(Integer(k), static_cast<unsigned>(params.cond_cap_exp));

    MaximalB out;
    std::vector<Integer> used_p;
    for (size_t idx = 0; idx < candidates.size(); ++idx) {
        const BCandidate& cand = candidates[idx];
        if (cand.conductor <= 0) throw std::domain_error("conductor must be positive");
        NumberStats st = multiplicative_stats(cand.conductor);
        std::string reason;
        if (std::find(used_p.begin(), used_p.end(), st.greatest_prime) != used_p.end())
            reason = "duplicate P(N)";
        else if (st.greatest_prime.convert_to<double>() > p_cap)
            reason = "P(N) above k^(7/16)";
        else if (cand.conductor >= cond_cap)
            reason = "N above k^418";
        else {
            for (const auto& fe : st.factors) {
                double p = fe.prime.convert_to<double>();
                if (p > window_lo && p <= window_hi) {
                    reason = "prime factor inside the forbidden window";
                    break;
                }
            }
        }
        out.rejection_reasons.push_back(reason);
        if (reason.empty()) {
            out.B.push_back(idx);
            used_p.push_back(st.greatest_prime);
            double p = st.greatest_prime.convert_to<double>();
            if (p > window_hi) {
                out.C.push_back(idx);
                out.sum_recip_C += 1.0 / p;
            } else {
                out.D.push_back(idx);
                out.sum_recip_D += 1.0 / p;
            }
        }
    }
    out.c_recip_cap = static_cast<double>(out.B.size()) / (params.u_hi_factor * logk);
    out.branch_large_sieve = static_cast<double>(out.B.size()) > params.b_count_factor * logk;
    out.d_branch_fires = out.sum_recip_D >= params.d_recip_threshold;
    return out;
}

}  // namespace apcheck
