#pragma once

#include "core/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace shiftlat {

enum class FamilyKind { donoghue, geometric, harmonic, alternating38, constant, custom };

/// A rule n -> w_n producing exact positive rational weights.
///
/// Built-in families:
///   donoghue        w_n = 1/2^n
///   geometric(r)    w_n = r^n                     (r > 0)
///   harmonic        w_n = 1/n for n >= 1, w_0 = configurable (default 1)
///   alternating38   w_n = 1/2^{n+1} for even n, 1/2^{n-1} for odd n
///   constant(c)     w_n = c                       (c > 0)
///   custom(list)    explicit finite list; indices past the end are an error
struct WeightFamily {
    FamilyKind kind = FamilyKind::constant;
    Rat param = 1;
    std::vector<Rat> custom;

    Rat eval(long n) const;
    double eval_d(long n) const { return rat_d(eval(n)); }

    /// Compact CLI name, e.g. "geometric:1/2".
    std::string name() const;

    static WeightFamily donoghue();
    static WeightFamily geometric(const Rat& r);
    static WeightFamily harmonic(const Rat& w0 = Rat(1));
    static WeightFamily alternating38();
    static WeightFamily constant(const Rat& c);
    static WeightFamily custom_list(std::vector<Rat> ws);

    /// Parses the CLI syntax: donoghue | geometric:r | harmonic[:w0] |
    /// alternating38 | constant:c | custom:@file.json
    static WeightFamily parse(const std::string& text);
};

struct Condition34Report {
    bool monotone = false;
    long first_violation = -1;
    Rat w_prev, w_at;
    double partial_sum_sq = 0.0;
    double tail_budget = 0.0;
    long prefix = 0;
    bool holds = false;
};

/// Monotone non-increase checked exactly on w_0..w_prefix, plus the partial
/// sum of squares compared against tail_budget as square-summability evidence.
Condition34Report check_condition_34(const WeightFamily& f, long prefix, double tail_budget);

struct BoundedVariationReport {
    long K = 0;
    double partial = 0.0;
    bool monotone_prefix = false;
    /// For a non-increasing prefix the remaining variation telescopes, so the
    /// tail is at most w_K; reported only in that case.
    double monotone_tail_bound = 0.0;
};

BoundedVariationReport bounded_variation_partial(const WeightFamily& f, long K);

enum class DeltaStatus { bounded_evidence, certified_divergent, inconclusive };

struct DeltaConfig {
    long K = 200;        // series terms k = 0..K per cell
    long M_max = 50;     // scan 2 <= m <= n <= M_max
    double cap = 1e6;    // a partial above this certifies divergence
    double eps_stab = 1e-9;
    bool diagonal_only = false;   // scan only m == n
    bool include_n_lt_m = false;  // also scan n < m, empty products read as 1
};

struct DeltaEstimate {
    double lower_bound = 0.0;
    DeltaStatus status = DeltaStatus::inconclusive;
    long K = 0, M_max = 0;
    long witness_m = 0, witness_n = 0;
    double cap = 0.0;
    double eps_stab = 0.0;
    /// Largest final series term over all scanned cells; stabilization means
    /// this is below eps_stab.
    double max_last_term = 0.0;
};

/// Scans partial sums sum_{k=0..K} (prod_{j=m..n} w_{k+j}/w_j)^2 over the
/// (m, n) window and reports their supremum. Terms are nonnegative, so the
/// result is a true lower bound for the full supremum; it is never an upper
/// bound. certified_divergent means a single cell's partial already exceeds
/// cap; bounded_evidence means every cell's final term fell below eps_stab.
DeltaEstimate delta_estimate(const WeightFamily& f, const DeltaConfig& cfg);

/// Partial sum sum_{k=1..K} (n/(n+k))^2 for the harmonic family.
double an_partial(long n, long K);

std::string delta_status_name(DeltaStatus st);

}  // namespace shiftlat
