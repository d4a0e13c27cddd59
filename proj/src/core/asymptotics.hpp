#pragma once

#include "core/shift.hpp"

namespace shiftlat {

/// One row of a residual sweep. Every report carries the truncation N it was
/// computed at; nothing here claims more than the truncated inequality.
struct ResidualReport {
    int N = 0;
    long n = 0;
    double residual = 0.0;
    double bound = 0.0;
    double C = 0.0;
    double w_n = 0.0;
    bool pass = false;
};

/// || T^n x / (x_0 w_0...w_{n-1}) - e_n ||^2 at truncation N, compared with
/// C w_n^2 where C = delta mu^2 ||x||^2 / (x_0^2 w_0^2 w_1^2). delta comes
/// from a supremum scan or a caller override; mu is the prefix supremum of the
/// weights up to N. Requires x_0 != 0.
ResidualReport thm36_residual(const WeightFamily& f, const Vec& x, long n, int N, double delta,
                              double eps_rel = 1e-9);

enum class SupportCase { even, odd, mixed };

/// Which inequality backs the extraction bound: the ratio-supremum class
/// (delta scans) or the monotone square-summable class.
enum class BoundKind { ratio_sup, monotone };

struct ExtractionStep {
    long step = 0;
    long basis_index = 0;  // index recovered at this step
    double residual = 0.0;
    double bound = 0.0;
    bool exact = false;  // finite-part recoveries are exact
    bool pass = false;
};

struct ExtractionConfig {
    SupportCase support = SupportCase::even;
    BoundKind bound = BoundKind::ratio_sup;
    long K = 0;       // extraction start index (e_t is recovered from S^{K} x)
    long steps = 4;   // how many basis vectors to extract
    double delta = 0.0;
    double eps_rel = 1e-9;
};

/// Replays the basis-recovery sequence: normalize the K-th iterate of x toward
/// the first basis vector of the support class, subtract, recurse. For mixed
/// support the finite odd part is recovered exactly afterwards. Each step
/// reports the residual and the class-specific bound at the chosen K.
std::vector<ExtractionStep> thm39_residual(const WeightFamily& f, const Vec& x,
                                           const ExtractionConfig& cfg, int N);

/// Picks the extraction start by the tail rule: the smallest J with
/// sum_{i >= J} w_{parity + 2i}^2 < eps (summed to the truncation), then the
/// first index >= J maximizing |x| on the class.
long choose_extraction_start(const WeightFamily& f, const Vec& x, int parity, double eps, int N);

/// Sum of ||a_i - b_i||^2 over the common prefix.
double quadratic_closeness(const std::vector<Vec>& seq_a, const std::vector<Vec>& seq_b);

struct Cor44Result {
    bool hypothesis_met = false;  // f'(0) != 0
    bool unicellular = false;
};

/// Drops the constant term (a scalar shift does not move the invariant
/// lattice), evaluates the function on the truncated shift in exact
/// arithmetic, and runs the rank-profile test.
Cor44Result cor44_check(const AnalyticFn& f, const ShiftSpec& spec);

}  // namespace shiftlat
