#pragma once

#include "core/json_io.hpp"

#include <cstdint>

namespace shiftlat {

/// Outcome of one verification suite run. Deterministic given the config:
/// identical configs serialize to byte-identical reports.
struct SuiteReport {
    std::string suite;
    long cases = 0;
    long passed = 0;
    long failed = 0;
    std::vector<uint64_t> failing_seeds;
    ojson details = ojson::object();
    std::string csv;  // optional artifact (residual sweeps)

    bool ok() const { return failed == 0 && cases > 0; }
    ojson to_json() const;
};

/// Seeded round-trip corpus for the squared-shift classifier. Also checks the
/// decomposition contract on every case: at most two orbits, direct sum, exact
/// recomposition.
SuiteReport t2_suite(uint64_t seed, long cases, int n_max = 24);

/// Same for the cubed shift (at most three orbits).
SuiteReport t3_suite(uint64_t seed, long cases, int n_max = 24);

/// Jointly invariant subspaces: closures classify to the two-coefficient head
/// form, and constructed head forms are invariant under both powers.
SuiteReport joint_suite(uint64_t seed, long cases, int n_max = 24);

/// Terminal-vector shortcut vs. stacked-orbit rank, 100% agreement required.
SuiteReport prop29_suite(uint64_t seed, long cases, int n_max = 12);

/// Rank-profile checks for polynomials of the truncated shift, including the
/// z^2 expected failure.
SuiteReport cor44_suite();

/// Residual sweeps against the C w_n^2 bound; emits the CSV artifact.
SuiteReport thm36_suite(uint64_t seed, int N = 128, long n_steps = 30, long xs_per_family = 20);

/// Basis-extraction replay for both weight classes plus the mixed case.
SuiteReport thm39_suite(int N = 128);

/// Classification is blind to the weights: subspaces related by the diagonal
/// similarity classify identically, generators mapping entry-exactly.
SuiteReport weight_independence_suite(uint64_t seed, long cases, int power);

/// Runs a suite by CLI name (t2, t3, joint, prop29, cor44, thm36, thm39) with
/// an optional JSON config {seed, cases, N}.
SuiteReport run_suite(const std::string& name, const ojson& config);

}  // namespace shiftlat
