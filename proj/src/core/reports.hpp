#pragma once

#include "core/json_io.hpp"

namespace shiftlat {

/// Weight-class report: the monotone/square-summable check, the bounded
/// variation partial, the ratio-supremum scan, plus family-specific example
/// computations. Config keys (all optional except family):
///   family, prefix, tail_budget, K, M_max, cap, epsilon, diagonal_only,
///   include_n_lt_m, an_K
ojson weights_report(const ojson& config);

/// Classification report with an invariance certificate. mode is one of
/// "2", "3", "joint", "parity2", "parity3".
ojson classify_report(const Subspace& s, const ShiftSpec& spec, const std::string& mode);

}  // namespace shiftlat
