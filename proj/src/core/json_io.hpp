#pragma once

#include "core/asymptotics.hpp"
#include "core/classify.hpp"

#include <json.hpp>

namespace shiftlat {

/// Ordered JSON keeps key insertion order, so identical runs serialize to
/// byte-identical reports.
using ojson = nlohmann::ordered_json;

ojson vec_json(const Vec& v);
Vec vec_from_json(const ojson& j);

ojson mat_json(const Mat& m);

ojson subspace_json(const Subspace& s);
/// Accepts {ambient_dim, basis: [["p/q", ...], ...]}; canonicalizes the basis.
Subspace subspace_from_json(const ojson& j);

ojson family_json(const WeightFamily& f);
WeightFamily family_from_json(const ojson& j);

ojson shiftspec_json(const ShiftSpec& spec);
ShiftSpec shiftspec_from_json(const ojson& j);

ojson analytic_json(const AnalyticFn& f);
AnalyticFn analytic_from_json(const ojson& j);

ojson decomposition_json(const CyclicDecomposition& d);

ojson form_json(const CanonicalForm& f);

ojson delta_json(const DeltaEstimate& est);
ojson condition34_json(const Condition34Report& rep);
ojson bounded_variation_json(const BoundedVariationReport& rep);
ojson residual_json(const ResidualReport& rep);
ojson extraction_json(const ExtractionStep& st);

}  // namespace shiftlat
