#include "core/reports.hpp"

#include "core/error.hpp"
#include "core/invariants.hpp"

namespace shiftlat {

ojson weights_report(const ojson& config) {
    require(config.is_object() && config.contains("family"), Errc::parse,
            "weights report config needs a 'family'");
    WeightFamily fam = family_from_json(config["family"]);
    auto get_long = [&](const char* key, long dflt) {
        return config.contains(key) ? config[key].get<long>() : dflt;
    };
    auto get_double = [&](const char* key, double dflt) {
        return config.contains(key) ? config[key].get<double>() : dflt;
    };
    auto get_bool = [&](const char* key, bool dflt) {
        return config.contains(key) ? config[key].get<bool>() : dflt;
    };

    long prefix = get_long("prefix", 1000);
    double budget = get_double("tail_budget", 100.0);
    long bvK = get_long("bv_K", 1000);
    DeltaConfig dc;
    dc.K = get_long("K", 200);
    dc.M_max = get_long("M_max", 50);
    dc.cap = get_double("cap", 1e6);
    dc.eps_stab = get_double("epsilon", 1e-9);
    dc.diagonal_only = get_bool("diagonal_only", false);
    dc.include_n_lt_m = get_bool("include_n_lt_m", false);

    ojson rep;
    rep["family"] = family_json(fam);

    // Custom lists are finite; clamp the scans to what is evaluable.
    if (fam.kind == FamilyKind::custom) {
        long limit = static_cast<long>(fam.custom.size()) - 1;
        prefix = std::min(prefix, limit);
        bvK = std::min(bvK, limit);
        dc.M_max = std::min(dc.M_max, std::max(2L, limit / 4));
        dc.K = std::min(dc.K, std::max(2L, limit - dc.M_max));
        require(prefix >= 2 && dc.K >= 2, Errc::domain,
                "custom weight list too short for the configured scans");
    }

    rep["condition_34"] = condition34_json(check_condition_34(fam, prefix, budget));
    rep["bounded_variation_partial"] = bounded_variation_json(bounded_variation_partial(fam, bvK));
    rep["delta_estimate"] = delta_json(delta_estimate(fam, dc));

    ojson examples = ojson::object();
    if (fam.kind == FamilyKind::harmonic) {
        long anK = get_long("an_K", 1000000);
        ojson rows = ojson::array();
        for (long n : {1L, 10L, 50L}) {
            ojson row;
            row["n"] = n;
            row["K"] = anK;
            row["partial"] = an_partial(n, anK);
            row["integral_bound"] = static_cast<double>(n) * static_cast<double>(n) /
                                    static_cast<double>(n + 1);
            rows.push_back(row);
        }
        examples["an_partial"] = rows;
    }
    if (fam.kind == FamilyKind::alternating38) {
        examples["reference_upper_bound"] = 17.9375;
    }
    rep["examples"] = examples;
    return rep;
}

ojson classify_report(const Subspace& s, const ShiftSpec& spec, const std::string& mode) {
    ojson rep;
    rep["subspace"] = subspace_json(s);
    ojson cert;
    cert["power_2"] = is_invariant(s, spec, 2);
    cert["power_3"] = is_invariant(s, spec, 3);
    rep["invariance"] = cert;
    CanonicalForm form;
    if (mode == "2") {
        form = classify_t2(s, spec);
    } else if (mode == "3") {
        form = classify_t3(s, spec);
    } else if (mode == "joint") {
        form = classify_joint(s, spec);
    } else if (mode == "parity2") {
        form = classify_parity_lattice(s, spec, 2);
    } else if (mode == "parity3") {
        form = classify_parity_lattice(s, spec, 3);
    } else {
        fail(Errc::domain, "unknown classification mode '" + mode + "'");
    }
    rep["form"] = form_json(form);
    return rep;
}

}  // namespace shiftlat
