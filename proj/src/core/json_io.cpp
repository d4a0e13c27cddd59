#include "core/json_io.hpp"

#include "core/error.hpp"

namespace shiftlat {

ojson vec_json(const Vec& v) {
    ojson arr = ojson::array();
    for (const auto& q : v) arr.push_back(rat_str(q));
    return arr;
}

Vec vec_from_json(const ojson& j) {
    require(j.is_array(), Errc::parse, "vector must be a JSON array of rational strings");
    Vec v;
    v.reserve(j.size());
    for (const auto& item : j) {
        require(item.is_string(), Errc::parse, "vector entries must be rational strings");
        v.push_back(parse_rat(item.get<std::string>()));
    }
    return v;
}

ojson mat_json(const Mat& m) {
    ojson rows = ojson::array();
    for (int i = 0; i < m.rows; ++i) rows.push_back(vec_json(m.row(i)));
    return rows;
}

ojson subspace_json(const Subspace& s) {
    ojson j;
    j["ambient_dim"] = s.ambient;
    ojson basis = ojson::array();
    for (const auto& b : s.basis) basis.push_back(vec_json(b));
    j["basis"] = basis;
    j["dim"] = s.dim();
    return j;
}

Subspace subspace_from_json(const ojson& j) {
    require(j.is_object() && j.contains("ambient_dim") && j.contains("basis"), Errc::parse,
            "subspace needs {ambient_dim, basis}");
    require(j["ambient_dim"].is_number_integer(), Errc::parse, "ambient_dim must be an integer");
    int ambient = j["ambient_dim"].get<int>();
    require(ambient >= 1, Errc::parse, "ambient_dim must be positive");
    require(j["basis"].is_array(), Errc::parse, "basis must be an array of vectors");
    std::vector<Vec> rows;
    for (const auto& item : j["basis"]) rows.push_back(vec_from_json(item));
    return span(ambient, rows);
}

ojson family_json(const WeightFamily& f) {
    ojson j;
    ojson params = ojson::object();
    switch (f.kind) {
        case FamilyKind::donoghue: j["family"] = "donoghue"; break;
        case FamilyKind::geometric:
            j["family"] = "geometric";
            params["r"] = rat_str(f.param);
            break;
        case FamilyKind::harmonic:
            j["family"] = "harmonic";
            params["w0"] = rat_str(f.param);
            break;
        case FamilyKind::alternating38: j["family"] = "alternating38"; break;
        case FamilyKind::constant:
            j["family"] = "constant";
            params["c"] = rat_str(f.param);
            break;
        case FamilyKind::custom: {
            j["family"] = "custom";
            ojson list = ojson::array();
            for (const auto& w : f.custom) list.push_back(rat_str(w));
            params["list"] = list;
            break;
        }
    }
    j["params"] = params;
    return j;
}

WeightFamily family_from_json(const ojson& j) {
    if (j.is_string()) return WeightFamily::parse(j.get<std::string>());
    require(j.is_object() && j.contains("family"), Errc::parse,
            "weight family needs {family, params} or a name string");
    std::string name = j["family"].get<std::string>();
    ojson params = j.contains("params") ? j["params"] : ojson::object();
    auto param_rat = [&](const char* key, const Rat& dflt) {
        if (!params.contains(key)) return dflt;
        return parse_rat(params[key].get<std::string>());
    };
    if (name == "donoghue") return WeightFamily::donoghue();
    if (name == "alternating38") return WeightFamily::alternating38();
    if (name == "harmonic") return WeightFamily::harmonic(param_rat("w0", Rat(1)));
    if (name == "geometric") {
        require(params.contains("r"), Errc::parse, "geometric family needs params.r");
        return WeightFamily::geometric(param_rat("r", Rat(1)));
    }
    if (name == "constant") {
        require(params.contains("c"), Errc::parse, "constant family needs params.c");
        return WeightFamily::constant(param_rat("c", Rat(1)));
    }
    if (name == "custom") {
        require(params.contains("list") && params["list"].is_array(), Errc::parse,
                "custom family needs params.list");
        std::vector<Rat> ws;
        for (const auto& item : params["list"]) ws.push_back(parse_rat(item.get<std::string>()));
        return WeightFamily::custom_list(std::move(ws));
    }
    fail(Errc::parse, "unknown weight family '" + name + "'");
}

ojson shiftspec_json(const ShiftSpec& spec) {
    ojson j = family_json(spec.family);
    j["N"] = spec.N;
    j["direction"] = spec.dir == Direction::backward ? "backward" : "forward";
    return j;
}

ShiftSpec shiftspec_from_json(const ojson& j) {
    require(j.is_object() && j.contains("N"), Errc::parse, "shift spec needs {family, params, N, direction}");
    WeightFamily f = family_from_json(j);
    int N = j["N"].get<int>();
    require(N >= 1, Errc::parse, "N must be positive");
    std::string dir = j.contains("direction") ? j["direction"].get<std::string>() : "backward";
    if (dir == "backward") return backward_shift(std::move(f), N);
    if (dir == "forward") return forward_shift(std::move(f), N);
    fail(Errc::parse, "direction must be 'backward' or 'forward'");
}

ojson analytic_json(const AnalyticFn& f) {
    return vec_json(f.coeffs);
}

AnalyticFn analytic_from_json(const ojson& j) {
    return AnalyticFn(vec_from_json(j));
}

ojson decomposition_json(const CyclicDecomposition& d) {
    ojson j;
    j["l"] = d.power;
    ojson gens = ojson::array();
    for (const auto& g : d.generators) {
        ojson item;
        item["vector"] = vec_json(g.vector);
        item["orbit_len"] = g.orbit_len;
        gens.push_back(item);
    }
    j["generators"] = gens;
    return j;
}

ojson form_json(const CanonicalForm& f) {
    ojson j;
    j["tag"] = form_tag_name(f.tag);
    ojson params = ojson::object();
    ojson gens = ojson::array();
    switch (f.tag) {
        case FormTag::Zero:
            break;
        case FormTag::FullSpace:
            params["n"] = f.n;
            break;
        case FormTag::Chain:
            params["k"] = f.chain_k;
            break;
        case FormTag::Cyclic:
            params["l"] = f.power;
            params["n"] = f.n;
            gens.push_back(vec_json(f.x));
            break;
        case FormTag::T2NonCyclic:
            params["n"] = f.n;
            params["p"] = f.p;
            gens.push_back(vec_json(f.x));
            break;
        case FormTag::T3Case1:
            params["n"] = f.n;
            params["p"] = f.p;
            params["t"] = f.t;
            gens.push_back(vec_json(f.x));
            gens.push_back(vec_json(f.y));
            break;
        case FormTag::T3Case2:
        case FormTag::T3Case3:
            params["n"] = f.n;
            params["p"] = f.p;
            params["r"] = f.r;
            params["t"] = f.t;
            gens.push_back(vec_json(f.x));
            gens.push_back(vec_json(f.y));
            break;
        case FormTag::Joint:
            params["n"] = f.n;
            params["alpha"] = rat_str(f.alpha);
            params["beta"] = rat_str(f.beta);
            break;
        case FormTag::ParityLattice:
            params["power"] = f.power;
            params["t"] = f.t;
            break;
        case FormTag::ParityMixed: {
            params["power"] = f.power;
            params["chain_k"] = f.chain_k;
            ojson comps = ojson::array();
            for (const auto& c : f.components) {
                ojson item;
                item["residue"] = c.residue;
                item["from"] = c.from;
                item["to"] = c.to;
                item["to_edge"] = c.to_edge;
                comps.push_back(item);
            }
            params["components"] = comps;
            break;
        }
    }
    j["params"] = params;
    j["generators"] = gens;
    if (!f.note.empty()) j["note"] = f.note;
    return j;
}

ojson delta_json(const DeltaEstimate& est) {
    ojson j;
    j["lower_bound"] = est.lower_bound;
    j["status"] = delta_status_name(est.status);
    j["K"] = est.K;
    j["M_max"] = est.M_max;
    j["cap"] = est.cap;
    j["epsilon"] = est.eps_stab;
    j["witness"] = ojson{{"m", est.witness_m}, {"n", est.witness_n}};
    j["max_last_term"] = est.max_last_term;
    return j;
}

ojson condition34_json(const Condition34Report& rep) {
    ojson j;
    j["holds"] = rep.holds;
    j["monotone"] = rep.monotone;
    j["prefix"] = rep.prefix;
    if (!rep.monotone) {
        j["witness"] = ojson{{"n", rep.first_violation},
                             {"w_prev", rat_str(rep.w_prev)},
                             {"w_n", rat_str(rep.w_at)}};
    }
    j["partial_sum_sq"] = rep.partial_sum_sq;
    j["tail_budget"] = rep.tail_budget;
    return j;
}

ojson bounded_variation_json(const BoundedVariationReport& rep) {
    ojson j;
    j["K"] = rep.K;
    j["partial"] = rep.partial;
    j["monotone_prefix"] = rep.monotone_prefix;
    if (rep.monotone_prefix) j["monotone_tail_bound"] = rep.monotone_tail_bound;
    return j;
}

ojson residual_json(const ResidualReport& rep) {
    ojson j;
    j["N"] = rep.N;
    j["n"] = rep.n;
    j["residual"] = rep.residual;
    j["bound"] = rep.bound;
    j["C"] = rep.C;
    j["w_n"] = rep.w_n;
    j["pass"] = rep.pass;
    return j;
}

ojson extraction_json(const ExtractionStep& st) {
    ojson j;
    j["step"] = st.step;
    j["basis_index"] = st.basis_index;
    j["residual"] = st.residual;
    j["bound"] = st.bound;
    j["exact"] = st.exact;
    j["pass"] = st.pass;
    return j;
}

}  // namespace shiftlat
