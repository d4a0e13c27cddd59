// Command-line front end. Talks to the core exclusively through the C API.
#include <shiftlat/shiftlat.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

using ojson = nlohmann::ordered_json;

struct CtxDeleter {
    void operator()(sl_ctx* c) const { sl_ctx_free(c); }
};
struct SubDeleter {
    void operator()(sl_subspace* s) const { sl_subspace_free(s); }
};

std::string take_string(char* s) {
    if (!s) return {};
    std::string out(s);
    sl_string_free(s);
    return out;
}

int die(sl_ctx* ctx, sl_status st, const std::string& where) {
    std::cerr << "error (" << where << ", code " << static_cast<int>(st)
              << "): " << sl_last_error(ctx) << "\n";
    return 2;
}

void emit(const ojson& report, const std::string& out_path) {
    std::string text = report.dump(2);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        f << text << "\n";
    }
}

ojson load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw CLI::ValidationError("cannot open " + path);
    ojson j = ojson::parse(in, nullptr, false);
    if (j.is_discarded()) throw CLI::ValidationError("malformed JSON in " + path);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shiftlat: truncated weighted shifts and their invariant subspaces"};
    app.require_subcommand(1);

    std::unique_ptr<sl_ctx, CtxDeleter> ctx(sl_ctx_new());

    // ---- weights ----------------------------------------------------------
    auto* weights = app.add_subcommand("weights", "weight-class report for a family");
    std::string w_family, w_config, w_out;
    long w_prefix = 1000, w_bvK = 1000, w_K = 200, w_Mmax = 50, w_anK = 1000000;
    double w_budget = 100.0, w_cap = 1e6, w_eps = 1e-9;
    bool w_diag = false, w_nltm = false, w_human = false;
    weights->add_option("--family", w_family,
                        "donoghue|geometric:r|harmonic|alternating38|constant:c|custom:@file.json");
    weights->add_option("--config", w_config, "JSON config file (flags take precedence)");
    weights->add_option("--prefix", w_prefix, "monotone/square-sum check prefix");
    weights->add_option("--tail-budget", w_budget, "square-sum budget");
    weights->add_option("--bv-K", w_bvK, "bounded-variation partial length");
    weights->add_option("--K", w_K, "series terms per supremum cell");
    weights->add_option("--M-max", w_Mmax, "supremum scan bound");
    weights->add_option("--cap", w_cap, "divergence certification cap");
    weights->add_option("--epsilon", w_eps, "stabilization threshold");
    weights->add_option("--an-K", w_anK, "harmonic diagonal partial length");
    weights->add_flag("--diagonal-only", w_diag, "scan only the m = n diagonal");
    weights->add_flag("--include-n-lt-m", w_nltm, "also scan n < m (empty products read as 1)");
    weights->add_flag("--human", w_human, "print a human summary to stderr");
    weights->add_option("--out", w_out, "write the JSON report here instead of stdout");

    // ---- classify ---------------------------------------------------------
    auto* classify = app.add_subcommand("classify", "classify a subspace from a JSON file");
    std::string c_file, c_family = "constant:1", c_power = "2", c_out, c_dir = "backward";
    int c_N = 0;
    classify->add_option("--file", c_file, "subspace JSON {ambient_dim, basis}")->required();
    classify->add_option("--family", c_family, "weight family");
    classify->add_option("--N", c_N, "truncation dimension (defaults to ambient_dim)");
    classify->add_option("--direction", c_dir, "backward|forward");
    classify->add_option("--power", c_power, "2|3|joint|parity2|parity3");
    classify->add_option("--out", c_out, "write the JSON report here instead of stdout");

    // ---- verify -----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite, v_out, v_config;
    uint64_t v_seed = 0;
    long v_cases = 0, v_N = 0;
    verify->add_option("--suite", v_suite, "t2|t3|joint|prop29|cor44|thm36|thm39")->required();
    verify->add_option("--config", v_config, "JSON config file (flags take precedence)");
    auto* v_seed_opt = verify->add_option("--seed", v_seed, "corpus seed (required for randomized suites)");
    auto* v_cases_opt = verify->add_option("--cases", v_cases, "number of cases");
    auto* v_N_opt = verify->add_option("--N", v_N, "ambient bound / truncation");
    verify->add_option("--out", v_out, "directory for the report, case records, and CSV artifacts");

    CLI11_PARSE(app, argc, argv);

    if (weights->parsed()) {
        // Precedence: explicit flags > config file > built-in defaults.
        ojson cfg = ojson::object();
        if (!w_config.empty()) cfg = load_json_file(w_config);
        auto set_if = [&](const char* key, const CLI::Option* opt, ojson value) {
            if (opt->count() > 0 || !cfg.contains(key)) cfg[key] = std::move(value);
        };
        set_if("family", weights->get_option("--family"), w_family);
        set_if("prefix", weights->get_option("--prefix"), w_prefix);
        set_if("tail_budget", weights->get_option("--tail-budget"), w_budget);
        set_if("bv_K", weights->get_option("--bv-K"), w_bvK);
        set_if("K", weights->get_option("--K"), w_K);
        set_if("M_max", weights->get_option("--M-max"), w_Mmax);
        set_if("cap", weights->get_option("--cap"), w_cap);
        set_if("epsilon", weights->get_option("--epsilon"), w_eps);
        set_if("an_K", weights->get_option("--an-K"), w_anK);
        set_if("diagonal_only", weights->get_option("--diagonal-only"), w_diag);
        set_if("include_n_lt_m", weights->get_option("--include-n-lt-m"), w_nltm);
        if (!cfg.contains("family") || cfg["family"].get<std::string>().empty()) {
            std::cerr << "error: --family is required (flag or config file)\n";
            return 2;
        }
        char* out = nullptr;
        sl_status st = sl_weights_report(ctx.get(), cfg.dump().c_str(), &out);
        if (st != SL_OK) return die(ctx.get(), st, "weights");
        ojson rep = ojson::parse(take_string(out));
        if (w_human) {
            std::cerr << "family " << cfg["family"].get<std::string>() << ": condition_34 "
                      << (rep["condition_34"]["holds"].get<bool>() ? "holds" : "fails")
                      << ", delta " << rep["delta_estimate"]["status"].get<std::string>()
                      << " (lower bound " << rep["delta_estimate"]["lower_bound"].get<double>()
                      << ")\n";
        }
        emit(rep, w_out);
        return 0;
    }

    if (classify->parsed()) {
        ojson sub_json = load_json_file(c_file);
        sl_subspace* raw = nullptr;
        sl_status st = sl_subspace_parse(ctx.get(), sub_json.dump().c_str(), &raw);
        if (st != SL_OK) return die(ctx.get(), st, "subspace parse");
        std::unique_ptr<sl_subspace, SubDeleter> sub(raw);
        int N = c_N > 0 ? c_N : sl_subspace_ambient(sub.get());
        ojson spec;
        auto pos = c_family.find(':');
        spec["family"] = c_family.substr(0, pos);
        if (pos != std::string::npos) {
            std::string arg = c_family.substr(pos + 1);
            std::string head = spec["family"].get<std::string>();
            ojson params = ojson::object();
            if (head == "geometric") params["r"] = arg;
            if (head == "constant") params["c"] = arg;
            if (head == "harmonic") params["w0"] = arg;
            spec["params"] = params;
        }
        spec["N"] = N;
        spec["direction"] = c_dir;
        char* out = nullptr;
        st = sl_classify(ctx.get(), sub.get(), spec.dump().c_str(), c_power.c_str(), &out);
        if (st != SL_OK) return die(ctx.get(), st, "classify");
        emit(ojson::parse(take_string(out)), c_out);
        return 0;
    }

    if (verify->parsed()) {
        ojson cfg = ojson::object();
        if (!v_config.empty()) cfg = load_json_file(v_config);
        if (v_seed_opt->count() > 0 || !cfg.contains("seed")) {
            if (v_seed_opt->count() > 0) cfg["seed"] = v_seed;
        }
        if (v_cases_opt->count() > 0) cfg["cases"] = v_cases;
        if (v_N_opt->count() > 0) cfg["N"] = v_N;
        char* out = nullptr;
        char* csv = nullptr;
        sl_status st = sl_verify_suite(ctx.get(), v_suite.c_str(), cfg.dump().c_str(), &out, &csv);
        if (st != SL_OK) return die(ctx.get(), st, "verify");
        ojson rep = ojson::parse(take_string(out));
        std::cout << "suite " << v_suite << ": " << rep["passed"].get<long>() << "/"
                  << rep["cases"].get<long>() << " passed\n";
        if (rep["failed"].get<long>() > 0) {
            std::cout << "failing seeds:";
            for (const auto& s : rep["failing_seeds"]) std::cout << " " << s;
            std::cout << "\n";
        }
        std::string csv_text = take_string(csv);
        if (!v_out.empty()) {
            std::filesystem::create_directories(v_out);
            std::ofstream jf(v_out + "/" + v_suite + "_report.json");
            jf << rep.dump(2) << "\n";
            if (rep["details"].contains("cases")) {
                // corpus runs also land as JSON-lines, one record per case
                std::ofstream lf(v_out + "/" + v_suite + "_cases.jsonl");
                for (const auto& rec : rep["details"]["cases"]) lf << rec.dump() << "\n";
            }
            if (!csv_text.empty()) {
                std::ofstream cf(v_out + "/" + v_suite + ".csv");
                cf << csv_text;
            }
        } else if (!csv_text.empty()) {
            std::cout << csv_text;
        }
        return rep["ok"].get<bool>() ? 0 : 1;
    }

    return 0;
}
