#include "core/weights.hpp"

#include "core/error.hpp"
#include "core/summation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace shiftlat {

Rat WeightFamily::eval(long n) const {
    require(n >= 0, Errc::domain, "weight index must be nonnegative");
    switch (kind) {
        case FamilyKind::donoghue: {
            Rat q(1);
            mpz_ui_pow_ui(q.get_den_mpz_t(), 2, static_cast<unsigned long>(n));
            return q;
        }
        case FamilyKind::geometric:
            return rat_pow(param, static_cast<unsigned long>(n));
        case FamilyKind::harmonic:
            if (n == 0) return param;
            return Rat(1, n);
        case FamilyKind::alternating38: {
            Rat q(1);
            unsigned long e = static_cast<unsigned long>(n % 2 == 0 ? n + 1 : n - 1);
            mpz_ui_pow_ui(q.get_den_mpz_t(), 2, e);
            return q;
        }
        case FamilyKind::constant:
            return param;
        case FamilyKind::custom:
            require(n < static_cast<long>(custom.size()), Errc::domain,
                    "custom weight list has no index " + std::to_string(n));
            return custom[static_cast<size_t>(n)];
    }
    fail(Errc::internal, "unknown weight family kind");
}

std::string WeightFamily::name() const {
    switch (kind) {
        case FamilyKind::donoghue: return "donoghue";
        case FamilyKind::geometric: return "geometric:" + rat_str(param);
        case FamilyKind::harmonic:
            return param == 1 ? std::string("harmonic") : "harmonic:" + rat_str(param);
        case FamilyKind::alternating38: return "alternating38";
        case FamilyKind::constant: return "constant:" + rat_str(param);
        case FamilyKind::custom: return "custom";
    }
    return "?";
}

WeightFamily WeightFamily::donoghue() {
    WeightFamily f;
    f.kind = FamilyKind::donoghue;
    return f;
}

WeightFamily WeightFamily::geometric(const Rat& r) {
    WeightFamily f;
    f.kind = FamilyKind::geometric;
    f.param = r;
    f.param.canonicalize();
    require(f.param > 0, Errc::domain, "geometric ratio must be positive");
    return f;
}

WeightFamily WeightFamily::harmonic(const Rat& w0) {
    WeightFamily f;
    f.kind = FamilyKind::harmonic;
    f.param = w0;
    f.param.canonicalize();
    require(f.param > 0, Errc::domain, "harmonic w_0 must be positive");
    return f;
}

WeightFamily WeightFamily::alternating38() {
    WeightFamily f;
    f.kind = FamilyKind::alternating38;
    return f;
}

WeightFamily WeightFamily::constant(const Rat& c) {
    WeightFamily f;
    f.kind = FamilyKind::constant;
    f.param = c;
    f.param.canonicalize();
    require(f.param > 0, Errc::domain, "constant weight must be positive");
    return f;
}

WeightFamily WeightFamily::custom_list(std::vector<Rat> ws) {
    require(!ws.empty(), Errc::domain, "custom weight list is empty");
    for (auto& w : ws) {
        w.canonicalize();
        require(w > 0, Errc::domain, "custom weights must be positive");
    }
    WeightFamily f;
    f.kind = FamilyKind::custom;
    f.custom = std::move(ws);
    return f;
}

WeightFamily WeightFamily::parse(const std::string& text) {
    std::string head = text, arg;
    if (auto pos = text.find(':'); pos != std::string::npos) {
        head = text.substr(0, pos);
        arg = text.substr(pos + 1);
    }
    if (head == "donoghue") return donoghue();
    if (head == "alternating38") return alternating38();
    if (head == "harmonic") return arg.empty() ? harmonic() : harmonic(parse_rat(arg));
    if (head == "geometric") {
        require(!arg.empty(), Errc::parse, "geometric family needs a ratio, e.g. geometric:1/2");
        return geometric(parse_rat(arg));
    }
    if (head == "constant") {
        require(!arg.empty(), Errc::parse, "constant family needs a value, e.g. constant:1");
        return constant(parse_rat(arg));
    }
    if (head == "custom") {
        require(!arg.empty() && arg.front() == '@', Errc::parse,
                "custom family needs a file, e.g. custom:@weights.json");
        std::ifstream in(arg.substr(1));
        require(in.good(), Errc::parse, "cannot open weight file " + arg.substr(1));
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            fail(Errc::parse, std::string("bad weight file: ") + e.what());
        }
        require(j.is_array(), Errc::parse, "custom weight file must hold a JSON array");
        std::vector<Rat> ws;
        for (const auto& item : j) {
            require(item.is_string(), Errc::parse, "custom weights must be rational strings");
            ws.push_back(parse_rat(item.get<std::string>()));
        }
        return custom_list(std::move(ws));
    }
    fail(Errc::parse, "unknown weight family '" + text + "'");
}

Condition34Report check_condition_34(const WeightFamily& f, long prefix, double tail_budget) {
    require(prefix >= 2, Errc::domain, "condition check needs prefix >= 2");
    Condition34Report rep;
    rep.prefix = prefix;
    rep.tail_budget = tail_budget;
    rep.monotone = true;
    KahanSum sq;
    Rat prev = f.eval(0);
    double pd = rat_d(prev);
    sq.add(pd * pd);
    for (long n = 1; n <= prefix; ++n) {
        Rat w = f.eval(n);
        if (rep.monotone && w > prev) {
            rep.monotone = false;
            rep.first_violation = n;
            rep.w_prev = prev;
            rep.w_at = w;
        }
        double wd = rat_d(w);
        sq.add(wd * wd);
        prev = w;
    }
    rep.partial_sum_sq = sq.value();
    rep.holds = rep.monotone && rep.partial_sum_sq <= tail_budget;
    return rep;
}

BoundedVariationReport bounded_variation_partial(const WeightFamily& f, long K) {
    require(K >= 1, Errc::domain, "bounded variation needs K >= 1");
    BoundedVariationReport rep;
    rep.K = K;
    rep.monotone_prefix = true;
    KahanSum acc;
    Rat prev = f.eval(0);
    for (long n = 1; n <= K; ++n) {
        Rat w = f.eval(n);
        Rat diff = prev - w;
        if (diff < 0) rep.monotone_prefix = false;
        acc.add(std::abs(rat_d(diff)));
        prev = w;
    }
    rep.partial = acc.value();
    if (rep.monotone_prefix) rep.monotone_tail_bound = rat_d(prev);
    return rep;
}

namespace {

// One cell of the supremum scan: sum over k of the squared weight-ratio
// products. Evaluated term by term so underflow in one term cannot poison the
// rest; underflow to zero only shrinks a nonnegative partial sum.
double delta_cell(const std::vector<double>& w, long m, long n, long K, double* last_term) {
    KahanSum acc;
    double last = 0.0;
    for (long k = 0; k <= K; ++k) {
        double ratio = 1.0;
        for (long j = m; j <= n; ++j) ratio *= w[static_cast<size_t>(k + j)] / w[static_cast<size_t>(j)];
        last = ratio * ratio;
        acc.add(last);
    }
    *last_term = last;
    return acc.value();
}

}  // namespace

DeltaEstimate delta_estimate(const WeightFamily& f, const DeltaConfig& cfg) {
    require(cfg.K >= 2 && cfg.M_max >= 2, Errc::domain, "delta scan needs K, M_max >= 2");
    DeltaEstimate est;
    est.K = cfg.K;
    est.M_max = cfg.M_max;
    est.cap = cfg.cap;
    est.eps_stab = cfg.eps_stab;

    std::vector<double> w(static_cast<size_t>(cfg.K + cfg.M_max + 1));
    for (long i = 0; i < static_cast<long>(w.size()); ++i) w[static_cast<size_t>(i)] = f.eval_d(i);

    bool all_stable = true;
    bool divergent = false;
    for (long m = 2; m <= cfg.M_max; ++m) {
        long n_lo = cfg.include_n_lt_m ? 2 : m;
        long n_hi = cfg.diagonal_only ? m : cfg.M_max;
        if (cfg.diagonal_only) n_lo = m;
        for (long n = n_lo; n <= n_hi; ++n) {
            double last = 0.0;
            double partial;
            if (n < m) {
                // Empty weight products read as 1; every term is then 1.
                partial = static_cast<double>(cfg.K + 1);
                last = 1.0;
            } else {
                partial = delta_cell(w, m, n, cfg.K, &last);
            }
            if (partial > est.lower_bound) {
                est.lower_bound = partial;
                est.witness_m = m;
                est.witness_n = n;
            }
            est.max_last_term = std::max(est.max_last_term, last);
            if (last >= cfg.eps_stab) all_stable = false;
            if (partial > cfg.cap) divergent = true;
        }
    }
    if (divergent) {
        est.status = DeltaStatus::certified_divergent;
    } else if (all_stable) {
        est.status = DeltaStatus::bounded_evidence;
    } else {
        est.status = DeltaStatus::inconclusive;
    }
    return est;
}

double an_partial(long n, long K) {
    require(n >= 1 && K >= 1, Errc::domain, "an_partial needs n, K >= 1");
    KahanSum acc;
    double nd = static_cast<double>(n);
    for (long k = 1; k <= K; ++k) {
        double r = nd / (nd + static_cast<double>(k));
        acc.add(r * r);
    }
    return acc.value();
}

std::string delta_status_name(DeltaStatus st) {
    switch (st) {
        case DeltaStatus::bounded_evidence: return "bounded_evidence";
        case DeltaStatus::certified_divergent: return "certified_divergent";
        case DeltaStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace shiftlat
