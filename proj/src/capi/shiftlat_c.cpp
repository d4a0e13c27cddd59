#include "shiftlat/shiftlat.h"

#include "core/error.hpp"
#include "core/reports.hpp"
#include "core/suites.hpp"

#include <cstring>
#include <string>

using namespace shiftlat;

struct sl_ctx {
    std::string last_error;
};

struct sl_subspace {
    Subspace value;
};

namespace {

sl_status map_code(Errc c) {
    switch (c) {
        case Errc::parse: return SL_ERR_PARSE;
        case Errc::dim_mismatch: return SL_ERR_DIM;
        case Errc::domain: return SL_ERR_DOMAIN;
        case Errc::not_invariant: return SL_ERR_NOT_INVARIANT;
        case Errc::pattern: return SL_ERR_PATTERN;
        case Errc::internal: return SL_ERR_INTERNAL;
    }
    return SL_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
sl_status guarded(sl_ctx* ctx, Fn&& fn) {
    if (!ctx) return SL_ERR_INTERNAL;
    try {
        ctx->last_error.clear();
        fn();
        return SL_OK;
    } catch (const Error& e) {
        ctx->last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return SL_ERR_INTERNAL;
    }
}

ojson parse_json(const char* text, const char* what) {
    if (!text) fail(Errc::parse, std::string(what) + " is null");
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::parse, std::string("malformed JSON in ") + what);
    return j;
}

}  // namespace

extern "C" {

sl_ctx* sl_ctx_new(void) {
    return new sl_ctx();
}

void sl_ctx_free(sl_ctx* ctx) {
    delete ctx;
}

const char* sl_last_error(const sl_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "";
}

const char* sl_version(void) {
    return "0.1.0";
}

void sl_string_free(char* s) {
    delete[] s;
}

sl_status sl_subspace_parse(sl_ctx* ctx, const char* json, sl_subspace** out) {
    return guarded(ctx, [&] {
        require(out != nullptr, Errc::domain, "output handle is null");
        Subspace s = subspace_from_json(parse_json(json, "subspace"));
        *out = new sl_subspace{std::move(s)};
    });
}

void sl_subspace_free(sl_subspace* s) {
    delete s;
}

int sl_subspace_dim(const sl_subspace* s) {
    return s ? s->value.dim() : -1;
}

int sl_subspace_ambient(const sl_subspace* s) {
    return s ? s->value.ambient : -1;
}

sl_status sl_subspace_to_json(sl_ctx* ctx, const sl_subspace* s, char** out_json) {
    return guarded(ctx, [&] {
        require(s != nullptr && out_json != nullptr, Errc::domain, "null argument");
        *out_json = dup_string(subspace_json(s->value).dump());
    });
}

sl_status sl_is_invariant(sl_ctx* ctx, const sl_subspace* s, const char* shift_spec_json,
                          int power, int* out) {
    return guarded(ctx, [&] {
        require(s != nullptr && out != nullptr, Errc::domain, "null argument");
        ShiftSpec spec = shiftspec_from_json(parse_json(shift_spec_json, "shift spec"));
        *out = is_invariant(s->value, spec, power) ? 1 : 0;
    });
}

sl_status sl_shift_matrix(sl_ctx* ctx, const char* shift_spec_json, int power, char** out_json) {
    return guarded(ctx, [&] {
        require(out_json != nullptr, Errc::domain, "null argument");
        ShiftSpec spec = shiftspec_from_json(parse_json(shift_spec_json, "shift spec"));
        *out_json = dup_string(mat_json(matrix_of(spec, power)).dump());
    });
}

sl_status sl_decompose(sl_ctx* ctx, const sl_subspace* s, const char* shift_spec_json, int power,
                       char** out_json) {
    return guarded(ctx, [&] {
        require(s != nullptr && out_json != nullptr, Errc::domain, "null argument");
        ShiftSpec spec = shiftspec_from_json(parse_json(shift_spec_json, "shift spec"));
        CyclicDecomposition d = nilpotent_decompose(s->value, spec, power);
        *out_json = dup_string(decomposition_json(d).dump());
    });
}

sl_status sl_classify(sl_ctx* ctx, const sl_subspace* s, const char* shift_spec_json,
                      const char* mode, char** out_json) {
    return guarded(ctx, [&] {
        require(s != nullptr && out_json != nullptr && mode != nullptr, Errc::domain,
                "null argument");
        ShiftSpec spec = shiftspec_from_json(parse_json(shift_spec_json, "shift spec"));
        *out_json = dup_string(classify_report(s->value, spec, mode).dump());
    });
}

sl_status sl_weights_report(sl_ctx* ctx, const char* config_json, char** out_json) {
    return guarded(ctx, [&] {
        require(out_json != nullptr, Errc::domain, "null argument");
        *out_json = dup_string(weights_report(parse_json(config_json, "config")).dump());
    });
}

sl_status sl_verify_suite(sl_ctx* ctx, const char* suite, const char* config_json,
                          char** out_json, char** out_csv) {
    return guarded(ctx, [&] {
        require(suite != nullptr && out_json != nullptr, Errc::domain, "null argument");
        ojson config = config_json ? parse_json(config_json, "config") : ojson::object();
        SuiteReport rep = run_suite(suite, config);
        *out_json = dup_string(rep.to_json().dump());
        if (out_csv) *out_csv = rep.csv.empty() ? nullptr : dup_string(rep.csv);
    });
}

}  // extern "C"
