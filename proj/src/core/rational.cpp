#include "core/rational.hpp"

#include "core/error.hpp"

namespace shiftlat {

Rat parse_rat(const std::string& s) {
    if (s.empty()) fail(Errc::parse, "empty rational literal");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0) {
        mpq_clear(q);
        fail(Errc::parse, "bad rational literal: '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        fail(Errc::parse, "zero denominator in '" + s + "'");
    }
    mpq_canonicalize(q);
    Rat out(q);
    mpq_clear(q);
    return out;
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

Rat rat_pow(const Rat& q, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return out;
}

std::vector<std::string> vec_strings(const Vec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(rat_str(q));
    return out;
}

Vec parse_vec(const std::vector<std::string>& entries) {
    Vec out;
    out.reserve(entries.size());
    for (const auto& s : entries) out.push_back(parse_rat(s));
    return out;
}

}  // namespace shiftlat
