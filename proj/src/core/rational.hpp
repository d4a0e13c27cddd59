#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace shiftlat {

/// Exact rational scalar. Always kept canonical: lowest terms, denominator > 0.
using Rat = mpq_class;

/// Parses "p/q" or "p" (base 10, optional sign). Throws Error(parse) on bad input.
Rat parse_rat(const std::string& s);

/// Canonical string form: "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& q);

inline double rat_d(const Rat& q) { return q.get_d(); }

/// q^e for e >= 0.
Rat rat_pow(const Rat& q, unsigned long e);

using Vec = std::vector<Rat>;

std::vector<std::string> vec_strings(const Vec& v);
Vec parse_vec(const std::vector<std::string>& entries);

}  // namespace shiftlat
