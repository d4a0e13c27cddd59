#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/error.hpp"
#include "core/json_io.hpp"
#include "support/oracles.hpp"

using namespace shiftlat;
using test::random_vec;

TEST_CASE("subspace serialization round-trips through the canonical basis") {
    Rng rng(601);
    for (int it = 0; it < 100; ++it) {
        int dim = static_cast<int>(rng.uniform(1, 9));
        std::vector<Vec> gens;
        for (long g = rng.uniform(0, 3); g > 0; --g) gens.push_back(random_vec(rng, dim));
        Subspace s = span(dim, gens);
        CHECK(subspace_from_json(subspace_json(s)) == s);
    }
}

TEST_CASE("shift specs and coefficient lists round-trip") {
    for (const char* name : {"donoghue", "geometric:5/9", "harmonic", "harmonic:2",
                             "alternating38", "constant:7/2"}) {
        ShiftSpec spec = backward_shift(WeightFamily::parse(name), 17);
        ShiftSpec back = shiftspec_from_json(shiftspec_json(spec));
        CHECK(back.N == spec.N);
        CHECK(back.dir == spec.dir);
        for (long n = 0; n < 8; ++n) CHECK(back.weight(n) == spec.weight(n));
    }

    AnalyticFn f({Rat(1, 3), Rat(0), Rat(-7, 2), Rat(5)});
    AnalyticFn g = analytic_from_json(analytic_json(f));
    CHECK(g.coeffs == f.coeffs);
}

TEST_CASE("rational strings stay in lowest terms with positive denominators") {
    Rng rng(602);
    for (int it = 0; it < 200; ++it) {
        Rat q = parse_rat(std::to_string(rng.uniform(-500, 500)) + "/" +
                          std::to_string(rng.uniform(1, 500)));
        Rat back = parse_rat(rat_str(q));
        CHECK(back == q);
        CHECK(back.get_den() > 0);
        Rat g;
        mpz_gcd(g.get_num_mpz_t(), back.get_num_mpz_t(), back.get_den_mpz_t());
        CHECK((back == 0 || g.get_num() == 1));
    }
    CHECK_THROWS_AS(parse_rat("3/0"), Error);
    CHECK_THROWS_AS(parse_rat("a/b"), Error);
}
