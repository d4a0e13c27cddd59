#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/error.hpp"
#include "core/weights.hpp"

using namespace shiftlat;

TEST_CASE("family evaluation") {
    CHECK(WeightFamily::donoghue().eval(3) == Rat(1, 8));
    CHECK(WeightFamily::donoghue().eval(0) == 1);

    auto alt = WeightFamily::alternating38();
    CHECK(alt.eval(0) == Rat(1, 2));
    CHECK(alt.eval(1) == 1);
    CHECK(alt.eval(2) == Rat(1, 8));
    CHECK(alt.eval(3) == Rat(1, 4));

    CHECK(WeightFamily::constant(Rat(5, 7)).eval(123) == Rat(5, 7));
    CHECK(WeightFamily::harmonic().eval(4) == Rat(1, 4));
    CHECK(WeightFamily::harmonic(Rat(2)).eval(0) == 2);
    CHECK(WeightFamily::geometric(Rat(1, 2)).eval(3) == Rat(1, 8));
}

TEST_CASE("family parsing and errors") {
    CHECK(WeightFamily::parse("donoghue").kind == FamilyKind::donoghue);
    CHECK(WeightFamily::parse("geometric:2/3").eval(2) == Rat(4, 9));
    CHECK(WeightFamily::parse("constant:3").eval(9) == 3);
    CHECK_THROWS_AS(WeightFamily::parse("nope"), Error);
    CHECK_THROWS_AS(WeightFamily::parse("geometric:-1"), Error);
    auto custom = WeightFamily::custom_list({Rat(1), Rat(1, 2)});
    CHECK(custom.eval(1) == Rat(1, 2));
    CHECK_THROWS_AS(custom.eval(2), Error);
}

TEST_CASE("monotone square-summable check") {
    auto don = check_condition_34(WeightFamily::donoghue(), 200, 10.0);
    CHECK(don.holds);
    CHECK(don.monotone);

    auto har = check_condition_34(WeightFamily::harmonic(), 10000, 10.0);
    CHECK(har.holds);

    auto alt = check_condition_34(WeightFamily::alternating38(), 200, 10.0);
    CHECK_FALSE(alt.holds);
    CHECK(alt.first_violation == 1);
    CHECK(alt.w_prev == Rat(1, 2));
    CHECK(alt.w_at == 1);
}

TEST_CASE("bounded variation partials against telescoping") {
    CHECK(bounded_variation_partial(WeightFamily::constant(Rat(3, 2)), 50).partial == 0.0);

    // Monotone families telescope: partial = w_0 - w_K.
    auto don = bounded_variation_partial(WeightFamily::donoghue(), 20);
    double telescoped = 1.0 - WeightFamily::donoghue().eval_d(20);
    CHECK(don.monotone_prefix);
    CHECK(don.partial == doctest::Approx(telescoped).epsilon(1e-12));
    CHECK(don.partial == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(don.monotone_tail_bound == doctest::Approx(WeightFamily::donoghue().eval_d(20)));

    auto har = bounded_variation_partial(WeightFamily::harmonic(), 1000);
    CHECK(har.partial < 1.0);
    double expect = 1.0 - 1.0 / 1000.0;  // w_0 - w_K with w_0 = 1
    CHECK(har.partial == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("supremum scan: constant weights certify divergence") {
    DeltaConfig dc;
    dc.K = 100;
    dc.M_max = 10;
    dc.cap = 50;
    auto est = delta_estimate(WeightFamily::constant(Rat(1)), dc);
    CHECK(est.status == DeltaStatus::certified_divergent);
    CHECK(est.lower_bound == doctest::Approx(101.0));
}

TEST_CASE("supremum scan: alternating family stays under the worked bound") {
    DeltaConfig dc;  // K=200, M_max=50 defaults
    auto est = delta_estimate(WeightFamily::alternating38(), dc);
    CHECK(est.status == DeltaStatus::bounded_evidence);
    CHECK(est.lower_bound <= 17.9375);
    CHECK(est.lower_bound == doctest::Approx(16.0 / 3.0).epsilon(1e-12));
    CHECK(est.witness_m == 2);
    CHECK(est.witness_n == 2);
}

TEST_CASE("supremum scan: harmonic diagonal certifies divergence") {
    DeltaConfig dc;
    dc.K = 10000;
    dc.M_max = 2000;
    dc.cap = 1000;
    dc.diagonal_only = true;
    auto est = delta_estimate(WeightFamily::harmonic(), dc);
    CHECK(est.status == DeltaStatus::certified_divergent);
    CHECK(est.lower_bound > 1000.0);
}

TEST_CASE("supremum scan is monotone in K and M_max") {
    auto fam = WeightFamily::alternating38();
    DeltaConfig small;
    small.K = 50;
    small.M_max = 10;
    DeltaConfig big = small;
    big.K = 150;
    auto e1 = delta_estimate(fam, small);
    auto e2 = delta_estimate(fam, big);
    CHECK(e2.lower_bound >= e1.lower_bound);
    DeltaConfig wider = small;
    wider.M_max = 30;
    auto e3 = delta_estimate(fam, wider);
    CHECK(e3.lower_bound >= e1.lower_bound);
}

TEST_CASE("scan option: n < m cells read empty products as 1") {
    DeltaConfig dc;
    dc.K = 50;
    dc.M_max = 6;
    dc.cap = 40;
    dc.include_n_lt_m = true;
    auto est = delta_estimate(WeightFamily::donoghue(), dc);
    // Every n < m cell sums K+1 ones, so divergence is certified trivially.
    CHECK(est.status == DeltaStatus::certified_divergent);
    CHECK(est.lower_bound == doctest::Approx(51.0));
}

TEST_CASE("harmonic diagonal partials and the integral bound") {
    double a1 = an_partial(1, 1000000);
    // pi^2/6 - 1 minus a tail below 1/K
    CHECK(a1 == doctest::Approx(0.6449330668).epsilon(1e-6));
    CHECK(a1 >= 0.5);  // n^2/(n+1) at n=1

    CHECK(an_partial(10, 1000000) >= 100.0 / 11.0);

    // non-decreasing in K and dominated by n^2 * pi^2/6
    double prev = 0.0;
    for (long K : {10L, 100L, 1000L}) {
        double v = an_partial(3, K);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(prev <= 9.0 * 1.6449340668482264);
}

TEST_CASE("condition 3.4 prefix really is sorted when it holds") {
    auto fam = WeightFamily::donoghue();
    auto rep = check_condition_34(fam, 64, 10.0);
    REQUIRE(rep.holds);
    for (long n = 0; n < 64; ++n) CHECK(fam.eval(n + 1) <= fam.eval(n));
}
