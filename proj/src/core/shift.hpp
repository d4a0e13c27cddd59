#pragma once

#include "core/linalg.hpp"
#include "core/weights.hpp"

namespace shiftlat {

enum class Direction { forward, backward };

/// A weighted shift truncated to span{e_0..e_{N-1}}.
///
/// backward: e_0 -> 0 and e_n -> w_{n-1} e_{n-1}; exactly invariant under
/// truncation, so it is the direction all subspace work uses.
/// forward:  e_n -> w_n e_{n+1} with the image of e_{N-1} dropped
/// (compression to the first N coordinates). Forward truncations are lossy at
/// the top edge; see matrix_of.
struct ShiftSpec {
    WeightFamily family;
    int N = 1;
    Direction dir = Direction::backward;

    ShiftSpec() = default;
    ShiftSpec(WeightFamily f, int n, Direction d) : family(std::move(f)), N(n), dir(d) {}

    Rat weight(long n) const { return family.eval(n); }
};

ShiftSpec backward_shift(WeightFamily f, int N);
ShiftSpec forward_shift(WeightFamily f, int N);

/// N x N matrix of the power-th iterate on the truncated basis.
Mat matrix_of(const ShiftSpec& spec, int power);

/// Exact image of v under the power-th iterate; same truncation semantics.
Vec apply(const ShiftSpec& spec, int power, const Vec& v);

/// Diagonal similarity X with X e_n = d_n e_n, d_0 = 1 and
/// d_n = w_0 w_1 ... w_{n-1}. Conjugation by X turns the all-weights-1
/// backward shift into the weighted one: X^{-1} T1* X = T*.
Mat normalizer(const ShiftSpec& spec);
Vec normalizer_diagonal(const ShiftSpec& spec);

/// Truncated Taylor data f(z) = sum a_i z^i. Only terms with i < N matter when
/// evaluated on a truncated shift, which is nilpotent of index <= N.
struct AnalyticFn {
    std::vector<Rat> coeffs;

    AnalyticFn() = default;
    explicit AnalyticFn(std::vector<Rat> cs) : coeffs(std::move(cs)) {}

    Rat coeff(size_t i) const { return i < coeffs.size() ? coeffs[i] : Rat(0); }
    int degree() const;
    Rat eval_at_zero() const { return coeff(0); }

    /// z(1+z)^{m-1}, expanded to its coefficient list.
    static AnalyticFn shifted_binomial(int m);
    /// sum_{i=1..n} i^m z^i.
    static AnalyticFn power_sum(int n, int m);
};

/// sum a_i M^i with M = matrix_of(spec, 1); finite because M is nilpotent.
Mat analytic_apply(const AnalyticFn& f, const ShiftSpec& spec);

}  // namespace shiftlat
