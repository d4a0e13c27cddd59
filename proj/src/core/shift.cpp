#include "core/shift.hpp"

#include "core/error.hpp"

namespace shiftlat {

ShiftSpec backward_shift(WeightFamily f, int N) {
    require(N >= 1, Errc::domain, "truncation dimension must be >= 1");
    return ShiftSpec(std::move(f), N, Direction::backward);
}

ShiftSpec forward_shift(WeightFamily f, int N) {
    require(N >= 1, Errc::domain, "truncation dimension must be >= 1");
    return ShiftSpec(std::move(f), N, Direction::forward);
}

namespace {

// Product w_lo ... w_hi; empty (hi < lo) is 1.
Rat weight_product(const ShiftSpec& spec, long lo, long hi) {
    Rat p(1);
    for (long j = lo; j <= hi; ++j) p *= spec.weight(j);
    return p;
}

}  // namespace

Mat matrix_of(const ShiftSpec& spec, int power) {
    require(power >= 1, Errc::domain, "power must be >= 1");
    const int N = spec.N;
    Mat m(N, N);
    if (spec.dir == Direction::backward) {
        for (int n = power; n < N; ++n) m.at(n - power, n) = weight_product(spec, n - power, n - 1);
    } else {
        for (int n = 0; n + power < N; ++n) m.at(n + power, n) = weight_product(spec, n, n + power - 1);
    }
    return m;
}

Vec apply(const ShiftSpec& spec, int power, const Vec& v) {
    require(power >= 1, Errc::domain, "power must be >= 1");
    require(static_cast<int>(v.size()) == spec.N, Errc::dim_mismatch,
            "vector length does not match truncation dimension");
    const int N = spec.N;
    Vec out(N);
    if (spec.dir == Direction::backward) {
        for (int n = power; n < N; ++n) {
            if (v[n] != 0) out[n - power] = v[n] * weight_product(spec, n - power, n - 1);
        }
    } else {
        for (int n = 0; n + power < N; ++n) {
            if (v[n] != 0) out[n + power] = v[n] * weight_product(spec, n, n + power - 1);
        }
    }
    return out;
}

Vec normalizer_diagonal(const ShiftSpec& spec) {
    Vec d(spec.N);
    Rat acc(1);
    for (int n = 0; n < spec.N; ++n) {
        d[n] = acc;
        acc *= spec.weight(n);
    }
    return d;
}

Mat normalizer(const ShiftSpec& spec) {
    Vec d = normalizer_diagonal(spec);
    Mat m(spec.N, spec.N);
    for (int n = 0; n < spec.N; ++n) m.at(n, n) = d[n];
    return m;
}

int AnalyticFn::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        if (coeffs[static_cast<size_t>(i)] != 0) return i;
    }
    return -1;
}

AnalyticFn AnalyticFn::shifted_binomial(int m) {
    require(m >= 1, Errc::domain, "shifted binomial needs m >= 1");
    // (1+z)^{m-1} by Pascal's rule, then shift by one power of z.
    std::vector<Rat> binom{Rat(1)};
    for (int row = 1; row <= m - 1; ++row) {
        std::vector<Rat> next(static_cast<size_t>(row) + 1, Rat(0));
        for (size_t i = 0; i < binom.size(); ++i) {
            next[i] += binom[i];
            next[i + 1] += binom[i];
        }
        binom = std::move(next);
    }
    std::vector<Rat> cs(binom.size() + 1, Rat(0));
    for (size_t i = 0; i < binom.size(); ++i) cs[i + 1] = binom[i];
    return AnalyticFn(std::move(cs));
}

AnalyticFn AnalyticFn::power_sum(int n, int m) {
    require(n >= 1 && m >= 0, Errc::domain, "power sum needs n >= 1, m >= 0");
    std::vector<Rat> cs(static_cast<size_t>(n) + 1, Rat(0));
    for (int i = 1; i <= n; ++i) {
        Rat c(1);
        for (int e = 0; e < m; ++e) c *= i;
        cs[static_cast<size_t>(i)] = c;
    }
    return AnalyticFn(std::move(cs));
}

Mat analytic_apply(const AnalyticFn& f, const ShiftSpec& spec) {
    const int N = spec.N;
    int d = f.degree();
    int top = std::min(d, N - 1);  // the shift is nilpotent of index <= N
    Mat acc(N, N);
    if (top < 0) return acc;
    Mat m = matrix_of(spec, 1);
    // Horner on the nilpotent matrix.
    for (int i = 0; i < N; ++i) acc.at(i, i) = f.coeff(static_cast<size_t>(top));
    for (int i = top - 1; i >= 0; --i) {
        acc = mat_mul(acc, m);
        Rat c = f.coeff(static_cast<size_t>(i));
        if (c != 0) {
            for (int k = 0; k < N; ++k) acc.at(k, k) += c;
        }
    }
    return acc;
}

}  // namespace shiftlat
