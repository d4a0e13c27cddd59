#include "core/invariants.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <set>

namespace shiftlat {

bool is_invariant(const Subspace& s, const ShiftSpec& spec, int power) {
    require(s.ambient == spec.N, Errc::dim_mismatch,
            "subspace ambient dimension does not match truncation");
    for (const auto& b : s.basis) {
        if (!member(s, apply(spec, power, b))) return false;
    }
    return true;
}

std::vector<Vec> cyclic_orbit(const Vec& x, const ShiftSpec& spec, int power) {
    require(static_cast<int>(x.size()) == spec.N, Errc::dim_mismatch,
            "vector length does not match truncation dimension");
    require(top_index(x) >= 0, Errc::domain, "cyclic orbit of the zero vector");
    std::vector<Vec> orbit{x};
    while (true) {
        Vec next = apply(spec, power, orbit.back());
        if (top_index(next) < 0) break;
        orbit.push_back(std::move(next));
        require(static_cast<int>(orbit.size()) <= spec.N, Errc::internal,
                "orbit exceeded ambient dimension");
    }
    return orbit;
}

int CyclicDecomposition::total_dim() const {
    int d = 0;
    for (const auto& g : generators) d += g.orbit_len;
    return d;
}

CyclicDecomposition nilpotent_decompose(const Subspace& s, const ShiftSpec& spec, int power) {
    require(power >= 1, Errc::domain, "power must be >= 1");
    require(is_invariant(s, spec, power), Errc::not_invariant,
            "subspace is not invariant under the requested power");
    CyclicDecomposition d;
    d.power = power;
    std::vector<Vec> rows = top_echelon_basis(s);
    std::set<int> consumed;
    for (const auto& row : rows) {
        int t = top_index(row);
        if (consumed.count(t)) continue;
        std::vector<Vec> orbit = cyclic_orbit(row, spec, power);
        for (const auto& v : orbit) consumed.insert(top_index(v));
        d.generators.push_back({row, static_cast<int>(orbit.size())});
    }
    require(d.total_dim() == s.dim(), Errc::internal, "orbit ladders did not cover the subspace");
    return d;
}

std::vector<Subspace> decomposition_parts(const CyclicDecomposition& d, const ShiftSpec& spec) {
    std::vector<Subspace> parts;
    parts.reserve(d.generators.size());
    for (const auto& g : d.generators) {
        parts.push_back(span(spec.N, cyclic_orbit(g.vector, spec, d.power)));
    }
    return parts;
}

Subspace decomposition_span(const CyclicDecomposition& d, const ShiftSpec& spec) {
    std::vector<Vec> all;
    for (const auto& g : d.generators) {
        auto orbit = cyclic_orbit(g.vector, spec, d.power);
        all.insert(all.end(), orbit.begin(), orbit.end());
    }
    return span(spec.N, all);
}

bool pair_independent(const Vec& x, const Vec& y, const ShiftSpec& spec, int power) {
    require(top_index(x) >= 0 && top_index(y) >= 0, Errc::domain,
            "pair independence needs nonzero vectors");
    Vec tx = cyclic_orbit(x, spec, power).back();
    Vec ty = cyclic_orbit(y, spec, power).back();
    return mat_rank(Mat::from_rows({tx, ty}, spec.N)) == 2;
}

bool unicellular_rank_test(const Mat& m) {
    require(m.rows == m.cols, Errc::domain, "rank test needs a square matrix");
    const int N = m.rows;
    // Power up while tracking ranks; nilpotency means the N-th power vanishes.
    std::vector<int> ranks;
    Mat p = m;
    for (int j = 1; j <= N; ++j) {
        ranks.push_back(mat_rank(p));
        if (ranks.back() == 0) break;
        if (j < N) p = mat_mul(p, m);
    }
    bool nilpotent = ranks.back() == 0;
    require(nilpotent, Errc::domain, "matrix is not nilpotent");
    for (size_t j = 0; j < ranks.size(); ++j) {
        if (ranks[j] != N - static_cast<int>(j) - 1) return false;
    }
    // A single Jordan block dies exactly at step N.
    return static_cast<int>(ranks.size()) == N;
}

}  // namespace shiftlat
