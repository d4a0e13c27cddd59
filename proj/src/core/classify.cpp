#include "core/classify.hpp"

#include "core/error.hpp"
#include "core/rng.hpp"

#include <algorithm>

namespace shiftlat {

std::string form_tag_name(FormTag tag) {
    switch (tag) {
        case FormTag::Zero: return "zero";
        case FormTag::FullSpace: return "full_space";
        case FormTag::Chain: return "chain";
        case FormTag::Cyclic: return "cyclic";
        case FormTag::T2NonCyclic: return "t2_non_cyclic";
        case FormTag::T3Case1: return "t3_case1";
        case FormTag::T3Case2: return "t3_case2";
        case FormTag::T3Case3: return "t3_case3";
        case FormTag::Joint: return "joint";
        case FormTag::ParityLattice: return "parity_lattice";
        case FormTag::ParityMixed: return "parity_mixed";
    }
    return "?";
}

namespace {

void require_backward(const ShiftSpec& spec) {
    require(spec.dir == Direction::backward, Errc::domain,
            "subspace classification works on the backward direction");
}

// First `count` orbit elements of x under the power-th iterate.
std::vector<Vec> orbit_prefix(const Vec& x, const ShiftSpec& spec, int power, int count) {
    if (count <= 0) return {};
    std::vector<Vec> orbit = cyclic_orbit(x, spec, power);
    require(static_cast<int>(orbit.size()) >= count, Errc::domain,
            "orbit shorter than the requested prefix");
    orbit.resize(static_cast<size_t>(count));
    return orbit;
}

std::vector<Vec> chain_vectors(int ambient, int k) {
    std::vector<Vec> vs;
    for (int i = 0; i <= k; ++i) vs.push_back(unit_vec(ambient, i));
    return vs;
}

}  // namespace

Subspace materialize(const CanonicalForm& form, const ShiftSpec& spec) {
    const int N = spec.N;
    switch (form.tag) {
        case FormTag::Zero:
            return Subspace(N);
        case FormTag::FullSpace:
            return full_space(N);
        case FormTag::Chain:
            return chain_subspace(N, form.chain_k);
        case FormTag::Cyclic: {
            require(form.power >= 1, Errc::domain, "cyclic form needs a power");
            return span(N, cyclic_orbit(form.x, spec, form.power));
        }
        case FormTag::T2NonCyclic: {
            std::vector<Vec> vs = chain_vectors(N, form.n - form.p - 2);
            if (form.p >= 0) {
                auto orbit = orbit_prefix(form.x, spec, 2, form.p + 1);
                vs.insert(vs.end(), orbit.begin(), orbit.end());
            }
            return span(N, vs);
        }
        case FormTag::T3Case1: {
            std::vector<Vec> vs = cyclic_orbit(form.x, spec, 3);
            auto oy = cyclic_orbit(form.y, spec, 3);
            vs.insert(vs.end(), oy.begin(), oy.end());
            return span(N, vs);
        }
        case FormTag::T3Case2: {
            std::vector<Vec> vs = chain_vectors(N, form.n - 2 * form.p - 3 + 3 * form.r);
            auto ox = orbit_prefix(form.x, spec, 3, form.p - form.r + 1);
            auto oy = orbit_prefix(form.y, spec, 3, form.p - 2 * form.r + 1);
            vs.insert(vs.end(), ox.begin(), ox.end());
            vs.insert(vs.end(), oy.begin(), oy.end());
            return span(N, vs);
        }
        case FormTag::T3Case3: {
            std::vector<Vec> vs = chain_vectors(N, form.n - 2 * form.p - 2 + 3 * form.r);
            auto ox = orbit_prefix(form.x, spec, 3, form.p - form.r + 1);
            auto oy = orbit_prefix(form.y, spec, 3, form.p - 2 * form.r);
            vs.insert(vs.end(), ox.begin(), ox.end());
            vs.insert(vs.end(), oy.begin(), oy.end());
            return span(N, vs);
        }
        case FormTag::Joint: {
            require(form.alpha != 0 || form.beta != 0, Errc::domain,
                    "joint form needs a nonzero coefficient pair");
            require(form.n >= 1, Errc::domain, "joint form needs n >= 1");
            std::vector<Vec> vs = chain_vectors(N, form.n - 2);
            int hi = form.beta != 0 ? form.n : form.n - 1;
            require(hi < N, Errc::domain, "joint form exceeds the truncation");
            Vec v(N);
            v[form.n - 1] = form.alpha;
            if (form.beta != 0) v[form.n] = form.beta;
            vs.push_back(std::move(v));
            return span(N, vs);
        }
        case FormTag::ParityLattice: {
            require(form.power >= 2, Errc::domain, "lattice form needs a power");
            std::vector<Vec> vs;
            for (int i = form.t; i < N; i += form.power) vs.push_back(unit_vec(N, i));
            return span(N, vs);
        }
        case FormTag::ParityMixed: {
            std::vector<Vec> vs;
            if (form.chain_k >= 0) vs = chain_vectors(N, form.chain_k);
            for (const auto& comp : form.components) {
                for (int i = comp.from; i <= comp.to; i += form.power) vs.push_back(unit_vec(N, i));
            }
            return span(N, vs);
        }
    }
    fail(Errc::internal, "unknown form tag");
}

Subspace construct_t2(int n, int p, const Vec& x, const ShiftSpec& spec) {
    require_backward(spec);
    require(p >= -1 && p <= n - 3, Errc::domain, "t2 form needs -1 <= p <= n-3");
    require(n + p < spec.N, Errc::domain, "t2 form exceeds the truncation");
    if (p >= 0) {
        require(static_cast<int>(x.size()) == spec.N, Errc::dim_mismatch,
                "generator length does not match truncation");
        require(top_index(x) == n + p, Errc::domain, "generator top index must equal n+p");
    }
    CanonicalForm f;
    f.tag = FormTag::T2NonCyclic;
    f.n = n;
    f.p = p;
    f.x = x;
    Subspace s = materialize(f, spec);
    require(s.dim() == n, Errc::internal, "t2 construction lost dimension");
    require(is_invariant(s, spec, 2), Errc::internal, "t2 construction is not invariant");
    return s;
}

CanonicalForm classify_t2(const Subspace& s, const ShiftSpec& spec) {
    require_backward(spec);
    require(is_invariant(s, spec, 2), Errc::not_invariant,
            "subspace is not invariant under the squared shift");
    CanonicalForm f;
    const int n = s.dim();
    if (n == 0) {
        f.tag = FormTag::Zero;
        return f;
    }
    if (n == spec.N) {
        f.tag = FormTag::FullSpace;
        f.n = n;
        return f;
    }
    const int k = top_index(s);
    f.n = n;
    if (k <= 2 * n - 3) {
        // Non-cyclic band n-1 <= k <= 2n-3; p = -1 is the chain M_{n-1}.
        f.tag = FormTag::T2NonCyclic;
        f.p = k - n;
        for (int i = 0; i <= n - f.p - 2; ++i) {
            require(member(s, unit_vec(spec.N, i)), Errc::internal,
                    "non-cyclic t2 subspace is missing its chain prefix");
        }
        f.x = top_echelon_basis(s).front();
        return f;
    }
    require(k <= 2 * n - 1, Errc::internal, "top index exceeds the cyclic band");
    CyclicDecomposition d = nilpotent_decompose(s, spec, 2);
    require(d.generators.size() == 1, Errc::internal, "cyclic band produced several orbits");
    f.tag = FormTag::Cyclic;
    f.power = 2;
    f.x = d.generators.front().vector;
    return f;
}

Subspace construct_t3(const CanonicalForm& form, const ShiftSpec& spec) {
    require_backward(spec);
    const int n = form.n, p = form.p, r = form.r;
    switch (form.tag) {
        case FormTag::Chain:
            require(form.chain_k >= 0, Errc::domain, "chain form needs k >= 0");
            return materialize(form, spec);
        case FormTag::Cyclic: {
            require(top_index(form.x) >= 0, Errc::domain, "cyclic form needs a nonzero generator");
            Subspace s = materialize(form, spec);
            require(form.n == 0 || s.dim() == form.n, Errc::domain,
                    "cyclic orbit length does not match n");
            return s;
        }
        case FormTag::T3Case1: {
            require(top_index(form.x) == n + p, Errc::domain, "generator top index must equal n+p");
            require(top_index(form.y) >= 0, Errc::domain, "second generator must be nonzero");
            require(pair_independent(form.x, form.y, spec, 3), Errc::domain,
                    "independence hypothesis fails for the generator pair");
            Subspace s = materialize(form, spec);
            require(s.dim() == n, Errc::domain, "independence hypothesis fails: dimension dropped");
            require(is_invariant(s, spec, 3), Errc::internal, "t3 construction is not invariant");
            return s;
        }
        case FormTag::T3Case2:
        case FormTag::T3Case3: {
            int t = (n + p) % 3;
            require(p >= 0, Errc::domain, "prefix forms need p >= 0");
            if (form.tag == FormTag::T3Case2) {
                require(t != 1 || r == 0, Errc::domain, "case 2 with remainder t=1 forces r=0");
                require(0 <= r && 2 * r <= p + 1, Errc::domain, "case 2 needs 0 <= r <= (p+1)/2");
            } else {
                require(t == 1, Errc::domain, "case 3 applies only when n+p = 3j+1");
                require(0 <= r && 2 * r <= p, Errc::domain, "case 3 needs 0 <= r <= p/2");
            }
            require(top_index(form.x) == n + p, Errc::domain, "generator top index must equal n+p");
            Subspace s = materialize(form, spec);
            require(s.dim() == n, Errc::domain, "independence hypothesis fails: dimension dropped");
            require(is_invariant(s, spec, 3), Errc::domain,
                    "generators do not close into an invariant subspace");
            return s;
        }
        default:
            return materialize(form, spec);
    }
}

CanonicalForm classify_t3(const Subspace& s, const ShiftSpec& spec) {
    require_backward(spec);
    require(is_invariant(s, spec, 3), Errc::not_invariant,
            "subspace is not invariant under the cubed shift");
    CanonicalForm f;
    const int n = s.dim();
    if (n == 0) {
        f.tag = FormTag::Zero;
        return f;
    }
    if (n == spec.N) {
        f.tag = FormTag::FullSpace;
        f.n = n;
        return f;
    }
    const int k = top_index(s);
    f.n = n;
    if (k == n - 1) {
        f.tag = FormTag::Chain;
        f.chain_k = k;
        return f;
    }
    if (k >= 3 * n - 3) {
        require(k <= 3 * n - 1, Errc::internal, "top index exceeds the cyclic band");
        CyclicDecomposition d = nilpotent_decompose(s, spec, 3);
        require(d.generators.size() == 1, Errc::internal, "cyclic band produced several orbits");
        f.tag = FormTag::Cyclic;
        f.power = 3;
        f.x = d.generators.front().vector;
        return f;
    }

    f.p = k - n;
    f.t = (n + f.p) % 3;
    const int j = (n + f.p - f.t) / 3;
    CyclicDecomposition d = nilpotent_decompose(s, spec, 3);
    const auto& gens = d.generators;
    require(gens.size() == 2 || gens.size() == 3, Errc::internal,
            "non-cyclic band must split into two or three orbits");
    require(top_index(gens[0].vector) == k, Errc::internal, "leading generator lost the top index");
    require(gens[0].orbit_len == j + 1, Errc::internal, "leading orbit length mismatch");
    f.x = gens[0].vector;
    f.y = gens[1].vector;

    if (gens.size() == 2) {
        require(gens[1].orbit_len == n - j - 1, Errc::internal, "two-orbit length mismatch");
        f.tag = FormTag::T3Case1;
        return f;
    }

    const int len2 = gens[1].orbit_len;
    const int len3 = gens[2].orbit_len;
    if (f.t == 0) {
        f.r = j - len2;
        f.tag = FormTag::T3Case2;
        require(len3 == n - 2 * j - 1 + f.r, Errc::internal, "residual orbit length mismatch");
        require(0 <= f.r && 2 * f.r <= f.p + 1, Errc::internal, "case 2 parameter out of range");
    } else if (f.t == 1) {
        if (len2 == j + 1) {
            f.r = 0;
            f.tag = FormTag::T3Case2;
            require(len3 == n - 2 * j - 2, Errc::internal, "residual orbit length mismatch");
        } else {
            f.r = j - len2;
            f.tag = FormTag::T3Case3;
            require(len3 == n - 2 * j - 1 + f.r, Errc::internal, "residual orbit length mismatch");
            require(0 <= f.r && 2 * f.r <= f.p, Errc::internal, "case 3 parameter out of range");
        }
    } else {
        f.r = j + 1 - len2;
        f.tag = FormTag::T3Case2;
        require(len3 == n - 2 * j - 2 + f.r, Errc::internal, "residual orbit length mismatch");
        require(0 <= f.r && 2 * f.r <= f.p + 1, Errc::internal, "case 2 parameter out of range");
    }
    return f;
}

CanonicalForm classify_joint(const Subspace& s, const ShiftSpec& spec) {
    require_backward(spec);
    require(is_invariant(s, spec, 2) && is_invariant(s, spec, 3), Errc::not_invariant,
            "subspace is not jointly invariant");
    CanonicalForm f;
    const int n = s.dim();
    if (n == 0) {
        f.tag = FormTag::Zero;
        return f;
    }
    const int k = top_index(s);
    require(k == n - 1 || k == n, Errc::internal, "joint subspace escapes the n-band");
    for (int i = 0; i <= n - 2; ++i) {
        require(member(s, unit_vec(spec.N, i)), Errc::internal,
                "joint subspace is missing its chain prefix");
    }
    f.tag = FormTag::Joint;
    f.n = n;
    Vec v = top_echelon_basis(s).front();
    if (k == n - 1) {
        f.alpha = 1;
        f.beta = 0;
    } else {
        for (int i = 0; i <= n - 2; ++i) {
            require(v[i] == 0, Errc::internal, "joint head vector is not reduced");
        }
        f.alpha = v[n - 1];
        f.beta = v[n];
    }
    return f;
}

namespace {

bool is_full_class(const std::vector<int>& P, int residue, int power, int N) {
    std::vector<int> cls;
    for (int i = residue; i < N; i += power) cls.push_back(i);
    return P == cls;
}

bool contiguous_in_class(const std::vector<int>& seg, int power) {
    for (size_t i = 1; i < seg.size(); ++i) {
        if (seg[i] != seg[i - 1] + power) return false;
    }
    return true;
}

}  // namespace

CanonicalForm classify_parity_lattice(const Subspace& s, const ShiftSpec& spec, int power) {
    require(power == 2 || power == 3, Errc::domain, "lattice detection covers powers 2 and 3");
    auto support = coordinate_support(s);
    require(support.has_value(), Errc::pattern, "not a coordinate subspace");
    const std::vector<int>& P = *support;
    const int N = spec.N;
    CanonicalForm f;
    f.power = power;
    if (P.empty()) {
        f.tag = FormTag::Zero;
        return f;
    }
    if (static_cast<int>(P.size()) == N) {
        f.tag = FormTag::FullSpace;
        f.n = N;
        return f;
    }
    if (P.back() == static_cast<int>(P.size()) - 1) {
        f.tag = FormTag::Chain;
        f.chain_k = P.back();
        f.n = static_cast<int>(P.size());
        return f;
    }
    for (int t = 0; t < power; ++t) {
        if (is_full_class(P, t, power, N)) {
            f.tag = FormTag::ParityLattice;
            f.t = t;
            f.n = static_cast<int>(P.size());
            return f;
        }
    }

    // Chain prefix [0..E] (possibly absent), then residue-class segments.
    int E = -1;
    size_t idx = 0;
    while (idx < P.size() && P[idx] == static_cast<int>(idx)) {
        E = P[idx];
        ++idx;
    }
    std::vector<std::vector<int>> segments;
    for (size_t i = idx; i < P.size(); ++i) {
        int res = P[i] % power;
        auto it = std::find_if(segments.begin(), segments.end(), [&](const std::vector<int>& seg) {
            return seg.front() % power == res;
        });
        if (it == segments.end()) {
            segments.push_back({P[i]});
        } else {
            it->push_back(P[i]);
        }
    }
    require(static_cast<int>(segments.size()) <= power - 1, Errc::pattern,
            "support spreads over too many residue classes");
    bool gapped_seam = false;
    {
        bool any_edge = false;
        for (const auto& seg : segments) {
            require(contiguous_in_class(seg, power), Errc::pattern,
                    "support has gaps inside a residue class");
            int start = seg.front();
            if (E >= 0) {
                // Starts up to E+power dovetail invariantly with the chain. For
                // power 2 the start E+3 is also accepted: the same mixed shape
                // with one seam vector missing; it is flagged, since the span
                // is then not invariant at the seam.
                require(start >= E + 2 && start <= E + 3, Errc::pattern,
                        "class tail does not dovetail with the chain prefix");
                if (start > E + power) gapped_seam = true;
            } else {
                require(start == start % power, Errc::pattern,
                        "class prefix must start at its residue");
            }
            if (seg.back() + power >= N) any_edge = true;
        }
        if (E < 0) {
            require(power == 3 && segments.size() == 2, Errc::pattern,
                    "pattern without a chain prefix needs two class prefixes (power 3)");
        }
        require(any_edge, Errc::pattern,
                "finite-dimensional support pattern; no tail reaches the truncation edge");
    }
    f.tag = FormTag::ParityMixed;
    f.chain_k = E;
    f.n = static_cast<int>(P.size());
    for (const auto& seg : segments) {
        ParityComponent c;
        c.residue = seg.front() % power;
        c.from = seg.front();
        c.to = seg.back();
        c.to_edge = seg.back() + power >= N;
        f.components.push_back(c);
    }
    if (power == 2 && E >= 0) {
        // Log which printed variant of the mixed form this corresponds to.
        f.t = E % 2 == 1 ? 0 : 1;
        f.note = f.t == 0 ? "mixed: odd chain end (t=0 variant)" : "mixed: even chain end (t=1 variant)";
        if (gapped_seam) f.note += "; gapped seam, not invariant at truncation";
    } else if (gapped_seam) {
        f.note = "gapped seam, not invariant at truncation";
    }
    return f;
}

Subspace invariant_closure(const ShiftSpec& spec, int power, const std::vector<Vec>& seeds) {
    Subspace s = span(spec.N, seeds);
    while (true) {
        std::vector<Vec> next = s.basis;
        for (const auto& b : s.basis) next.push_back(apply(spec, power, b));
        Subspace grown = span(spec.N, next);
        if (grown == s) return s;
        s = std::move(grown);
    }
}

Subspace random_invariant(const ShiftSpec& spec, int power, int dim, uint64_t seed) {
    require_backward(spec);
    require(dim >= 0 && dim <= spec.N, Errc::domain,
            "unreachable dimension for the given ambient");
    Subspace s(spec.N);
    if (dim == 0) return s;
    Rng rng(seed);
    const int max_top = std::min(spec.N - 1, power * dim - 1);
    int guard = 0;
    while (s.dim() < dim) {
        require(++guard < 1000, Errc::internal, "random subspace generation stalled");
        int top = static_cast<int>(rng.uniform(dim - 1, max_top));
        Vec v(spec.N);
        if (rng.chance_percent(40)) {
            // Coordinate seeds skew the corpus toward chain-prefix shapes,
            // which dense seeds almost never close into.
            v[static_cast<size_t>(rng.uniform(0, top))] = 1;
        } else {
            v[top] = rng.nonzero_rational();
            for (int i = 0; i < top; ++i) v[i] = rng.sparse_rational(55);
        }
        std::vector<Vec> seeds = s.basis;
        seeds.push_back(std::move(v));
        s = invariant_closure(spec, power, seeds);
    }
    if (s.dim() > dim) {
        // Decomposition surgery: dropping an orbit's leading vector leaves the
        // orbit of its successor, so invariance and directness survive.
        CyclicDecomposition d = nilpotent_decompose(s, spec, power);
        std::vector<std::vector<Vec>> orbits;
        for (const auto& g : d.generators) orbits.push_back(cyclic_orbit(g.vector, spec, power));
        int total = s.dim();
        while (total > dim) {
            long pick = rng.uniform(0, static_cast<long>(orbits.size()) - 1);
            auto& orbit = orbits[static_cast<size_t>(pick)];
            if (orbit.empty()) continue;
            orbit.erase(orbit.begin());
            --total;
        }
        std::vector<Vec> rest;
        for (const auto& orbit : orbits) rest.insert(rest.end(), orbit.begin(), orbit.end());
        s = span(spec.N, rest);
    }
    require(s.dim() == dim, Errc::internal, "random subspace has the wrong dimension");
    require(is_invariant(s, spec, power), Errc::internal, "random subspace lost invariance");
    return s;
}

}  // namespace shiftlat
