#pragma once

#include "core/shift.hpp"
#include "core/subspace.hpp"

namespace shiftlat {

/// True iff the power-th iterate of the shift maps s into itself.
bool is_invariant(const Subspace& s, const ShiftSpec& spec, int power);

/// Orbit [x, S x, S^2 x, ...] under S = the power-th iterate, up to the last
/// nonzero element. The orbit of a nonzero vector is linearly independent, and
/// its length is floor(top_index(x) / power) + 1 for the backward direction.
std::vector<Vec> cyclic_orbit(const Vec& x, const ShiftSpec& spec, int power);

struct CyclicGenerator {
    Vec vector;
    int orbit_len = 0;
};

/// Direct-sum splitting of an invariant subspace into cyclic orbits.
struct CyclicDecomposition {
    int power = 0;
    std::vector<CyclicGenerator> generators;

    int total_dim() const;
};

/// Splits a T*^l-invariant subspace into a direct sum of cyclic orbits.
///
/// Greedy extraction on the top-echelon basis: the basis tops form one full
/// downward ladder per residue class mod l, so repeatedly taking the vector of
/// maximal remaining top index and removing its orbit's ladder yields at most
/// l generators whose orbits recompose the subspace exactly. Generators carry
/// unit coefficient at their top index.
CyclicDecomposition nilpotent_decompose(const Subspace& s, const ShiftSpec& spec, int power);

/// Span of all orbit vectors of the decomposition (the recomposition).
Subspace decomposition_span(const CyclicDecomposition& d, const ShiftSpec& spec);

std::vector<Subspace> decomposition_parts(const CyclicDecomposition& d, const ShiftSpec& spec);

/// Decides whether orbit(x) union orbit(y) is linearly independent by testing
/// only the two terminal orbit vectors.
bool pair_independent(const Vec& x, const Vec& y, const ShiftSpec& spec, int power);

/// True iff the nilpotent matrix is a single Jordan block, by the rank
/// profile: rank(m^j) = N - j for 1 <= j <= N. Throws if m is not nilpotent.
bool unicellular_rank_test(const Mat& m);

}  // namespace shiftlat
