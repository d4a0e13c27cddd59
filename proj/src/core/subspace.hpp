#pragma once

#include "core/linalg.hpp"

#include <optional>

namespace shiftlat {

/// A finite-dimensional subspace stored by its canonical reduced-row-echelon
/// basis. Two subspaces are equal iff their stored bases are entry-wise equal,
/// so equality is syntactic. The zero subspace is an empty basis with an
/// explicit ambient dimension.
struct Subspace {
    int ambient = 0;
    std::vector<Vec> basis;

    Subspace() = default;
    explicit Subspace(int ambient_dim) : ambient(ambient_dim) {}

    int dim() const { return static_cast<int>(basis.size()); }
    bool is_zero() const { return basis.empty(); }

    bool operator==(const Subspace& o) const = default;
};

/// Largest index with a nonzero entry; -1 for the zero vector.
int top_index(const Vec& v);

/// Minimal k with s contained in span{e_0..e_k}; -1 for the zero subspace.
int top_index(const Subspace& s);

/// Canonical subspace spanned by the given vectors.
Subspace span(int ambient_dim, const std::vector<Vec>& vectors);

bool member(const Subspace& s, const Vec& v);

Subspace sum_subspaces(const Subspace& a, const Subspace& b);
Subspace intersect_subspaces(const Subspace& a, const Subspace& b);

/// ker(m) as a canonical subspace of the column space; dim = cols - rank.
Subspace kernel_basis(const Mat& m);

/// True iff dim of the sum equals the sum of dims.
bool is_direct_sum(const std::vector<Subspace>& parts);

/// Basis in echelon form with respect to the *highest* coordinate: each vector
/// has a distinct top index, unit coefficient there, and zeros at the top
/// positions of the other vectors. Rows are ordered by top index, descending.
/// This is the working basis for orbit extraction; the stored RREF basis stays
/// the canonical representative.
std::vector<Vec> top_echelon_basis(const Subspace& s);

/// Set of coordinates where some member of s is supported, via the RREF basis.
/// Returns nullopt unless s is spanned by standard basis vectors.
std::optional<std::vector<int>> coordinate_support(const Subspace& s);

Vec unit_vec(int ambient_dim, int i);
Vec zero_vec(int ambient_dim);

/// span{e_0..e_k}; k = -1 gives the zero subspace.
Subspace chain_subspace(int ambient_dim, int k);

Subspace full_space(int ambient_dim);

/// Image of s under an invertible diagonal map given by its diagonal entries.
Subspace apply_diagonal(const Vec& diag, const Subspace& s);

}  // namespace shiftlat
