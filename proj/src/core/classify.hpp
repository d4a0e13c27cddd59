#pragma once

#include "core/invariants.hpp"

#include <cstdint>
#include <string>

namespace shiftlat {

enum class FormTag {
    Zero,
    FullSpace,
    Chain,
    Cyclic,
    T2NonCyclic,
    T3Case1,
    T3Case2,
    T3Case3,
    Joint,
    ParityLattice,
    ParityMixed,
};

std::string form_tag_name(FormTag tag);

/// One residue-class segment of a coordinate-pattern form: basis indices
/// {from, from + power, ..., to}; to_edge marks a tail that runs to the
/// truncation boundary (the stand-in for an infinite tail).
struct ParityComponent {
    int residue = 0;
    int from = 0;
    int to = 0;
    bool to_edge = false;
};

/// Tagged classification result. Which fields are meaningful depends on tag:
///   Chain          chain_k
///   Cyclic         power, x, n
///   T2NonCyclic    n, p, x            (p = -1 degenerates to the chain M_{n-1})
///   T3Case1        n, p, t, x, y      (two full orbits, no forced chain)
///   T3Case2/3      n, p, r, x, y      (chain prefix + two orbit prefixes)
///   Joint          n, alpha, beta
///   ParityLattice  power, t
///   ParityMixed    power, chain_k (or -1), components
struct CanonicalForm {
    FormTag tag = FormTag::Zero;
    int n = 0;
    int p = 0;
    int r = 0;
    int t = 0;
    int power = 0;
    int chain_k = -1;
    Vec x, y;
    Rat alpha, beta;
    std::vector<ParityComponent> components;
    std::string note;
};

/// Rebuilds the subspace a form describes, in the given truncation. Inverse of
/// the classifiers: materialize(classify(s)) == s, exactly.
Subspace materialize(const CanonicalForm& form, const ShiftSpec& spec);

/// span{e_0..e_{n-p-2}} + {x, T*^2 x, ..., T*^{2p} x} for -1 <= p <= n-3 and
/// top_index(x) = n+p. The p = -1 convention drops the orbit segment and the
/// form degenerates to M_{n-1}. The result has dimension n, is invariant under
/// the squared backward shift, and is non-cyclic.
Subspace construct_t2(int n, int p, const Vec& x, const ShiftSpec& spec);

/// Classifies a subspace invariant under the squared backward shift.
CanonicalForm classify_t2(const Subspace& s, const ShiftSpec& spec);

/// Validates parameters of a T3Case* / Cyclic / Chain form and materializes it.
Subspace construct_t3(const CanonicalForm& form, const ShiftSpec& spec);

/// Classifies a subspace invariant under the cubed backward shift, matching by
/// decomposition shape (minimal p, orbit-length multiset, chain prefix) rather
/// than by literal span expressions.
CanonicalForm classify_t3(const Subspace& s, const ShiftSpec& spec);

/// Classifies a subspace invariant under both the squared and cubed backward
/// shift as span{e_0..e_{n-2}, alpha e_{n-1} + beta e_n}, (alpha, beta) != 0.
CanonicalForm classify_joint(const Subspace& s, const ShiftSpec& spec);

/// Recognizes the residue-class support patterns of coordinate subspaces for
/// power 2 or 3: one full class mod power, or a chain prefix plus class tails
/// running to the truncation edge, plus Chain / FullSpace / Zero. Inputs that
/// are not coordinate subspaces or match no pattern are rejected.
CanonicalForm classify_parity_lattice(const Subspace& s, const ShiftSpec& spec, int power);

/// Seeded random subspace closed under the power-th iterate: random vectors,
/// span closure under the operator until stable, then trimming to the target
/// dimension by shortening decomposition orbits from their generator ends.
/// Independent of the canonical-form constructions above.
Subspace random_invariant(const ShiftSpec& spec, int power, int dim, uint64_t seed);

/// Closure of the given vectors under the power-th iterate.
Subspace invariant_closure(const ShiftSpec& spec, int power, const std::vector<Vec>& seeds);

}  // namespace shiftlat
