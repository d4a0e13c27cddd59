#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/error.hpp"
#include "core/subspace.hpp"
#include "support/oracles.hpp"

using namespace shiftlat;
using test::random_mat;
using test::random_vec;
using test::rank_by_minors;

namespace {

Mat mat_from(std::initializer_list<std::initializer_list<int>> rows) {
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rref on the identity and on dependent rows") {
    auto r = rref(Mat::identity(2));
    CHECK(r.rank == 2);
    CHECK(r.mat == Mat::identity(2));

    auto r2 = rref(mat_from({{1, 2}, {2, 4}}));
    CHECK(r2.rank == 1);
    CHECK(r2.mat == mat_from({{1, 2}, {0, 0}}));
}

TEST_CASE("rref rank agrees with the minor-expansion oracle on random 5x5") {
    Rng rng(101);
    for (int it = 0; it < 40; ++it) {
        Mat m = random_mat(rng, 5, 5, 45);
        CHECK(mat_rank(m) == rank_by_minors(m));
    }
}

TEST_CASE("rref is idempotent") {
    Rng rng(102);
    for (int it = 0; it < 200; ++it) {
        Mat m = random_mat(rng, static_cast<int>(rng.uniform(1, 6)),
                           static_cast<int>(rng.uniform(1, 6)));
        Mat once = rref(m).mat;
        CHECK(rref(once).mat == once);
    }
}

TEST_CASE("kernel of identity, zero, and a Jordan block") {
    CHECK(kernel_basis(Mat::identity(4)).is_zero());
    CHECK(kernel_basis(Mat::identity(4)).ambient == 4);

    CHECK(kernel_basis(Mat::zero(3, 3)) == full_space(3));

    // Nilpotent Jordan block (superdiagonal ones), N = 5: kernel is e_0.
    Mat j(5, 5);
    for (int i = 0; i + 1 < 5; ++i) j.at(i, i + 1) = 1;
    Subspace k = kernel_basis(j);
    REQUIRE(k.dim() == 1);
    CHECK(k.basis[0] == unit_vec(5, 0));
}

TEST_CASE("rank-nullity on random matrices") {
    Rng rng(103);
    for (int it = 0; it < 200; ++it) {
        int rows = static_cast<int>(rng.uniform(1, 8));
        int cols = static_cast<int>(rng.uniform(1, 8));
        Mat m = random_mat(rng, rows, cols);
        CHECK(mat_rank(m) + static_cast<int>(kernel_rows(m).size()) == cols);
    }
}

TEST_CASE("span removes duplicates and canonicalizes") {
    Subspace s = span(4, {unit_vec(4, 0), unit_vec(4, 0)});
    CHECK(s.dim() == 1);
    CHECK(s.basis[0] == unit_vec(4, 0));

    CHECK(span(4, {}).dim() == 0);
    CHECK(span(4, {}).ambient == 4);

    Vec e01 = unit_vec(6, 0);
    e01[1] = 1;
    CHECK(span(6, {e01, unit_vec(6, 1)}) == span(6, {unit_vec(6, 0), unit_vec(6, 1)}));
}

TEST_CASE("membership matches the stacked-rank test") {
    Subspace s = span(4, {unit_vec(4, 0), unit_vec(4, 1)});
    Vec v = unit_vec(4, 0);
    v[1] = 1;
    CHECK(member(s, v));
    CHECK_FALSE(member(span(4, {unit_vec(4, 0)}), unit_vec(4, 1)));

    Rng rng(104);
    for (int it = 0; it < 200; ++it) {
        int dim = static_cast<int>(rng.uniform(2, 7));
        std::vector<Vec> gens;
        for (long g = rng.uniform(1, 3); g > 0; --g) gens.push_back(random_vec(rng, dim));
        Subspace sp = span(dim, gens);
        Vec w = random_vec(rng, dim);
        std::vector<Vec> stacked = sp.basis;
        stacked.push_back(w);
        bool oracle = mat_rank(Mat::from_rows(stacked, dim)) == sp.dim();
        CHECK(member(sp, w) == oracle);
    }
}

TEST_CASE("member rejects mismatched dimensions") {
    CHECK_THROWS_AS(member(span(4, {unit_vec(4, 0)}), unit_vec(5, 0)), Error);
    CHECK_THROWS_AS(span(4, {unit_vec(3, 0)}), Error);
}

TEST_CASE("sum and intersection basics") {
    Subspace a = span(3, {unit_vec(3, 0)});
    Subspace b = span(3, {unit_vec(3, 1)});
    CHECK(sum_subspaces(a, b) == span(3, {unit_vec(3, 0), unit_vec(3, 1)}));
    CHECK(intersect_subspaces(a, b).dim() == 0);
    CHECK(sum_subspaces(a, a) == a);
    CHECK(intersect_subspaces(a, a) == a);
}

TEST_CASE("Grassmann dimension identity on random pairs") {
    Rng rng(105);
    for (int it = 0; it < 300; ++it) {
        int dim = static_cast<int>(rng.uniform(2, 8));
        std::vector<Vec> ga, gb;
        for (long g = rng.uniform(1, 4); g > 0; --g) ga.push_back(random_vec(rng, dim));
        for (long g = rng.uniform(1, 4); g > 0; --g) gb.push_back(random_vec(rng, dim));
        Subspace a = span(dim, ga), b = span(dim, gb);
        Subspace s = sum_subspaces(a, b), i = intersect_subspaces(a, b);
        CHECK(a.dim() + b.dim() == s.dim() + i.dim());
        // intersection members belong to both sides
        for (const auto& v : i.basis) {
            CHECK(member(a, v));
            CHECK(member(b, v));
        }
    }
}

TEST_CASE("direct sum detection") {
    CHECK(is_direct_sum({span(3, {unit_vec(3, 0)}), span(3, {unit_vec(3, 1)})}));
    Vec e01 = unit_vec(3, 0);
    e01[1] = 1;
    CHECK_FALSE(is_direct_sum(
        {span(3, {unit_vec(3, 0)}), span(3, {e01}), span(3, {unit_vec(3, 1)})}));
}

TEST_CASE("canonical equality: equal spans have identical bases") {
    Rng rng(106);
    for (int it = 0; it < 200; ++it) {
        int dim = static_cast<int>(rng.uniform(2, 7));
        std::vector<Vec> gens;
        for (long g = rng.uniform(1, 3); g > 0; --g) gens.push_back(random_vec(rng, dim));
        Subspace s = span(dim, gens);
        // Re-span from scrambled combinations of the basis.
        std::vector<Vec> mixed;
        for (const auto& b : s.basis) {
            Vec v = b;
            for (const auto& other : s.basis) {
                Rat c = rng.sparse_rational(50);
                for (int q = 0; q < dim; ++q) v[static_cast<size_t>(q)] += c * other[static_cast<size_t>(q)];
            }
            mixed.push_back(v);
        }
        Subspace s2 = span(dim, mixed);
        if (s2.dim() == s.dim()) {
            CHECK(s2 == s);
            CHECK(s2.basis == s.basis);
        }
    }
}

TEST_CASE("top-echelon basis has distinct unit tops and spans the subspace") {
    Rng rng(107);
    for (int it = 0; it < 200; ++it) {
        int dim = static_cast<int>(rng.uniform(2, 8));
        std::vector<Vec> gens;
        for (long g = rng.uniform(1, 4); g > 0; --g) gens.push_back(random_vec(rng, dim));
        Subspace s = span(dim, gens);
        auto te = top_echelon_basis(s);
        REQUIRE(static_cast<int>(te.size()) == s.dim());
        int prev = dim;
        for (const auto& v : te) {
            int t = top_index(v);
            CHECK(t < prev);  // strictly descending tops
            prev = t;
            CHECK(v[static_cast<size_t>(t)] == 1);
            CHECK(member(s, v));
        }
        CHECK(span(dim, te) == s);
    }
}

TEST_CASE("zero subspace keeps its ambient dimension") {
    Subspace z(5);
    CHECK(z.dim() == 0);
    CHECK(z.ambient == 5);
    CHECK(top_index(z) == -1);
    CHECK(chain_subspace(5, -1) == z);
}
