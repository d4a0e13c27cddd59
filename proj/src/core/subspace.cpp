#include "core/subspace.hpp"

#include "core/error.hpp"

#include <algorithm>

namespace shiftlat {

int top_index(const Vec& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
        if (v[i] != 0) return i;
    }
    return -1;
}

int top_index(const Subspace& s) {
    int k = -1;
    for (const auto& b : s.basis) k = std::max(k, top_index(b));
    return k;
}

Subspace span(int ambient_dim, const std::vector<Vec>& vectors) {
    require(ambient_dim >= 0, Errc::domain, "negative ambient dimension");
    for (const auto& v : vectors) {
        require(static_cast<int>(v.size()) == ambient_dim, Errc::dim_mismatch,
                "vector length does not match ambient dimension");
    }
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    RrefResult r = rref(Mat::from_rows(vectors, ambient_dim));
    for (int i = 0; i < r.rank; ++i) s.basis.push_back(r.mat.row(i));
    return s;
}

bool member(const Subspace& s, const Vec& v) {
    require(static_cast<int>(v.size()) == s.ambient, Errc::dim_mismatch,
            "vector length does not match ambient dimension");
    // Reduce v against the RREF basis; v is a member iff the residue vanishes.
    Vec w = v;
    for (const auto& b : s.basis) {
        int p = -1;
        for (int j = 0; j < s.ambient; ++j) {
            if (b[j] != 0) {
                p = j;
                break;
            }
        }
        if (p < 0) continue;
        if (w[p] != 0) {
            Rat f = w[p];  // basis pivots are 1
            for (int j = p; j < s.ambient; ++j) w[j] -= f * b[j];
        }
    }
    return std::all_of(w.begin(), w.end(), [](const Rat& q) { return q == 0; });
}

Subspace sum_subspaces(const Subspace& a, const Subspace& b) {
    require(a.ambient == b.ambient, Errc::dim_mismatch, "ambient dimension mismatch");
    std::vector<Vec> all = a.basis;
    all.insert(all.end(), b.basis.begin(), b.basis.end());
    return span(a.ambient, all);
}

Subspace intersect_subspaces(const Subspace& a, const Subspace& b) {
    require(a.ambient == b.ambient, Errc::dim_mismatch, "ambient dimension mismatch");
    const int n = a.ambient;
    if (a.is_zero() || b.is_zero()) return Subspace(n);
    // Zassenhaus block elimination: rows [u | u] for u in a, [w | 0] for w in b.
    // After elimination, rows with zero left half carry the intersection in the
    // right half.
    Mat block(a.dim() + b.dim(), 2 * n);
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < n; ++j) {
            block.at(i, j) = a.basis[i][j];
            block.at(i, n + j) = a.basis[i][j];
        }
    }
    for (int i = 0; i < b.dim(); ++i) {
        for (int j = 0; j < n; ++j) block.at(a.dim() + i, j) = b.basis[i][j];
    }
    RrefResult r = rref(block);
    std::vector<Vec> inter;
    for (int i = 0; i < r.mat.rows; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j) left_zero = r.mat.at(i, j) == 0;
        if (!left_zero) continue;
        Vec v(n);
        bool nz = false;
        for (int j = 0; j < n; ++j) {
            v[j] = r.mat.at(i, n + j);
            nz = nz || v[j] != 0;
        }
        if (nz) inter.push_back(std::move(v));
    }
    return span(n, inter);
}

Subspace kernel_basis(const Mat& m) {
    return span(m.cols, kernel_rows(m));
}

bool is_direct_sum(const std::vector<Subspace>& parts) {
    if (parts.empty()) return true;
    int ambient = parts.front().ambient;
    int total = 0;
    std::vector<Vec> all;
    for (const auto& p : parts) {
        require(p.ambient == ambient, Errc::dim_mismatch, "ambient dimension mismatch");
        total += p.dim();
        all.insert(all.end(), p.basis.begin(), p.basis.end());
    }
    return span(ambient, all).dim() == total;
}

std::vector<Vec> top_echelon_basis(const Subspace& s) {
    std::vector<Vec> work = s.basis;
    std::vector<Vec> out;
    // Forward pass: eliminate on the highest surviving coordinate.
    while (true) {
        int best = -1, best_top = -1;
        for (size_t i = 0; i < work.size(); ++i) {
            int t = top_index(work[i]);
            if (t > best_top) {
                best_top = t;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) break;
        Vec v = std::move(work[best]);
        work.erase(work.begin() + best);
        Rat inv = 1 / v[best_top];
        for (auto& q : v) q *= inv;
        for (auto& w : work) {
            if (w[best_top] != 0) {
                Rat f = w[best_top];
                for (int j = 0; j <= best_top; ++j) w[j] -= f * v[j];
            }
        }
        out.push_back(std::move(v));
    }
    // Back-substitution: zero each vector at the top positions of later rows.
    for (size_t i = 0; i < out.size(); ++i) {
        for (size_t k = i + 1; k < out.size(); ++k) {
            int t = top_index(out[k]);
            if (out[i][t] != 0) {
                Rat f = out[i][t];
                for (int j = 0; j <= t; ++j) out[i][j] -= f * out[k][j];
            }
        }
    }
    return out;
}

std::optional<std::vector<int>> coordinate_support(const Subspace& s) {
    std::vector<int> support;
    for (const auto& b : s.basis) {
        int nz = -1;
        for (int j = 0; j < s.ambient; ++j) {
            if (b[j] != 0) {
                if (nz >= 0) return std::nullopt;
                nz = j;
            }
        }
        if (nz < 0) continue;
        if (b[nz] != 1) return std::nullopt;
        support.push_back(nz);
    }
    std::sort(support.begin(), support.end());
    return support;
}

Vec unit_vec(int ambient_dim, int i) {
    require(i >= 0 && i < ambient_dim, Errc::domain, "basis index out of range");
    Vec v(ambient_dim);
    v[i] = 1;
    return v;
}

Vec zero_vec(int ambient_dim) {
    return Vec(ambient_dim);
}

Subspace chain_subspace(int ambient_dim, int k) {
    require(k < ambient_dim, Errc::domain, "chain index exceeds ambient dimension");
    Subspace s(ambient_dim);
    for (int i = 0; i <= k; ++i) s.basis.push_back(unit_vec(ambient_dim, i));
    return s;
}

Subspace full_space(int ambient_dim) {
    return chain_subspace(ambient_dim, ambient_dim - 1);
}

Subspace apply_diagonal(const Vec& diag, const Subspace& s) {
    require(static_cast<int>(diag.size()) == s.ambient, Errc::dim_mismatch,
            "diagonal length does not match ambient dimension");
    for (const auto& d : diag) require(d != 0, Errc::domain, "diagonal map must be invertible");
    std::vector<Vec> rows;
    rows.reserve(s.basis.size());
    for (const auto& b : s.basis) {
        Vec v(s.ambient);
        for (int j = 0; j < s.ambient; ++j) v[j] = diag[j] * b[j];
        rows.push_back(std::move(v));
    }
    return span(s.ambient, rows);
}

}  // namespace shiftlat
