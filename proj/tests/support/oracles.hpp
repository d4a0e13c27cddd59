// Test-only oracles, independent of the library's elimination path.
#pragma once

#include "core/linalg.hpp"
#include "core/rng.hpp"

#include <vector>

namespace shiftlat::test {

// Determinant by first-row minor expansion. Exponential; test sizes only.
inline Rat det_minor_expansion(const Mat& m) {
    const int n = m.rows;
    if (n == 1) return m.at(0, 0);
    Rat acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        Mat sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Rat term = m.at(0, j) * det_minor_expansion(sub);
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

// Rank as the largest k admitting a nonzero k x k minor.
inline int rank_by_minors(const Mat& m) {
    int kmax = std::min(m.rows, m.cols);
    for (int k = kmax; k >= 1; --k) {
        std::vector<int> rows(static_cast<size_t>(k)), cols(static_cast<size_t>(k));
        // enumerate k-subsets of rows and columns
        std::vector<int> rsel(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) rsel[static_cast<size_t>(i)] = i;
        auto next_subset = [](std::vector<int>& sel, int limit) {
            int k2 = static_cast<int>(sel.size());
            int i = k2 - 1;
            while (i >= 0 && sel[static_cast<size_t>(i)] == limit - k2 + i) --i;
            if (i < 0) return false;
            ++sel[static_cast<size_t>(i)];
            for (int j = i + 1; j < k2; ++j) sel[static_cast<size_t>(j)] = sel[static_cast<size_t>(j - 1)] + 1;
            return true;
        };
        do {
            std::vector<int> csel(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) csel[static_cast<size_t>(i)] = i;
            do {
                Mat sub(k, k);
                for (int i = 0; i < k; ++i) {
                    for (int j = 0; j < k; ++j) {
                        sub.at(i, j) = m.at(rsel[static_cast<size_t>(i)], csel[static_cast<size_t>(j)]);
                    }
                }
                if (det_minor_expansion(sub) != 0) return k;
            } while (next_subset(csel, m.cols));
        } while (next_subset(rsel, m.rows));
    }
    return 0;
}

inline Mat random_mat(Rng& rng, int rows, int cols, int zero_percent = 35) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.sparse_rational(zero_percent);
    }
    return m;
}

inline Vec random_vec(Rng& rng, int dim, int zero_percent = 35) {
    Vec v(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) v[static_cast<size_t>(i)] = rng.sparse_rational(zero_percent);
    return v;
}

}  // namespace shiftlat::test
