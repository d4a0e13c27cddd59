#pragma once

#include "core/rational.hpp"

#include <utility>

namespace shiftlat {

/// Dense row-major matrix over exact rationals.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const Mat& o) const = default;

    static Mat identity(int n);
    static Mat zero(int r, int c) { return Mat(r, c); }
    static Mat from_rows(const std::vector<Vec>& rows, int cols);

    bool is_zero() const;
    Vec row(int i) const;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const Rat& c, const Mat& a);
Vec mat_apply(const Mat& a, const Vec& v);

/// a^k for k >= 0 (k = 0 gives the identity).
Mat mat_pow(const Mat& a, int k);

struct RrefResult {
    Mat mat;
    int rank = 0;
    std::vector<int> pivot_cols;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. The pivot in
/// each step is the first row with a nonzero entry in the leftmost unsettled
/// column; no magnitude-based pivoting.
RrefResult rref(const Mat& m);

int mat_rank(const Mat& m);

/// Basis rows of ker(m), one per free column, in canonical reduced form.
std::vector<Vec> kernel_rows(const Mat& m);

}  // namespace shiftlat
