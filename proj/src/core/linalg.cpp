#include "core/linalg.hpp"

#include "core/error.hpp"

#include <algorithm>

namespace shiftlat {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
    Mat m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        require(static_cast<int>(rows[i].size()) == cols, Errc::dim_mismatch,
                "row length does not match column count");
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Rat& q) { return q == 0; });
}

Vec Mat::row(int i) const {
    Vec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    require(a.cols == b.rows, Errc::dim_mismatch, "matrix product shape mismatch");
    Mat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                if (b.at(k, j) != 0) c.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return c;
}

Mat mat_add(const Mat& a, const Mat& b) {
    require(a.rows == b.rows && a.cols == b.cols, Errc::dim_mismatch, "matrix sum shape mismatch");
    Mat c(a.rows, a.cols);
    for (size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] + b.a[i];
    return c;
}

Mat mat_scale(const Rat& c, const Mat& a) {
    Mat out = a;
    for (auto& q : out.a) q *= c;
    return out;
}

Vec mat_apply(const Mat& a, const Vec& v) {
    require(a.cols == static_cast<int>(v.size()), Errc::dim_mismatch, "matrix-vector shape mismatch");
    Vec out(a.rows);
    for (int i = 0; i < a.rows; ++i) {
        Rat acc = 0;
        for (int j = 0; j < a.cols; ++j) {
            if (a.at(i, j) != 0 && v[j] != 0) acc += a.at(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

Mat mat_pow(const Mat& a, int k) {
    require(a.rows == a.cols, Errc::dim_mismatch, "matrix power needs a square matrix");
    require(k >= 0, Errc::domain, "negative matrix power");
    Mat acc = Mat::identity(a.rows);
    for (int i = 0; i < k; ++i) acc = mat_mul(acc, a);
    return acc;
}

RrefResult rref(const Mat& m) {
    RrefResult res;
    res.mat = m;
    Mat& w = res.mat;
    int pivot_row = 0;
    for (int col = 0; col < w.cols && pivot_row < w.rows; ++col) {
        int sel = -1;
        for (int i = pivot_row; i < w.rows; ++i) {
            if (w.at(i, col) != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pivot_row) {
            for (int j = 0; j < w.cols; ++j) std::swap(w.at(sel, j), w.at(pivot_row, j));
        }
        Rat inv = 1 / w.at(pivot_row, col);
        for (int j = col; j < w.cols; ++j) w.at(pivot_row, j) *= inv;
        for (int i = 0; i < w.rows; ++i) {
            if (i == pivot_row || w.at(i, col) == 0) continue;
            Rat f = w.at(i, col);
            for (int j = col; j < w.cols; ++j) w.at(i, j) -= f * w.at(pivot_row, j);
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

int mat_rank(const Mat& m) {
    return rref(m).rank;
}

std::vector<Vec> kernel_rows(const Mat& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> out;
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        Vec v(m.cols);
        v[j] = 1;
        for (int i = 0; i < r.rank; ++i) {
            int pc = r.pivot_cols[i];
            if (r.mat.at(i, j) != 0) v[pc] = -r.mat.at(i, j);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace shiftlat
