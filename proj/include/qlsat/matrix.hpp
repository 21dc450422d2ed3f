#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qlsat/errors.hpp"
#include "qlsat/scalar.hpp"

namespace qlsat {

/// Dense matrix over an exact field, row-major. Dimensions may be zero in
/// either direction; a d x 0 matrix is how the zero subspace carries its
/// (empty) basis.
template <class S>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(checked_size(rows, cols), S(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = S(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const S& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const S& x : e_)
            if (!qlsat::is_zero(x)) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    Matrix conj_transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = field_traits<S>::conj(at(i, j));
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "matrix sum");
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "matrix difference");
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw dimension_mismatch("matrix product: inner dimensions disagree");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) {
                S& acc = r.at(i, j);
                for (int k = 0; k < a.cols_; ++k) acc += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    /// Columns listed in `keep`, in the given order.
    Matrix select_columns(const std::vector<int>& keep) const {
        Matrix r(rows_, static_cast<int>(keep.size()));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < r.cols_; ++j) r.at(i, j) = at(i, keep[j]);
        return r;
    }

    /// [A | B] side by side.
    static Matrix hconcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw dimension_mismatch("hconcat: row counts disagree");
        Matrix r(a.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

  private:
    static std::size_t checked_size(int rows, int cols) {
        if (rows < 0 || cols < 0) throw dimension_mismatch("negative matrix dimension");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }
    static void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw dimension_mismatch(std::string(op) + ": shapes disagree");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<S> e_;
};

/// Result of Gaussian elimination to reduced row-echelon form.
template <class S>
struct RrefResult {
    Matrix<S> mat;
    std::vector<int> pivot_cols;  // ascending
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

// Exact-field RREF: pick the first nonzero entry in each column as pivot
// (no magnitude concerns over Q or Q(i)), scale to 1, clear the column.
template <class S>
RrefResult<S> rref(Matrix<S> m) {
    RrefResult<S> out;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int prow = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!is_zero(m.at(i, col))) {
                prow = i;
                break;
            }
        }
        if (prow < 0) continue;
        if (prow != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(prow, j));
        S inv = S(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            S f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.mat = std::move(m);
    return out;
}

/// RREF together with the invertible row-operation matrix E, so that
/// result.mat == E * input.
template <class S>
std::pair<RrefResult<S>, Matrix<S>> rref_with_transform(const Matrix<S>& m) {
    Matrix<S> aug = Matrix<S>::hconcat(m, Matrix<S>::identity(m.rows()));
    // Eliminate using only the first m.cols() columns as pivot candidates.
    int row = 0;
    std::vector<int> pivots;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int prow = -1;
        for (int i = row; i < aug.rows(); ++i)
            if (!is_zero(aug.at(i, col))) {
                prow = i;
                break;
            }
        if (prow < 0) continue;
        if (prow != row)
            for (int j = 0; j < aug.cols(); ++j) std::swap(aug.at(row, j), aug.at(prow, j));
        S inv = S(1) / aug.at(row, col);
        for (int j = 0; j < aug.cols(); ++j) aug.at(row, j) *= inv;
        for (int i = 0; i < aug.rows(); ++i) {
            if (i == row || is_zero(aug.at(i, col))) continue;
            S f = aug.at(i, col);
            for (int j = 0; j < aug.cols(); ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    RrefResult<S> r;
    r.pivot_cols = std::move(pivots);
    r.mat = Matrix<S>(m.rows(), m.cols());
    Matrix<S> e(m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) r.mat.at(i, j) = aug.at(i, j);
        for (int j = 0; j < m.rows(); ++j) e.at(i, j) = aug.at(i, m.cols() + j);
    }
    return {std::move(r), std::move(e)};
}

/// Basis of the null space {x : m x = 0}, returned as the columns of an
/// (m.cols() x nullity) matrix. Standard free-column construction from
/// the RREF.
template <class S>
Matrix<S> kernel(const Matrix<S>& m) {
    RrefResult<S> r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<S> k(m.cols(), static_cast<int>(free_cols.size()));
    for (int j = 0; j < k.cols(); ++j) {
        int fc = free_cols[j];
        k.at(fc, j) = S(1);
        for (int i = 0; i < r.rank(); ++i) k.at(r.pivot_cols[i], j) = -r.mat.at(i, fc);
    }
    return k;
}

/// Inverse of a square nonsingular matrix by Gauss-Jordan on [M | I].
template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
    if (!m.is_square()) throw dimension_mismatch("inverse of a non-square matrix");
    auto [r, e] = rref_with_transform(m);
    if (r.rank() != m.rows()) throw error("inverse of a singular matrix");
    return e;
}

}  // namespace qlsat
