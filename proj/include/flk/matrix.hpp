#pragma once

#include "flk/arith.hpp"
#include "flk/errors.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace flk {

// Dense row-major matrix. Value semantics; dimensions fixed at construction.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(size_t rows, size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw PreconditionError("ragged matrix initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Matrix identity(size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
    static Matrix identity(size_t n) { return identity(n, T(0), T(1)); }

    // Column matrix from a vector.
    static Matrix column(const std::vector<T>& v) {
        Matrix m(v.size(), 1);
        for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }
    // Matrix whose columns are the given vectors (all of length rows).
    static Matrix from_columns(const std::vector<std::vector<T>>& cols, size_t rows) {
        Matrix m(rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw PreconditionError("column length mismatch");
            for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> col(size_t j) const {
        std::vector<T> v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<T> row(size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const {
        Matrix s(nr, nc);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
        return s;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    const std::vector<T>& data() const { return data_; }

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw PreconditionError("matrix product dimension mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw PreconditionError("matrix sum dimension mismatch");
    Matrix<T> c = a;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw PreconditionError("matrix difference dimension mismatch");
    Matrix<T> c = a;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
    return c;
}

template <class T, class S>
Matrix<T> scale(const Matrix<T>& a, const S& s) {
    Matrix<T> c = a;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
    return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size()) throw PreconditionError("matrix-vector dimension mismatch");
    std::vector<T> out(a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
    return out;
}

// Block diagonal sum.
template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b, const T& zero = T(0)) {
    Matrix<T> c(a.rows() + b.rows(), a.cols() + b.cols(), zero);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
    return c;
}

template <class T>
bool is_symmetric(const Matrix<T>& m) {
    if (!m.square()) return false;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// x^T G y.
template <class T>
T bilinear(const Matrix<T>& g, const std::vector<T>& x, const std::vector<T>& y) {
    return dot(x, g * y);
}

// Characteristic polynomial det(T*I - A) over any commutative ring, by the
// division-free Berkowitz algorithm. Coefficients low degree first; the
// result has size n+1 and is monic.
template <class T>
std::vector<T> berkowitz_charpoly(const Matrix<T>& a, const T& zero, const T& one) {
    if (!a.square()) throw PreconditionError("charpoly of a non-square matrix");
    const size_t n = a.rows();
    // Coefficients high degree first during the recursion.
    std::vector<T> c{one};
    if (n == 0) return c;
    c = {one, T(zero - a(0, 0))};
    for (size_t r = 1; r < n; ++r) {
        // Leading principal submatrix of size r, column R = a(0..r-1, r),
        // row S = a(r, 0..r-1), corner a(r, r).
        std::vector<T> toeplitz_col(r + 2, zero);
        toeplitz_col[0] = one;
        toeplitz_col[1] = zero - a(r, r);
        std::vector<T> vec(r);
        for (size_t i = 0; i < r; ++i) vec[i] = a(i, r);
        for (size_t k = 2; k < r + 2; ++k) {
            T s = zero;
            for (size_t i = 0; i < r; ++i) s = s + a(r, i) * vec[i];
            toeplitz_col[k] = zero - s;
            std::vector<T> next(r, zero);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j) next[i] = next[i] + a(i, j) * vec[j];
            vec = std::move(next);
        }
        std::vector<T> nc(r + 2, zero);
        for (size_t i = 0; i < r + 2; ++i)
            for (size_t j = 0; j <= i && j < c.size(); ++j)
                nc[i] = nc[i] + toeplitz_col[i - j] * c[j];
        c = std::move(nc);
    }
    std::vector<T> low(c.rbegin(), c.rend());
    return low;
}

template <class T>
T berkowitz_det(const Matrix<T>& a, const T& zero, const T& one) {
    auto cp = berkowitz_charpoly(a, zero, one);
    T d = cp[0];
    if (a.rows() % 2) d = zero - d;
    return d;
}

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rational(const IntMatrix& m);
// Throws if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);

// Exact determinant (fraction-free Bareiss). Rank-0 matrix has determinant 1.
Int det(const IntMatrix& m);
Rat det(const RatMatrix& m);

size_t rank(const RatMatrix& m);
size_t rank(const IntMatrix& m);

// Basis of the rational null space {x : m x = 0}, columns of the result.
RatMatrix rational_kernel(const RatMatrix& m);

RatMatrix inverse(const RatMatrix& m);

// Saturated integer basis of {x in Z^n : m x = 0}, as columns, in column
// Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& m);

// Row Hermite normal form of the row span (zero rows dropped). Pivots are
// positive and entries above each pivot are reduced into [0, pivot).
IntMatrix hnf_rows(const IntMatrix& m);

// Column Hermite normal form of the column span (zero columns dropped).
IntMatrix hnf_columns(const IntMatrix& m);

// Non-zero Smith invariants d_1 | d_2 | ... of an integer matrix.
IntVec smith_invariants(const IntMatrix& m);

// Saturation of the column span of m inside Z^rows, as hnf columns.
IntMatrix saturation(const IntMatrix& m);

// Primitive integer vector on the line of a non-zero rational vector.
IntVec primitive_integer(const RatVec& v);

// Integer combination of rational kernel columns scaled to an integer basis
// of the same rational span (not necessarily saturated).
IntMatrix clear_denominators_columns(const RatMatrix& m);

}  // namespace flk
