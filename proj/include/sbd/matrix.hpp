#pragma once

#include <cassert>
#include <vector>

#include "sbd/scalar.hpp"

namespace sbd {

// Small dense row-major matrix. Entries are addressed 1-based, matching the
// index conventions of every formula in this library.
template <class S>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        assert(rows >= 0 && cols >= 0);
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 1; i <= n; ++i) m(i, i) = ScalarOps<S>::from_int(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& operator()(int i, int j) {
        assert(1 <= i && i <= rows_ && 1 <= j && j <= cols_);
        return a_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
    }
    const S& operator()(int i, int j) const {
        assert(1 <= i && i <= rows_ && 1 <= j && j <= cols_);
        return a_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 1; i <= rows_; ++i)
            for (int j = 1; j <= cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<S> a_;
};

// Plain product with a fixed accumulation order (left to right, inner index
// ascending) so floating-point results are deterministic.
template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
    assert(a.cols() == b.rows());
    Matrix<S> out(a.rows(), b.cols());
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= b.cols(); ++j) {
            S acc = ScalarOps<S>::from_int(0);
            for (int k = 1; k <= a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    return out;
}

} // namespace sbd
