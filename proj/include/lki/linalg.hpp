#pragma once

#include <optional>
#include <vector>

#include "lki/errors.hpp"

namespace lki {

/// Dense matrix over an exact commutative ring.  T needs +,-,*, is_zero(),
/// is_unit(), inverse(), ==, and value-initialization to the ring zero.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_((size_t)rows * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int r, int c) { return a_[(size_t)r * cols_ + c]; }
  const T& at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("Matrix: shape mismatch in product");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& x = at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const T& y = o.at(k, j);
          if (y.is_zero()) continue;
          r.at(i, j) += x * y;
        }
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Matrix: shape mismatch in sum");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Matrix: shape mismatch in difference");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
  }

  /// Kronecker product; the left factor is the more significant index.
  Matrix kron(const Matrix& o) const {
    Matrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const T& x = at(i, j);
        if (x.is_zero()) continue;
        for (int p = 0; p < o.rows_; ++p)
          for (int q = 0; q < o.cols_; ++q) {
            const T& y = o.at(p, q);
            if (!y.is_zero()) r.at(i * o.rows_ + p, j * o.cols_ + q) = x * y;
          }
      }
    return r;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!(a_[i] == o.a_[i])) return false;
    return true;
  }

  bool is_scalar(T* scalar_out = nullptr) const {
    if (rows_ != cols_ || rows_ == 0) return false;
    const T& s = at(0, 0);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (i == j && !(at(i, j) == s)) return false;
        if (i != j && !at(i, j).is_zero()) return false;
      }
    if (scalar_out) *scalar_out = s;
    return true;
  }

  /// Gauss-Jordan with unit-pivot selection; nullopt if not invertible.
  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    int n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (a.at(r, col).is_unit()) {
          piv = r;
          break;
        }
      if (piv < 0) return std::nullopt;
      if (piv != col) {
        for (int j = 0; j < n; ++j) {
          std::swap(a.at(piv, j), a.at(col, j));
          std::swap(inv.at(piv, j), inv.at(col, j));
        }
      }
      T s = a.at(col, col).inverse();
      for (int j = 0; j < n; ++j) {
        a.at(col, j) *= s;
        inv.at(col, j) *= s;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || a.at(r, col).is_zero()) continue;
        T f = a.at(r, col);
        for (int j = 0; j < n; ++j) {
          a.at(r, j) -= f * a.at(col, j);
          inv.at(r, j) -= f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

}  // namespace lki
