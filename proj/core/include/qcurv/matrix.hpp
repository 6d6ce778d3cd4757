// Copyright 2026 The qcurv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

#include "qcurv/errors.hpp"
#include "qcurv/poly.hpp"

namespace qcurv {

/// Dense matrix over an exact coefficient field.  Values are immutable in
/// practice: every operation returns a fresh matrix.
template <FieldElement F>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const F& fill)
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

  static Matrix from_rows(std::vector<std::vector<F>> rows) {
    if (rows.empty() || rows[0].empty()) throw Error("empty matrix");
    Matrix m(rows.size(), rows[0].size(), rows[0][0]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n, const F& sample) {
    Matrix m(n, n, sample.zero_like());
    const F one = sample.one_like();
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const F& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  F& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  /// Some entry, for minting ring constants.
  const F& sample() const { return e_[0]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in product");
    Matrix r(a.rows_, b.cols_, a.sample().zero_like());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j).is_zero()) continue;
          r(i, j) = r(i, j) + a(i, k) * b(k, j);
        }
      }
    }
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error("matrix shape mismatch in sum");
    Matrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error("matrix shape mismatch in difference");
    Matrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
    return r;
  }

  Matrix mul_scalar(const F& s) const {
    Matrix r = *this;
    for (F& v : r.e_) v = v * s;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_, sample());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  /// Kronecker product.
  friend Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.sample().zero_like());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    return r;
  }

  /// Block-diagonal sum.
  friend Matrix direct_sum(const Matrix& a, const Matrix& b) {
    const F z = a.sample().zero_like();
    Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_, z);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j)
        r(a.rows_ + i, a.cols_ + j) = b(i, j);
    return r;
  }

  /// [[A, B], [0, D]] with zero lower-left block.
  friend Matrix block_upper(const Matrix& a, const Matrix& b, const Matrix& d) {
    const F z = a.sample().zero_like();
    Matrix r(a.rows_ + d.rows_, a.cols_ + d.cols_, z);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    for (std::size_t i = 0; i < d.rows_; ++i)
      for (std::size_t j = 0; j < d.cols_; ++j)
        r(a.rows_ + i, a.cols_ + j) = d(i, j);
    return r;
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_;
  }
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i == j && !(*this)(i, j).is_one()) return false;
        if (i != j && !(*this)(i, j).is_zero()) return false;
      }
    return true;
  }

  template <typename G>
  Matrix<G> map(const std::function<G(const F&)>& fn) const {
    std::vector<std::vector<G>> rows;
    rows.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::vector<G> row;
      row.reserve(cols_);
      for (std::size_t j = 0; j < cols_; ++j) row.push_back(fn((*this)(i, j)));
      rows.push_back(std::move(row));
    }
    return Matrix<G>::from_rows(std::move(rows));
  }

  /// Determinant by fraction-free (Bareiss) elimination: every division is
  /// exact, intermediate entries are minors of the original matrix.
  F determinant() const {
    if (!is_square()) throw Error("determinant of a non-square matrix");
    Matrix m = *this;
    const std::size_t n = rows_;
    F prev = sample().one_like();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k).is_zero()) {
        std::size_t pivot = k + 1;
        while (pivot < n && m(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return sample().zero_like();
        m.swap_rows(k, pivot);
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          F t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
          m(i, j) = divide_exact(t, prev);
        }
        m(i, k) = m(i, k).zero_like();
      }
      prev = m(k, k);
    }
    F det = m(n - 1, n - 1);
    return negate ? -det : det;
  }

  /// Inverse via fraction-free Gaussian elimination on the augmented matrix;
  /// throws SingularMatrixError when the determinant vanishes.
  Matrix inverse() const {
    if (!is_square()) throw Error("inverse of a non-square matrix");
    const std::size_t n = rows_;
    const F z = sample().zero_like();
    const F one = sample().one_like();
    Matrix m(n, 2 * n, z);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (*this)(i, j);
      m(i, n + i) = one;
    }
    // Fraction-free forward pass.
    F prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k).is_zero()) {
        std::size_t pivot = k + 1;
        while (pivot < n && m(pivot, k).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrixError();
        m.swap_rows(k, pivot);
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < 2 * n; ++j) {
          F t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
          m(i, j) = divide_exact(t, prev);
        }
        m(i, k) = z;
      }
      prev = m(k, k);
    }
    if (m(n - 1, n - 1).is_zero()) throw SingularMatrixError();
    // Back substitution over the field.
    Matrix r(n, n, z);
    for (std::size_t col = 0; col < n; ++col) {
      std::vector<F> x;
      x.reserve(n);
      for (std::size_t ii = n; ii-- > 0;) {
        F acc = m(ii, n + col);
        for (std::size_t j = ii + 1; j < n; ++j)
          acc = acc - m(ii, j) * x[n - 1 - j];
        x.push_back(acc * m(ii, ii).inverse());
      }
      for (std::size_t i = 0; i < n; ++i) r(i, col) = x[n - 1 - i];
    }
    return r;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k)
      std::swap(e_[i * cols_ + k], e_[j * cols_ + k]);
  }

 private:
  static F divide_exact(const F& a, const F& b) {
    if (b.is_one()) return a;
    return a * b.inverse();
  }

  std::size_t rows_, cols_;
  std::vector<F> e_;
};

}  // namespace qcurv
