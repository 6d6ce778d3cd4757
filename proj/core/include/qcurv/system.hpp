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

#include <cstdlib>

#include "qcurv/matrix.hpp"
#include "qcurv/qfield.hpp"

namespace qcurv {

/// Invertible linear q-difference system Y(qx) = A(x) Y(x) of rank nu, with
/// A over K(x).  The iterates follow the same convention:
///   A_k(x) = A(q^{k-1}x) ... A(qx) A(x)         for k > 0,
///   A_0    = Id,
///   A_k(x) = A(q^k x)^{-1} ... A(q^{-1}x)^{-1}  for k < 0,
/// so that Y(q^k x) = A_k(x) Y(x) on solutions.
class QDiffSystem {
 public:
  explicit QDiffSystem(Matrix<XK> a) : a_(std::move(a)) {
    if (!a_.is_square()) throw Error("system matrix must be square");
    if (a_.determinant().is_zero())
      throw SingularMatrixError("system matrix must be invertible");
  }

  const Matrix<XK>& matrix() const { return a_; }
  std::size_t rank() const { return a_.rows(); }

 private:
  Matrix<XK> a_;
};

/// Basis change P with det P != 0; transforms A into P(qx) A(x) P(x)^{-1}.
class GaugeMatrix {
 public:
  explicit GaugeMatrix(Matrix<XK> p) : p_(std::move(p)) {
    if (!p_.is_square() || p_.determinant().is_zero())
      throw SingularGaugeError();
  }
  const Matrix<XK>& matrix() const { return p_; }

 private:
  Matrix<XK> p_;
};

template <FieldElement F>
F field_pow(const F& base, long e) {
  if (e == 0) return base.one_like();
  F b = e < 0 ? base.inverse() : base;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  F acc = base.one_like();
  while (n > 0) {
    if (n & 1) acc = acc * b;
    if (n > 1) b = b * b;
    n >>= 1;
  }
  return acc;
}

/// Entrywise substitution x -> u*x.
template <FieldElement F, typename Var>
Matrix<RatFunc<F, Var>> subst_scale_matrix(const Matrix<RatFunc<F, Var>>& m,
                                           const F& u) {
  Matrix<RatFunc<F, Var>> r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = subst_scale(m(i, j), u);
  return r;
}

/// Entrywise derivation x d/dx.
template <FieldElement F, typename Var>
Matrix<RatFunc<F, Var>> del_matrix(const Matrix<RatFunc<F, Var>>& m) {
  Matrix<RatFunc<F, Var>> r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = del(m(i, j));
  return r;
}

/// Cocycle iterate of a system matrix over any coefficient field containing
/// an image of q.  Left-multiplications are applied incrementally, so every
/// step renormalizes.
template <FieldElement F, typename Var>
Matrix<RatFunc<F, Var>> iterate_cocycle(const Matrix<RatFunc<F, Var>>& a,
                                        const F& q_image, long k) {
  Matrix<RatFunc<F, Var>> acc =
      Matrix<RatFunc<F, Var>>::identity(a.rows(), a.sample());
  if (k == 0) return acc;
  if (k > 0) {
    F u = q_image.one_like();
    for (long j = 0; j < k; ++j) {
      acc = subst_scale_matrix(a, u) * acc;
      if (j + 1 < k) u = u * q_image;
    }
    return acc;
  }
  Matrix<RatFunc<F, Var>> ainv = a.inverse();
  F u = field_pow(q_image, k);
  for (long j = k; j < 0; ++j) {
    acc = acc * subst_scale_matrix(ainv, u);
    u = u * q_image;
  }
  return acc;
}

inline Matrix<XK> iterate(const QDiffSystem& sys, long k) {
  return iterate_cocycle(sys.matrix(), q_func(), k);
}

/// A' = P(qx) A(x) P(x)^{-1}.
inline QDiffSystem gauge(const QDiffSystem& sys, const GaugeMatrix& p) {
  Matrix<XK> shifted = subst_scale_matrix(p.matrix(), q_func());
  return QDiffSystem(shifted * sys.matrix() * p.matrix().inverse());
}

inline QDiffSystem tensor(const QDiffSystem& s1, const QDiffSystem& s2) {
  return QDiffSystem(kronecker(s1.matrix(), s2.matrix()));
}

inline QDiffSystem dsum(const QDiffSystem& s1, const QDiffSystem& s2) {
  return QDiffSystem(direct_sum(s1.matrix(), s2.matrix()));
}

/// Dual system (A^{-1})^T: the natural pairing of a solution with a dual
/// solution is shift-invariant.
inline QDiffSystem dual(const QDiffSystem& sys) {
  return QDiffSystem(sys.matrix().inverse().transpose());
}

/// Prolongation: adjoins first derivatives of solutions.  If Y solves
/// Y(qx) = A Y then (del Y, Y) solves the rank-2nu system [[A, del A], [0, A]],
/// because x d/dx commutes with x -> qx.
inline QDiffSystem prolong(const QDiffSystem& sys) {
  const Matrix<XK>& a = sys.matrix();
  return QDiffSystem(block_upper(a, del_matrix(a), a));
}

}  // namespace qcurv
