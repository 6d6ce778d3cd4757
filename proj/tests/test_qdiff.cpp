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

#include "doctest.h"
#include "generators.hpp"
#include "qcurv/system.hpp"

using namespace qcurv;
using testgen::Rng;

namespace {

QDiffSystem rank1(const XK& a) {
  return QDiffSystem(Matrix<XK>::from_rows({{a}}));
}

QDiffSystem theta_system() { return rank1(xk_q() * xk_var()); }

Matrix<XK> block_of(const Matrix<XK>& m, std::size_t bi, std::size_t bj,
                    std::size_t n) {
  Matrix<XK> r(n, n, m.sample().zero_like());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = m(bi * n + i, bj * n + j);
  return r;
}

}  // namespace

TEST_CASE("iterate of the qx system") {
  QDiffSystem theta = theta_system();
  // y(q^n x) = q^{n(n+1)/2} x^n y(x) at n = 3.
  Matrix<XK> a3 = iterate(theta, 3);
  CHECK(a3(0, 0) == xk_constant(qpow(6)) * xk_var().pow(3));
  CHECK(iterate(theta, 0).is_identity());
  // A_{-1}(x) = A(x/q)^{-1} = 1/x.
  Matrix<XK> am1 = iterate(theta, -1);
  CHECK(am1(0, 0) == xk_int(1) / xk_var());
  // Cross-check: A_1(x/q) * A_{-1}(x) = 1.
  XK a1_shift = subst_scale(iterate(theta, 1)(0, 0), q_func().inverse());
  CHECK(a1_shift * am1(0, 0) == xk_int(1));
}

TEST_CASE("cocycle law on random systems") {
  Rng rng(101);
  // Full |j|,|k| <= 4 range on polynomial entries; the reduced iterates of
  // dense fraction systems grow fast enough that those get a smaller range.
  for (int trial = 0; trial < 4; ++trial) {
    QDiffSystem sys = testgen::rand_system(rng, 2, 2, /*polynomial_only=*/true);
    for (long j : {-4L, -1L, 3L, 4L}) {
      for (long k : {-3L, 2L, 4L}) {
        Matrix<XK> lhs = iterate(sys, j + k);
        Matrix<XK> rhs =
            subst_scale_matrix(iterate(sys, j), qpow(k)) * iterate(sys, k);
        CHECK(lhs == rhs);
      }
    }
  }
  for (int trial = 0; trial < 2; ++trial) {
    QDiffSystem sys = testgen::rand_system(rng, 2, 1);
    for (long j : {-2L, 1L}) {
      for (long k : {-1L, 2L}) {
        Matrix<XK> lhs = iterate(sys, j + k);
        Matrix<XK> rhs =
            subst_scale_matrix(iterate(sys, j), qpow(k)) * iterate(sys, k);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("gauge basics") {
  QDiffSystem one = rank1(xk_int(1));
  GaugeMatrix id(Matrix<XK>::from_rows({{xk_int(1)}}));
  CHECK(gauge(one, id).matrix() == one.matrix());

  GaugeMatrix p(Matrix<XK>::from_rows({{xk_var() - xk_int(1)}}));
  QDiffSystem g = gauge(one, p);
  XK expected = (xk_q() * xk_var() - xk_int(1)) / (xk_var() - xk_int(1));
  CHECK(g.matrix()(0, 0) == expected);

  Matrix<XK> zero_det(2, 2, xk_int(1));
  CHECK_THROWS_AS(GaugeMatrix{zero_det}, SingularGaugeError);
}

TEST_CASE("gauge conjugates the iterates") {
  Rng rng(103);
  QDiffSystem sys = testgen::rand_system(rng, 2, 1);
  GaugeMatrix p = testgen::rand_gauge(rng, 2);
  QDiffSystem conj = gauge(sys, p);
  for (long k : {1L, 2L, 3L}) {
    Matrix<XK> lhs = iterate(conj, k);
    Matrix<XK> rhs = subst_scale_matrix(p.matrix(), qpow(k)) *
                     iterate(sys, k) * p.matrix().inverse();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tensor, dsum and dual on rank one") {
  QDiffSystem a = rank1(xk_q() * xk_var());
  QDiffSystem b = rank1(xk_var() - xk_int(2));
  CHECK(tensor(a, b).matrix()(0, 0) ==
        (xk_q() * xk_var()) * (xk_var() - xk_int(2)));
  CHECK(dual(a).matrix()(0, 0) == xk_int(1) / (xk_q() * xk_var()));
  Matrix<XK> s = dsum(a, b).matrix();
  CHECK(s.rows() == 2);
  CHECK(s(0, 0) == a.matrix()(0, 0));
  CHECK(s(1, 1) == b.matrix()(0, 0));
  CHECK(s(0, 1).is_zero());
  CHECK(s(1, 0).is_zero());
}

TEST_CASE("iterate is functorial for tensor and dsum and dual") {
  Rng rng(107);
  QDiffSystem s1 = testgen::rand_system(rng, 2, 1, /*polynomial_only=*/true);
  QDiffSystem s2 = testgen::rand_system(rng, 2, 1, /*polynomial_only=*/true);
  for (long k : {1L, 2L, 4L}) {
    CHECK(iterate(tensor(s1, s2), k) ==
          kronecker(iterate(s1, k), iterate(s2, k)));
    CHECK(iterate(dsum(s1, s2), k) ==
          direct_sum(iterate(s1, k), iterate(s2, k)));
    CHECK(iterate(dual(s1), k) == iterate(s1, k).inverse().transpose());
  }
  // One fraction-entry instance at small k.
  QDiffSystem f1 = testgen::rand_system(rng, 2, 1);
  QDiffSystem f2 = testgen::rand_system(rng, 2, 1);
  CHECK(iterate(tensor(f1, f2), 2) ==
        kronecker(iterate(f1, 2), iterate(f2, 2)));
}

TEST_CASE("prolongation block structure") {
  QDiffSystem theta = theta_system();
  Matrix<XK> p = prolong(theta).matrix();
  XK qx = xk_q() * xk_var();
  CHECK(p.rows() == 2);
  CHECK(p(0, 0) == qx);
  CHECK(p(0, 1) == qx);  // del(qx) = qx
  CHECK(p(1, 0).is_zero());
  CHECK(p(1, 1) == qx);
}

TEST_CASE("prolongation of a constant system splits") {
  // With constant coefficients the prolongation is just two copies.
  Matrix<XK> a = Matrix<XK>::from_rows({{xk_int(2), xk_int(1)},
                                        {xk_int(0), xk_int(3)}});
  QDiffSystem sys(a);
  Matrix<XK> p = prolong(sys).matrix();
  CHECK(block_of(p, 0, 0, 2) == a);
  CHECK(block_of(p, 1, 1, 2) == a);
  Matrix<XK> zero(2, 2, xk_int(0));
  CHECK(block_of(p, 0, 1, 2) == zero);
  CHECK(block_of(p, 1, 0, 2) == zero);
}

TEST_CASE("prolongation commutes with iteration") {
  Rng rng(109);
  for (int trial = 0; trial < 3; ++trial) {
    QDiffSystem sys = testgen::rand_system(rng, 2, 2, /*polynomial_only=*/true);
    QDiffSystem prolonged = prolong(sys);
    for (long k : {1L, 2L, 4L, -2L}) {
      Matrix<XK> lhs = iterate(prolonged, k);
      Matrix<XK> ak = iterate(sys, k);
      CHECK(block_of(lhs, 0, 0, 2) == ak);
      CHECK(block_of(lhs, 1, 1, 2) == ak);
      CHECK(block_of(lhs, 0, 1, 2) == del_matrix(ak));
      CHECK(block_of(lhs, 1, 0, 2) == Matrix<XK>(2, 2, xk_int(0)));
    }
  }
  // Fraction entries at small k.
  QDiffSystem sys = testgen::rand_system(rng, 2, 1);
  Matrix<XK> lhs = iterate(prolong(sys), 2);
  Matrix<XK> a2 = iterate(sys, 2);
  CHECK(block_of(lhs, 0, 1, 2) == del_matrix(a2));
}

TEST_CASE("system validation") {
  Matrix<XK> singular(2, 2, xk_var());
  CHECK_THROWS_AS(QDiffSystem{singular}, SingularMatrixError);
  Matrix<XK> rect(1, 2, xk_var());
  CHECK_THROWS_AS(QDiffSystem{rect}, Error);
}
