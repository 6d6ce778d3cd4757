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
#include "qcurv/jets.hpp"

using namespace qcurv;
using testgen::Rng;

namespace {

QDiffSystem rank1(const XK& a) {
  return QDiffSystem(Matrix<XK>::from_rows({{a}}));
}

QDiffSystem theta_system() { return rank1(xk_q() * xk_var()); }

QDiffSystem log_system() {
  XK lambda = XK::constant(qfunc_constant(ConstField::variable("l")));
  return QDiffSystem(
      Matrix<XK>::from_rows({{xk_int(1), lambda}, {xk_int(0), xk_int(1)}}));
}

LinearGerm<QFunc> rand_linear_germ(Rng& rng, std::size_t nu) {
  QFunc alpha = testgen::rand_nonzero_qfunc(rng, 1);
  return LinearGerm<QFunc>(alpha, testgen::rand_system(rng, nu, 1).matrix());
}

std::vector<unsigned> range(unsigned hi) {
  std::vector<unsigned> v;
  for (unsigned k = 1; k <= hi; ++k) v.push_back(k);
  return v;
}

}  // namespace

TEST_CASE("generator counts") {
  CHECK(lin_generators(1).size() == 5);  // one index each
  std::vector<LinGenerator> g2 = lin_generators(2);
  std::size_t independence = 0, second_fiber = 0;
  for (const LinGenerator& g : g2) {
    if (g.family == LinGenerator::Family::kTargetXIndependence) ++independence;
    if (g.family == LinGenerator::Family::kFiberSecondPartials) ++second_fiber;
  }
  CHECK(independence == 2);
  CHECK(second_fiber == 6);  // 2 components x 3 symmetric pairs
  CHECK(g2.size() == 2 + 1 + 1 + 2 + 6);
}

TEST_CASE("identity germ solves Lin and Trv") {
  Matrix<XK> id = Matrix<XK>::identity(2, xk_int(1));
  LinearGerm<QFunc> germ(qfunc_int(1), id);
  LinCheck<QFunc> res = check_lin(germ);
  CHECK(res.ok);
  CHECK(res.residues.size() == lin_generators(2).size());
  for (const auto& r : res.residues) CHECK(r.zero);
  CHECK(check_trv(germ));
}

TEST_CASE("linear germs always solve Lin") {
  Rng rng(401);
  for (std::size_t nu : {1u, 2u}) {
    for (int trial = 0; trial < 5; ++trial) {
      LinearGerm<QFunc> germ = rand_linear_germ(rng, nu);
      CHECK(check_lin(germ).ok);
    }
  }
}

TEST_CASE("affine germ fails with the expected residue") {
  // (x, X) -> (x, X + x^2).
  XK x = xk_var();
  JetPoly<QFunc> xbar1 = JetPoly<QFunc>::linear({xk_int(1)});
  Germ<QFunc> germ{x, {xbar1 + JetPoly<QFunc>::constant(x * x)}};
  LinCheck<QFunc> res = check_lin(germ);
  CHECK_FALSE(res.ok);
  bool found = false;
  for (const auto& r : res.residues) {
    if (r.zero) continue;
    // The linearity generator picks up exactly -x^2.
    CHECK(r.value == (-(x * x)).str());
    found = true;
  }
  CHECK(found);
  CHECK(check_trv(germ));  // xbar == x, so Trv still holds
}

TEST_CASE("quadratic fiber germ fails the second partials") {
  // (x, X) -> (x, X^2 + X): invertible near X=1 but not linear.
  JetPoly<QFunc> comp =
      JetPoly<QFunc>::linear({xk_int(1)});
  JetPoly<QFunc> sq = comp.mul_var(0) + comp;  // X^2 + X
  Germ<QFunc> germ{xk_var(), {sq}};
  LinCheck<QFunc> res = check_lin(germ);
  CHECK_FALSE(res.ok);
}

TEST_CASE("dynamics elements solve Lin, only k = 0 solves Trv") {
  QDiffSystem theta = theta_system();
  for (long k = -5; k <= 5; ++k) {
    LinearGerm<QFunc> germ = dyn_element(theta, k);
    CHECK(check_lin(germ).ok);
    CHECK(check_trv(germ) == (k == 0));
  }
  // The k = 2 germ of the qx system is (q^2 x, q^3 x^2 X).
  LinearGerm<QFunc> d2 = dyn_element(theta, 2);
  CHECK(d2.alpha() == qpow(2));
  CHECK(d2.beta()(0, 0) == xk_constant(qpow(3)) * xk_var().pow(2));
}

TEST_CASE("dynamics of random systems stay inside Lin") {
  Rng rng(409);
  for (int trial = 0; trial < 3; ++trial) {
    QDiffSystem sys = testgen::rand_system(rng, 2, 1);
    for (long k : {-3L, -1L, 1L, 4L}) {
      LinearGerm<QFunc> germ = dyn_element(sys, k);
      CHECK(check_lin(germ).ok);
      CHECK_FALSE(check_trv(germ));
    }
  }
}

TEST_CASE("composition closure of Lin solutions") {
  Rng rng(419);
  for (int trial = 0; trial < 10; ++trial) {
    LinearGerm<QFunc> g1 = rand_linear_germ(rng, 2);
    LinearGerm<QFunc> g2 = rand_linear_germ(rng, 2);
    LinearGerm<QFunc> comp = compose(g1, g2);
    CHECK(check_lin(comp).ok);
    CHECK(comp.alpha() == g1.alpha() * g2.alpha());
  }
  // Composition with the dynamics reproduces the cocycle rule.
  QDiffSystem theta = theta_system();
  LinearGerm<QFunc> d1 = dyn_element(theta, 1);
  LinearGerm<QFunc> d2 = dyn_element(theta, 2);
  LinearGerm<QFunc> d3 = compose(d2, d1);
  CHECK(d3.alpha() == qpow(3));
  CHECK(d3.beta() == iterate(theta, 3));
}

TEST_CASE("transversal group check on the worked systems") {
  CHECK(check_transversal_group(theta_system(), range(6)));
  CHECK(check_transversal_group(log_system(), range(6)));
  // Forcing the wrong template fails: the theta curvatures are not 1.
  CHECK_FALSE(check_transversal_group(
      theta_system(), range(6), GroupTemplate(GroupTemplate::Kind::kIdentity)));
  // No good place propagates.
  QDiffSystem pole = rank1(xk_int(1) / (xk_q() - xk_int(1)));
  CHECK_THROWS_AS(check_transversal_group(pole, {1u}), NoGoodPlaceError);
}

TEST_CASE("transversal germs over the residue ring solve Lin") {
  QDiffSystem theta = theta_system();
  CurvatureRecord rec = curvature(theta, 4);
  REQUIRE(rec.good());
  LinearGerm<CycloElem> germ(rec.matrix->sample().sample().one_like(),
                             *rec.matrix);
  CHECK(check_lin(germ).ok);
  CHECK(check_trv(germ));
}
