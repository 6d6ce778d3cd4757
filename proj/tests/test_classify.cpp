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
#include "qcurv/classify.hpp"

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

std::vector<unsigned> range(unsigned hi) {
  std::vector<unsigned> v;
  for (unsigned k = 1; k <= hi; ++k) v.push_back(k);
  return v;
}

}  // namespace

TEST_CASE("catalog structure") {
  for (std::size_t rank : {1u, 2u, 3u}) {
    for (ClassifyMode mode :
         {ClassifyMode::kDifferential, ClassifyMode::kAlgebraic}) {
      std::vector<GroupTemplate> cat = template_catalog(rank, mode);
      CHECK(cat.front().id() == "identity");
      CHECK(cat.back().id() == (rank == 1 ? "full_gm" : "full_gl"));
      for (const GroupTemplate& t : cat) CHECK(t.applicable(rank));
      // The identity matrix is a member of every template in the catalog:
      // the order refines inclusion and identity is the minimum.
      auto ring = CycloRing::make(3);
      Matrix<XC> id = Matrix<XC>::identity(rank, XC::constant(zeta(ring)));
      for (const GroupTemplate& t : cat) CHECK(t.member(id));
    }
  }
}

TEST_CASE("theta classifies as logderiv_constant / full_gm") {
  QDiffSystem theta = theta_system();
  CHECK(classify(theta, range(8), ClassifyMode::kDifferential).id() ==
        "logderiv_constant");
  CHECK(classify(theta, range(8), ClassifyMode::kAlgebraic).id() == "full_gm");
}

TEST_CASE("log system classifies as unipotent_dconstant") {
  QDiffSystem log_sys = log_system();
  // Curvatures are [[1, kappa*l], [0, 1]].
  for (unsigned kappa : {1u, 2u, 3u, 8u}) {
    CurvatureRecord rec = curvature(log_sys, kappa);
    REQUIRE(rec.good());
    const Matrix<XC>& m = *rec.matrix;
    CHECK(m(0, 0).is_one());
    CHECK(m(1, 1).is_one());
    CHECK(m(1, 0).is_zero());
    CHECK(m(0, 1) ==
          XC::constant(zeta(CycloRing::make(kappa)).from_int(kappa)) *
              XC::constant(CycloElem(CycloRing::make(kappa),
                                     PolyQ::constant(ConstField::variable("l")))));
  }
  CHECK(classify(log_sys, range(8), ClassifyMode::kDifferential).id() ==
        "unipotent_dconstant");
  CHECK(classify(log_sys, range(8), ClassifyMode::kAlgebraic).id() ==
        "unipotent");
}

TEST_CASE("identity system classifies as identity") {
  QDiffSystem id2(Matrix<XK>::identity(2, xk_int(1)));
  CHECK(classify(id2, range(4), ClassifyMode::kDifferential).id() == "identity");
  QDiffSystem id1 = rank1(xk_int(1));
  CHECK(classify(id1, range(4), ClassifyMode::kDifferential).id() == "identity");
}

TEST_CASE("mu templates catch constant roots of unity") {
  // a = -1: curvatures are (-1)^kappa, all sixth powers of themselves...
  // the smallest m with c^m = 1 for every place is m = 2.
  QDiffSystem minus = rank1(xk_int(-1));
  CHECK(classify(minus, range(6), ClassifyMode::kDifferential).id() == "mu_2");
  // A scalar 2x2 version lands in the scalar chain.
  QDiffSystem minus2(Matrix<XK>::identity(2, xk_int(1)).mul_scalar(xk_int(-1)));
  CHECK(classify(minus2, range(6), ClassifyMode::kDifferential).id() ==
        "scalar_mu_2");
}

TEST_CASE("diagonal and triangular shapes") {
  QDiffSystem diag(Matrix<XK>::from_rows(
      {{xk_q() * xk_var(), xk_int(0)}, {xk_int(0), xk_int(2)}}));
  CHECK(classify(diag, range(6), ClassifyMode::kDifferential).id() ==
        "diagonal");
  QDiffSystem tri(Matrix<XK>::from_rows(
      {{xk_q() * xk_var(), xk_int(1)}, {xk_int(0), xk_int(2)}}));
  CHECK(classify(tri, range(6), ClassifyMode::kDifferential).id() ==
        "upper_triangular");
  QDiffSystem full(Matrix<XK>::from_rows(
      {{xk_int(0), xk_int(1)}, {xk_var(), xk_int(0)}}));
  CHECK(classify(full, range(6), ClassifyMode::kDifferential).id() ==
        "full_gl");
}

TEST_CASE("no good place raises") {
  QDiffSystem pole = rank1(xk_int(1) / (xk_q() - xk_int(1)));
  CHECK_THROWS_AS(classify(pole, {1u}, ClassifyMode::kDifferential),
                  NoGoodPlaceError);
}

TEST_CASE("monotonicity in the place set") {
  Rng rng(307);
  for (int trial = 0; trial < 6; ++trial) {
    QDiffSystem sys = testgen::rand_system(rng, 2, 1, /*polynomial_only=*/true);
    GroupTemplate small = classify(sys, range(3), ClassifyMode::kDifferential);
    GroupTemplate big = classify(sys, range(6), ClassifyMode::kDifferential);
    CHECK(catalog_position(small, 2, ClassifyMode::kDifferential) <=
          catalog_position(big, 2, ClassifyMode::kDifferential));
  }
}

TEST_CASE("differential relaxation bounds the algebraic result") {
  Rng rng(311);
  std::vector<QDiffSystem> samples;
  samples.push_back(theta_system());
  samples.push_back(log_system());
  samples.push_back(rank1(xk_int(-1)));
  for (int trial = 0; trial < 4; ++trial)
    samples.push_back(testgen::rand_system(rng, 2, 1, /*polynomial_only=*/true));
  for (const QDiffSystem& sys : samples) {
    GroupTemplate diff = classify(sys, range(6), ClassifyMode::kDifferential);
    GroupTemplate alg = classify(sys, range(6), ClassifyMode::kAlgebraic);
    GroupTemplate relaxed = algebraic_relaxation(diff);
    CHECK(catalog_position(relaxed, sys.rank(), ClassifyMode::kAlgebraic) >=
          catalog_position(alg, sys.rank(), ClassifyMode::kAlgebraic));
  }
  // Equality holds on the two worked examples.
  CHECK(algebraic_relaxation(
            classify(theta_system(), range(6), ClassifyMode::kDifferential))
            .id() ==
        classify(theta_system(), range(6), ClassifyMode::kAlgebraic).id());
  CHECK(algebraic_relaxation(
            classify(log_system(), range(6), ClassifyMode::kDifferential))
            .id() ==
        classify(log_system(), range(6), ClassifyMode::kAlgebraic).id());
}

TEST_CASE("gauge robustness for conjugation-stable templates") {
  Rng rng(313);
  QDiffSystem id2(Matrix<XK>::identity(2, xk_int(1)));
  GaugeMatrix p = testgen::rand_gauge(rng, 2);
  // The identity system gauged by anything is a coboundary: still identity
  // curvatures.
  CHECK(classify(gauge(id2, p), range(5), ClassifyMode::kDifferential).id() ==
        "identity");
  // Scalar systems stay scalar under conjugation.
  QDiffSystem scalar(Matrix<XK>::identity(2, xk_int(1)).mul_scalar(xk_int(2)));
  CHECK(classify(gauge(scalar, p), range(5), ClassifyMode::kDifferential).id() ==
        classify(scalar, range(5), ClassifyMode::kDifferential).id());
}

TEST_CASE("factored expansion matches direct arithmetic") {
  FactoredRatFunc f;
  f.constant = qpow(1);
  f.x_exponent = -1;
  f.factors.push_back({qfunc_int(2), 2});
  f.factors.push_back({qfunc_int(3) * qpow(1), -1});
  XK x = xk_var();
  XK expected = xk_q() * x.pow(-1) * (x - xk_int(2)).pow(2) /
                (x - xk_int(3) * xk_q());
  CHECK(expand_factored(f) == expected);
}

TEST_CASE("oracle worked examples") {
  // a = (x - 1/q)/(x - 1): a coboundary after constant bookkeeping.
  FactoredRatFunc ex1;
  ex1.constant = qfunc_int(1);
  ex1.x_exponent = 0;
  ex1.factors.push_back({qpow(-1), 1});
  ex1.factors.push_back({qfunc_int(1), -1});
  CHECK(rank1_triviality_oracle(ex1));

  // a = x is not a coboundary.
  FactoredRatFunc ex2;
  ex2.constant = qfunc_int(1);
  ex2.x_exponent = 1;
  CHECK_FALSE(rank1_triviality_oracle(ex2));

  // a = 1 trivially is.
  FactoredRatFunc ex3;
  ex3.constant = qfunc_int(1);
  CHECK(rank1_triviality_oracle(ex3));

  // A pure power of q is a coboundary of x^d.
  FactoredRatFunc ex4;
  ex4.constant = qpow(-3);
  CHECK(rank1_triviality_oracle(ex4));

  // A constant not in q^Z is not.
  FactoredRatFunc ex5;
  ex5.constant = qfunc_int(2);
  CHECK_FALSE(rank1_triviality_oracle(ex5));
}

TEST_CASE("oracle agrees with the curvature engine") {
  Rng rng(317);
  int trivial_seen = 0, nontrivial_seen = 0;
  for (int trial = 0; trial < 12; ++trial) {
    FactoredRatFunc data = testgen::rand_coboundary_data(rng);
    bool perturb = trial % 2 == 1;
    if (perturb) {
      switch (testgen::rand_int(rng, 0, 2)) {
        case 0:
          data.x_exponent = testgen::rand_int(rng, 1, 2);
          break;
        case 1:
          data.factors.push_back({qfunc_int(11), 1});  // fresh orbit, sum != 0
          break;
        default:
          data.constant = data.constant * qfunc_int(2);  // not a q power
      }
    }
    bool oracle = rank1_triviality_oracle(data);
    QDiffSystem sys = rank1(expand_factored(data));
    TrivialityVerdict v = triviality_test(sys, 20);
    CHECK(oracle == v.trivial());
    if (v.trivial())
      ++trivial_seen;
    else
      ++nontrivial_seen;
  }
  CHECK(trivial_seen >= 6);
  CHECK(nontrivial_seen >= 1);
}
