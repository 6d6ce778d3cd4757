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

#include "qcurv/jets.hpp"

namespace qcurv {

LinearGerm<QFunc> dyn_element(const QDiffSystem& sys, long k) {
  return LinearGerm<QFunc>(qpow(k), iterate(sys, k));
}

std::vector<LinGenerator> lin_generators(std::size_t nu) {
  using Family = LinGenerator::Family;
  std::vector<LinGenerator> gens;
  for (std::size_t j = 1; j <= nu; ++j)
    gens.push_back({Family::kTargetXIndependence,
                    "d xbar / d X" + std::to_string(j)});
  gens.push_back({Family::kTargetXHomogeneity, "d xbar / d x * x - xbar"});
  gens.push_back({Family::kTargetXSecondDeriv, "d^2 xbar / d x^2"});
  for (std::size_t i = 1; i <= nu; ++i)
    gens.push_back({Family::kFiberLinearity,
                    "sum_j d Xbar" + std::to_string(i) +
                        " / d Xj * Xj - Xbar" + std::to_string(i)});
  for (std::size_t i = 1; i <= nu; ++i)
    for (std::size_t j = 1; j <= nu; ++j)
      for (std::size_t k = j; k <= nu; ++k)
        gens.push_back({Family::kFiberSecondPartials,
                        "d^2 Xbar" + std::to_string(i) + " / d X" +
                            std::to_string(j) + " d X" + std::to_string(k)});
  return gens;
}

namespace {

bool transversal_check(const std::vector<CurvatureRecord>& records,
                       const GroupTemplate& t) {
  bool any = false;
  for (const CurvatureRecord& rec : records) {
    if (!rec.good()) continue;
    any = true;
    const Matrix<XC>& c = *rec.matrix;
    if (!t.member(c)) return false;
    LinearGerm<CycloElem> germ(c.sample().sample().one_like(), c);
    if (!check_lin(germ).ok) return false;
  }
  if (!any) throw NoGoodPlaceError();
  return true;
}

}  // namespace

bool check_transversal_group(const QDiffSystem& sys,
                             const std::vector<unsigned>& kappa_set,
                             ClassifyMode mode) {
  std::vector<CurvatureRecord> records = curvature_batch(sys, kappa_set);
  GroupTemplate t = classify_records(records, sys.rank(), mode);
  return transversal_check(records, t);
}

bool check_transversal_group(const QDiffSystem& sys,
                             const std::vector<unsigned>& kappa_set,
                             const GroupTemplate& t) {
  return transversal_check(curvature_batch(sys, kappa_set), t);
}

}  // namespace qcurv
