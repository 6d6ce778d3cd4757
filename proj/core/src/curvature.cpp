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

#include "qcurv/curvature.hpp"

#include <future>

namespace qcurv {

std::string bad_reason_str(BadReason r) {
  switch (r) {
    case BadReason::kDenominatorVanishes:
      return "denominator_vanishes";
    case BadReason::kSingularDeterminant:
      return "singular_determinant";
  }
  return "unknown";
}

std::variant<Matrix<XC>, BadReason> reduce_system(const QDiffSystem& sys,
                                                  unsigned kappa) {
  auto ring = CycloRing::make(kappa);
  const Matrix<XK>& a = sys.matrix();
  std::vector<std::vector<XC>> rows;
  rows.reserve(a.rows());
  try {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::vector<XC> row;
      row.reserve(a.cols());
      for (std::size_t j = 0; j < a.cols(); ++j)
        row.push_back(reduce_x_function(a(i, j), ring));
      rows.push_back(std::move(row));
    }
  } catch (const BadPlaceError&) {
    return BadReason::kDenominatorVanishes;
  }
  Matrix<XC> reduced = Matrix<XC>::from_rows(std::move(rows));
  if (reduced.determinant().is_zero()) return BadReason::kSingularDeterminant;
  return reduced;
}

CurvatureRecord curvature(const QDiffSystem& sys, unsigned kappa) {
  CurvatureRecord rec;
  rec.kappa = kappa;
  auto reduced = reduce_system(sys, kappa);
  if (std::holds_alternative<BadReason>(reduced)) {
    rec.bad = std::get<BadReason>(reduced);
    return rec;
  }
  const Matrix<XC>& a = std::get<Matrix<XC>>(reduced);
  rec.matrix = iterate_cocycle(a, zeta(a.sample().sample().ring()),
                               static_cast<long>(kappa));
  return rec;
}

std::vector<CurvatureRecord> curvature_batch(const QDiffSystem& sys,
                                             const std::vector<unsigned>& kappas) {
  std::vector<std::future<CurvatureRecord>> futures;
  futures.reserve(kappas.size());
  for (unsigned kappa : kappas)
    futures.push_back(std::async(std::launch::async,
                                 [&sys, kappa] { return curvature(sys, kappa); }));
  std::vector<CurvatureRecord> records;
  records.reserve(kappas.size());
  for (auto& f : futures) records.push_back(f.get());
  return records;
}

TrivialityVerdict triviality_test(const QDiffSystem& sys, unsigned kappa_max) {
  std::vector<unsigned> kappas;
  for (unsigned k = 1; k <= kappa_max; ++k) kappas.push_back(k);
  std::vector<CurvatureRecord> records = curvature_batch(sys, kappas);

  TrivialityVerdict v;
  v.kappa_max = kappa_max;
  bool any_good = false;
  for (const CurvatureRecord& rec : records) {
    if (!rec.good()) {
      v.skipped.push_back(rec.kappa);
      continue;
    }
    any_good = true;
    const Matrix<XC>& m = *rec.matrix;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        bool ok = i == j ? m(i, j).is_one() : m(i, j).is_zero();
        if (!ok) {
          v.kind = TrivialityVerdict::Kind::kNontrivialWitness;
          v.witness_kappa = rec.kappa;
          v.witness_row = i;
          v.witness_col = j;
          v.detail = "curvature entry (" + std::to_string(i) + "," +
                     std::to_string(j) + ") = " + m(i, j).str();
          return v;
        }
      }
    }
  }
  if (!any_good) {
    v.kind = TrivialityVerdict::Kind::kInconclusive;
    v.detail = "every place up to " + std::to_string(kappa_max) + " is bad";
    return v;
  }
  v.kind = TrivialityVerdict::Kind::kTrivialUpTo;
  return v;
}

}  // namespace qcurv
