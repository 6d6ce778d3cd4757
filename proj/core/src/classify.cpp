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

#include "qcurv/classify.hpp"

#include <algorithm>

namespace qcurv {

namespace {

bool is_dconstant(const XC& c) { return del(c).is_zero(); }

bool is_logderiv_constant(const XC& c) {
  if (c.is_zero()) return false;
  return del(del(c) / c).is_zero();
}

bool is_scalar(const Matrix<XC>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && !m(i, j).is_zero()) return false;
      if (i != j) continue;
      if (m(i, j).is_zero() || m(i, j) != m(0, 0)) return false;
    }
  return true;
}

bool is_diagonal(const Matrix<XC>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && !m(i, j).is_zero()) return false;
      if (i == j && m(i, j).is_zero()) return false;
    }
  return true;
}

bool is_upper_triangular(const Matrix<XC>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i).is_zero()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!m(i, j).is_zero()) return false;
  }
  return true;
}

bool is_unipotent(const Matrix<XC>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_one()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!m(i, j).is_zero()) return false;
  }
  return true;
}

bool strictly_upper_dconstant(const Matrix<XC>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!is_dconstant(m(i, j))) return false;
  return true;
}

}  // namespace

std::string GroupTemplate::id() const {
  switch (kind_) {
    case Kind::kIdentity:
      return "identity";
    case Kind::kMu:
      return "mu_" + std::to_string(order_);
    case Kind::kDConstant:
      return "dconstant";
    case Kind::kLogDerivConstant:
      return "logderiv_constant";
    case Kind::kFullGm:
      return "full_gm";
    case Kind::kScalarMu:
      return "scalar_mu_" + std::to_string(order_);
    case Kind::kScalarDConstant:
      return "scalar_dconstant";
    case Kind::kScalarLogDerivConstant:
      return "scalar_logderiv_constant";
    case Kind::kScalar:
      return "scalar";
    case Kind::kUnipotentDConstant:
      return "unipotent_dconstant";
    case Kind::kUnipotent:
      return "unipotent";
    case Kind::kDiagonal:
      return "diagonal";
    case Kind::kUpperTriangular:
      return "upper_triangular";
    case Kind::kFullGl:
      return "full_gl";
  }
  return "unknown";
}

bool GroupTemplate::applicable(std::size_t rank) const {
  switch (kind_) {
    case Kind::kIdentity:
      return true;
    case Kind::kMu:
    case Kind::kDConstant:
    case Kind::kLogDerivConstant:
    case Kind::kFullGm:
      return rank == 1;
    default:
      return rank >= 2;
  }
}

bool GroupTemplate::member(const Matrix<XC>& m) const {
  switch (kind_) {
    case Kind::kIdentity:
      return m.is_identity();
    case Kind::kMu:
      return m.rows() == 1 && m(0, 0).pow(order_).is_one();
    case Kind::kDConstant:
      return m.rows() == 1 && is_dconstant(m(0, 0));
    case Kind::kLogDerivConstant:
      return m.rows() == 1 && is_logderiv_constant(m(0, 0));
    case Kind::kFullGm:
      return m.rows() == 1 && !m(0, 0).is_zero();
    case Kind::kScalarMu:
      return is_scalar(m) && m(0, 0).pow(order_).is_one();
    case Kind::kScalarDConstant:
      return is_scalar(m) && is_dconstant(m(0, 0));
    case Kind::kScalarLogDerivConstant:
      return is_scalar(m) && is_logderiv_constant(m(0, 0));
    case Kind::kScalar:
      return is_scalar(m);
    case Kind::kUnipotentDConstant:
      return is_unipotent(m) && strictly_upper_dconstant(m);
    case Kind::kUnipotent:
      return is_unipotent(m);
    case Kind::kDiagonal:
      return is_diagonal(m);
    case Kind::kUpperTriangular:
      return is_upper_triangular(m);
    case Kind::kFullGl:
      return true;
  }
  return false;
}

std::vector<GroupTemplate> template_catalog(std::size_t rank,
                                            ClassifyMode mode) {
  using K = GroupTemplate::Kind;
  std::vector<GroupTemplate> cat;
  cat.emplace_back(K::kIdentity);
  if (rank == 1) {
    for (unsigned m = 2; m <= kMuSearchMax; ++m) cat.emplace_back(K::kMu, m);
    if (mode == ClassifyMode::kDifferential) {
      cat.emplace_back(K::kDConstant);
      cat.emplace_back(K::kLogDerivConstant);
    }
    cat.emplace_back(K::kFullGm);
    return cat;
  }
  for (unsigned m = 2; m <= kMuSearchMax; ++m) cat.emplace_back(K::kScalarMu, m);
  if (mode == ClassifyMode::kDifferential) {
    cat.emplace_back(K::kScalarDConstant);
    cat.emplace_back(K::kScalarLogDerivConstant);
  }
  cat.emplace_back(K::kScalar);
  if (mode == ClassifyMode::kDifferential)
    cat.emplace_back(K::kUnipotentDConstant);
  cat.emplace_back(K::kUnipotent);
  cat.emplace_back(K::kDiagonal);
  cat.emplace_back(K::kUpperTriangular);
  cat.emplace_back(K::kFullGl);
  return cat;
}

std::size_t catalog_position(const GroupTemplate& t, std::size_t rank,
                             ClassifyMode mode) {
  std::vector<GroupTemplate> cat = template_catalog(rank, mode);
  auto it = std::find(cat.begin(), cat.end(), t);
  if (it == cat.end()) throw Error("template not in catalog: " + t.id());
  return static_cast<std::size_t>(it - cat.begin());
}

GroupTemplate algebraic_relaxation(const GroupTemplate& t) {
  using K = GroupTemplate::Kind;
  switch (t.kind()) {
    case K::kDConstant:
    case K::kLogDerivConstant:
      return GroupTemplate(K::kFullGm);
    case K::kScalarDConstant:
    case K::kScalarLogDerivConstant:
      return GroupTemplate(K::kScalar);
    case K::kUnipotentDConstant:
      return GroupTemplate(K::kUnipotent);
    default:
      return t;
  }
}

GroupTemplate classify_records(const std::vector<CurvatureRecord>& records,
                               std::size_t rank, ClassifyMode mode) {
  std::vector<const Matrix<XC>*> good;
  for (const CurvatureRecord& rec : records)
    if (rec.good()) good.push_back(&*rec.matrix);
  if (good.empty()) throw NoGoodPlaceError();
  for (const GroupTemplate& t : template_catalog(rank, mode)) {
    bool all = true;
    for (const Matrix<XC>* m : good) {
      if (!t.member(*m)) {
        all = false;
        break;
      }
    }
    if (all) return t;
  }
  throw Error("catalog has no maximum");  // unreachable: FullGl accepts all
}

GroupTemplate classify(const QDiffSystem& sys,
                       const std::vector<unsigned>& kappa_set,
                       ClassifyMode mode) {
  return classify_records(curvature_batch(sys, kappa_set), sys.rank(), mode);
}

XK expand_factored(const FactoredRatFunc& f) {
  XK acc = xk_constant(f.constant);
  acc = acc * xk_var().pow(f.x_exponent);
  for (const auto& [root, e] : f.factors) {
    XK base = xk_var() - xk_constant(root);
    acc = acc * base.pow(e);
  }
  return acc;
}

bool rank1_triviality_oracle(const FactoredRatFunc& f) {
  for (const auto& [root, e] : f.factors)
    if (root.is_zero()) throw Error("factored form with a zero root");
  // (1) no pure x power.
  if (f.x_exponent != 0) return false;

  // Group the roots into q-orbits; position = exponent of q relative to the
  // first root seen in the orbit.
  struct Orbit {
    QFunc base;
    std::vector<std::pair<long, long>> entries;  // (position, exponent)
  };
  std::vector<Orbit> orbits;
  for (const auto& [root, e] : f.factors) {
    bool placed = false;
    for (Orbit& orbit : orbits) {
      std::optional<long> t = q_power_exponent(root / orbit.base);
      if (t) {
        orbit.entries.push_back({*t, e});
        placed = true;
        break;
      }
    }
    if (!placed) orbits.push_back(Orbit{root, {{0, e}}});
  }

  // (2) every orbit telescopes to zero; accumulate the q-power correction.
  long correction = 0;
  for (Orbit& orbit : orbits) {
    std::sort(orbit.entries.begin(), orbit.entries.end());
    long total = 0;
    for (const auto& [t, e] : orbit.entries) total += e;
    if (total != 0) return false;
    // g-exponent at position j is -(sum of exponents at positions >= j);
    // nonzero only strictly between the extreme positions.
    long lo = orbit.entries.front().first, hi = orbit.entries.back().first;
    for (long j = lo + 1; j <= hi; ++j) {
      long tail = 0;
      for (const auto& [t, e] : orbit.entries)
        if (t >= j) tail += e;
      correction += -tail;
    }
  }

  // (3) the corrected constant must be an exact power of q.
  QFunc corrected = f.constant * qpow(-correction);
  return q_power_exponent(corrected).has_value();
}

}  // namespace qcurv
