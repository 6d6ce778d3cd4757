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

#include <string>
#include <vector>

#include "qcurv/curvature.hpp"

namespace qcurv {

enum class ClassifyMode { kDifferential, kAlgebraic };

/// Largest m tried when matching roots of unity.
inline constexpr unsigned kMuSearchMax = 24;

/// A named membership predicate on curvature matrices.  The catalog is an
/// explicit finite list of differential/algebraic subgroup shapes, totally
/// ordered within each rank so that "smallest containing template" is
/// unambiguous; the order refines set inclusion of the defining conditions.
class GroupTemplate {
 public:
  enum class Kind {
    kIdentity,
    kMu,                    // c^m = 1 (rank 1)
    kDConstant,             // del c = 0 (rank 1)
    kLogDerivConstant,      // del(del c / c) = 0 (rank 1)
    kFullGm,                // rank-1 maximum
    kScalarMu,              // c*Id with c^m = 1
    kScalarDConstant,       // c*Id with del c = 0
    kScalarLogDerivConstant,
    kScalar,                // c*Id, c invertible
    kUnipotentDConstant,    // unipotent upper-triangular, del = 0 above diag
    kUnipotent,
    kDiagonal,
    kUpperTriangular,
    kFullGl,
  };

  explicit GroupTemplate(Kind kind, unsigned order = 0)
      : kind_(kind), order_(order) {}

  Kind kind() const { return kind_; }
  unsigned order() const { return order_; }

  /// Stable string id used in reports, e.g. "mu_6", "logderiv_constant".
  std::string id() const;

  bool applicable(std::size_t rank) const;
  bool member(const Matrix<XC>& m) const;

  bool operator==(const GroupTemplate& other) const {
    return kind_ == other.kind_ && order_ == other.order_;
  }

 private:
  Kind kind_;
  unsigned order_;  // m for kMu / kScalarMu
};

/// The fixed catalog for one rank and mode, ascending.  Identity is the
/// minimum; FullGm / FullGl the maximum.
std::vector<GroupTemplate> template_catalog(std::size_t rank, ClassifyMode mode);

/// Index of a template inside the catalog it came from; usable as the
/// catalog order.
std::size_t catalog_position(const GroupTemplate& t, std::size_t rank,
                             ClassifyMode mode);

/// The same template with every derivation condition dropped.
GroupTemplate algebraic_relaxation(const GroupTemplate& t);

/// Smallest catalog template containing every good curvature among the
/// records; throws NoGoodPlaceError when none is good.
GroupTemplate classify_records(const std::vector<CurvatureRecord>& records,
                               std::size_t rank, ClassifyMode mode);

GroupTemplate classify(const QDiffSystem& sys,
                       const std::vector<unsigned>& kappa_set,
                       ClassifyMode mode);

/// Rank-1 function in factored form: constant * x^x_exponent *
/// prod (x - root)^exponent, roots nonzero and pairwise distinct.
struct FactoredRatFunc {
  QFunc constant;
  long x_exponent = 0;
  std::vector<std::pair<QFunc, long>> factors;
};

/// The rational function the factored form denotes.
XK expand_factored(const FactoredRatFunc& f);

/// Independent decision procedure for rank-1 triviality: a(x) = g(qx)/g(x)
/// for some rational g if and only if
///   (1) the x-exponent is zero,
///   (2) the roots split into q-orbit chains with total exponent zero, and
///   (3) the constant, corrected by the q-powers produced by telescoping the
///       chains, is an exact power of q.
bool rank1_triviality_oracle(const FactoredRatFunc& f);

}  // namespace qcurv
