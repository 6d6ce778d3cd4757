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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcurv/cyclotomic.hpp"
#include "qcurv/system.hpp"

namespace qcurv {

/// Cyclotomic place of order kappa, carried by Phi_kappa(q).
struct Place {
  unsigned kappa;
  PolyQ phi;
  static Place of(unsigned kappa) { return Place{kappa, cyclotomic(kappa)}; }
};

enum class BadReason {
  kDenominatorVanishes,
  kSingularDeterminant,
};

std::string bad_reason_str(BadReason r);

/// Result of the curvature computation at one place: either the iterate
/// A_kappa over the residue field, or the reason the place had to be skipped.
struct CurvatureRecord {
  unsigned kappa = 0;
  std::optional<Matrix<XC>> matrix;  // set when the place is good
  std::optional<BadReason> bad;      // set when the place is bad

  bool good() const { return matrix.has_value(); }
};

/// Entrywise reduction of the system matrix at the place of order kappa.
std::variant<Matrix<XC>, BadReason> reduce_system(const QDiffSystem& sys,
                                                  unsigned kappa);

/// The curvature at kappa: reduce first, then iterate kappa times with
/// q = class of q.  Agrees with reducing iterate(sys, kappa) whenever the
/// latter is defined, because the reduction is a difference-ring
/// homomorphism (the shift acts on x only).
CurvatureRecord curvature(const QDiffSystem& sys, unsigned kappa);

/// Independent curvature computations across places, evaluated concurrently
/// with deterministic result ordering.
std::vector<CurvatureRecord> curvature_batch(const QDiffSystem& sys,
                                             const std::vector<unsigned>& kappas);

struct TrivialityVerdict {
  enum class Kind { kTrivialUpTo, kNontrivialWitness, kInconclusive };

  Kind kind;
  unsigned kappa_max = 0;
  std::vector<unsigned> skipped;  // bad places, for kTrivialUpTo
  unsigned witness_kappa = 0;     // for kNontrivialWitness
  std::size_t witness_row = 0, witness_col = 0;
  std::string detail;

  bool trivial() const { return kind == Kind::kTrivialUpTo; }
};

/// Desk-scale triviality test: every good curvature with kappa <= kappa_max
/// must be the identity, and at least one place must be good.  Reports the
/// first witness otherwise.
TrivialityVerdict triviality_test(const QDiffSystem& sys, unsigned kappa_max);

/// Default place bound for the command-line tools, overridable per call.
inline constexpr unsigned kDefaultKappaMax = 20;

}  // namespace qcurv
