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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcurv/rational.hpp"

namespace qcurv {

/// Power product of named variables, e.g. a^2*b.  Factors are sorted by
/// variable name, exponents are >= 1, the empty product is 1.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(const std::string& name, unsigned exp = 1);

  bool is_one() const { return factors_.empty(); }
  unsigned total_degree() const;
  unsigned degree_in(const std::string& var) const;

  Monomial mul(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Quotient other / this; caller must check divides() first.
  Monomial div_into(const Monomial& other) const;
  Monomial without(const std::string& var) const;
  Monomial with(const std::string& var, unsigned exp) const;

  /// Graded lexicographic order; variables compare by name, earlier names
  /// are more significant.  Returns <0, 0, >0.
  static int cmp(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const {
    return factors_ == other.factors_;
  }

  const std::vector<std::pair<std::string, unsigned>>& factors() const {
    return factors_;
  }

  std::string str() const;

 private:
  std::vector<std::pair<std::string, unsigned>> factors_;
};

/// Sparse multivariate polynomial over Rational with named variables.
/// Terms are kept sorted in descending grlex order with nonzero
/// coefficients, so equal polynomials are structurally equal.
class MultiPoly {
 public:
  MultiPoly() = default;  // zero
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  /// Value as a rational; only valid when is_constant().
  Rational constant_value() const;

  const Monomial& lead_monomial() const { return terms_.front().first; }
  const Rational& lead_coeff() const { return terms_.front().second; }
  unsigned total_degree() const;
  unsigned degree_in(const std::string& var) const;
  /// Most significant variable occurring, if any.
  std::optional<std::string> main_variable() const;
  std::vector<std::string> variables() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly mul_rational(const Rational& c) const;

  bool operator==(const MultiPoly& other) const {
    return terms_ == other.terms_;
  }
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  /// Exact quotient *this / divisor; throws Error when not divisible.
  MultiPoly exact_div(const MultiPoly& divisor) const;

  /// Coefficients of *this viewed as univariate in var (index = degree).
  std::vector<MultiPoly> coefficients_in(const std::string& var) const;
  static MultiPoly from_coefficients_in(const std::string& var,
                                        const std::vector<MultiPoly>& coeffs);

  /// gcd over Q[vars], normalized to leading coefficient 1; gcd(0,0) = 0.
  static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

  /// Positive rational c with (*this)/c integral with coprime numerators.
  Rational rational_content() const;

  /// *this divided by its leading coefficient.
  MultiPoly monic() const;

  const std::vector<std::pair<Monomial, Rational>>& terms() const {
    return terms_;
  }

  /// Expression-grammar compatible rendering, e.g. "3*a^2*b - 1/2*c + 5".
  std::string str() const;
  /// True when str() is safe as a bare factor or divisor.
  bool atomic() const;

 private:
  static MultiPoly from_term_map(std::map<Monomial, Rational,
                                          bool (*)(const Monomial&,
                                                   const Monomial&)>&& m);
  std::vector<std::pair<Monomial, Rational>> terms_;
};

}  // namespace qcurv
