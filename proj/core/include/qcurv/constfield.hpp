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

#include "qcurv/multipoly.hpp"

namespace qcurv {

/// Element of the constant field K0 = Q(l1, ..., lr): a reduced fraction of
/// multivariate polynomials in the declared formal constants.  Constants are
/// killed by both the derivation and the q-shift by construction, so no
/// derivative data is stored.
///
/// Canonical form: gcd(num, den) = 1 and the denominator has leading
/// coefficient 1 in the fixed graded-lexicographic order.
class ConstField {
 public:
  ConstField() : num_(), den_(MultiPoly::constant(Rational(1))) {}
  static ConstField zero() { return ConstField(); }
  static ConstField one() { return from_rational(Rational(1)); }
  static ConstField from_rational(const Rational& c);
  static ConstField variable(const std::string& name);
  static ConstField from_fraction(MultiPoly num, MultiPoly den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rational as_rational() const {
    return num_.constant_value() / den_.constant_value();
  }

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }

  ConstField operator-() const;
  friend ConstField operator+(const ConstField& a, const ConstField& b);
  friend ConstField operator-(const ConstField& a, const ConstField& b);
  friend ConstField operator*(const ConstField& a, const ConstField& b);
  friend ConstField operator/(const ConstField& a, const ConstField& b);
  ConstField inverse() const;

  bool operator==(const ConstField& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  bool operator!=(const ConstField& other) const { return !(*this == other); }

  ConstField zero_like() const { return zero(); }
  ConstField one_like() const { return one(); }
  ConstField from_int(long n) const { return from_rational(Rational(n)); }

  std::string str() const;
  bool atomic() const;

 private:
  ConstField(MultiPoly num, MultiPoly den, bool normalized);
  void normalize();
  MultiPoly num_, den_;
};

}  // namespace qcurv
