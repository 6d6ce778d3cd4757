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

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qcurv/errors.hpp"

namespace qcurv {

/// Arbitrary-precision rational, always in canonical form: gcd of numerator
/// and denominator is 1, denominator positive, zero is 0/1.  Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(runtime/explicit)
  Rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "123", "-4/5" (decimal). Throws SyntaxError on garbage.
  static Rational from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
      throw SyntaxError(0, "invalid rational literal '" + s + "'");
    if (v.get_den() == 0)
      throw DivisionByZeroError("rational with zero denominator");
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    return Rational(mpq_class(a.v_ / b.v_));
  }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    return Rational(mpq_class(1 / v_));
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// gcd(num_a, num_b) / lcm(den_a, den_b): the content notion that makes
  /// c = gcd(a, b) satisfy a/c, b/c integral with coprime numerators.
  static Rational content_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class num, den;
    mpz_gcd(num.get_mpz_t(), a.v_.get_num_mpz_t(), b.v_.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.v_.get_den_mpz_t(), b.v_.get_den_mpz_t());
    Rational r;
    r.v_ = mpq_class(num, den);
    r.v_.canonicalize();
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }

  Rational zero_like() const { return Rational(); }
  Rational one_like() const { return Rational(1); }
  Rational from_int(long n) const { return Rational(n); }

  /// Decimal string, "num/den" when the denominator is not 1.
  std::string str() const { return v_.get_str(); }

  /// True when str() can appear as a factor without parentheses.
  bool atomic() const { return sign() >= 0 && is_integer(); }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// gcd of dense rational-coefficient polynomials (index = degree, trailing
/// zeros allowed), computed by an integer-primitive pseudo-remainder
/// sequence; the result is monic.  Shared by every univariate gcd in the
/// coefficient tower, because monic Euclid over Q blows up coefficient
/// bit-lengths.
std::vector<Rational> dense_rational_gcd(std::vector<Rational> a,
                                         std::vector<Rational> b);

}  // namespace qcurv
