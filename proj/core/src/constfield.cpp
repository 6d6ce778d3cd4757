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

#include "qcurv/constfield.hpp"

namespace qcurv {

ConstField ConstField::from_rational(const Rational& c) {
  return ConstField(MultiPoly::constant(c), MultiPoly::constant(Rational(1)),
                    true);
}

ConstField ConstField::variable(const std::string& name) {
  return ConstField(MultiPoly::variable(name),
                    MultiPoly::constant(Rational(1)), true);
}

ConstField ConstField::from_fraction(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw DivisionByZeroError("constant with zero denominator");
  ConstField c(std::move(num), std::move(den), false);
  c.normalize();
  return c;
}

ConstField::ConstField(MultiPoly num, MultiPoly den, bool normalized)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!normalized) normalize();
}

void ConstField::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(Rational(1));
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.mul_rational(den_.constant_value().inverse());
    den_ = MultiPoly::constant(Rational(1));
    return;
  }
  MultiPoly g = MultiPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  Rational lead = den_.lead_coeff();
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    num_ = num_.mul_rational(inv);
    den_ = den_.mul_rational(inv);
  }
}

ConstField ConstField::operator-() const { return ConstField(-num_, den_, true); }

ConstField operator+(const ConstField& a, const ConstField& b) {
  if (a.is_rational() && b.is_rational())
    return ConstField::from_rational(a.as_rational() + b.as_rational());
  if (a.den_ == b.den_)
    return ConstField::from_fraction(a.num_ + b.num_, a.den_);
  return ConstField::from_fraction(a.num_ * b.den_ + b.num_ * a.den_,
                                   a.den_ * b.den_);
}

ConstField operator-(const ConstField& a, const ConstField& b) {
  return a + (-b);
}

ConstField operator*(const ConstField& a, const ConstField& b) {
  if (a.is_rational() && b.is_rational())
    return ConstField::from_rational(a.as_rational() * b.as_rational());
  if (a.is_zero() || b.is_zero()) return ConstField::zero();
  return ConstField::from_fraction(a.num_ * b.num_, a.den_ * b.den_);
}

ConstField operator/(const ConstField& a, const ConstField& b) {
  return a * b.inverse();
}

ConstField ConstField::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  return from_fraction(den_, num_);
}

std::string ConstField::str() const {
  if (den_.is_one()) return num_.str();
  auto part = [](const MultiPoly& p) {
    return p.atomic() ? p.str() : "(" + p.str() + ")";
  };
  return part(num_) + "/" + part(den_);
}

bool ConstField::atomic() const { return den_.is_one() && num_.atomic(); }

}  // namespace qcurv
