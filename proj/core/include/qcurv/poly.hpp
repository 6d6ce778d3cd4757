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

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "qcurv/errors.hpp"

namespace qcurv {

/// Requirements for coefficient fields in the tower.  Elements carry their
/// own ring context (zero_like/one_like/from_int mint constants in the same
/// ring as *this), so quotient-ring elements work without global state.
template <typename F>
concept FieldElement = requires(const F& a, const F& b, long n) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.inverse() } -> std::same_as<F>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.is_one() } -> std::same_as<bool>;
  { a == b } -> std::same_as<bool>;
  { a.zero_like() } -> std::same_as<F>;
  { a.one_like() } -> std::same_as<F>;
  { a.from_int(n) } -> std::same_as<F>;
  { a.str() } -> std::same_as<std::string>;
  { a.atomic() } -> std::same_as<bool>;
};

/// Dense univariate polynomial over a field.  Coefficient of X^i at index i,
/// never any trailing zero, so the zero polynomial is the empty list and
/// structural equality is canonical equality.
template <FieldElement F>
class Poly {
 public:
  Poly() = default;  // zero
  static Poly from_coeffs(std::vector<F> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }
  static Poly constant(const F& c) {
    Poly p;
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
  }
  static Poly variable(const F& sample) {
    Poly p;
    p.c_.push_back(sample.zero_like());
    p.c_.push_back(sample.one_like());
    return p;
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  const F& lead() const { return c_.back(); }
  const std::vector<F>& coeffs() const { return c_; }

  Poly operator-() const {
    Poly p;
    p.c_.reserve(c_.size());
    for (const F& c : c_) p.c_.push_back(-c);
    return p;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const Poly& longer = a.c_.size() >= b.c_.size() ? a : b;
    const Poly& shorter = a.c_.size() >= b.c_.size() ? b : a;
    Poly r = longer;
    for (std::size_t i = 0; i < shorter.c_.size(); ++i)
      r.c_[i] = r.c_[i] + shorter.c_[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    const F z = a.c_[0].zero_like();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, z);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return from_coeffs(std::move(r));
  }

  Poly mul_scalar(const F& s) const {
    if (s.is_zero()) return Poly();
    Poly r;
    r.c_.reserve(c_.size());
    for (const F& c : c_) r.c_.push_back(c * s);
    r.trim();
    return r;
  }

  Poly mul_xpow(unsigned n) const {
    if (is_zero() || n == 0) return *this;
    Poly r;
    r.c_.reserve(c_.size() + n);
    const F z = c_[0].zero_like();
    for (unsigned i = 0; i < n; ++i) r.c_.push_back(z);
    for (const F& c : c_) r.c_.push_back(c);
    return r;
  }

  bool operator==(const Poly& other) const { return c_ == other.c_; }
  bool operator!=(const Poly& other) const { return !(*this == other); }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    const F lead_inv = b.lead().inverse();
    Poly rem = a;
    const F z = b.lead().zero_like();
    std::vector<F> q(a.degree() - b.degree() + 1, z);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      long pos = rem.degree() - b.degree();
      F t = rem.lead() * lead_inv;
      q[pos] = t;
      for (long i = 0; i <= b.degree(); ++i)
        rem.c_[pos + i] = rem.c_[pos + i] - t * b.c_[i];
      rem.trim();
    }
    return {from_coeffs(std::move(q)), rem};
  }

  /// Exact quotient; throws when the remainder is nonzero.
  static Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw Error("univariate division is not exact");
    return q;
  }

  Poly monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return mul_scalar(lead().inverse());
  }

  /// Monic gcd; remainders are re-normalized to monic at every step to keep
  /// coefficient growth in check.
  static Poly gcd_monic(const Poly& a, const Poly& b) {
    Poly r0 = a.monic(), r1 = b.monic();
    while (!r1.is_zero()) {
      Poly r2 = divrem(r0, r1).second;
      r0 = std::move(r1);
      r1 = r2.monic();
    }
    return r0;
  }

  /// d/dX.
  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    Poly r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.c_.push_back(c_[i] * c_[i].from_int(static_cast<long>(i)));
    r.trim();
    return r;
  }

  /// f(u*X).
  Poly scale_arg(const F& u) const {
    if (is_zero()) return Poly();
    Poly r;
    r.c_.reserve(c_.size());
    F p = c_[0].one_like();
    for (std::size_t i = 0; i < c_.size(); ++i) {
      r.c_.push_back(c_[i] * p);
      if (i + 1 < c_.size()) p = p * u;
    }
    r.trim();
    return r;
  }

  /// Horner evaluation.
  F eval(const F& point) const {
    if (is_zero()) return point.zero_like();
    F acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * point + c_[i];
    return acc;
  }

  std::string str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const F& c = c_[k];
      if (c.is_zero()) continue;
      auto [neg, body] = term_str(c, k, var);
      if (first) {
        s = neg ? "-" + body : body;
        first = false;
      } else {
        s += neg ? " - " + body : " + " + body;
      }
    }
    return s;
  }

  /// True when str() is safe as a bare factor or divisor.
  bool atomic(const std::string& = "") const {
    if (is_zero()) return true;
    if (c_.size() == 1) return c_[0].atomic();
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return lead().is_one();  // a bare power "x^k"
  }

 private:
  static std::pair<bool, std::string> term_str(const F& c, std::size_t power,
                                               const std::string& var) {
    std::string xpart;
    if (power == 1) {
      xpart = var;
    } else if (power > 1) {
      xpart = var + "^" + std::to_string(power);
    }
    if (power > 0 && c.is_one()) return {false, xpart};
    if (power > 0 && (-c).is_one()) return {true, xpart};
    bool neg = false;
    F body = c;
    if (!c.atomic() && (-c).atomic()) {
      neg = true;
      body = -c;
    }
    std::string cs = body.atomic() ? body.str() : "(" + body.str() + ")";
    return {neg, power == 0 ? cs : cs + "*" + xpart};
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

}  // namespace qcurv
