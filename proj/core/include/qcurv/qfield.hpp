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

#include "qcurv/constfield.hpp"
#include "qcurv/ratfunc.hpp"

namespace qcurv {

template <>
struct RationalContent<ConstField> {
  static constexpr bool available = true;
  static std::optional<Rational> value(const ConstField& c) {
    if (!c.is_rational()) return std::nullopt;
    return c.as_rational();
  }
  static void strip(std::vector<Poly<ConstField>>& v) {
    Rational c(0);
    for (const auto& p : v)
      for (const ConstField& k : p.coeffs()) {
        if (k.is_zero()) continue;
        if (!k.is_rational()) return;  // declared constants present
        c = Rational::content_gcd(c, k.as_rational());
      }
    if (c.is_zero() || c.is_one()) return;
    ConstField s = ConstField::from_rational(c.inverse());
    for (auto& p : v) p = p.mul_scalar(s);
  }
};

/// q-polynomial gcd: when every coefficient is a plain rational the dense
/// integer-primitive routine applies; declared constants fall back to monic
/// Euclid (the lambda tower stays small by construction).
template <>
struct RatFuncGcd<ConstField> {
  static Poly<ConstField> run(const Poly<ConstField>& a,
                              const Poly<ConstField>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant())
      return Poly<ConstField>::constant(ConstField::one());
    // Factor out the common power of q first; denominators in this tower
    // are very often plain monomials.
    std::size_t va = valuation(a), vb = valuation(b);
    std::size_t v = std::min(va, vb);
    if (va == static_cast<std::size_t>(a.degree()) ||
        vb == static_cast<std::size_t>(b.degree()))
      return monomial(v);  // one side is a monomial
    if (v > 0) {
      Poly<ConstField> g = run(shift_down(a, v), shift_down(b, v));
      return g.mul_xpow(static_cast<unsigned>(v));
    }
    auto all_rational = [](const Poly<ConstField>& p) {
      for (const ConstField& c : p.coeffs())
        if (!c.is_rational()) return false;
      return true;
    };
    if (!all_rational(a) || !all_rational(b))
      return Poly<ConstField>::gcd_monic(a, b);
    auto dense = [](const Poly<ConstField>& p) {
      std::vector<Rational> v;
      v.reserve(p.coeffs().size());
      for (const ConstField& c : p.coeffs()) v.push_back(c.as_rational());
      return v;
    };
    std::vector<Rational> g = dense_rational_gcd(dense(a), dense(b));
    std::vector<ConstField> coeffs;
    coeffs.reserve(g.size());
    for (const Rational& c : g) coeffs.push_back(ConstField::from_rational(c));
    return Poly<ConstField>::from_coeffs(std::move(coeffs));
  }

 private:
  static std::size_t valuation(const Poly<ConstField>& p) {
    std::size_t v = 0;
    while (v < p.coeffs().size() && p.coeffs()[v].is_zero()) ++v;
    return v;
  }
  static Poly<ConstField> shift_down(const Poly<ConstField>& p, std::size_t v) {
    std::vector<ConstField> c(p.coeffs().begin() + v, p.coeffs().end());
    return Poly<ConstField>::from_coeffs(std::move(c));
  }
  static Poly<ConstField> monomial(std::size_t v) {
    return Poly<ConstField>::constant(ConstField::one())
        .mul_xpow(static_cast<unsigned>(v));
  }
};

/// Polynomials in q over the constant field K0.
using PolyQ = Poly<ConstField>;

/// K = Frac(K0[q]): rational functions of q, the coefficient field of every
/// input system.
using QFunc = RatFunc<ConstField, QVarTag>;

inline QFunc q_func() { return QFunc::variable(ConstField::one()); }
inline QFunc qfunc_constant(const ConstField& c) { return QFunc::constant(c); }
inline QFunc qfunc_int(long n) {
  return QFunc::constant(ConstField::from_rational(Rational(n)));
}
inline QFunc qpow(long k) { return q_func().pow(k); }

/// If f = q^m exactly (coefficient 1), return m.
inline std::optional<long> q_power_exponent(const QFunc& f) {
  const PolyQ& n = f.numerator();
  const PolyQ& d = f.denominator();
  if (n.is_zero()) return std::nullopt;
  if (!n.lead().is_one()) return std::nullopt;
  for (long i = 0; i < n.degree(); ++i)
    if (!n.coeffs()[i].is_zero()) return std::nullopt;
  for (long i = 0; i < d.degree(); ++i)
    if (!d.coeffs()[i].is_zero()) return std::nullopt;
  return n.degree() - d.degree();
}

/// K(x): the entry field of q-difference systems.
using XK = RatFunc<QFunc, XVarTag>;

inline XK xk_var() { return XK::variable(q_func().zero_like().one_like()); }
inline XK xk_constant(const QFunc& c) { return XK::constant(c); }
inline XK xk_int(long n) { return XK::constant(qfunc_int(n)); }
inline XK xk_q() { return XK::constant(q_func()); }

}  // namespace qcurv
