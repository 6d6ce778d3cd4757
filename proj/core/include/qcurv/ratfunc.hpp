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
#include <utility>

#include "qcurv/poly.hpp"
#include "qcurv/rational.hpp"

namespace qcurv {

struct XVarTag {
  static constexpr const char* name = "x";
};
struct QVarTag {
  static constexpr const char* name = "q";
};

template <FieldElement F, typename Var>
class RatFunc;

/// gcd strategy used by RatFunc normalization.  The generic case is monic
/// Euclid; when the coefficients are themselves fractions of polynomials it
/// is specialized below to a primitive PRS over the inner polynomial ring,
/// which avoids the coefficient blowup of Euclid over a fraction field.
template <typename F>
struct RatFuncGcd {
  static Poly<F> run(const Poly<F>& a, const Poly<F>& b) {
    return Poly<F>::gcd_monic(a, b);
  }
};

/// Reduced rational function in one variable over a coefficient field.
/// Canonical form: denominator monic and nonzero, gcd(num, den) = 1, zero is
/// 0/1.  The variable is part of the type, which keeps functions of x and
/// functions of q from mixing silently.
template <FieldElement F, typename Var = XVarTag>
class RatFunc {
 public:
  using Coeff = F;

  RatFunc() requires std::default_initializable<F>
      : num_(), den_(Poly<F>::constant(F().one_like())) {}

  RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
      throw DivisionByZeroError("rational function with zero denominator");
    normalize();
  }
  static RatFunc from_poly(Poly<F> p, const F& sample) {
    return RatFunc(std::move(p), Poly<F>::constant(sample.one_like()));
  }
  static RatFunc constant(const F& c) {
    return RatFunc(Poly<F>::constant(c), Poly<F>::constant(c.one_like()));
  }
  static RatFunc variable(const F& sample) {
    return RatFunc(Poly<F>::variable(sample),
                   Poly<F>::constant(sample.one_like()));
  }

  const Poly<F>& numerator() const { return num_; }
  const Poly<F>& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  /// An element of the coefficient field, for minting ring constants.
  const F& sample() const { return den_.lead(); }

  RatFunc zero_like() const { return constant(sample().zero_like()); }
  RatFunc one_like() const { return constant(sample().one_like()); }
  RatFunc from_int(long n) const { return constant(sample().from_int(n)); }

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + (-b);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() ? a : b;
    if (a.den_.is_one() && b.den_.is_one())
      return RatFunc(a.num_ * b.num_, a.den_, true);
    // Cancel across the diagonal first; the remaining normalization gcd is
    // then trivial, which keeps intermediate degrees down.
    Poly<F> g1 = b.den_.is_one() ? b.den_ : RatFuncGcd<F>::run(a.num_, b.den_);
    Poly<F> g2 = a.den_.is_one() ? a.den_ : RatFuncGcd<F>::run(b.num_, a.den_);
    Poly<F> n1 = g1.is_one() ? a.num_ : Poly<F>::exact_div(a.num_, g1);
    Poly<F> d2 = g1.is_one() ? b.den_ : Poly<F>::exact_div(b.den_, g1);
    Poly<F> n2 = g2.is_one() ? b.num_ : Poly<F>::exact_div(b.num_, g2);
    Poly<F> d1 = g2.is_one() ? a.den_ : Poly<F>::exact_div(a.den_, g2);
    return RatFunc(n1 * n2, d1 * d2);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return a * b.inverse();
  }

  RatFunc inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    return RatFunc(den_, num_);
  }

  RatFunc pow(long e) const {
    if (e == 0) return one_like();
    RatFunc base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
    RatFunc acc = one_like();
    while (n > 0) {
      if (n & 1) acc = acc * base;
      base = n > 1 ? base * base : base;
      n >>= 1;
    }
    return acc;
  }

  bool operator==(const RatFunc& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  bool operator!=(const RatFunc& other) const { return !(*this == other); }

  /// Evaluation at a coefficient-field point; throws DivisionByZeroError at
  /// a pole.
  F eval(const F& point) const {
    F d = den_.eval(point);
    if (d.is_zero()) throw DivisionByZeroError("evaluation at a pole");
    return num_.eval(point) * d.inverse();
  }

  std::string str() const {
    if (den_.is_one()) return num_.str(Var::name);
    auto paren = [](const Poly<F>& p) {
      std::string s = p.str(Var::name);
      return p.atomic() ? s : "(" + s + ")";
    };
    std::string n = num_.str(Var::name);
    bool num_is_sum = !num_.is_zero() && count_printed_terms(num_) > 1;
    if (num_is_sum) n = "(" + n + ")";
    return n + "/" + paren(den_);
  }

  bool atomic() const { return den_.is_one() && num_.atomic(); }

 private:
  RatFunc(Poly<F> num, Poly<F> den, bool /*normalized*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  static std::size_t count_printed_terms(const Poly<F>& p) {
    std::size_t n = 0;
    for (const F& c : p.coeffs())
      if (!c.is_zero()) ++n;
    return n;
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly<F>::constant(den_.lead().one_like());
      return;
    }
    if (den_.is_one()) return;
    if (!den_.is_constant() && !num_.is_constant()) {
      Poly<F> g = RatFuncGcd<F>::run(num_, den_);
      if (!g.is_one()) {
        num_ = Poly<F>::exact_div(num_, g);
        den_ = Poly<F>::exact_div(den_, g);
      }
    }
    if (!den_.lead().is_one()) {
      F inv = den_.lead().inverse();
      num_ = num_.mul_scalar(inv);
      den_ = den_.mul_scalar(inv);
    }
  }

  Poly<F> num_, den_;
};

/// Optional hook for coefficient rings embedded over Q: expose the rational
/// content of a coefficient vector so PRS intermediates can be kept
/// integer-primitive, and rational values of individual coefficients so gcd
/// triviality can be certified by evaluation.  Specialized for ConstField in
/// qfield.hpp.
template <typename C>
struct RationalContent {
  static constexpr bool available = false;
  static void strip(std::vector<Poly<C>>&) {}
  static std::optional<Rational> value(const C&) { return std::nullopt; }
};

/// Primitive pseudo-remainder sequence for x-polynomials whose coefficients
/// are fractions n(q)/d(q): denominators are cleared and the whole gcd runs
/// inside the polynomial ring, with content stripped between steps.
template <FieldElement C, typename CVar>
struct RatFuncGcd<RatFunc<C, CVar>> {
  using F = RatFunc<C, CVar>;
  using R = Poly<C>;  // the inner polynomial ring, e.g. K0[q]

  static Poly<F> run(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant())
      return Poly<F>::constant(a.is_constant() ? a.lead().one_like()
                                               : b.lead().one_like());
    std::vector<R> pa = primitive(clear_denominators(a));
    std::vector<R> pb = primitive(clear_denominators(b));
    // Generic operands are coprime; certify that cheaply before paying for
    // the full PRS.  A degree-preserving evaluation of the inner variable
    // maps any common factor to a common factor of the same x-degree, so a
    // trivial gcd of the images proves a trivial gcd upstairs.
    if (provably_coprime(pa, pb))
      return Poly<F>::constant(a.lead().one_like());
    if (pa.size() < pb.size()) std::swap(pa, pb);
    for (;;) {
      std::vector<R> r = pseudo_rem(pa, pb);
      if (r.empty()) break;
      if (r.size() == 1) {  // nonzero remainder constant in x: trivial gcd
        pb = {unit_r(r[0])};
        break;
      }
      pa = std::move(pb);
      pb = primitive(std::move(r));
    }
    // Lift back to fraction coefficients and make the result monic.
    std::vector<F> coeffs;
    coeffs.reserve(pb.size());
    const R one = R::constant(pb.back().lead().one_like());
    for (R& c : pb) coeffs.push_back(F(std::move(c), one));
    return Poly<F>::from_coeffs(std::move(coeffs)).monic();
  }

 private:
  static R unit_r(const R& c) { return R::constant(c.lead().one_like()); }

  static std::optional<std::vector<Rational>> eval_inner(
      const std::vector<R>& v, const Rational& point) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const R& p : v) {
      Rational acc(0);
      for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        std::optional<Rational> c = RationalContent<C>::value(p.coeffs()[k]);
        if (!c) return std::nullopt;
        acc = acc * point + *c;
      }
      out.push_back(acc);
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
  }

  static bool provably_coprime(const std::vector<R>& a,
                               const std::vector<R>& b) {
    if constexpr (!RationalContent<C>::available) return false;
    static const Rational points[] = {Rational(17, 13), Rational(-23, 19),
                                      Rational(29, 31)};
    for (const Rational& q0 : points) {
      std::optional<std::vector<Rational>> da = eval_inner(a, q0);
      std::optional<std::vector<Rational>> db = eval_inner(b, q0);
      if (!da || !db) return false;  // not over Q: no verdict
      // The leading coefficients must survive so x-degrees are preserved.
      if (da->size() != a.size() || db->size() != b.size()) continue;
      return dense_rational_gcd(std::move(*da), std::move(*db)).size() <= 1;
    }
    return false;
  }

  static std::vector<R> clear_denominators(const Poly<F>& p) {
    R lcm = R::constant(p.lead().sample().one_like());
    for (const F& c : p.coeffs()) {
      if (c.is_zero() || c.denominator().is_one()) continue;
      R g = RatFuncGcd<C>::run(lcm, c.denominator());
      lcm = lcm * R::exact_div(c.denominator(), g);
    }
    std::vector<R> out;
    out.reserve(p.coeffs().size());
    for (const F& c : p.coeffs())
      out.push_back(c.numerator() * R::exact_div(lcm, c.denominator()));
    return out;
  }

  static void trim(std::vector<R>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  }

  static std::vector<R> primitive(std::vector<R> v) {
    trim(v);
    if (v.empty()) return v;
    R g;
    for (const R& c : v) {
      if (c.is_zero()) continue;
      g = RatFuncGcd<C>::run(g, c);
      if (g.is_one()) break;
    }
    if (!g.is_one())
      for (R& c : v) c = R::exact_div(c, g);
    if constexpr (RationalContent<C>::available) {
      RationalContent<C>::strip(v);
    } else if (!v.back().lead().is_one()) {
      // Keep the top coefficient monic so PRS steps cannot pile up units.
      const auto s = v.back().lead().inverse();
      for (R& c : v) c = c.mul_scalar(s);
    }
    return v;
  }

  static std::vector<R> pseudo_rem(std::vector<R> a, const std::vector<R>& b) {
    while (a.size() >= b.size()) {
      R t = a.back();
      const R& lb = b.back();
      std::size_t off = a.size() - b.size();
      for (R& c : a) c = c * lb;
      for (std::size_t i = 0; i < b.size(); ++i)
        a[off + i] = a[off + i] - t * b[i];
      trim(a);
      if (a.empty()) break;
    }
    return a;
  }
};

/// The derivation d = X d/dX (in the function's own variable); kills every
/// coefficient-field constant and satisfies the Leibniz rule.
template <FieldElement F, typename Var>
RatFunc<F, Var> del(const RatFunc<F, Var>& f) {
  const Poly<F>& n = f.numerator();
  const Poly<F>& d = f.denominator();
  Poly<F> top = n.derivative() * d - n * d.derivative();
  return RatFunc<F, Var>(top.mul_xpow(1), d * d);
}

/// Ordinary derivative d/dX.
template <FieldElement F, typename Var>
RatFunc<F, Var> ddx(const RatFunc<F, Var>& f) {
  const Poly<F>& n = f.numerator();
  const Poly<F>& d = f.denominator();
  return RatFunc<F, Var>(n.derivative() * d - n * d.derivative(), d * d);
}

/// Substitution X -> u*X for a unit u of the coefficient field.
template <FieldElement F, typename Var>
RatFunc<F, Var> subst_scale(const RatFunc<F, Var>& f, const F& u) {
  if (u.is_zero()) throw DivisionByZeroError("substitution by a non-unit");
  return RatFunc<F, Var>(f.numerator().scale_arg(u),
                         f.denominator().scale_arg(u));
}

}  // namespace qcurv
