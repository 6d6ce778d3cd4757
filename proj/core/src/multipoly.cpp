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

#include "qcurv/multipoly.hpp"

#include <algorithm>
#include <set>

namespace qcurv {

namespace {

void trim_dense(std::vector<Rational>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// Strip the rational content, leaving a primitive integer polynomial.
void make_primitive(std::vector<Rational>& v) {
  Rational c(0);
  for (const Rational& x : v) c = Rational::content_gcd(c, x);
  if (c.is_zero() || c.is_one()) return;
  Rational inv = c.inverse();
  for (Rational& x : v) x = x * inv;
}

}  // namespace

std::vector<Rational> dense_rational_gcd(std::vector<Rational> a,
                                         std::vector<Rational> b) {
  trim_dense(a);
  trim_dense(b);
  if (a.empty()) std::swap(a, b);
  if (b.empty()) {
    if (!a.empty() && !a.back().is_one()) {
      Rational inv = a.back().inverse();
      for (Rational& x : a) x = x * inv;
    }
    return a;
  }
  if (a.size() == 1 || b.size() == 1) return {Rational(1)};
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // Pseudo-remainder of a by b, content-stripped each round.
    while (a.size() >= b.size()) {
      Rational t = a.back();
      const Rational lb = b.back();
      std::size_t off = a.size() - b.size();
      for (Rational& x : a) x = x * lb;
      for (std::size_t i = 0; i < b.size(); ++i)
        a[off + i] = a[off + i] - t * b[i];
      trim_dense(a);
      if (a.empty()) break;
    }
    make_primitive(a);
    std::swap(a, b);
  }
  if (!a.empty() && !a.back().is_one()) {
    Rational inv = a.back().inverse();
    for (Rational& x : a) x = x * inv;
  }
  return a;
}

Monomial Monomial::variable(const std::string& name, unsigned exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({name, exp});
  return m;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [name, e] : factors_) d += e;
  return d;
}

unsigned Monomial::degree_in(const std::string& var) const {
  for (const auto& [name, e] : factors_)
    if (name == var) return e;
  return 0;
}

Monomial Monomial::mul(const Monomial& other) const {
  Monomial r;
  auto i = factors_.begin(), j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() ||
        (i != factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.push_back({i->first, i->second + j->second});
      ++i;
      ++j;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [name, e] : factors_)
    if (other.degree_in(name) < e) return false;
  return true;
}

Monomial Monomial::div_into(const Monomial& other) const {
  Monomial r;
  for (const auto& [name, e] : other.factors_) {
    unsigned d = degree_in(name);
    if (e > d) r.factors_.push_back({name, e - d});
  }
  return r;
}

Monomial Monomial::without(const std::string& var) const {
  Monomial r;
  for (const auto& f : factors_)
    if (f.first != var) r.factors_.push_back(f);
  return r;
}

Monomial Monomial::with(const std::string& var, unsigned exp) const {
  Monomial r = without(var);
  if (exp == 0) return r;
  auto it = std::lower_bound(
      r.factors_.begin(), r.factors_.end(), var,
      [](const auto& f, const std::string& v) { return f.first < v; });
  r.factors_.insert(it, {var, exp});
  return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // Same degree: lexicographic walk over the union of variables in
  // ascending name order; the first exponent difference decides.
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end()) return 1;   // a has an extra early variable
    if (i == a.factors_.end()) return -1;
    if (i->first < j->first) return 1;     // a's variable is more significant
    if (j->first < i->first) return -1;
    if (i->second != j->second) return i->second < j->second ? -1 : 1;
    ++i;
    ++j;
  }
  return 0;
}

std::string Monomial::str() const {
  std::string s;
  for (const auto& [name, e] : factors_) {
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

namespace {
bool monomial_greater(const Monomial& a, const Monomial& b) {
  return Monomial::cmp(a, b) > 0;
}
}  // namespace

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.terms_.push_back({Monomial::variable(name), Rational(1)});
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() &&
         terms_[0].second.is_one();
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_[0].second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree_in(var));
  return d;
}

std::optional<std::string> MultiPoly::main_variable() const {
  std::optional<std::string> best;
  for (const auto& t : terms_)
    for (const auto& [name, e] : t.first.factors())
      if (!best || name < *best) best = name;
  return best;
}

std::vector<std::string> MultiPoly::variables() const {
  std::set<std::string> vars;
  for (const auto& t : terms_)
    for (const auto& [name, e] : t.first.factors()) vars.insert(name);
  return {vars.begin(), vars.end()};
}

Rational MultiPoly::rational_content() const {
  Rational c(0);
  for (const auto& [m, k] : terms_) c = Rational::content_gcd(c, k);
  return c;
}

MultiPoly MultiPoly::from_term_map(
    std::map<Monomial, Rational, bool (*)(const Monomial&, const Monomial&)>&&
        m) {
  MultiPoly p;
  for (auto& [mono, c] : m)
    if (!c.is_zero()) p.terms_.push_back({mono, c});
  return p;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) p.terms_.push_back({m, -c});
  return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end()) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end()) {
      r.terms_.push_back(*j++);
    } else {
      int c = Monomial::cmp(i->first, j->first);
      if (c > 0) {
        r.terms_.push_back(*i++);
      } else if (c < 0) {
        r.terms_.push_back(*j++);
      } else {
        Rational s = i->second + j->second;
        if (!s.is_zero()) r.terms_.push_back({i->first, s});
        ++i;
        ++j;
      }
    }
  }
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  // Constants are by far the common case in the coefficient tower.
  if (a.is_constant()) return b.mul_rational(a.constant_value());
  if (b.is_constant()) return a.mul_rational(b.constant_value());
  std::map<Monomial, Rational, bool (*)(const Monomial&, const Monomial&)> m(
      &monomial_greater);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial mono = ma.mul(mb);
      auto it = m.find(mono);
      if (it == m.end()) {
        m.emplace(std::move(mono), ca * cb);
      } else {
        it->second = it->second + ca * cb;
      }
    }
  }
  return MultiPoly::from_term_map(std::move(m));
}

MultiPoly MultiPoly::mul_rational(const Rational& c) const {
  if (c.is_zero()) return MultiPoly();
  MultiPoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& [m, k] : terms_) p.terms_.push_back({m, k * c});
  return p;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (divisor.is_one()) return *this;
  if (divisor.is_constant())
    return mul_rational(divisor.constant_value().inverse());
  MultiPoly rem = *this;
  std::map<Monomial, Rational, bool (*)(const Monomial&, const Monomial&)> q(
      &monomial_greater);
  while (!rem.is_zero()) {
    const Monomial& lm = rem.lead_monomial();
    if (!divisor.lead_monomial().divides(lm))
      throw Error("multivariate division is not exact");
    Monomial qm = divisor.lead_monomial().div_into(lm);
    Rational qc = rem.lead_coeff() / divisor.lead_coeff();
    MultiPoly t;
    t.terms_.push_back({qm, qc});
    q.emplace(qm, qc);
    rem = rem - t * divisor;
  }
  return from_term_map(std::move(q));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
  std::vector<MultiPoly> coeffs(degree_in(var) + 1);
  for (const auto& [m, c] : terms_) {
    unsigned d = m.degree_in(var);
    MultiPoly t;
    t.terms_.push_back({m.without(var), c});
    coeffs[d] = coeffs[d] + t;
  }
  return coeffs;
}

MultiPoly MultiPoly::from_coefficients_in(const std::string& var,
                                          const std::vector<MultiPoly>& coeffs) {
  MultiPoly r;
  for (unsigned d = 0; d < coeffs.size(); ++d) {
    MultiPoly shifted;
    shifted.terms_.reserve(coeffs[d].terms_.size());
    for (const auto& [m, c] : coeffs[d].terms_)
      shifted.terms_.push_back({m.with(var, m.degree_in(var) + d), c});
    std::sort(shifted.terms_.begin(), shifted.terms_.end(),
              [](const auto& a, const auto& b) {
                return Monomial::cmp(a.first, b.first) > 0;
              });
    r = r + shifted;
  }
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return mul_rational(lead_coeff().inverse());
}

namespace {

// Content and primitive part with respect to one variable.
MultiPoly content_in(const MultiPoly& p, const std::string& var) {
  MultiPoly c;
  for (const auto& coeff : p.coefficients_in(var)) {
    if (coeff.is_zero()) continue;
    c = MultiPoly::gcd(c, coeff);
    if (c.is_one()) break;
  }
  return c;
}

// Strips the rational content; keeps coefficient bit growth in check along
// the pseudo-remainder sequence.
MultiPoly strip_rational_content(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Rational c = p.rational_content();
  return c.is_one() ? p : p.mul_rational(c.inverse());
}

// Single common variable: delegate to the dense integer-primitive gcd.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b,
                         const std::string& var) {
  auto to_dense = [&](const MultiPoly& p) {
    std::vector<Rational> c;
    for (const MultiPoly& coeff : p.coefficients_in(var))
      c.push_back(coeff.constant_value());
    return c;
  };
  std::vector<Rational> g = dense_rational_gcd(to_dense(a), to_dense(b));
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(g.size());
  for (const Rational& c : g) coeffs.push_back(MultiPoly::constant(c));
  return MultiPoly::from_coefficients_in(var, coeffs);
}

// Pseudo-remainder of a by b with respect to var (deg_var b >= 1).
MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, const std::string& var) {
  unsigned db = b.degree_in(var);
  std::vector<MultiPoly> bc = b.coefficients_in(var);
  const MultiPoly& lb = bc[db];
  while (!a.is_zero() && a.degree_in(var) >= db) {
    unsigned da = a.degree_in(var);
    std::vector<MultiPoly> ac = a.coefficients_in(var);
    const MultiPoly& la = ac[da];
    // a <- lb*a - la*x^(da-db)*b eliminates the leading term exactly.
    MultiPoly shift = MultiPoly::from_coefficients_in(
        var, [&] {
          std::vector<MultiPoly> v(da - db + 1);
          v[da - db] = la;
          return v;
        }());
    a = a * lb - shift * b;
  }
  return a;
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant())
    return MultiPoly::constant(Rational(1));
  std::vector<std::string> va = a.variables();
  std::vector<std::string> vb = b.variables();
  std::string var = std::min(va.front(), vb.front());
  if (va.size() == 1 && vb.size() == 1 && va.front() == vb.front())
    return univariate_gcd(a, b, var).monic();
  if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd(b, content_in(a, var));

  MultiPoly ca = content_in(a, var);
  MultiPoly cb = content_in(b, var);
  MultiPoly c = gcd(ca, cb);
  MultiPoly pa = strip_rational_content(a.exact_div(ca));
  MultiPoly pb = strip_rational_content(b.exact_div(cb));
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  // Primitive PRS.
  while (!pb.is_zero()) {
    MultiPoly r = pseudo_rem(pa, pb, var);
    pa = pb;
    if (r.is_zero()) {
      pb = MultiPoly();
    } else if (r.degree_in(var) == 0) {
      // Nontrivial remainder free of var: the primitive gcd is trivial.
      return c.monic();
    } else {
      pb = strip_rational_content(r.exact_div(content_in(r, var)));
    }
  }
  return (c * pa.exact_div(content_in(pa, var))).monic();
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c.abs();
    bool neg = c.sign() < 0;
    std::string body;
    if (m.is_one()) {
      body = a.str();
    } else if (a.is_one()) {
      body = m.str();
    } else {
      body = a.str() + "*" + m.str();
    }
    if (first) {
      s = neg ? "-" + body : body;
      first = false;
    } else {
      s += neg ? " - " + body : " + " + body;
    }
  }
  return s;
}

bool MultiPoly::atomic() const {
  if (is_zero()) return true;
  if (terms_.size() != 1) return false;
  const auto& [m, c] = terms_[0];
  if (m.is_one()) return c.atomic();
  return c.is_one() && m.factors().size() == 1;
}

}  // namespace qcurv
