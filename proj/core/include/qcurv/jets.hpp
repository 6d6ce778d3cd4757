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
#include <string>
#include <utility>
#include <vector>

#include "qcurv/classify.hpp"
#include "qcurv/system.hpp"

namespace qcurv {

/// Polynomial of total degree <= 2 in the fiber coordinates X_1..X_nu with
/// rational-function coefficients.  Germs are polynomial in X of degree <= 2
/// by construction, so this is the whole jet algebra the generators need.
template <FieldElement F>
class JetPoly {
 public:
  using RF = RatFunc<F, XVarTag>;
  // Key (a, b) with a <= b: (-1,-1) constant, (-1,j) X_j, (i,j) X_i*X_j.
  using Key = std::pair<int, int>;

  JetPoly() = default;  // zero
  static JetPoly constant(RF c) {
    JetPoly p;
    p.set({-1, -1}, std::move(c));
    return p;
  }
  static JetPoly linear(const std::vector<RF>& coeffs) {
    JetPoly p;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      p.set({-1, static_cast<int>(j)}, coeffs[j]);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  JetPoly operator-() const {
    JetPoly p;
    for (const auto& [k, c] : terms_) p.terms_.emplace(k, -c);
    return p;
  }
  friend JetPoly operator+(const JetPoly& a, const JetPoly& b) {
    JetPoly r = a;
    for (const auto& [k, c] : b.terms_) {
      auto it = r.terms_.find(k);
      if (it == r.terms_.end()) {
        r.terms_.emplace(k, c);
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
    return r;
  }
  friend JetPoly operator-(const JetPoly& a, const JetPoly& b) {
    return a + (-b);
  }

  /// d/dX_j.
  JetPoly partial_var(int j) const {
    JetPoly r;
    for (const auto& [k, c] : terms_) {
      auto [a, b] = k;
      if (a == -1 && b == -1) continue;
      if (a == -1) {
        if (b == j) r.add({-1, -1}, c);
        continue;
      }
      if (a == j && b == j) {
        r.add({-1, j}, c + c);
      } else if (a == j) {
        r.add({-1, b}, c);
      } else if (b == j) {
        r.add({-1, a}, c);
      }
    }
    return r;
  }

  /// Multiplication by X_j; the result must stay within degree 2.
  JetPoly mul_var(int j) const {
    JetPoly r;
    for (const auto& [k, c] : terms_) {
      auto [a, b] = k;
      if (a != -1) throw Error("jet polynomial degree cap exceeded");
      if (b == -1) {
        r.add({-1, j}, c);
      } else {
        r.add({std::min(b, j), std::max(b, j)}, c);
      }
    }
    return r;
  }

  /// Coefficientwise d/dx.
  JetPoly partial_x() const {
    JetPoly r;
    for (const auto& [k, c] : terms_) r.add(k, ddx(c));
    return r;
  }

  bool operator==(const JetPoly& other) const { return terms_ == other.terms_; }

  const std::map<Key, RF>& terms() const { return terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::string mono;
      if (k.first >= 0) mono += "X" + std::to_string(k.first + 1) + "*";
      if (k.second >= 0) mono += "X" + std::to_string(k.second + 1);
      if (mono.empty()) {
        s += c.str();
      } else {
        s += (c.atomic() ? c.str() : "(" + c.str() + ")") + "*" + mono;
      }
    }
    return s;
  }

 private:
  void set(Key k, RF c) {
    if (!c.is_zero()) terms_.insert_or_assign(k, std::move(c));
  }
  void add(Key k, const RF& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Key, RF> terms_;
};

/// Germ of a map (x, X) -> (xbar(x), Xbar(x, X)) with xbar rational in x
/// only and each Xbar component polynomial of degree <= 2 in X.
template <FieldElement F>
struct Germ {
  RatFunc<F, XVarTag> target_x;
  std::vector<JetPoly<F>> target_fiber;

  std::size_t fiber_rank() const { return target_fiber.size(); }
};

/// Germ of the invertible linear form (x, X) -> (alpha*x, beta(x) X).
template <FieldElement F>
class LinearGerm {
 public:
  LinearGerm(F alpha, Matrix<RatFunc<F, XVarTag>> beta)
      : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.is_zero()) throw Error("linear germ with zero dilation");
    if (!beta_.is_square() || beta_.determinant().is_zero())
      throw SingularMatrixError("linear germ with singular matrix part");
  }

  const F& alpha() const { return alpha_; }
  const Matrix<RatFunc<F, XVarTag>>& beta() const { return beta_; }

  Germ<F> to_germ() const {
    using RF = RatFunc<F, XVarTag>;
    std::vector<JetPoly<F>> fiber;
    fiber.reserve(beta_.rows());
    for (std::size_t i = 0; i < beta_.rows(); ++i) {
      std::vector<RF> row;
      row.reserve(beta_.cols());
      for (std::size_t j = 0; j < beta_.cols(); ++j) row.push_back(beta_(i, j));
      fiber.push_back(JetPoly<F>::linear(row));
    }
    return Germ<F>{RF::variable(alpha_) * RF::constant(alpha_),
                   std::move(fiber)};
  }

 private:
  F alpha_;
  Matrix<RatFunc<F, XVarTag>> beta_;
};

/// Groupoid composition (alpha, beta) after (gamma, delta):
/// (alpha*gamma, beta(gamma x) * delta(x)).
template <FieldElement F>
LinearGerm<F> compose(const LinearGerm<F>& g1, const LinearGerm<F>& g2) {
  return LinearGerm<F>(g1.alpha() * g2.alpha(),
                       subst_scale_matrix(g1.beta(), g2.alpha()) * g2.beta());
}

/// Element of the dynamics Dyn(A): (x, X) -> (q^k x, A_k(x) X).
LinearGerm<QFunc> dyn_element(const QDiffSystem& sys, long k);

/// One instantiated defining equation of the groupoid Lin.
struct LinGenerator {
  enum class Family {
    kTargetXIndependence,   // d xbar / d X_j
    kTargetXHomogeneity,    // d xbar / d x * x - xbar
    kTargetXSecondDeriv,    // d^2 xbar / d x^2
    kFiberLinearity,        // sum_j d Xbar_i / d X_j * X_j - Xbar_i
    kFiberSecondPartials,   // d^2 Xbar_i / d X_j d X_k
  };
  Family family;
  std::string label;
};

/// The five generator families instantiated over all coordinate indices for
/// fiber rank nu.  Germs here carry xbar as a function of x alone, so the
/// target-x families reduce to one equation each; the second partials of
/// xbar mixing fiber coordinates vanish syntactically.
std::vector<LinGenerator> lin_generators(std::size_t nu);

/// Residues of every Lin generator evaluated on a germ.
template <FieldElement F>
struct LinCheck {
  struct Residue {
    std::string equation;
    bool zero;
    std::string value;  // rendering of the residue when nonzero
  };
  std::vector<Residue> residues;
  bool ok = true;
};

template <FieldElement F>
LinCheck<F> check_lin(const Germ<F>& g) {
  const std::size_t nu = g.fiber_rank();
  LinCheck<F> out;
  auto push = [&out](const std::string& label, bool zero, std::string value) {
    out.residues.push_back({label, zero, std::move(value)});
    if (!zero) out.ok = false;
  };
  std::vector<LinGenerator> gens = lin_generators(nu);
  std::size_t gi = 0;
  // d xbar / d X_j: identically zero in this representation.
  for (std::size_t j = 0; j < nu; ++j) push(gens[gi++].label, true, "0");
  // d xbar / dx * x - xbar = del(xbar) - xbar.
  {
    auto r = del(g.target_x) - g.target_x;
    push(gens[gi++].label, r.is_zero(), r.str());
  }
  // d^2 xbar / dx^2.
  {
    auto r = ddx(ddx(g.target_x));
    push(gens[gi++].label, r.is_zero(), r.str());
  }
  // Linearity in the fiber: sum_j dXbar_i/dX_j * X_j - Xbar_i.
  for (std::size_t i = 0; i < nu; ++i) {
    JetPoly<F> acc;
    for (std::size_t j = 0; j < nu; ++j)
      acc = acc + g.target_fiber[i].partial_var(static_cast<int>(j))
                      .mul_var(static_cast<int>(j));
    JetPoly<F> r = acc - g.target_fiber[i];
    push(gens[gi++].label, r.is_zero(), r.str());
  }
  // Second partials in the fiber.
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = 0; j < nu; ++j)
      for (std::size_t k = j; k < nu; ++k) {
        JetPoly<F> r = g.target_fiber[i]
                           .partial_var(static_cast<int>(j))
                           .partial_var(static_cast<int>(k));
        push(gens[gi++].label, r.is_zero(), r.str());
      }
  return out;
}

template <FieldElement F>
LinCheck<F> check_lin(const LinearGerm<F>& g) {
  return check_lin(g.to_germ());
}

/// Trv is generated by the single equation xbar - x.
template <FieldElement F>
bool check_trv(const Germ<F>& g) {
  return g.target_x == RatFunc<F, XVarTag>::variable(g.target_x.sample());
}

template <FieldElement F>
bool check_trv(const LinearGerm<F>& g) {
  return g.alpha().is_one();
}

/// For every good curvature C_kappa, builds the transversal germ
/// (x, X) -> (x, C_kappa(x) X) and verifies both template membership and the
/// Lin generators.  Throws NoGoodPlaceError when every place is bad.
bool check_transversal_group(const QDiffSystem& sys,
                             const std::vector<unsigned>& kappa_set,
                             ClassifyMode mode = ClassifyMode::kDifferential);

/// Same check against a caller-supplied template.
bool check_transversal_group(const QDiffSystem& sys,
                             const std::vector<unsigned>& kappa_set,
                             const GroupTemplate& t);

}  // namespace qcurv
