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

#include <memory>
#include <string>

#include "qcurv/qfield.hpp"

namespace qcurv {

/// The kappa-th cyclotomic polynomial of q: monic, integer coefficients,
/// degree phi(kappa).  Computed by the Moebius product with exact division
/// and memoized per process; safe to call concurrently.
PolyQ cyclotomic(unsigned kappa);

unsigned euler_phi(unsigned n);

/// The quotient field K0[q]/(Phi_kappa(q)); the image of q is a formal
/// primitive kappa-th root of unity.  A field, because the cyclotomic
/// polynomials stay irreducible over K0 (the formal constants are
/// algebraically independent over Q).
class CycloRing : public std::enable_shared_from_this<CycloRing> {
 public:
  static std::shared_ptr<const CycloRing> make(unsigned kappa);

  unsigned kappa() const { return kappa_; }
  const PolyQ& modulus() const { return phi_; }
  long degree() const { return phi_.degree(); }

 private:
  explicit CycloRing(unsigned kappa) : kappa_(kappa), phi_(cyclotomic(kappa)) {}
  unsigned kappa_;
  PolyQ phi_;
};

/// Residue class in K0[q]/(Phi_kappa), stored as the canonical remainder of
/// degree < deg Phi_kappa.
class CycloElem {
 public:
  CycloElem(std::shared_ptr<const CycloRing> ring, PolyQ representative);

  const std::shared_ptr<const CycloRing>& ring() const { return ring_; }
  unsigned kappa() const { return ring_->kappa(); }
  const PolyQ& rep() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_.is_one(); }

  CycloElem operator-() const;
  friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b) {
    return a * b.inverse();
  }
  CycloElem inverse() const;
  CycloElem pow(long e) const;

  bool operator==(const CycloElem& other) const;
  bool operator!=(const CycloElem& other) const { return !(*this == other); }

  CycloElem zero_like() const { return CycloElem(ring_, PolyQ()); }
  CycloElem one_like() const {
    return CycloElem(ring_, PolyQ::constant(ConstField::one()));
  }
  CycloElem from_int(long n) const {
    return CycloElem(ring_, PolyQ::constant(ConstField::from_rational(Rational(n))));
  }

  std::string str() const { return rep_.str("q"); }
  bool atomic() const { return rep_.atomic(); }

 private:
  std::shared_ptr<const CycloRing> ring_;
  PolyQ rep_;
};

/// The class of q itself.
CycloElem zeta(const std::shared_ptr<const CycloRing>& ring);
/// zeta^k with k of either sign.
CycloElem zeta_pow(const std::shared_ptr<const CycloRing>& ring, long k);

/// Image of a rational function of q under q -> class of q.  A ring
/// homomorphism on its domain of definition; throws BadPlaceError when the
/// denominator vanishes modulo Phi_kappa.
CycloElem reduce_q(const QFunc& f, const std::shared_ptr<const CycloRing>& ring);

/// Rational functions of x with coefficients at a cyclotomic place.
using XC = RatFunc<CycloElem, XVarTag>;

/// Entrywise reduce_q on an element of K(x); throws BadPlaceError when any
/// coefficient fails to reduce.
XC reduce_x_function(const XK& f, const std::shared_ptr<const CycloRing>& ring);

}  // namespace qcurv
