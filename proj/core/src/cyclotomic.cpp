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

#include "qcurv/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace qcurv {

namespace {

// q^n - 1.
PolyQ q_pow_minus_one(unsigned n) {
  std::vector<ConstField> c;
  c.reserve(n + 1);
  c.push_back(ConstField::from_rational(Rational(-1)));
  for (unsigned i = 1; i < n; ++i) c.push_back(ConstField::zero());
  c.push_back(ConstField::one());
  return PolyQ::from_coeffs(std::move(c));
}

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::mutex g_cyclo_mutex;
std::map<unsigned, PolyQ>& cyclo_table() {
  static std::map<unsigned, PolyQ> table;
  return table;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

PolyQ cyclotomic(unsigned kappa) {
  if (kappa == 0) throw Error("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = cyclo_table().find(kappa);
    if (it != cyclo_table().end()) return it->second;
  }
  // Phi_kappa = prod_{d | kappa} (q^d - 1)^{mu(kappa/d)}.
  PolyQ num = PolyQ::constant(ConstField::one());
  std::vector<unsigned> den_exps;
  for (unsigned d = 1; d <= kappa; ++d) {
    if (kappa % d != 0) continue;
    int mu = moebius(kappa / d);
    if (mu == 1) num = num * q_pow_minus_one(d);
    if (mu == -1) den_exps.push_back(d);
  }
  for (unsigned d : den_exps) num = PolyQ::exact_div(num, q_pow_minus_one(d));
  {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    cyclo_table().emplace(kappa, num);
  }
  return num;
}

std::shared_ptr<const CycloRing> CycloRing::make(unsigned kappa) {
  return std::shared_ptr<const CycloRing>(new CycloRing(kappa));
}

CycloElem::CycloElem(std::shared_ptr<const CycloRing> ring, PolyQ representative)
    : ring_(std::move(ring)), rep_(std::move(representative)) {
  if (rep_.degree() >= ring_->degree())
    rep_ = PolyQ::divrem(rep_, ring_->modulus()).second;
}

CycloElem CycloElem::operator-() const { return CycloElem(ring_, -rep_); }

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
  return CycloElem(a.ring_, a.rep_ + b.rep_);
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) {
  return CycloElem(a.ring_, a.rep_ - b.rep_);
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  return CycloElem(a.ring_, a.rep_ * b.rep_);
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  // Extended Euclid: s*rep + t*Phi = g with g constant (Phi irreducible).
  PolyQ r0 = ring_->modulus(), r1 = rep_;
  PolyQ s0, s1 = PolyQ::constant(ConstField::one());
  while (!r1.is_zero()) {
    auto [q, r2] = PolyQ::divrem(r0, r1);
    PolyQ s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd is a nonzero constant.
  return CycloElem(ring_, s0.mul_scalar(r0.lead().inverse()));
}

CycloElem CycloElem::pow(long e) const {
  CycloElem base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  CycloElem acc = one_like();
  while (n > 0) {
    if (n & 1) acc = acc * base;
    if (n > 1) base = base * base;
    n >>= 1;
  }
  return acc;
}

bool CycloElem::operator==(const CycloElem& other) const {
  return ring_->kappa() == other.ring_->kappa() && rep_ == other.rep_;
}

CycloElem zeta(const std::shared_ptr<const CycloRing>& ring) {
  return CycloElem(ring, PolyQ::variable(ConstField::one()));
}

CycloElem zeta_pow(const std::shared_ptr<const CycloRing>& ring, long k) {
  unsigned kappa = ring->kappa();
  long r = k % static_cast<long>(kappa);
  if (r < 0) r += kappa;  // zeta^kappa = 1
  CycloElem z = zeta(ring);
  return z.pow(r);
}

CycloElem reduce_q(const QFunc& f, const std::shared_ptr<const CycloRing>& ring) {
  CycloElem num(ring, PolyQ::divrem(f.numerator(), ring->modulus()).second);
  CycloElem den(ring, PolyQ::divrem(f.denominator(), ring->modulus()).second);
  if (den.is_zero())
    throw BadPlaceError(ring->kappa(), "denominator vanishes");
  return num * den.inverse();
}

XC reduce_x_function(const XK& f, const std::shared_ptr<const CycloRing>& ring) {
  auto reduce_poly = [&](const Poly<QFunc>& p) {
    std::vector<CycloElem> c;
    c.reserve(p.coeffs().size());
    for (const QFunc& coeff : p.coeffs()) c.push_back(reduce_q(coeff, ring));
    return Poly<CycloElem>::from_coeffs(std::move(c));
  };
  return XC(reduce_poly(f.numerator()), reduce_poly(f.denominator()));
}

}  // namespace qcurv
