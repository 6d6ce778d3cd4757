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

#include <random>
#include <vector>

#include "qcurv/classify.hpp"
#include "qcurv/system.hpp"

namespace qcurv::testgen {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng, long max_abs = 5) {
  long num = rand_int(rng, -max_abs, max_abs);
  long den = rand_int(rng, 1, max_abs);
  return Rational(num, den);
}

inline Rational rand_nonzero_rational(Rng& rng, long max_abs = 5) {
  Rational r = rand_rational(rng, max_abs);
  return r.is_zero() ? Rational(1) : r;
}

inline MultiPoly rand_multipoly(Rng& rng, const std::vector<std::string>& vars,
                                unsigned max_terms = 3, unsigned max_deg = 2) {
  MultiPoly p;
  unsigned terms = static_cast<unsigned>(rand_int(rng, 1, max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    MultiPoly m = MultiPoly::constant(rand_rational(rng));
    for (const std::string& v : vars) {
      unsigned e = static_cast<unsigned>(rand_int(rng, 0, max_deg));
      for (unsigned i = 0; i < e; ++i) m = m * MultiPoly::variable(v);
    }
    p = p + m;
  }
  return p;
}

inline ConstField rand_constfield(Rng& rng, const std::vector<std::string>& vars) {
  MultiPoly num = rand_multipoly(rng, vars);
  MultiPoly den = rand_multipoly(rng, vars);
  if (den.is_zero()) den = MultiPoly::constant(Rational(1));
  return ConstField::from_fraction(num, den);
}

/// Random polynomial in q with small rational coefficients.
inline PolyQ rand_polyq(Rng& rng, unsigned max_deg = 2) {
  std::vector<ConstField> c;
  unsigned deg = static_cast<unsigned>(rand_int(rng, 0, max_deg));
  for (unsigned i = 0; i <= deg; ++i)
    c.push_back(ConstField::from_rational(rand_rational(rng, 3)));
  return PolyQ::from_coeffs(std::move(c));
}

inline QFunc rand_qfunc(Rng& rng, unsigned max_deg = 2) {
  PolyQ num = rand_polyq(rng, max_deg);
  PolyQ den = rand_polyq(rng, max_deg);
  if (den.is_zero()) den = PolyQ::constant(ConstField::one());
  return QFunc(num, den);
}

inline QFunc rand_nonzero_qfunc(Rng& rng, unsigned max_deg = 2) {
  QFunc f = rand_qfunc(rng, max_deg);
  return f.is_zero() ? qfunc_int(1) : f;
}

/// Polynomial in x over K with small degrees and small q-degrees.
inline Poly<QFunc> rand_xpoly(Rng& rng, unsigned max_deg = 2,
                              unsigned max_qdeg = 1) {
  std::vector<QFunc> c;
  unsigned deg = static_cast<unsigned>(rand_int(rng, 0, max_deg));
  for (unsigned i = 0; i <= deg; ++i) {
    PolyQ p = rand_polyq(rng, max_qdeg);
    c.push_back(QFunc(p, PolyQ::constant(ConstField::one())));
  }
  return Poly<QFunc>::from_coeffs(std::move(c));
}

inline XK rand_xk(Rng& rng, unsigned max_deg = 2) {
  Poly<QFunc> num = rand_xpoly(rng, max_deg);
  Poly<QFunc> den = rand_xpoly(rng, max_deg);
  if (den.is_zero()) den = Poly<QFunc>::constant(qfunc_int(1));
  return XK(num, den);
}

inline XK rand_nonzero_xk(Rng& rng, unsigned max_deg = 2) {
  XK f = rand_xk(rng, max_deg);
  return f.is_zero() ? xk_int(1) : f;
}

/// Random invertible system with rational-function entries of degree <=
/// max_deg (numerators and denominators).  Retries until det != 0.
inline QDiffSystem rand_system(Rng& rng, std::size_t rank,
                               unsigned max_deg = 2, bool polynomial_only = false) {
  for (;;) {
    std::vector<std::vector<XK>> rows;
    for (std::size_t i = 0; i < rank; ++i) {
      std::vector<XK> row;
      for (std::size_t j = 0; j < rank; ++j)
        row.push_back(polynomial_only
                          ? XK::from_poly(rand_xpoly(rng, max_deg), qfunc_int(0))
                          : rand_xk(rng, max_deg));
      rows.push_back(std::move(row));
    }
    Matrix<XK> a = Matrix<XK>::from_rows(std::move(rows));
    if (!a.determinant().is_zero()) return QDiffSystem(std::move(a));
  }
}

/// Random gauge with entries of degree <= 1 and nonzero determinant.
inline GaugeMatrix rand_gauge(Rng& rng, std::size_t rank) {
  for (;;) {
    std::vector<std::vector<XK>> rows;
    for (std::size_t i = 0; i < rank; ++i) {
      std::vector<XK> row;
      for (std::size_t j = 0; j < rank; ++j)
        row.push_back(XK::from_poly(rand_xpoly(rng, 1), qfunc_int(0)));
      rows.push_back(std::move(row));
    }
    try {
      return GaugeMatrix(Matrix<XK>::from_rows(std::move(rows)));
    } catch (const SingularGaugeError&) {
      continue;
    }
  }
}

/// Coboundary data: orbit chains with zero exponent sums over roots of the
/// form p*q^v with distinct primes p per orbit (so orbits can neither merge
/// nor collide), and a constant that is an exact power of q.
inline FactoredRatFunc rand_coboundary_data(Rng& rng) {
  FactoredRatFunc f;
  f.constant = qpow(rand_int(rng, -2, 2));
  f.x_exponent = 0;
  static const long kOrbitMarkers[] = {3, 5, 7};
  unsigned orbits = static_cast<unsigned>(rand_int(rng, 1, 2));
  for (unsigned o = 0; o < orbits; ++o) {
    QFunc base = qfunc_int(kOrbitMarkers[o]) * qpow(rand_int(rng, -1, 1));
    // Two or three positions with exponents summing to zero.
    if (rand_int(rng, 0, 1) == 0) {
      long e = rand_int(rng, 1, 2);
      long t = rand_int(rng, 1, 3);
      f.factors.push_back({base, e});
      f.factors.push_back({base * qpow(t), -e});
    } else {
      f.factors.push_back({base, 1});
      f.factors.push_back({base * qpow(1), 1});
      f.factors.push_back({base * qpow(3), -2});
    }
  }
  return f;
}

}  // namespace qcurv::testgen
