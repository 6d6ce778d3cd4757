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
#include <string_view>
#include <vector>

#include "qcurv/qfield.hpp"

namespace qcurv {

/// Exponents larger than this are rejected outright.
inline constexpr long kMaxExponent = 10000;

/// Abstract syntax tree for the entry grammar.  Precedence is
/// ^  >  unary minus  >  * /  >  + -, with ^ right-associative on integer
/// literal exponents; implicit multiplication is a syntax error.
struct Expr {
  enum class Kind { kInt, kSymbol, kNeg, kAdd, kSub, kMul, kDiv, kPow };

  Kind kind;
  std::size_t pos = 0;          // byte offset into the source
  Rational literal;             // kInt
  std::string symbol;           // kSymbol
  long exponent = 0;            // kPow
  std::vector<Expr> children;
};

/// Parses one expression; every symbol must be x, q or a declared constant.
/// Throws SyntaxError / UnknownSymbolError with byte offsets.
Expr parse_expr(std::string_view source,
                const std::vector<std::string>& declared_constants);

/// Evaluates to a canonical rational function in K(x).  Throws
/// DivisionByZeroError when a denominator normalizes to the zero function.
XK eval_expr(const Expr& e);

/// parse + eval in one step.
XK eval_entry(std::string_view source,
              const std::vector<std::string>& declared_constants);

}  // namespace qcurv
