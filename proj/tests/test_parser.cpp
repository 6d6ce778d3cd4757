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

#include <random>

#include "doctest.h"
#include "qcurv/expr.hpp"

using namespace qcurv;

namespace {
const std::vector<std::string> kNoConstants;
const std::vector<std::string> kLambda = {"l"};
}  // namespace

TEST_CASE("basic parses") {
  Expr e = parse_expr("q*x", kNoConstants);
  CHECK(e.kind == Expr::Kind::kMul);
  CHECK(e.children[0].symbol == "q");
  CHECK(e.children[1].symbol == "x");

  Expr f = parse_expr("(x^2+1)/(x-q)^2", kNoConstants);
  CHECK(f.kind == Expr::Kind::kDiv);
  CHECK(f.children[0].kind == Expr::Kind::kAdd);
  CHECK(f.children[1].kind == Expr::Kind::kPow);
  CHECK(f.children[1].exponent == 2);
}

TEST_CASE("implicit multiplication is rejected") {
  CHECK_THROWS_AS(parse_expr("x y", kNoConstants), SyntaxError);
  CHECK_THROWS_AS(parse_expr("2x", kNoConstants), SyntaxError);
  CHECK_THROWS_AS(parse_expr("(x+1)(x-1)", kNoConstants), SyntaxError);
}

TEST_CASE("precedence and associativity") {
  // ^ binds tighter than unary minus: -x^2 == -(x^2).
  CHECK(eval_entry("-x^2", kNoConstants) == -(xk_var().pow(2)));
  // Left associativity of - and /.
  CHECK(eval_entry("1 - 2 - 3", kNoConstants) == xk_int(-4));
  CHECK(eval_entry("8/4/2", kNoConstants) == xk_int(1));
  CHECK(eval_entry("2*x + 3*x", kNoConstants) == xk_int(5) * xk_var());
  // Right-associative integer exponent towers.
  CHECK(eval_entry("x^2^3", kNoConstants) == xk_var().pow(8));
  // Negative exponents.
  CHECK(eval_entry("x^-1", kNoConstants) == xk_int(1) / xk_var());
  CHECK(eval_entry("q*x^-2", kNoConstants) == xk_q() / xk_var().pow(2));
}

TEST_CASE("unknown symbols carry name and position") {
  CHECK_THROWS_AS(parse_expr("x + foo", kNoConstants), UnknownSymbolError);
  try {
    parse_expr("x + foo", kNoConstants);
  } catch (const UnknownSymbolError& e) {
    CHECK(e.name() == "foo");
    CHECK(e.position() == 4);
  }
  // Declared constants are accepted.
  CHECK_NOTHROW(parse_expr("l*x + 1", kLambda));
  CHECK_THROWS_AS(parse_expr("l*x + 1", kNoConstants), UnknownSymbolError);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_expr("x + ", kNoConstants);
    CHECK(false);
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_expr("", kNoConstants), SyntaxError);
  CHECK_THROWS_AS(parse_expr("(x", kNoConstants), SyntaxError);
  CHECK_THROWS_AS(parse_expr("x^y", kNoConstants), SyntaxError);
  CHECK_THROWS_AS(parse_expr("x^(2)", kNoConstants), SyntaxError);
  CHECK_THROWS_AS(parse_expr("x^100000", kNoConstants), SyntaxError);
  CHECK_THROWS_AS(parse_expr("x @ 1", kNoConstants), SyntaxError);
}

TEST_CASE("evaluation basics") {
  CHECK(eval_entry("q*x", kNoConstants) == xk_q() * xk_var());
  CHECK(eval_entry("(x-1)/(x-1)", kNoConstants) == xk_int(1));
  CHECK_THROWS_AS(eval_entry("1/(x-x)", kNoConstants), DivisionByZeroError);
  CHECK(eval_entry("1/2 * x", kNoConstants) ==
        XK::constant(qfunc_constant(ConstField::from_rational(Rational(1, 2)))) *
            xk_var());
  // Whitespace is insignificant.
  CHECK(eval_entry("  q *x ", kNoConstants) == eval_entry("q*x", kNoConstants));
  // Big integer literals are exact.
  CHECK(eval_entry("123456789012345678901234567890", kNoConstants) ==
        XK::constant(qfunc_constant(ConstField::from_rational(
            Rational::from_string("123456789012345678901234567890")))));
}

TEST_CASE("round trip: print then reparse") {
  std::vector<std::string> sources = {
      "q*x",
      "(x^2+1)/(x-q)^2",
      "1/2*x - 3/4",
      "l*x^3 + l^2",
      "(q^2 - q + 1)*x/(x^2 - 2)",
      "x^-3 + q^-1",
      "-(x - 1)/(x + 1)",
  };
  for (const std::string& src : sources) {
    CAPTURE(src);
    XK v = eval_entry(src, kLambda);
    XK reparsed = eval_entry(v.str(), kLambda);
    CHECK(v == reparsed);
  }
}

TEST_CASE("fuzz: random token soup never crashes") {
  std::mt19937_64 rng(20260809);
  const std::string alphabet = "xq01 +-*/^()l";
  int parsed = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::string s;
    std::size_t len = rng() % 12;
    for (std::size_t i = 0; i < len; ++i)
      s += alphabet[rng() % alphabet.size()];
    try {
      XK v = eval_entry(s, kLambda);
      ++parsed;
      // Whatever parses must round-trip.
      CHECK(eval_entry(v.str(), kLambda) == v);
    } catch (const Error&) {
      // Reported error, not a crash: this is the contract.
    }
  }
  CHECK(parsed > 0);  // soup occasionally contains a valid expression
}
