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

#include "qcurv/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace qcurv {

namespace {

struct Token {
  enum class Kind { kInt, kIdent, kOp, kEnd };
  Kind kind;
  std::size_t pos;
  std::string text;  // literal digits, identifier, or one of + - * / ^ ( )
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
      ++i_;
    if (i_ >= src_.size()) return {Token::Kind::kEnd, src_.size(), ""};
    std::size_t start = i_;
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[i_])))
        ++i_;
      return {Token::Kind::kInt, start,
              std::string(src_.substr(start, i_ - start))};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
              src_[i_] == '_'))
        ++i_;
      return {Token::Kind::kIdent, start,
              std::string(src_.substr(start, i_ - start))};
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      ++i_;
      return {Token::Kind::kOp, start, std::string(1, c)};
    }
    throw SyntaxError(start, std::string("unexpected character '") + c + "'");
  }

 private:
  std::string_view src_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& constants)
      : lexer_(src), constants_(constants) {
    advance();
  }

  Expr parse() {
    Expr e = parse_sum();
    if (tok_.kind != Token::Kind::kEnd)
      throw SyntaxError(tok_.pos, "unexpected '" + tok_.text + "'");
    return e;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  bool at_op(const char* s) const {
    return tok_.kind == Token::Kind::kOp && tok_.text == s;
  }

  Expr parse_sum() {
    Expr e = parse_term();
    while (at_op("+") || at_op("-")) {
      Expr node;
      node.kind = tok_.text == "+" ? Expr::Kind::kAdd : Expr::Kind::kSub;
      node.pos = tok_.pos;
      advance();
      node.children.push_back(std::move(e));
      node.children.push_back(parse_term());
      e = std::move(node);
    }
    return e;
  }

  Expr parse_term() {
    Expr e = parse_unary();
    while (at_op("*") || at_op("/")) {
      Expr node;
      node.kind = tok_.text == "*" ? Expr::Kind::kMul : Expr::Kind::kDiv;
      node.pos = tok_.pos;
      advance();
      node.children.push_back(std::move(e));
      node.children.push_back(parse_unary());
      e = std::move(node);
    }
    return e;
  }

  Expr parse_unary() {
    if (at_op("-")) {
      Expr node;
      node.kind = Expr::Kind::kNeg;
      node.pos = tok_.pos;
      advance();
      node.children.push_back(parse_unary());
      return node;
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (!at_op("^")) return base;
    Expr node;
    node.kind = Expr::Kind::kPow;
    node.pos = tok_.pos;
    advance();
    node.exponent = parse_exponent();
    node.children.push_back(std::move(base));
    return node;
  }

  // Exponents are (possibly negated) integer literals; literal towers like
  // 2^3^2 fold right-associatively.
  long parse_exponent() {
    bool neg = false;
    if (at_op("-")) {
      neg = true;
      advance();
    }
    if (tok_.kind != Token::Kind::kInt)
      throw SyntaxError(tok_.pos, "expected an integer exponent");
    std::size_t pos = tok_.pos;
    errno = 0;
    char* end = nullptr;
    long value = std::strtol(tok_.text.c_str(), &end, 10);
    if (errno != 0 || *end != '\0' || value > kMaxExponent)
      throw SyntaxError(pos, "exponent out of range");
    advance();
    if (at_op("^")) {
      advance();
      long rest = parse_exponent();
      if (rest < 0) throw SyntaxError(pos, "exponent tower with negative step");
      long acc = 1;
      for (long i = 0; i < rest; ++i) {
        acc *= value;
        if (std::labs(acc) > kMaxExponent)
          throw SyntaxError(pos, "exponent out of range");
      }
      value = acc;
    }
    return neg ? -value : value;
  }

  Expr parse_atom() {
    if (tok_.kind == Token::Kind::kInt) {
      Expr node;
      node.kind = Expr::Kind::kInt;
      node.pos = tok_.pos;
      node.literal = Rational::from_string(tok_.text);
      advance();
      return node;
    }
    if (tok_.kind == Token::Kind::kIdent) {
      if (tok_.text != "x" && tok_.text != "q" &&
          std::find(constants_.begin(), constants_.end(), tok_.text) ==
              constants_.end())
        throw UnknownSymbolError(tok_.pos, tok_.text);
      Expr node;
      node.kind = Expr::Kind::kSymbol;
      node.pos = tok_.pos;
      node.symbol = tok_.text;
      advance();
      return node;
    }
    if (at_op("(")) {
      advance();
      Expr e = parse_sum();
      if (!at_op(")")) throw SyntaxError(tok_.pos, "expected ')'");
      advance();
      return e;
    }
    throw SyntaxError(tok_.pos, tok_.kind == Token::Kind::kEnd
                                    ? "unexpected end of input"
                                    : "unexpected '" + tok_.text + "'");
  }

  Lexer lexer_;
  Token tok_;
  const std::vector<std::string>& constants_;
};

}  // namespace

Expr parse_expr(std::string_view source,
                const std::vector<std::string>& declared_constants) {
  return Parser(source, declared_constants).parse();
}

XK eval_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kInt:
      return XK::constant(QFunc::constant(ConstField::from_rational(e.literal)));
    case Expr::Kind::kSymbol:
      if (e.symbol == "x") return xk_var();
      if (e.symbol == "q") return xk_q();
      return XK::constant(QFunc::constant(ConstField::variable(e.symbol)));
    case Expr::Kind::kNeg:
      return -eval_expr(e.children[0]);
    case Expr::Kind::kAdd:
      return eval_expr(e.children[0]) + eval_expr(e.children[1]);
    case Expr::Kind::kSub:
      return eval_expr(e.children[0]) - eval_expr(e.children[1]);
    case Expr::Kind::kMul:
      return eval_expr(e.children[0]) * eval_expr(e.children[1]);
    case Expr::Kind::kDiv:
      return eval_expr(e.children[0]) / eval_expr(e.children[1]);
    case Expr::Kind::kPow:
      return eval_expr(e.children[0]).pow(e.exponent);
  }
  throw Error("corrupt expression tree");
}

XK eval_entry(std::string_view source,
              const std::vector<std::string>& declared_constants) {
  return eval_expr(parse_expr(source, declared_constants));
}

}  // namespace qcurv
