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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcurv {

/// Base class for every error reported by the library.  User input is
/// untrusted, so anything a malformed input can trigger derives from this
/// rather than aborting.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by a value that normalizes to zero.
class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("division by zero") {}
  explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// Reduction modulo a cyclotomic polynomial hit a denominator that vanishes
/// at the place.
class BadPlaceError : public Error {
 public:
  BadPlaceError(unsigned kappa, const std::string& detail)
      : Error("bad place kappa=" + std::to_string(kappa) + ": " + detail),
        kappa_(kappa) {}
  unsigned kappa() const { return kappa_; }

 private:
  unsigned kappa_;
};

/// A matrix that was required to be invertible is singular.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError() : Error("matrix is singular") {}
  explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

/// A gauge transformation with det P = 0.
class SingularGaugeError : public Error {
 public:
  SingularGaugeError() : Error("gauge matrix is singular") {}
};

/// Parse error with a byte offset into the source string.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at offset " + std::to_string(position) + ": " +
              message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A symbol that is neither x, q nor a declared constant.
class UnknownSymbolError : public SyntaxError {
 public:
  UnknownSymbolError(std::size_t position, const std::string& name)
      : SyntaxError(position, "unknown symbol '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Classification was asked for but every place in the range was bad.
class NoGoodPlaceError : public Error {
 public:
  NoGoodPlaceError() : Error("no good place in the requested range") {}
};

/// Malformed system file or invalid command input; carries a
/// human-readable location (file, entry coordinates, ...).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace qcurv
