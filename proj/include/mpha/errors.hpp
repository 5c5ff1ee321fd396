// Copyright 2026 The mpha Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace mpha {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A model violates one of its structural invariants.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Expression is outside the max-min-plus fragment.
class NotMaxMinPlusError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in model or expression text, with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The switching mechanism returned an empty successor-mode set.
class NoSuccessorMode : public Error {
 public:
  explicit NoSuccessorMode(std::size_t k)
      : Error("no successor mode at event " + std::to_string(k)), k_(k) {}

  std::size_t event() const noexcept { return k_; }

 private:
  std::size_t k_;
};

}  // namespace mpha
