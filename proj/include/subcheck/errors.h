// Copyright 2026 The Subcheck Authors
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

#ifndef SUBCHECK_ERRORS_H_
#define SUBCHECK_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subcheck {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed preference-list text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed input that does not describe a weak order over acceptable sets.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The exhaustive oracle refuses universes above its cap.
class UniverseTooLarge : public Error {
 public:
  using Error::Error;
};

// A generator request that cannot be satisfied.
class InfeasibleSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace subcheck

#endif  // SUBCHECK_ERRORS_H_
