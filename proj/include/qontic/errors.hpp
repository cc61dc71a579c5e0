// Copyright 2026 The Qontic Authors
//
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

namespace qontic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched qubit counts, zero-sized systems, or capacity violations.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Measurement of a Pauli element that is not Hermitian.
class InvalidObservableError : public Error {
 public:
  using Error::Error;
};

// Bad gate arguments: index out of range or repeated qubit.
class InvalidGateError : public Error {
 public:
  using Error::Error;
};

// Generator set unsuitable for state preparation.
class InvalidPreparationError : public Error {
 public:
  using Error::Error;
};

// Rejected text input. For circuit files line/column are 1-based; for bare
// Pauli strings line is 0 and column is the 0-based character index.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        message_(msg),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace qontic
