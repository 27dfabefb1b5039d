// Copyright 2026 The penrose-quantale Authors
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

#ifndef PENROSE_ERROR_HPP
#define PENROSE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace penrose {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible sizes (relations, sequences, representations).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A generator at or above the truncation level of a representation.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Index or parameter outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The representation does not validate the theory it is used against.
class NotAModelError : public Error {
 public:
  using Error::Error;
};

/// A block of a sigma specification does not cover its whole sequence class.
class NotSaturatedError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree disagreed; indicates a bug, not bad input.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Point lies on an edge or vertex of the fragment (within tolerance).
class BoundaryError : public Error {
 public:
  using Error::Error;
};

class OutOfFragmentError : public Error {
 public:
  using Error::Error;
};

/// Malformed representation, sigma or theory file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace penrose

#endif  // PENROSE_ERROR_HPP
