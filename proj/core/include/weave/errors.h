// Copyright 2026 The weave Authors
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

#ifndef WEAVE_ERRORS_H
#define WEAVE_ERRORS_H

#include <stdexcept>
#include <string>

namespace weave {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: bad indices, mismatched dimensions, odd N where even is required.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// An object failed its validity invariants (non-Hermitian matrix, incomplete Kraus set, ...).
class ValidationError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Input text (state files, CLI vocabulary) could not be parsed.
class ParseError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// A configured size limit would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver failure or other floating-point breakdown.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must hold as a theorem (monotonicity, dual-form agreement) was violated
/// beyond floating tolerance. Signals a bug rather than bad input.
class ConsistencyError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace weave

#endif  // WEAVE_ERRORS_H
