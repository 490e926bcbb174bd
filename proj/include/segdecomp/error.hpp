// Copyright 2026 The segdecomp Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace segdecomp {

enum class ErrorCode {
  kNonPrimeCharacteristic,
  kUnsupportedSize,
  kDivisionByZero,
  kZeroVector,
  kEqualPoints,
  kNotComplementary,
  kNotOnVariety,
  kRadicalNotSubspace,
  kNotSemilinear,
  kInconsistentAutomorphisms,
  kRowNotSemilinear,
  kNoUniquePreimage,
  kHypothesisFailure,
  kPreconditionViolated,
  kParseError,
  kShapeMismatch,
  kInvalidArgument,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// C API maps them onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse errors remember the 1-based input line they refer to (0 if none).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::kParseError,
              line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace segdecomp
