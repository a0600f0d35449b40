// Copyright 2026 The dirp Authors
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

namespace dirp {

/// Process exit codes used by the command-line tool.
enum class ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kPrecisionExhausted = 3,
  kUnresolved = 4,
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual ExitCode exit_code() const { return ExitCode::kInputError; }
};

#define DIRP_INPUT_ERROR(Name)                                  \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(what) {}     \
  };

DIRP_INPUT_ERROR(ParseError)
DIRP_INPUT_ERROR(InvalidArgument)
DIRP_INPUT_ERROR(DimensionMismatch)
DIRP_INPUT_ERROR(ZeroFunction)
DIRP_INPUT_ERROR(RationalRatio)
DIRP_INPUT_ERROR(UnsupportedLevel)
DIRP_INPUT_ERROR(NonpositiveSigma)
DIRP_INPUT_ERROR(UnderResolved)
DIRP_INPUT_ERROR(GridMismatch)
DIRP_INPUT_ERROR(ZeroDrift)

#undef DIRP_INPUT_ERROR

/// Raised when a quantity cannot be separated from zero within max_digits.
class PrecisionExhausted : public Error {
 public:
  explicit PrecisionExhausted(const std::string& what) : Error(what) {}
  ExitCode exit_code() const override { return ExitCode::kPrecisionExhausted; }
};

/// A family member whose evaluation would exceed the supported precision.
class PrecisionCapExceeded : public Error {
 public:
  explicit PrecisionCapExceeded(const std::string& what) : Error(what) {}
  ExitCode exit_code() const override { return ExitCode::kPrecisionExhausted; }
};

/// Continued fraction could not be certified to the depth an operation needs.
class DepthNotCertified : public Error {
 public:
  explicit DepthNotCertified(const std::string& what) : Error(what) {}
  ExitCode exit_code() const override { return ExitCode::kUnresolved; }
};

}  // namespace dirp
