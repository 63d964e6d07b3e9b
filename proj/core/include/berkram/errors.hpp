// Copyright 2026 The berkram Authors
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

#ifndef BERKRAM_ERRORS_HPP_
#define BERKRAM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace berkram {

enum class ErrorKind {
  kZeroWithinPrecision,
  kNegativeValuation,
  kUnsupportedExtension,
  kTypeIIIUnsupported,
  kOracleInconclusive,
  kNoStabilization,
  kPrecisionExhausted,
  kResidueFieldTooSmall,
  kSyntaxError,
  kSemanticError,
  kInvalidArgument,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors carry a 1-based position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : Error(ErrorKind::kSyntaxError, what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace berkram

#endif  // BERKRAM_ERRORS_HPP_
