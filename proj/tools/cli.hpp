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

#ifndef BERKRAM_TOOLS_CLI_HPP_
#define BERKRAM_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "berkram/field.hpp"

namespace berkram::cli {

enum class OutFormat { kJson, kDot, kText };

struct RunConfig {
  std::string field = "equichar0";
  int p = 0;
  int ram_index = 1;
  int precision = 64;
  int tower = 1;  // degree of the coefficient field over F_p (equicharp)
  int max_subdiv = 12;
  int rays = 3;
  int trials = 8;
  std::optional<std::string> epsilon;
  std::uint64_t seed = 1;
  OutFormat out = OutFormat::kJson;
};

// Checks budgets and field parameters; throws berkram::Error.
void validate(const RunConfig& cfg);
FieldPtr make_field(const RunConfig& cfg);

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUnresolved = 2;

// Entry point shared by the binary and the tests.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace berkram::cli

#endif  // BERKRAM_TOOLS_CLI_HPP_
