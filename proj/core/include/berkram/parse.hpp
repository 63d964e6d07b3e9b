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

#ifndef BERKRAM_PARSE_HPP_
#define BERKRAM_PARSE_HPP_

#include <string>

#include "berkram/berkline.hpp"
#include "berkram/ratmap.hpp"

namespace berkram {

// Element literals: sums and products of integers, rationals, t or p (with
// rational exponents), the tower generator g, and O(t^e) / O(p^e).
FieldElement parse_element(const FieldPtr& F, const std::string& text);
// `<poly>` or `(<poly>)/(<poly>)` in z; common factors are cancelled.
RationalMap parse_map(const FieldPtr& F, const std::string& text);
// `zeta(<element>; ord=<rational>)`, `pt(<element>)` or `inf`.
BerkPoint parse_point(const FieldPtr& F, const std::string& text);
Rat parse_rational(const std::string& text);

}  // namespace berkram

#endif  // BERKRAM_PARSE_HPP_
