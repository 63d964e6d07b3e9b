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

// Root counting by Newton polygons, kept independent of the reduction
// machinery so it can serve as a second route.

#ifndef BERKRAM_TESTS_ORACLES_HPP_
#define BERKRAM_TESTS_ORACLES_HPP_

#include <optional>

#include "berkram/berkline.hpp"
#include "berkram/ratmap.hpp"

namespace berkram::testing {

// Roots of h (with multiplicity) with ord(z - b) >= s, or > s when `open`.
// The count is the smallest (open) or largest (closed) index attaining
// min_i ord(h_i(b)) + i*s in the Taylor shift; a root at b itself only
// removes low coefficients, so it is counted the same way.
inline int count_roots(const Poly& h, const FieldElement& b, const Rat& s, bool open) {
  const Poly sh = h.taylor_shift(b);
  std::optional<Rat> best;
  int lo = -1, hi = -1;
  for (int i = 0; i <= sh.deg(); ++i) {
    const FieldElement& c = sh.coeffs()[i];
    if (!c.is_certified_nonzero()) continue;
    const Rat v = c.ord() + i * s;
    if (!best || v < *best) {
      best = v;
      lo = hi = i;
    } else if (v == *best) {
      hi = i;
    }
  }
  return open ? lo : hi;
}

// Zeros of phi - y (counted in P^1) in the open disk of the direction v
// at x; v must be k~-rational.
inline int count_preimages(const RationalMap& phi, const FieldElement& y, const TangentDirection& v) {
  const auto& x = v.at;
  const FieldPtr& F = phi.field();
  const Poly h = phi.f() - phi.g().scale(y);
  if (v.infinite) {
    const int inside_closed = count_roots(h, x.center(), x.s(), false);
    return phi.degree() - inside_closed;  // includes roots at infinity
  }
  const FieldElement b = x.center() + FieldElement::lift(F, v.value()) *
                                          FieldElement::uniformizer_pow(F, x.s());
  return count_roots(h, b, x.s(), true);
}

// Critical weight in the open disk of v, read off the Wronskian.
inline int critical_weight_by_roots(const RationalMap& phi, const TangentDirection& v) {
  const auto& x = v.at;
  const FieldPtr& F = phi.field();
  const Poly W = wronskian(phi);
  if (v.infinite) {
    return W.deg() - count_roots(W, x.center(), x.s(), false) + weight_at_infinity(phi);
  }
  const FieldElement b = x.center() + FieldElement::lift(F, v.value()) *
                                          FieldElement::uniformizer_pow(F, x.s());
  return count_roots(W, b, x.s(), true);
}

}  // namespace berkram::testing

#endif  // BERKRAM_TESTS_ORACLES_HPP_
