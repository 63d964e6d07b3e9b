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

// Seeded generators for property tests.

#ifndef BERKRAM_TESTS_GENERATORS_HPP_
#define BERKRAM_TESTS_GENERATORS_HPP_

#include <random>
#include <vector>

#include "berkram/berkline.hpp"
#include "berkram/ratmap.hpp"

namespace berkram::testing {

using Rng = std::mt19937_64;

inline Rat frac(long a, long b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Small integer times a uniformizer power with exponent in [lo, hi] (in
// units of 1/N); zero with probability about 1/4 when `allow_zero`.
inline FieldElement random_element(const FieldPtr& F, Rng& rng, int lo = 0, int hi = 2,
                                   bool allow_zero = true) {
  const int N = F->ram_index();
  for (;;) {
    if (allow_zero && uniform(rng, 0, 3) == 0) return FieldElement::zero(F);
    FieldElement x = FieldElement::zero(F);
    const int terms = uniform(rng, 1, 2);
    for (int k = 0; k < terms; ++k) {
      const long c = uniform(rng, -3, 3);
      const Rat e = frac(uniform(rng, lo * N, hi * N), N);
      x = x + FieldElement::from_int(F, c) * FieldElement::uniformizer_pow(F, e);
    }
    if (!x.is_certified_zero()) return x;
    if (allow_zero) return x;
  }
}

inline Poly random_poly(const FieldPtr& F, Rng& rng, int deg) {
  std::vector<FieldElement> c;
  for (int i = 0; i < deg; ++i) c.push_back(random_element(F, rng, 0, 2));
  c.push_back(random_element(F, rng, 0, 1, false));
  return Poly(F, c);
}

// Separable (when `separable`) rational map of degree exactly d with
// coprime numerator and denominator.
inline RationalMap random_map(const FieldPtr& F, Rng& rng, int d, bool separable = true) {
  for (;;) {
    const int dg = uniform(rng, 0, d);
    const int df = dg == d ? uniform(rng, 0, d) : d;
    Poly f = random_poly(F, rng, df);
    Poly g = random_poly(F, rng, dg);
    if (f.is_zero() || g.is_zero() || f.deg() != df || g.deg() != dg) continue;
    if (!exact::coprime(f, g)) continue;
    RationalMap phi(f, g);
    if (phi.degree() != d) continue;
    if (separable && !is_separable(phi)) continue;
    return phi;
  }
}

// Type II ball in the base value group, center with one or two terms.
inline BerkPoint random_ball(const FieldPtr& F, Rng& rng, int s_lo = -2, int s_hi = 2) {
  const int N = F->ram_index();
  const Rat s = frac(uniform(rng, s_lo * N, s_hi * N), N);
  return BerkPoint::ball(random_element(F, rng, -1, 2), s);
}

// z -> alpha z + beta, or z -> 1/z.
inline Mobius random_mobius(const FieldPtr& F, Rng& rng) {
  if (uniform(rng, 0, 4) == 0) return Mobius::inversion(F);
  return Mobius::affine(random_element(F, rng, -1, 1, false), random_element(F, rng, -1, 2));
}

}  // namespace berkram::testing

#endif  // BERKRAM_TESTS_GENERATORS_HPP_
