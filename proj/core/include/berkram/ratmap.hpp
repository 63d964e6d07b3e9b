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

#ifndef BERKRAM_RATMAP_HPP_
#define BERKRAM_RATMAP_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berkram/poly.hpp"

namespace berkram {

// phi = f/g with f, g coprime.
class RationalMap {
 public:
  RationalMap() = default;
  // Checks coprimality when both polynomials are exact.
  RationalMap(Poly f, Poly g, bool check_coprime = true);

  const Poly& f() const { return f_; }
  const Poly& g() const { return g_; }
  const FieldPtr& field() const { return f_.field(); }
  int degree() const { return d_; }
  bool normalized() const { return normalized_; }
  bool is_polynomial() const { return g_.deg() == 0; }

  // Both polynomials divided by the leading monomial of the first
  // coefficient of minimal ord, so that coefficient has residue 1.
  RationalMap normalize() const;
  RationalMap with_field(const FieldPtr& F) const;

  // nullopt for a pole.
  std::optional<FieldElement> eval(const FieldElement& x) const;
  std::string to_string() const;

 private:
  Poly f_, g_;
  int d_ = 0;
  bool normalized_ = false;
};

// Reduction of a normalized map. F~ and G~ are the reductions of the
// degree-d homogenizations, stored dehomogenized; H = H_aff * Y^h_inf.
struct ReducedMap {
  ResFieldPtr k;
  int d = 0;
  RPoly F, G;
  RPoly H_aff;
  int h_inf = 0;
  RPoly f0, g0;  // F~/H, G~/H, forms of degree degree_red
  int degree_red = 0;

  int h_degree() const { return H_aff.deg() + h_inf; }
};

ReducedMap reduce(const RationalMap& phi);

// f'g - fg' via the explicit coefficient formula
// W_j = sum_i (2i - j - 1) a_i b_{j+1-i}.
Poly wronskian(const RationalMap& phi);
Poly wronskian_by_derivatives(const RationalMap& phi);
bool is_separable(const RationalMap& phi);

// z -> (a z + b) / (c z + d)
struct Mobius {
  FieldElement a, b, c, d;

  static Mobius identity(const FieldPtr& F);
  static Mobius affine(const FieldElement& alpha, const FieldElement& beta);
  static Mobius inversion(const FieldPtr& F);
  FieldElement det() const;
  Mobius inverse() const;
  Mobius compose(const Mobius& inner) const;  // this o inner
  RationalMap as_map() const;
};

// sigma2 o phi o sigma1, renormalized.
RationalMap compose_mobius(const Mobius& sigma2, const RationalMap& phi,
                           const Mobius& sigma1);

// Homogeneous pair (F(X,Y), G(X,Y)) of degree d evaluated on
// (a X + b Y, c X + d Y), returned dehomogenized at Y = 1.
std::pair<Poly, Poly> compose_right(const RationalMap& phi, const Mobius& s);

// Weight of infinity as a critical point: the order at 0 of the Wronskian
// of phi(1/z) (chart swap), or 2d - 2 - deg W read off the homogeneous
// Wronskian. Both are exposed so they can be compared.
int weight_at_infinity(const RationalMap& phi);
int weight_at_infinity_homogeneous(const RationalMap& phi);

struct HurwitzSum {
  bool infinite = false;
  long value = 0;
};

// Sum of critical weights over P^1 including infinity, from the
// square-free decomposition of the Wronskian.
HurwitzSum hurwitz_sum(const RationalMap& phi);

}  // namespace berkram

#endif  // BERKRAM_RATMAP_HPP_
