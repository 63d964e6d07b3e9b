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

#ifndef BERKRAM_POLY_HPP_
#define BERKRAM_POLY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "berkram/field.hpp"

namespace berkram {

// Dense polynomial in z over a GroundField, lowest degree first. Trailing
// coefficients that are certified zero are dropped.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr F);
  Poly(FieldPtr F, std::vector<FieldElement> c);

  static Poly constant(const FieldElement& c);
  static Poly monomial(const FieldElement& c, int k);
  static Poly z(const FieldPtr& F);

  const FieldPtr& field() const { return F_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_exact() const;
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(int i) const;
  const FieldElement& lc() const { return c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scale(const FieldElement& s) const;
  Poly shift(int k) const;  // times z^k
  Poly pow(int k) const;

  Poly deriv() const;
  FieldElement eval(const FieldElement& x) const;
  // f(z + a)
  Poly taylor_shift(const FieldElement& a) const;
  // f(alpha*z + a)
  Poly compose_affine(const FieldElement& alpha, const FieldElement& a) const;
  // z^d f(1/z)
  Poly reverse(int d) const;
  Poly with_field(const FieldPtr& F) const;
  Poly truncate(const Rat& cap) const;

  bool equals(const Poly& o) const;
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  FieldPtr F_;
  std::vector<FieldElement> c_;
};

// min_i ord(c_i) + i*s over nonzero coefficients, i.e. ord of the sup-norm
// on the disk {ord z >= s}. The polynomial must be certified nonzero.
Rat gauss_ord(const Poly& f, const Rat& s);

// Exact algebra over K. Inputs must be exact; the results are exact and
// defined up to a unit of K.
namespace exact {

Poly gcd(const Poly& a, const Poly& b);
// a / b, assuming b divides a.
Poly div(const Poly& a, const Poly& b);
bool coprime(const Poly& a, const Poly& b);
// a = unit * prod s_i^{w_i} with s_i square-free and pairwise coprime.
std::vector<std::pair<Poly, int>> squarefree(const Poly& a);

}  // namespace exact

// Residues of the coefficients (all of ord >= 0).
RPoly reduce_poly(const Poly& f);

}  // namespace berkram

#endif  // BERKRAM_POLY_HPP_
