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

#ifndef BERKRAM_MULT_HPP_
#define BERKRAM_MULT_HPP_

#include <string>
#include <vector>

#include "berkram/berkline.hpp"

namespace berkram {

// phi conjugated so that x and its image both sit at the Gauss point:
// psi = (phi(alpha z + a) - c) / beta with ord alpha = s, ord beta = s'.
struct Conjugation {
  FieldPtr F;  // field after any ramification-index change
  BerkPoint x;
  ImageData image;
  FieldElement alpha, beta;
  Poly P, Q;        // f(alpha z + a), g(alpha z + a)
  RationalMap psi;  // normalized
  ReducedMap red;
};

// Mixed mode keeps N fixed and rejects s outside (1/N)Z unless
// `allow_extension`, in which case Q(p^(1/N')) is used.
Conjugation conjugate_to_gauss(const RationalMap& phi, const BerkPoint& x,
                               bool allow_extension = false);

// Local degree at a type II ball (degree of the reduced conjugate), at an
// exact classical point (order of phi - phi(a)), or at infinity.
int local_degree(const RationalMap& phi, const BerkPoint& x,
                 bool allow_extension = false);

// Root counting for f - b g near x: independent of the reduction path.
int local_degree_oracle(const RationalMap& phi, const BerkPoint& x, int trials = 3);

struct DirectionData {
  TangentDirection dir;
  int m_dir = 1;
  int s_dir = 0;
  TangentDirection image_dir;
};

struct LocalData {
  BerkPoint at;
  int d = 0;
  int m = 0;
  // Directions with m_dir != generic_m_dir or s_dir > 0; every other
  // direction has (generic_m_dir, 0).
  std::vector<DirectionData> directions;
  int generic_m_dir = 1;
  bool insep = false;
  bool balance_ok = false;
  bool directional_sum_ok = false;
  std::string note;
};

LocalData directional_data(const RationalMap& phi, const BerkPoint& x,
                           bool allow_extension = false);
int surplus(const RationalMap& phi, const BerkPoint& x, const TangentDirection& v);
// Multiplicity of v in the reduced Wronskian of phi o sigma_1: the total
// critical weight in the open disk of direction v (one conjugate).
int critical_weight_in_direction(const RationalMap& phi, const BerkPoint& x,
                                 const TangentDirection& v);

bool has_inseparable_reduction(const RationalMap& phi, const BerkPoint& x);
// Common value of the local degree on both flanks of a type III ball.
int local_degree_typeIII(const RationalMap& phi, const BerkPoint& x, int budget = 8);

// Residues of the coefficients of T on the edge of slope s of its Newton
// polygon; roots deeper than s show up as a power of c.
RPoly edge_polynomial(const Poly& T, const Rat& s);

// Minimal polynomial over k~ of the image of a root of P under psi~ =
// F0/G0 (forms of degree m); `infinite` on return when it maps to infinity.
RPoly image_closed_point(const ResidueField& K, const RPoly& F0, const RPoly& G0,
                         int m, const RPoly& P, bool* infinite);

}  // namespace berkram

#endif  // BERKRAM_MULT_HPP_
