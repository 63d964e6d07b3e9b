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

#ifndef BERKRAM_FIELD_HPP_
#define BERKRAM_FIELD_HPP_

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "berkram/residue.hpp"

namespace berkram {

enum class FieldMode { kEquicharZero, kEquicharP, kMixed };

const char* field_mode_name(FieldMode m);

// Rational helpers.
Rat rat_floor(const Rat& r);
Rat rat_ceil(const Rat& r);
// p-adic order of a nonzero rational.
long ord_p(const Rat& r, long p);
std::string rat_str(const Rat& r);

// Append-only record of notable engine events (ramification-index raises,
// scalar extensions). Shared by all computations in the process.
class RunLog {
 public:
  static void record(const std::string& event);
  static std::vector<std::string> snapshot();
  static void clear();
};

class GroundField;
using FieldPtr = std::shared_ptr<const GroundField>;

// The computable valued field k. Puiseux modes hold series in t with exact
// rational exponents; Mixed holds Q(pi), pi^N = p, with ord(p) = 1.
class GroundField {
 public:
  static FieldPtr equichar_zero(int precision_units = 64);
  static FieldPtr equichar_p(int p, int precision_units = 64,
                             ResFieldPtr tower = nullptr);
  static FieldPtr mixed(int p, int ram_index, int precision_units = 64);

  FieldMode mode() const { return mode_; }
  int p() const { return p_; }
  int ram_index() const { return N_; }
  int precision_units() const { return units_; }
  // Relative precision used when a computation has to truncate.
  Rat precision_cap() const { return Rat(units_, base_N_); }
  // Residue field k~ (Q, F_q, or F_p for Mixed).
  const ResFieldPtr& residue_field() const { return res_; }
  // Field holding term coefficients (Q for Mixed, k~ otherwise).
  const ResFieldPtr& coeff_field() const { return coeff_; }
  std::string uniformizer_name() const;
  std::string describe() const;

  bool in_value_group(const Rat& s) const;
  // Same field with ramification index N' (a multiple of N). Puiseux modes
  // re-index for free; Mixed builds the scalar extension Q(p^(1/N')).
  FieldPtr with_ram_index(int N) const;
  // Smallest index N' (multiple of N) with s in (1/N') Z.
  int ram_index_for(const Rat& s) const;
  FieldPtr extend_coefficients(const RPoly& minpoly,
                               const std::string& gen = "g") const;
  // True if elements of `o` can be used directly in this field.
  bool accepts(const GroundField& o) const;

 private:
  GroundField() = default;
  FieldMode mode_ = FieldMode::kEquicharZero;
  int p_ = 0;
  int N_ = 1;
  int base_N_ = 1;
  int units_ = 64;
  ResFieldPtr res_;
  ResFieldPtr coeff_;
};

// ord value, possibly +infinity.
struct Valuation {
  bool infinite = false;
  Rat value;
  static Valuation inf() { return Valuation{true, 0}; }
  static Valuation of(const Rat& v) { return Valuation{false, v}; }
  std::string to_string() const;
};

struct Term {
  Rat e;     // exponent (ord of the term)
  RElem c;   // coefficient: k~ element, or a p-unit rational in Mixed
};

class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(FieldPtr F);  // exact zero

  static FieldElement zero(const FieldPtr& F);
  static FieldElement one(const FieldPtr& F);
  static FieldElement from_int(const FieldPtr& F, long v);
  static FieldElement from_rat(const FieldPtr& F, const Rat& v);
  // c * uniformizer^e; c a coefficient-field element.
  static FieldElement monomial(const FieldPtr& F, const RElem& c, const Rat& e);
  // Element of ord e with leading coefficient 1 (t^e, or p^e in Mixed).
  static FieldElement uniformizer_pow(const FieldPtr& F, const Rat& e);
  // A lift of a residue-field element to the valuation ring.
  static FieldElement lift(const FieldPtr& F, const RElem& r);
  // Inexact zero: O(uniformizer^cap).
  static FieldElement big_oh(const FieldPtr& F, const Rat& cap);
  static FieldElement from_terms(const FieldPtr& F, std::vector<Term> terms,
                                 std::optional<Rat> precision);

  const FieldPtr& field() const { return F_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_exact() const { return !prec_.has_value(); }
  const std::optional<Rat>& precision() const { return prec_; }
  bool is_certified_zero() const { return terms_.empty() && is_exact(); }
  bool is_certified_nonzero() const { return !terms_.empty(); }

  Valuation valuation() const;  // throws ZeroWithinPrecision
  Rat ord() const;               // finite ord; throws on zero
  // ord if known, else the precision cap (a lower bound for ord).
  Rat ord_lower_bound() const;
  RElem residue() const;
  RElem leading_coefficient() const;  // as a residue-field element

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inv() const;
  FieldElement pow(int k) const;
  FieldElement pth_root() const;  // EquicharP only

  // Drops terms with exponent >= cap and records the cap as precision.
  FieldElement truncate(const Rat& cap) const;
  // Drops terms with exponent >= cap and declares the result exact. Used
  // for disk centers, where only the class modulo the radius matters.
  FieldElement exact_part_below(const Rat& cap) const;
  FieldElement with_field(const FieldPtr& F) const;

  // Certified equality (difference is exact zero).
  bool equals(const FieldElement& o) const;
  std::string to_string() const;

 private:
  FieldPtr F_;
  std::vector<Term> terms_;
  std::optional<Rat> prec_;
};

// Picks the field to use for a binary operation on elements of a and b.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace berkram

#endif  // BERKRAM_FIELD_HPP_
