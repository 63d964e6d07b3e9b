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

#ifndef BERKRAM_RESIDUE_HPP_
#define BERKRAM_RESIDUE_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace berkram {

using Rat = mpq_class;
using Int = mpz_class;

// An element of a residue/coefficient field. Only one of the two slots is
// meaningful: `q` over the rationals, `c` (coordinates over F_p in the power
// basis of the field generator) over a finite field.
struct RElem {
  Rat q;
  std::vector<std::int64_t> c;
};

struct RPoly;

// The rationals, or a finite field F_{p^m} given as F_p[x]/(M).
class ResidueField : public std::enable_shared_from_this<ResidueField> {
 public:
  static std::shared_ptr<const ResidueField> rationals();
  static std::shared_ptr<const ResidueField> prime_field(int p);

  // Adjoins a root of `minpoly` (irreducible over this field). Only finite
  // fields can be extended; the rationals raise UnsupportedExtension unless
  // the polynomial is linear, in which case this field is returned.
  std::shared_ptr<const ResidueField> extend(const RPoly& minpoly,
                                             const std::string& gen = "g") const;

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  bool is_rational() const { return p_ == 0; }
  Int order() const;  // 0 for the rationals
  const std::string& gen_name() const { return gen_; }
  const std::vector<std::int64_t>& modulus() const { return mod_; }
  // Field this one was built from by `extend`, with the image of its
  // generator; null for prime fields.
  const std::shared_ptr<const ResidueField>& base() const { return base_; }
  RElem embed_from_base(const RElem& x) const;

  bool same_as(const ResidueField& o) const;
  std::string describe() const;

  RElem zero() const;
  RElem one() const;
  RElem from_int(long v) const;
  RElem from_int(const Int& v) const;
  // Reduces a p-integral rational in positive characteristic.
  RElem from_rat(const Rat& v) const;
  RElem gen() const;

  RElem add(const RElem& a, const RElem& b) const;
  RElem sub(const RElem& a, const RElem& b) const;
  RElem neg(const RElem& a) const;
  RElem mul(const RElem& a, const RElem& b) const;
  RElem inv(const RElem& a) const;
  RElem div(const RElem& a, const RElem& b) const;
  RElem pow(const RElem& a, const Int& e) const;
  RElem pth_root(const RElem& a) const;  // finite fields only
  bool is_zero(const RElem& a) const;
  bool is_one(const RElem& a) const;
  bool eq(const RElem& a, const RElem& b) const;
  // Total order used for canonical output (not a field order).
  int cmp(const RElem& a, const RElem& b) const;

  RElem random(std::mt19937_64& rng) const;
  // For finite fields: the element with base-p digits of `i` as
  // coordinates. Used to enumerate small fields.
  RElem from_index(std::uint64_t i) const;
  // Smallest nonnegative integer lift of an F_p element.
  long lift_int(const RElem& a) const;

  std::string to_string(const RElem& a) const;

 protected:
  ResidueField() = default;

 private:
  std::int64_t md(std::int64_t v) const;

  int p_ = 0;
  int m_ = 1;
  std::vector<std::int64_t> mod_;  // monic, degree m_, when m_ > 1
  std::string gen_ = "g";
  std::shared_ptr<const ResidueField> base_;
  RElem base_gen_image_;
};

using ResFieldPtr = std::shared_ptr<const ResidueField>;

// Dense univariate polynomial over a ResidueField, lowest degree first,
// no trailing zeros.
struct RPoly {
  std::vector<RElem> c;
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

namespace rp {

RPoly trim(const ResidueField& F, RPoly a);
RPoly constant(const ResidueField& F, const RElem& v);
RPoly monomial(const ResidueField& F, const RElem& v, int k);
RPoly x(const ResidueField& F);
RPoly linear(const ResidueField& F, const RElem& root);  // x - root
RPoly add(const ResidueField& F, const RPoly& a, const RPoly& b);
RPoly sub(const ResidueField& F, const RPoly& a, const RPoly& b);
RPoly neg(const ResidueField& F, const RPoly& a);
RPoly mul(const ResidueField& F, const RPoly& a, const RPoly& b);
RPoly scale(const ResidueField& F, const RPoly& a, const RElem& s);
RPoly shift(const RPoly& a, int k);  // multiply by x^k
std::pair<RPoly, RPoly> divmod(const ResidueField& F, const RPoly& a,
                               const RPoly& b);
RPoly rem(const ResidueField& F, const RPoly& a, const RPoly& b);
RPoly quo(const ResidueField& F, const RPoly& a, const RPoly& b);
RPoly monic(const ResidueField& F, const RPoly& a);
RPoly gcd(const ResidueField& F, const RPoly& a, const RPoly& b);
// Returns g = gcd and s, t with s*a + t*b = g (g monic).
RPoly xgcd(const ResidueField& F, const RPoly& a, const RPoly& b, RPoly* s,
           RPoly* t);
RPoly deriv(const ResidueField& F, const RPoly& a);
RElem eval(const ResidueField& F, const RPoly& a, const RElem& v);
RPoly compose(const ResidueField& F, const RPoly& a, const RPoly& b);
RPoly powmod(const ResidueField& F, const RPoly& a, const Int& e,
             const RPoly& m);
RPoly pow(const ResidueField& F, const RPoly& a, int e);
bool eq(const ResidueField& F, const RPoly& a, const RPoly& b);
bool divides(const ResidueField& F, const RPoly& d, const RPoly& a);
// Largest k with d^k | a (a nonzero, deg d >= 1).
int multiplicity(const ResidueField& F, const RPoly& a, const RPoly& d);
// Square-free decomposition: a = lc * prod f_i^i, f_i monic square-free.
std::vector<std::pair<RPoly, int>> squarefree(const ResidueField& F,
                                              const RPoly& a);
// Complete factorization into monic irreducibles with multiplicities,
// sorted canonically (by degree, then coefficients).
std::vector<std::pair<RPoly, int>> factor(const ResidueField& F,
                                          const RPoly& a);
bool is_irreducible(const ResidueField& F, const RPoly& a);
// Roots lying in F, with multiplicity.
std::vector<std::pair<RElem, int>> roots(const ResidueField& F,
                                         const RPoly& a);
int cmp(const ResidueField& F, const RPoly& a, const RPoly& b);
std::string to_string(const ResidueField& F, const RPoly& a,
                      const std::string& var = "x");

}  // namespace rp

// Factorization of a square-free primitive integer polynomial (lowest
// degree first) into irreducible primitive factors over Z.
std::vector<std::vector<Int>> factor_squarefree_integer(
    const std::vector<Int>& f);

}  // namespace berkram

#endif  // BERKRAM_RESIDUE_HPP_
