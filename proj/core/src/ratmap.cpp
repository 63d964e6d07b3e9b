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

#include "berkram/ratmap.hpp"

#include <algorithm>

#include "berkram/errors.hpp"

namespace berkram {

RationalMap::RationalMap(Poly f, Poly g, bool check_coprime) {
  if (g.is_zero()) fail(ErrorKind::kInvalidArgument, "denominator is zero");
  FieldPtr F = common_field(f.field(), g.field());
  f_ = f.field().get() == F.get() ? std::move(f) : f.with_field(F);
  g_ = g.field().get() == F.get() ? std::move(g) : g.with_field(F);
  if (f_.field().get() != F.get()) f_ = Poly(F, f_.coeffs());
  d_ = std::max(f_.deg(), g_.deg());
  if (check_coprime && f_.is_exact() && g_.is_exact() && !f_.is_zero() &&
      !exact::coprime(f_, g_)) {
    fail(ErrorKind::kInvalidArgument, "numerator and denominator have a common factor");
  }
}

RationalMap RationalMap::normalize() const {
  const FieldElement* best = nullptr;
  Rat lo;
  auto scan = [&](const Poly& p) {
    for (const auto& c : p.coeffs()) {
      if (!c.is_certified_nonzero()) continue;
      if (best == nullptr || c.ord() < lo) {
        best = &c;
        lo = c.ord();
      }
    }
  };
  scan(f_);
  scan(g_);
  if (best == nullptr) fail(ErrorKind::kZeroWithinPrecision, "no certified coefficient");
  auto check = [&](const Poly& p) {
    for (const auto& c : p.coeffs()) {
      if (!c.is_certified_nonzero() && !c.is_certified_zero() && c.ord_lower_bound() < lo) {
        fail(ErrorKind::kZeroWithinPrecision, "minimal coefficient ord undecidable");
      }
    }
  };
  check(f_);
  check(g_);
  FieldElement m = FieldElement::from_terms(field(), {best->terms().front()}, std::nullopt);
  FieldElement mi = m.inv();
  RationalMap r;
  r.f_ = f_.scale(mi);
  r.g_ = g_.scale(mi);
  r.d_ = d_;
  r.normalized_ = true;
  return r;
}

RationalMap RationalMap::with_field(const FieldPtr& F) const {
  RationalMap r = *this;
  r.f_ = f_.with_field(F);
  r.g_ = g_.with_field(F);
  return r;
}

std::optional<FieldElement> RationalMap::eval(const FieldElement& x) const {
  FieldElement den = g_.eval(x);
  if (den.is_certified_zero()) return std::nullopt;
  return f_.eval(x) / den;
}

std::string RationalMap::to_string() const {
  std::string num = f_.to_string();
  if (g_.deg() == 0 && g_.coeffs()[0].is_exact() &&
      (g_.coeffs()[0] - FieldElement::one(field())).is_certified_zero()) {
    return num;
  }
  return "(" + num + ")/(" + g_.to_string() + ")";
}

ReducedMap reduce(const RationalMap& phi_in) {
  RationalMap phi = phi_in.normalized() ? phi_in : phi_in.normalize();
  ReducedMap r;
  r.k = phi.field()->residue_field();
  const auto& K = *r.k;
  r.d = phi.degree();
  r.F = reduce_poly(phi.f());
  r.G = reduce_poly(phi.g());
  if (r.F.is_zero() && r.G.is_zero()) {
    fail(ErrorKind::kInvalidArgument, "reduction of a map that is not normalized");
  }
  r.H_aff = rp::gcd(K, r.F, r.G);
  const int big = r.d + 1;
  int ef = r.F.is_zero() ? big : r.d - r.F.deg();
  int eg = r.G.is_zero() ? big : r.d - r.G.deg();
  r.h_inf = std::min(ef, eg);
  r.f0 = rp::quo(K, r.F, r.H_aff);
  r.g0 = rp::quo(K, r.G, r.H_aff);
  r.degree_red = r.d - r.H_aff.deg() - r.h_inf;
  return r;
}

Poly wronskian(const RationalMap& phi) {
  const Poly& f = phi.f();
  const Poly& g = phi.g();
  FieldPtr F = phi.field();
  const int d = phi.degree();
  if (d < 1) return Poly(F);
  std::vector<FieldElement> w(2 * d - 1, FieldElement::zero(F));
  for (int j = 0; j <= 2 * d - 2; ++j) {
    FieldElement acc = FieldElement::zero(F);
    for (int i = 0; i <= j + 1; ++i) {
      const int k = j + 1 - i;
      if (i > f.deg() || k > g.deg()) continue;
      const int coef = 2 * i - j - 1;
      if (coef == 0) continue;
      if (f.coeffs()[i].is_certified_zero() || g.coeffs()[k].is_certified_zero()) continue;
      acc = acc + FieldElement::from_int(F, coef) * f.coeffs()[i] * g.coeffs()[k];
    }
    w[j] = acc;
  }
  return Poly(F, std::move(w));
}

Poly wronskian_by_derivatives(const RationalMap& phi) {
  return phi.f().deriv() * phi.g() - phi.f() * phi.g().deriv();
}

bool is_separable(const RationalMap& phi) {
  Poly w = wronskian(phi);
  if (w.is_zero()) return false;
  for (const auto& c : w.coeffs()) {
    if (c.is_certified_nonzero()) return true;
  }
  fail(ErrorKind::kZeroWithinPrecision, "Wronskian not certified nonzero");
}

Mobius Mobius::identity(const FieldPtr& F) {
  return {FieldElement::one(F), FieldElement::zero(F), FieldElement::zero(F),
          FieldElement::one(F)};
}

Mobius Mobius::affine(const FieldElement& alpha, const FieldElement& beta) {
  FieldPtr F = common_field(alpha.field(), beta.field());
  return {alpha.with_field(F), beta.with_field(F), FieldElement::zero(F), FieldElement::one(F)};
}

Mobius Mobius::inversion(const FieldPtr& F) {
  return {FieldElement::zero(F), FieldElement::one(F), FieldElement::one(F),
          FieldElement::zero(F)};
}

FieldElement Mobius::det() const { return a * d - b * c; }

Mobius Mobius::inverse() const { return {d, -b, -c, a}; }

Mobius Mobius::compose(const Mobius& in) const {
  return {a * in.a + b * in.c, a * in.b + b * in.d, c * in.a + d * in.c, c * in.b + d * in.d};
}

RationalMap Mobius::as_map() const {
  FieldPtr F = common_field(common_field(a.field(), b.field()), common_field(c.field(), d.field()));
  return RationalMap(Poly(F, {b, a}), Poly(F, {d, c}), false);
}

std::pair<Poly, Poly> compose_right(const RationalMap& phi, const Mobius& s) {
  FieldPtr F = common_field(phi.field(), s.det().field());
  const int d = phi.degree();
  Poly X(F, {s.b, s.a});
  Poly Y(F, {s.d, s.c});
  std::vector<Poly> xp{Poly::constant(FieldElement::one(F))}, yp{xp[0]};
  for (int i = 1; i <= d; ++i) {
    xp.push_back(xp.back() * X);
    yp.push_back(yp.back() * Y);
  }
  Poly P(F), Q(F);
  for (int i = 0; i <= d; ++i) {
    Poly m = xp[i] * yp[d - i];
    FieldElement fi = phi.f().coeff(i), gi = phi.g().coeff(i);
    if (!fi.is_certified_zero()) P = P + m.scale(fi);
    if (!gi.is_certified_zero()) Q = Q + m.scale(gi);
  }
  return {P, Q};
}

RationalMap compose_mobius(const Mobius& s2, const RationalMap& phi, const Mobius& s1) {
  auto [P, Q] = compose_right(phi, s1);
  Poly num = P.scale(s2.a) + Q.scale(s2.b);
  Poly den = P.scale(s2.c) + Q.scale(s2.d);
  return RationalMap(num, den, false).normalize();
}

int weight_at_infinity(const RationalMap& phi) {
  const int d = phi.degree();
  RationalMap swapped(phi.f().reverse(d), phi.g().reverse(d), false);
  Poly w = wronskian(swapped);
  if (w.is_zero()) fail(ErrorKind::kInvalidArgument, "inseparable map: every point is critical");
  for (int i = 0; i <= w.deg(); ++i) {
    const auto& c = w.coeffs()[i];
    if (c.is_certified_nonzero()) return i;
    if (!c.is_certified_zero()) fail(ErrorKind::kZeroWithinPrecision, "weight at infinity undecidable");
  }
  return w.deg() + 1;
}

int weight_at_infinity_homogeneous(const RationalMap& phi) {
  Poly w = wronskian(phi);
  if (w.is_zero()) fail(ErrorKind::kInvalidArgument, "inseparable map: every point is critical");
  if (!w.lc().is_certified_nonzero()) {
    fail(ErrorKind::kZeroWithinPrecision, "Wronskian degree undecidable");
  }
  return 2 * phi.degree() - 2 - w.deg();
}

HurwitzSum hurwitz_sum(const RationalMap& phi) {
  HurwitzSum h;
  if (!is_separable(phi)) {
    h.infinite = true;
    return h;
  }
  Poly w = wronskian(phi);
  long total = 0;
  if (w.deg() > 0) {
    for (const auto& [s, k] : exact::squarefree(w)) total += static_cast<long>(k) * s.deg();
  }
  h.value = total + weight_at_infinity(phi);
  return h;
}

}  // namespace berkram
