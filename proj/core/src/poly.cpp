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

#include "berkram/poly.hpp"

#include <algorithm>
#include <sstream>

#include "berkram/errors.hpp"

namespace berkram {

Poly::Poly(FieldPtr F) : F_(std::move(F)) {}

Poly::Poly(FieldPtr F, std::vector<FieldElement> c) : F_(std::move(F)), c_(std::move(c)) {
  for (auto& x : c_) {
    if (x.field().get() != F_.get()) x = x.with_field(F_);
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_certified_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const FieldElement& c, int k) {
  std::vector<FieldElement> v(k + 1, FieldElement::zero(c.field()));
  v[k] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::z(const FieldPtr& F) { return monomial(FieldElement::one(F), 1); }

bool Poly::is_exact() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElement& x) { return x.is_exact(); });
}

FieldElement Poly::coeff(int i) const {
  if (i < 0 || i > deg()) return FieldElement::zero(F_);
  return c_[i];
}

Poly Poly::operator+(const Poly& o) const {
  FieldPtr F = common_field(F_, o.F_);
  std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), FieldElement::zero(F));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Poly(F, std::move(r));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  FieldPtr F = common_field(F_, o.F_);
  if (is_zero() || o.is_zero()) return Poly(F);
  std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, FieldElement::zero(F));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_certified_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_certified_zero()) continue;
      r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
  }
  return Poly(F, std::move(r));
}

Poly Poly::scale(const FieldElement& s) const {
  FieldPtr F = common_field(F_, s.field());
  std::vector<FieldElement> r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(x * s);
  return Poly(F, std::move(r));
}

Poly Poly::shift(int k) const {
  if (is_zero()) return *this;
  std::vector<FieldElement> r(k, FieldElement::zero(F_));
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(F_, std::move(r));
}

Poly Poly::pow(int k) const {
  Poly r = constant(FieldElement::one(F_));
  Poly b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Poly Poly::deriv() const {
  std::vector<FieldElement> r;
  for (int i = 1; i <= deg(); ++i) r.push_back(c_[i] * FieldElement::from_int(F_, i));
  return Poly(F_, std::move(r));
}

FieldElement Poly::eval(const FieldElement& x) const {
  FieldPtr F = common_field(F_, x.field());
  FieldElement r = FieldElement::zero(F);
  for (int i = deg(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

Poly Poly::taylor_shift(const FieldElement& a) const {
  return compose_affine(FieldElement::one(F_), a);
}

Poly Poly::compose_affine(const FieldElement& alpha, const FieldElement& a) const {
  FieldPtr F = common_field(common_field(F_, alpha.field()), a.field());
  Poly lin(F, {a, alpha});
  Poly r(F);
  for (int i = deg(); i >= 0; --i) r = r * lin + constant(c_[i].with_field(F));
  return r;
}

Poly Poly::reverse(int d) const {
  if (d < deg()) fail(ErrorKind::kInvalidArgument, "reverse: degree too small");
  std::vector<FieldElement> r(d + 1, FieldElement::zero(F_));
  for (int i = 0; i <= deg(); ++i) r[d - i] = c_[i];
  return Poly(F_, std::move(r));
}

Poly Poly::with_field(const FieldPtr& F) const {
  std::vector<FieldElement> r;
  for (const auto& x : c_) r.push_back(x.with_field(F));
  return Poly(F, std::move(r));
}

Poly Poly::truncate(const Rat& cap) const {
  std::vector<FieldElement> r;
  for (const auto& x : c_) r.push_back(x.truncate(cap));
  return Poly(F_, std::move(r));
}

bool Poly::equals(const Poly& o) const {
  Poly d = *this - o;
  return d.is_zero();
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c_[i].is_certified_zero()) continue;
    std::string s = c_[i].to_string();
    bool compound = s.find(" + ") != std::string::npos ||
                    s.find(" - ") != std::string::npos;
    bool neg = !compound && s[0] == '-';
    if (neg) s = s.substr(1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (compound) s = "(" + s + ")";
    if (i == 0) {
      os << s;
      continue;
    }
    if (s != "1") os << s << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Rat gauss_ord(const Poly& f, const Rat& s) {
  bool have = false;
  Rat best;
  for (int i = 0; i <= f.deg(); ++i) {
    const auto& c = f.coeffs()[i];
    if (c.is_certified_zero()) continue;
    Rat v;
    if (c.is_certified_nonzero()) {
      v = c.ord() + s * i;
    } else {
      v = c.ord_lower_bound() + s * i;
    }
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }
  if (!have) fail(ErrorKind::kInvalidArgument, "gauss_ord of the zero polynomial");
  // Certify: the minimum must be attained by a nonzero coefficient.
  for (int i = 0; i <= f.deg(); ++i) {
    const auto& c = f.coeffs()[i];
    if (c.is_certified_nonzero() && c.ord() + s * i == best) return best;
  }
  fail(ErrorKind::kZeroWithinPrecision, "sup-norm not determined within precision");
}

RPoly reduce_poly(const Poly& f) {
  const auto& R = *f.field()->residue_field();
  RPoly r;
  for (const auto& c : f.coeffs()) r.c.push_back(c.residue());
  return rp::trim(R, r);
}

// ---------------------------------------------------------------------------
// Exact gcd machinery. In the Puiseux modes an exact element is a Laurent
// polynomial in u = t^(1/D); we move to k~[u][z] and run a primitive PRS.

namespace {

using BiPoly = std::vector<RPoly>;  // index = degree in z

struct BiFrame {
  Int D = 1;
};

void require_exact(const Poly& a) {
  if (!a.is_exact()) {
    fail(ErrorKind::kInvalidArgument, "exact polynomial algebra needs exact coefficients");
  }
}

Int frame_denominator(const std::vector<const Poly*>& ps) {
  Int D = 1;
  for (const Poly* p : ps) {
    for (const auto& c : p->coeffs()) {
      for (const auto& t : c.terms()) {
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), t.e.get_den_mpz_t());
      }
    }
  }
  return D;
}

// a = u^shift * bi
BiPoly to_bi(const Poly& a, const Int& D, Rat* shift) {
  const auto& K = *a.field()->coeff_field();
  bool have = false;
  Rat lo;
  for (const auto& c : a.coeffs()) {
    if (c.terms().empty()) continue;
    if (!have || c.terms().front().e < lo) lo = c.terms().front().e;
    have = true;
  }
  if (!have) lo = 0;
  *shift = lo;
  BiPoly out;
  for (const auto& c : a.coeffs()) {
    RPoly r;
    for (const auto& t : c.terms()) {
      Rat k = (t.e - lo) * Rat(D);
      long idx = k.get_num().get_si();
      if (static_cast<long>(r.c.size()) <= idx) r.c.resize(idx + 1, K.zero());
      r.c[idx] = t.c;
    }
    out.push_back(rp::trim(K, r));
  }
  return out;
}

Poly from_bi(const FieldPtr& F, const BiPoly& b, const Int& D, const Rat& shift) {
  const auto& K = *F->coeff_field();
  std::vector<FieldElement> cs;
  for (const auto& r : b) {
    std::vector<Term> ts;
    for (int k = 0; k <= r.deg(); ++k) {
      if (K.is_zero(r.c[k])) continue;
      Rat e = shift + Rat(Int(k), D);
      e.canonicalize();
      ts.push_back(Term{e, r.c[k]});
    }
    cs.push_back(FieldElement::from_terms(F, ts, std::nullopt));
  }
  return Poly(F, cs);
}

void bi_trim(BiPoly* a) {
  while (!a->empty() && a->back().is_zero()) a->pop_back();
}

int bi_deg(const BiPoly& a) { return static_cast<int>(a.size()) - 1; }

RPoly bi_content(const ResidueField& K, const BiPoly& a) {
  RPoly g;
  for (const auto& c : a) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? rp::monic(K, c) : rp::gcd(K, g, c);
    if (g.deg() == 0) break;
  }
  return g;
}

BiPoly bi_prim(const ResidueField& K, BiPoly a) {
  bi_trim(&a);
  if (a.empty()) return a;
  RPoly g = bi_content(K, a);
  if (g.deg() > 0) {
    for (auto& c : a) c = rp::quo(K, c, g);
  }
  // Canonical scaling: leading coefficient has leading coefficient 1.
  RElem s = K.inv(a.back().c.back());
  for (auto& c : a) c = rp::scale(K, c, s);
  return a;
}

BiPoly bi_prem(const ResidueField& K, BiPoly a, const BiPoly& b) {
  const int db = bi_deg(b);
  bi_trim(&a);
  while (bi_deg(a) >= db) {
    const int k = bi_deg(a) - db;
    RPoly la = a.back();
    for (auto& c : a) c = rp::mul(K, c, b.back());
    for (int i = 0; i <= db; ++i) a[i + k] = rp::sub(K, a[i + k], rp::mul(K, la, b[i]));
    bi_trim(&a);
    // Keep the growth in check.
    a = bi_prim(K, a);
  }
  return a;
}

// Certifies gcd(a, b) = 1 in k~(u)[z] by specializing u (and, over the
// rationals, reducing modulo a large prime): the degree of the gcd cannot
// drop when neither leading coefficient vanishes. False means unknown.
bool coprime_by_specialization(const ResidueField& K, const BiPoly& a, const BiPoly& b) {
  constexpr long kPrime = 1000003;
  ResFieldPtr L = K.is_rational() ? ResidueField::prime_field(kPrime) : K.shared_from_this();
  auto to_L = [&](const RElem& c, bool* ok) {
    if (!K.is_rational()) return c;
    if (mpz_divisible_ui_p(c.q.get_den_mpz_t(), kPrime)) {
      *ok = false;
      return L->zero();
    }
    return L->from_rat(c.q);
  };
  const int tries = K.is_rational() ? 3 : static_cast<int>(std::min<Int>(K.order() - 1, 4).get_si());
  for (int i = 1; i <= tries; ++i) {
    const RElem u0 = K.is_rational() ? L->from_int(i + 1) : L->from_index(i);
    bool ok = true;
    auto at_u0 = [&](const BiPoly& x) {
      RPoly out;
      for (const auto& c : x) {
        RElem v = L->zero();
        for (int k = c.deg(); k >= 0; --k) v = L->add(L->mul(v, u0), to_L(c.c[k], &ok));
        out.c.push_back(v);
      }
      return rp::trim(*L, out);
    };
    RPoly sa = at_u0(a), sb = at_u0(b);
    if (!ok || sa.deg() != bi_deg(a) || sb.deg() != bi_deg(b)) continue;
    if (rp::gcd(*L, sa, sb).deg() == 0) return true;
  }
  return false;
}

BiPoly bi_gcd(const ResidueField& K, BiPoly a, BiPoly b) {
  a = bi_prim(K, a);
  b = bi_prim(K, b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (bi_deg(a) > 0 && bi_deg(b) > 0 && coprime_by_specialization(K, a, b)) {
    return BiPoly{rp::constant(K, K.one())};
  }
  if (bi_deg(a) < bi_deg(b)) std::swap(a, b);
  while (!b.empty()) {
    BiPoly r = bi_prem(K, a, b);
    a = std::move(b);
    b = bi_prim(K, r);
  }
  return a;
}

// Exact quotient in k~[u][z]; b primitive.
BiPoly bi_div(const ResidueField& K, BiPoly a, const BiPoly& b) {
  const int db = bi_deg(b);
  bi_trim(&a);
  if (a.empty()) return a;
  BiPoly q(std::max(0, bi_deg(a) - db + 1));
  while (!a.empty() && bi_deg(a) >= db) {
    const int k = bi_deg(a) - db;
    auto [qq, rr] = rp::divmod(K, a.back(), b.back());
    if (!rr.is_zero()) fail(ErrorKind::kInvalidArgument, "exact division failed");
    q[k] = qq;
    for (int i = 0; i <= db; ++i) a[i + k] = rp::sub(K, a[i + k], rp::mul(K, qq, b[i]));
    bi_trim(&a);
  }
  if (!a.empty()) fail(ErrorKind::kInvalidArgument, "exact division left a remainder");
  bi_trim(&q);
  return q;
}

bool puiseux(const FieldPtr& F) { return F->mode() != FieldMode::kMixed; }

Poly monic_over_field(const Poly& a) {
  FieldElement li = a.lc().inv();
  return a.scale(li);
}

std::pair<Poly, Poly> field_divmod(const Poly& a, const Poly& b) {
  FieldPtr F = common_field(a.field(), b.field());
  Poly r = a.with_field(F);
  FieldElement li = b.lc().inv();
  std::vector<FieldElement> q(std::max(0, a.deg() - b.deg() + 1), FieldElement::zero(F));
  while (!r.is_zero() && r.deg() >= b.deg()) {
    const int k = r.deg() - b.deg();
    FieldElement c = r.lc() * li;
    q[k] = c;
    r = r - Poly::monomial(c, k) * b;
    // The leading coefficient cancels exactly.
    std::vector<FieldElement> cs = r.coeffs();
    if (static_cast<int>(cs.size()) > k + b.deg()) cs.resize(k + b.deg());
    r = Poly(F, cs);
  }
  return {Poly(F, q), r};
}

}  // namespace

namespace exact {

Poly gcd(const Poly& a, const Poly& b) {
  require_exact(a);
  require_exact(b);
  FieldPtr F = common_field(a.field(), b.field());
  if (puiseux(F)) {
    Int D = frame_denominator({&a, &b});
    Rat sa, sb;
    const auto& K = *F->coeff_field();
    BiPoly g = bi_gcd(K, to_bi(a.with_field(F), D, &sa), to_bi(b.with_field(F), D, &sb));
    return from_bi(F, g, D, 0);
  }
  Poly x = a.with_field(F), y = b.with_field(F);
  if (x.is_zero()) return y.is_zero() ? y : monic_over_field(y);
  while (!y.is_zero()) {
    Poly r = field_divmod(x, y).second;
    x = y;
    y = r;
  }
  return monic_over_field(x);
}

Poly div(const Poly& a, const Poly& b) {
  require_exact(a);
  require_exact(b);
  if (b.is_zero()) fail(ErrorKind::kInvalidArgument, "division by the zero polynomial");
  FieldPtr F = common_field(a.field(), b.field());
  if (puiseux(F)) {
    Int D = frame_denominator({&a, &b});
    Rat sa, sb;
    const auto& K = *F->coeff_field();
    BiPoly ab = to_bi(a.with_field(F), D, &sa);
    BiPoly bb = to_bi(b.with_field(F), D, &sb);
    RPoly cont = bi_content(K, bb);
    BiPoly bp = bb;
    for (auto& c : bp) c = rp::quo(K, c, cont);
    BiPoly q = bi_div(K, ab, bp);
    Poly out = from_bi(F, q, D, sa - sb);
    // Divide by the content of b; exact when it is a monomial in u.
    RPoly c2 = cont;
    int low = 0;
    while (low <= c2.deg() && K.is_zero(c2.c[low])) ++low;
    FieldElement ce = FieldElement::zero(F);
    {
      std::vector<Term> ts;
      for (int k = 0; k <= c2.deg(); ++k) {
        if (!K.is_zero(c2.c[k])) ts.push_back(Term{Rat(Int(k), D), c2.c[k]});
      }
      for (auto& t : ts) t.e.canonicalize();
      ce = FieldElement::from_terms(F, ts, std::nullopt);
    }
    return out.scale(ce.inv());
  }
  auto [q, r] = field_divmod(a.with_field(F), b.with_field(F));
  if (!r.is_zero()) fail(ErrorKind::kInvalidArgument, "exact division left a remainder");
  return q;
}

bool coprime(const Poly& a, const Poly& b) { return gcd(a, b).deg() == 0; }

namespace {

Poly pth_root_poly(const Poly& a, int p) {
  std::vector<FieldElement> r;
  for (int i = 0; i <= a.deg(); i += p) r.push_back(a.coeffs()[i].pth_root());
  return Poly(a.field(), r);
}

void squarefree_rec(const Poly& f, int mult, std::vector<std::pair<Poly, int>>* out) {
  if (f.deg() < 1) return;
  Poly c = gcd(f, f.deriv());
  Poly w = div(f, c);
  int i = 1;
  while (w.deg() >= 1) {
    Poly y = gcd(w, c);
    Poly fac = div(w, y);
    if (fac.deg() >= 1) out->push_back({fac, i * mult});
    w = y;
    c = div(c, y);
    ++i;
  }
  if (c.deg() >= 1) {
    const int p = f.field()->p();
    if (f.field()->mode() != FieldMode::kEquicharP) {
      fail(ErrorKind::kInvalidArgument, "square-free decomposition stalled");
    }
    squarefree_rec(pth_root_poly(c, p), mult * p, out);
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree(const Poly& a) {
  require_exact(a);
  if (a.is_zero()) fail(ErrorKind::kInvalidArgument, "square-free decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  squarefree_rec(a, 1, &out);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

}  // namespace exact

}  // namespace berkram
