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

#include "berkram/mult.hpp"

#include <algorithm>

#include "berkram/errors.hpp"

namespace berkram {

namespace {

// Field in which s is in the value group, or an error.
FieldPtr field_for(const FieldPtr& F, const Rat& s, bool allow_extension) {
  if (F->in_value_group(s)) return F;
  if (F->mode() == FieldMode::kMixed && !allow_extension) {
    fail(ErrorKind::kTypeIIIUnsupported,
         "ord " + s.get_str() + " is outside (1/" + std::to_string(F->ram_index()) +
             ")Z in mixed mode");
  }
  return F->with_ram_index(F->ram_index_for(s));
}

int leading_zero_count(const Poly& T) {
  int k = 0;
  while (k <= T.deg()) {
    const auto& c = T.coeffs()[k];
    if (c.is_certified_nonzero()) return k;
    if (!c.is_certified_zero()) {
      fail(ErrorKind::kZeroWithinPrecision, "root order undecidable within precision");
    }
    ++k;
  }
  fail(ErrorKind::kInvalidArgument, "constant map");
}

int classical_multiplicity(const Poly& f, const Poly& g, const FieldElement& a) {
  if (!a.is_exact()) {
    fail(ErrorKind::kPrecisionExhausted, "local degree at an inexact classical point");
  }
  FieldElement ga = g.eval(a);
  if (ga.is_certified_zero()) return leading_zero_count(g.taylor_shift(a));
  FieldElement fa = f.eval(a);
  return leading_zero_count((f.scale(ga) - g.scale(fa)).taylor_shift(a));
}

RPoly poly_mod(const ResidueField& K, const RPoly& a, const RPoly& m) {
  return rp::rem(K, a, m);
}

// Solves A x = b over K (A given by columns); nullopt if inconsistent.
std::optional<std::vector<RElem>> solve(const ResidueField& K, const std::vector<std::vector<RElem>>& cols,
                                        const std::vector<RElem>& b) {
  const size_t n = b.size(), k = cols.size();
  std::vector<std::vector<RElem>> M(n, std::vector<RElem>(k + 1, K.zero()));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) M[i][j] = cols[j][i];
    M[i][k] = b[i];
  }
  std::vector<int> pivcol;
  size_t row = 0;
  for (size_t col = 0; col < k && row < n; ++col) {
    size_t piv = row;
    while (piv < n && K.is_zero(M[piv][col])) ++piv;
    if (piv == n) continue;
    std::swap(M[piv], M[row]);
    RElem iv = K.inv(M[row][col]);
    for (size_t j = col; j <= k; ++j) M[row][j] = K.mul(M[row][j], iv);
    for (size_t r = 0; r < n; ++r) {
      if (r == row || K.is_zero(M[r][col])) continue;
      RElem f = M[r][col];
      for (size_t j = col; j <= k; ++j) M[r][j] = K.sub(M[r][j], K.mul(f, M[row][j]));
    }
    pivcol.push_back(static_cast<int>(col));
    ++row;
  }
  for (size_t r = row; r < n; ++r) {
    if (!K.is_zero(M[r][k])) return std::nullopt;
  }
  std::vector<RElem> x(k, K.zero());
  for (size_t r = 0; r < pivcol.size(); ++r) x[pivcol[r]] = M[r][k];
  return x;
}

std::vector<RElem> coords(const ResidueField& K, const RPoly& a, int n) {
  std::vector<RElem> v(n, K.zero());
  for (int i = 0; i <= a.deg() && i < n; ++i) v[i] = a.c[i];
  return v;
}

RPoly pth_power_root_coeffs(const ResidueField& K, RPoly P, int q) {
  const int p = K.characteristic();
  for (int e = q; e > 1; e /= p) {
    for (auto& c : P.c) c = K.pth_root(c);
  }
  return P;
}

int form_multiplicity(const ResidueField& K, const RPoly& form, int form_deg,
                      const TangentDirection& v) {
  if (form.is_zero()) fail(ErrorKind::kInvalidArgument, "zero form");
  if (v.infinite) return form_deg - form.deg();
  return rp::multiplicity(K, form, v.point);
}

}  // namespace

RPoly edge_polynomial(const Poly& T, const Rat& s) {
  const auto& K = *T.field()->residue_field();
  Rat mu = gauss_ord(T, s);
  RPoly r;
  for (int i = 0; i <= T.deg(); ++i) {
    const auto& c = T.coeffs()[i];
    if (c.is_certified_nonzero() && c.ord() + s * i == mu) {
      r.c.resize(i + 1, K.zero());
      r.c[i] = c.leading_coefficient();
    }
  }
  return rp::trim(K, r);
}

RPoly image_closed_point(const ResidueField& K, const RPoly& F0, const RPoly& G0, int m,
                         const RPoly& P, bool* infinite) {
  (void)m;
  const int n = P.deg();
  RPoly gm = poly_mod(K, G0, P);
  *infinite = gm.is_zero();
  if (*infinite) return RPoly();
  RPoly s, t;
  rp::xgcd(K, gm, P, &s, &t);
  RPoly r = poly_mod(K, rp::mul(K, poly_mod(K, F0, P), s), P);
  std::vector<std::vector<RElem>> cols{coords(K, rp::constant(K, K.one()), n)};
  RPoly pw = rp::constant(K, K.one());
  for (int k = 1; k <= n; ++k) {
    pw = poly_mod(K, rp::mul(K, pw, r), P);
    auto v = coords(K, pw, n);
    auto sol = solve(K, cols, v);
    if (sol) {
      RPoly mp;
      mp.c.resize(k + 1, K.zero());
      for (int i = 0; i < k; ++i) mp.c[i] = K.neg((*sol)[i]);
      mp.c[k] = K.one();
      return rp::trim(K, mp);
    }
    cols.push_back(v);
  }
  fail(ErrorKind::kInvalidArgument, "minimal polynomial search failed");
}

Conjugation conjugate_to_gauss(const RationalMap& phi_in, const BerkPoint& x_in,
                               bool allow_extension) {
  if (!x_in.is_ball()) fail(ErrorKind::kInvalidArgument, "conjugation needs a ball");
  Conjugation C;
  C.F = field_for(common_field(phi_in.field(), x_in.center().field()), x_in.s(), allow_extension);
  RationalMap phi = phi_in.field().get() == C.F.get() ? phi_in : phi_in.with_field(C.F);
  C.x = x_in.center().field().get() == C.F.get() ? x_in : x_in.with_field(C.F);
  C.image = image_data(phi, C.x);
  FieldPtr F2 = field_for(C.F, C.image.s, allow_extension);
  if (F2.get() != C.F.get()) {
    C.F = F2;
    phi = phi.with_field(F2);
    C.x = C.x.with_field(F2);
    C.image.c = C.image.c.with_field(F2);
    C.image.y = C.image.y.with_field(F2);
  }
  C.alpha = FieldElement::uniformizer_pow(C.F, C.x.s());
  C.beta = FieldElement::uniformizer_pow(C.F, C.image.s);
  C.P = phi.f().compose_affine(C.alpha, C.x.center());
  C.Q = phi.g().compose_affine(C.alpha, C.x.center());
  Poly num = C.P - C.Q.scale(C.image.c);
  Poly den = C.Q.scale(C.beta);
  C.psi = RationalMap(num, den, false).normalize();
  C.red = reduce(C.psi);
  return C;
}

int local_degree(const RationalMap& phi, const BerkPoint& x, bool allow_extension) {
  switch (x.kind()) {
    case BerkPoint::Kind::kBall:
      return conjugate_to_gauss(phi, x, allow_extension).red.degree_red;
    case BerkPoint::Kind::kClassical:
      return classical_multiplicity(phi.f(), phi.g(), x.center());
    case BerkPoint::Kind::kInfinity: {
      const int d = phi.degree();
      return classical_multiplicity(phi.f().reverse(d), phi.g().reverse(d),
                                    FieldElement::zero(phi.field()));
    }
  }
  return 0;
}

int local_degree_oracle(const RationalMap& phi, const BerkPoint& x, int trials) {
  if (!x.is_ball()) fail(ErrorKind::kInvalidArgument, "oracle needs a ball");
  const FieldPtr F = common_field(phi.field(), x.center().field());
  ImageData im = image_data(phi, x);
  const auto& K = *F->residue_field();
  const int N = F->ram_index();
  Rat base = rat_ceil(im.s * N) / N;
  Poly Tg = phi.g().taylor_shift(x.center());
  RPoly Rinf = edge_polynomial(Tg, x.s());
  int result = -1;
  for (int j = 1; j <= trials; ++j) {
    FieldElement b = im.c + FieldElement::uniformizer_pow(F, base + Rat(j - 1, N));
    Poly T = (phi.f() - phi.g().scale(b)).taylor_shift(x.center());
    RPoly Rb = edge_polynomial(T, x.s());
    RPoly g = rp::gcd(K, Rb, Rinf);
    int m = Rb.deg() - g.deg() + std::max(0, Rinf.deg() - Rb.deg());
    if (result >= 0 && m != result) {
      fail(ErrorKind::kOracleInconclusive,
           "root counts disagree at " + x.to_string() + ": " + std::to_string(result) + " vs " +
               std::to_string(m));
    }
    result = m;
  }
  return result;
}

LocalData directional_data(const RationalMap& phi, const BerkPoint& x, bool allow_extension) {
  Conjugation C = conjugate_to_gauss(phi, x, allow_extension);
  const ReducedMap& R = C.red;
  const auto& K = *R.k;
  LocalData L;
  L.at = C.x;
  L.d = phi.degree();
  L.m = R.degree_red;
  const int m = L.m;
  const int p = K.characteristic();

  // psi~ = chi(z^q) with chi separable.
  int q = 1;
  if (p > 0) {
    auto divisible = [&](const RPoly& a, int k) {
      for (int i = 0; i <= a.deg(); ++i) {
        if (i % k != 0 && !K.is_zero(a.c[i])) return false;
      }
      return true;
    };
    while (m % (q * p) == 0 && divisible(R.f0, q * p) && divisible(R.g0, q * p)) q *= p;
  }
  L.generic_m_dir = q;
  L.insep = q > 1;
  auto compress = [&](const RPoly& a) {
    RPoly r;
    for (int i = 0; i <= a.deg(); i += q) r.c.push_back(a.c[i]);
    return rp::trim(K, r);
  };
  RPoly cf = compress(R.f0), cg = compress(R.g0);
  RPoly Wc = rp::sub(K, rp::mul(K, rp::deriv(K, cf), cg), rp::mul(K, cf, rp::deriv(K, cg)));

  // Candidate closed points.
  std::vector<RPoly> cands;
  auto add_cand = [&](const RPoly& P) {
    for (const auto& c : cands) {
      if (rp::eq(K, c, P)) return;
    }
    cands.push_back(P);
  };
  if (R.H_aff.deg() > 0) {
    for (auto& [P, e] : rp::factor(K, R.H_aff)) add_cand(P);
  }
  if (Wc.deg() > 0) {
    for (auto& [P, e] : rp::factor(K, Wc)) add_cand(q > 1 ? pth_power_root_coeffs(K, P, q) : P);
  }

  auto evaluate = [&](const TangentDirection& dir) {
    DirectionData D;
    D.dir = dir;
    bool inf_image = false;
    RPoly Qpt;
    if (dir.infinite) {
      RElem fm = m <= R.f0.deg() ? R.f0.c[m] : K.zero();
      RElem gm = m <= R.g0.deg() ? R.g0.c[m] : K.zero();
      inf_image = K.is_zero(gm);
      if (!inf_image) Qpt = rp::linear(K, K.div(fm, gm));
    } else {
      Qpt = image_closed_point(K, R.f0, R.g0, m, dir.point, &inf_image);
    }
    RPoly Phi;
    int k = 1;
    if (inf_image) {
      Phi = R.g0;
      D.image_dir = TangentDirection::at_infinity(C.image.y);
    } else {
      k = Qpt.deg();
      for (int i = 0; i <= k; ++i) {
        RPoly term = rp::scale(K, rp::mul(K, rp::pow(K, R.f0, i), rp::pow(K, R.g0, k - i)), Qpt.c[i]);
        Phi = rp::add(K, Phi, term);
      }
      D.image_dir.at = C.image.y;
      D.image_dir.point = Qpt;
    }
    D.m_dir = form_multiplicity(K, Phi, m * k, dir);
    D.s_dir = dir.infinite ? R.h_inf : (R.H_aff.deg() > 0 ? rp::multiplicity(K, R.H_aff, dir.point) : 0);
    return std::make_pair(D, Phi);
  };

  std::vector<std::pair<DirectionData, RPoly>> listed;
  {
    auto [D, Phi] = evaluate(TangentDirection::at_infinity(C.x));
    if (D.m_dir != q || D.s_dir > 0) listed.push_back({D, Phi});
  }
  for (const auto& P : cands) {
    TangentDirection t;
    t.at = C.x;
    t.point = P;
    auto [D, Phi] = evaluate(t);
    if (D.m_dir != q || D.s_dir > 0) listed.push_back({D, Phi});
  }
  for (auto& [D, Phi] : listed) L.directions.push_back(D);

  // Balance.
  int sum = m;
  for (const auto& D : L.directions) sum += D.dir.degree() * D.s_dir;
  L.balance_ok = sum == L.d;

  // Directional sums, image by image.
  bool ok = true;
  std::vector<bool> done(listed.size(), false);
  for (size_t i = 0; i < listed.size(); ++i) {
    if (done[i]) continue;
    const auto& img = listed[i].first.image_dir;
    const RPoly& Phi = listed[i].second;
    const int k = img.degree();
    int total = 0, listed_deg = 0;
    for (size_t j = i; j < listed.size(); ++j) {
      const auto& D = listed[j].first;
      if (D.image_dir.infinite != img.infinite) continue;
      if (!img.infinite && !rp::eq(K, D.image_dir.point, img.point)) continue;
      done[j] = true;
      if (D.m_dir > m || D.m_dir < 1) ok = false;
      total += D.m_dir * D.dir.degree();
      listed_deg += D.dir.degree();
    }
    int distinct = Phi.deg() < m * k ? 1 : 0;
    if (Phi.deg() > 0) {
      for (auto& [sf, e] : rp::squarefree(K, Phi)) distinct += sf.deg();
    }
    total += (distinct - listed_deg) * q;
    if (total != m * k) ok = false;
  }
  L.directional_sum_ok = ok;
  return L;
}

int surplus(const RationalMap& phi, const BerkPoint& x, const TangentDirection& v) {
  Conjugation C = conjugate_to_gauss(phi, x);
  const auto& K = *C.red.k;
  if (v.infinite) return C.red.h_inf;
  if (C.red.H_aff.deg() <= 0) return 0;
  return rp::multiplicity(K, C.red.H_aff, v.point);
}

int critical_weight_in_direction(const RationalMap& phi, const BerkPoint& x,
                                 const TangentDirection& v) {
  Conjugation C = conjugate_to_gauss(phi, x);
  RationalMap conj(C.P, C.Q, false);
  Poly W = wronskian(conj);
  if (W.is_zero()) fail(ErrorKind::kInvalidArgument, "inseparable map");
  // Normalize W alone: divide by the leading monomial of a minimal coefficient.
  const FieldElement* best = nullptr;
  Rat lo;
  for (const auto& c : W.coeffs()) {
    if (c.is_certified_nonzero() && (best == nullptr || c.ord() < lo)) {
      best = &c;
      lo = c.ord();
    }
  }
  FieldElement mono = FieldElement::from_terms(C.F, {best->terms().front()}, std::nullopt);
  RPoly w = reduce_poly(W.scale(mono.inv()));
  return form_multiplicity(*C.red.k, w, 2 * phi.degree() - 2, v);
}

bool has_inseparable_reduction(const RationalMap& phi, const BerkPoint& x) {
  if (x.kind() != BerkPoint::Kind::kBall) return !is_separable(phi);
  const FieldPtr& F = x.center().field();
  if (!F->in_value_group(x.s()) && F->mode() == FieldMode::kMixed) {
    const int p = F->p();
    return p > 0 && local_degree_typeIII(phi, x) % p == 0;
  }
  Conjugation C = conjugate_to_gauss(phi, x);
  Poly W = wronskian(C.psi);
  RPoly w = reduce_poly(W);
  return w.is_zero();
}

int local_degree_typeIII(const RationalMap& phi, const BerkPoint& x, int budget) {
  if (!x.is_ball()) fail(ErrorKind::kInvalidArgument, "type III probes need a ball");
  const FieldPtr F = common_field(phi.field(), x.center().field());
  Int L;
  Int den = x.s().get_den();
  mpz_lcm(L.get_mpz_t(), den.get_mpz_t(), Int(F->ram_index()).get_mpz_t());
  int prev = -1;
  for (int k = 1; k <= budget; ++k) {
    Rat eps(Int(1), L * (Int(1) << k));
    eps.canonicalize();
    int lo = local_degree(phi, BerkPoint::ball(x.center(), x.s() - eps), true);
    int hi = local_degree(phi, BerkPoint::ball(x.center(), x.s() + eps), true);
    if (lo == hi && lo == prev) return lo;
    prev = lo == hi ? lo : -1;
  }
  fail(ErrorKind::kNoStabilization,
       "flank local degrees did not stabilize at " + x.to_string());
}

}  // namespace berkram
