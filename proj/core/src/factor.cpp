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

// Zassenhaus factorization over Z: modular factorization, Hensel lifting,
// and subset recombination. Sized for the small degrees the library sees.

#include <algorithm>

#include "berkram/errors.hpp"
#include "berkram/residue.hpp"

namespace berkram {

namespace {

using ZPoly = std::vector<Int>;  // lowest degree first

void ztrim(ZPoly* a) {
  while (!a->empty() && a->back() == 0) a->pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

Int mod_pos(const Int& v, const Int& m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

Int mod_sym(const Int& v, const Int& m) {
  Int r = mod_pos(v, m);
  if (2 * r > m) r -= m;
  return r;
}

ZPoly zmod(const ZPoly& a, const Int& m) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_pos(a[i], m);
  ztrim(&r);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(&r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(&r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  ztrim(&r);
  return r;
}

ZPoly zscale(const ZPoly& a, const Int& s) {
  ZPoly r = a;
  for (auto& v : r) v *= s;
  ztrim(&r);
  return r;
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), Int(mod_pos(a, m)).get_mpz_t(), m.get_mpz_t()) == 0) {
    fail(ErrorKind::kInvalidArgument, "non-invertible modular element");
  }
  return r;
}

// Division by a monic polynomial modulo m.
void zdivmod_monic(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly* q,
                   ZPoly* r) {
  ZPoly rr = zmod(a, m);
  int db = zdeg(b);
  ZPoly qq;
  if (zdeg(rr) >= db) qq.assign(zdeg(rr) - db + 1, 0);
  while (!rr.empty() && zdeg(rr) >= db) {
    int k = zdeg(rr) - db;
    Int f = rr.back();
    qq[k] = f;
    for (int i = 0; i <= db; ++i) rr[i + k] = mod_pos(rr[i + k] - f * b[i], m);
    ztrim(&rr);
  }
  ztrim(&qq);
  *q = qq;
  *r = rr;
}

// Exact division over Z; returns false if b does not divide a.
bool zdiv_exact(const ZPoly& a, const ZPoly& b, ZPoly* q) {
  ZPoly r = a;
  int db = zdeg(b);
  if (zdeg(r) < db) return r.empty() ? (q->clear(), true) : false;
  ZPoly qq(zdeg(r) - db + 1, 0);
  while (!r.empty() && zdeg(r) >= db) {
    int k = zdeg(r) - db;
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) {
      return false;
    }
    Int f = r.back() / b.back();
    qq[k] = f;
    for (int i = 0; i <= db; ++i) r[i + k] -= f * b[i];
    ztrim(&r);
  }
  if (!r.empty()) return false;
  ztrim(&qq);
  *q = qq;
  return true;
}

ZPoly primitive(const ZPoly& a) {
  Int g = 0;
  for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  ZPoly r = a;
  if (g == 0) return r;
  if (r.back() < 0) g = -g;
  for (auto& v : r) v /= g;
  return r;
}

RPoly to_fp(const ResidueField& F, const ZPoly& a) {
  RPoly r;
  for (const auto& v : a) r.c.push_back(F.from_int(v));
  return rp::trim(F, r);
}

ZPoly from_fp(const RPoly& a) {
  ZPoly r;
  for (const auto& c : a.c) r.push_back(Int(static_cast<long>(c.c[0])));
  ztrim(&r);
  return r;
}

// Lifts f = g0*h0 (mod p), g0 monic, to f = g*h (mod p^k).
void hensel_two(const ZPoly& f, const ZPoly& g0, const ZPoly& h0, long p,
                int k, const ResidueField& Fp, ZPoly* g, ZPoly* h) {
  RPoly s, t;
  RPoly one = rp::xgcd(Fp, to_fp(Fp, g0), to_fp(Fp, h0), &s, &t);
  if (one.deg() != 0) fail(ErrorKind::kInvalidArgument, "Hensel: not coprime");
  ZPoly zs = from_fp(s), zt = from_fp(t);
  Int P = p;
  Int pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k));
  ZPoly gg = g0, hh = h0;
  Int pj = p;
  for (int j = 1; j < k; ++j) {
    ZPoly e = zmod(zsub(f, zmul(gg, hh)), pk);
    for (auto& v : e) v = mod_pos(v / pj, P);
    ztrim(&e);
    ZPoly q, dg;
    zdivmod_monic(zmod(zmul(zt, e), P), g0, P, &q, &dg);
    ZPoly dh = zmod(zadd(zmul(zs, e), zmul(q, h0)), P);
    gg = zmod(zadd(gg, zscale(dg, pj)), pk);
    hh = zmod(zadd(hh, zscale(dh, pj)), pk);
    pj *= P;
  }
  *g = gg;
  *h = hh;
}

// f is known modulo p^k and has lc(f) coprime to p; facs are monic mod p.
void hensel_multi(const ZPoly& f, const std::vector<ZPoly>& facs, long p, int k,
                  const ResidueField& Fp, std::vector<ZPoly>* out) {
  Int pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k));
  if (facs.size() == 1) {
    out->push_back(zmod(zscale(f, inv_mod(f.back(), pk)), pk));
    return;
  }
  size_t half = facs.size() / 2;
  std::vector<ZPoly> left(facs.begin(), facs.begin() + half);
  std::vector<ZPoly> right(facs.begin() + half, facs.end());
  ZPoly g0 = {Int(1)}, h0 = {mod_pos(f.back(), Int(p))};
  for (auto& u : left) g0 = zmod(zmul(g0, u), Int(p));
  for (auto& u : right) h0 = zmod(zmul(h0, u), Int(p));
  ZPoly g, h;
  hensel_two(f, g0, h0, p, k, Fp, &g, &h);
  hensel_multi(g, left, p, k, Fp, out);
  hensel_multi(h, right, p, k, Fp, out);
}

bool next_subset(std::vector<int>* idx, int n) {
  int s = static_cast<int>(idx->size());
  for (int i = s - 1; i >= 0; --i) {
    if ((*idx)[i] < n - s + i) {
      ++(*idx)[i];
      for (int j = i + 1; j < s; ++j) (*idx)[j] = (*idx)[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<Int>> factor_squarefree_integer(const ZPoly& f_in) {
  ZPoly f = primitive(f_in);
  ztrim(&f);
  if (zdeg(f) <= 1) return {f};
  // Pick a prime keeping the degree and square-freeness.
  long p = 0;
  std::vector<RPoly> modfacs;
  std::shared_ptr<const ResidueField> Fp;
  static const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
                                 89, 97, 101, 103, 107, 109, 113, 127, 131};
  for (long cand : kPrimes) {
    if (f.back() % cand == 0) continue;
    auto F = ResidueField::prime_field(static_cast<int>(cand));
    RPoly fb = to_fp(*F, f);
    if (rp::gcd(*F, fb, rp::deriv(*F, fb)).deg() != 0) continue;
    p = cand;
    Fp = F;
    for (auto& [u, e] : rp::factor(*F, fb)) modfacs.push_back(u);
    break;
  }
  if (p == 0) fail(ErrorKind::kInvalidArgument, "no good prime for factoring");
  if (modfacs.size() == 1) return {f};
  // Coefficient bound for factors (Mignotte), times the leading coefficient.
  Int norm2 = 0;
  for (auto& v : f) norm2 += v * v;
  Int nrm = sqrt(norm2) + 1;
  Int B = nrm * abs(f.back());
  B <<= zdeg(f);
  int k = 1;
  Int pk = p;
  while (pk <= 2 * B) {
    pk *= p;
    ++k;
  }
  std::vector<ZPoly> zfacs;
  for (auto& u : modfacs) zfacs.push_back(from_fp(u));
  std::vector<ZPoly> lifted;
  hensel_multi(zmod(f, pk), zfacs, p, k, *Fp, &lifted);

  std::vector<std::vector<Int>> result;
  std::vector<ZPoly> T = lifted;
  ZPoly rest = f;
  int s = 1;
  while (2 * s <= static_cast<int>(T.size())) {
    bool found = false;
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly g = {rest.back()};
      for (int i : idx) g = zmod(zmul(g, T[i]), pk);
      for (auto& v : g) v = mod_sym(v, pk);
      ztrim(&g);
      g = primitive(g);
      ZPoly q;
      if (zdiv_exact(rest, g, &q)) {
        result.push_back(g);
        rest = q;
        std::vector<ZPoly> nt;
        for (int i = 0; i < static_cast<int>(T.size()); ++i) {
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) {
            nt.push_back(T[i]);
          }
        }
        T = nt;
        found = true;
        break;
      }
    } while (next_subset(&idx, static_cast<int>(T.size())));
    if (!found) ++s;
  }
  if (zdeg(rest) >= 1) result.push_back(primitive(rest));
  return result;
}

}  // namespace berkram
