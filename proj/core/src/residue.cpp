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

#include "berkram/residue.hpp"

#include <algorithm>
#include <sstream>

#include "berkram/errors.hpp"

namespace berkram {

namespace {

std::shared_ptr<ResidueField> make_field() {
  struct Access : ResidueField {};
  return std::shared_ptr<ResidueField>(
      static_cast<ResidueField*>(new Access()));
}

}  // namespace

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::kZeroWithinPrecision: return "ZeroWithinPrecision";
    case ErrorKind::kNegativeValuation: return "NegativeValuation";
    case ErrorKind::kUnsupportedExtension: return "UnsupportedExtension";
    case ErrorKind::kTypeIIIUnsupported: return "TypeIIIUnsupported";
    case ErrorKind::kOracleInconclusive: return "OracleInconclusive";
    case ErrorKind::kNoStabilization: return "NoStabilization";
    case ErrorKind::kPrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::kResidueFieldTooSmall: return "ResidueFieldTooSmall";
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kSemanticError: return "SemanticError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

ResFieldPtr ResidueField::rationals() {
  static const ResFieldPtr q = [] {
    auto f = make_field();
    f->p_ = 0;
    f->m_ = 1;
    return ResFieldPtr(f);
  }();
  return q;
}

ResFieldPtr ResidueField::prime_field(int p) {
  if (p < 2) fail(ErrorKind::kInvalidArgument, "prime field needs p >= 2");
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) fail(ErrorKind::kInvalidArgument, "p must be prime");
  }
  auto f = make_field();
  f->p_ = p;
  f->m_ = 1;
  return f;
}

std::int64_t ResidueField::md(std::int64_t v) const {
  v %= p_;
  return v < 0 ? v + p_ : v;
}

Int ResidueField::order() const {
  if (p_ == 0) return 0;
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_),
                static_cast<unsigned long>(m_));
  return q;
}

bool ResidueField::same_as(const ResidueField& o) const {
  return this == &o || (p_ == o.p_ && m_ == o.m_ && mod_ == o.mod_);
}

std::string ResidueField::describe() const {
  if (p_ == 0) return "Q";
  std::ostringstream os;
  os << "F_" << p_;
  if (m_ > 1) {
    os << "^" << m_ << "[" << gen_ << "]/(";
    RPoly mp;
    for (auto v : mod_) {
      RElem e;
      e.c.assign(1, v);
      mp.c.push_back(e);
    }
    RElem lead;
    lead.c.assign(1, 1);
    mp.c.push_back(lead);
    os << rp::to_string(*prime_field(p_), mp, gen_) << ")";
  }
  return os.str();
}

RElem ResidueField::zero() const {
  RElem r;
  if (p_ == 0) {
    r.q = 0;
  } else {
    r.c.assign(m_, 0);
  }
  return r;
}

RElem ResidueField::one() const { return from_int(1L); }

RElem ResidueField::from_int(long v) const {
  RElem r = zero();
  if (p_ == 0) {
    r.q = v;
  } else {
    r.c[0] = md(v);
  }
  return r;
}

RElem ResidueField::from_int(const Int& v) const {
  RElem r = zero();
  if (p_ == 0) {
    r.q = v;
  } else {
    Int m = v % p_;
    if (m < 0) m += p_;
    r.c[0] = m.get_si();
  }
  return r;
}

RElem ResidueField::from_rat(const Rat& v) const {
  if (p_ == 0) {
    RElem r;
    r.q = v;
    return r;
  }
  Int den = v.get_den();
  if (den % p_ == 0) {
    fail(ErrorKind::kNegativeValuation,
         "rational with denominator divisible by p has no residue");
  }
  return div(from_int(Int(v.get_num())), from_int(den));
}

RElem ResidueField::gen() const {
  if (p_ == 0 || m_ == 1) {
    fail(ErrorKind::kSemanticError,
         "field " + describe() + " has no named generator");
  }
  RElem r = zero();
  r.c[1] = 1;
  return r;
}

RElem ResidueField::add(const RElem& a, const RElem& b) const {
  RElem r;
  if (p_ == 0) {
    r.q = a.q + b.q;
    return r;
  }
  r.c.resize(m_);
  for (int i = 0; i < m_; ++i) r.c[i] = md(a.c[i] + b.c[i]);
  return r;
}

RElem ResidueField::sub(const RElem& a, const RElem& b) const {
  RElem r;
  if (p_ == 0) {
    r.q = a.q - b.q;
    return r;
  }
  r.c.resize(m_);
  for (int i = 0; i < m_; ++i) r.c[i] = md(a.c[i] - b.c[i]);
  return r;
}

RElem ResidueField::neg(const RElem& a) const { return sub(zero(), a); }

RElem ResidueField::mul(const RElem& a, const RElem& b) const {
  RElem r;
  if (p_ == 0) {
    r.q = a.q * b.q;
    return r;
  }
  if (m_ == 1) {
    r.c.assign(1, md(a.c[0] * b.c[0]));
    return r;
  }
  std::vector<std::int64_t> t(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < m_; ++j) t[i + j] = md(t[i + j] + a.c[i] * b.c[j]);
  }
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    std::int64_t lead = t[k];
    if (lead == 0) continue;
    t[k] = 0;
    for (int i = 0; i < m_; ++i) {
      t[k - m_ + i] = md(t[k - m_ + i] - lead * mod_[i]);
    }
  }
  t.resize(m_);
  r.c = t;
  return r;
}

RElem ResidueField::pow(const RElem& a, const Int& e) const {
  if (e < 0) return pow(inv(a), -e);
  RElem result = one();
  RElem base = a;
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

RElem ResidueField::inv(const RElem& a) const {
  if (is_zero(a)) fail(ErrorKind::kInvalidArgument, "division by zero");
  if (p_ == 0) {
    RElem r;
    r.q = 1 / a.q;
    return r;
  }
  return pow(a, order() - 2);
}

RElem ResidueField::div(const RElem& a, const RElem& b) const {
  return mul(a, inv(b));
}

RElem ResidueField::pth_root(const RElem& a) const {
  if (p_ == 0) fail(ErrorKind::kInvalidArgument, "p-th root in char 0");
  return pow(a, order() / p_);
}

bool ResidueField::is_zero(const RElem& a) const {
  if (p_ == 0) return a.q == 0;
  for (auto v : a.c) {
    if (v != 0) return false;
  }
  return true;
}

bool ResidueField::is_one(const RElem& a) const { return eq(a, one()); }

bool ResidueField::eq(const RElem& a, const RElem& b) const {
  if (p_ == 0) return a.q == b.q;
  return a.c == b.c;
}

int ResidueField::cmp(const RElem& a, const RElem& b) const {
  if (p_ == 0) return a.q < b.q ? -1 : (a.q > b.q ? 1 : 0);
  for (int i = m_ - 1; i >= 0; --i) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
  }
  return 0;
}

RElem ResidueField::random(std::mt19937_64& rng) const {
  if (p_ == 0) {
    std::uniform_int_distribution<long> d(-5, 5);
    return from_int(d(rng));
  }
  RElem r = zero();
  std::uniform_int_distribution<std::int64_t> d(0, p_ - 1);
  for (int i = 0; i < m_; ++i) r.c[i] = d(rng);
  return r;
}

RElem ResidueField::from_index(std::uint64_t i) const {
  if (p_ == 0) return from_int(static_cast<long>(i));
  RElem r = zero();
  for (int k = 0; k < m_; ++k) {
    r.c[k] = static_cast<std::int64_t>(i % p_);
    i /= p_;
  }
  return r;
}

long ResidueField::lift_int(const RElem& a) const {
  if (p_ == 0 || m_ != 1) {
    fail(ErrorKind::kInvalidArgument, "integer lift needs a prime field");
  }
  return static_cast<long>(a.c[0]);
}

std::string ResidueField::to_string(const RElem& a) const {
  if (p_ == 0) return a.q.get_str();
  if (m_ == 1) return std::to_string(a.c[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = m_ - 1; i >= 0; --i) {
    if (a.c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << a.c[i];
    } else {
      if (a.c[i] != 1) os << a.c[i] << "*";
      os << gen_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

RElem ResidueField::embed_from_base(const RElem& x) const {
  if (!base_) return x;
  if (base_->m_ == 1) return from_int(static_cast<long>(x.c[0]));
  RElem r = zero();
  RElem pw = one();
  for (int i = 0; i < base_->m_; ++i) {
    if (x.c[i] != 0) r = add(r, mul(from_int(static_cast<long>(x.c[i])), pw));
    pw = mul(pw, base_gen_image_);
  }
  return r;
}

namespace {

// Solves A v = b over F_p; A is n x n column-major given as columns.
std::vector<std::int64_t> solve_mod_p(std::vector<std::vector<std::int64_t>> cols,
                                      std::vector<std::int64_t> b, int p) {
  const int n = static_cast<int>(b.size());
  auto md = [p](std::int64_t v) {
    v %= p;
    return v < 0 ? v + p : v;
  };
  auto inv = [&](std::int64_t a) {
    std::int64_t r = 1, base = md(a);
    std::int64_t e = p - 2;
    while (e > 0) {
      if (e & 1) r = md(r * base);
      base = md(base * base);
      e >>= 1;
    }
    return r;
  };
  // Row-major augmented matrix.
  std::vector<std::vector<std::int64_t>> A(n, std::vector<std::int64_t>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = md(cols[j][i]);
    A[i][n] = md(b[i]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) fail(ErrorKind::kUnsupportedExtension, "singular basis change");
    std::swap(A[piv], A[col]);
    std::int64_t iv = inv(A[col][col]);
    for (int j = col; j <= n; ++j) A[col][j] = md(A[col][j] * iv);
    for (int r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      std::int64_t f = A[r][col];
      for (int j = col; j <= n; ++j) A[r][j] = md(A[r][j] - f * A[col][j]);
    }
  }
  std::vector<std::int64_t> v(n);
  for (int i = 0; i < n; ++i) v[i] = A[i][n];
  return v;
}

}  // namespace

ResFieldPtr ResidueField::extend(const RPoly& minpoly,
                                 const std::string& gen) const {
  auto self = shared_from_this();
  RPoly mp = rp::trim(*this, minpoly);
  if (mp.deg() < 1) {
    fail(ErrorKind::kInvalidArgument, "minimal polynomial must be nonconstant");
  }
  if (mp.deg() == 1) return self;
  if (p_ == 0) {
    fail(ErrorKind::kUnsupportedExtension,
         "the rationals admit only linear extensions in this model; " +
             rp::to_string(*this, mp) + " is not linear");
  }
  if (!rp::is_irreducible(*this, mp)) {
    fail(ErrorKind::kInvalidArgument,
         rp::to_string(*this, mp) + " is not irreducible over " + describe());
  }
  mp = rp::monic(*this, mp);
  const int k = mp.deg();
  auto f = make_field();
  f->p_ = p_;
  f->gen_ = gen;
  f->base_ = self;
  if (m_ == 1) {
    f->m_ = k;
    f->mod_.resize(k);
    for (int i = 0; i < k; ++i) f->mod_[i] = mp.c[i].c[0];
    return f;
  }
  // Composite case: build F_p[x]/(M) with deg M = m*k, locate the old
  // generator and a root of mp there, then rebase on that root.
  const int n = m_ * k;
  auto Fp = prime_field(p_);
  std::shared_ptr<ResidueField> big;
  for (std::uint64_t idx = 0;; ++idx) {
    RPoly cand;
    std::uint64_t t = idx;
    for (int i = 0; i < n; ++i) {
      cand.c.push_back(Fp->from_int(static_cast<long>(t % p_)));
      t /= p_;
    }
    cand.c.push_back(Fp->one());
    if (rp::is_irreducible(*Fp, cand)) {
      big = make_field();
      big->p_ = p_;
      big->m_ = n;
      big->mod_.resize(n);
      for (int i = 0; i < n; ++i) big->mod_[i] = cand.c[i].c[0];
      break;
    }
  }
  RPoly old_mod;
  for (int i = 0; i < m_; ++i) old_mod.c.push_back(big->from_int(mod_[i]));
  old_mod.c.push_back(big->one());
  auto beta_roots = rp::roots(*big, old_mod);
  RElem beta = beta_roots.front().first;
  auto embed_old = [&](const RElem& x) {
    RElem r = big->zero();
    RElem pw = big->one();
    for (int i = 0; i < m_; ++i) {
      if (x.c[i] != 0) r = big->add(r, big->mul(big->from_int(x.c[i]), pw));
      pw = big->mul(pw, beta);
    }
    return r;
  };
  RPoly mp_big;
  for (const auto& c : mp.c) mp_big.c.push_back(embed_old(c));
  auto gamma_roots = rp::roots(*big, mp_big);
  RElem gamma = gamma_roots.front().first;
  // Minimal polynomial of gamma over F_p.
  std::vector<std::vector<std::int64_t>> cols;
  RElem pw = big->one();
  for (int j = 0; j < n; ++j) {
    cols.push_back(pw.c);
    pw = big->mul(pw, gamma);
  }
  // pw = gamma^n; solve sum v_j gamma^j = gamma^n.
  std::vector<std::int64_t> v;
  try {
    v = solve_mod_p(cols, pw.c, p_);
  } catch (const Error&) {
    fail(ErrorKind::kUnsupportedExtension,
         "adjoined root does not generate the composite field");
  }
  f->m_ = n;
  f->mod_.resize(n);
  for (int j = 0; j < n; ++j) f->mod_[j] = f->md(-v[j]);
  // beta in the gamma basis.
  f->base_gen_image_ = f->zero();
  f->base_gen_image_.c = solve_mod_p(cols, beta.c, p_);
  return f;
}

// ---------------------------------------------------------------------------
// Polynomials over a residue field.

namespace rp {

RPoly trim(const ResidueField& F, RPoly a) {
  while (!a.c.empty() && F.is_zero(a.c.back())) a.c.pop_back();
  return a;
}

RPoly constant(const ResidueField& F, const RElem& v) {
  RPoly r;
  r.c.push_back(v);
  return trim(F, r);
}

RPoly monomial(const ResidueField& F, const RElem& v, int k) {
  RPoly r;
  r.c.assign(k + 1, F.zero());
  r.c[k] = v;
  return trim(F, r);
}

RPoly x(const ResidueField& F) { return monomial(F, F.one(), 1); }

RPoly linear(const ResidueField& F, const RElem& root) {
  RPoly r;
  r.c.push_back(F.neg(root));
  r.c.push_back(F.one());
  return r;
}

RPoly add(const ResidueField& F, const RPoly& a, const RPoly& b) {
  RPoly r;
  size_t n = std::max(a.c.size(), b.c.size());
  r.c.resize(n, F.zero());
  for (size_t i = 0; i < n; ++i) {
    if (i < a.c.size() && i < b.c.size()) {
      r.c[i] = F.add(a.c[i], b.c[i]);
    } else if (i < a.c.size()) {
      r.c[i] = a.c[i];
    } else {
      r.c[i] = b.c[i];
    }
  }
  return trim(F, r);
}

RPoly neg(const ResidueField& F, const RPoly& a) {
  RPoly r = a;
  for (auto& c : r.c) c = F.neg(c);
  return r;
}

RPoly sub(const ResidueField& F, const RPoly& a, const RPoly& b) {
  return add(F, a, neg(F, b));
}

RPoly mul(const ResidueField& F, const RPoly& a, const RPoly& b) {
  if (a.is_zero() || b.is_zero()) return RPoly{};
  RPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
  }
  return trim(F, r);
}

RPoly scale(const ResidueField& F, const RPoly& a, const RElem& s) {
  RPoly r = a;
  for (auto& c : r.c) c = F.mul(c, s);
  return trim(F, r);
}

RPoly shift(const RPoly& a, int k) {
  if (a.is_zero()) return a;
  RPoly r;
  RElem z = a.c[0];
  // Zero of the same shape as the coefficients.
  z.q = 0;
  for (auto& v : z.c) v = 0;
  r.c.assign(k, z);
  r.c.insert(r.c.end(), a.c.begin(), a.c.end());
  return r;
}

std::pair<RPoly, RPoly> divmod(const ResidueField& F, const RPoly& a,
                               const RPoly& b) {
  if (b.is_zero()) fail(ErrorKind::kInvalidArgument, "polynomial division by 0");
  RPoly r = trim(F, a);
  RPoly q;
  if (r.deg() < b.deg()) return {q, r};
  q.c.assign(r.deg() - b.deg() + 1, F.zero());
  RElem ilc = F.inv(b.c.back());
  while (!r.is_zero() && r.deg() >= b.deg()) {
    int k = r.deg() - b.deg();
    RElem f = F.mul(r.c.back(), ilc);
    q.c[k] = f;
    for (int i = 0; i <= b.deg(); ++i) {
      r.c[i + k] = F.sub(r.c[i + k], F.mul(f, b.c[i]));
    }
    r.c.pop_back();
    r = trim(F, r);
  }
  return {trim(F, q), r};
}

RPoly rem(const ResidueField& F, const RPoly& a, const RPoly& b) {
  return divmod(F, a, b).second;
}

RPoly quo(const ResidueField& F, const RPoly& a, const RPoly& b) {
  return divmod(F, a, b).first;
}

RPoly monic(const ResidueField& F, const RPoly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.c.back()));
}

RPoly gcd(const ResidueField& F, const RPoly& a, const RPoly& b) {
  RPoly u = trim(F, a), v = trim(F, b);
  while (!v.is_zero()) {
    RPoly r = rem(F, u, v);
    u = v;
    v = r;
  }
  return monic(F, u);
}

RPoly xgcd(const ResidueField& F, const RPoly& a, const RPoly& b, RPoly* s,
           RPoly* t) {
  RPoly r0 = trim(F, a), r1 = trim(F, b);
  RPoly s0 = constant(F, F.one()), s1;
  RPoly t0, t1 = constant(F, F.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(F, r0, r1);
    r0 = r1;
    r1 = r;
    RPoly s2 = sub(F, s0, mul(F, q, s1));
    s0 = s1;
    s1 = s2;
    RPoly t2 = sub(F, t0, mul(F, q, t1));
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) {
    *s = s0;
    *t = t0;
    return r0;
  }
  RElem il = F.inv(r0.c.back());
  *s = scale(F, s0, il);
  *t = scale(F, t0, il);
  return scale(F, r0, il);
}

RPoly deriv(const ResidueField& F, const RPoly& a) {
  RPoly r;
  for (int i = 1; i <= a.deg(); ++i) {
    r.c.push_back(F.mul(F.from_int(static_cast<long>(i)), a.c[i]));
  }
  return trim(F, r);
}

RElem eval(const ResidueField& F, const RPoly& a, const RElem& v) {
  RElem r = F.zero();
  for (int i = a.deg(); i >= 0; --i) r = F.add(F.mul(r, v), a.c[i]);
  return r;
}

RPoly compose(const ResidueField& F, const RPoly& a, const RPoly& b) {
  RPoly r;
  for (int i = a.deg(); i >= 0; --i) {
    r = add(F, mul(F, r, b), constant(F, a.c[i]));
  }
  return r;
}

RPoly powmod(const ResidueField& F, const RPoly& a, const Int& e,
             const RPoly& m) {
  RPoly result = rem(F, constant(F, F.one()), m);
  RPoly base = rem(F, a, m);
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = rem(F, mul(F, result, base), m);
    k >>= 1;
    if (k > 0) base = rem(F, mul(F, base, base), m);
  }
  return result;
}

RPoly pow(const ResidueField& F, const RPoly& a, int e) {
  RPoly r = constant(F, F.one());
  for (int i = 0; i < e; ++i) r = mul(F, r, a);
  return r;
}

bool eq(const ResidueField& F, const RPoly& a, const RPoly& b) {
  RPoly x = trim(F, a), y = trim(F, b);
  if (x.c.size() != y.c.size()) return false;
  for (size_t i = 0; i < x.c.size(); ++i) {
    if (!F.eq(x.c[i], y.c[i])) return false;
  }
  return true;
}

bool divides(const ResidueField& F, const RPoly& d, const RPoly& a) {
  return rem(F, a, d).is_zero();
}

int multiplicity(const ResidueField& F, const RPoly& a, const RPoly& d) {
  if (a.is_zero()) fail(ErrorKind::kInvalidArgument, "multiplicity in zero");
  if (d.deg() < 1) fail(ErrorKind::kInvalidArgument, "multiplicity of a unit");
  int k = 0;
  RPoly cur = a;
  while (true) {
    auto [q, r] = divmod(F, cur, d);
    if (!r.is_zero()) break;
    cur = q;
    ++k;
  }
  return k;
}

namespace {

RPoly pth_root_poly(const ResidueField& F, const RPoly& a) {
  const int p = F.characteristic();
  RPoly r;
  for (int i = 0; i <= a.deg(); i += p) r.c.push_back(F.pth_root(a.c[i]));
  return trim(F, r);
}

void squarefree_rec(const ResidueField& F, const RPoly& f, int mult,
                    std::vector<std::pair<RPoly, int>>* out) {
  if (f.deg() < 1) return;
  RPoly c = gcd(F, f, deriv(F, f));
  RPoly w = quo(F, f, c);
  int i = 1;
  while (w.deg() >= 1) {
    RPoly y = gcd(F, w, c);
    RPoly fac = quo(F, w, y);
    if (fac.deg() >= 1) out->push_back({monic(F, fac), i * mult});
    w = y;
    c = quo(F, c, y);
    ++i;
  }
  if (c.deg() >= 1) {
    if (F.is_rational()) {
      fail(ErrorKind::kInvalidArgument, "square-free decomposition stalled");
    }
    squarefree_rec(F, pth_root_poly(F, monic(F, c)),
                   mult * F.characteristic(), out);
  }
}

void edf(const ResidueField& F, const RPoly& g, int d, std::mt19937_64& rng,
         std::vector<RPoly>* out) {
  if (g.deg() == d) {
    out->push_back(monic(F, g));
    return;
  }
  const Int q = F.order();
  Int qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  for (int attempt = 0; attempt < 4000; ++attempt) {
    RPoly a;
    for (int i = 0; i < g.deg(); ++i) a.c.push_back(F.random(rng));
    a = trim(F, a);
    if (a.deg() < 1) continue;
    RPoly b;
    if (F.characteristic() == 2) {
      // Trace to F_2 of a over F_{q^d}.
      int steps = F.degree() * d;
      RPoly t = rem(F, a, g), acc = t;
      for (int i = 1; i < steps; ++i) {
        t = rem(F, mul(F, t, t), g);
        acc = add(F, acc, t);
      }
      b = acc;
    } else {
      b = sub(F, powmod(F, a, (qd - 1) / 2, g), constant(F, F.one()));
    }
    RPoly h = gcd(F, g, b);
    if (h.deg() > 0 && h.deg() < g.deg()) {
      edf(F, h, d, rng, out);
      edf(F, quo(F, g, h), d, rng, out);
      return;
    }
  }
  fail(ErrorKind::kInvalidArgument, "equal-degree splitting did not converge");
}

std::vector<std::pair<RPoly, int>> factor_sqfree_fq(const ResidueField& F,
                                                    const RPoly& f) {
  std::vector<std::pair<RPoly, int>> ddf;
  RPoly fs = monic(F, f);
  RPoly h = x(F);
  const Int q = F.order();
  int i = 1;
  while (fs.deg() >= 2 * i) {
    h = powmod(F, h, q, fs);
    RPoly g = gcd(F, fs, sub(F, h, x(F)));
    if (g.deg() >= 1) {
      ddf.push_back({g, i});
      fs = quo(F, fs, g);
      h = rem(F, h, fs);
    }
    ++i;
  }
  if (fs.deg() >= 1) ddf.push_back({fs, fs.deg()});
  std::vector<std::pair<RPoly, int>> out;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (auto& [g, d] : ddf) {
    std::vector<RPoly> parts;
    edf(F, g, d, rng, &parts);
    for (auto& p : parts) out.push_back({p, 1});
  }
  return out;
}

std::vector<std::pair<RPoly, int>> factor_sqfree_q(const ResidueField& F,
                                                   const RPoly& f) {
  // Clear denominators and content.
  Int l = 1;
  for (const auto& c : f.c) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.q.get_den_mpz_t());
  }
  std::vector<Int> z;
  for (const auto& c : f.c) {
    Rat v = c.q * l;
    z.push_back(v.get_num());
  }
  Int g = 0;
  for (auto& v : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  for (auto& v : z) v /= g;
  if (z.back() < 0) {
    for (auto& v : z) v = -v;
  }
  std::vector<std::pair<RPoly, int>> out;
  for (const auto& fac : factor_squarefree_integer(z)) {
    RPoly r;
    for (const auto& v : fac) r.c.push_back(F.from_int(v));
    out.push_back({monic(F, trim(F, r)), 1});
  }
  return out;
}

}  // namespace

std::vector<std::pair<RPoly, int>> squarefree(const ResidueField& F,
                                              const RPoly& a) {
  std::vector<std::pair<RPoly, int>> out;
  RPoly f = monic(F, trim(F, a));
  squarefree_rec(F, f, 1, &out);
  return out;
}

int cmp(const ResidueField& F, const RPoly& a, const RPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
  for (int i = a.deg(); i >= 0; --i) {
    int c = F.cmp(a.c[i], b.c[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::vector<std::pair<RPoly, int>> factor(const ResidueField& F,
                                          const RPoly& a) {
  RPoly f = trim(F, a);
  if (f.is_zero()) fail(ErrorKind::kInvalidArgument, "factor of zero");
  std::vector<std::pair<RPoly, int>> out;
  for (auto& [sf, mult] : squarefree(F, f)) {
    auto parts = F.is_rational() ? factor_sqfree_q(F, sf) : factor_sqfree_fq(F, sf);
    for (auto& [p, e] : parts) {
      bool merged = false;
      for (auto& o : out) {
        if (eq(F, o.first, p)) {
          o.second += mult * e;
          merged = true;
          break;
        }
      }
      if (!merged) out.push_back({p, mult * e});
    }
  }
  std::sort(out.begin(), out.end(), [&F](const auto& u, const auto& v) {
    return cmp(F, u.first, v.first) < 0;
  });
  return out;
}

bool is_irreducible(const ResidueField& F, const RPoly& a) {
  RPoly f = trim(F, a);
  if (f.deg() < 1) return false;
  if (f.deg() == 1) return true;
  auto fs = factor(F, f);
  return fs.size() == 1 && fs[0].second == 1;
}

std::vector<std::pair<RElem, int>> roots(const ResidueField& F,
                                         const RPoly& a) {
  std::vector<std::pair<RElem, int>> out;
  for (auto& [p, e] : factor(F, a)) {
    if (p.deg() == 1) out.push_back({F.neg(p.c[0]), e});
  }
  return out;
}

std::string to_string(const ResidueField& F, const RPoly& a,
                      const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = a.deg(); i >= 0; --i) {
    if (F.is_zero(a.c[i])) continue;
    std::string cs = F.to_string(a.c[i]);
    bool negative = F.is_rational() && a.c[i].q < 0;
    if (negative) cs = Rat(-a.c[i].q).get_str();
    bool compound = cs.find(' ') != std::string::npos;
    if (!first) os << (negative ? " - " : " + ");
    if (first && negative) os << "-";
    first = false;
    if (i == 0) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (cs != "1") os << (compound ? "(" + cs + ")" : cs) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace rp
}  // namespace berkram
