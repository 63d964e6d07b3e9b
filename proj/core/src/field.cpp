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

#include "berkram/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "berkram/errors.hpp"

namespace berkram {

const char* field_mode_name(FieldMode m) {
  switch (m) {
    case FieldMode::kEquicharZero: return "equichar0";
    case FieldMode::kEquicharP: return "equicharp";
    case FieldMode::kMixed: return "mixed";
  }
  return "?";
}

Rat rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(q);
}

Rat rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(q);
}

long ord_p(const Rat& r, long p) {
  if (r == 0) fail(ErrorKind::kInvalidArgument, "ord_p of zero");
  long k = 0;
  Int n = r.get_num(), d = r.get_den();
  while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
    n /= p;
    ++k;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
    d /= p;
    --k;
  }
  return k;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

namespace {
std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}
std::vector<std::string>& log_store() {
  static std::vector<std::string> v;
  return v;
}
}  // namespace

void RunLog::record(const std::string& event) {
  std::lock_guard<std::mutex> lock(log_mutex());
  auto& v = log_store();
  if (v.size() < 4096 && std::find(v.begin(), v.end(), event) == v.end()) {
    v.push_back(event);
  }
}

std::vector<std::string> RunLog::snapshot() {
  std::lock_guard<std::mutex> lock(log_mutex());
  return log_store();
}

void RunLog::clear() {
  std::lock_guard<std::mutex> lock(log_mutex());
  log_store().clear();
}

// ---------------------------------------------------------------------------

FieldPtr GroundField::equichar_zero(int precision_units) {
  auto* f = new GroundField();
  f->mode_ = FieldMode::kEquicharZero;
  f->units_ = precision_units;
  f->res_ = ResidueField::rationals();
  f->coeff_ = f->res_;
  return FieldPtr(f);
}

FieldPtr GroundField::equichar_p(int p, int precision_units, ResFieldPtr tower) {
  auto* f = new GroundField();
  f->mode_ = FieldMode::kEquicharP;
  f->p_ = p;
  f->units_ = precision_units;
  f->res_ = tower ? tower : ResidueField::prime_field(p);
  if (f->res_->characteristic() != p) {
    delete f;
    fail(ErrorKind::kInvalidArgument, "tower characteristic differs from p");
  }
  f->coeff_ = f->res_;
  return FieldPtr(f);
}

FieldPtr GroundField::mixed(int p, int ram_index, int precision_units) {
  if (ram_index < 1) fail(ErrorKind::kInvalidArgument, "ramification index >= 1");
  auto* f = new GroundField();
  f->mode_ = FieldMode::kMixed;
  f->p_ = p;
  f->N_ = ram_index;
  f->base_N_ = ram_index;
  f->units_ = precision_units;
  f->res_ = ResidueField::prime_field(p);
  f->coeff_ = ResidueField::rationals();
  return FieldPtr(f);
}

std::string GroundField::uniformizer_name() const {
  return mode_ == FieldMode::kMixed ? "p" : "t";
}

std::string GroundField::describe() const {
  std::ostringstream os;
  os << field_mode_name(mode_);
  if (p_ > 0) os << " p=" << p_;
  os << " N=" << N_ << " residue=" << res_->describe();
  return os.str();
}

bool GroundField::in_value_group(const Rat& s) const {
  Rat v = s * N_;
  return v.get_den() == 1;
}

int GroundField::ram_index_for(const Rat& s) const {
  Int d = s.get_den();
  Int l;
  mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), Int(N_).get_mpz_t());
  if (!l.fits_sint_p()) fail(ErrorKind::kPrecisionExhausted, "ramification index overflow");
  return static_cast<int>(l.get_si());
}

FieldPtr GroundField::with_ram_index(int N) const {
  if (N == N_) return FieldPtr(new GroundField(*this));
  if (N % N_ != 0) {
    fail(ErrorKind::kInvalidArgument, "new ramification index must be a multiple");
  }
  auto* f = new GroundField(*this);
  f->N_ = N;
  RunLog::record(std::string(mode_ == FieldMode::kMixed
                                 ? "scalar extension to Q(p^(1/"
                                 : "ramification index raised to (1/") +
                 std::to_string(N) + "))");
  return FieldPtr(f);
}

FieldPtr GroundField::extend_coefficients(const RPoly& minpoly,
                                          const std::string& gen) const {
  if (mode_ != FieldMode::kEquicharP) {
    RPoly mp = rp::trim(*res_, minpoly);
    if (mp.deg() == 1) return FieldPtr(new GroundField(*this));
    fail(ErrorKind::kUnsupportedExtension,
         std::string("coefficient extensions are only computable in "
                     "equicharp mode; ") +
             rp::to_string(*res_, mp) + " is not linear");
  }
  auto* f = new GroundField(*this);
  f->res_ = res_->extend(minpoly, gen);
  f->coeff_ = f->res_;
  return FieldPtr(f);
}

bool GroundField::accepts(const GroundField& o) const {
  if (this == &o) return true;
  if (mode_ != o.mode_ || p_ != o.p_) return false;
  if (mode_ == FieldMode::kMixed) return N_ % o.N_ == 0;
  return res_->same_as(*o.res_);
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a.get() == b.get()) return a;
  if (!a) return b;
  if (!b) return a;
  bool ab = a->accepts(*b), ba = b->accepts(*a);
  if (ab && ba) return a->ram_index() >= b->ram_index() ? a : b;
  if (ab) return a;
  if (ba) return b;
  if (a->mode() != FieldMode::kMixed && a->mode() == b->mode() &&
      a->p() == b->p()) {
    // Residue fields differ: one must be an extension of the other.
    for (auto r = a->residue_field(); r; r = r->base()) {
      if (r->same_as(*b->residue_field())) return a;
    }
    for (auto r = b->residue_field(); r; r = r->base()) {
      if (r->same_as(*a->residue_field())) return b;
    }
  }
  fail(ErrorKind::kInvalidArgument,
       "incompatible fields: " + a->describe() + " vs " + b->describe());
}

std::string Valuation::to_string() const {
  return infinite ? std::string("inf") : value.get_str();
}

// ---------------------------------------------------------------------------

namespace {

bool is_mixed(const FieldPtr& F) { return F->mode() == FieldMode::kMixed; }

// Dense coordinates over the basis 1, pi, ..., pi^(N-1).
std::vector<Rat> to_dense(const std::vector<Term>& t, int N, int p) {
  std::vector<Rat> a(N, 0);
  for (const auto& term : t) {
    Rat k = term.e * N;
    if (k.get_den() != 1) {
      fail(ErrorKind::kUnsupportedExtension, "exponent outside (1/N)Z in mixed mode");
    }
    Int kk = k.get_num();
    Int v;
    mpz_fdiv_q_ui(v.get_mpz_t(), kk.get_mpz_t(), static_cast<unsigned long>(N));
    long i = Int(kk - v * N).get_si();
    Rat scale = 1;
    Int pv;
    long vv = v.get_si();
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(vv < 0 ? -vv : vv));
    scale = vv >= 0 ? Rat(pv) : Rat(1) / Rat(pv);
    a[i] += term.c.q * scale;
  }
  return a;
}

std::vector<Term> from_dense(const std::vector<Rat>& a, int N, int p) {
  std::vector<Term> out;
  for (int i = 0; i < N; ++i) {
    if (a[i] == 0) continue;
    long v = ord_p(a[i], p);
    Int pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(v < 0 ? -v : v));
    Rat u = v >= 0 ? Rat(a[i] / Rat(pv)) : Rat(a[i] * Rat(pv));
    Term t;
    t.e = Rat(v) + Rat(i, N);
    t.e.canonicalize();
    t.c.q = u;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end(),
            [](const Term& x, const Term& y) { return x.e < y.e; });
  return out;
}

std::vector<Rat> dense_mul(const std::vector<Rat>& a, const std::vector<Rat>& b,
                           int N, int p) {
  std::vector<Rat> c(N, 0);
  for (int i = 0; i < N; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < N; ++j) {
      if (b[j] == 0) continue;
      int k = i + j;
      if (k < N) {
        c[k] += a[i] * b[j];
      } else {
        c[k - N] += a[i] * b[j] * p;
      }
    }
  }
  return c;
}

std::vector<Rat> dense_inv(const std::vector<Rat>& a, int N, int p) {
  // Column j of M is a * pi^j.
  std::vector<std::vector<Rat>> M(N, std::vector<Rat>(N + 1, 0));
  for (int j = 0; j < N; ++j) {
    std::vector<Rat> e(N, 0);
    e[j] = 1;
    auto col = dense_mul(a, e, N, p);
    for (int i = 0; i < N; ++i) M[i][j] = col[i];
  }
  M[0][N] = 1;
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r) {
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) fail(ErrorKind::kInvalidArgument, "division by zero");
    std::swap(M[piv], M[col]);
    Rat iv = 1 / M[col][col];
    for (int j = col; j <= N; ++j) M[col][j] *= iv;
    for (int r = 0; r < N; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rat f = M[r][col];
      for (int j = col; j <= N; ++j) M[r][j] -= f * M[col][j];
    }
  }
  std::vector<Rat> x(N);
  for (int i = 0; i < N; ++i) x[i] = M[i][N];
  return x;
}

std::optional<Rat> min_prec(const std::optional<Rat>& a, const std::optional<Rat>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

FieldElement::FieldElement(FieldPtr F) : F_(std::move(F)) {}

FieldElement FieldElement::zero(const FieldPtr& F) { return FieldElement(F); }

FieldElement FieldElement::one(const FieldPtr& F) { return from_int(F, 1); }

FieldElement FieldElement::from_int(const FieldPtr& F, long v) {
  return from_rat(F, Rat(v));
}

FieldElement FieldElement::from_rat(const FieldPtr& F, const Rat& v) {
  RElem c;
  if (is_mixed(F)) {
    c.q = v;
  } else {
    if (F->mode() == FieldMode::kEquicharP &&
        mpz_divisible_ui_p(v.get_den_mpz_t(), static_cast<unsigned long>(F->p()))) {
      fail(ErrorKind::kSemanticError,
           "rational " + v.get_str() + " is undefined in characteristic " +
               std::to_string(F->p()));
    }
    c = F->coeff_field()->from_rat(v);
  }
  return monomial(F, c, 0);
}

FieldElement FieldElement::monomial(const FieldPtr& F, const RElem& c,
                                    const Rat& e) {
  FieldElement r(F);
  if (is_mixed(F)) {
    if (c.q == 0) return r;
    Rat k = e * F->ram_index();
    if (k.get_den() != 1) {
      fail(ErrorKind::kUnsupportedExtension,
           "p^(" + e.get_str() + ") is not in Q(p^(1/" +
               std::to_string(F->ram_index()) + "))");
    }
    long v = ord_p(c.q, F->p());
    Int pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(F->p()),
                  static_cast<unsigned long>(v < 0 ? -v : v));
    Term t;
    t.c.q = v >= 0 ? Rat(c.q / Rat(pv)) : Rat(c.q * Rat(pv));
    t.e = e + v;
    r.terms_.push_back(t);
    return r;
  }
  if (F->coeff_field()->is_zero(c)) return r;
  r.terms_.push_back(Term{e, c});
  return r;
}

FieldElement FieldElement::uniformizer_pow(const FieldPtr& F, const Rat& e) {
  RElem one;
  if (is_mixed(F)) {
    one.q = 1;
  } else {
    one = F->coeff_field()->one();
  }
  return monomial(F, one, e);
}

FieldElement FieldElement::lift(const FieldPtr& F, const RElem& r) {
  if (is_mixed(F)) return from_int(F, F->residue_field()->lift_int(r));
  return monomial(F, r, 0);
}

FieldElement FieldElement::big_oh(const FieldPtr& F, const Rat& cap) {
  FieldElement r(F);
  r.prec_ = cap;
  return r;
}

FieldElement FieldElement::from_terms(const FieldPtr& F, std::vector<Term> terms,
                                      std::optional<Rat> precision) {
  FieldElement r(F);
  if (is_mixed(F)) {
    r.terms_ = from_dense(to_dense(terms, F->ram_index(), F->p()),
                          F->ram_index(), F->p());
  } else {
    const auto& K = *F->coeff_field();
    std::map<Rat, RElem> acc;
    for (auto& t : terms) {
      auto it = acc.find(t.e);
      if (it == acc.end()) {
        acc.emplace(t.e, t.c);
      } else {
        it->second = K.add(it->second, t.c);
      }
    }
    for (auto& [e, c] : acc) {
      if (!K.is_zero(c)) r.terms_.push_back(Term{e, c});
    }
  }
  r.prec_ = precision;
  if (precision) {
    while (!r.terms_.empty() && r.terms_.back().e >= *precision) r.terms_.pop_back();
  }
  return r;
}

Valuation FieldElement::valuation() const {
  if (!terms_.empty()) return Valuation::of(terms_.front().e);
  if (is_exact()) return Valuation::inf();
  fail(ErrorKind::kZeroWithinPrecision,
       "element has no terms below precision " + prec_->get_str());
}

Rat FieldElement::ord() const {
  Valuation v = valuation();
  if (v.infinite) fail(ErrorKind::kInvalidArgument, "ord of exact zero");
  return v.value;
}

Rat FieldElement::ord_lower_bound() const {
  if (!terms_.empty()) return terms_.front().e;
  if (prec_) return *prec_;
  fail(ErrorKind::kInvalidArgument, "ord of exact zero");
}

RElem FieldElement::leading_coefficient() const {
  if (terms_.empty()) valuation();  // throws for inexact zero
  if (terms_.empty()) fail(ErrorKind::kInvalidArgument, "leading coefficient of zero");
  if (is_mixed(F_)) return F_->residue_field()->from_rat(terms_.front().c.q);
  return terms_.front().c;
}

RElem FieldElement::residue() const {
  const auto& R = *F_->residue_field();
  if (terms_.empty()) {
    if (is_exact() || *prec_ > 0) return R.zero();
    fail(ErrorKind::kZeroWithinPrecision, "residue undecidable at this precision");
  }
  const Rat& e = terms_.front().e;
  if (e < 0) fail(ErrorKind::kNegativeValuation, "residue of an element with ord < 0");
  if (e > 0) return R.zero();
  return leading_coefficient();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  FieldPtr F = common_field(F_, o.F_);
  std::vector<Term> all = terms_;
  if (o.F_ && F_ && !o.F_->residue_field()->same_as(*F->residue_field())) {
    FieldElement oo = o.with_field(F);
    all.insert(all.end(), oo.terms_.begin(), oo.terms_.end());
  } else if (!F_->residue_field()->same_as(*F->residue_field())) {
    FieldElement me = with_field(F);
    all = me.terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  } else {
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  }
  return from_terms(F, all, min_prec(prec_, o.prec_));
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (is_mixed(F_)) {
    for (auto& t : r.terms_) t.c.q = -t.c.q;
  } else {
    for (auto& t : r.terms_) t.c = F_->coeff_field()->neg(t.c);
  }
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  FieldPtr F = common_field(F_, o.F_);
  FieldElement a = F_->residue_field()->same_as(*F->residue_field()) ? *this : with_field(F);
  FieldElement b = o.F_->residue_field()->same_as(*F->residue_field()) ? o : o.with_field(F);
  std::optional<Rat> prec;
  if (a.prec_) prec = *a.prec_ + (b.terms_.empty() && b.is_exact() ? Rat(0) : b.ord_lower_bound());
  if (b.prec_) {
    Rat pb = *b.prec_ + (a.terms_.empty() && a.is_exact() ? Rat(0) : a.ord_lower_bound());
    prec = prec ? std::min(*prec, pb) : pb;
  }
  if ((a.is_certified_zero()) || (b.is_certified_zero())) return FieldElement(F);
  if (is_mixed(F)) {
    const int N = F->ram_index(), p = F->p();
    auto c = dense_mul(to_dense(a.terms_, N, p), to_dense(b.terms_, N, p), N, p);
    return from_terms(F, from_dense(c, N, p), prec);
  }
  const auto& K = *F->coeff_field();
  std::map<Rat, RElem> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Rat e = x.e + y.e;
      if (prec && e >= *prec) break;
      RElem v = K.mul(x.c, y.c);
      auto it = acc.find(e);
      if (it == acc.end()) {
        acc.emplace(e, v);
      } else {
        it->second = K.add(it->second, v);
      }
    }
  }
  FieldElement r(F);
  for (auto& [e, c] : acc) {
    if (!K.is_zero(c)) r.terms_.push_back(Term{e, c});
  }
  r.prec_ = prec;
  return r;
}

FieldElement FieldElement::inv() const {
  if (terms_.empty()) {
    if (is_exact()) fail(ErrorKind::kInvalidArgument, "division by exact zero");
    fail(ErrorKind::kZeroWithinPrecision, "divisor has no terms below its precision");
  }
  const Rat e0 = terms_.front().e;
  if (is_mixed(F_)) {
    const int N = F_->ram_index(), p = F_->p();
    auto x = dense_inv(to_dense(terms_, N, p), N, p);
    std::optional<Rat> prec;
    if (prec_) prec = -e0 + (*prec_ - e0);
    return from_terms(F_, from_dense(x, N, p), prec);
  }
  const auto& K = *F_->coeff_field();
  RElem c0inv = K.inv(terms_.front().c);
  if (terms_.size() == 1 && is_exact()) return monomial(F_, c0inv, -e0);
  Rat R = prec_ ? *prec_ - e0 : F_->precision_cap();
  // Offsets of the tail relative to the leading term, on a common lattice.
  Int D = 1;
  for (size_t k = 1; k < terms_.size(); ++k) {
    Rat d = terms_[k].e - e0;
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), d.get_den_mpz_t());
  }
  Rat Mr = R * Rat(D);
  Int M = rat_ceil(Mr).get_num();
  if (M > 200000) fail(ErrorKind::kPrecisionExhausted, "series inversion too long");
  const long m = M.get_si();
  std::vector<std::pair<long, RElem>> u;
  for (size_t k = 1; k < terms_.size(); ++k) {
    Rat d = (terms_[k].e - e0) * Rat(D);
    u.push_back({d.get_num().get_si(), K.mul(terms_[k].c, c0inv)});
  }
  std::vector<RElem> b(std::max<long>(m, 1), K.zero());
  b[0] = K.one();
  for (long n = 1; n < m; ++n) {
    RElem acc = K.zero();
    for (auto& [nk, uk] : u) {
      if (nk > n) break;
      if (!K.is_zero(b[n - nk])) acc = K.add(acc, K.mul(uk, b[n - nk]));
    }
    b[n] = K.neg(acc);
  }
  FieldElement r(F_);
  for (long n = 0; n < m; ++n) {
    if (K.is_zero(b[n])) continue;
    r.terms_.push_back(Term{-e0 + Rat(Int(n), D), K.mul(b[n], c0inv)});
  }
  for (auto& t : r.terms_) t.e.canonicalize();
  r.prec_ = -e0 + R;
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inv();
}

FieldElement FieldElement::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  FieldElement r = one(F_);
  FieldElement b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

FieldElement FieldElement::pth_root() const {
  if (F_->mode() != FieldMode::kEquicharP) {
    fail(ErrorKind::kInvalidArgument, "p-th roots are only taken in equicharp mode");
  }
  const int p = F_->p();
  FieldElement r(F_);
  for (const auto& t : terms_) {
    r.terms_.push_back(Term{t.e / p, F_->coeff_field()->pth_root(t.c)});
  }
  if (prec_) r.prec_ = *prec_ / p;
  return r;
}

FieldElement FieldElement::truncate(const Rat& cap) const {
  FieldElement r = *this;
  while (!r.terms_.empty() && r.terms_.back().e >= cap) r.terms_.pop_back();
  r.prec_ = min_prec(prec_, cap);
  return r;
}

FieldElement FieldElement::exact_part_below(const Rat& cap) const {
  FieldElement r = *this;
  while (!r.terms_.empty() && r.terms_.back().e >= cap) r.terms_.pop_back();
  if (prec_ && *prec_ < cap) {
    fail(ErrorKind::kPrecisionExhausted,
         "center known only below " + prec_->get_str() + ", needed " + cap.get_str());
  }
  r.prec_.reset();
  return r;
}

FieldElement FieldElement::with_field(const FieldPtr& F) const {
  FieldElement r = *this;
  if (!F_ || !F) {
    r.F_ = F;
    return r;
  }
  const auto& from = F_->residue_field();
  const auto& to = F->residue_field();
  if (F->mode() != FieldMode::kMixed && !from->same_as(*to)) {
    // Walk the tower from `to` down to `from`, embedding step by step.
    std::vector<ResFieldPtr> chain;
    for (auto cur = to; cur && !cur->same_as(*from); cur = cur->base()) chain.push_back(cur);
    if (chain.empty() || !chain.back()->base() || !chain.back()->base()->same_as(*from)) {
      fail(ErrorKind::kInvalidArgument, "cannot embed between residue fields");
    }
    for (auto& t : r.terms_) {
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) t.c = (*it)->embed_from_base(t.c);
    }
  }
  r.F_ = F;
  return r;
}

bool FieldElement::equals(const FieldElement& o) const {
  return (*this - o).is_certified_zero();
}

namespace {

std::string exponent_str(const Rat& e) {
  if (e.get_den() == 1 && e >= 0) return e.get_str();
  return "(" + e.get_str() + ")";
}

}  // namespace

std::string FieldElement::to_string() const {
  std::ostringstream os;
  const std::string var = F_ ? F_->uniformizer_name() : "t";
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs;
    bool negative = false;
    if (is_mixed(F_) || F_->coeff_field()->is_rational()) {
      Rat q = t.c.q;
      negative = q < 0;
      cs = Rat(negative ? -q : q).get_str();
    } else {
      cs = F_->coeff_field()->to_string(t.c);
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.e == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << var;
      if (t.e != 1) os << "^" << exponent_str(t.e);
    }
  }
  if (prec_) {
    os << (first ? "" : " + ") << "O(" << var << "^" << exponent_str(*prec_) << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace berkram
