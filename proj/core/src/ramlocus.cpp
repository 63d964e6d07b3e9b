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
#include "berkram/ramlocus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "berkram/errors.hpp"
#include "json.hpp"

namespace berkram {

namespace {

constexpr int kMaxTreeDepth = 48;
constexpr int kMaxNewtonSteps = 400;
constexpr long kMaxRamIndex = 720;

FieldPtr raise_for(const FieldPtr& F, const Rat& s) {
  return F->in_value_group(s) ? F : F->with_ram_index(F->ram_index_for(s));
}

bool char_zero(const FieldPtr& F) { return F->mode() != FieldMode::kEquicharP; }

// ord of the roots of T, one per Newton polygon segment (T exact, T(0)
// may vanish).
std::vector<Rat> root_ords(const Poly& T) {
  std::vector<std::pair<int, Rat>> pts;
  for (int i = 0; i <= T.deg(); ++i) {
    const auto& c = T.coeffs()[i];
    if (c.is_certified_nonzero()) pts.push_back({i, c.ord()});
  }
  std::vector<std::pair<int, Rat>> hullpts;
  auto slope = [](const std::pair<int, Rat>& a, const std::pair<int, Rat>& b) {
    return Rat((b.second - a.second) / (b.first - a.first));
  };
  for (const auto& p : pts) {
    while (hullpts.size() >= 2 &&
           slope(hullpts[hullpts.size() - 2], hullpts.back()) >= slope(hullpts.back(), p)) {
      hullpts.pop_back();
    }
    hullpts.push_back(p);
  }
  std::vector<Rat> out;
  for (size_t i = 1; i < hullpts.size(); ++i) out.push_back(-slope(hullpts[i - 1], hullpts[i]));
  return out;
}

RPoly strip_low(const ResidueField& K, const RPoly& e) {
  size_t v = 0;
  while (v < e.c.size() && K.is_zero(e.c[v])) ++v;
  RPoly r;
  r.c.assign(e.c.begin() + static_cast<long>(v), e.c.end());
  return rp::trim(K, r);
}

Poly drop_constant(const Poly& T) {
  std::vector<FieldElement> c(T.coeffs().begin() + 1, T.coeffs().end());
  return Poly(T.field(), c);
}

// Newton iteration on the simple root of S nearest c. Stops once the next
// correction has ord >= target and returns c + O(u^ord).
FieldElement newton_root(const Poly& S, FieldElement c, const Rat& target) {
  for (int it = 0; it < kMaxNewtonSteps; ++it) {
    const FieldPtr& F = c.field();
    Poly T = S.with_field(F).taylor_shift(c);
    const FieldElement t0 = T.coeff(0);
    if (t0.is_certified_zero()) return c;
    const FieldElement t1 = T.coeff(1);
    if (!t1.is_certified_nonzero()) {
      fail(ErrorKind::kPrecisionExhausted, "Newton step on a non-simple root");
    }
    const Rat lam = t0.ord() - t1.ord();
    for (int i = 2; i <= T.deg(); ++i) {
      const auto& ti = T.coeffs()[i];
      if (ti.is_certified_nonzero() && ti.ord() + lam * i <= t0.ord()) {
        fail(ErrorKind::kPrecisionExhausted, "Newton step on a non-simple root");
      }
    }
    if (lam >= target) return c.truncate(lam);
    FieldPtr Fl = raise_for(F, lam);
    // Residue ratio only: exact Mixed coefficients grow without bound.
    const auto& K = *F->residue_field();
    RElem ratio = K.div(t0.leading_coefficient(), t1.leading_coefficient());
    c = c.with_field(Fl) - FieldElement::lift(Fl, ratio) * FieldElement::uniformizer_pow(Fl, lam);
  }
  fail(ErrorKind::kPrecisionExhausted, "Newton iteration budget exhausted");
}

Rat leaf_target(const Rat& lam) { return std::max(lam, Rat(0)) + 2; }

struct SqfPart {
  Poly S;
  int w;
};

class CritFinder {
 public:
  CritFinder(const RationalMap& phi, std::vector<SqfPart> parts)
      : phi_(phi), parts_(std::move(parts)) {}

  void explore(const FieldElement& a, const std::optional<Rat>& lo, int depth) {
    if (depth > kMaxTreeDepth) fail(ErrorKind::kPrecisionExhausted, "critical point tree too deep");
    const FieldPtr& F = a.field();
    const auto& K = *F->residue_field();
    std::vector<Poly> T;
    for (const auto& part : parts_) {
      Poly t = part.S.with_field(F).taylor_shift(a);
      if (t.coeff(0).is_certified_zero()) {
        emit_exact(a, part);
        t = drop_constant(t);
      }
      T.push_back(t);
    }
    std::set<Rat> slopes;
    for (const auto& t : T) {
      if (t.deg() < 1) continue;
      for (const Rat& l : root_ords(t)) {
        if (!lo || l > *lo) slopes.insert(l);
      }
    }
    for (const Rat& lam : slopes) {
      FieldPtr Fl = raise_for(F, lam);
      if (Fl->ram_index() > kMaxRamIndex) {
        // Wild clusters whose slopes accumulate without a Puiseux root.
        fail(ErrorKind::kUnsupportedExtension,
             "critical point expansion needs ramification index above " + std::to_string(kMaxRamIndex));
      }
      std::vector<RPoly> E(T.size());
      RPoly prod = rp::constant(K, K.one());
      for (size_t k = 0; k < T.size(); ++k) {
        E[k] = T[k].deg() < 1 ? rp::constant(K, K.one()) : strip_low(K, edge_polynomial(T[k], lam));
        prod = rp::mul(K, prod, E[k]);
      }
      if (prod.deg() < 1) continue;
      const FieldElement al = a.with_field(Fl);
      for (const auto& [P, mult] : rp::factor(K, prod)) {
        if (mult >= 2) {
          if (P.deg() > 1) {
            fail(ErrorKind::kUnsupportedExtension,
                 "clustered critical points in a direction of degree " +
                     std::to_string(P.deg()) + " over the residue field");
          }
          explore(al + branch(Fl, P, lam), lam, depth + 1);
          continue;
        }
        size_t owner = 0;
        while (!rp::divides(K, P, E[owner])) ++owner;
        const SqfPart& part = parts_[owner];
        if (P.deg() == 1) {
          FieldElement r = newton_root(part.S, al + branch(Fl, P, lam), leaf_target(lam));
          if (r.is_exact()) {
            emit_exact(r, part);
          } else {
            CriticalPoint cp;
            cp.expansion = r;
            cp.weight = part.w;
            cp.factor = part.S;
            cp.mult_m = char_zero(F) ? part.w + 1 : 0;
            out.push_back(cp);
          }
        } else {
          CriticalPoint cp;
          cp.expansion = al;
          cp.weight = part.w;
          cp.factor = part.S;
          cp.orbit = P;
          cp.parent = BerkPoint::ball(al, lam);
          cp.orbit_count = P.deg();
          cp.mult_m = char_zero(F) ? part.w + 1 : 0;
          out.push_back(cp);
        }
      }
    }
  }

  std::vector<CriticalPoint> out;

 private:
  static FieldElement branch(const FieldPtr& F, const RPoly& P, const Rat& lam) {
    const auto& K = *F->residue_field();
    return FieldElement::lift(F, K.neg(P.c[0])) * FieldElement::uniformizer_pow(F, lam);
  }

  void emit_exact(const FieldElement& a, const SqfPart& part) {
    CriticalPoint cp;
    cp.expansion = a;
    cp.weight = part.w;
    cp.factor = part.S;
    cp.mult_m = local_degree(phi_, BerkPoint::classical(a));
    out.push_back(cp);
  }

  const RationalMap& phi_;
  std::vector<SqfPart> parts_;
};

BerkPoint crit_point(const CriticalPoint& cp) {
  if (cp.infinite) return BerkPoint::infinity();
  if (cp.orbit) return cp.parent;
  return BerkPoint::classical(cp.expansion);
}

// The same point over a field where it is of type II.
BerkPoint as_type2(const BerkPoint& x) {
  if (!x.is_ball() || x.type() == 2) return x;
  const FieldPtr& F = x.center().field();
  return x.with_field(F->with_ram_index(F->ram_index_for(x.s())));
}

bool is_probe_edge(const SkEdge& e) { return e.note == "probe"; }

struct DirInfo {
  int m_dir;
  int s_dir;
};

DirInfo lookup(const LocalData& L, const TangentDirection& t) {
  for (const auto& D : L.directions) {
    if (same_direction(D.dir, t)) return {D.m_dir, D.s_dir};
  }
  return {L.generic_m_dir, 0};
}

class Annotator {
 public:
  Annotator(const RationalMap& phi, Skeleton* sk, int max_subdiv)
      : phi_(phi), sk_(*sk), budget_(max_subdiv), char0_(char_zero(phi.field())) {}

  void run() {
    for (size_t i = 0; i < sk_.vertices.size(); ++i) annotate_vertex(static_cast<int>(i));
    const size_t n = sk_.edges.size();
    for (size_t k = 0; k < n; ++k) {
      if (is_probe_edge(sk_.edges[k])) continue;
      if (sk_.vertices[sk_.edges[k].u].orbit) {
        certify_orbit(static_cast<int>(k));
      } else {
        certify(static_cast<int>(k), budget_);
      }
    }
  }

 private:
  void annotate_vertex(int i) {
    SkVertex& v = sk_.vertices[i];
    if (v.orbit) {
      if (char0_ && v.critical) v.m = static_cast<int>(v.weight) + 1;
      v.insep = false;
      return;
    }
    switch (v.pt.kind()) {
      case BerkPoint::Kind::kInfinity:
        v.m = local_degree(phi_, v.pt);
        v.insep = !is_separable(phi_);
        break;
      case BerkPoint::Kind::kClassical:
        if (v.pt.center().is_exact()) {
          v.m = local_degree(phi_, v.pt);
        } else if (char0_ && v.critical) {
          v.m = static_cast<int>(v.weight) + 1;
        }
        v.insep = !is_separable(phi_);
        break;
      case BerkPoint::Kind::kBall:
        v.m = local_degree(phi_, v.pt, true);
        v.insep = has_inseparable_reduction(phi_, as_type2(v.pt));
        break;
    }
  }

  const LocalData& local(int i) {
    auto it = cache_.find(i);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(i, directional_data(phi_, sk_.vertices[i].pt, true)).first->second;
  }

  DirInfo toward(int i, int j) {
    const LocalData& L = local(i);
    const SkVertex& t = sk_.vertices[j];
    if (t.orbit) {
      TangentDirection d;
      d.at = L.at;
      d.point = *t.orbit;
      return lookup(L, d);
    }
    return lookup(L, direction_from(L.at, t.pt));
  }

  void certify_orbit(int k) {
    SkEdge& e = sk_.edges[k];
    DirInfo di = toward(e.v, e.u);
    const auto& mu = sk_.vertices[e.u].m;
    if (di.s_dir == 0 && (di.m_dir == 1 || (mu && *mu == di.m_dir))) {
      e.m = di.m_dir;
    } else if (auto mono = monotone(e)) {
      set_range(&e, *mono);
    } else {
      e.unresolved = true;
      e.note = "orbit edge: direction multiplicity " + std::to_string(di.m_dir) + ", surplus " +
               std::to_string(di.s_dir);
    }
  }

  // Lower bound for m at a vertex; critical points have m >= 2.
  static std::optional<int> m_floor(const SkVertex& x) {
    if (x.m) return x.m;
    if (x.critical) return 2;
    return std::nullopt;
  }

  struct Monotone {
    int lo, hi, high_end;
  };

  // With no surplus in the direction of the edge, m is nonincreasing
  // away from the vertex along it.
  std::optional<Monotone> monotone(const SkEdge& e) {
    const SkVertex& u = sk_.vertices[e.u];
    const SkVertex& v = sk_.vertices[e.v];
    if (v.pt.is_ball()) {
      DirInfo di = toward(e.v, e.u);
      if (auto lo = m_floor(u); lo && di.s_dir == 0) return Monotone{*lo, di.m_dir, e.v};
    }
    if (u.pt.is_ball() && !u.orbit) {
      const LocalData& L = local(e.u);
      DirInfo di = lookup(L, TangentDirection::at_infinity(L.at));
      if (auto lo = m_floor(v); lo && di.s_dir == 0) return Monotone{*lo, di.m_dir, e.u};
    }
    return std::nullopt;
  }

  static void set_range(SkEdge* e, const Monotone& mono) {
    if (mono.lo == mono.hi) {
      e->m = mono.lo;
      return;
    }
    e->m_range = {mono.lo, mono.hi};
    e->high_end = mono.high_end;
    e->note = "m monotone along the edge";
  }

  std::optional<int> try_certify(const SkEdge& e) {
    const SkVertex& u = sk_.vertices[e.u];
    const SkVertex& v = sk_.vertices[e.v];
    if (v.pt.is_ball()) {
      DirInfo di = toward(e.v, e.u);
      if (di.s_dir == 0 && (di.m_dir == 1 || (u.m && *u.m == di.m_dir))) return di.m_dir;
    }
    if (u.pt.is_ball()) {
      const LocalData& L = local(e.u);
      DirInfo di = lookup(L, TangentDirection::at_infinity(L.at));
      if (di.s_dir == 0 && (di.m_dir == 1 || (v.m && *v.m == di.m_dir))) return di.m_dir;
    }
    return std::nullopt;
  }

  // Radii strictly between the endpoints of an edge, around the lower
  // endpoint's center.
  struct Span {
    FieldElement a;
    std::optional<Rat> lo, hi;
    bool truncated = false;  // lower endpoint is a truncated expansion

    bool contains(const Rat& r) const { return (!lo || r > *lo) && (!hi || r < *hi); }
    Rat inner() const {
      Rat t = lo && hi ? Rat((*lo + *hi) / 2) : lo ? Rat(*lo + 1) : hi ? Rat(*hi - 1) : Rat(0);
      const int N = a.field()->ram_index();
      for (const Rat& c : {Rat(rat_floor(t * N) / N), Rat(rat_ceil(t * N) / N)}) {
        if (contains(c)) return c;
      }
      return t;
    }
  };

  Span span(const SkEdge& e) const {
    const BerkPoint& u = sk_.vertices[e.u].pt;
    const BerkPoint& v = sk_.vertices[e.v].pt;
    Span sp;
    sp.a = u.center();
    if (u.is_ball()) {
      sp.hi = u.s();
    } else if (!sp.a.is_exact()) {
      sp.hi = *sp.a.precision();
      sp.a = sp.a.exact_part_below(*sp.hi);
      sp.truncated = true;
    }
    if (v.is_ball()) sp.lo = v.s();
    return sp;
  }

  // On radii where neither (f - c g)(z + a) nor g(z + a) has roots, the
  // reduction at every radius is a monomial, so the image center c found at
  // one radius serves the whole range and m is constant there. Returns the
  // root radii inside the span (empty when constancy is certified).
  std::vector<Rat> obstructions(const Span& sp, const BerkPoint& y) {
    const FieldElement c = image_data(phi_, y).c;
    const FieldPtr F = common_field(c.field(), sp.a.field());
    std::vector<Rat> out;
    for (const Poly& P : {Poly(phi_.f() - phi_.g().scale(c)), phi_.g()}) {
      if (P.is_zero()) continue;
      Poly T = P.with_field(common_field(P.field(), F)).taylor_shift(sp.a);
      for (const Rat& r : root_ords(T)) {
        if (sp.contains(r)) out.push_back(r);
      }
    }
    return out;
  }

  void certify(int k, int budget) {
    if (auto m = try_certify(sk_.edges[k])) {
      sk_.edges[k].m = *m;
      return;
    }
    const Span sp = span(sk_.edges[k]);
    const BerkPoint y = BerkPoint::ball(sp.a, sp.inner());
    std::vector<Rat> obs = obstructions(sp, y);
    if (obs.empty() && !sp.truncated) {
      sk_.edges[k].m = local_degree(phi_, y, true);
      return;
    }
    if (budget <= 0) {
      if (auto mono = monotone(sk_.edges[k])) {
        set_range(&sk_.edges[k], *mono);
        return;
      }
      sk_.edges[k].unresolved = true;
      sk_.edges[k].note = "subdivision budget exhausted";
      return;
    }
    BerkPoint split = y;
    if (!obs.empty()) {
      const Rat target = sp.inner();
      Rat best = obs.front();
      for (const Rat& r : obs) {
        if (abs(r - target) < abs(best - target)) best = r;
      }
      split = BerkPoint::ball(sp.a, best);
    }
    const size_t before = sk_.edges.size();
    const int w = sk_.insert(split);
    annotate_vertex(w);
    if (sk_.edges.size() != before + 1 || sk_.edges[k].v != w) {
      fail(ErrorKind::kInvalidArgument, "split point off the edge");
    }
    if (obs.empty()) {
      // Truncated leaf: constant above the split, the rest is left to the
      // nonincreasing test at the split point.
      sk_.edges[before].m = *sk_.vertices[w].m;
    } else {
      certify(static_cast<int>(before), budget - 1);
    }
    certify(k, budget - 1);
  }

  const RationalMap& phi_;
  Skeleton& sk_;
  int budget_;
  bool char0_;
  std::map<int, LocalData> cache_;
};

bool ramified(const SkVertex& v) {
  if (v.m) return *v.m > 1;
  return v.critical;
}

void attach(Skeleton* sk, const Probe& pr) {
  SkVertex v;
  v.pt = pr.pt;
  v.m = pr.m;
  sk->vertices.push_back(v);
  const int w = static_cast<int>(sk->vertices.size()) - 1;
  SkEdge e;
  const bool below = compare(pr.pt, sk->vertices[pr.from].pt) == Order::kLess;
  e.u = below ? w : pr.from;
  e.v = below ? pr.from : w;
  e.length = rho(sk->vertices[e.u].pt, sk->vertices[e.v].pt);
  e.note = "probe";
  sk->edges.push_back(e);
}

void find_components(RamReport* R) {
  Skeleton& sk = R->skeleton;
  const size_t n = sk.vertices.size();
  std::vector<size_t> uf(n), uf_min(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::iota(uf_min.begin(), uf_min.end(), 0);
  std::function<size_t(std::vector<size_t>&, size_t)> root = [&](std::vector<size_t>& u, size_t x) {
    return u[x] == x ? x : u[x] = root(u, u[x]);
  };
  auto unite = [&](std::vector<size_t>& u, size_t a, size_t b) { u[root(u, a)] = root(u, b); };
  std::vector<bool> touches_unresolved(n, false);
  R->unresolved_edges = 0;
  for (const auto& e : sk.edges) {
    if (is_probe_edge(e)) continue;
    if (e.unresolved) {
      ++R->unresolved_edges;
      touches_unresolved[e.u] = touches_unresolved[e.v] = true;
      if (ramified(sk.vertices[e.u]) && ramified(sk.vertices[e.v])) unite(uf_min, e.u, e.v);
      continue;
    }
    if ((e.m && *e.m > 1) || (e.m_range && e.m_range->first > 1)) {
      unite(uf, e.u, e.v);
      unite(uf_min, e.u, e.v);
    }
  }
  // An orbit vertex left on its own stands for orbit_count separate points.
  auto count = [&](std::vector<size_t>& u) {
    std::map<size_t, int> groups;
    for (size_t i = 0; i < n; ++i) {
      if (!ramified(sk.vertices[i])) continue;
      const size_t r = root(u, i);
      int mult = 1;
      if (sk.vertices[i].orbit) {
        bool alone = true;
        for (size_t j = 0; j < n; ++j) {
          if (j != i && ramified(sk.vertices[j]) && root(u, j) == r) alone = false;
        }
        if (alone) mult = sk.vertices[i].orbit_count;
      }
      groups[r] = std::max(groups[r], mult);
    }
    int c = 0;
    for (auto& [r, k] : groups) c += k;
    return c;
  };
  R->count_max = count(uf);
  R->count_min = count(uf_min);

  R->components.clear();
  std::map<size_t, int> id;
  for (size_t i = 0; i < n; ++i) {
    SkVertex& v = sk.vertices[i];
    v.component = -1;
    if (!ramified(v)) continue;
    const size_t r = root(uf, i);
    auto it = id.find(r);
    if (it == id.end()) {
      it = id.emplace(r, static_cast<int>(R->components.size())).first;
      R->components.emplace_back();
    }
    RamComponent& C = R->components[it->second];
    v.component = it->second;
    C.vertices.push_back(static_cast<int>(i));
    if (v.critical) C.weight += v.weight * (v.orbit ? v.orbit_count : 1);
    if (v.m && *v.m == R->d) C.contains_totally_ramified = true;
    if (v.pt.is_infinity() && !v.orbit) C.contains_infinity = true;
    if (touches_unresolved[i]) C.resolved = false;
  }
  // Split lone orbit components into one entry per conjugate.
  std::vector<RamComponent> out;
  for (auto& C : R->components) {
    if (C.vertices.size() == 1 && sk.vertices[C.vertices[0]].orbit) {
      const auto& v = sk.vertices[C.vertices[0]];
      for (int j = 0; j < v.orbit_count; ++j) {
        RamComponent c = C;
        c.weight = v.weight;
        out.push_back(c);
      }
    } else {
      out.push_back(C);
    }
  }
  R->components = out;
}

RamReport build_report(const RationalMap& phi_in, const RamOptions& opt,
                       const std::vector<BerkPoint>& extra) {
  RationalMap phi = phi_in;
  RamReport R;
  R.d = phi.degree();
  R.separable = is_separable(phi);
  const FieldPtr& F = phi.field();
  if (!R.separable) {
    Skeleton sk = hull({BerkPoint::classical(FieldElement::zero(F)), BerkPoint::infinity()});
    sk.insert(BerkPoint::gauss(F));
    sk.insert(BerkPoint::ball(FieldElement::one(F), 1));
    for (const auto& p : extra) sk.insert(p);
    R.skeleton = annotate_skeleton(phi, sk, opt.max_subdiv);
    R.hurwitz_ok = true;
    R.notes.push_back("inseparable map: every point is critical and ramified");
    find_components(&R);
    R.theorem_a_ok = true;
    return R;
  }
  if (R.d <= 1) {
    Skeleton sk;
    sk.insert(BerkPoint::gauss(F));
    for (const auto& p : extra) sk.insert(p);
    R.skeleton = annotate_skeleton(phi, sk, opt.max_subdiv);
    R.tubular_applicable = char_zero(F);
    find_components(&R);
    return R;
  }
  R.crit = critical_points(phi);
  Skeleton sk = hull_crit(phi, R.crit);
  for (const auto& p : extra) sk.insert(p);
  R.skeleton = annotate_skeleton(phi, sk, opt.max_subdiv);

  long total = 0;
  for (const auto& cp : R.crit) total += cp.total_weight();
  R.hurwitz_value = total;
  HurwitzSum hs = hurwitz_sum(phi);
  R.hurwitz_ok = total == 2L * R.d - 2 && !hs.infinite && hs.value == total;

  for (const auto& v : R.skeleton.vertices) {
    if (v.orbit || !v.pt.is_ball()) continue;
    LocalData L = directional_data(phi, v.pt, true);
    if (!L.balance_ok || !L.directional_sum_ok) R.balance_ok = false;
  }

  R.tubular_applicable = char_zero(F);
  if (R.tubular_applicable && opt.probes) {
    const Rat eps = opt.epsilon ? *opt.epsilon : Rat(1, 2 * F->ram_index());
    R.tube_radius = tube_bound(phi) + eps;
    R.probes = tube_probes(phi, R.skeleton, R.tube_radius, opt.rays_per_boundary);
    for (const auto& pr : R.probes) {
      if (pr.m != 1) R.tubular_ok = false;
      attach(&R.skeleton, pr);
    }
  } else if (!R.tubular_applicable) {
    R.notes.push_back("positive characteristic: no tube bound, probes skipped");
  }

  find_components(&R);
  R.theorem_a_ok = R.count_max <= R.d - 1;
  for (const auto& C : R.components) {
    if (C.resolved && C.weight < 2) R.theorem_a_ok = false;
  }
  if (R.unresolved_edges > 0) {
    R.notes.push_back(std::to_string(R.unresolved_edges) +
                      " unresolved edge(s): component count is an interval");
  }
  return R;
}

}  // namespace

std::string CriticalPoint::to_string() const {
  std::string s;
  if (weight_infinite) return "every point (inseparable)";
  if (infinite) {
    s = "inf";
  } else if (orbit) {
    const auto& K = *parent.center().field()->residue_field();
    s = "orbit(" + std::to_string(orbit_count) + " below " + parent.to_string() + " at " +
        rp::to_string(K, *orbit, "c") + ")";
  } else {
    s = expansion.to_string();
  }
  return s + " w=" + std::to_string(weight);
}

std::vector<CriticalPoint> critical_points(const RationalMap& phi) {
  if (!phi.f().is_exact() || !phi.g().is_exact()) {
    fail(ErrorKind::kPrecisionExhausted, "critical points need an exact map");
  }
  Poly W = wronskian(phi);
  std::vector<CriticalPoint> out;
  if (W.is_zero()) {
    CriticalPoint cp;
    cp.weight_infinite = true;
    cp.expansion = FieldElement::zero(phi.field());
    out.push_back(cp);
    return out;
  }
  std::vector<SqfPart> parts;
  if (W.deg() > 0) {
    for (auto& [S, w] : exact::squarefree(W)) {
      if (S.deg() > 0) parts.push_back({S, w});
    }
  }
  CritFinder finder(phi, parts);
  if (!parts.empty()) finder.explore(FieldElement::zero(phi.field()), std::nullopt, 0);
  out = std::move(finder.out);
  const int winf = weight_at_infinity(phi);
  if (winf > 0) {
    CriticalPoint cp;
    cp.infinite = true;
    cp.weight = winf;
    cp.mult_m = local_degree(phi, BerkPoint::infinity());
    out.push_back(cp);
  }
  return out;
}

CriticalPoint refine_critical_point(const RationalMap& phi, const CriticalPoint& cp,
                                    const Rat& target) {
  (void)phi;
  if (cp.infinite || cp.orbit || cp.expansion.is_exact()) return cp;
  CriticalPoint r = cp;
  const Rat& prec = *cp.expansion.precision();
  if (prec >= target) return cp;
  r.expansion = newton_root(cp.factor, cp.expansion.exact_part_below(prec), target);
  return r;
}

Skeleton hull_crit(const RationalMap& phi) { return hull_crit(phi, critical_points(phi)); }

Skeleton hull_crit(const RationalMap& phi, const std::vector<CriticalPoint>& crit) {
  std::vector<BerkPoint> pts;
  for (const auto& cp : crit) {
    if (cp.weight_infinite) fail(ErrorKind::kInvalidArgument, "inseparable map has no critical hull");
    pts.push_back(crit_point(cp));
  }
  if (pts.empty()) fail(ErrorKind::kInvalidArgument, "no critical points");
  Skeleton sk = hull(pts);
  for (const auto& cp : crit) {
    if (cp.orbit) continue;
    SkVertex& v = sk.vertices[sk.find(crit_point(cp))];
    v.critical = true;
    v.weight += cp.weight;
  }
  for (const auto& cp : crit) {
    if (!cp.orbit) continue;
    SkVertex v;
    v.pt = cp.parent;
    v.orbit = cp.orbit;
    v.orbit_count = cp.orbit_count;
    v.critical = true;
    v.weight = cp.weight;
    sk.vertices.push_back(v);
    SkEdge e;
    e.u = static_cast<int>(sk.vertices.size()) - 1;
    e.v = sk.find(cp.parent);
    e.length = ExtRat::inf();
    sk.edges.push_back(e);
  }
  const BerkPoint G = BerkPoint::gauss(phi.field());
  if (sk.find(G) < 0) {
    for (const auto& e : sk.edges) {
      if (sk.vertices[e.u].orbit) continue;
      if (compare(sk.vertices[e.u].pt, G) == Order::kLess &&
          compare(G, sk.vertices[e.v].pt) == Order::kLess) {
        sk.insert(G);
        break;
      }
    }
  }
  return sk;
}

Skeleton annotate_skeleton(const RationalMap& phi, Skeleton sk, int max_subdiv) {
  if (max_subdiv < 0) fail(ErrorKind::kInvalidArgument, "negative subdivision budget");
  Annotator(phi, &sk, max_subdiv).run();
  return sk;
}

RamReport ram_components(const RationalMap& phi, const RamOptions& opt) {
  return build_report(phi, opt, {});
}

TotalRamLocus total_ram_locus(const RationalMap& phi, const RamOptions& opt) {
  TotalRamLocus T;
  const int d = phi.degree();
  if (d <= 1) {
    T.degenerate = true;
    T.points.push_back(BerkPoint::gauss(phi.field()));
    return T;
  }
  std::vector<BerkPoint> extra;
  if (reduce(phi.normalize()).degree_red == d) extra.push_back(BerkPoint::gauss(phi.field()));
  RamReport R = build_report(phi, opt, extra);
  const Skeleton& sk = R.skeleton;
  std::vector<int> tr;
  for (size_t i = 0; i < sk.vertices.size(); ++i) {
    const auto& v = sk.vertices[i];
    if (v.m && *v.m == d) {
      tr.push_back(static_cast<int>(i));
      T.points.push_back(v.pt);
    }
  }
  std::vector<int> uf(sk.vertices.size());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> root = [&](int x) { return uf[x] == x ? x : uf[x] = root(uf[x]); };
  for (const auto& e : sk.edges) {
    if (e.m && *e.m == d) uf[root(e.u)] = root(e.v);
  }
  std::set<int> groups;
  for (int i : tr) groups.insert(root(i));
  T.connected = groups.size() <= 1;
  return T;
}

Rat tube_bound(const RationalMap& phi) {
  const int p = phi.field()->p();
  if (p == 0 || p > phi.degree()) return 0;
  return Rat(1, p - 1);
}

std::vector<Probe> tube_probes(const RationalMap& phi, const Skeleton& sk, const Rat& distance,
                               int rays_per_boundary) {
  std::vector<Probe> out;
  struct Base {
    BerkPoint x;
    int from;
    std::vector<TangentDirection> used;
  };
  std::vector<Base> bases;
  for (size_t i = 0; i < sk.vertices.size(); ++i) {
    const auto& v = sk.vertices[i];
    if (v.orbit || !v.pt.is_ball()) continue;
    Base b{as_type2(v.pt), static_cast<int>(i), {}};
    for (const auto& e : sk.edges) {
      if (is_probe_edge(e)) continue;
      int other = -1;
      if (e.u == static_cast<int>(i)) other = e.v;
      if (e.v == static_cast<int>(i)) other = e.u;
      if (other < 0) continue;
      const auto& o = sk.vertices[other];
      if (o.orbit) {
        TangentDirection t;
        t.at = b.x;
        t.point = *o.orbit;
        b.used.push_back(t);
      } else {
        b.used.push_back(direction_from(b.x, o.pt));
      }
    }
    bases.push_back(b);
  }
  for (const auto& e : sk.edges) {
    if (is_probe_edge(e)) continue;
    const auto& u = sk.vertices[e.u];
    const auto& v = sk.vertices[e.v];
    if (u.orbit || !u.pt.is_ball() || !v.pt.is_ball()) continue;
    Base b{as_type2(BerkPoint::ball(u.pt.center(), (u.pt.s() + v.pt.s()) / 2)), e.v, {}};
    b.used.push_back(TangentDirection::at_infinity(b.x));
    b.used.push_back(direction_from(b.x, u.pt));
    bases.push_back(b);
  }
  for (const auto& b : bases) {
    const auto& K = *b.x.center().field()->residue_field();
    auto unused = [&](const TangentDirection& t) {
      for (const auto& u : b.used) {
        if (same_direction(u, t)) return false;
      }
      return true;
    };
    std::vector<BerkPoint> pts;
    if (unused(TangentDirection::at_infinity(b.x))) {
      pts.push_back(BerkPoint::ball(b.x.center(), b.x.s() - distance));
    }
    const long limit = K.is_rational() ? 64 : std::min<long>(64, K.order().get_si());
    for (long i = 0; i < limit && static_cast<int>(pts.size()) < rays_per_boundary; ++i) {
      RElem c;
      if (K.is_rational()) {
        long k = (i + 1) / 2;
        c = K.from_int(i % 2 == 1 ? k : -k);
      } else {
        c = K.from_index(static_cast<std::uint64_t>(i));
      }
      if (unused(TangentDirection::rational(b.x, c))) pts.push_back(point_in_direction(b.x, c, distance));
    }
    if (static_cast<int>(pts.size()) > rays_per_boundary) pts.resize(rays_per_boundary);
    for (const auto& pt : pts) {
      Probe pr;
      pr.pt = pt;
      pr.from = b.from;
      pr.m = local_degree(phi, pt, true);
      out.push_back(pr);
    }
  }
  return out;
}

bool tubular_probe(const RationalMap& phi, const Rat& epsilon, int rays_per_boundary) {
  if (!char_zero(phi.field())) {
    fail(ErrorKind::kInvalidArgument, "tube probes need a characteristic-zero field");
  }
  if (phi.degree() <= 1) return true;
  Skeleton sk = hull_crit(phi);
  for (const auto& pr : tube_probes(phi, sk, tube_bound(phi) + epsilon, rays_per_boundary)) {
    if (pr.m != 1) return false;
  }
  return true;
}

RationalMap generate_n_component_example(int n, int d, const FieldPtr& F) {
  if (n < 1 || n >= d) fail(ErrorKind::kInvalidArgument, "need 1 <= n < d");
  const FieldElement one = FieldElement::one(F);
  const Poly z = Poly::z(F);
  auto c = [&](long v) { return Poly::constant(FieldElement::from_int(F, v)); };
  if (n == 1) {
    // z^d - z^(d-1): rational critical points 0, (d-1)/d and infinity.
    return RationalMap(z.pow(d) - z.pow(d - 1), Poly::constant(one));
  }
  const int l = n - 1;
  const int D = d - l;
  const auto& K = *F->residue_field();
  if (!K.is_rational() && K.order() <= l) {
    fail(ErrorKind::kResidueFieldTooSmall,
         "need " + std::to_string(l) + " distinct nonzero residues");
  }
  auto from_coeffs = [&](const std::vector<long>& co) {
    Poly r(F);
    for (size_t i = 0; i < co.size(); ++i) r = r + c(co[i]).shift(static_cast<int>(i));
    return r;
  };
  // Candidates for psi, lowest degree first; the first one whose reduction
  // passes the checks below is used.
  std::vector<std::pair<Poly, Poly>> cands;
  if (D == 2) cands.push_back({from_coeffs({2, 0, 1}), from_coeffs({3, -2, 1})});
  if (D == 3) cands.push_back({from_coeffs({3, 3, -1, 1}), from_coeffs({-1, -1, -2, 1})});
  for (int shift = 0; shift < 8; ++shift) {
    Poly f = c(1), g = c(1);
    for (int i = 1; i <= D; ++i) {
      f = f * (z - c(i + shift));
      g = g * (z + c(i + shift));
    }
    cands.push_back({f, g});
    cands.push_back({z.pow(D) + c(1 + shift) * z + c(1), z.pow(D) + c(2 + shift)});
  }
  std::optional<RationalMap> psi;
  for (const auto& [f, g] : cands) {
    if (!exact::coprime(f, g)) continue;
    RationalMap cand(f, g, false);
    ReducedMap red = reduce(cand.normalize());
    if (red.degree_red != D) continue;
    RPoly w = reduce_poly(wronskian(cand));
    if (w.is_zero() || w.deg() != 2 * D - 2) continue;
    psi = cand;
    break;
  }
  if (!psi) fail(ErrorKind::kResidueFieldTooSmall, "no separable reduction of degree " + std::to_string(D));
  // psi(z/t) with numerator and denominator scaled by t^D.
  const FieldElement t = FieldElement::uniformizer_pow(F, 1);
  Poly ft = psi->f().compose_affine(t.inv(), FieldElement::zero(F)).scale(t.pow(D));
  Poly gt = psi->g().compose_affine(t.inv(), FieldElement::zero(F)).scale(t.pow(D));
  Poly num = ft, den = gt;
  for (int i = 1; i <= l; ++i) {
    FieldElement a = FieldElement::lift(F, K.is_rational() ? K.from_int(i) : K.from_index(i));
    num = num * (z - Poly::constant(a));
    if (i >= 2) den = den * (z - Poly::constant(a + t));
  }
  return RationalMap(num, den);
}

std::vector<std::string> classify_boundary_points(const RationalMap& phi, RamReport* report) {
  Skeleton& sk = report->skeleton;
  std::vector<std::string> tags(sk.vertices.size(), "regular");
  const bool insep_map = !is_separable(phi);
  for (size_t i = 0; i < sk.vertices.size(); ++i) {
    SkVertex& v = sk.vertices[i];
    if (insep_map) {
      tags[i] = "interior-insep";
    } else if (!ramified(v)) {
      tags[i] = "regular";
    } else if (v.orbit || !v.pt.is_ball()) {
      tags[i] = "endpoint-critical";
    } else {
      int dirs = 0;
      for (const auto& e : sk.edges) {
        if (is_probe_edge(e) || (e.u != static_cast<int>(i) && e.v != static_cast<int>(i))) continue;
        const bool ram_here = e.unresolved || (e.m && *e.m > 1) ||
                              (e.m_range && (e.m_range->first > 1 ||
                                             (e.high_end == static_cast<int>(i) && e.m_range->second > 1)));
        if (!ram_here) continue;
        const auto& o = sk.vertices[e.u == static_cast<int>(i) ? e.v : e.u];
        dirs += o.orbit ? o.orbit_count : 1;
      }
      for (const auto& pr : report->probes) {
        if (pr.from == static_cast<int>(i) && pr.m > 1) ++dirs;
      }
      if (v.insep) {
        tags[i] = dirs <= 1 ? "endpoint-insep" : "interior-insep";
      } else {
        tags[i] = "regular";
      }
    }
    v.tag = tags[i];
  }
  return tags;
}

std::string ram_report_json(const RamReport& r, int indent) {
  using J = nlohmann::ordered_json;
  J out;
  out["degree"] = r.d;
  out["separable"] = r.separable;
  J cps = J::array();
  for (const auto& cp : r.crit) {
    J o;
    if (cp.infinite) {
      o["point"] = "inf";
    } else if (cp.orbit) {
      const auto& K = *cp.parent.center().field()->residue_field();
      o["point"] = cp.parent.to_string();
      o["orbit"] = rp::to_string(K, *cp.orbit, "c");
      o["count"] = cp.orbit_count;
    } else {
      o["point"] = cp.expansion.to_string();
    }
    o["weight"] = cp.weight;
    if (cp.mult_m > 0) o["m"] = cp.mult_m;
    cps.push_back(o);
  }
  out["critical_points"] = cps;
  J sk = J::parse(skeleton_json(r.skeleton, -1));
  out["vertices"] = sk["vertices"];
  out["edges"] = sk["edges"];
  J comps = J::array();
  for (size_t i = 0; i < r.components.size(); ++i) {
    const auto& C = r.components[i];
    comps.push_back({{"id", i},
                     {"vertices", C.vertices},
                     {"critical_weight", C.weight},
                     {"contains_totally_ramified", C.contains_totally_ramified},
                     {"contains_infinity", C.contains_infinity},
                     {"resolved", C.resolved}});
  }
  out["components"] = comps;
  out["component_count"] = {{"min", r.count_min}, {"max", r.count_max}};
  out["unresolved_edges"] = r.unresolved_edges;
  J probes = J::array();
  for (const auto& pr : r.probes) {
    probes.push_back({{"point", pr.pt.to_string()}, {"from", pr.from}, {"m", pr.m}});
  }
  out["probes"] = probes;
  if (r.tubular_applicable) out["tube_radius"] = r.tube_radius.get_str();
  out["verdicts"] = {{"theorem_a", r.theorem_a_ok},
                     {"tubular", r.tubular_ok},
                     {"hurwitz", r.hurwitz_ok},
                     {"balance", r.balance_ok}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out.dump(indent);
}

}  // namespace berkram
