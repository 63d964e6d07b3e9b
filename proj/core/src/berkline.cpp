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

#include "berkram/berkline.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "berkram/errors.hpp"
#include "json.hpp"

namespace berkram {

namespace {

// ord(d) >= s, deciding from the available precision.
bool ord_at_least(const FieldElement& d, const Rat& s) {
  if (!d.terms().empty()) return d.terms().front().e >= s;
  if (d.is_exact() || *d.precision() >= s) return true;
  fail(ErrorKind::kZeroWithinPrecision,
       "cannot compare centers: difference known only below " + d.precision()->get_str());
}

// Same terms and the same precision: two truncations of one expansion.
bool identical(const FieldElement& a, const FieldElement& b) {
  if (a.precision() != b.precision() || a.terms().size() != b.terms().size()) return false;
  const auto& C = *a.field()->coeff_field();
  for (size_t i = 0; i < a.terms().size(); ++i) {
    if (a.terms()[i].e != b.terms()[i].e || !C.eq(a.terms()[i].c, b.terms()[i].c)) return false;
  }
  return true;
}

ExtRat radius(const BerkPoint& x) {
  return x.is_ball() ? ExtRat::of(x.s()) : ExtRat::inf();
}

}  // namespace

BerkPoint BerkPoint::classical(const FieldElement& a) {
  BerkPoint p;
  p.kind_ = Kind::kClassical;
  p.a_ = a;
  return p;
}

BerkPoint BerkPoint::infinity() { return BerkPoint(); }

BerkPoint BerkPoint::ball(const FieldElement& a, const Rat& s) {
  BerkPoint p;
  p.kind_ = Kind::kBall;
  p.a_ = a.exact_part_below(s);
  p.s_ = s;
  return p;
}

BerkPoint BerkPoint::gauss(const FieldPtr& F) { return ball(FieldElement::zero(F), 0); }

int BerkPoint::type() const {
  if (kind_ != Kind::kBall) return 1;
  return a_.field()->in_value_group(s_) ? 2 : 3;
}

bool BerkPoint::is_gauss() const {
  return kind_ == Kind::kBall && s_ == 0 && ord_at_least(a_, 0);
}

BerkPoint BerkPoint::with_field(const FieldPtr& F) const {
  BerkPoint p = *this;
  if (kind_ != Kind::kInfinity) p.a_ = a_.with_field(F);
  return p;
}

std::string BerkPoint::to_string() const {
  switch (kind_) {
    case Kind::kInfinity: return "inf";
    case Kind::kClassical: return "pt(" + a_.to_string() + ")";
    case Kind::kBall: return "zeta(" + a_.to_string() + "; ord=" + s_.get_str() + ")";
  }
  return "?";
}

bool same_point(const BerkPoint& x, const BerkPoint& y) {
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case BerkPoint::Kind::kInfinity: return true;
    case BerkPoint::Kind::kBall:
      return x.s() == y.s() && ord_at_least(x.center() - y.center(), x.s());
    case BerkPoint::Kind::kClassical: {
      if (identical(x.center(), y.center())) return true;
      FieldElement d = x.center() - y.center();
      if (d.is_certified_zero()) return true;
      if (d.is_certified_nonzero()) return false;
      fail(ErrorKind::kZeroWithinPrecision, "classical points equal within precision");
    }
  }
  return false;
}

Order compare(const BerkPoint& x, const BerkPoint& y) {
  if (same_point(x, y)) return Order::kEqual;
  if (x.is_infinity()) return Order::kGreater;
  if (y.is_infinity()) return Order::kLess;
  auto below = [](const BerkPoint& u, const BerkPoint& v) {
    if (!v.is_ball()) return false;
    if (u.is_ball() && u.s() < v.s()) return false;
    return ord_at_least(u.center() - v.center(), v.s());
  };
  if (below(x, y)) return Order::kLess;
  if (below(y, x)) return Order::kGreater;
  return Order::kIncomparable;
}

bool precedes(const BerkPoint& x, const BerkPoint& y) {
  Order o = compare(x, y);
  return o == Order::kLess || o == Order::kEqual;
}

BerkPoint join(const BerkPoint& x, const BerkPoint& y) {
  if (x.is_infinity() || y.is_infinity()) return BerkPoint::infinity();
  ExtRat rx = radius(x), ry = radius(y);
  ExtRat m = rx.infinite ? ry : (ry.infinite ? rx : ExtRat::of(std::min(rx.value, ry.value)));
  FieldElement d = x.center() - y.center();
  if (m.infinite) {
    if (d.is_certified_zero()) return x;
    if (!d.is_certified_nonzero()) {
      fail(ErrorKind::kZeroWithinPrecision, "classical points equal within precision");
    }
    return BerkPoint::ball(x.center(), d.ord());
  }
  if (ord_at_least(d, m.value)) return BerkPoint::ball(x.center(), m.value);
  return BerkPoint::ball(x.center(), d.ord());
}

ExtRat rho(const BerkPoint& x, const BerkPoint& y) {
  if (same_point(x, y)) return ExtRat::of(0);
  if (!x.is_ball() || !y.is_ball()) return ExtRat::inf();
  BerkPoint j = join(x, y);
  return ExtRat::of((x.s() - j.s()) + (y.s() - j.s()));
}

Valuation seminorm_eval(const Poly& f, const BerkPoint& x) {
  switch (x.kind()) {
    case BerkPoint::Kind::kInfinity:
      fail(ErrorKind::kInvalidArgument, "seminorm at infinity");
    case BerkPoint::Kind::kClassical:
      return f.eval(x.center()).valuation();
    case BerkPoint::Kind::kBall: {
      Poly P = f.taylor_shift(x.center());
      if (P.is_zero()) return Valuation::inf();
      return Valuation::of(gauss_ord(P, x.s()));
    }
  }
  return Valuation::inf();
}

Rat rational_seminorm(const RationalMap& phi, const BerkPoint& x) {
  Valuation vf = seminorm_eval(phi.f(), x);
  Valuation vg = seminorm_eval(phi.g(), x);
  if (vg.infinite) fail(ErrorKind::kInvalidArgument, "pole at " + x.to_string());
  if (vf.infinite) fail(ErrorKind::kInvalidArgument, "zero at " + x.to_string());
  return vf.value - vg.value;
}

TangentDirection TangentDirection::rational(const BerkPoint& at, const RElem& c) {
  TangentDirection t;
  t.at = at;
  t.point = rp::linear(*at.center().field()->residue_field(), c);
  return t;
}

TangentDirection TangentDirection::at_infinity(const BerkPoint& at) {
  TangentDirection t;
  t.at = at;
  t.infinite = true;
  return t;
}

RElem TangentDirection::value() const {
  const auto& K = *at.center().field()->residue_field();
  if (infinite || point.deg() != 1) fail(ErrorKind::kInvalidArgument, "not a rational finite direction");
  return K.neg(point.c[0]);
}

std::string TangentDirection::to_string() const {
  if (infinite) return "inf";
  const auto& K = *at.center().field()->residue_field();
  if (point.deg() == 1) return K.to_string(value());
  return "[" + rp::to_string(K, point, "c") + "]";
}

bool same_direction(const TangentDirection& u, const TangentDirection& v) {
  if (!same_point(u.at, v.at)) return false;
  if (u.infinite || v.infinite) return u.infinite == v.infinite;
  return rp::eq(*u.at.center().field()->residue_field(), u.point, v.point);
}

TangentDirection direction_from(const BerkPoint& x, const BerkPoint& target) {
  if (!x.is_ball()) fail(ErrorKind::kInvalidArgument, "directions live at balls");
  if (x.type() != 2) fail(ErrorKind::kTypeIIIUnsupported, "direction at a type III point");
  if (target.is_infinity()) return TangentDirection::at_infinity(x);
  Order o = compare(target, x);
  if (o == Order::kEqual) fail(ErrorKind::kInvalidArgument, "target equals the base point");
  if (o != Order::kLess) return TangentDirection::at_infinity(x);
  const auto& K = *x.center().field()->residue_field();
  FieldElement d = target.center() - x.center();
  if (!d.terms().empty() && d.terms().front().e == x.s()) {
    return TangentDirection::rational(x, d.leading_coefficient());
  }
  return TangentDirection::rational(x, K.zero());
}

BerkPoint point_in_direction(const BerkPoint& x, const RElem& c, const Rat& depth) {
  const FieldPtr& F = x.center().field();
  FieldElement a = x.center() + FieldElement::lift(F, c) * FieldElement::uniformizer_pow(F, x.s());
  return BerkPoint::ball(a, x.s() + depth);
}

ImageData image_data(const RationalMap& phi, const BerkPoint& x) {
  ImageData out;
  const FieldPtr& F = phi.field();
  switch (x.kind()) {
    case BerkPoint::Kind::kInfinity: {
      if (phi.f().deg() > phi.g().deg()) {
        out.y = BerkPoint::infinity();
      } else if (phi.f().deg() < phi.g().deg()) {
        out.c = FieldElement::zero(F);
        out.y = BerkPoint::classical(out.c);
      } else {
        out.c = phi.f().lc() / phi.g().lc();
        out.y = BerkPoint::classical(out.c);
      }
      return out;
    }
    case BerkPoint::Kind::kClassical: {
      auto v = phi.eval(x.center());
      if (!v) {
        out.y = BerkPoint::infinity();
      } else {
        out.c = *v;
        out.y = BerkPoint::classical(*v);
      }
      return out;
    }
    case BerkPoint::Kind::kBall:
      break;
  }
  const Rat& s = x.s();
  Poly P = phi.f().taylor_shift(x.center());
  Poly Q = phi.g().taylor_shift(x.center());
  Rat mu = gauss_ord(Q, s);
  int j = -1;
  for (int i = 0; i <= Q.deg(); ++i) {
    const auto& q = Q.coeffs()[i];
    if (q.is_certified_nonzero() && q.ord() + s * i == mu) {
      j = i;
      break;
    }
  }
  FieldElement cj = P.coeff(j) / Q.coeffs()[j];
  Poly D = P - Q.scale(cj);
  if (D.is_zero()) fail(ErrorKind::kInvalidArgument, "constant map");
  Rat s1 = gauss_ord(D, s) - mu;
  out.c = cj.exact_part_below(s1);
  Poly D2 = P - Q.scale(out.c);
  out.s = gauss_ord(D2, s) - mu;
  out.y = BerkPoint::ball(out.c, out.s);
  return out;
}

BerkPoint image_point(const RationalMap& phi, const BerkPoint& x) {
  return image_data(phi, x).y;
}

// ---------------------------------------------------------------------------

int Skeleton::find(const BerkPoint& p) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].orbit) continue;
    if (vertices[i].pt.kind() == p.kind() && same_point(vertices[i].pt, p)) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

namespace {

int parent_of(const Skeleton& sk, int v) {
  for (const auto& e : sk.edges) {
    if (e.u == v) return e.v;
  }
  return -1;
}

int add_vertex(Skeleton* sk, const BerkPoint& p) {
  SkVertex v;
  v.pt = p;
  sk->vertices.push_back(v);
  return static_cast<int>(sk->vertices.size()) - 1;
}

void add_edge(Skeleton* sk, int u, int v) {
  SkEdge e;
  e.u = u;
  e.v = v;
  e.length = rho(sk->vertices[u].pt, sk->vertices[v].pt);
  sk->edges.push_back(e);
}

}  // namespace

int Skeleton::insert(const BerkPoint& p) {
  int found = find(p);
  if (found >= 0) return found;
  for (size_t k = 0; k < edges.size(); ++k) {
    SkEdge e = edges[k];
    if (vertices[e.u].orbit) continue;
    if (compare(vertices[e.u].pt, p) == Order::kLess && compare(p, vertices[e.v].pt) == Order::kLess) {
      int w = add_vertex(this, p);
      edges[k].v = w;
      edges[k].length = rho(vertices[e.u].pt, p);
      SkEdge upper = e;
      upper.u = w;
      upper.length = rho(p, vertices[e.v].pt);
      edges.push_back(upper);
      return w;
    }
  }
  if (vertices.empty()) return add_vertex(this, p);
  int root = -1;
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (!vertices[i].orbit && parent_of(*this, static_cast<int>(i)) < 0) {
      root = static_cast<int>(i);
      break;
    }
  }
  if (compare(vertices[root].pt, p) == Order::kLess) {
    int w = add_vertex(this, p);
    add_edge(this, root, w);
    return w;
  }
  // Off the tree: attach below the lowest join with an existing vertex.
  std::optional<BerkPoint> best;
  for (const auto& v : vertices) {
    if (v.orbit) continue;
    BerkPoint j = join(p, v.pt);
    if (!best || precedes(j, *best)) best = j;
  }
  int a = insert(*best);
  if (same_point(*best, p)) return a;
  int w = add_vertex(this, p);
  add_edge(this, w, a);
  return w;
}

bool Skeleton::is_tree() const {
  const size_t n = vertices.size();
  if (n == 0) return false;
  if (edges.size() != n - 1) return false;
  std::vector<size_t> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<size_t(size_t)> find_root = [&](size_t x) {
    return uf[x] == x ? x : uf[x] = find_root(uf[x]);
  };
  for (const auto& e : edges) {
    size_t a = find_root(e.u), b = find_root(e.v);
    if (a == b) return false;
    uf[a] = b;
  }
  return true;
}

Skeleton hull(const std::vector<BerkPoint>& points) {
  if (points.empty()) fail(ErrorKind::kInvalidArgument, "hull of no points");
  std::vector<BerkPoint> V;
  auto add_unique = [&V](const BerkPoint& p) {
    for (const auto& q : V) {
      if (q.kind() == p.kind() && same_point(q, p)) return;
    }
    V.push_back(p);
  };
  for (const auto& p : points) add_unique(p);
  const size_t n = V.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) add_unique(join(V[i], V[j]));
  }
  Skeleton sk;
  for (const auto& p : V) add_vertex(&sk, p);
  for (size_t i = 0; i < V.size(); ++i) {
    int parent = -1;
    for (size_t j = 0; j < V.size(); ++j) {
      if (i == j || compare(V[i], V[j]) != Order::kLess) continue;
      if (parent < 0 || compare(V[j], V[parent]) == Order::kLess) parent = static_cast<int>(j);
    }
    if (parent >= 0) add_edge(&sk, static_cast<int>(i), parent);
  }
  return sk;
}

std::string skeleton_json(const Skeleton& sk, int indent) {
  using J = nlohmann::ordered_json;
  J out;
  J vs = J::array();
  for (size_t i = 0; i < sk.vertices.size(); ++i) {
    const auto& v = sk.vertices[i];
    J o;
    o["id"] = i;
    if (v.pt.is_infinity()) {
      o["center"] = "inf";
      o["ord"] = nullptr;
    } else {
      o["center"] = v.pt.center().to_string();
      o["ord"] = v.pt.is_ball() ? v.pt.s().get_str() : std::string("inf");
    }
    if (v.orbit) {
      const auto& K = *v.pt.center().field()->residue_field();
      o["type"] = "I";
      o["orbit"] = {{"below", v.pt.to_string()},
                    {"directions", rp::to_string(K, *v.orbit, "c")},
                    {"count", v.orbit_count}};
    } else {
      o["type"] = v.pt.type() == 1 ? "I" : (v.pt.type() == 2 ? "II" : "III");
    }
    if (v.critical) o["weight"] = v.weight;
    if (v.m) o["m"] = *v.m;
    if (v.m) o["insep"] = v.insep;
    if (v.component >= 0) o["component"] = v.component;
    if (!v.tag.empty()) o["tag"] = v.tag;
    vs.push_back(o);
  }
  J es = J::array();
  for (const auto& e : sk.edges) {
    J o;
    o["u"] = e.u;
    o["v"] = e.v;
    o["length"] = e.length.to_string();
    if (e.m) o["m"] = *e.m;
    if (e.m_range) {
      o["m_range"] = {e.m_range->first, e.m_range->second};
      o["m_high_end"] = e.high_end;
    }
    if (e.unresolved) o["unresolved"] = true;
    if (!e.note.empty()) o["note"] = e.note;
    es.push_back(o);
  }
  out["vertices"] = vs;
  out["edges"] = es;
  return out.dump(indent);
}

std::string skeleton_dot(const Skeleton& sk) {
  auto esc = [](const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '"') r += '\\';
      r += c;
    }
    return r;
  };
  static const char* kColors[] = {"gray", "gray", "blue", "red", "purple", "orange", "darkgreen"};
  std::ostringstream os;
  os << "graph skeleton {\n";
  for (size_t i = 0; i < sk.vertices.size(); ++i) {
    const auto& v = sk.vertices[i];
    std::string label = v.orbit ? "orbit x" + std::to_string(v.orbit_count) + " below " + v.pt.to_string()
                                : v.pt.to_string();
    if (v.m) label += "\\nm=" + std::to_string(*v.m);
    os << "  v" << i << " [label=\"" << esc(label) << "\"" << (v.critical ? ", shape=box" : "") << "];\n";
  }
  for (const auto& e : sk.edges) {
    int m = e.m.value_or(0);
    os << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.length.to_string()
       << (e.m ? " m=" + std::to_string(m) : std::string()) << "\", color="
       << kColors[std::min(m, 6)] << (e.unresolved ? ", style=dashed" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace berkram
