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

#ifndef BERKRAM_BERKLINE_HPP_
#define BERKRAM_BERKLINE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berkram/ratmap.hpp"

namespace berkram {

// Rational or +infinity.
struct ExtRat {
  bool infinite = false;
  Rat value;

  static ExtRat inf() { return {true, 0}; }
  static ExtRat of(const Rat& v) { return {false, v}; }
  std::string to_string() const { return infinite ? "inf" : value.get_str(); }
};

// A classical point, the point infinity, or a ball zeta_{a,s} where s is the
// ord of the radius (disk {ord(z - a) >= s}).
class BerkPoint {
 public:
  enum class Kind { kClassical, kInfinity, kBall };

  BerkPoint() = default;
  static BerkPoint classical(const FieldElement& a);
  static BerkPoint infinity();
  // The center is cut to its exact terms below s.
  static BerkPoint ball(const FieldElement& a, const Rat& s);
  static BerkPoint gauss(const FieldPtr& F);

  Kind kind() const { return kind_; }
  bool is_ball() const { return kind_ == Kind::kBall; }
  bool is_classical() const { return kind_ == Kind::kClassical; }
  bool is_infinity() const { return kind_ == Kind::kInfinity; }
  const FieldElement& center() const { return a_; }
  const Rat& s() const { return s_; }
  // 1, 2 or 3; type II iff s lies in the value group of the center's field.
  int type() const;
  bool is_gauss() const;

  BerkPoint with_field(const FieldPtr& F) const;
  std::string to_string() const;

 private:
  Kind kind_ = Kind::kInfinity;
  FieldElement a_;
  Rat s_;
};

bool same_point(const BerkPoint& x, const BerkPoint& y);

enum class Order { kLess, kGreater, kEqual, kIncomparable };
// x <= y iff the disk of x lies in the disk of y; infinity is the maximum.
Order compare(const BerkPoint& x, const BerkPoint& y);
bool precedes(const BerkPoint& x, const BerkPoint& y);  // x <= y
BerkPoint join(const BerkPoint& x, const BerkPoint& y);
ExtRat rho(const BerkPoint& x, const BerkPoint& y);

// ord of |f(x)|.
Valuation seminorm_eval(const Poly& f, const BerkPoint& x);
// ord|f(x)| - ord|g(x)|; a classical pole raises InvalidArgument.
Rat rational_seminorm(const RationalMap& phi, const BerkPoint& x);

// A direction at a type II ball x = zeta_{a,s}, in the frame
// z -> a + uniformizer^s * z. Finite directions are closed points of the
// residue line: monic irreducible polynomials over k~ (degree 1 for
// k~-rational directions).
struct TangentDirection {
  BerkPoint at;
  bool infinite = false;
  RPoly point;

  static TangentDirection rational(const BerkPoint& at, const RElem& c);
  static TangentDirection at_infinity(const BerkPoint& at);
  int degree() const { return infinite ? 1 : point.deg(); }
  bool is_rational() const { return infinite || point.deg() == 1; }
  RElem value() const;  // residue of a rational finite direction
  std::string to_string() const;
};

bool same_direction(const TangentDirection& u, const TangentDirection& v);

TangentDirection direction_from(const BerkPoint& x, const BerkPoint& target);
// The ball of radius s' around a + uniformizer^s * c, one step below x in
// direction c.
BerkPoint point_in_direction(const BerkPoint& x, const RElem& c, const Rat& depth);

struct ImageData {
  BerkPoint y;
  FieldElement c;  // exact center of the image ball
  Rat s;
};

// phi(x). For a ball the center is c = P_j/Q_j for an index j attaining
// the sup-norm of Q = g(z + a) on the disk, cut below s' (see the README).
ImageData image_data(const RationalMap& phi, const BerkPoint& x);
BerkPoint image_point(const RationalMap& phi, const BerkPoint& x);

// Finite metric tree.
struct SkVertex {
  BerkPoint pt;
  // Collapsed Galois orbit of classical leaves: `orbit_count` leaves
  // below pt in the directions given by the roots of `orbit`.
  std::optional<RPoly> orbit;
  int orbit_count = 0;
  bool critical = false;
  long weight = 0;
  std::optional<int> m;
  bool insep = false;
  int component = -1;
  std::string tag;
};

struct SkEdge {
  int u = 0;  // lower endpoint (u <= v), or the orbit vertex
  int v = 0;
  ExtRat length;
  std::optional<int> m;
  // When m is not constant but known to be monotone along the edge: its
  // bounds, with the larger value at the `high_end` vertex.
  std::optional<std::pair<int, int>> m_range;
  int high_end = -1;
  bool unresolved = false;
  std::string note;
};

struct Skeleton {
  std::vector<SkVertex> vertices;
  std::vector<SkEdge> edges;

  int find(const BerkPoint& p) const;  // -1 if absent
  // Adds p, subdividing the edge it lies on, or attaching it below the
  // lowest vertex above it. Returns its index.
  int insert(const BerkPoint& p);
  bool is_tree() const;
};

Skeleton hull(const std::vector<BerkPoint>& points);

std::string skeleton_json(const Skeleton& sk, int indent = 2);
std::string skeleton_dot(const Skeleton& sk);

}  // namespace berkram

#endif  // BERKRAM_BERKLINE_HPP_
