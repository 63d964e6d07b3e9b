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

#include <gtest/gtest.h>

#include <json.hpp>

#include "berkram/errors.hpp"
#include "berkram/parse.hpp"
#include "berkram/ramlocus.hpp"
#include "support/generators.hpp"

namespace berkram {
namespace {

long total_weight(const std::vector<CriticalPoint>& cps) {
  long s = 0;
  for (const auto& c : cps) s += c.total_weight();
  return s;
}

int vertex_of(const Skeleton& sk, const std::string& text, const FieldPtr& F) {
  return sk.find(parse_point(F, text));
}

TEST(Ramlocus, CriticalPointsOfSquare) {
  auto E = GroundField::equichar_zero();
  auto cps = critical_points(parse_map(E, "z^2"));
  ASSERT_EQ(cps.size(), 2u);
  int finite = 0, inf = 0;
  for (const auto& c : cps) {
    EXPECT_EQ(c.weight, 1);
    EXPECT_EQ(c.mult_m, 2);
    if (c.infinite) {
      ++inf;
    } else {
      ++finite;
      EXPECT_TRUE(c.expansion.is_certified_zero());
    }
  }
  EXPECT_EQ(finite, 1);
  EXPECT_EQ(inf, 1);
}

TEST(Ramlocus, CriticalPointsCubicOrbit) {
  auto E = GroundField::equichar_zero();
  auto cps = critical_points(parse_map(E, "(z^3+1)/z"));
  EXPECT_EQ(total_weight(cps), 4);
  int orbit = 0;
  for (const auto& c : cps) {
    if (c.orbit) {
      orbit += c.orbit_count;
      EXPECT_TRUE(c.parent.is_gauss());
      EXPECT_EQ(c.weight, 1);
    }
    if (c.infinite) EXPECT_EQ(c.weight, 1);
  }
  EXPECT_EQ(orbit, 3);
}

// W = z^2 - t: two simple roots +-t^(1/2), and weight 2 at infinity.
TEST(Ramlocus, CriticalPointsPuiseux) {
  auto E = GroundField::equichar_zero();
  auto phi = parse_map(E, "1/3*z^3 - t*z");
  ASSERT_EQ(wronskian(phi).to_string(), "z^2 - t");
  auto cps = critical_points(phi);
  EXPECT_EQ(total_weight(cps), 4);
  int roots = 0;
  for (const auto& c : cps) {
    if (c.infinite) {
      EXPECT_EQ(c.weight, 2);
      continue;
    }
    ASSERT_FALSE(c.orbit);
    ++roots;
    EXPECT_EQ(c.weight, 1);
    EXPECT_EQ(c.mult_m, 2);
    EXPECT_EQ(c.expansion.ord(), Rat(1, 2));
    auto r = wronskian(phi).eval(c.expansion);
    EXPECT_TRUE(r.is_certified_zero() || r.ord_lower_bound() >= 1) << c.to_string();
  }
  EXPECT_EQ(roots, 2);
}

TEST(Ramlocus, WeightIsMultiplicityMinusOne) {
  auto E = GroundField::equichar_zero();
  testing::Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    auto phi = testing::random_map(E, rng, testing::uniform(rng, 2, 5));
    for (const auto& c : critical_points(phi)) {
      if (c.mult_m > 0) EXPECT_EQ(c.weight, c.mult_m - 1) << phi.to_string();
    }
  }
}

TEST(Ramlocus, WildWeightAtLeastMultiplicity) {
  auto P3 = GroundField::equichar_p(3);
  // z^4 + t z: critical points where 4 z^3 + t = 0 (w = 1, m = 2) and
  // infinity, where m = 4 is prime to 3 so w = 3.
  for (const auto& c : critical_points(parse_map(P3, "z^4 + t*z"))) {
    if (c.infinite) {
      EXPECT_EQ(c.weight, 3);
    }
    if (c.mult_m > 0 && c.mult_m % 3 == 0) EXPECT_GE(c.weight, c.mult_m);
  }
  // z^3 + t z^2 at 0: m = 2 and w = 1; (z^3 + t z) has W = t with no
  // finite critical points.
  EXPECT_EQ(total_weight(critical_points(parse_map(P3, "z^3 + t*z"))), 4);
}

TEST(Ramlocus, HullOfSquare) {
  auto E = GroundField::equichar_zero();
  auto sk = hull_crit(parse_map(E, "z^2"));
  EXPECT_TRUE(sk.is_tree());
  EXPECT_EQ(sk.vertices.size(), 3u);
  EXPECT_GE(sk.find(BerkPoint::gauss(E)), 0);
  EXPECT_GE(sk.find(BerkPoint::infinity()), 0);
}

TEST(Ramlocus, HullMixedCubic) {
  auto M3 = GroundField::mixed(3, 1);
  auto sk = hull_crit(parse_map(M3, "z^3+z"));
  // Orbit of two leaves (roots of 3z^2 = -1) below zeta(0; ord=-1/2),
  // and the ray to infinity.
  const int top = vertex_of(sk, "zeta(0; ord=-1/2)", M3);
  ASSERT_GE(top, 0);
  int orbit = -1;
  for (size_t i = 0; i < sk.vertices.size(); ++i) {
    if (sk.vertices[i].orbit) orbit = static_cast<int>(i);
  }
  ASSERT_GE(orbit, 0);
  EXPECT_EQ(sk.vertices[orbit].orbit_count, 2);
  EXPECT_TRUE(same_point(sk.vertices[orbit].pt, sk.vertices[top].pt));
  EXPECT_GE(sk.find(BerkPoint::infinity()), 0);
}

TEST(Ramlocus, HullCubicOrbitAtGauss) {
  auto E = GroundField::equichar_zero();
  auto sk = hull_crit(parse_map(E, "(z^3+1)/z"));
  EXPECT_GE(sk.find(BerkPoint::gauss(E)), 0);
  EXPECT_GE(sk.find(BerkPoint::infinity()), 0);
  EXPECT_TRUE(sk.is_tree());
}

TEST(Ramlocus, AnnotateSquareAndMobius) {
  auto E = GroundField::equichar_zero();
  auto sk = annotate_skeleton(parse_map(E, "z^2"), hull_crit(parse_map(E, "z^2")), 12);
  for (const auto& e : sk.edges) {
    ASSERT_TRUE(e.m.has_value());
    EXPECT_EQ(*e.m, 2);
  }
  auto mob = parse_map(E, "(z+1)/(z-1)");
  auto base = hull({parse_point(E, "pt(0)"), BerkPoint::infinity(), parse_point(E, "zeta(1; ord=2)")});
  auto a = annotate_skeleton(mob, base, 12);
  for (const auto& v : a.vertices) EXPECT_EQ(v.m.value_or(-1), 1);
  for (const auto& e : a.edges) EXPECT_EQ(e.m.value_or(-1), 1);
}

TEST(Ramlocus, SquareIsOneComponent) {
  auto E = GroundField::equichar_zero();
  auto R = ram_components(parse_map(E, "z^2"));
  EXPECT_TRUE(R.resolved());
  ASSERT_EQ(R.count_max, 1);
  EXPECT_TRUE(R.components[0].contains_infinity);
  EXPECT_EQ(R.components[0].weight, 2);
  EXPECT_TRUE(R.theorem_a_ok && R.tubular_ok && R.hurwitz_ok && R.balance_ok);
  auto j = nlohmann::json::parse(ram_report_json(R));
  EXPECT_EQ(j["component_count"]["max"], 1);
  for (const char* k : {"theorem_a", "tubular", "hurwitz", "balance"}) {
    EXPECT_TRUE(j["verdicts"][k].get<bool>());
  }
}

TEST(Ramlocus, PolynomialsAreConnected) {
  auto E = GroundField::equichar_zero();
  auto M3 = GroundField::mixed(3, 1);
  for (auto [F, s] : std::vector<std::pair<FieldPtr, std::string>>{
           {E, "z^3 + t*z"}, {E, "z^4 - z + 1"}, {E, "z^5 + t^-1*z^2"}, {M3, "z^3+z"}, {M3, "z^4 + 3*z^2"}}) {
    auto R = ram_components(parse_map(F, s));
    EXPECT_TRUE(R.resolved()) << s;
    ASSERT_EQ(R.count_max, 1) << s;
    EXPECT_TRUE(R.components[0].contains_infinity) << s;
    auto T = total_ram_locus(parse_map(F, s));
    bool has_inf = false;
    for (const auto& x : T.points) has_inf |= x.is_infinity();
    EXPECT_TRUE(has_inf) << s;
  }
}

// z^3 = -3/4 has no root in any extension of the form Q_3(3^(1/N)).
TEST(Ramlocus, WildClusterIsReported) {
  auto M3 = GroundField::mixed(3, 1);
  try {
    (void)critical_points(parse_map(M3, "z^4 + 3*z"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedExtension);
  }
}

TEST(Ramlocus, GeneratorExamples) {
  auto E = GroundField::equichar_zero();
  auto cubic = generate_n_component_example(1, 3, E);
  EXPECT_TRUE(cubic.is_polynomial());
  EXPECT_EQ(ram_components(cubic).count_max, 1);
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {2, 5}}) {
    auto phi = generate_n_component_example(n, d, E);
    EXPECT_EQ(phi.degree(), d);
    auto R = ram_components(phi);
    EXPECT_TRUE(R.resolved());
    EXPECT_EQ(R.count_min, n);
    EXPECT_EQ(R.count_max, n);
    for (const auto& C : R.components) EXPECT_GE(C.weight, 2);
  }
  try {
    (void)generate_n_component_example(4, 5, GroundField::mixed(3, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kResidueFieldTooSmall);
  }
}

TEST(Ramlocus, TotalRamification) {
  auto M5 = GroundField::mixed(5, 1);
  auto phi = parse_map(M5, "(z^6 + 5*z + 1)/z");
  auto T = total_ram_locus(phi);
  ASSERT_EQ(T.points.size(), 1u);
  EXPECT_TRUE(T.points[0].is_gauss());
  EXPECT_EQ(phi.degree() % 5, 1);

  auto E = GroundField::equichar_zero();
  auto mob = total_ram_locus(parse_map(E, "(z+1)/(z-1)"));
  EXPECT_TRUE(mob.degenerate);
}

TEST(Ramlocus, TubularProbe) {
  auto E = GroundField::equichar_zero();
  testing::Rng rng(9);
  for (int i = 0; i < 5; ++i) {
    auto phi = testing::random_map(E, rng, testing::uniform(rng, 2, 4));
    EXPECT_EQ(tube_bound(phi), 0);
    EXPECT_TRUE(tubular_probe(phi, Rat(1, 8), 3)) << phi.to_string();
  }
  EXPECT_TRUE(tubular_probe(parse_map(E, "(z+1)/(z-1)"), Rat(1, 8), 3));

  auto M3 = GroundField::mixed(3, 1);
  auto cubic = parse_map(M3, "z^3+z");
  EXPECT_EQ(tube_bound(cubic), Rat(1, 2));
  EXPECT_EQ(local_degree_oracle(cubic, BerkPoint::gauss(M3)), 3);
  EXPECT_EQ(local_degree_oracle(cubic, parse_point(M3, "zeta(0; ord=1/8)")), 1);
  EXPECT_TRUE(tubular_probe(cubic, Rat(1, 8), 3));
}

TEST(Ramlocus, ClassifyBoundaryPoints) {
  auto E = GroundField::equichar_zero();
  auto phi = parse_map(E, "z^2");
  auto R = ram_components(phi);
  auto tags = classify_boundary_points(phi, &R);
  for (size_t i = 0; i < tags.size(); ++i) {
    const auto& v = R.skeleton.vertices[i];
    if (v.pt.is_classical() || v.pt.is_infinity()) {
      EXPECT_EQ(tags[i], "endpoint-critical");
    } else {
      EXPECT_EQ(tags[i], "regular");
    }
  }

  auto P3 = GroundField::equichar_p(3);
  auto frob = parse_map(P3, "z^3");
  auto RF = ram_components(frob);
  for (const auto& t : classify_boundary_points(frob, &RF)) EXPECT_EQ(t, "interior-insep");

  auto M3 = GroundField::mixed(3, 1);
  auto cubic = parse_map(M3, "z^3+z");
  auto RM = ram_components(cubic);
  auto tm = classify_boundary_points(cubic, &RM);
  for (size_t i = 0; i < tm.size(); ++i) {
    const auto& v = RM.skeleton.vertices[i];
    if (v.orbit || !v.pt.is_ball() || v.pt.type() != 2) continue;
    const bool insep = has_inseparable_reduction(cubic, v.pt);
    EXPECT_EQ(insep, tm[i] == "endpoint-insep" || tm[i] == "interior-insep") << v.pt.to_string();
  }
}

class RamlocusProperty : public ::testing::TestWithParam<int> {};

FieldPtr field_for(int mode) {
  switch (mode) {
    case 0: return GroundField::equichar_zero();
    case 1: return GroundField::equichar_p(5);
    default: return GroundField::mixed(3, 1);
  }
}

TEST_P(RamlocusProperty, HurwitzComponentBoundAndContainment) {
  auto F = field_for(GetParam());
  testing::Rng rng(91 + GetParam());
  const int p = F->residue_field()->characteristic();
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    const int d = testing::uniform(rng, 2, 4);
    auto phi = testing::random_map(F, rng, d);
    RamReport R;
    try {
      R = ram_components(phi);
    } catch (const Error& e) {
      // Wild expansions may leave the coefficient tower.
      ASSERT_EQ(e.kind(), ErrorKind::kUnsupportedExtension) << phi.to_string();
      continue;
    }
    ++checked;
    EXPECT_EQ(total_weight(R.crit), 2L * d - 2) << phi.to_string();
    EXPECT_TRUE(R.hurwitz_ok);
    EXPECT_LE(R.count_max, d - 1) << phi.to_string();
    for (const auto& C : R.components) {
      if (C.resolved) EXPECT_GE(C.weight, 2) << phi.to_string();
    }
    if (p == 0 || p > d) {
      for (const auto& pr : R.probes) EXPECT_EQ(pr.m, 1) << phi.to_string() << " " << pr.pt.to_string();
    }
    // Total ramification forces the whole hull to be ramified.
    auto T = total_ram_locus(phi);
    if (!T.points.empty()) {
      for (const auto& e : R.skeleton.edges) {
        if (e.note != "probe" && e.m) EXPECT_GT(*e.m, 1) << phi.to_string();
      }
    }
  }
  EXPECT_GE(checked, 12);
}

INSTANTIATE_TEST_SUITE_P(Modes, RamlocusProperty, ::testing::Values(0, 1, 2));

}  // namespace
}  // namespace berkram
