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

#include "berkram/errors.hpp"
#include "berkram/mult.hpp"
#include "berkram/parse.hpp"
#include "berkram/ramlocus.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace berkram {
namespace {

const DirectionData* find_dir(const LocalData& L, const TangentDirection& v) {
  for (const auto& D : L.directions) {
    if (same_direction(D.dir, v)) return &D;
  }
  return nullptr;
}

TEST(Mult, FrobeniusLocalDegree) {
  for (int p : {2, 3, 5}) {
    auto P = GroundField::equichar_p(p);
    auto phi = parse_map(P, "z^" + std::to_string(p));
    EXPECT_EQ(local_degree(phi, BerkPoint::gauss(P)), p);
    EXPECT_EQ(local_degree(phi, parse_point(P, "zeta(1 + t; ord=1/2)"), true), p);
    EXPECT_TRUE(has_inseparable_reduction(phi, BerkPoint::gauss(P)));
  }
}

TEST(Mult, MobiusIsUnramified) {
  auto E = GroundField::equichar_zero();
  auto phi = parse_map(E, "(z+1)/(z-1)");
  for (const char* x : {"zeta(0; ord=0)", "zeta(1; ord=3)", "zeta(t; ord=-2)"}) {
    EXPECT_EQ(local_degree(phi, parse_point(E, x)), 1);
  }
  EXPECT_EQ(local_degree_typeIII(phi, parse_point(E, "zeta(0; ord=1/2)")), 1);
}

TEST(Mult, GoodReductionAtGauss) {
  auto M5 = GroundField::mixed(5, 1);
  auto phi = parse_map(M5, "(z^6 + 5*z + 1)/z");
  EXPECT_EQ(local_degree(phi, BerkPoint::gauss(M5)), 6);
  EXPECT_EQ(local_degree_oracle(phi, BerkPoint::gauss(M5)), 6);
}

TEST(Mult, OracleExamples) {
  auto E = GroundField::equichar_zero();
  EXPECT_EQ(local_degree_oracle(parse_map(E, "z^2"), BerkPoint::gauss(E)), 2);
  EXPECT_EQ(local_degree_oracle(parse_map(E, "z+1"), parse_point(E, "zeta(t; ord=3)")), 1);
  auto M3 = GroundField::mixed(3, 1);
  EXPECT_EQ(local_degree_oracle(parse_map(M3, "z^3+z"), parse_point(M3, "zeta(0; ord=1/2)")), 1);
}

TEST(Mult, DirectionalDataSquare) {
  auto E = GroundField::equichar_zero();
  auto G = BerkPoint::gauss(E);
  auto L = directional_data(parse_map(E, "z^2"), G);
  EXPECT_EQ(L.m, 2);
  EXPECT_EQ(L.generic_m_dir, 1);
  ASSERT_EQ(L.directions.size(), 2u);
  for (const auto& D : L.directions) {
    EXPECT_EQ(D.m_dir, 2);
    EXPECT_EQ(D.s_dir, 0);
  }
  EXPECT_NE(find_dir(L, TangentDirection::at_infinity(G)), nullptr);
  EXPECT_NE(find_dir(L, TangentDirection::rational(G, E->residue_field()->zero())), nullptr);
  EXPECT_TRUE(L.balance_ok);
  EXPECT_TRUE(L.directional_sum_ok);
}

TEST(Mult, DirectionalDataGoodReduction) {
  auto E = GroundField::equichar_zero();
  auto L = directional_data(parse_map(E, "(z^2 + t*z)/(t*z^2 + 1)"), BerkPoint::gauss(E));
  EXPECT_EQ(L.m, 2);
  for (const auto& D : L.directions) EXPECT_EQ(D.s_dir, 0);
  EXPECT_TRUE(L.balance_ok);
}

// Degree 3 with two components: the open unit disk (direction 0 at the
// Gauss point) carries surplus d - l = 2, and m(Gauss) = 1.
TEST(Mult, GeneratorSurplusAtGauss) {
  auto E = GroundField::equichar_zero();
  auto phi = generate_n_component_example(2, 3, E);
  auto G = BerkPoint::gauss(E);
  auto L = directional_data(phi, G);
  EXPECT_EQ(L.m, 1);
  auto v0 = TangentDirection::rational(G, E->residue_field()->zero());
  auto v1 = TangentDirection::rational(G, E->residue_field()->one());
  EXPECT_EQ(surplus(phi, G, v0), 2);
  EXPECT_EQ(surplus(phi, G, v1), 0);
  EXPECT_EQ(critical_weight_in_direction(phi, G, v0), 4);
  int total = 0;
  for (const auto& D : L.directions) total += D.s_dir;
  EXPECT_EQ(total, 2);
}

TEST(Mult, InseparableReduction) {
  auto P3 = GroundField::equichar_p(3);
  EXPECT_TRUE(has_inseparable_reduction(parse_map(P3, "z^3"), BerkPoint::gauss(P3)));
  EXPECT_FALSE(has_inseparable_reduction(parse_map(P3, "z^2"), BerkPoint::gauss(P3)));
  // z^3 + z at zeta(0; ord=1/2) over Q_3(3^(1/2)): the conjugate reduces to
  // w, so the reduction is separable and m = 1 on both flanks.
  auto M = GroundField::mixed(3, 2);
  auto phi = parse_map(M, "z^3+z");
  auto x = parse_point(M, "zeta(0; ord=1/2)");
  EXPECT_FALSE(has_inseparable_reduction(phi, x));
  EXPECT_EQ(local_degree_oracle(phi, parse_point(M, "zeta(0; ord=1)")), 1);
  // At zeta(0; ord=-1/2) it reduces to w^3.
  auto y = parse_point(M, "zeta(0; ord=-1/2)");
  EXPECT_TRUE(has_inseparable_reduction(phi, y));
  EXPECT_EQ(local_degree(phi, y), 3);
  EXPECT_EQ(local_degree_oracle(phi, parse_point(M, "zeta(0; ord=-1)")), 3);
}

TEST(Mult, TypeIII) {
  auto E = GroundField::equichar_zero();
  EXPECT_EQ(local_degree_typeIII(parse_map(E, "z^2"), parse_point(E, "zeta(0; ord=1/2)")), 2);
  auto M3 = GroundField::mixed(3, 1);
  auto phi = parse_map(M3, "z^3+z");
  auto x = parse_point(M3, "zeta(0; ord=1/2)");
  ASSERT_EQ(x.type(), 3);
  EXPECT_EQ(local_degree_typeIII(phi, x), local_degree_oracle(phi, x));
  EXPECT_THROW(local_degree(phi, x), Error);
}

TEST(Mult, ClassicalAndInfinity) {
  auto E = GroundField::equichar_zero();
  EXPECT_EQ(local_degree(parse_map(E, "z^3"), BerkPoint::infinity()), 3);
  EXPECT_EQ(local_degree(parse_map(E, "z^3+z^2"), parse_point(E, "pt(0)")), 2);
  EXPECT_EQ(local_degree(parse_map(E, "z^3+z^2"), parse_point(E, "pt(1)")), 1);
}

class MultProperty : public ::testing::TestWithParam<int> {};

FieldPtr field_for(int mode) {
  switch (mode) {
    case 0: return GroundField::equichar_zero();
    case 1: return GroundField::equichar_p(3);
    default: return GroundField::mixed(5, 1);
  }
}

TEST_P(MultProperty, OracleBalanceAndDirectionalSum) {
  auto F = field_for(GetParam());
  testing::Rng rng(41 + GetParam());
  int inconclusive = 0;
  for (int i = 0; i < 60; ++i) {
    auto phi = testing::random_map(F, rng, testing::uniform(rng, 1, 5), GetParam() != 1);
    auto x = testing::random_ball(F, rng);
    auto L = directional_data(phi, x);
    EXPECT_GE(L.m, 1);
    EXPECT_LE(L.m, phi.degree());
    EXPECT_TRUE(L.balance_ok) << phi.to_string() << " at " << x.to_string();
    EXPECT_TRUE(L.directional_sum_ok) << phi.to_string() << " at " << x.to_string();
    int s = 0;
    for (const auto& D : L.directions) {
      s += D.s_dir;
      EXPECT_LE(D.m_dir, L.m);
      EXPECT_GE(D.m_dir, 1);
    }
    EXPECT_EQ(L.m + s, phi.degree());
    try {
      EXPECT_EQ(local_degree_oracle(phi, x), L.m) << phi.to_string() << " at " << x.to_string();
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::kOracleInconclusive);
      ++inconclusive;
    }
  }
  EXPECT_LE(inconclusive, 3);
}

TEST_P(MultProperty, SurplusLowerBound) {
  auto F = field_for(GetParam());
  testing::Rng rng(51 + GetParam());
  int checked = 0;
  for (int i = 0; i < 200 && checked < 30; ++i) {
    auto phi = testing::random_map(F, rng, testing::uniform(rng, 2, 5));
    auto x = testing::uniform(rng, 0, 1) ? BerkPoint::gauss(F) : testing::random_ball(F, rng, -1, 1);
    auto L = directional_data(phi, x);
    for (const auto& D : L.directions) {
      if (D.s_dir == 0 || !D.dir.is_rational()) continue;
      ++checked;
      for (int j = 0; j < 10; ++j) {
        auto y = testing::random_element(F, rng, -2, 2);
        EXPECT_GE(testing::count_preimages(phi, y, D.dir), D.s_dir)
            << phi.to_string() << " at " << x.to_string() << " dir " << D.dir.to_string();
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST_P(MultProperty, CriticalSurplusIdentity) {
  auto F = field_for(GetParam());
  testing::Rng rng(61 + GetParam());
  int checked = 0;
  // Degree 2 keeps p = 3 tame.
  const int dmax = GetParam() == 1 ? 2 : 4;
  for (int i = 0; i < 300 && checked < 30; ++i) {
    auto phi = testing::random_map(F, rng, testing::uniform(rng, 2, dmax));
    auto x = testing::uniform(rng, 0, 1) ? BerkPoint::gauss(F) : testing::random_ball(F, rng, -1, 1);
    auto L = directional_data(phi, x);
    for (const auto& D : L.directions) {
      if (D.s_dir == 0 || D.m_dir != 1 || !D.dir.is_rational()) continue;
      const int p = F->residue_field()->characteristic();
      if (p != 0 && p <= phi.degree()) continue;
      ++checked;
      EXPECT_EQ(critical_weight_in_direction(phi, x, D.dir), 2 * D.s_dir);
      EXPECT_EQ(testing::critical_weight_by_roots(phi, D.dir), 2 * D.s_dir)
          << phi.to_string() << " at " << x.to_string() << " dir " << D.dir.to_string();
    }
  }
  EXPECT_GT(checked, 0);
}

TEST_P(MultProperty, CoordinateInvariance) {
  auto F = field_for(GetParam());
  testing::Rng rng(71 + GetParam());
  for (int i = 0; i < 50; ++i) {
    auto phi = testing::random_map(F, rng, testing::uniform(rng, 1, 4), GetParam() != 1);
    auto x = testing::random_ball(F, rng);
    auto s1 = testing::random_mobius(F, rng);
    auto s2 = testing::random_mobius(F, rng);
    auto psi = compose_mobius(s2, phi, s1);
    auto x1 = image_point(s1.inverse().as_map(), x);
    EXPECT_EQ(local_degree(psi, x1, true), local_degree(phi, x, true))
        << phi.to_string() << " at " << x.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, MultProperty, ::testing::Values(0, 1, 2));

}  // namespace
}  // namespace berkram
