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
#include "berkram/parse.hpp"
#include "berkram/ratmap.hpp"
#include "support/generators.hpp"

namespace berkram {
namespace {

std::string red(const ReducedMap& R, const RPoly& a) { return rp::to_string(*R.k, a, "z"); }

TEST(Ratmap, NormalizeExamples) {
  auto E = GroundField::equichar_zero();
  auto a = parse_map(E, "(t*z^2 + z)/(z + t)").normalize();
  EXPECT_EQ(a.to_string(), "(t*z^2 + z)/(z + t)");
  auto b = parse_map(E, "(t*z + t^2)/(t*z - t^3)").normalize();
  EXPECT_EQ(b.to_string(), "(z + t)/(z - t^2)");
  auto c = parse_map(E, "(z^2 + t*z)/(t*z^2 + 1)").normalize();
  EXPECT_TRUE(c.normalized());
  EXPECT_EQ(c.to_string(), "(z^2 + t*z)/(t*z^2 + 1)");
}

TEST(Ratmap, ReduceExamples) {
  auto P3 = GroundField::equichar_p(3);
  auto R = reduce(parse_map(P3, "z^2").normalize());
  EXPECT_EQ(R.degree_red, 2);
  EXPECT_EQ(red(R, R.f0), "z^2");
  EXPECT_EQ(red(R, R.g0), "1");
  EXPECT_EQ(R.h_degree(), 0);

  auto E = GroundField::equichar_zero();
  auto R2 = reduce(parse_map(E, "(z^2 + t*z)/(t*z^2 + 1)").normalize());
  EXPECT_EQ(R2.degree_red, 2);
  EXPECT_EQ(red(R2, R2.F), "z^2");
  EXPECT_EQ(red(R2, R2.G), "1");  // Y^2 dehomogenized
  EXPECT_EQ(R2.h_degree(), 0);

  auto M5 = GroundField::mixed(5, 1);
  auto R3 = reduce(parse_map(M5, "(z^6 + 5*z + 1)/z").normalize());
  EXPECT_EQ(R3.degree_red, 6);
  EXPECT_EQ(red(R3, R3.f0), "z^6 + 1");
  EXPECT_EQ(red(R3, R3.g0), "z");
  EXPECT_EQ(R3.h_degree(), 0);
}

TEST(Ratmap, ReduceWithCommonFactor) {
  auto E = GroundField::equichar_zero();
  // Reduces to z(z - 1)/(z(z + 1)): H = z, degree 1.
  auto R = reduce(parse_map(E, "(z^2 - z + t)/(z^2 + z)").normalize());
  EXPECT_EQ(R.degree_red, 1);
  EXPECT_EQ(red(R, R.H_aff), "z");
  EXPECT_EQ(R.h_inf, 0);
}

TEST(Ratmap, WronskianExamples) {
  auto E = GroundField::equichar_zero();
  EXPECT_EQ(wronskian(parse_map(E, "z^2")).to_string(), "2*z");
  auto W = wronskian(parse_map(E, "(z^3+1)/z"));
  EXPECT_EQ(W.to_string(), "2*z^3 - 1");
  EXPECT_TRUE(W.equals(wronskian_by_derivatives(parse_map(E, "(z^3+1)/z"))));
  for (int p : {2, 3, 5}) {
    auto P = GroundField::equichar_p(p);
    auto phi = parse_map(P, "z^" + std::to_string(p));
    EXPECT_TRUE(wronskian(phi).is_zero());
    EXPECT_FALSE(is_separable(phi));
    EXPECT_TRUE(hurwitz_sum(phi).infinite);
  }
  EXPECT_TRUE(is_separable(parse_map(GroundField::equichar_p(3), "z^2")));
}

TEST(Ratmap, PsiOfZToThePIsInseparable) {
  auto P = GroundField::equichar_p(3);
  testing::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    auto psi = testing::random_map(P, rng, testing::uniform(rng, 1, 2), false);
    auto up = [&](const Poly& a) {
      std::vector<FieldElement> c(3 * a.deg() + 1, FieldElement::zero(P));
      for (int k = 0; k <= a.deg(); ++k) c[3 * k] = a.coeffs()[k];
      return Poly(P, c);
    };
    RationalMap phi(up(psi.f()), up(psi.g()), false);
    EXPECT_FALSE(is_separable(phi));
  }
}

TEST(Ratmap, ComposeMobiusExamples) {
  auto E = GroundField::equichar_zero();
  auto phi = parse_map(E, "(z^2 + t*z)/(t*z^2 + 1)");
  auto id = Mobius::identity(E);
  EXPECT_EQ(compose_mobius(id, phi, id).to_string(), phi.normalize().to_string());
  auto s = Mobius::affine(parse_element(E, "t"), FieldElement::zero(E));
  EXPECT_EQ(compose_mobius(id, parse_map(E, "z^2"), s).to_string(), "t^2*z^2");
  auto inv = Mobius::inversion(E);
  EXPECT_EQ(compose_mobius(inv, parse_map(E, "z^3"), inv).to_string(), "z^3");
}

TEST(Ratmap, HurwitzExamples) {
  auto E = GroundField::equichar_zero();
  EXPECT_EQ(hurwitz_sum(parse_map(E, "(z^2 + t*z)/(t*z^2 + 1)")).value, 2);
  EXPECT_EQ(hurwitz_sum(parse_map(E, "(z^3+1)/z")).value, 4);
  EXPECT_EQ(weight_at_infinity(parse_map(E, "(z^3+1)/z")), 1);
  EXPECT_EQ(weight_at_infinity(parse_map(E, "z^4 + z")), 3);
}

TEST(Ratmap, NonCoprimeRejected) {
  auto E = GroundField::equichar_zero();
  auto f = Poly(E, {parse_element(E, "-1"), FieldElement::zero(E), FieldElement::one(E)});
  auto g = Poly(E, {parse_element(E, "1"), FieldElement::one(E)});
  EXPECT_THROW(RationalMap(f, g), Error);
}

class RatmapProperty : public ::testing::TestWithParam<int> {};

FieldPtr field_for(int mode) {
  switch (mode) {
    case 0: return GroundField::equichar_zero();
    case 1: return GroundField::equichar_p(5);
    default: return GroundField::mixed(3, 1);
  }
}

TEST_P(RatmapProperty, HurwitzAndWronskianRoutes) {
  auto F = field_for(GetParam());
  testing::Rng rng(101 + GetParam());
  for (int i = 0; i < 200; ++i) {
    const int d = testing::uniform(rng, 1, 5);
    auto phi = testing::random_map(F, rng, d);
    EXPECT_TRUE(wronskian(phi).equals(wronskian_by_derivatives(phi)));
    EXPECT_EQ(weight_at_infinity(phi), weight_at_infinity_homogeneous(phi));
    const auto h = hurwitz_sum(phi);
    EXPECT_FALSE(h.infinite);
    EXPECT_EQ(h.value, 2L * d - 2) << phi.to_string();
  }
}

TEST_P(RatmapProperty, ReductionIgnoresUnits) {
  auto F = field_for(GetParam());
  testing::Rng rng(202 + GetParam());
  for (int i = 0; i < 100; ++i) {
    auto phi = testing::random_map(F, rng, testing::uniform(rng, 1, 4));
    auto u = testing::random_element(F, rng, -2, 2, false);
    RationalMap scaled(phi.f().scale(u), phi.g().scale(u));
    auto a = reduce(phi.normalize());
    auto b = reduce(scaled.normalize());
    EXPECT_EQ(a.degree_red, b.degree_red);
    EXPECT_TRUE(rp::eq(*a.k, a.H_aff, b.H_aff));
    EXPECT_EQ(a.h_inf, b.h_inf);
  }
}

TEST_P(RatmapProperty, MobiusPreservesDegreeAndSeparability) {
  auto F = field_for(GetParam());
  testing::Rng rng(303 + GetParam());
  for (int i = 0; i < 100; ++i) {
    auto phi = testing::random_map(F, rng, testing::uniform(rng, 1, 4), false);
    auto s1 = testing::random_mobius(F, rng);
    auto s2 = testing::random_mobius(F, rng);
    auto psi = compose_mobius(s2, phi, s1);
    EXPECT_EQ(psi.degree(), phi.degree());
    EXPECT_EQ(is_separable(psi), is_separable(phi));
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, RatmapProperty, ::testing::Values(0, 1, 2));

}  // namespace
}  // namespace berkram
