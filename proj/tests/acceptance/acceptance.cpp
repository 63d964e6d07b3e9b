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

// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "berkram/errors.hpp"
#include "berkram/mult.hpp"
#include "berkram/parse.hpp"
#include "berkram/ramlocus.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace berkram {
namespace {

namespace bt = berkram::testing;

// Pinned sample sizes and tolerances.
constexpr int kFrobeniusPoints = 50;
constexpr int kOracleSamples = 100;
constexpr int kOracleMaxDegree = 5;
constexpr double kMaxInconclusiveRate = 0.05;
constexpr int kSurplusSamples = 50;
constexpr int kSurplusBudget = 4000;
constexpr int kHurwitzMaps = 100;
constexpr int kGeneratorMaxDegree = 6;
constexpr int kTameMaps = 50;
constexpr int kMetricPairs = 500;
const Rat kProbeDistance(1, 8);

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void fail(const std::string& why) {
    if (failures_++ < 3) msg_ << (msg_.tellp() > 0 ? "; " : "") << why;
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, summary + ", " + std::to_string(failures_) + " failures: " + msg_.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream msg_;
};

FieldPtr mode_field(int mode) {
  switch (mode % 3) {
    case 0: return GroundField::equichar_zero();
    case 1: return GroundField::equichar_p(3);
    default: return GroundField::mixed(3, 1);
  }
}

std::string where(const RationalMap& phi, const BerkPoint& x) {
  return phi.to_string() + " at " + x.to_string();
}

Outcome frobenius() {
  Tally t;
  for (int p : {2, 3, 5}) {
    auto F = GroundField::equichar_p(p);
    auto phi = parse_map(F, "z^" + std::to_string(p));
    bt::Rng rng(1000 + p);
    for (int i = 0; i < kFrobeniusPoints; ++i) {
      auto x = bt::random_ball(F, rng, -3, 3);
      if (local_degree(phi, x) != p) t.fail("m != p: " + where(phi, x));
      if (!has_inseparable_reduction(phi, x)) t.fail("separable reduction: " + where(phi, x));
    }
  }
  return t.done(std::to_string(3 * kFrobeniusPoints) + " points, p in {2,3,5}");
}

struct Sample {
  RationalMap phi;
  BerkPoint x;
  LocalData L;
};

std::vector<Sample> g_samples;

Outcome reduction_vs_oracle() {
  Tally t;
  bt::Rng rng(2024);
  int inconclusive = 0;
  for (int i = 0; i < kOracleSamples; ++i) {
    auto F = mode_field(i);
    auto phi = bt::random_map(F, rng, bt::uniform(rng, 1, kOracleMaxDegree));
    auto x = bt::random_ball(F, rng);
    int oracle = 0;
    try {
      oracle = local_degree_oracle(phi, x);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kOracleInconclusive) throw;
      ++inconclusive;
      // One perturbation of the radius inside the value group.
      x = BerkPoint::ball(x.center(), x.s() + Rat(1, F->ram_index()));
      try {
        oracle = local_degree_oracle(phi, x);
      } catch (const Error& e2) {
        if (e2.kind() != ErrorKind::kOracleInconclusive) throw;
        t.fail("unresolved after perturbation: " + where(phi, x));
        continue;
      }
    }
    const int m = local_degree(phi, x);
    if (m != oracle) {
      t.fail(where(phi, x) + " reduction " + std::to_string(m) + " oracle " + std::to_string(oracle));
    }
    g_samples.push_back({phi, x, directional_data(phi, x)});
  }
  const double rate = static_cast<double>(inconclusive) / kOracleSamples;
  if (rate >= kMaxInconclusiveRate) t.fail("inconclusive rate " + std::to_string(rate));
  return t.done(std::to_string(kOracleSamples) + " samples, " + std::to_string(inconclusive) +
                " inconclusive (all resolved by one perturbation)");
}

Outcome balance() {
  Tally t;
  for (const auto& S : g_samples) {
    int s = 0;
    for (const auto& D : S.L.directions) s += D.s_dir;
    if (S.L.m + s != S.phi.degree()) t.fail("m + sum s != d: " + where(S.phi, S.x));
    if (!S.L.balance_ok) t.fail("balance flag: " + where(S.phi, S.x));
    if (!S.L.directional_sum_ok) t.fail("directional sum: " + where(S.phi, S.x));
  }
  if (g_samples.empty()) t.fail("no samples from criterion 2");
  return t.done(std::to_string(g_samples.size()) + " local data");
}

// Residue characteristic 0 or above the degree, where the identity is stated.
Outcome critical_surplus() {
  Tally t;
  const std::vector<std::pair<FieldPtr, int>> modes{{GroundField::equichar_zero(), 5},
                                                    {GroundField::equichar_p(5), 4},
                                                    {GroundField::mixed(5, 1), 4}};
  bt::Rng rng(4242);
  int checked = 0;
  for (int i = 0; i < kSurplusBudget && checked < kSurplusSamples; ++i) {
    const auto& [F, dmax] = modes[i % modes.size()];
    auto phi = bt::random_map(F, rng, bt::uniform(rng, 2, dmax));
    auto x = bt::uniform(rng, 0, 1) ? BerkPoint::gauss(F) : bt::random_ball(F, rng, -1, 1);
    for (const auto& D : directional_data(phi, x).directions) {
      if (D.m_dir != 1 || D.s_dir == 0 || !D.dir.is_rational()) continue;
      ++checked;
      const int by_reduction = critical_weight_in_direction(phi, x, D.dir);
      const int by_roots = bt::critical_weight_by_roots(phi, D.dir);
      if (by_reduction != 2 * D.s_dir || by_roots != 2 * D.s_dir) {
        t.fail(where(phi, x) + " dir " + D.dir.to_string() + ": s=" + std::to_string(D.s_dir) +
               " weights " + std::to_string(by_reduction) + "/" + std::to_string(by_roots));
      }
    }
  }
  if (checked < kSurplusSamples) t.fail("only " + std::to_string(checked) + " directions sampled");
  return t.done(std::to_string(checked) + " directions with m_dir = 1, s_dir > 0");
}

Outcome hurwitz() {
  Tally t;
  int located = 0, wild = 0;
  for (int mode = 0; mode < 3; ++mode) {
    auto F = mode_field(mode);
    bt::Rng rng(5000 + mode);
    for (int i = 0; i < kHurwitzMaps; ++i) {
      const int d = bt::uniform(rng, 1, 6);
      auto phi = bt::random_map(F, rng, d);
      const long expect = 2L * d - 2;
      const auto h = hurwitz_sum(phi);
      const long by_derivatives =
          wronskian_by_derivatives(phi).deg() + weight_at_infinity_homogeneous(phi);
      if (h.infinite || h.value != expect || by_derivatives != expect) {
        t.fail("weights of " + phi.to_string());
      }
      // Third route: the located critical points, when their expansions
      // stay inside a Puiseux extension.
      try {
        long s = 0;
        for (const auto& c : critical_points(phi)) s += c.total_weight();
        ++located;
        if (s != expect) t.fail("located weights of " + phi.to_string());
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kUnsupportedExtension) throw;
        ++wild;
      }
    }
  }
  return t.done(std::to_string(3 * kHurwitzMaps) + " maps, " + std::to_string(located) +
                " also by located critical points, " + std::to_string(wild) + " wild");
}

Outcome generator() {
  Tally t;
  auto E = GroundField::equichar_zero();
  int pairs = 0;
  for (int d = 2; d <= kGeneratorMaxDegree; ++d) {
    for (int n = 1; n < d; ++n) {
      ++pairs;
      auto phi = generate_n_component_example(n, d, E);
      auto R = ram_components(phi);
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
      if (phi.degree() != d) t.fail(tag + " degree");
      if (!R.resolved() || R.count_max != n || R.count_min != n) {
        t.fail(tag + " components [" + std::to_string(R.count_min) + "," +
               std::to_string(R.count_max) + "]");
      }
      if (R.count_max > d - 1 || !R.theorem_a_ok) t.fail(tag + " component bound d - 1");
      for (const auto& C : R.components) {
        if (!C.resolved || C.weight < 2) t.fail(tag + " component weight " + std::to_string(C.weight));
      }
    }
  }
  return t.done(std::to_string(pairs) + " (n, d) pairs");
}

Outcome tame_containment() {
  Tally t;
  auto E = GroundField::equichar_zero();
  bt::Rng rng(7007);
  RamOptions opt;
  opt.epsilon = kProbeDistance;
  int probes = 0;
  for (int i = 0; i < kTameMaps; ++i) {
    auto phi = bt::random_map(E, rng, bt::uniform(rng, 2, 5));
    auto R = ram_components(phi, opt);
    if (R.probes.empty()) t.fail("no probes for " + phi.to_string());
    for (const auto& pr : R.probes) {
      ++probes;
      int oracle = pr.m;
      try {
        oracle = local_degree_oracle(phi, pr.pt);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kOracleInconclusive) throw;
      }
      if (pr.m != 1 || oracle != 1) t.fail("ramified probe " + where(phi, pr.pt));
    }
  }
  return t.done(std::to_string(probes) + " probes on " + std::to_string(kTameMaps) + " maps");
}

// Stand-in for a classical or infinite end of an edge, far along the edge.
BerkPoint finite_end(const BerkPoint& v, const BerkPoint& other) {
  constexpr int kFar = 64;
  if (v.is_ball()) return v;
  const Rat s0 = other.is_ball() ? other.s() : Rat(0);
  if (v.is_infinity()) {
    const FieldElement c = other.is_ball() ? other.center() : FieldElement::zero(other.center().field());
    return BerkPoint::ball(c, s0 - kFar);
  }
  return BerkPoint::ball(v.center(), s0 + kFar);
}

Rat distance_to_skeleton(const BerkPoint& x, const Skeleton& sk) {
  std::optional<Rat> best;
  for (const auto& e : sk.edges) {
    const BerkPoint& u = sk.vertices[e.u].pt;
    const BerkPoint& v = sk.vertices[e.v].pt;
    const BerkPoint a = finite_end(u, v), b = finite_end(v, u);
    const Rat dist = (rho(x, a).value + rho(x, b).value - rho(a, b).value) / 2;
    if (!best || dist < *best) best = dist;
  }
  return best.value_or(Rat(-1));
}

Outcome wild_tube_witness() {
  Tally t;
  auto M3 = GroundField::mixed(3, 1);
  auto phi = parse_map(M3, "z^3 + z");
  const auto gauss = BerkPoint::gauss(M3);
  const auto near = parse_point(M3, "zeta(0; ord=1/8)");
  // Oracle first.
  const int oracle_gauss = local_degree_oracle(phi, gauss);
  const int oracle_near = local_degree_oracle(phi, near);
  if (oracle_gauss != 3) t.fail("oracle m(Gauss) = " + std::to_string(oracle_gauss));
  if (oracle_near != 1) t.fail("oracle m(zeta(0;1/8)) = " + std::to_string(oracle_near));
  if (local_degree(phi, gauss) != oracle_gauss) t.fail("reduction disagrees at Gauss");
  if (local_degree(phi, near, true) != oracle_near) t.fail("reduction disagrees at zeta(0;1/8)");

  auto sk = hull_crit(phi);
  if (sk.find(parse_point(M3, "zeta(0; ord=-1/2)")) < 0) t.fail("hull vertex at s = -1/2 missing");
  const Rat dist = distance_to_skeleton(gauss, sk);
  const Rat bound(1, 3 - 1);
  if (dist != bound) t.fail("distance from Gauss to hull " + dist.get_str());
  if (!tubular_probe(phi, kProbeDistance, 3)) t.fail("tubular probe");
  return t.done("m(Gauss) = 3 at distance " + dist.get_str() + " = 1/(p-1), m(zeta(0;1/8)) = 1");
}

Outcome total_ramification() {
  Tally t;
  auto E = GroundField::equichar_zero();
  bt::Rng rng(9009);
  int polys = 0;
  for (int d = 2; d <= 5; ++d) {
    for (int i = 0; i < 4; ++i) {
      Poly f = bt::random_poly(E, rng, d);
      if (f.deg() != d) continue;
      RationalMap phi(f, Poly(E, {FieldElement::one(E)}));
      ++polys;
      auto R = ram_components(phi);
      if (!R.resolved() || R.count_max != 1 || !R.components[0].contains_infinity) {
        t.fail("polynomial not one component with infinity: " + phi.to_string());
      }
      auto T = total_ram_locus(phi);
      bool inf = false;
      for (const auto& x : T.points) inf |= x.is_infinity();
      if (!inf || !T.connected) t.fail("total locus of " + phi.to_string());
    }
  }
  auto M5 = GroundField::mixed(5, 1);
  auto phi = parse_map(M5, "(z^6 + 5*z + 1)/z");
  auto T = total_ram_locus(phi);
  if (T.points.size() != 1 || !T.points[0].is_gauss()) t.fail("M5 total locus is not {Gauss}");
  const int r = phi.degree() % 5;
  if (r != 0 && r != 1) t.fail("degree congruence");
  return t.done(std::to_string(polys) + " polynomials; (z^6+5z+1)/z totally ramified only at Gauss");
}

Outcome metric() {
  Tally t;
  auto E = GroundField::equichar_zero();
  const auto r = rho(parse_point(E, "zeta(0; ord=-1)"), parse_point(E, "zeta(0; ord=0)"));
  if (r.infinite || r.value != 1) t.fail("rho(zeta(0;-1), Gauss) != 1");
  int inversions = 0;
  bt::Rng rng(1010);
  for (int i = 0; i < kMetricPairs; ++i) {
    auto F = mode_field(i);
    auto x = bt::random_ball(F, rng), y = bt::random_ball(F, rng);
    const bool inv = i % 5 == 0;
    inversions += inv;
    auto sigma = (inv ? Mobius::inversion(F) : bt::random_mobius(F, rng)).as_map();
    if (rho(image_point(sigma, x), image_point(sigma, y)).value != rho(x, y).value) {
      t.fail(sigma.to_string() + " moves " + x.to_string() + ", " + y.to_string());
    }
  }
  return t.done("normalization exact; " + std::to_string(kMetricPairs) + " pairs, " +
                std::to_string(inversions) + "+ inversions");
}

}  // namespace
}  // namespace berkram

int main() {
  using berkram::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"frobenius", berkram::frobenius},
      {"reduction-vs-oracle", berkram::reduction_vs_oracle},
      {"balance", berkram::balance},
      {"critical-surplus", berkram::critical_surplus},
      {"hurwitz", berkram::hurwitz},
      {"n-component-generator", berkram::generator},
      {"tame-containment", berkram::tame_containment},
      {"wild-tube-witness", berkram::wild_tube_witness},
      {"total-ramification", berkram::total_ramification},
      {"metric", berkram::metric},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("%s %2d %-22s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
