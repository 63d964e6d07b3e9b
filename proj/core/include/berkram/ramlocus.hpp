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
#ifndef BERKRAM_RAMLOCUS_HPP_
#define BERKRAM_RAMLOCUS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "berkram/mult.hpp"

namespace berkram {

struct CriticalPoint {
  bool infinite = false;
  // Root of the Wronskian, truncated (precision set) unless found exactly.
  FieldElement expansion;
  long weight = 0;
  // Inseparable map: every point is critical; this is the only entry.
  bool weight_infinite = false;
  int mult_m = 0;  // 0 when not determined
  // Collapsed Galois orbit: `orbit_count` conjugate roots below `parent`,
  // in the directions given by the roots of `orbit`.
  std::optional<RPoly> orbit;
  BerkPoint parent;
  int orbit_count = 1;
  Poly factor;  // square-free part of the Wronskian holding the root

  long total_weight() const { return weight * orbit_count; }
  std::string to_string() const;
};

struct RamOptions {
  int max_subdiv = 12;
  int rays_per_boundary = 3;
  // Probe distance beyond the tube bound; default 1/(2N).
  std::optional<Rat> epsilon;
  bool probes = true;
};

std::vector<CriticalPoint> critical_points(const RationalMap& phi);

// Newton steps on a simple root until its known part reaches `target`.
CriticalPoint refine_critical_point(const RationalMap& phi, const CriticalPoint& cp,
                                    const Rat& target);

Skeleton hull_crit(const RationalMap& phi);
Skeleton hull_crit(const RationalMap& phi, const std::vector<CriticalPoint>& crit);

Skeleton annotate_skeleton(const RationalMap& phi, Skeleton sk, int max_subdiv);

struct RamComponent {
  std::vector<int> vertices;
  long weight = 0;
  bool contains_totally_ramified = false;
  bool contains_infinity = false;
  // No incident edge is unresolved.
  bool resolved = true;
};

struct Probe {
  BerkPoint pt;
  int from = -1;  // skeleton vertex the ray leaves from
  int m = 0;
};

struct RamReport {
  int d = 0;
  bool separable = true;
  std::vector<CriticalPoint> crit;
  Skeleton skeleton;
  std::vector<RamComponent> components;
  // Components counted relative to the probed region.
  int count_min = 0;
  int count_max = 0;
  int unresolved_edges = 0;
  std::vector<Probe> probes;
  Rat tube_radius;
  bool tubular_applicable = false;
  bool tubular_ok = true;
  bool theorem_a_ok = true;
  bool hurwitz_ok = true;
  bool balance_ok = true;
  long hurwitz_value = 0;
  std::vector<std::string> notes;

  bool resolved() const { return unresolved_edges == 0 && count_min == count_max; }
};

RamReport ram_components(const RationalMap& phi, const RamOptions& opt = {});

struct TotalRamLocus {
  std::vector<BerkPoint> points;
  bool connected = true;
  bool degenerate = false;  // degree 1: every point
};

TotalRamLocus total_ram_locus(const RationalMap& phi, const RamOptions& opt = {});

// 0 when p = 0 or p > d, else 1/(p - 1).
Rat tube_bound(const RationalMap& phi);
bool tubular_probe(const RationalMap& phi, const Rat& epsilon, int rays_per_boundary);
std::vector<Probe> tube_probes(const RationalMap& phi, const Skeleton& sk, const Rat& distance,
                               int rays_per_boundary);

RationalMap generate_n_component_example(int n, int d, const FieldPtr& F);

// One tag per skeleton vertex: endpoint-critical, endpoint-insep,
// interior-insep or regular. Also stored in the report's skeleton.
std::vector<std::string> classify_boundary_points(const RationalMap& phi, RamReport* report);

std::string ram_report_json(const RamReport& r, int indent = 2);

}  // namespace berkram

#endif  // BERKRAM_RAMLOCUS_HPP_
