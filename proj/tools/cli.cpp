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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "berkram/errors.hpp"
#include "berkram/mult.hpp"
#include "berkram/parse.hpp"
#include "berkram/ramlocus.hpp"

namespace berkram::cli {

namespace {

using J = nlohmann::ordered_json;

const char* kVersion = "0.1.0";

ResFieldPtr tower_field(int p, int degree) {
  auto Fp = ResidueField::prime_field(p);
  if (degree == 1) return Fp;
  // First monic irreducible in the from_index enumeration of the lower
  // coefficients.
  Int count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t i = 0; Int(i) < count; ++i) {
    RPoly M;
    std::uint64_t rest = i;
    for (int k = 0; k < degree; ++k) {
      M.c.push_back(Fp->from_int(static_cast<long>(rest % p)));
      rest /= p;
    }
    M.c.push_back(Fp->one());
    if (rp::is_irreducible(*Fp, M)) return Fp->extend(M, "g");
  }
  fail(ErrorKind::kInvalidArgument, "no irreducible polynomial of the requested degree");
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

const char* format_name(OutFormat f) {
  switch (f) {
    case OutFormat::kJson: return "json";
    case OutFormat::kDot: return "dot";
    case OutFormat::kText: return "text";
  }
  return "json";
}

J config_json(const RunConfig& cfg, const FieldPtr& F) {
  J c;
  c["field"] = cfg.field;
  c["p"] = cfg.p;
  c["ram_index"] = cfg.ram_index;
  c["precision"] = cfg.precision;
  if (cfg.field == "equicharp") c["tower"] = cfg.tower;
  c["max_subdiv"] = cfg.max_subdiv;
  c["rays"] = cfg.rays;
  c["trials"] = cfg.trials;
  c["epsilon"] = cfg.epsilon ? J(*cfg.epsilon) : J(nullptr);
  c["seed"] = cfg.seed;
  c["out"] = format_name(cfg.out);
  c["field_description"] = F->describe();
  return c;
}

RamOptions ram_options(const RunConfig& cfg) {
  RamOptions opt;
  opt.max_subdiv = cfg.max_subdiv;
  opt.rays_per_boundary = cfg.rays;
  if (cfg.epsilon) opt.epsilon = parse_rational(*cfg.epsilon);
  return opt;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// `-` reads the map from stdin: either a bare map or the JSON printed by
// `generate`.
std::string read_map_text(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  all = trim(all);
  if (!all.empty() && all.front() == '{') {
    J j = J::parse(all, nullptr, false);
    if (!j.is_discarded() && j.contains("result") && j["result"].contains("map")) {
      return j["result"]["map"].get<std::string>();
    }
    throw Error(ErrorKind::kSyntaxError, "stdin JSON has no result.map field");
  }
  return all;
}

J local_data_json(const LocalData& L) {
  J dirs = J::array();
  for (const auto& D : L.directions) {
    dirs.push_back({{"direction", D.dir.to_string()},
                    {"m_dir", D.m_dir},
                    {"s_dir", D.s_dir},
                    {"image", D.image_dir.to_string()}});
  }
  J o;
  o["point"] = L.at.to_string();
  o["degree"] = L.d;
  o["m"] = L.m;
  o["generic_m_dir"] = L.generic_m_dir;
  o["directions"] = dirs;
  o["insep"] = L.insep;
  o["balance_ok"] = L.balance_ok;
  o["directional_sum_ok"] = L.directional_sum_ok;
  if (!L.note.empty()) o["note"] = L.note;
  return o;
}

// x lies on the tree spanned by the vertices of sk.
bool on_skeleton(const Skeleton& sk, const BerkPoint& x) {
  for (size_t i = 0; i < sk.vertices.size(); ++i) {
    const auto& a = sk.vertices[i].pt;
    if (sk.vertices[i].orbit) continue;
    if (same_point(a, x)) return true;
    if (!precedes(a, x)) continue;
    for (size_t j = 0; j < sk.vertices.size(); ++j) {
      if (sk.vertices[j].orbit || i == j) continue;
      if (precedes(x, join(a, sk.vertices[j].pt))) return true;
    }
  }
  return false;
}

struct Check {
  std::string name;
  std::string status;  // pass, fail, skipped, unresolved
  std::string detail;
};

BerkPoint random_ball(const FieldPtr& F, std::mt19937_64& rng) {
  const auto& K = *F->residue_field();
  const int N = F->ram_index();
  std::uniform_int_distribution<int> sd(-2 * N, 2 * N);
  Rat s(sd(rng), N);
  s.canonicalize();
  FieldElement a = FieldElement::zero(F);
  std::uniform_int_distribution<int> ed(-N, 2 * N);
  for (int k = 0; k < 2; ++k) {
    Rat e(ed(rng), N);
    e.canonicalize();
    a = a + FieldElement::lift(F, K.random(rng)) * FieldElement::uniformizer_pow(F, e);
  }
  return BerkPoint::ball(a, s);
}

std::vector<Check> verify_checks(const RationalMap& phi, const RunConfig& cfg, int* unresolved) {
  std::vector<Check> out;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    out.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
  };
  const int d = phi.degree();
  const bool sep = is_separable(phi);

  add("wronskian_two_routes", wronskian(phi).equals(wronskian_by_derivatives(phi)));
  if (sep && d >= 1) {
    add("weight_at_infinity_two_routes",
        weight_at_infinity(phi) == weight_at_infinity_homogeneous(phi));
    long total = 0;
    for (const auto& cp : critical_points(phi)) total += cp.total_weight();
    const auto hs = hurwitz_sum(phi);
    add("hurwitz", !hs.infinite && hs.value == 2L * d - 2 && total == 2L * d - 2,
        "sum=" + std::to_string(total));
  }

  RamReport R = ram_components(phi, ram_options(cfg));
  *unresolved = R.unresolved_edges;
  add("theorem_a", R.theorem_a_ok,
      "components=[" + std::to_string(R.count_min) + "," + std::to_string(R.count_max) + "]");
  if (R.tubular_applicable) add("tubular", R.tubular_ok);
  add("balance", R.balance_ok);

  // ARF against root counting at the skeleton's type II vertices and at
  // random balls.
  std::mt19937_64 rng(cfg.seed);
  std::vector<BerkPoint> pts;
  for (const auto& v : R.skeleton.vertices) {
    if (!v.orbit && v.pt.is_ball() && v.pt.type() == 2) pts.push_back(v.pt);
  }
  if (d >= 1) {
    for (int i = 0; i < cfg.trials; ++i) pts.push_back(random_ball(phi.field(), rng));
  }
  int agree = 0, inconclusive = 0, bal = 0;
  std::string bad;
  for (const auto& x : pts) {
    const auto L = directional_data(phi, x);
    if (L.balance_ok && L.directional_sum_ok) {
      ++bal;
    } else if (bad.empty()) {
      bad = "balance at " + x.to_string();
    }
    try {
      const int o = local_degree_oracle(phi, x);
      if (o == L.m) {
        ++agree;
      } else if (bad.empty()) {
        bad = "oracle " + std::to_string(o) + " vs " + std::to_string(L.m) + " at " + x.to_string();
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kOracleInconclusive) throw;
      ++inconclusive;
    }
  }
  const int n = static_cast<int>(pts.size());
  add("local_degree_vs_oracle", agree + inconclusive == n,
      std::to_string(agree) + "/" + std::to_string(n) + " agree, " +
          std::to_string(inconclusive) + " inconclusive" + (bad.empty() ? "" : "; " + bad));
  add("balance_at_samples", bal == n, std::to_string(bal) + "/" + std::to_string(n));

  if (sep && d >= 2) {
    bool weights = true;
    for (const auto& C : R.components) {
      if (C.resolved && C.weight < 2) weights = false;
    }
    add("component_weight", weights);

    const int p = phi.field()->residue_field()->characteristic();
    if (p == 0 || p > d) {
      bool ends = true;
      std::vector<int> deg(R.skeleton.vertices.size(), 0);
      for (const auto& e : R.skeleton.edges) {
        if (e.note == "probe") continue;
        ++deg[e.u];
        ++deg[e.v];
      }
      for (size_t i = 0; i < deg.size(); ++i) {
        const auto& v = R.skeleton.vertices[i];
        if (deg[i] <= 1 && v.m && *v.m > 1 && !v.critical) ends = false;
      }
      add("tame_endpoints_critical", ends);
    }

    const auto T = total_ram_locus(phi, ram_options(cfg));
    if (!T.points.empty()) {
      Skeleton H = hull_crit(phi);
      bool hull_ram = true;
      for (const auto& v : R.skeleton.vertices) {
        if (on_skeleton(H, v.pt) && v.m && *v.m <= 1) hull_ram = false;
      }
      for (const auto& e : R.skeleton.edges) {
        if (e.note != "probe" && e.m && *e.m <= 1) hull_ram = false;
      }
      add("total_ramification_hull", hull_ram);
      bool congruence = true;
      for (const auto& x : T.points) {
        if (on_skeleton(H, x)) continue;
        if (p == 0 || (d % p != 0 && d % p != 1)) congruence = false;
      }
      add("total_ramification_congruence", congruence);
    }
    add("total_ramification_connected", T.connected);
  }
  if (*unresolved > 0) {
    out.push_back({"resolution", "unresolved", std::to_string(*unresolved) + " unresolved edges"});
  }
  return out;
}

std::string text_report(const RamReport& R, const TotalRamLocus* T) {
  std::ostringstream os;
  os << "degree " << R.d << (R.separable ? "" : " (inseparable)") << "\n";
  os << "critical points:";
  for (const auto& cp : R.crit) os << " {" << cp.to_string() << "}";
  os << "\n";
  for (size_t i = 0; i < R.skeleton.vertices.size(); ++i) {
    const auto& v = R.skeleton.vertices[i];
    os << "  v" << i << " " << (v.orbit ? "orbit x" + std::to_string(v.orbit_count) + " below " : "")
       << v.pt.to_string();
    if (v.m) os << " m=" << *v.m;
    if (v.critical) os << " critical";
    if (!v.tag.empty()) os << " " << v.tag;
    os << "\n";
  }
  for (const auto& e : R.skeleton.edges) {
    os << "  e v" << e.u << "-v" << e.v << " len " << e.length.to_string();
    if (e.m) os << " m=" << *e.m;
    if (e.m_range) os << " m in [" << e.m_range->first << "," << e.m_range->second << "]";
    if (e.unresolved) os << " UNRESOLVED";
    if (!e.note.empty()) os << " (" << e.note << ")";
    os << "\n";
  }
  os << "components: ";
  if (R.count_min == R.count_max) {
    os << R.count_max;
  } else {
    os << "[" << R.count_min << "," << R.count_max << "]";
  }
  os << " (relative to the probed region)\n";
  if (T) {
    os << "totally ramified:";
    if (T->degenerate) os << " every point (degree 1)";
    for (const auto& x : T->points) os << " " << x.to_string();
    os << (T->connected ? "" : " (not connected)") << "\n";
  }
  os << "verdicts: theorem_a=" << R.theorem_a_ok << " tubular=" << R.tubular_ok
     << " hurwitz=" << R.hurwitz_ok << " balance=" << R.balance_ok << "\n";
  return os.str();
}

J total_json(const TotalRamLocus& T) {
  J pts = J::array();
  for (const auto& x : T.points) pts.push_back(x.to_string());
  return {{"points", pts}, {"connected", T.connected}, {"degenerate", T.degenerate}};
}

int emit(std::ostream& out, const RunConfig& cfg, const FieldPtr& F, const std::string& command,
         J input, J result, const std::string& text, const std::string& dot) {
  if (cfg.out == OutFormat::kText) {
    out << text;
    return kOk;
  }
  if (cfg.out == OutFormat::kDot) {
    out << dot;
    return kOk;
  }
  J doc;
  doc["tool"] = "berkram";
  doc["version"] = kVersion;
  doc["command"] = command;
  doc["config"] = config_json(cfg, F);
  doc["input"] = std::move(input);
  doc["result"] = std::move(result);
  doc["log"] = RunLog::snapshot();
  out << doc.dump(2) << "\n";
  return kOk;
}

}  // namespace

void validate(const RunConfig& cfg) {
  auto bad = [](const std::string& w) { fail(ErrorKind::kInvalidArgument, w); };
  if (cfg.field != "equichar0" && cfg.field != "equicharp" && cfg.field != "mixed") {
    bad("--field must be equichar0, equicharp or mixed");
  }
  if (cfg.field == "equichar0" && cfg.p != 0) bad("--p must be 0 for equichar0");
  if (cfg.field != "equichar0" && !is_prime(cfg.p)) bad("--p must be a prime");
  if (cfg.ram_index < 1) bad("--ram-index must be >= 1");
  if (cfg.precision < 1) bad("--precision must be positive");
  if (cfg.tower < 1) bad("--tower must be positive");
  if (cfg.tower > 1 && cfg.field != "equicharp") bad("--tower applies to equicharp only");
  if (cfg.max_subdiv < 1 || cfg.rays < 1 || cfg.trials < 1) bad("budgets must be positive");
}

FieldPtr make_field(const RunConfig& cfg) {
  validate(cfg);
  FieldPtr F;
  if (cfg.field == "equichar0") {
    F = GroundField::equichar_zero(cfg.precision);
  } else if (cfg.field == "equicharp") {
    F = GroundField::equichar_p(cfg.p, cfg.precision, tower_field(cfg.p, cfg.tower));
  } else {
    return GroundField::mixed(cfg.p, cfg.ram_index, cfg.precision);
  }
  return cfg.ram_index > 1 ? F->with_ram_index(cfg.ram_index) : F;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  std::string out_name = "json";
  CLI::App app{"Ramification loci of rational maps on the Berkovich projective line", "berkram"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", cfg.field, "equichar0 | equicharp | mixed")
      ->check(CLI::IsMember({"equichar0", "equicharp", "mixed"}));
  app.add_option("--p", cfg.p, "residue characteristic");
  app.add_option("--ram-index", cfg.ram_index, "ramification index N of the base field");
  app.add_option("--precision", cfg.precision, "relative precision in units of 1/N");
  app.add_option("--tower", cfg.tower, "degree of the coefficient field over F_p");
  app.add_option("--max-subdiv", cfg.max_subdiv, "edge certification budget");
  app.add_option("--rays", cfg.rays, "probe rays per boundary vertex");
  app.add_option("--trials", cfg.trials, "random samples for verify");
  app.add_option("--epsilon", cfg.epsilon, "probe distance beyond the tube bound");
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--out", out_name, "json | dot | text")->check(CLI::IsMember({"json", "dot", "text"}));

  std::string map_arg, point_arg;
  int gen_n = 0, gen_d = 0;
  auto* analyze = app.add_subcommand("analyze", "full ramification report");
  analyze->add_option("map", map_arg, "rational map, or - for stdin")->required();
  auto* local = app.add_subcommand("local-degree", "local degree and directional data at a point");
  local->add_option("map", map_arg)->required();
  local->add_option("point", point_arg)->required();
  auto* skel = app.add_subcommand("skeleton", "annotated hull of the critical points");
  skel->add_option("map", map_arg)->required();
  auto* comps = app.add_subcommand("components", "component summary");
  comps->add_option("map", map_arg)->required();
  auto* verify = app.add_subcommand("verify", "run the invariant checks on one map");
  verify->add_option("map", map_arg)->required();
  auto* gen = app.add_subcommand("generate", "map with a prescribed number of components");
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--d", gen_d)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kFailure;
  }
  cfg.out = out_name == "dot" ? OutFormat::kDot : out_name == "text" ? OutFormat::kText : OutFormat::kJson;

  RunLog::clear();
  try {
    const FieldPtr F = make_field(cfg);
    if (*gen) {
      const RationalMap phi = generate_n_component_example(gen_n, gen_d, F);
      const std::string s = phi.to_string();
      return emit(out, cfg, F, "generate", {{"n", gen_n}, {"d", gen_d}}, {{"map", s}}, s + "\n",
                  s + "\n");
    }
    const std::string text = read_map_text(map_arg, in);
    const RationalMap phi = parse_map(F, text);
    const J input = {{"map", phi.to_string()}};

    if (*local) {
      const BerkPoint x = parse_point(F, point_arg);
      J result;
      std::ostringstream os;
      if (x.is_ball()) {
        const auto L = directional_data(phi, x, true);
        result = local_data_json(L);
        os << "m = " << L.m << (L.insep ? " (inseparable reduction)" : "") << "\n";
        for (const auto& D : L.directions) {
          os << "  " << D.dir.to_string() << ": m_dir=" << D.m_dir << " s=" << D.s_dir << "\n";
        }
      } else {
        const int m = local_degree(phi, x);
        result = {{"point", x.to_string()}, {"degree", phi.degree()}, {"m", m}};
        os << "m = " << m << "\n";
      }
      J in2 = input;
      in2["point"] = x.to_string();
      return emit(out, cfg, F, "local-degree", in2, result, os.str(), os.str());
    }
    if (*skel) {
      Skeleton sk = annotate_skeleton(phi, hull_crit(phi), cfg.max_subdiv);
      int unresolved = 0;
      for (const auto& e : sk.edges) unresolved += e.unresolved ? 1 : 0;
      RamReport R;
      R.d = phi.degree();
      R.crit = critical_points(phi);
      R.skeleton = sk;
      emit(out, cfg, F, "skeleton", input, J::parse(skeleton_json(sk, -1)), text_report(R, nullptr),
           skeleton_dot(sk));
      return unresolved > 0 ? kUnresolved : kOk;
    }
    if (*verify) {
      int unresolved = 0;
      const auto checks = verify_checks(phi, cfg, &unresolved);
      J arr = J::array();
      std::ostringstream os;
      bool ok = true;
      for (const auto& c : checks) {
        arr.push_back({{"check", c.name}, {"status", c.status}, {"detail", c.detail}});
        os << c.status << "  " << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
        if (c.status == "fail") ok = false;
      }
      emit(out, cfg, F, "verify", input, {{"checks", arr}, {"ok", ok}}, os.str(), os.str());
      if (!ok) return kFailure;
      return unresolved > 0 ? kUnresolved : kOk;
    }

    RamReport R = ram_components(phi, ram_options(cfg));
    classify_boundary_points(phi, &R);
    const int code = R.resolved() ? kOk : kUnresolved;
    if (*comps) {
      J cs = J::array();
      for (const auto& C : R.components) {
        cs.push_back({{"vertices", C.vertices.size()},
                      {"critical_weight", C.weight},
                      {"contains_totally_ramified", C.contains_totally_ramified},
                      {"contains_infinity", C.contains_infinity},
                      {"resolved", C.resolved}});
      }
      J result = {{"component_count", {{"min", R.count_min}, {"max", R.count_max}}},
                  {"components", cs},
                  {"unresolved_edges", R.unresolved_edges},
                  {"relative_to", "hull of critical points plus probe tube"}};
      std::ostringstream os;
      os << "components: ";
      if (R.count_min == R.count_max) {
        os << R.count_max << "\n";
      } else {
        os << "[" << R.count_min << "," << R.count_max << "] UNRESOLVED\n";
      }
      emit(out, cfg, F, "components", input, result, os.str(), skeleton_dot(R.skeleton));
      return code;
    }
    const auto T = total_ram_locus(phi, ram_options(cfg));
    J result = J::parse(ram_report_json(R, -1));
    result["total_ramification"] = total_json(T);
    emit(out, cfg, F, "analyze", input, result, text_report(R, &T), skeleton_dot(R.skeleton));
    return code;
  } catch (const SyntaxError& e) {
    J j = {{"error", {{"code", error_kind_name(e.kind())}, {"message", e.what()},
                      {"line", e.line()}, {"column", e.column()}}}};
    err << j.dump() << "\n";
    return kFailure;
  } catch (const Error& e) {
    J j = {{"error", {{"code", error_kind_name(e.kind())}, {"message", e.what()}}}};
    err << j.dump() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    J j = {{"error", {{"code", "Internal"}, {"message", e.what()}}}};
    err << j.dump() << "\n";
    return kFailure;
  }
}

}  // namespace berkram::cli
