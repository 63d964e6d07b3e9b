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
#include <sstream>

#include "cli.hpp"

namespace berkram::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::json doc() const { return nlohmann::json::parse(out); }
  nlohmann::json error() const { return nlohmann::json::parse(err)["error"]; }
};

Result invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, GenerateThenAnalyze) {
  auto g = invoke({"generate", "--n", "2", "--d", "3"});
  ASSERT_EQ(g.code, kOk) << g.err;
  const std::string map = g.doc()["result"]["map"];
  auto a = invoke({"analyze", "-"}, g.out);
  ASSERT_EQ(a.code, kOk) << a.err;
  auto doc = a.doc();
  EXPECT_EQ(doc["tool"], "berkram");
  EXPECT_EQ(doc["command"], "analyze");
  EXPECT_EQ(doc["input"]["map"], map);
  EXPECT_EQ(doc["result"]["component_count"]["min"], 2);
  EXPECT_EQ(doc["result"]["component_count"]["max"], 2);

  auto bare = invoke({"analyze", "-"}, map + "\n");
  ASSERT_EQ(bare.code, kOk) << bare.err;
  EXPECT_EQ(bare.doc()["result"], doc["result"]);
}

TEST(Cli, LocalDegreeExamples) {
  auto sq = invoke({"local-degree", "z^2", "zeta(0; ord=0)"});
  ASSERT_EQ(sq.code, kOk) << sq.err;
  EXPECT_EQ(sq.doc()["result"]["m"], 2);

  auto mob = invoke({"local-degree", "(z+1)/(z-1)", "zeta(3; ord=1)"});
  ASSERT_EQ(mob.code, kOk) << mob.err;
  EXPECT_EQ(mob.doc()["result"]["m"], 1);

  auto frob = invoke({"--field", "equicharp", "--p", "3", "local-degree", "z^3", "zeta(0; ord=0)"});
  ASSERT_EQ(frob.code, kOk) << frob.err;
  EXPECT_EQ(frob.doc()["result"]["m"], 3);
  EXPECT_EQ(frob.doc()["config"]["p"], 3);
}

TEST(Cli, ByteIdenticalOutput) {
  const std::vector<std::string> args{"--seed", "7", "verify", "(z^3+1)/z"};
  auto a = invoke(args);
  auto b = invoke(args);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyReportsChecks) {
  auto v = invoke({"verify", "z^2"});
  ASSERT_EQ(v.code, kOk) << v.out;
  const auto doc = v.doc();
  bool saw_hurwitz = false;
  for (const auto& c : doc["result"]["checks"]) {
    EXPECT_NE(c["status"], "fail") << c.dump();
    saw_hurwitz |= c["check"] == "hurwitz";
  }
  EXPECT_TRUE(saw_hurwitz);
}

TEST(Cli, OutputFormats) {
  auto dot = invoke({"--out", "dot", "skeleton", "z^2"});
  ASSERT_EQ(dot.code, kOk);
  EXPECT_EQ(dot.out.rfind("graph skeleton {", 0), 0u);
  auto text = invoke({"--out", "text", "components", "z^2"});
  ASSERT_EQ(text.code, kOk);
  EXPECT_NE(text.out.find("components: 1"), std::string::npos);
}

TEST(Cli, SyntaxErrorPosition) {
  auto r = invoke({"analyze", "z^2 +"});
  EXPECT_EQ(r.code, kFailure);
  EXPECT_TRUE(r.out.empty());
  auto e = r.error();
  EXPECT_EQ(e["code"], "SyntaxError");
  EXPECT_EQ(e["line"], 1);
  EXPECT_EQ(e["column"], 6);
}

TEST(Cli, SemanticErrors) {
  auto r = invoke({"analyze", "z^2 + p^(1/2)"});
  EXPECT_EQ(r.code, kFailure);
  EXPECT_EQ(r.error()["code"], "SemanticError");

  auto small = invoke({"--field", "mixed", "--p", "3", "generate", "--n", "4", "--d", "6"});
  EXPECT_EQ(small.code, kFailure);
  EXPECT_EQ(small.error()["code"], "ResidueFieldTooSmall");
}

TEST(Cli, BadConfiguration) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--field", "equicharp", "--p", "4", "components", "z^2"},
           {"--field", "bogus", "components", "z^2"},
           {"--precision", "0", "components", "z^2"},
           {"components"},
           {"frobnicate"}}) {
    auto r = invoke(args);
    EXPECT_EQ(r.code, kFailure) << args.back();
    EXPECT_FALSE(r.err.empty());
  }
}

}  // namespace
}  // namespace berkram::cli
