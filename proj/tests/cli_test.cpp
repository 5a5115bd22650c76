// Copyright 2026 The Transfinite Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "transfinite/audit.hpp"
#include "transfinite/errors.hpp"

namespace transfinite::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(Cli, TraceText) {
  const Result r = invoke({"trace", "--steps", "3", "--horizon", "w+1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[1].rfind("0 ", 0), 0u);
  EXPECT_EQ(lines[3].rfind("2 ", 0), 0u);
  EXPECT_EQ(lines[4].rfind("w ", 0), 0u);
  EXPECT_EQ(lines[5].rfind("w+1 ", 0), 0u);
  EXPECT_NE(lines[5].find("N u {c}"), std::string::npos);
}

TEST(Cli, TraceFiniteHorizonStopsEarly) {
  const Result r = invoke({"trace", "--steps", "50", "--horizon", "4", "--format", "csv"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "alpha,outcome,card,A,B");
  EXPECT_EQ(lines[5], "4,4,aleph0,\"{0,1,2,3}\",\"N\\{0,1,2,3}\"");
}

TEST(Cli, TraceJsonLinesRoundTrip) {
  const Result r = invoke({"trace", "--steps", "2", "--horizon", "w*2", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 5u);
  std::vector<std::string> alphas;
  for (const auto& line : lines) {
    const Json row = Json::parse(line);
    alphas.push_back(row["alpha"].get<std::string>());
    EXPECT_EQ(Json::parse(row.dump()), row);
  }
  EXPECT_EQ(alphas, (std::vector<std::string>{"0", "1", "w", "w+1", "w*2"}));
  const Json last = Json::parse(lines.back());
  EXPECT_EQ(last["outcome"], "c");
  EXPECT_EQ(last["card"], "0");
}

TEST(Cli, TraceOtherStrategyNotesLimit) {
  const Result r = invoke({"trace", "--steps", "3", "--horizon", "w+1", "--strategy", "kth:2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.err.find("limit stage not evaluable"), std::string::npos);
  EXPECT_EQ(lines_of(r.out).size(), 4u);
}

TEST(Cli, TraceRejectsBadInput) {
  EXPECT_EQ(invoke({"trace", "--horizon", "bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"trace", "--strategy", "largest"}).code, kUsage);
  EXPECT_EQ(invoke({"trace", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(invoke({"--help"}).code, kOk); }

TEST(Cli, AuditJsonMatchesGolden) {
  const std::vector<std::string> args = {"audit", "--format", "json", "--seed", "42"};
  const Result first = invoke(args);
  ASSERT_EQ(first.code, kOk) << first.err;
  const Json report = Json::parse(first.out);
  ASSERT_EQ(report["verdicts"].size(), kAllClaims.size());
  EXPECT_EQ(report["config"]["seed"], 42);
  const Result second = invoke(args);
  EXPECT_EQ(first.out, second.out);
}

TEST(Cli, AuditTextAndCsv) {
  const Result text = invoke({"audit", "--horizon", "w+1"});
  ASSERT_EQ(text.code, kOk) << text.err;
  EXPECT_NE(text.out.find("Lemma1_3_SingletonEnd"), std::string::npos);
  const Result csv = invoke({"audit", "--horizon", "w+1", "--format", "csv"});
  ASSERT_EQ(csv.code, kOk) << csv.err;
  EXPECT_EQ(lines_of(csv.out).front(), "claim,status,checked_range,witness");
}

TEST(Cli, AuditRejectsSmallHorizon) {
  EXPECT_EQ(invoke({"audit", "--horizon", "w"}).code, kUsage);
  EXPECT_EQ(invoke({"audit", "--window", "0"}).code, kUsage);
}

TEST(Cli, AuditReportsProfileDeviation) {
  const auto path = std::filesystem::temp_directory_path() / "transfinite_cli_profile.json";
  {
    std::ifstream in(TRANSFINITE_GOLDEN_PROFILE_PATH);
    Json profile = Json::parse(in);
    profile["Thm1_GreatestExists"] = "Verified";
    std::ofstream(path) << profile.dump();
  }
  const Result r = invoke({"audit", "--horizon", "w+1", "--profile", path.string()});
  EXPECT_EQ(r.code, kDeviation);
  EXPECT_NE(r.err.find("Thm1_GreatestExists"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(invoke({"audit", "--profile", path.string()}).code, kUsage);
}

TEST(Cli, FiniteSize) {
  const Result r = invoke({"finite", "--size", "10"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("end stage:    9 (Singleton)"), std::string::npos);
  EXPECT_NE(r.out.find("survivor:     9"), std::string::npos);
}

TEST(Cli, FiniteUniverse) {
  const Result r = invoke({"finite", "--universe", "3,1,4", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["survivor"], 4);
  EXPECT_EQ(j["end"], "Singleton");
  EXPECT_EQ(j["has_greatest"], 4);
  EXPECT_EQ(j["agrees"], true);
  const Result one = invoke({"finite", "--size", "1", "--format", "json"});
  ASSERT_EQ(one.code, kOk);
  EXPECT_EQ(Json::parse(one.out)["end_stage"], "0");
}

TEST(Cli, FiniteRejectsBadUniverse) {
  EXPECT_EQ(invoke({"finite"}).code, kUsage);
  EXPECT_EQ(invoke({"finite", "--universe", ""}).code, kUsage);
  EXPECT_EQ(invoke({"finite", "--size", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"finite", "--universe", "1,1"}).code, kUsage);
  EXPECT_EQ(invoke({"finite", "--universe", "1,x"}).code, kUsage);
  EXPECT_EQ(invoke({"finite", "--size", "3", "--universe", "1"}).code, kUsage);
}

TEST(Cli, Ord) {
  const Result limit = invoke({"ord", "1+w"});
  ASSERT_EQ(limit.code, kOk);
  EXPECT_EQ(limit.out, "w (limit)\n");
  EXPECT_EQ(invoke({"ord", "w*2+4"}).out, "w*2+4 (successor of w*2+3)\n");
  EXPECT_EQ(invoke({"ord", "w^w"}).out, "w^w (limit)\n");
  EXPECT_EQ(invoke({"ord", "0"}).out, "0 (zero)\n");
  EXPECT_EQ(invoke({"ord", "bogus+"}).code, kUsage);
  const Json j = Json::parse(invoke({"ord", "w*2+4", "--format", "json"}).out);
  EXPECT_EQ(j["canonical"], "w*2+4");
  EXPECT_EQ(j["predecessor"], "w*2+3");
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "transfinite_cli_out.txt";
  const Result r = invoke({"ord", "w+w", "--output", path.string()});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "w*2 (limit)");
  std::filesystem::remove(path);
}

TEST(Cli, ParseStrategy) {
  EXPECT_TRUE(std::holds_alternative<MinChoice>(parse_strategy("min")));
  EXPECT_EQ(std::get<KthSmallest>(parse_strategy("kth:3")).k, 3u);
  const Scripted s = std::get<Scripted>(parse_strategy("scripted:0=3/1,1=0/2"));
  ASSERT_EQ(s.table.size(), 2u);
  EXPECT_EQ(s.table.at(0).first, 3u);
  EXPECT_EQ(s.table.at(0).second, 1u);
  EXPECT_EQ(s.table.at(1).second, 2u);
  EXPECT_THROW(parse_strategy("kth:0"), ConfigError);
  EXPECT_THROW(parse_strategy("kth:"), ConfigError);
  EXPECT_THROW(parse_strategy("scripted:0=3"), ConfigError);
  EXPECT_THROW(parse_strategy("max"), ConfigError);
}

}  // namespace
}  // namespace transfinite::cli
