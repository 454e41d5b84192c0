// Copyright 2026 The repwords Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "repwords/cli.hpp"

#include <sstream>

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"

namespace repwords::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(REPWORDS_TEST_DATA_DIR) + "/" + name; }

TEST(CliGenerateTest, Prefixes) {
  EXPECT_EQ(invoke({"generate", "g-of-h", "60"}).out,
            "010011011010010110010011011001010011010110010011011001011010\n");
  EXPECT_EQ(invoke({"generate", "h-fixed-point", "50"}).out,
            "03102010230203010201031023010203102010230201031023\n");
  EXPECT_EQ(invoke({"generate", "thue-morse", "16"}).out, "0110100110010110\n");
  const Result empty = invoke({"generate", "thue-morse", "0"});
  EXPECT_EQ(empty.code, kExitOk);
  EXPECT_EQ(empty.out, "");
}

TEST(CliGenerateTest, LongOutputSpansChunks) {
  const Result r = invoke({"generate", "h-fixed-point", "200000"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.size(), 200001u);
  EXPECT_EQ(r.out.substr(0, 10), "0310201023");
}

TEST(CliGenerateTest, Json) {
  const Result r = invoke({"generate", "thue-morse", "8", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["word"], "01101001");
}

TEST(CliGenerateTest, BadInput) {
  EXPECT_EQ(invoke({"generate", "fibonacci", "10"}).code, kExitInputError);
  EXPECT_EQ(invoke({"generate", "thue-morse", "-3"}).code, kExitInputError);
  EXPECT_EQ(invoke({"generate"}).code, kExitInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(CliCheckTest, ExitCodes) {
  EXPECT_EQ(invoke({"check", "--word", "0120"}).code, kExitOk);
  EXPECT_EQ(invoke({"check", "--word", "000", "--cubes"}).code, kExitViolation);
  EXPECT_EQ(invoke({"check", "--word", "001", "--squarefree"}).code, kExitViolation);
  EXPECT_EQ(invoke({"check", "--word", "0120", "--factors", "12"}).code, kExitViolation);
  EXPECT_EQ(invoke({"check", "--word", "01a"}).code, kExitInputError);
  EXPECT_EQ(invoke({"check", "--word", "0130", "--alphabet", "2"}).code, kExitInputError);
  EXPECT_EQ(invoke({"check", "--file", data("nondigit.txt")}).code, kExitInputError);
  EXPECT_EQ(invoke({"check", "--file", data("missing.txt")}).code, kExitInputError);
}

TEST(CliCheckTest, NamedPrefixMeetsTheBound) {
  EXPECT_EQ(invoke({"check", "--named", "g-of-h", "--length", "10000", "--cubes",
                    "--min-square-root", "4"})
                .code,
            kExitOk);
  EXPECT_EQ(invoke({"check", "--named", "g-of-h", "--length", "1000", "--min-square-root", "3"})
                .code,
            kExitViolation);
  EXPECT_EQ(invoke({"check", "--named", "h-fixed-point", "--length", "5000", "--squarefree",
                    "--factors", "12,13,21,32,231,10302", "--alphabet", "4"})
                .code,
            kExitOk);
}

TEST(CliCheckTest, StdinAndFileReadOneWordPerLine) {
  const Result r = invoke({"check", "--squarefree"}, "0120\n0110\n");
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_NE(r.out.find("word 1: length 4, pass"), std::string::npos);
  EXPECT_NE(r.out.find("word 2: length 4, violations found"), std::string::npos);

  const Result f = invoke({"check", "--file", data("words.txt"), "--format", "json"});
  ASSERT_EQ(f.code, kExitOk);
  const auto j = nlohmann::json::parse(f.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 3u);
  EXPECT_EQ(j[2]["repetitions"]["cubes"].size(), 1u);
}

TEST(CliVerifyTest, SingleCheck) {
  const Result r = invoke({"verify", "--only", "interior-h"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("[PASS] interior-occurrences-h"), std::string::npos);
  EXPECT_NE(r.out.find("interior h(3)h(1): c=2 t=020301 u=0102"), std::string::npos);
  EXPECT_NE(r.out.find("1/1 checks passed"), std::string::npos);
}

TEST(CliVerifyTest, JsonAndList) {
  const Result r = invoke({"verify", "--only", "synchronization-g", "--only", "enum-h",
                           "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["check_name"], "synchronization-g");
  EXPECT_EQ(j[1]["actual_count"], 49);

  const Result list = invoke({"verify", "--list"});
  EXPECT_EQ(list.code, kExitOk);
  EXPECT_NE(list.out.find("overlapfree-decomposition"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--only", "no-such-check"}).code, kExitInputError);
}

TEST(CliSearchTest, ThresholdInstance) {
  const Result r = invoke({"search", "--no-cubes", "--max-square-root", "2", "--fix-first", "0",
                           "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["leaf_count"], 289);
  EXPECT_EQ(j["height"], 30);
  EXPECT_EQ(j["finite"], true);
  ASSERT_EQ(j["maximal_avoiding"].size(), 1u);
  EXPECT_EQ(j["maximal_avoiding"][0], "00110010100110101100101001100");
  EXPECT_EQ(nlohmann::json::parse(j.dump()), j);
}

TEST(CliSearchTest, CapReached) {
  const Result r =
      invoke({"search", "--no-cubes", "--max-square-root", "3", "--depth-cap", "20"});
  EXPECT_EQ(r.code, kExitCapReached);
  EXPECT_NE(r.out.find("finite: false"), std::string::npos);
}

TEST(CliSearchTest, TraversalsAgree) {
  const std::vector<std::string> base{"search", "--no-cubes", "--max-square-root", "2",
                                      "--format", "json"};
  std::vector<std::string> out;
  for (const char* t : {"dfs", "bfs", "parallel"}) {
    auto args = base;
    args.insert(args.end(), {"--traversal", t});
    out.push_back(invoke(args).out);
  }
  EXPECT_EQ(out[0], out[1]);
  EXPECT_EQ(out[0], out[2]);
  EXPECT_EQ(nlohmann::json::parse(out[0])["leaf_count"], 578);
}

TEST(CliSearchTest, BadOptions) {
  EXPECT_EQ(invoke({"search", "--depth-cap", "0"}).code, kExitInputError);
  EXPECT_EQ(invoke({"search", "--fix-first", "5"}).code, kExitInputError);
  EXPECT_EQ(invoke({"search", "--traversal", "random"}).code, kExitInputError);
}

}  // namespace
}  // namespace repwords::cli
