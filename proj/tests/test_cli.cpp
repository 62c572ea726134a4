/*
   Copyright 2026 The utri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "utri/cli.hpp"

using namespace utri;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "utri");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("utri_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, Order) {
  const Outcome o = cli({"order", "--poly", "x1*x2-x2*x1", "--m", "2", "--field", "Q", "--max-n", "5"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.json()["r"], 1);
}

TEST(Cli, OrderCap) {
  const Outcome o = cli({"order", "--poly", "[x1,x2]*[x3,x4]*[x5,x6]", "--max-n", "2"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.json()["r"], "cap");
}

TEST(Cli, Classify) {
  const Outcome o =
      cli({"classify", "--poly", "(x1*x2-x2*x1)*(x3*x4-x4*x3)", "--m", "4", "--n", "5", "--field", "Q"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = o.json();
  EXPECT_EQ(j["case"], "dense_in_band");
  EXPECT_EQ(j["band"], 1);
  EXPECT_EQ(j["affine_dim"], 6);
  EXPECT_EQ(j["r"], 2);
}

TEST(Cli, SolveThenVerify) {
  const std::string target = write_temp("target.json", R"({"n":2,"ring":"field","entries":[{"j":1,"k":2,"value":"5"}]})");
  const Outcome s = cli({"solve", "--poly", "x1*x2-x2*x1", "--m", "2", "--n", "2", "--field", "Q", "--target", target});
  ASSERT_EQ(s.code, 0) << s.err;
  const Json w = s.json();
  EXPECT_EQ(w["status"], "exact");
  EXPECT_EQ(w["verify"]["exact"], true);
  const std::string witness = write_temp("witness.json", s.out);
  const Outcome v = cli({"verify", "--poly", "x1*x2-x2*x1", "--witness", witness});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(v.json()["passed"], true);
}

TEST(Cli, ByteReproducible) {
  const std::string target =
      write_temp("target3.json", R"({"n":3,"entries":[{"j":1,"k":3,"value":"-2/3"}]})");
  const std::vector<std::string> args{"solve", "--poly", "[x1,x2]*[x3,x4]", "--target", target, "--seed", "9"};
  EXPECT_EQ(cli(args).out, cli(args).out);
  const std::vector<std::string> hit{"hit", "--poly", "[x1,x2]", "--n", "3", "--f", "y[1,2]*y[2,3]-1", "--seed", "3"};
  EXPECT_EQ(cli(hit).out, cli(hit).out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"order", "--poly", "x1 +"}).code, kExitUsage);
  EXPECT_EQ(cli({"order", "--poly", "x1 + 1"}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"order"}).code, kExitUsage);
  const std::string diag = write_temp("diag.json", R"({"n":2,"entries":[{"j":1,"k":1,"value":"1"}]})");
  EXPECT_EQ(cli({"solve", "--poly", "[x1,x2]", "--target", diag}).code, kExitDomain);
  const std::string two = write_temp("two.json", R"({"n":1,"entries":[{"j":1,"k":1,"value":"2"}]})");
  EXPECT_EQ(cli({"solve", "--poly", "x1^2", "--target", two}).code, kExitDomain);
  EXPECT_EQ(cli({"oracle-enum", "--poly", "[x1,x2]*[x3,x4]", "--field", "Fp:3", "--n", "3"}).code, kExitBudget);
  EXPECT_EQ(cli({"solve", "--poly", "[x1,x2]", "--target", "/nonexistent/t.json"}).code, kExitUsage);
}

TEST(Cli, EvalAndGeneric) {
  const std::string mats = write_temp(
      "mats.json",
      R"([{"n":2,"entries":[{"j":1,"k":1,"value":"1"}]},{"n":2,"entries":[{"j":1,"k":2,"value":"5"}]}])");
  const Outcome e = cli({"eval", "--poly", "[x1,x2]", "--matrices", mats});
  ASSERT_EQ(e.code, 0) << e.err;
  const Json j = e.json();
  EXPECT_EQ(j["structured_agrees"], true);
  EXPECT_EQ(j["product"]["entries"].size(), 1U);
  EXPECT_EQ(j["product"]["entries"][0]["value"], "5");
  const Outcome g = cli({"eval", "--poly", "[x1,x2]", "--n", "2", "--generic"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(g.json()["product"]["ring"], "poly");
}

TEST(Cli, Coeffs) {
  const Outcome o = cli({"coeffs", "--poly", "[x1,x2]"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = o.json();
  EXPECT_EQ(j["k"], 1);
  EXPECT_EQ(j["coefficients"].size(), 2U);
}

TEST(Cli, HitAndVerifyOpenSet) {
  const Outcome h = cli({"hit", "--poly", "[x1,x2]*[x3,x4]", "--n", "5", "--f", "y[1,3] - y[2,4]^2"});
  ASSERT_EQ(h.code, 0) << h.err;
  const std::string witness = write_temp("hit.json", h.out);
  const Outcome v = cli({"verify", "--poly", "[x1,x2]*[x3,x4]", "--witness", witness});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(v.json()["passed"], true);
}

TEST(Oracle, CommutatorOverF2) {
  const NcPolynomial p = parse_polynomial("[x1,x2]", 2, Field::prime(2));
  const OracleSummary s = oracle_enum(p, 2);
  EXPECT_EQ(s.tuples, 64U);
  EXPECT_EQ(s.image, (std::set<std::vector<std::uint64_t>>{{0, 0, 0}, {0, 1, 0}}));
  EXPECT_TRUE(s.evaluators_agree);
}

TEST(Oracle, IdentityPolynomialIsSurjective) {
  const OracleSummary s = oracle_enum(parse_polynomial("x1", 1, Field::prime(2)), 2);
  EXPECT_EQ(s.image.size(), 8U);
  EXPECT_EQ(s.band_counts.at(-1), 6U);
}

TEST(Oracle, Guards) {
  EXPECT_THROW(oracle_enum(parse_polynomial("[x1,x2]*[x3,x4]", 4, Field::prime(3)), 3), Error);
  EXPECT_THROW(oracle_enum(parse_polynomial("x1", 1, Field::prime(7)), 2), Error);
  EXPECT_THROW(oracle_enum(parse_polynomial("x1", 1, Field::rational()), 2), Error);
  EXPECT_THROW(oracle_enum(parse_polynomial("x1", 1, Field::prime(2)), 4), Error);
}

TEST(Oracle, BandContainmentOverF3) {
  const NcPolynomial p = parse_polynomial("x1*x2*x1 - x1^2*x2", 2, Field::prime(3));
  const OracleSummary s = oracle_enum(p, 3);
  EXPECT_TRUE(s.evaluators_agree);
  for (const auto& [band, count] : s.band_counts) EXPECT_GE(band, 0) << count;
}

TEST(Oracle, NoSquareRootOfE12OverF5) {
  const OracleSummary s = oracle_enum(parse_polynomial("x1^2", 1, Field::prime(5)), 2);
  EXPECT_FALSE(s.image.contains(std::vector<std::uint64_t>{0, 1, 0}));
}
