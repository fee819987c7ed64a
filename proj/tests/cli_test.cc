// Copyright 2026 The phaseret Authors.
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

#include "phaseret/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "phaseret/io.hpp"

namespace phaseret {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("phaseret_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Result run(std::vector<std::string> args) const {
    args.insert(args.begin(), "phaseret");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  io::Json report(const Result& r) const { return io::Json::parse(r.out); }

  fs::path dir_;
};

TEST_F(CliTest, MeasureGaussFamily) {
  ASSERT_EQ(run({"signal", "--kind", "gauss", "--out", path("g.json")}).code, 0);
  const Result r = run({"measure", "--input", path("g.json"), "--family", "gauss", "--out", path("r"), "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const MeasurementRecord rec2 = io::record_from_json(io::read_json_file(path("r.2.json")));
  // xi = 0 sits at index n/2; the derivative of an even real spectrum vanishes there
  EXPECT_LE(rec2.magnitudes()[rec2.size() / 2], 1e-15);
  EXPECT_TRUE(fs::exists(path("r.3.csv")));
}

TEST_F(CliTest, MeasureSineFamily) {
  ASSERT_EQ(run({"signal", "--kind", "bump", "--out", path("b.json")}).code, 0);
  const Result r = run({"measure", "--input", path("b.json"), "--family", "sine", "--a", "1/1", "--b",
                        "2/1", "--out", path("s")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(report(r)["masks"][2]["a"], "2/1");
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(fs::exists(path("s." + std::to_string(i) + ".json")));
}

TEST_F(CliTest, MissingInputIsExitTwo) {
  EXPECT_EQ(run({"measure", "--input", path("nope.json"), "--out", path("r")}).code, 2);
  EXPECT_EQ(run({"measure", "--out", path("r")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(CliTest, ReconstructGaussAndRandom) {
  ASSERT_EQ(run({"signal", "--kind", "gauss", "--out", path("g.json")}).code, 0);
  ASSERT_EQ(run({"measure", "--input", path("g.json"), "--out", path("g")}).code, 0);
  Result r = run({"reconstruct", path("g.1.json"), path("g.2.json"), path("g.3.json"), "--truth",
                  path("g.json"), "--out", path("ghat.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(report(r)["residual"].get<double>(), 1e-6);
  EXPECT_TRUE(fs::exists(path("ghat.json")));

  ASSERT_EQ(run({"signal", "--kind", "poly", "--seed", "17", "--out", path("p.json")}).code, 0);
  ASSERT_EQ(run({"measure", "--input", path("p.json"), "--out", path("p")}).code, 0);
  r = run({"reconstruct", path("p.1.json"), path("p.2.json"), path("p.3.json"), "--truth", path("p.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(report(r)["residual"].get<double>(), 1e-3);
}

TEST_F(CliTest, ReconstructMismatchedGridsAndDegenerate) {
  ASSERT_EQ(run({"signal", "--kind", "gauss", "--out", path("a.json")}).code, 0);
  ASSERT_EQ(run({"signal", "--kind", "gauss", "--n", "1024", "--out", path("b.json")}).code, 0);
  ASSERT_EQ(run({"measure", "--input", path("a.json"), "--out", path("a")}).code, 0);
  ASSERT_EQ(run({"measure", "--input", path("b.json"), "--out", path("b")}).code, 0);
  EXPECT_EQ(run({"reconstruct", path("a.1.json"), path("b.2.json"), path("a.3.json")}).code, 2);

  io::Json zero = io::to_json(GridSignal(Grid(64, 8.0)));
  io::write_json_file(path("z.json"), zero);
  ASSERT_EQ(run({"measure", "--input", path("z.json"), "--out", path("z")}).code, 0);
  EXPECT_EQ(run({"reconstruct", path("z.1.json"), path("z.2.json"), path("z.3.json")}).code, 3);
}

TEST_F(CliTest, ClassifyBargmann) {
  ASSERT_EQ(run({"signal", "--kind", "bargmann_plus", "--out", path("p.json")}).code, 0);
  ASSERT_EQ(run({"signal", "--kind", "bargmann_minus", "--out", path("m.json")}).code, 0);
  const Result r = run({"classify", path("p.json"), path("m.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(report(r)["kind"], "ConjugateReflection");
  const Result b = run({"bargmann"});
  ASSERT_EQ(b.code, 0);
  EXPECT_LE(report(b)["max_frequency_gap"].get<double>(), 1e-10);
  EXPECT_EQ(report(b)["verdict"]["kind"], "ConjugateReflection");
}

TEST_F(CliTest, DiscreteCounterexample) {
  const Result r = run({"discrete", "counterexample", "--N", "3", "--kind", "discrete"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(report(r)["max_sample_gap"].get<double>(), 1e-12);
  EXPECT_EQ(report(r)["verdict"]["kind"], "Distinct");
  EXPECT_EQ(report(r)["M"], 4);
  EXPECT_EQ(run({"discrete", "counterexample", "--N", "2"}).code, 2);
  EXPECT_EQ(run({"discrete", "counterexample", "--N", "4"}).code, 2);
}

TEST_F(CliTest, DiscreteSufficiency) {
  const Result r = run({"discrete", "sufficiency", "--N", "4", "--trials", "50", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(report(r)["all_global_phase"].get<bool>());
  EXPECT_EQ(report(r)["survivors"], 100);
  EXPECT_EQ(run({"discrete", "sufficiency", "--N", "2"}).code, 2);
}

TEST_F(CliTest, DiscreteOracleWithInput) {
  io::write_json_file(path("p.json"), io::to_json(TrigPoly({6.0, -5.0, 1.0})));
  const Result r = run({"discrete", "oracle", "--input", path("p.json"), "--out", path("o.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(report(r)["candidates"].size(), 4u);
  EXPECT_EQ(report(r)["survivors"].size(), 1u);
  EXPECT_EQ(io::read_json_file(path("o.json")), report(r));
}

TEST_F(CliTest, ReportsAreDeterministic) {
  const std::vector<std::string> args{"discrete", "oracle", "--N", "6", "--seed", "99"};
  const Result a = run(args);
  const Result b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  ASSERT_EQ(run({"signal", "--kind", "hermite", "--seed", "5", "--out", path("h1.json")}).code, 0);
  ASSERT_EQ(run({"signal", "--kind", "hermite", "--seed", "5", "--out", path("h2.json")}).code, 0);
  EXPECT_EQ(io::read_json_file(path("h1.json")), io::read_json_file(path("h2.json")));
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

}  // namespace
}  // namespace phaseret
