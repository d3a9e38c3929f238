// Copyright 2026 The pimub Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace pimub::cli {
namespace {

using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pimub_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, Field) {
  const Result r = run({"field", "--n", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("selfdual_basis").size(), 2u);
  EXPECT_EQ(run({"field", "--n", "8", "--verify"}).code, kExitOk);
}

TEST(Cli, UsageErrors) {
  const Result zero = run({"field", "--n", "0"});
  EXPECT_EQ(zero.code, kExitUsage);
  EXPECT_EQ(Json::parse(zero.err).at("error"), "usage");
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"simulate", "--n", "2", "--exact"}).code, kExitUsage);
  EXPECT_EQ(run({"simulate", "--n", "2", "--seed", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"simulate", "--n", "2", "--seed", "1", "--exact", "--method", "x"}).code,
            kExitUsage);
  EXPECT_EQ(run({"reconstruct", temp_file("does_not_exist.json")}).code, kExitUsage);
  EXPECT_EQ(run({"field", "--help"}).code, kExitOk);
}

TEST(Cli, OrbitsTable) {
  const Result json = run({"orbits", "--n", "3"});
  ASSERT_EQ(json.code, kExitOk);
  EXPECT_EQ(Json::parse(json.out).at("orbits").size(), 24u);
  const Result csv = run({"orbits", "--n", "3", "--csv"});
  ASSERT_EQ(csv.code, kExitOk);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 25);
}

TEST(Cli, MubsToDirectory) {
  const std::string dir = temp_file("mubs");
  std::filesystem::remove_all(dir);
  ASSERT_EQ(run({"mubs", "--n", "2", "--out", dir, "--verify"}).code, kExitOk);
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    (void)entry;
    ++files;
  }
  EXPECT_EQ(files, 6);
  const Json v = Json::parse(slurp(dir + "/basis_vertical.json"));
  EXPECT_EQ(v.at("vectors").size(), 4u);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ExactRoundTrip) {
  const std::string sim = temp_file("exact.json");
  ASSERT_EQ(run({"simulate", "--n", "2", "--seed", "1", "--exact", "--out", sim}).code, kExitOk);
  const Result r = run({"reconstruct", sim, "--verify"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json report = Json::parse(r.out);
  EXPECT_NEAR(report.at("fidelity").get<double>(), 1.0, 1e-9);
  EXPECT_EQ(report.at("orbit_count"), 13);
  EXPECT_EQ(report.at("independent_count"), 9);
  std::filesystem::remove(sim);
}

TEST(Cli, SampledPipelineIsDeterministic) {
  for (const std::string method : {"twirl", "dicke", "blocks"}) {
    const std::string a = temp_file("a.json");
    const std::string b = temp_file("b.json");
    const std::vector<std::string> args{"simulate", "--n",     "3",      "--seed", "9",
                                        "--shots",  "2000",    "--method", method};
    auto with_out = [&](const std::string& path) {
      auto v = args;
      v.push_back("--out");
      v.push_back(path);
      return v;
    };
    ASSERT_EQ(run(with_out(a)).code, kExitOk);
    ASSERT_EQ(run(with_out(b)).code, kExitOk);
    EXPECT_EQ(slurp(a), slurp(b));
    const Result r1 = run({"reconstruct", a});
    const Result r2 = run({"reconstruct", b});
    ASSERT_EQ(r1.code, kExitOk) << r1.err;
    EXPECT_EQ(r1.out, r2.out);
    const Json report = Json::parse(r1.out);
    EXPECT_GT(report.at("fidelity").get<double>(), 0.9);
    EXPECT_EQ(run({"reconstruct", a, "--verify", "--tolerance", "1e-12"}).code, kExitFailure);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }
}

TEST(Cli, StateFile) {
  const std::string state = temp_file("state.json");
  std::ofstream(state) << R"({"method": "dicke", "weights": [0.5, 0, 0.5]})";
  const Result r = run({"simulate", "--n", "2", "--seed", "0", "--exact", "--state", state});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json sim = Json::parse(r.out);
  EXPECT_EQ(sim.at("state").at("entries")[0][0], 0.5);
  std::ofstream(state) << R"({"method": "dicke", "weights": [1.5, 0, -0.5]})";
  const Result bad = run({"simulate", "--n", "2", "--seed", "0", "--exact", "--state", state});
  EXPECT_EQ(bad.code, kExitFailure);
  EXPECT_EQ(Json::parse(bad.err).at("error"), "invalid-spec");
  std::filesystem::remove(state);
}

TEST(Cli, SchemaErrors) {
  const std::string path = temp_file("bad.json");
  std::ofstream(path) << R"({"n": 2, "records": [{"basis": "vertical"}]})";
  const Result r = run({"reconstruct", path});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_EQ(Json::parse(r.err).at("error"), "schema");
  std::filesystem::remove(path);
}

TEST(Cli, Verify) {
  for (const std::string n : {"1", "2", "3"}) {
    const Result r = run({"verify", "--n", n});
    ASSERT_EQ(r.code, kExitOk) << r.out << r.err;
    EXPECT_TRUE(Json::parse(r.out).at("passed").get<bool>());
  }
}

}  // namespace
}  // namespace pimub::cli
