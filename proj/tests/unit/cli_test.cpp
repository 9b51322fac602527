// Copyright 2026 The hpck Authors
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

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "test_support.hpp"

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::string& args) {
  hpck::test::TempDir tmp;
  auto err_path = tmp.path() / "stderr.txt";
  std::string cmd = std::string("'") + HPCK_CLI_PATH + "' " + args + " 2>'" + err_path.string() + "'";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = hpck::test::read_file(err_path);
  return r;
}

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST(Cli, HelpAndVersion) {
  auto r = run_cli("--help");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("compare"), std::string::npos);
  EXPECT_EQ(run_cli("--version").exit_code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("simulate --refrigerant R22").exit_code, 2);
  EXPECT_EQ(run_cli("sweep --t-sink 40:abc").exit_code, 2);
  EXPECT_EQ(run_cli("compare --all --design-point --regressions").exit_code, 2);
  EXPECT_EQ(run_cli("--format xml compare --all").exit_code, 2);
}

TEST(Cli, MissingDataExitsThree) {
  hpck::test::TempDir dir;
  auto r = run_cli("--prop-data '" + dir.path().string() + "' simulate --refrigerant R134a");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("MissingData"), std::string::npos) << r.err;
}

TEST(Cli, CompareAllDesignPoint) {
  auto r = run_cli("compare --all --design-point --format csv");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(lines(r.out), 7u);
  EXPECT_EQ(r.out.rfind("refrigerant,", 0), 0u);
  EXPECT_TRUE(r.err.empty()) << r.err;
  EXPECT_EQ(run_cli("compare --all --design-point --format csv").out, r.out);
}

TEST(Cli, JsonOutputParses) {
  auto r = run_cli("--format json compare --refrigerant R134a,R152a");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["refrigerant"], "R152a");
}

TEST(Cli, SweepDefaults) {
  auto r = run_cli("sweep");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(lines(r.out), 12u);
}

TEST(Cli, RangeWarningGoesToStderr) {
  auto r = run_cli("simulate --refrigerant R134a --regressions --t-sink 55");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.err.find("RangeWarning"), std::string::npos);
  EXPECT_EQ(r.out.find("RangeWarning"), std::string::npos);
  EXPECT_EQ(lines(r.out), 2u);
}

TEST(Cli, PlotData) {
  auto r = run_cli("compare --all --plot-data");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("refrigerant,T4_C,eta_cond_ex_pct\n", 0), 0u);
  EXPECT_EQ(lines(r.out), 7u);
}

TEST(Cli, OutFileAndScenario) {
  hpck::test::TempDir dir;
  auto sc = dir.path() / "s.json";
  auto out = dir.path() / "o.csv";
  hpck::test::write_file(sc, R"({"refrigerants": ["R1234yf"], "output": {"format": "json"}})");
  auto r = run_cli("--out '" + out.string() + "' simulate --scenario '" + sc.string() + "'");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto j = nlohmann::json::parse(hpck::test::read_file(out));
  EXPECT_EQ(j[0]["refrigerant"], "R1234yf");

  hpck::test::write_file(sc, R"({"refrigerants": ["R1234yf"], "bogus": 1})");
  EXPECT_EQ(run_cli("simulate --scenario '" + sc.string() + "'").exit_code, 2);
}

TEST(Cli, PerPointFailureReported) {
  auto r = run_cli("compare --refrigerant R1234yf,R152a --t-sink 100");
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.err.find("OutOfRange"), std::string::npos) << r.err;
}

TEST(Cli, Tewi) {
  auto r = run_cli("tewi --gwp 1430 --charge 2 --leak 5 --life 15 --recovery 70 --energy 0");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("3003"), std::string::npos) << r.out;
  EXPECT_EQ(run_cli("tewi --gwp 10 --leak 200 --energy 1").exit_code, 2);
}

TEST(Cli, Props) {
  auto r = run_cli("props --refrigerant R134a --t 0");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("292.80"), std::string::npos) << r.out;
  EXPECT_EQ(run_cli("props --refrigerant R134a --t 200").exit_code, 2);
}

TEST(Cli, ValidateReportsEveryCheck) {
  auto r = run_cli("validate");
  EXPECT_EQ(r.out.rfind("criterion,check,expected,computed,tolerance,result\n", 0), 0u);
  std::size_t pass = 0, fail = 0;
  std::size_t pos = 0;
  while ((pos = r.out.find(",PASS\n", pos)) != std::string::npos) ++pass, ++pos;
  pos = 0;
  while ((pos = r.out.find(",FAIL\n", pos)) != std::string::npos) ++fail, ++pos;
  EXPECT_EQ(pass + fail + 1, lines(r.out));
  EXPECT_EQ(r.exit_code, fail ? 1 : 0);
}
