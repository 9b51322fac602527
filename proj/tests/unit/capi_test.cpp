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

#include "hpck/hpck.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "test_support.hpp"

namespace {

const std::string kData = HPCK_TEST_DATA_DIR;

}  // namespace

TEST(CApi, StatusNumbersMatchCore) {
  EXPECT_EQ(HPCK_E_MISSING_DATA, static_cast<int>(hpck::Errc::MissingData));
  EXPECT_EQ(HPCK_E_IO, static_cast<int>(hpck::Errc::IoError));
  EXPECT_EQ(HPCK_E_INTERNAL, static_cast<int>(hpck::Errc::Internal));
  EXPECT_STREQ(hpck_status_name(HPCK_E_OUT_OF_RANGE), "OutOfRange");
  EXPECT_TRUE(hpck_status_is_data_error(HPCK_E_MALFORMED_DATA));
  EXPECT_FALSE(hpck_status_is_data_error(HPCK_E_OUT_OF_RANGE));
  EXPECT_STRNE(hpck_version(), "");
}

TEST(CApi, PropertySet) {
  hpck_propset* ps = nullptr;
  ASSERT_EQ(hpck_propset_load("R134a", kData.c_str(), &ps), HPCK_OK);
  hpck_sat_props sp;
  ASSERT_EQ(hpck_propset_saturation(ps, 0.0, &sp), HPCK_OK);
  EXPECT_NEAR(sp.P_kPa, 292.8031823, 1e-5);
  EXPECT_NEAR(sp.hf_kJkg, 200.0, 1e-6);
  EXPECT_NEAR(sp.hg_kJkg, 398.6034651, 1e-5);
  double T = 0;
  ASSERT_EQ(hpck_propset_saturation_temperature(ps, sp.P_kPa, &T), HPCK_OK);
  EXPECT_NEAR(T, 0.0, 1e-9);
  EXPECT_EQ(hpck_propset_saturation(ps, 200.0, &sp), HPCK_E_OUT_OF_RANGE);
  EXPECT_NE(std::string(hpck_last_error()).find("200"), std::string::npos);
  hpck_propset_free(ps);

  ps = reinterpret_cast<hpck_propset*>(1);
  EXPECT_EQ(hpck_propset_load("R22", kData.c_str(), &ps), HPCK_E_UNKNOWN_REFRIGERANT);
  EXPECT_EQ(ps, nullptr);
  EXPECT_EQ(hpck_propset_load("R134a", "/nonexistent", &ps), HPCK_E_MISSING_DATA);
  EXPECT_EQ(hpck_propset_load(nullptr, kData.c_str(), &ps), HPCK_E_INVALID_ARGUMENT);
}

TEST(CApi, ScenarioLifecycle) {
  hpck_scenario* sc = nullptr;
  ASSERT_EQ(hpck_scenario_parse(R"({"refrigerants": "all", "output": {"format": "json"}})", &sc), HPCK_OK);
  hpck_format fmt = HPCK_FORMAT_CSV;
  int plot = 1;
  const char* path = nullptr;
  ASSERT_EQ(hpck_scenario_output(sc, &fmt, &plot, &path), HPCK_OK);
  EXPECT_EQ(fmt, HPCK_FORMAT_JSON);
  EXPECT_EQ(plot, 0);
  EXPECT_STREQ(path, "");

  hpck_results* r = nullptr;
  ASSERT_EQ(hpck_scenario_run(sc, kData.c_str(), &r), HPCK_OK);
  EXPECT_EQ(hpck_results_count(r), 6u);
  EXPECT_EQ(hpck_results_failure_count(r), 0u);
  EXPECT_EQ(hpck_results_warning_count(r), 0u);
  EXPECT_EQ(hpck_results_warning(r, 0), nullptr);
  double q = 0;
  ASSERT_EQ(hpck_results_value(r, 0, "Q_cond_kW", &q), HPCK_OK);
  EXPECT_NEAR(q, 5.0, 1e-12);
  EXPECT_EQ(hpck_results_value(r, 0, "nope", &q), HPCK_E_INVALID_ARGUMENT);
  EXPECT_EQ(hpck_results_value(r, 99, "Q_cond_kW", &q), HPCK_E_INVALID_ARGUMENT);

  char* text = nullptr;
  ASSERT_EQ(hpck_results_format(r, HPCK_FORMAT_CSV, 0, &text), HPCK_OK);
  std::string csv = text;
  hpck_string_free(text);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);

  hpck::test::TempDir dir;
  auto out = dir.path() / "r.csv";
  ASSERT_EQ(hpck_results_write(r, HPCK_FORMAT_CSV, 0, out.c_str()), HPCK_OK);
  EXPECT_EQ(hpck::test::read_file(out), csv);
  EXPECT_EQ(hpck_results_write(r, HPCK_FORMAT_CSV, 0, (dir.path() / "x" / "y").c_str()), HPCK_E_IO);

  hpck_results_free(r);
  hpck_scenario_free(sc);
}

TEST(CApi, ScenarioErrors) {
  hpck_scenario* sc = nullptr;
  EXPECT_EQ(hpck_scenario_parse("{", &sc), HPCK_E_PARSE);
  EXPECT_EQ(sc, nullptr);
  EXPECT_EQ(hpck_scenario_parse(R"({"refrigerants": ["R134a"], "x": 1})", &sc), HPCK_E_SCHEMA);
  EXPECT_EQ(hpck_scenario_load("/nonexistent.json", &sc), HPCK_E_IO);
}

TEST(CApi, FailuresSurfacePerPoint) {
  hpck_scenario* sc = nullptr;
  ASSERT_EQ(hpck_scenario_parse(R"({"refrigerants": ["R134a"]})", &sc), HPCK_OK);
  hpck_results* r = nullptr;
  ASSERT_EQ(hpck_scenario_run(sc, "/nonexistent", &r), HPCK_OK);
  EXPECT_EQ(hpck_results_count(r), 0u);
  ASSERT_EQ(hpck_results_failure_count(r), 1u);
  hpck_status st = HPCK_OK;
  const char* msg = nullptr;
  ASSERT_EQ(hpck_results_failure(r, 0, &st, &msg), HPCK_OK);
  EXPECT_EQ(st, HPCK_E_MISSING_DATA);
  EXPECT_NE(msg, nullptr);
  EXPECT_EQ(hpck_results_failure(r, 1, &st, &msg), HPCK_E_INVALID_ARGUMENT);
  hpck_results_free(r);
  hpck_scenario_free(sc);
}

TEST(CApi, Validation) {
  hpck_validation* v = nullptr;
  ASSERT_EQ(hpck_validate(kData.c_str(), &v), HPCK_OK);
  EXPECT_GT(hpck_validation_passed(v) + hpck_validation_failed(v), 0u);
  char* text = nullptr;
  ASSERT_EQ(hpck_validation_format(v, HPCK_FORMAT_JSON, &text), HPCK_OK);
  std::string json = text;
  EXPECT_EQ(json.front(), '{');
  EXPECT_NE(json.find("\"checks\""), std::string::npos);
  hpck_string_free(text);
  hpck_validation_free(v);
}

TEST(CApi, Tewi) {
  hpck_tewi_inputs in{1430, 2, 5, 15, 70, 1000, 0.8};
  hpck_tewi_result out;
  ASSERT_EQ(hpck_tewi(&in, &out), HPCK_OK);
  EXPECT_NEAR(out.direct, 3003.0, 1e-9);
  EXPECT_NEAR(out.indirect, 12000.0, 1e-9);
  in.leak_rate_L = -1;
  EXPECT_EQ(hpck_tewi(&in, &out), HPCK_E_INVALID_ARGUMENT);
  double gwp = 0;
  ASSERT_EQ(hpck_refrigerant_gwp("R152a", &gwp), HPCK_OK);
  EXPECT_EQ(gwp, 124);
}

TEST(CApi, NullHandlesAreSafe) {
  hpck_propset_free(nullptr);
  hpck_scenario_free(nullptr);
  hpck_results_free(nullptr);
  hpck_validation_free(nullptr);
  hpck_string_free(nullptr);
  EXPECT_EQ(hpck_results_count(nullptr), 0u);
  EXPECT_EQ(hpck_validation_failed(nullptr), 0u);
}
