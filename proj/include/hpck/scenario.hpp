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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hpck/cycle.hpp"
#include "hpck/enviro.hpp"
#include "hpck/errors.hpp"
#include "hpck/exergy.hpp"
#include "hpck/refrigerant.hpp"

namespace hpck {

enum class ScenarioMode {
  DesignPoint,      // screening conditions at each sink temperature
  RegressionSweep,  // rig regressions, measured compressor power
  Custom,           // screening conditions, every field overridable
};

enum class OutputFormat { Csv, Json };

struct SinkRange {
  double start = 50.0, stop = 50.0, step = 1.0;
  std::vector<double> points() const;
};

struct OutputSpec {
  OutputFormat format = OutputFormat::Csv;
  std::string path;        // empty: caller decides
  bool plot_data = false;  // condenser efficiency vs discharge temperature
};

struct Scenario {
  std::vector<RefrigerantId> refrigerants;
  ScenarioMode mode = ScenarioMode::DesignPoint;
  SinkRange t_sink;
  ConditionOverrides overrides;
  TewiParameters tewi;
  OutputSpec output;

  void validate() const;
};

// JSON document with top-level keys drawn from
// {refrigerants, mode, t_sink, overrides, tewi, output}.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

std::string_view to_string(ScenarioMode m) noexcept;
OutputFormat parse_output_format(std::string_view s);

struct ResultRow {
  RefrigerantId refrigerant;
  double T_sink = 0;
  double latent_heat_evap = 0;  // h_g - h_f at the evaporating temperature, kJ/kg
  OperatingConditions conditions;
  CycleSolution cycle;
  ExergyReport exergy;
  TewiResult tewi;
};

struct PointFailure {
  RefrigerantId refrigerant;
  double T_sink = 0;
  Errc code = Errc::Internal;
  std::string message;
};

struct ResultSeries {
  std::vector<ResultRow> rows;        // refrigerant order, then ascending sink temperature
  std::vector<PointFailure> failures;
  std::vector<std::string> warnings;
};

// Property sets are loaded once per refrigerant. A refrigerant whose tables
// fail to load is recorded as a failure for each of its points.
ResultSeries run_scenario(const Scenario& s, const std::filesystem::path& data_dir);

// Conditions used for one point of a scenario.
OperatingConditions scenario_conditions(const Scenario& s, RefrigerantId id, double T_sink,
                                        std::vector<std::string>* warnings);

// Report column names, in output order.
const std::vector<std::string>& report_columns();
// Numeric value of a report column (everything except "refrigerant").
double report_value(const ResultRow& row, std::string_view column);

std::string format_report(const ResultSeries& r, OutputFormat format);
// (refrigerant, T4_C, eta_cond_ex_pct) series.
std::string format_plot_data(const ResultSeries& r, OutputFormat format);
// Writes to `path`, IoError on failure.
void emit_report(const ResultSeries& r, OutputFormat format, const std::filesystem::path& path,
                 bool plot_data = false);

// Text form of every number in reports: printf %.10g, "nan"/"inf" otherwise.
std::string format_number(double v);

}  // namespace hpck
