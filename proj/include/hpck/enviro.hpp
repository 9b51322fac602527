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

#include <array>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "hpck/refrigerant.hpp"

namespace hpck {

struct RefrigerantMeta {
  RefrigerantId id;
  double gwp_100yr;              // kg CO2-eq / kg
  double molar_mass;             // g/mol
  double normal_boiling_point;   // C
  double critical_pressure;      // MPa
  double critical_temperature;   // C
  std::optional<double> ufl;     // vol %
  std::optional<double> lfl;     // vol %
  std::optional<double> auto_ignition;  // C

  bool flammable() const { return lfl.has_value(); }
};

// The built-in table. Throws UnknownRefrigerant for ids outside the enum.
const RefrigerantMeta& refrigerant_metadata(RefrigerantId id);

class MetadataTable {
 public:
  static MetadataTable embedded();

  // `refrigerants.csv` with header
  //   id,gwp,molar_mass,nbp_C,pc_MPa,tc_C,ufl_pct,lfl_pct,autoignition_C
  // Empty cells mean "none". Rows may cover a subset; the rest keep the
  // built-in values.
  static MetadataTable load_csv(const std::filesystem::path& path);

  // Built-in table, overridden by data_dir/refrigerants.csv when present.
  static MetadataTable for_data_dir(const std::filesystem::path& data_dir);

  const RefrigerantMeta& get(RefrigerantId id) const;

 private:
  std::array<RefrigerantMeta, 6> rows_{};
};

struct TewiInputs {
  double gwp = 0.0;
  double charge_m = 0.0;             // kg
  double leak_rate_L = 0.0;          // % per year
  double life_n = 0.0;               // years
  double recovery_alpha = 0.0;       // %
  double annual_energy_E = 0.0;      // kWh per year
  double emission_factor_beta = 0.0; // kg CO2 per kWh

  void validate() const;
};

struct TewiResult {
  double direct = 0.0;    // kg CO2-eq
  double indirect = 0.0;  // kg CO2-eq
  double total = 0.0;     // kg CO2-eq
};

TewiResult tewi(const TewiInputs& in);

// Scenario-level TEWI parameters. These are configuration defaults, not
// measured values; annual energy defaults to total electric power times the
// yearly operating hours.
struct TewiParameters {
  double charge_m = 2.0;
  double leak_rate_L = 5.0;
  double life_n = 15.0;
  double recovery_alpha = 70.0;
  double operating_hours = 1500.0;
  std::optional<double> annual_energy_E;
  double emission_factor_beta = 0.8;
};

TewiInputs make_tewi_inputs(const TewiParameters& p, double gwp, double w_elec_total_kw);

struct ComparisonMetrics {
  double COP_cycle = 0.0;
  double TEWI_total = 0.0;
  double eta_cycle_ex = 0.0;
  double E_dest_cycle = 0.0;
};

struct NormalizedComparison {
  RefrigerantId baseline;
  std::vector<std::pair<RefrigerantId, ComparisonMetrics>> ratios;
};

NormalizedComparison normalize_vs_baseline(
    const std::vector<std::pair<RefrigerantId, ComparisonMetrics>>& metrics,
    RefrigerantId baseline);

}  // namespace hpck
