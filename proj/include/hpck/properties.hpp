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

// Tabulated refrigerant properties.
//
// Units throughout: T in C, P in kPa, h in kJ/kg, s in kJ/(kg K), rho in kg/m3.
// Enthalpy and entropy follow the convention h = 200, s = 1.0 for saturated
// liquid at 0 C. Nothing is ever extrapolated: queries outside the tables
// throw Error(OutOfRange).

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <vector>

#include "hpck/enviro.hpp"
#include "hpck/refrigerant.hpp"

namespace hpck {

enum class Phase { SubcooledLiquid, TwoPhase, SuperheatedVapor };
enum class SatPhase { Liquid, Vapor };

struct ThermoState {
  double T = 0.0;
  double P = 0.0;
  double h = 0.0;
  double s = 0.0;
  double rho = 0.0;
  // Vapor mass fraction for TwoPhase (0 and 1 are the saturation lines);
  // NaN for single-phase states.
  double quality = 0.0;
  Phase phase = Phase::TwoPhase;
  // Identifies the property tables (and reference shift) that produced the state.
  std::uint64_t convention = 0;

  bool single_phase() const { return phase != Phase::TwoPhase; }
};

struct SaturationRecord {
  double T, P, h_f, h_g, s_f, s_g, rho_f, rho_g;
};

// One row of <id>.sh.csv.
struct SuperheatRecord {
  double P, T, h, s, rho;
};

class PropertySet {
 public:
  // Reads <dir>/<id>.sat.csv and <dir>/<id>.sh.csv and checks every table
  // invariant. Coverage limits come from `meta`.
  static PropertySet load(RefrigerantId id, const std::filesystem::path& dir,
                          const MetadataTable& meta);
  static PropertySet load(RefrigerantId id, const std::filesystem::path& dir);

  // Builds from in-memory records with the same checks as load().
  static PropertySet from_records(RefrigerantId id, std::vector<SaturationRecord> sat,
                                  std::vector<SuperheatRecord> sh, const RefrigerantMeta& meta);

  RefrigerantId refrigerant() const;
  std::uint64_t convention() const;
  const std::vector<SaturationRecord>& saturation() const;

  double t_min() const;
  double t_max() const;
  double superheat_p_min() const;
  double superheat_p_max() const;
  double max_superheat() const;

  double saturation_pressure(double T) const;
  double saturation_temperature(double P) const;
  ThermoState saturated_state(double T, SatPhase phase) const;
  ThermoState superheated_state(double P, double T) const;
  // Superheated state at P with the given entropy / enthalpy (bisection on T).
  ThermoState state_at_entropy(double P, double s) const;
  ThermoState state_at_enthalpy(double P, double h) const;
  ThermoState two_phase_state(double P, double h) const;
  // Liquid at T below the saturation temperature of P, approximated by
  // saturated liquid at T.
  ThermoState subcooled_state(double T, double P) const;
  ThermoState dead_state(double T0, double P0) const;

  // Same tables with constants added to every h and s.
  PropertySet shifted(double dh, double ds) const;

 private:
  struct Impl;
  explicit PropertySet(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

inline PropertySet load_property_set(RefrigerantId id, const std::filesystem::path& dir) {
  return PropertySet::load(id, dir);
}

}  // namespace hpck
