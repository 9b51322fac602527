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

// Single-stage vapor-compression heat pump between a ground loop (points 1-2)
// and a storage tank loop (points 7-8). Refrigerant points: 3 compressor
// suction, 4 discharge (4s isentropic), 5 condenser outlet, 6 evaporator inlet.
//
// Powers and heat rates in kW unless noted, pump powers in W, temperatures in C.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpck/properties.hpp"
#include "hpck/refrigerant.hpp"

namespace hpck {

enum class SolveMode {
  MeasuredPower,  // compressor electric power given, condenser duty follows
  FixedCapacity,  // condenser duty given, compressor power follows
};

struct OperatingConditions {
  double T_sink = 50.0;
  double T_source = 13.0;
  double T_SH = 8.0;   // K
  double T_SC = 2.0;   // K
  double T_EAP = 2.0;  // K
  double T_CAP = 2.0;  // K
  double T0 = 20.0;
  double P0 = 101.325;          // kPa
  double pump1_flow = 0.595;    // m3/h, ground loop
  double pump2_flow = 0.543;    // m3/h, tank loop
  double pump1_power = 60.0;    // W
  double pump2_power = 40.0;    // W
  double htf_cp = 4.186;        // kJ/(kg K)
  double htf_rho = 998.0;       // kg/m3
  SolveMode mode = SolveMode::FixedCapacity;
  double W_elec_comp = 0.0;     // kW, MeasuredPower input
  double Q_cond = 5.0;          // kW, FixedCapacity input
  // Replaces the isentropic efficiency correlation when set.
  std::optional<double> eta_isen;

  double T_evap() const { return T_source - T_EAP - T_SH; }
  double T_cond() const { return T_sink + T_CAP + T_SC; }
  double pump1_mass_flow() const { return htf_rho * pump1_flow / 3600.0; }  // kg/s
  double pump2_mass_flow() const { return htf_rho * pump2_flow / 3600.0; }  // kg/s

  // Throws InvalidOverride on any broken invariant.
  void validate() const;
};

struct ConditionOverrides {
  std::optional<double> T_source, T_SH, T_SC, T_EAP, T_CAP, T0, P0;
  std::optional<double> pump1_flow, pump2_flow, pump1_power, pump2_power;
  std::optional<double> htf_cp, htf_rho;
  std::optional<double> W_elec_comp, Q_cond, eta_isen;
  std::optional<SolveMode> mode;

  // True when every regression-driven field is given.
  bool covers_regressions() const;
};

// Applies overrides and validates the result.
void apply_overrides(OperatingConditions& c, const ConditionOverrides& o);

// Conditions from the sink-temperature regressions of the test rig, in
// MeasuredPower mode. Outside 40..50 C (without full overrides) a range
// warning is appended to `warnings`.
OperatingConditions operating_conditions_from_regressions(double T_sink,
                                                          const ConditionOverrides& overrides = {},
                                                          std::vector<std::string>* warnings = nullptr);

// Screening conditions: sink 50 C, source 13 C, SH 8 K, SC 2 K, both
// approaches 2 K, condenser duty 5 kW.
OperatingConditions design_point_conditions(RefrigerantId id);

double compressor_isentropic_efficiency(double T_evap, double T_cond);
// Manufacturer fit for the overall compressor efficiency, as a fraction.
double compressor_overall_efficiency(double T_evap, double T_cond);

struct CycleStatePoints {
  ThermoState state3, state4s, state4, state5, state6;
  double T1 = 0, T2 = 0, T7 = 0, T8 = 0;  // heat-transfer fluid, C
  double T_evap = 0, T_cond = 0;          // C
  double P_evap = 0, P_cond = 0;          // kPa
};

struct CycleSolution {
  CycleStatePoints points;
  double m_ref = 0;         // kg/s
  double Q_evap = 0;        // kW
  double Q_cond = 0;        // kW
  double W_comp = 0;        // kW, shaft work m (h4 - h3)
  double W_elec_comp = 0;   // kW
  double W_elec_total = 0;  // kW, compressor + pumps
  double eta_isen = 0;
  double eta_comp = 0;
  double eta_prime_comp = 0;
  double VRC = 0;           // kJ/m3
  double COP_cycle = 0;
  double COP_system = 0;
  double COP_carnot = 0;
};

CycleStatePoints solve_state_points(const OperatingConditions& cond, const PropertySet& props);

// Energy balance, COPs and heat-transfer-fluid outlet temperatures.
CycleSolution solve_cycle(const CycleStatePoints& points, const OperatingConditions& cond);

struct PerformanceCoefficients {
  double cycle, system, carnot;
};

PerformanceCoefficients performance_coefficients(const CycleSolution& sol,
                                                 const OperatingConditions& cond);

// (T2, T8) in C.
std::pair<double, double> htf_outlet_temperatures(const CycleSolution& sol,
                                                  const OperatingConditions& cond);

inline CycleSolution simulate_cycle(const OperatingConditions& cond, const PropertySet& props) {
  return solve_cycle(solve_state_points(cond, props), cond);
}

}  // namespace hpck
