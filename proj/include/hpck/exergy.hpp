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

// Flow exergy bookkeeping for the cycle in cycle.hpp. Specific exergy in
// kJ/kg, exergy rates and destructions in W.

#pragma once

#include <array>
#include <cstdint>

#include "hpck/cycle.hpp"
#include "hpck/properties.hpp"

namespace hpck {

struct DeadState {
  double T0 = 20.0;    // C
  double P0 = 101.325; // kPa
  double h0 = 0.0;     // refrigerant at (T0, P0)
  double s0 = 0.0;
  double water_cp = 4.186;
  std::uint64_t convention = 0;
};

DeadState make_dead_state(const PropertySet& props, double T0, double P0, double water_cp);
DeadState make_dead_state(const PropertySet& props, const OperatingConditions& cond);

struct FlowExergy {
  int point_id = 0;
  double specific = 0.0;  // kJ/kg
  double rate = 0.0;      // W
};

FlowExergy refrigerant_flow_exergy(const ThermoState& state, double m_dot, const DeadState& dead,
                                   int point_id = 0);
// Incompressible liquid with constant cp.
FlowExergy water_flow_exergy(double T, double m_dot, const DeadState& dead, int point_id = 0);

struct ComponentValues {
  double evaporator = 0, compressor = 0, condenser = 0, tev = 0;
  double sum() const { return evaporator + compressor + condenser + tev; }
};

// Exergy rates at points 1..8 (index 0 unused), W.
using PointExergies = std::array<double, 9>;

PointExergies point_exergies(const CycleSolution& sol, const OperatingConditions& cond,
                             const DeadState& dead);

// Destruction per component, W. Throws NegativeDestruction below -0.5 W.
ComponentValues component_destructions(const CycleSolution& sol, const OperatingConditions& cond,
                                       const DeadState& dead);

struct DestructionSummary {
  double cycle = 0;  // W
  ComponentValues relative;
};

DestructionSummary cycle_destruction_and_relative(const ComponentValues& dest);

ComponentValues component_exergy_efficiencies(const CycleSolution& sol,
                                              const OperatingConditions& cond,
                                              const DeadState& dead);

struct SystemEfficiencies {
  double cycle = 0, system = 0, second_law = 0;
};

SystemEfficiencies system_exergy_efficiencies(const CycleSolution& sol,
                                              const OperatingConditions& cond,
                                              const DeadState& dead);

struct ExergyReport {
  PointExergies rates{};
  ComponentValues destruction;
  double cycle_destruction = 0;
  ComponentValues relative;
  ComponentValues efficiency;
  SystemEfficiencies system;
};

ExergyReport analyze_exergy(const CycleSolution& sol, const OperatingConditions& cond,
                            const DeadState& dead);

}  // namespace hpck
