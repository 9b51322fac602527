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

#include "hpck/exergy.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "hpck/errors.hpp"

namespace hpck {

namespace {

constexpr double kKelvin = 273.15;
constexpr double kNegativeTolW = -0.5;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double ratio(double num_, double den, const char* what) {
  if (den == 0.0) fail(Errc::ZeroDenominator, std::string(what) + ": zero denominator");
  return num_ / den;
}

}  // namespace

DeadState make_dead_state(const PropertySet& props, double T0, double P0, double water_cp) {
  auto st = props.dead_state(T0, P0);
  return {T0, P0, st.h, st.s, water_cp, props.convention()};
}

DeadState make_dead_state(const PropertySet& props, const OperatingConditions& cond) {
  return make_dead_state(props, cond.T0, cond.P0, cond.htf_cp);
}

FlowExergy refrigerant_flow_exergy(const ThermoState& state, double m_dot, const DeadState& dead,
                                   int point_id) {
  if (state.convention != dead.convention)
    fail(Errc::ConventionMismatch, "state and dead state come from different property tables");
  const double e = (state.h - dead.h0) - (dead.T0 + kKelvin) * (state.s - dead.s0);
  return {point_id, e, m_dot * e * 1000.0};
}

FlowExergy water_flow_exergy(double T, double m_dot, const DeadState& dead, int point_id) {
  if (!(T > 0.0 && T < 100.0))
    fail(Errc::OutOfRange, "water temperature " + num(T) + " C outside 0..100 C");
  const double t0k = dead.T0 + kKelvin;
  const double e = dead.water_cp * (T - dead.T0) - t0k * dead.water_cp * std::log((T + kKelvin) / t0k);
  return {point_id, e, m_dot * e * 1000.0};
}

PointExergies point_exergies(const CycleSolution& sol, const OperatingConditions& cond,
                             const DeadState& dead) {
  const auto& p = sol.points;
  const double m1 = cond.pump1_mass_flow(), m2 = cond.pump2_mass_flow();
  PointExergies e{};
  e[1] = water_flow_exergy(p.T1, m1, dead, 1).rate;
  e[2] = water_flow_exergy(p.T2, m1, dead, 2).rate;
  e[3] = refrigerant_flow_exergy(p.state3, sol.m_ref, dead, 3).rate;
  e[4] = refrigerant_flow_exergy(p.state4, sol.m_ref, dead, 4).rate;
  e[5] = refrigerant_flow_exergy(p.state5, sol.m_ref, dead, 5).rate;
  e[6] = refrigerant_flow_exergy(p.state6, sol.m_ref, dead, 6).rate;
  e[7] = water_flow_exergy(p.T7, m2, dead, 7).rate;
  e[8] = water_flow_exergy(p.T8, m2, dead, 8).rate;
  return e;
}

ComponentValues component_destructions(const CycleSolution& sol, const OperatingConditions& cond,
                                       const DeadState& dead) {
  const auto e = point_exergies(sol, cond, dead);
  const double w = sol.W_elec_comp * 1000.0;
  ComponentValues d;
  d.evaporator = (e[1] + e[6]) - (e[2] + e[3]);
  d.compressor = e[3] + w - e[4];
  d.condenser = (e[4] + e[7]) - (e[5] + e[8]);
  d.tev = e[5] - e[6];
  auto check = [](double v, const char* name) {
    if (v < kNegativeTolW)
      fail(Errc::NegativeDestruction, std::string(name) + " exergy destruction is negative (" +
                                          num(v) + " W)");
  };
  check(d.evaporator, "evaporator");
  check(d.compressor, "compressor");
  check(d.condenser, "condenser");
  check(d.tev, "expansion valve");
  return d;
}

DestructionSummary cycle_destruction_and_relative(const ComponentValues& d) {
  for (double v : {d.evaporator, d.compressor, d.condenser, d.tev})
    if (v < kNegativeTolW)
      fail(Errc::NegativeDestruction, "component destruction is negative (" + num(v) + " W)");
  DestructionSummary s;
  s.cycle = d.sum();
  if (s.cycle == 0.0) fail(Errc::ZeroTotal, "total exergy destruction is zero");
  s.relative = {d.evaporator / s.cycle, d.compressor / s.cycle, d.condenser / s.cycle,
                d.tev / s.cycle};
  return s;
}

ComponentValues component_exergy_efficiencies(const CycleSolution& sol,
                                              const OperatingConditions& cond,
                                              const DeadState& dead) {
  const auto e = point_exergies(sol, cond, dead);
  const double w = sol.W_elec_comp * 1000.0;
  ComponentValues r;
  r.evaporator = ratio(e[1] - e[2], e[3] - e[6], "evaporator efficiency");
  r.compressor = ratio(e[4] - e[3], w, "compressor efficiency");
  r.condenser = ratio(e[8] - e[7], e[4] - e[5], "condenser efficiency");
  r.tev = ratio(e[6], e[5], "expansion valve efficiency");
  return r;
}

SystemEfficiencies system_exergy_efficiencies(const CycleSolution& sol,
                                              const OperatingConditions& cond,
                                              const DeadState& dead) {
  if (sol.COP_carnot == 0.0 || cond.T_sink == cond.T_source)
    fail(Errc::DegenerateCarnot, "reverse Carnot COP undefined");
  const auto e = point_exergies(sol, cond, dead);
  SystemEfficiencies r;
  r.cycle = ratio(e[8] - e[7], sol.W_elec_comp * 1000.0, "cycle exergy efficiency");
  r.system = ratio(e[8] - e[7], sol.W_elec_total * 1000.0, "system exergy efficiency");
  r.second_law = sol.COP_cycle / sol.COP_carnot;
  return r;
}

ExergyReport analyze_exergy(const CycleSolution& sol, const OperatingConditions& cond,
                            const DeadState& dead) {
  ExergyReport r;
  r.rates = point_exergies(sol, cond, dead);
  r.destruction = component_destructions(sol, cond, dead);
  auto sum = cycle_destruction_and_relative(r.destruction);
  r.cycle_destruction = sum.cycle;
  r.relative = sum.relative;
  r.efficiency = component_exergy_efficiencies(sol, cond, dead);
  r.system = system_exergy_efficiencies(sol, cond, dead);
  return r;
}

}  // namespace hpck
