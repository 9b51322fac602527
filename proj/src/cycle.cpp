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

#include "hpck/cycle.hpp"

#include <cmath>
#include <cstdio>

#include "hpck/errors.hpp"

namespace hpck {

namespace {

constexpr double kKelvin = 273.15;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Overall compressor efficiency fit, percent, temperatures in C.
constexpr double c1 = -2.4341, c2 = 1.367, c3 = -0.062, c4 = 0.103, c5 = -0.0173,
                 c6 = -3.88e-5, c7 = 7.89e-4, c8 = -7.51e-4, c9 = 1.85e-6, c10 = 33.6476;

// Compressor application envelope.
constexpr double kEvapMin = -45.0, kEvapMax = 15.0, kCondMin = 20.0, kCondMax = 70.0;

double isentropic_eff(const OperatingConditions& cond, double te, double tc) {
  return cond.eta_isen ? *cond.eta_isen : compressor_isentropic_efficiency(te, tc);
}

}  // namespace

void OperatingConditions::validate() const {
  auto bad = [](const std::string& why) { fail(Errc::InvalidOverride, why); };
  for (double v : {T_sink, T_source, T_SH, T_SC, T_EAP, T_CAP, T0, P0, pump1_flow, pump2_flow,
                   pump1_power, pump2_power, htf_cp, htf_rho, W_elec_comp, Q_cond})
    if (!std::isfinite(v)) bad("operating conditions contain a non-finite value");
  if (!(T_sink > T_source))
    bad("sink temperature " + num(T_sink) + " C must exceed source temperature " + num(T_source) + " C");
  if (T_SH < 0 || T_SC < 0 || T_EAP < 0 || T_CAP < 0)
    bad("superheat, subcooling and approach temperatures must be >= 0");
  if (!(pump1_flow > 0 && pump2_flow > 0)) bad("pump flows must be > 0");
  if (!(pump1_power > 0 && pump2_power > 0)) bad("pump powers must be > 0");
  if (!(htf_cp > 0 && htf_rho > 0)) bad("heat-transfer fluid cp and density must be > 0");
  if (!(P0 > 0)) bad("dead-state pressure must be > 0");
  if (mode == SolveMode::MeasuredPower && !(W_elec_comp > 0))
    bad("measured compressor power must be > 0");
  if (mode == SolveMode::FixedCapacity && !(Q_cond > 0)) bad("condenser capacity must be > 0");
  if (eta_isen && !(*eta_isen > 0 && *eta_isen <= 1)) bad("isentropic efficiency must be in (0, 1]");
}

bool ConditionOverrides::covers_regressions() const {
  bool power = W_elec_comp.has_value() || mode == SolveMode::FixedCapacity;
  return T_source && T_SH && T_SC && T_EAP && T_CAP && power;
}

void apply_overrides(OperatingConditions& c, const ConditionOverrides& o) {
  auto set = [](double& dst, const std::optional<double>& v) {
    if (v) dst = *v;
  };
  set(c.T_source, o.T_source);
  set(c.T_SH, o.T_SH);
  set(c.T_SC, o.T_SC);
  set(c.T_EAP, o.T_EAP);
  set(c.T_CAP, o.T_CAP);
  set(c.T0, o.T0);
  set(c.P0, o.P0);
  set(c.pump1_flow, o.pump1_flow);
  set(c.pump2_flow, o.pump2_flow);
  set(c.pump1_power, o.pump1_power);
  set(c.pump2_power, o.pump2_power);
  set(c.htf_cp, o.htf_cp);
  set(c.htf_rho, o.htf_rho);
  set(c.W_elec_comp, o.W_elec_comp);
  set(c.Q_cond, o.Q_cond);
  if (o.eta_isen) c.eta_isen = o.eta_isen;
  if (o.mode) c.mode = *o.mode;
  c.validate();
}

OperatingConditions operating_conditions_from_regressions(double T_sink,
                                                          const ConditionOverrides& overrides,
                                                          std::vector<std::string>* warnings) {
  if (!std::isfinite(T_sink)) fail(Errc::InvalidArgument, "sink temperature must be finite");
  if ((T_sink < 40.0 || T_sink > 50.0) && !overrides.covers_regressions() && warnings)
    warnings->push_back("RangeWarning: sink temperature " + num(T_sink) +
                        " C is outside the 40..50 C range the regressions were fitted on");
  const double t = T_sink;
  OperatingConditions c;
  c.T_sink = t;
  c.T_source = 0.01048 * t * t - 1.081 * t + 40.3;
  c.W_elec_comp = 0.000195 * t * t + 0.0098 * t + 0.626;
  c.T_SH = 13.5 - 0.046 * t;
  c.T_SC = 5.1 - 0.071 * t;
  c.T_EAP = 0.7 + 0.029 * t;
  c.T_CAP = 9.1 - 0.088 * t;
  c.mode = SolveMode::MeasuredPower;
  apply_overrides(c, overrides);
  return c;
}

OperatingConditions design_point_conditions(RefrigerantId) {
  OperatingConditions c;  // defaults are the screening values
  c.mode = SolveMode::FixedCapacity;
  c.Q_cond = 5.0;
  c.validate();
  return c;
}

double compressor_isentropic_efficiency(double T_evap, double T_cond) {
  if (!(T_evap > -kKelvin && T_cond > T_evap))
    fail(Errc::NonPhysical, "isentropic efficiency needs T_cond > T_evap > -273.15 C (got " +
                                num(T_evap) + ", " + num(T_cond) + ")");
  double eta = (T_evap + kKelvin) / (T_cond + kKelvin) + 0.0025 * T_evap;
  if (!(eta > 0 && eta <= 1))
    fail(Errc::NonPhysical, "isentropic efficiency " + num(eta) + " outside (0, 1]");
  return eta;
}

double compressor_overall_efficiency(double T_evap, double T_cond) {
  if (!(T_evap >= kEvapMin && T_evap <= kEvapMax && T_cond >= kCondMin && T_cond <= kCondMax))
    fail(Errc::OutOfEnvelope, "compressor envelope is -45..15 C evaporating, 20..70 C condensing (got " +
                                  num(T_evap) + ", " + num(T_cond) + ")");
  const double e = T_evap, c = T_cond;
  double pct = c1 * e + c2 * c + c3 * e * e + c4 * e * c + c5 * c * c + c6 * e * e * e +
               c7 * e * e * c + c8 * e * c * c + c9 * c * c * c + c10;
  double eta = pct / 100.0;
  if (!(eta > 0 && eta < 1)) fail(Errc::NonPhysical, "compressor efficiency " + num(eta) + " outside (0, 1)");
  return eta;
}

CycleStatePoints solve_state_points(const OperatingConditions& cond, const PropertySet& props) {
  cond.validate();
  CycleStatePoints p;
  p.T_evap = cond.T_evap();
  p.T_cond = cond.T_cond();
  if (!(p.T_cond > p.T_evap))
    fail(Errc::InvalidCycle, "condensing temperature " + num(p.T_cond) +
                                 " C not above evaporating temperature " + num(p.T_evap) + " C");
  p.P_evap = props.saturation_pressure(p.T_evap);
  p.P_cond = props.saturation_pressure(p.T_cond);

  p.state3 = props.superheated_state(p.P_evap, p.T_evap + cond.T_SH);
  p.state4s = props.state_at_entropy(p.P_cond, p.state3.s);
  if (!(p.state4s.h > p.state3.h))
    fail(Errc::InvalidCycle, "isentropic compression does not raise enthalpy");
  const double eta = isentropic_eff(cond, p.T_evap, p.T_cond);
  const double h4 = p.state3.h + (p.state4s.h - p.state3.h) / eta;
  p.state4 = (h4 == p.state4s.h) ? p.state4s : props.state_at_enthalpy(p.P_cond, h4);

  p.state5 = props.subcooled_state(p.T_cond - cond.T_SC, p.P_cond);
  p.state6 = props.two_phase_state(p.P_evap, p.state5.h);

  p.T1 = cond.T_source;
  p.T7 = cond.T_sink;
  p.T2 = p.T1;
  p.T8 = p.T7;
  return p;
}

PerformanceCoefficients performance_coefficients(const CycleSolution& sol,
                                                 const OperatingConditions& cond) {
  if (!(sol.W_elec_comp > 0)) fail(Errc::InvalidCycle, "compressor power must be > 0");
  if (cond.T_sink == cond.T_source)
    fail(Errc::DegenerateCarnot, "sink and source temperatures are equal");
  const double tk = cond.T_sink + kKelvin;
  const double sk = cond.T_source + kKelvin;
  return {sol.Q_cond / sol.W_elec_comp, sol.Q_cond / sol.W_elec_total, tk / (tk - sk)};
}

std::pair<double, double> htf_outlet_temperatures(const CycleSolution& sol,
                                                  const OperatingConditions& cond) {
  const double m1 = cond.pump1_mass_flow();
  const double m2 = cond.pump2_mass_flow();
  if (!(m1 > 0 && m2 > 0)) fail(Errc::InvalidArgument, "pump mass flows must be > 0");
  return {sol.points.T1 - sol.Q_evap / (cond.htf_cp * m1),
          sol.points.T7 + sol.Q_cond / (cond.htf_cp * m2)};
}

CycleSolution solve_cycle(const CycleStatePoints& points, const OperatingConditions& cond) {
  cond.validate();
  CycleSolution r;
  r.points = points;
  const double h3 = points.state3.h, h4 = points.state4.h, h5 = points.state5.h,
               h6 = points.state6.h;
  if (!(h4 - h3 > 0 && h4 - h5 > 0 && h3 - h6 > 0))
    fail(Errc::InvalidCycle, "non-positive enthalpy difference across a component");

  r.eta_isen = isentropic_eff(cond, points.T_evap, points.T_cond);
  r.eta_comp = compressor_overall_efficiency(points.T_evap, points.T_cond);
  r.eta_prime_comp = r.eta_comp / r.eta_isen;

  if (cond.mode == SolveMode::FixedCapacity) {
    r.Q_cond = cond.Q_cond;
    r.m_ref = r.Q_cond / (h4 - h5);
    r.W_comp = r.m_ref * (h4 - h3);
    r.W_elec_comp = r.W_comp / r.eta_prime_comp;
  } else {
    r.W_elec_comp = cond.W_elec_comp;
    r.W_comp = r.eta_prime_comp * r.W_elec_comp;
    r.m_ref = r.W_comp / (h4 - h3);
    r.Q_cond = r.m_ref * (h4 - h5);
  }
  r.Q_evap = r.m_ref * (h3 - h6);
  r.W_elec_total = r.W_elec_comp + (cond.pump1_power + cond.pump2_power) / 1000.0;
  r.VRC = points.state3.rho * (h3 - h6);

  auto cop = performance_coefficients(r, cond);
  r.COP_cycle = cop.cycle;
  r.COP_system = cop.system;
  r.COP_carnot = cop.carnot;
  std::tie(r.points.T2, r.points.T8) = htf_outlet_temperatures(r, cond);
  return r;
}

}  // namespace hpck
