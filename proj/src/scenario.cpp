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

#include "hpck/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hpck {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema(const std::string& why) { fail(Errc::SchemaError, why); }

void check_keys(const ojson& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) schema(where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
    if (!ok) schema("unknown key '" + key + "' in " + where);
  }
}

double number(const ojson& v, const std::string& where) {
  if (!v.is_number()) schema(where + " must be a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) schema(where + " must be finite");
  return d;
}

std::optional<double> opt_number(const ojson& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  return number(*it, where + "." + key);
}

SolveMode parse_solve_mode(const ojson& v) {
  if (v == "measured_power") return SolveMode::MeasuredPower;
  if (v == "fixed_capacity") return SolveMode::FixedCapacity;
  schema("overrides.mode must be \"measured_power\" or \"fixed_capacity\"");
}

ScenarioMode parse_mode(const ojson& v) {
  if (v == "design_point") return ScenarioMode::DesignPoint;
  if (v == "regression_sweep") return ScenarioMode::RegressionSweep;
  if (v == "custom") return ScenarioMode::Custom;
  schema("mode must be \"design_point\", \"regression_sweep\" or \"custom\"");
}

ConditionOverrides parse_overrides(const ojson& o) {
  check_keys(o, "overrides",
             {"T_source", "T_SH", "T_SC", "T_EAP", "T_CAP", "T0", "P0", "pump1_flow", "pump2_flow",
              "pump1_power", "pump2_power", "htf_cp", "htf_rho", "W_elec_comp", "Q_cond",
              "eta_isen", "mode"});
  ConditionOverrides r;
  const std::string w = "overrides";
  r.T_source = opt_number(o, "T_source", w);
  r.T_SH = opt_number(o, "T_SH", w);
  r.T_SC = opt_number(o, "T_SC", w);
  r.T_EAP = opt_number(o, "T_EAP", w);
  r.T_CAP = opt_number(o, "T_CAP", w);
  r.T0 = opt_number(o, "T0", w);
  r.P0 = opt_number(o, "P0", w);
  r.pump1_flow = opt_number(o, "pump1_flow", w);
  r.pump2_flow = opt_number(o, "pump2_flow", w);
  r.pump1_power = opt_number(o, "pump1_power", w);
  r.pump2_power = opt_number(o, "pump2_power", w);
  r.htf_cp = opt_number(o, "htf_cp", w);
  r.htf_rho = opt_number(o, "htf_rho", w);
  r.W_elec_comp = opt_number(o, "W_elec_comp", w);
  r.Q_cond = opt_number(o, "Q_cond", w);
  r.eta_isen = opt_number(o, "eta_isen", w);
  if (auto it = o.find("mode"); it != o.end()) r.mode = parse_solve_mode(*it);
  return r;
}

bool only_q_cond(const ConditionOverrides& o) {
  ConditionOverrides copy = o;
  copy.Q_cond.reset();
  return !(copy.T_source || copy.T_SH || copy.T_SC || copy.T_EAP || copy.T_CAP || copy.T0 ||
           copy.P0 || copy.pump1_flow || copy.pump2_flow || copy.pump1_power ||
           copy.pump2_power || copy.htf_cp || copy.htf_rho || copy.W_elec_comp ||
           copy.eta_isen || copy.mode);
}

TewiParameters parse_tewi(const ojson& o) {
  check_keys(o, "tewi",
             {"charge_m", "leak_rate_L", "life_n", "recovery_alpha", "annual_energy_E",
              "operating_hours", "emission_factor_beta"});
  TewiParameters p;
  const std::string w = "tewi";
  if (auto v = opt_number(o, "charge_m", w)) p.charge_m = *v;
  if (auto v = opt_number(o, "leak_rate_L", w)) p.leak_rate_L = *v;
  if (auto v = opt_number(o, "life_n", w)) p.life_n = *v;
  if (auto v = opt_number(o, "recovery_alpha", w)) p.recovery_alpha = *v;
  if (auto v = opt_number(o, "operating_hours", w)) p.operating_hours = *v;
  if (auto v = opt_number(o, "emission_factor_beta", w)) p.emission_factor_beta = *v;
  p.annual_energy_E = opt_number(o, "annual_energy_E", w);
  TewiInputs probe = make_tewi_inputs(p, 0.0, 0.0);
  try {
    probe.validate();
  } catch (const Error& e) {
    fail(Errc::InvariantViolation, e.what());
  }
  if (p.operating_hours < 0) fail(Errc::InvariantViolation, "tewi.operating_hours must be >= 0");
  return p;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

}  // namespace

std::vector<double> SinkRange::points() const {
  std::vector<double> out;
  if (!(step > 0) || stop < start) return out;
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

void Scenario::validate() const {
  if (refrigerants.empty()) fail(Errc::InvariantViolation, "scenario needs at least one refrigerant");
  std::set<RefrigerantId> seen;
  for (auto id : refrigerants)
    if (!seen.insert(id).second)
      fail(Errc::InvariantViolation, "refrigerant " + std::string(to_string(id)) + " listed twice");
  if (!(t_sink.step > 0)) fail(Errc::InvariantViolation, "t_sink step must be > 0");
  if (t_sink.stop < t_sink.start) fail(Errc::InvariantViolation, "t_sink stop must be >= start");
  if (mode == ScenarioMode::DesignPoint && !only_q_cond(overrides))
    fail(Errc::InvariantViolation, "design_point mode accepts only Q_cond as an override; use custom");
}

Scenario parse_scenario(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::ParseError, "scenario line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  check_keys(doc, "scenario", {"refrigerants", "mode", "t_sink", "overrides", "tewi", "output"});

  Scenario s;
  auto refs = doc.find("refrigerants");
  if (refs == doc.end()) schema("scenario.refrigerants is required");
  if (refs->is_string() && *refs == "all") {
    s.refrigerants.assign(kAllRefrigerants.begin(), kAllRefrigerants.end());
  } else {
    if (!refs->is_array()) schema("scenario.refrigerants must be an array of names or \"all\"");
    for (const auto& r : *refs) {
      if (!r.is_string()) schema("scenario.refrigerants entries must be strings");
      s.refrigerants.push_back(parse_refrigerant(r.get<std::string>()));
    }
  }

  if (auto m = doc.find("mode"); m != doc.end()) s.mode = parse_mode(*m);
  if (s.mode == ScenarioMode::RegressionSweep) s.t_sink = {40.0, 50.0, 1.0};

  if (auto t = doc.find("t_sink"); t != doc.end()) {
    if (t->is_number()) {
      double v = number(*t, "t_sink");
      s.t_sink = {v, v, 1.0};
    } else {
      check_keys(*t, "t_sink", {"start", "stop", "step"});
      auto start = opt_number(*t, "start", "t_sink");
      auto stop = opt_number(*t, "stop", "t_sink");
      if (!start || !stop) schema("t_sink range needs start and stop");
      s.t_sink = {*start, *stop, opt_number(*t, "step", "t_sink").value_or(1.0)};
    }
  }
  if (auto o = doc.find("overrides"); o != doc.end()) s.overrides = parse_overrides(*o);
  if (auto o = doc.find("tewi"); o != doc.end()) s.tewi = parse_tewi(*o);
  if (auto o = doc.find("output"); o != doc.end()) {
    check_keys(*o, "output", {"format", "path", "plot_data"});
    if (auto f = o->find("format"); f != o->end()) {
      if (!f->is_string()) schema("output.format must be a string");
      try {
        s.output.format = parse_output_format(f->get<std::string>());
      } catch (const Error& e) {
        schema(e.what());
      }
    }
    if (auto p = o->find("path"); p != o->end()) {
      if (!p->is_string()) schema("output.path must be a string");
      s.output.path = p->get<std::string>();
    }
    if (auto p = o->find("plot_data"); p != o->end()) {
      if (!p->is_boolean()) schema("output.plot_data must be true or false");
      s.output.plot_data = p->get<bool>();
    }
  }
  s.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open scenario " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_scenario(ss.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string_view to_string(ScenarioMode m) noexcept {
  switch (m) {
    case ScenarioMode::DesignPoint: return "design_point";
    case ScenarioMode::RegressionSweep: return "regression_sweep";
    case ScenarioMode::Custom: return "custom";
  }
  return "?";
}

OutputFormat parse_output_format(std::string_view s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  fail(Errc::InvalidArgument, "output format must be csv or json, got '" + std::string(s) + "'");
}

OperatingConditions scenario_conditions(const Scenario& s, RefrigerantId id, double T_sink,
                                        std::vector<std::string>* warnings) {
  if (s.mode == ScenarioMode::RegressionSweep)
    return operating_conditions_from_regressions(T_sink, s.overrides, warnings);
  OperatingConditions c = design_point_conditions(id);
  c.T_sink = T_sink;
  apply_overrides(c, s.overrides);
  return c;
}

ResultSeries run_scenario(const Scenario& s, const std::filesystem::path& data_dir) {
  s.validate();
  const auto meta = MetadataTable::for_data_dir(data_dir);
  const auto sinks = s.t_sink.points();

  ResultSeries out;
  std::set<std::string> seen_warnings;
  for (auto id : s.refrigerants) {
    std::optional<PropertySet> props;
    try {
      props = PropertySet::load(id, data_dir, meta);
    } catch (const Error& e) {
      for (double t : sinks) out.failures.push_back({id, t, e.code(), e.what()});
      continue;
    }
    for (double t : sinks) {
      try {
        std::vector<std::string> warnings;
        ResultRow row;
        row.refrigerant = id;
        row.T_sink = t;
        row.conditions = scenario_conditions(s, id, t, &warnings);
        row.cycle = simulate_cycle(row.conditions, *props);
        auto sat = props->saturated_state(row.cycle.points.T_evap, SatPhase::Liquid);
        row.latent_heat_evap =
            props->saturated_state(row.cycle.points.T_evap, SatPhase::Vapor).h - sat.h;
        row.exergy = analyze_exergy(row.cycle, row.conditions, make_dead_state(*props, row.conditions));
        row.tewi = tewi(make_tewi_inputs(s.tewi, meta.get(id).gwp_100yr, row.cycle.W_elec_total));
        out.rows.push_back(std::move(row));
        for (auto& w : warnings)
          if (seen_warnings.insert(w).second) out.warnings.push_back(std::move(w));
      } catch (const Error& e) {
        out.failures.push_back({id, t, e.code(), e.what()});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {
      "refrigerant",      "T_sink_C",         "T_source_C",        "T_evap_C",
      "T_cond_C",         "m_ref_gs",         "Q_evap_kW",         "Q_cond_kW",
      "W_comp_kW",        "W_elec_comp_kW",   "W_elec_total_kW",   "VRC_kJm3",
      "COP_cycle",        "COP_system",       "COP_carnot",        "eta_2nd_pct",
      "eta_cycle_ex_pct", "eta_system_ex_pct", "eta_evap_ex_pct",  "eta_comp_ex_pct",
      "eta_cond_ex_pct",  "eta_tev_ex_pct",   "Edest_evap_W",      "Edest_comp_W",
      "Edest_cond_W",     "Edest_tev_W",      "Edest_cycle_W",     "TEWI_direct_kg",
      "TEWI_indirect_kg", "TEWI_total_kg",
  };
  return cols;
}

double report_value(const ResultRow& r, std::string_view c) {
  const auto& cy = r.cycle;
  const auto& ex = r.exergy;
  if (c == "T_sink_C") return r.conditions.T_sink;
  if (c == "T_source_C") return r.conditions.T_source;
  if (c == "T_evap_C") return cy.points.T_evap;
  if (c == "T_cond_C") return cy.points.T_cond;
  if (c == "m_ref_gs") return cy.m_ref * 1000.0;
  if (c == "Q_evap_kW") return cy.Q_evap;
  if (c == "Q_cond_kW") return cy.Q_cond;
  if (c == "W_comp_kW") return cy.W_comp;
  if (c == "W_elec_comp_kW") return cy.W_elec_comp;
  if (c == "W_elec_total_kW") return cy.W_elec_total;
  if (c == "VRC_kJm3") return cy.VRC;
  if (c == "COP_cycle") return cy.COP_cycle;
  if (c == "COP_system") return cy.COP_system;
  if (c == "COP_carnot") return cy.COP_carnot;
  if (c == "eta_2nd_pct") return ex.system.second_law * 100.0;
  if (c == "eta_cycle_ex_pct") return ex.system.cycle * 100.0;
  if (c == "eta_system_ex_pct") return ex.system.system * 100.0;
  if (c == "eta_evap_ex_pct") return ex.efficiency.evaporator * 100.0;
  if (c == "eta_comp_ex_pct") return ex.efficiency.compressor * 100.0;
  if (c == "eta_cond_ex_pct") return ex.efficiency.condenser * 100.0;
  if (c == "eta_tev_ex_pct") return ex.efficiency.tev * 100.0;
  if (c == "Edest_evap_W") return ex.destruction.evaporator;
  if (c == "Edest_comp_W") return ex.destruction.compressor;
  if (c == "Edest_cond_W") return ex.destruction.condenser;
  if (c == "Edest_tev_W") return ex.destruction.tev;
  if (c == "Edest_cycle_W") return ex.cycle_destruction;
  if (c == "TEWI_direct_kg") return r.tewi.direct;
  if (c == "TEWI_indirect_kg") return r.tewi.indirect;
  if (c == "TEWI_total_kg") return r.tewi.total;
  // extra columns, not part of the report
  if (c == "T4_C") return cy.points.state4.T;
  if (c == "latent_heat_evap_kJkg") return r.latent_heat_evap;
  fail(Errc::InvalidArgument, "unknown report column '" + std::string(c) + "'");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

namespace {

ojson json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(format_number(v));
}

}  // namespace

std::string format_report(const ResultSeries& r, OutputFormat format) {
  const auto& cols = report_columns();
  if (format == OutputFormat::Csv) {
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += '\n';
    for (const auto& row : r.rows) {
      out += to_string(row.refrigerant);
      for (std::size_t i = 1; i < cols.size(); ++i) out += "," + format_number(report_value(row, cols[i]));
      out += '\n';
    }
    return out;
  }
  ojson arr = ojson::array();
  for (const auto& row : r.rows) {
    ojson o;
    o[cols[0]] = std::string(to_string(row.refrigerant));
    for (std::size_t i = 1; i < cols.size(); ++i) o[cols[i]] = json_number(report_value(row, cols[i]));
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string format_plot_data(const ResultSeries& r, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out = "refrigerant,T4_C,eta_cond_ex_pct\n";
    for (const auto& row : r.rows)
      out += std::string(to_string(row.refrigerant)) + "," + format_number(row.cycle.points.state4.T) +
             "," + format_number(row.exergy.efficiency.condenser * 100.0) + "\n";
    return out;
  }
  std::vector<RefrigerantId> order;
  for (const auto& row : r.rows)
    if (std::find(order.begin(), order.end(), row.refrigerant) == order.end())
      order.push_back(row.refrigerant);
  ojson arr = ojson::array();
  for (auto id : order) {
    ojson t4 = ojson::array(), eta = ojson::array();
    for (const auto& row : r.rows) {
      if (row.refrigerant != id) continue;
      t4.push_back(json_number(row.cycle.points.state4.T));
      eta.push_back(json_number(row.exergy.efficiency.condenser * 100.0));
    }
    ojson o;
    o["refrigerant"] = std::string(to_string(id));
    o["T4_C"] = std::move(t4);
    o["eta_cond_ex_pct"] = std::move(eta);
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

void emit_report(const ResultSeries& r, OutputFormat format, const std::filesystem::path& path,
                 bool plot_data) {
  const std::string text = plot_data ? format_plot_data(r, format) : format_report(r, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::IoError, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) fail(Errc::IoError, "write failed for " + path.string());
}

}  // namespace hpck
