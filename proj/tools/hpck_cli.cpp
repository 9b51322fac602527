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

// hpck command-line tool. Data goes to stdout (or --out), diagnostics to stderr.
//
// Exit codes: 0 success, 1 validation failures, 2 usage or input error,
// 3 property data error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hpck/hpck.h"
#include "json.hpp"

namespace {

enum Exit { kOk = 0, kValidationFailed = 1, kUsage = 2, kData = 3 };

struct Global {
  std::string format = "csv";
  std::string out;
  std::string prop_data;
};

struct CliError {
  int code;
  std::string message;
};

int exit_for(hpck_status st) { return hpck_status_is_data_error(st) ? kData : kUsage; }

void check(hpck_status st) {
  if (st != HPCK_OK)
    throw CliError{exit_for(st), std::string(hpck_status_name(st)) + ": " + hpck_last_error()};
}

std::string data_dir(const Global& g) {
  if (!g.prop_data.empty()) return g.prop_data;
  if (const char* env = std::getenv("HPCK_PROP_DATA"); env && *env) return env;
#ifdef HPCK_DEFAULT_DATA_DIR
  return HPCK_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

hpck_format format_of(const std::string& f) { return f == "json" ? HPCK_FORMAT_JSON : HPCK_FORMAT_CSV; }

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError{kUsage, "cannot write " + path};
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw CliError{kUsage, "write failed for " + path};
}

std::string take_string(char* s) {
  std::string r = s ? s : "";
  hpck_string_free(s);
  return r;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// "start:stop[:step]" or a single value.
nlohmann::ordered_json parse_range(const std::string& text) {
  std::vector<double> parts;
  std::size_t pos = 0;
  for (;;) {
    auto colon = text.find(':', pos);
    std::string item = text.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos);
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CliError{kUsage, "invalid temperature range '" + text + "' (expected start:stop:step)"};
    }
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  if (parts.size() == 1) return parts[0];
  if (parts.size() > 3) throw CliError{kUsage, "invalid temperature range '" + text + "'"};
  nlohmann::ordered_json r;
  r["start"] = parts[0];
  r["stop"] = parts[1];
  r["step"] = parts.size() == 3 ? parts[2] : 1.0;
  return r;
}

struct Owned {
  hpck_scenario* sc = nullptr;
  hpck_results* res = nullptr;
  ~Owned() {
    hpck_results_free(res);
    hpck_scenario_free(sc);
  }
};

// Runs a scenario and emits the report. Scenario output settings apply unless
// overridden on the command line.
int run_and_emit(hpck_scenario* sc, const Global& g, bool format_given, bool plot_flag) {
  Owned own;
  own.sc = sc;
  hpck_format fmt = format_of(g.format);
  int plot = plot_flag ? 1 : 0;
  const char* sc_path = "";
  hpck_format sc_fmt = HPCK_FORMAT_CSV;
  int sc_plot = 0;
  check(hpck_scenario_output(sc, &sc_fmt, &sc_plot, &sc_path));
  if (!format_given) fmt = sc_fmt;
  plot = plot || sc_plot;
  std::string out = g.out.empty() ? std::string(sc_path) : g.out;

  check(hpck_scenario_run(sc, data_dir(g).c_str(), &own.res));
  for (size_t i = 0; i < hpck_results_warning_count(own.res); ++i)
    std::cerr << "warning: " << hpck_results_warning(own.res, i) << "\n";

  char* text = nullptr;
  check(hpck_results_format(own.res, fmt, plot, &text));
  write_output(take_string(text), out);

  int code = kOk;
  for (size_t i = 0; i < hpck_results_failure_count(own.res); ++i) {
    hpck_status st = HPCK_OK;
    const char* msg = nullptr;
    check(hpck_results_failure(own.res, i, &st, &msg));
    std::cerr << "error: " << hpck_status_name(st) << ": " << msg << "\n";
    int c = exit_for(st);
    if (c > code) code = c;
  }
  return code;
}

hpck_scenario* parse_scenario_json(const nlohmann::ordered_json& doc) {
  hpck_scenario* sc = nullptr;
  check(hpck_scenario_parse(doc.dump().c_str(), &sc));
  return sc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat-pump cycle, exergy and TEWI analysis for six refrigerants"};
  app.set_version_flag("--version", std::string(hpck_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write output to PATH instead of stdout");
  app.add_option("--prop-data", g.prop_data,
                 "Directory with <id>.sat.csv / <id>.sh.csv tables (default: $HPCK_PROP_DATA)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Single operating point (or a scenario file)");
  std::string sim_ref;
  double sim_t_sink = 50.0;
  std::optional<double> sim_q;
  std::string sim_scenario;
  bool sim_regressions = false, sim_design = false, sim_plot = false;
  sim->add_option("--refrigerant,-r", sim_ref, "Refrigerant, e.g. R134a");
  sim->add_option("--t-sink", sim_t_sink, "Sink temperature [C]")->capture_default_str();
  auto* sim_dp = sim->add_flag("--design-point", sim_design, "Screening conditions (default)");
  sim->add_flag("--regressions", sim_regressions, "Conditions from the rig regressions")->excludes(sim_dp);
  sim->add_option("--q-cond", sim_q, "Fixed condenser capacity [kW]");
  sim->add_option("--scenario", sim_scenario, "Run a JSON scenario file instead")->check(CLI::ExistingFile);
  sim->add_flag("--plot-data", sim_plot, "Emit T4 vs condenser exergy efficiency series");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Regression-driven sweep over sink temperature");
  std::vector<std::string> sweep_refs{"R134a"};
  std::string sweep_range = "40:50:1";
  bool sweep_plot = false;
  sweep->add_option("--refrigerant,-r", sweep_refs, "Refrigerant(s)")->delimiter(',')->capture_default_str();
  sweep->add_option("--t-sink", sweep_range, "Range start:stop:step [C]")->capture_default_str();
  sweep->add_flag("--plot-data", sweep_plot, "Emit T4 vs condenser exergy efficiency series");

  // compare
  auto* cmp = app.add_subcommand("compare", "Side-by-side comparison of refrigerants");
  bool cmp_all = false, cmp_design = false, cmp_regressions = false, cmp_plot = false;
  std::vector<std::string> cmp_refs;
  std::string cmp_range;
  std::optional<double> cmp_q;
  auto* cmp_all_opt = cmp->add_flag("--all", cmp_all, "All six refrigerants");
  cmp->add_option("--refrigerant,-r", cmp_refs, "Refrigerant(s)")->delimiter(',')->excludes(cmp_all_opt);
  auto* cmp_dp = cmp->add_flag("--design-point", cmp_design, "Screening conditions (default)");
  cmp->add_flag("--regressions", cmp_regressions, "Conditions from the rig regressions")->excludes(cmp_dp);
  cmp->add_option("--t-sink", cmp_range, "Sink temperature or range start:stop:step [C]");
  cmp->add_option("--q-cond", cmp_q, "Fixed condenser capacity [kW]");
  cmp->add_flag("--plot-data", cmp_plot, "Emit T4 vs condenser exergy efficiency series");

  // tewi
  auto* tw = app.add_subcommand("tewi", "Total equivalent warming impact");
  std::string tw_ref;
  std::optional<double> tw_gwp, tw_energy, tw_power;
  double tw_charge = 2.0, tw_leak = 5.0, tw_life = 15.0, tw_recovery = 70.0, tw_hours = 1500.0,
         tw_beta = 0.8;
  auto* tw_ref_opt = tw->add_option("--refrigerant,-r", tw_ref, "Take the GWP of this refrigerant");
  tw->add_option("--gwp", tw_gwp, "GWP [kg CO2-eq/kg]")->excludes(tw_ref_opt);
  tw->add_option("--charge", tw_charge, "Refrigerant charge [kg]")->capture_default_str();
  tw->add_option("--leak", tw_leak, "Annual leakage [%/yr]")->capture_default_str();
  tw->add_option("--life", tw_life, "Operating life [yr]")->capture_default_str();
  tw->add_option("--recovery", tw_recovery, "End-of-life recovery [%]")->capture_default_str();
  auto* tw_e = tw->add_option("--energy", tw_energy, "Annual energy use [kWh/yr]");
  tw->add_option("--power", tw_power, "Electric power [kW]; energy = power x hours")->excludes(tw_e);
  tw->add_option("--hours", tw_hours, "Operating hours per year with --power")->capture_default_str();
  tw->add_option("--beta", tw_beta, "Emission factor [kg CO2/kWh]")->capture_default_str();

  // validate
  auto* val = app.add_subcommand("validate", "Check design-point and sweep results against the reference data");

  // props
  auto* props = app.add_subcommand("props", "Saturation properties");
  std::string pr_ref;
  std::optional<double> pr_t, pr_p;
  props->add_option("--refrigerant,-r", pr_ref, "Refrigerant")->required();
  auto* pr_t_opt = props->add_option("--t", pr_t, "Saturation temperature [C]");
  props->add_option("--p", pr_p, "Saturation pressure [kPa]")->excludes(pr_t_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "run with --help for usage\n";
    return kUsage;
  }
  const bool format_given = app.get_option("--format")->count() > 0;

  try {
    if (sim->parsed()) {
      if (!sim_scenario.empty()) {
        if (!sim_ref.empty()) throw CliError{kUsage, "--scenario cannot be combined with --refrigerant"};
        hpck_scenario* sc = nullptr;
        check(hpck_scenario_load(sim_scenario.c_str(), &sc));
        return run_and_emit(sc, g, format_given, sim_plot);
      }
      if (sim_ref.empty()) throw CliError{kUsage, "simulate needs --refrigerant or --scenario"};
      nlohmann::ordered_json doc;
      doc["refrigerants"] = {sim_ref};
      doc["mode"] = sim_regressions ? "regression_sweep" : "design_point";
      doc["t_sink"] = sim_t_sink;
      if (sim_q) {
        doc["overrides"]["Q_cond"] = *sim_q;
        if (sim_regressions) doc["overrides"]["mode"] = "fixed_capacity";
      }
      return run_and_emit(parse_scenario_json(doc), g, format_given, sim_plot);
    }

    if (sweep->parsed()) {
      nlohmann::ordered_json doc;
      doc["refrigerants"] = sweep_refs;
      doc["mode"] = "regression_sweep";
      doc["t_sink"] = parse_range(sweep_range);
      return run_and_emit(parse_scenario_json(doc), g, format_given, sweep_plot);
    }

    if (cmp->parsed()) {
      if (!cmp_all && cmp_refs.empty()) throw CliError{kUsage, "compare needs --all or --refrigerant"};
      nlohmann::ordered_json doc;
      if (cmp_all)
        doc["refrigerants"] = "all";
      else
        doc["refrigerants"] = cmp_refs;
      doc["mode"] = cmp_regressions ? "regression_sweep" : "design_point";
      if (!cmp_range.empty()) doc["t_sink"] = parse_range(cmp_range);
      if (cmp_q) {
        doc["overrides"]["Q_cond"] = *cmp_q;
        if (cmp_regressions) doc["overrides"]["mode"] = "fixed_capacity";
      }
      return run_and_emit(parse_scenario_json(doc), g, format_given, cmp_plot);
    }

    if (tw->parsed()) {
      hpck_tewi_inputs in{};
      if (!tw_ref.empty())
        check(hpck_refrigerant_gwp(tw_ref.c_str(), &in.gwp));
      else if (tw_gwp)
        in.gwp = *tw_gwp;
      else
        throw CliError{kUsage, "tewi needs --refrigerant or --gwp"};
      if (tw_energy)
        in.annual_energy_E = *tw_energy;
      else if (tw_power)
        in.annual_energy_E = *tw_power * tw_hours;
      else
        throw CliError{kUsage, "tewi needs --energy or --power"};
      in.charge_m = tw_charge;
      in.leak_rate_L = tw_leak;
      in.life_n = tw_life;
      in.recovery_alpha = tw_recovery;
      in.emission_factor_beta = tw_beta;
      hpck_tewi_result r{};
      check(hpck_tewi(&in, &r));
      std::string text;
      if (g.format == "json") {
        nlohmann::ordered_json j;
        j["gwp"] = in.gwp;
        j["TEWI_direct_kg"] = r.direct;
        j["TEWI_indirect_kg"] = r.indirect;
        j["TEWI_total_kg"] = r.total;
        text = j.dump(2) + "\n";
      } else {
        text = "gwp,TEWI_direct_kg,TEWI_indirect_kg,TEWI_total_kg\n" + num(in.gwp) + "," +
               num(r.direct) + "," + num(r.indirect) + "," + num(r.total) + "\n";
      }
      write_output(text, g.out);
      return kOk;
    }

    if (val->parsed()) {
      hpck_validation* v = nullptr;
      check(hpck_validate(data_dir(g).c_str(), &v));
      char* text = nullptr;
      hpck_status st = hpck_validation_format(v, format_of(g.format), &text);
      size_t failed = hpck_validation_failed(v), passed = hpck_validation_passed(v);
      hpck_validation_free(v);
      check(st);
      write_output(take_string(text), g.out);
      if (failed == 0) {
        std::cerr << "all checks passed (" << passed << ")\n";
        return kOk;
      }
      std::cerr << failed << " of " << (failed + passed) << " checks failed\n";
      return kValidationFailed;
    }

    if (props->parsed()) {
      if (!pr_t && !pr_p) throw CliError{kUsage, "props needs --t or --p"};
      hpck_propset* ps = nullptr;
      check(hpck_propset_load(pr_ref.c_str(), data_dir(g).c_str(), &ps));
      hpck_sat_props sp{};
      double t = pr_t ? *pr_t : 0.0;
      hpck_status st = HPCK_OK;
      if (pr_p) st = hpck_propset_saturation_temperature(ps, *pr_p, &t);
      if (st == HPCK_OK) st = hpck_propset_saturation(ps, t, &sp);
      hpck_propset_free(ps);
      check(st);
      std::string text;
      const char* names[] = {"T_C", "P_kPa", "hf_kJkg", "hg_kJkg", "sf_kJkgK", "sg_kJkgK", "rhof_kgm3", "rhog_kgm3"};
      const double vals[] = {sp.T_C, sp.P_kPa, sp.hf_kJkg, sp.hg_kJkg, sp.sf_kJkgK, sp.sg_kJkgK, sp.rhof_kgm3, sp.rhog_kgm3};
      if (g.format == "json") {
        nlohmann::ordered_json j;
        j["refrigerant"] = pr_ref;
        for (int i = 0; i < 8; ++i) j[names[i]] = vals[i];
        text = j.dump(2) + "\n";
      } else {
        text = "refrigerant";
        for (auto* n : names) text += std::string(",") + n;
        text += "\n" + pr_ref;
        for (double v : vals) text += "," + num(v);
        text += "\n";
      }
      write_output(text, g.out);
      return kOk;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kUsage;
}
