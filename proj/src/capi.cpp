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

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hpck/properties.hpp"
#include "hpck/scenario.hpp"
#include "hpck/validation.hpp"

struct hpck_propset {
  hpck::PropertySet ps;
};
struct hpck_scenario {
  hpck::Scenario sc;
};
struct hpck_results {
  hpck::ResultSeries rs;
};
struct hpck_validation {
  hpck::ValidationReport vr;
};

namespace {

thread_local std::string g_last_error;

hpck_status to_status(hpck::Errc e) { return static_cast<hpck_status>(static_cast<int>(e)); }

hpck_status set_error(hpck_status st, const char* msg) {
  g_last_error = msg ? msg : "";
  return st;
}

template <class F>
hpck_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return HPCK_OK;
  } catch (const hpck::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(HPCK_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(HPCK_E_INTERNAL, e.what());
  } catch (...) {
    return set_error(HPCK_E_INTERNAL, "unknown error");
  }
}

#define HPCK_REQUIRE(cond, what) \
  if (!(cond)) return set_error(HPCK_E_INVALID_ARGUMENT, what)

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

hpck::OutputFormat fmt_of(hpck_format f) {
  return f == HPCK_FORMAT_JSON ? hpck::OutputFormat::Json : hpck::OutputFormat::Csv;
}

}  // namespace

extern "C" {

const char* hpck_version(void) { return "1.0.0"; }

const char* hpck_last_error(void) { return g_last_error.c_str(); }

const char* hpck_status_name(hpck_status status) {
  return hpck::errc_name(static_cast<hpck::Errc>(static_cast<int>(status)));
}

int hpck_status_is_data_error(hpck_status status) {
  return hpck::is_data_error(static_cast<hpck::Errc>(static_cast<int>(status))) ? 1 : 0;
}

void hpck_string_free(char* s) { std::free(s); }

hpck_status hpck_propset_load(const char* refrigerant, const char* data_dir, hpck_propset** out) {
  HPCK_REQUIRE(refrigerant && data_dir && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto id = hpck::parse_refrigerant(refrigerant);
    *out = new hpck_propset{hpck::PropertySet::load(id, data_dir)};
  });
}

void hpck_propset_free(hpck_propset* ps) { delete ps; }

hpck_status hpck_propset_saturation(const hpck_propset* ps, double T_C, hpck_sat_props* out) {
  HPCK_REQUIRE(ps && out, "null argument");
  return guarded([&] {
    auto l = ps->ps.saturated_state(T_C, hpck::SatPhase::Liquid);
    auto v = ps->ps.saturated_state(T_C, hpck::SatPhase::Vapor);
    *out = {T_C, l.P, l.h, v.h, l.s, v.s, l.rho, v.rho};
  });
}

hpck_status hpck_propset_saturation_temperature(const hpck_propset* ps, double P_kPa, double* T_C) {
  HPCK_REQUIRE(ps && T_C, "null argument");
  return guarded([&] { *T_C = ps->ps.saturation_temperature(P_kPa); });
}

hpck_status hpck_scenario_parse(const char* json, hpck_scenario** out) {
  HPCK_REQUIRE(json && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new hpck_scenario{hpck::parse_scenario(json)}; });
}

hpck_status hpck_scenario_load(const char* path, hpck_scenario** out) {
  HPCK_REQUIRE(path && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new hpck_scenario{hpck::load_scenario(path)}; });
}

void hpck_scenario_free(hpck_scenario* sc) { delete sc; }

hpck_status hpck_scenario_output(const hpck_scenario* sc, hpck_format* format, int* plot_data,
                                 const char** path) {
  HPCK_REQUIRE(sc, "null argument");
  if (format)
    *format = sc->sc.output.format == hpck::OutputFormat::Json ? HPCK_FORMAT_JSON : HPCK_FORMAT_CSV;
  if (plot_data) *plot_data = sc->sc.output.plot_data ? 1 : 0;
  if (path) *path = sc->sc.output.path.c_str();
  return HPCK_OK;
}

hpck_status hpck_scenario_run(const hpck_scenario* sc, const char* data_dir, hpck_results** out) {
  HPCK_REQUIRE(sc && data_dir && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new hpck_results{hpck::run_scenario(sc->sc, data_dir)}; });
}

void hpck_results_free(hpck_results* r) { delete r; }

size_t hpck_results_count(const hpck_results* r) { return r ? r->rs.rows.size() : 0; }

hpck_status hpck_results_value(const hpck_results* r, size_t index, const char* column, double* out) {
  HPCK_REQUIRE(r && column && out, "null argument");
  HPCK_REQUIRE(index < r->rs.rows.size(), "row index out of range");
  return guarded([&] { *out = hpck::report_value(r->rs.rows[index], column); });
}

size_t hpck_results_failure_count(const hpck_results* r) { return r ? r->rs.failures.size() : 0; }

hpck_status hpck_results_failure(const hpck_results* r, size_t index, hpck_status* status,
                                 const char** message) {
  HPCK_REQUIRE(r && index < r->rs.failures.size(), "failure index out of range");
  const auto& f = r->rs.failures[index];
  if (status) *status = to_status(f.code);
  if (message) *message = f.message.c_str();
  return HPCK_OK;
}

size_t hpck_results_warning_count(const hpck_results* r) { return r ? r->rs.warnings.size() : 0; }

const char* hpck_results_warning(const hpck_results* r, size_t index) {
  if (!r || index >= r->rs.warnings.size()) return nullptr;
  return r->rs.warnings[index].c_str();
}

hpck_status hpck_results_format(const hpck_results* r, hpck_format format, int plot_data, char** out) {
  HPCK_REQUIRE(r && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(plot_data ? hpck::format_plot_data(r->rs, fmt_of(format))
                                : hpck::format_report(r->rs, fmt_of(format)));
  });
}

hpck_status hpck_results_write(const hpck_results* r, hpck_format format, int plot_data,
                               const char* path) {
  HPCK_REQUIRE(r && path, "null argument");
  return guarded([&] { hpck::emit_report(r->rs, fmt_of(format), path, plot_data != 0); });
}

hpck_status hpck_validate(const char* data_dir, hpck_validation** out) {
  HPCK_REQUIRE(data_dir && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new hpck_validation{hpck::run_reference_validation(data_dir)}; });
}

void hpck_validation_free(hpck_validation* v) { delete v; }

size_t hpck_validation_passed(const hpck_validation* v) { return v ? v->vr.passed() : 0; }

size_t hpck_validation_failed(const hpck_validation* v) { return v ? v->vr.failed() : 0; }

hpck_status hpck_validation_format(const hpck_validation* v, hpck_format format, char** out) {
  HPCK_REQUIRE(v && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = dup_string(hpck::format_validation(v->vr, fmt_of(format))); });
}

hpck_status hpck_tewi(const hpck_tewi_inputs* in, hpck_tewi_result* out) {
  HPCK_REQUIRE(in && out, "null argument");
  return guarded([&] {
    hpck::TewiInputs t{in->gwp,    in->charge_m,        in->leak_rate_L,         in->life_n,
                       in->recovery_alpha, in->annual_energy_E, in->emission_factor_beta};
    auto r = hpck::tewi(t);
    *out = {r.direct, r.indirect, r.total};
  });
}

hpck_status hpck_refrigerant_gwp(const char* refrigerant, double* gwp) {
  HPCK_REQUIRE(refrigerant && gwp, "null argument");
  return guarded([&] { *gwp = hpck::refrigerant_metadata(hpck::parse_refrigerant(refrigerant)).gwp_100yr; });
}

}  // extern "C"
