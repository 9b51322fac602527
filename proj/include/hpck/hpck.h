/*
 * Copyright 2026 The hpck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the heat-pump cycle toolkit.
 *
 * Every function returns an hpck_status. On failure the message is available
 * from hpck_last_error() on the same thread until the next call. Handles are
 * opaque and owned by the caller; release them with the matching _free.
 * Strings returned through char** are allocated by the library and released
 * with hpck_string_free.
 */

#ifndef HPCK_H
#define HPCK_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(HPCK_BUILDING)
#    define HPCK_API __declspec(dllexport)
#  else
#    define HPCK_API __declspec(dllimport)
#  endif
#else
#  define HPCK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hpck_status {
  HPCK_OK = 0,
  HPCK_E_INVALID_ARGUMENT = 1,
  HPCK_E_UNKNOWN_REFRIGERANT = 2,
  HPCK_E_MISSING_DATA = 3,
  HPCK_E_MALFORMED_DATA = 4,
  HPCK_E_INVARIANT_VIOLATION = 5,
  HPCK_E_OUT_OF_RANGE = 6,
  HPCK_E_SUB_SATURATION = 7,
  HPCK_E_WET_COMPRESSION = 8,
  HPCK_E_NON_PHYSICAL = 9,
  HPCK_E_OUT_OF_ENVELOPE = 10,
  HPCK_E_INVALID_CYCLE = 11,
  HPCK_E_DEGENERATE_CARNOT = 12,
  HPCK_E_INVALID_OVERRIDE = 13,
  HPCK_E_CONVENTION_MISMATCH = 14,
  HPCK_E_NEGATIVE_DESTRUCTION = 15,
  HPCK_E_ZERO_TOTAL = 16,
  HPCK_E_ZERO_DENOMINATOR = 17,
  HPCK_E_ZERO_BASELINE = 18,
  HPCK_E_MISSING_BASELINE = 19,
  HPCK_E_PARSE = 20,
  HPCK_E_SCHEMA = 21,
  HPCK_E_INCOMPLETE_RESULTS = 22,
  HPCK_E_IO = 23,
  HPCK_E_INTERNAL = 99
} hpck_status;

typedef enum hpck_format { HPCK_FORMAT_CSV = 0, HPCK_FORMAT_JSON = 1 } hpck_format;

typedef struct hpck_propset hpck_propset;
typedef struct hpck_scenario hpck_scenario;
typedef struct hpck_results hpck_results;
typedef struct hpck_validation hpck_validation;

HPCK_API const char* hpck_version(void);
HPCK_API const char* hpck_last_error(void);
HPCK_API const char* hpck_status_name(hpck_status status);
/* Nonzero when the status is a problem with property or metadata files. */
HPCK_API int hpck_status_is_data_error(hpck_status status);
HPCK_API void hpck_string_free(char* s);

/* ---- properties ------------------------------------------------------- */

typedef struct hpck_sat_props {
  double T_C;
  double P_kPa;
  double hf_kJkg, hg_kJkg;
  double sf_kJkgK, sg_kJkgK;
  double rhof_kgm3, rhog_kgm3;
} hpck_sat_props;

HPCK_API hpck_status hpck_propset_load(const char* refrigerant, const char* data_dir,
                                       hpck_propset** out);
HPCK_API void hpck_propset_free(hpck_propset* ps);
HPCK_API hpck_status hpck_propset_saturation(const hpck_propset* ps, double T_C,
                                             hpck_sat_props* out);
HPCK_API hpck_status hpck_propset_saturation_temperature(const hpck_propset* ps, double P_kPa,
                                                         double* T_C);

/* ---- scenarios -------------------------------------------------------- */

HPCK_API hpck_status hpck_scenario_parse(const char* json, hpck_scenario** out);
HPCK_API hpck_status hpck_scenario_load(const char* path, hpck_scenario** out);
HPCK_API void hpck_scenario_free(hpck_scenario* sc);
/* Output settings from the scenario document; path is "" when unset.
 * The returned path stays valid until the scenario is freed. */
HPCK_API hpck_status hpck_scenario_output(const hpck_scenario* sc, hpck_format* format,
                                          int* plot_data, const char** path);

HPCK_API hpck_status hpck_scenario_run(const hpck_scenario* sc, const char* data_dir,
                                       hpck_results** out);
HPCK_API void hpck_results_free(hpck_results* r);
HPCK_API size_t hpck_results_count(const hpck_results* r);
/* Value of a report column for row `index` (any column but "refrigerant"). */
HPCK_API hpck_status hpck_results_value(const hpck_results* r, size_t index, const char* column,
                                        double* out);
HPCK_API size_t hpck_results_failure_count(const hpck_results* r);
/* Failure message and status for failure `index`; message valid while r lives. */
HPCK_API hpck_status hpck_results_failure(const hpck_results* r, size_t index,
                                          hpck_status* status, const char** message);
HPCK_API size_t hpck_results_warning_count(const hpck_results* r);
HPCK_API const char* hpck_results_warning(const hpck_results* r, size_t index);
HPCK_API hpck_status hpck_results_format(const hpck_results* r, hpck_format format,
                                         int plot_data, char** out);
HPCK_API hpck_status hpck_results_write(const hpck_results* r, hpck_format format, int plot_data,
                                        const char* path);

/* ---- reference validation -------------------------------------------- */

HPCK_API hpck_status hpck_validate(const char* data_dir, hpck_validation** out);
HPCK_API void hpck_validation_free(hpck_validation* v);
HPCK_API size_t hpck_validation_passed(const hpck_validation* v);
HPCK_API size_t hpck_validation_failed(const hpck_validation* v);
HPCK_API hpck_status hpck_validation_format(const hpck_validation* v, hpck_format format,
                                            char** out);

/* ---- environmental impact -------------------------------------------- */

typedef struct hpck_tewi_inputs {
  double gwp;                  /* kg CO2-eq per kg */
  double charge_m;             /* kg */
  double leak_rate_L;          /* % per year */
  double life_n;               /* years */
  double recovery_alpha;       /* % */
  double annual_energy_E;      /* kWh per year */
  double emission_factor_beta; /* kg CO2 per kWh */
} hpck_tewi_inputs;

typedef struct hpck_tewi_result {
  double direct, indirect, total; /* kg CO2-eq */
} hpck_tewi_result;

HPCK_API hpck_status hpck_tewi(const hpck_tewi_inputs* in, hpck_tewi_result* out);
HPCK_API hpck_status hpck_refrigerant_gwp(const char* refrigerant, double* gwp);

#ifdef __cplusplus
}
#endif

#endif /* HPCK_H */
