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

// Published reference results for the ground-source rig and the checks that
// compare a run against them.

#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "hpck/scenario.hpp"

namespace hpck {

// Screening results at the design point; efficiencies in percent.
struct ReferenceRow {
  RefrigerantId id;
  double COP_cycle, COP_system, eta_2nd, eta_cycle, eta_system;
  double eta_evap, eta_comp, eta_cond, eta_tev;
};

struct Band {
  double lo, hi;
};

struct ReferenceDataset {
  // Ordered by decreasing cycle COP.
  std::array<ReferenceRow, 6> rows;
  double COP_carnot;
  // Model ranges over the 40..50 C sink sweep.
  Band Q_cond_model, Q_evap_model, COP_cycle_model, COP_system_model;
  // Screening values.
  double R152a_m_ref_gs, R152a_VRC, R450A_m_ref_gs, R1234zeE_m_ref_gs;
  double E_dest_min_W, E_dest_max_W;  // R152a and R1234yf
  double tev_share_first_pct, tev_share_last_pct;
  double eta_cond_min_pct, eta_cond_max_pct;

  const ReferenceRow& row(RefrigerantId id) const;
};

const ReferenceDataset& reference_dataset();

struct ValidationTolerances {
  double cop_rel = 0.05;
  double eta_2nd_pp = 1.5;
  double component_pp = 2.0;
  double destruction_rel = 0.08;
  double tev_share_pp = 3.0;
  double screening_rel = 0.05;
  double band_Q_cond = 0.15;
  double band_Q_evap = 0.12;
  double band_cop = 0.10;
  double carnot_abs = 5e-4;
  double identity_rel = 1e-6;
};

struct ValidationCheck {
  int criterion = 0;
  std::string name;
  std::string expected;
  std::string computed;
  std::string tolerance;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

// `design` must hold design-point rows for all six refrigerants, `sweep` the
// regression sweep rows (any refrigerant, ascending sink temperature).
// Throws IncompleteResults otherwise. Never modifies its inputs.
ValidationReport validate_against_reference(const ResultSeries& design, const ResultSeries& sweep,
                                            const ReferenceDataset& refs = reference_dataset(),
                                            const ValidationTolerances& tol = {});

Scenario reference_design_scenario();
Scenario reference_sweep_scenario();

// Runs both reference scenarios from `data_dir` and validates them.
ValidationReport run_reference_validation(const std::filesystem::path& data_dir,
                                          const ValidationTolerances& tol = {});

std::string format_validation(const ValidationReport& r, OutputFormat format);

}  // namespace hpck
