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

#include "hpck/enviro.hpp"

#include <cmath>
#include <string>

#include "csv.hpp"
#include "hpck/errors.hpp"

namespace hpck {

namespace {

constexpr std::optional<double> none = std::nullopt;

const std::array<RefrigerantMeta, 6> kMeta = {{
    {RefrigerantId::R134a, 1430, 102.03, -26.1, 4.06, 101.1, none, none, none},
    {RefrigerantId::R152a, 124, 66.05, -24.7, 4.50, 113.15, 16.9, 3.9, 455},
    {RefrigerantId::R450A, 547, 108.6, -23.1, 4.01, 75.1, none, none, none},
    {RefrigerantId::R513A, 573, 108.4, -29.2, 3.77, 96.5, none, none, none},
    {RefrigerantId::R1234yf, 4, 114.0, -29.4, 3.38, 94.7, 12.3, 6.2, 405},
    {RefrigerantId::R1234ze_E, 7, 114.0, -19.0, 3.64, 109.4, 11.3, 5.7, 368},
}};

std::size_t index_of(RefrigerantId id) {
  auto i = static_cast<std::size_t>(id);
  if (i >= kMeta.size()) fail(Errc::UnknownRefrigerant, "refrigerant id out of range");
  return i;
}

void check_meta(const RefrigerantMeta& m, const std::string& where) {
  auto bad = [&](const std::string& why) { fail(Errc::InvariantViolation, where + ": " + why); };
  if (!(m.gwp_100yr >= 0)) bad("negative GWP");
  if (!(m.molar_mass > 0)) bad("non-positive molar mass");
  if (!(m.critical_pressure > 0)) bad("non-positive critical pressure");
  if (!(m.critical_temperature > m.normal_boiling_point)) bad("critical temperature below boiling point");
  if (m.ufl.has_value() != m.lfl.has_value()) bad("UFL and LFL must both be present or both absent");
  if (m.ufl && !(*m.ufl > *m.lfl)) bad("UFL must exceed LFL");
}

}  // namespace

const RefrigerantMeta& refrigerant_metadata(RefrigerantId id) { return kMeta[index_of(id)]; }

MetadataTable MetadataTable::embedded() {
  MetadataTable t;
  t.rows_ = kMeta;
  return t;
}

MetadataTable MetadataTable::load_csv(const std::filesystem::path& path) {
  static const std::vector<std::string> kHeader = {
      "id", "gwp", "molar_mass", "nbp_C", "pc_MPa", "tc_C", "ufl_pct", "lfl_pct", "autoignition_C"};
  auto csv = detail::read_csv(path);
  if (csv.header != kHeader) fail(Errc::MalformedData, path.string() + ": unexpected header");
  MetadataTable t = embedded();
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& row = csv.rows[r];
    std::string where = path.string() + ":" + std::to_string(csv.line_numbers[r]);
    RefrigerantId id;
    try {
      id = parse_refrigerant(row[0]);
    } catch (const Error&) {
      fail(Errc::MalformedData, where + ": unknown refrigerant '" + row[0] + "'");
    }
    auto opt = [&](std::size_t c) -> std::optional<double> {
      if (row[c].empty() || row[c] == "-") return std::nullopt;
      return detail::cell_number(csv, r, c);
    };
    RefrigerantMeta m{id,
                      detail::cell_number(csv, r, 1),
                      detail::cell_number(csv, r, 2),
                      detail::cell_number(csv, r, 3),
                      detail::cell_number(csv, r, 4),
                      detail::cell_number(csv, r, 5),
                      opt(6),
                      opt(7),
                      opt(8)};
    check_meta(m, where);
    t.rows_[index_of(id)] = m;
  }
  return t;
}

MetadataTable MetadataTable::for_data_dir(const std::filesystem::path& data_dir) {
  auto p = data_dir / "refrigerants.csv";
  std::error_code ec;
  if (std::filesystem::exists(p, ec)) return load_csv(p);
  return embedded();
}

const RefrigerantMeta& MetadataTable::get(RefrigerantId id) const { return rows_[index_of(id)]; }

void TewiInputs::validate() const {
  auto bad = [](const char* why) { fail(Errc::InvalidArgument, std::string("TEWI input: ") + why); };
  if (!std::isfinite(gwp) || gwp < 0) bad("GWP must be >= 0");
  if (!std::isfinite(charge_m) || charge_m < 0) bad("charge must be >= 0");
  if (!(leak_rate_L >= 0 && leak_rate_L <= 100)) bad("leak rate must be within 0..100 %");
  if (!(recovery_alpha >= 0 && recovery_alpha <= 100)) bad("recovery factor must be within 0..100 %");
  if (!std::isfinite(life_n) || life_n < 0) bad("lifetime must be >= 0");
  if (!std::isfinite(annual_energy_E) || annual_energy_E < 0) bad("annual energy must be >= 0");
  if (!std::isfinite(emission_factor_beta) || emission_factor_beta < 0)
    bad("emission factor must be >= 0");
}

TewiResult tewi(const TewiInputs& in) {
  in.validate();
  TewiResult r;
  r.direct = in.gwp * in.charge_m * (in.leak_rate_L / 100.0 * in.life_n + (1.0 - in.recovery_alpha / 100.0));
  r.indirect = in.annual_energy_E * in.emission_factor_beta * in.life_n;
  r.total = r.direct + r.indirect;
  return r;
}

TewiInputs make_tewi_inputs(const TewiParameters& p, double gwp, double w_elec_total_kw) {
  TewiInputs in;
  in.gwp = gwp;
  in.charge_m = p.charge_m;
  in.leak_rate_L = p.leak_rate_L;
  in.life_n = p.life_n;
  in.recovery_alpha = p.recovery_alpha;
  in.annual_energy_E = p.annual_energy_E ? *p.annual_energy_E : w_elec_total_kw * p.operating_hours;
  in.emission_factor_beta = p.emission_factor_beta;
  return in;
}

NormalizedComparison normalize_vs_baseline(
    const std::vector<std::pair<RefrigerantId, ComparisonMetrics>>& metrics,
    RefrigerantId baseline) {
  const ComparisonMetrics* base = nullptr;
  for (const auto& [id, m] : metrics)
    if (id == baseline) base = &m;
  if (!base)
    fail(Errc::MissingBaseline, "baseline " + std::string(to_string(baseline)) + " not in metrics");
  if (base->COP_cycle == 0 || base->TEWI_total == 0 || base->eta_cycle_ex == 0 ||
      base->E_dest_cycle == 0)
    fail(Errc::ZeroBaseline, "baseline metric is zero");
  NormalizedComparison out{baseline, {}};
  out.ratios.reserve(metrics.size());
  for (const auto& [id, m] : metrics) {
    ComparisonMetrics r;
    r.COP_cycle = m.COP_cycle / base->COP_cycle;
    r.TEWI_total = m.TEWI_total / base->TEWI_total;
    r.eta_cycle_ex = m.eta_cycle_ex / base->eta_cycle_ex;
    r.E_dest_cycle = m.E_dest_cycle / base->E_dest_cycle;
    out.ratios.emplace_back(id, r);
  }
  return out;
}

}  // namespace hpck
