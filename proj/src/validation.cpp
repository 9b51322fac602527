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

#include "hpck/validation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "json.hpp"

namespace hpck {

namespace {

using R = RefrigerantId;

const ReferenceDataset kRefs = {
    {{
        {R::R152a, 3.09, 2.91, 35.3, 32.1, 30.2, 53.6, 58.8, 94.9, 85.7},
        {R::R134a, 2.97, 2.80, 34.0, 30.9, 29.1, 53.6, 58.5, 97.3, 83.5},
        {R::R1234ze_E, 2.96, 2.79, 33.8, 30.7, 29.0, 52.5, 58.3, 99.1, 79.7},
        {R::R450A, 2.89, 2.73, 33.1, 30.0, 28.4, 50.4, 58.4, 97.6, 81.3},
        {R::R513A, 2.88, 2.72, 32.9, 29.9, 28.3, 53.6, 58.4, 98.3, 83.1},
        {R::R1234yf, 2.83, 2.67, 32.3, 29.4, 27.8, 53.2, 58.3, 99.3, 82.1},
    }},
    8.734,
    {3.88, 4.26},
    {2.86, 3.37},
    {2.42, 3.20},
    {2.28, 2.98},
    17.5,
    1949.0,
    31.4,
    32.0,
    965.0,
    1119.0,
    16.0,
    23.0,
    94.9,
    99.3,
};

std::string fmt(double v) { return format_number(v); }

std::string fmt_pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

class Checks {
 public:
  void add(int criterion, std::string name, std::string expected, std::string computed,
           std::string tolerance, bool pass) {
    out_.checks.push_back({criterion, std::move(name), std::move(expected), std::move(computed),
                           std::move(tolerance), pass});
  }

  void rel(int criterion, const std::string& name, double expected, double computed, double tol) {
    bool ok = std::abs(computed - expected) <= tol * std::abs(expected);
    add(criterion, name, fmt(expected), fmt(computed), "+/-" + fmt_pct(tol * 100) + "%", ok);
  }

  void abs(int criterion, const std::string& name, double expected, double computed, double tol,
           const char* unit = "") {
    bool ok = std::abs(computed - expected) <= tol;
    add(criterion, name, fmt(expected), fmt(computed), "+/-" + fmt(tol) + unit, ok);
  }

  void band(int criterion, const std::string& name, Band b, double pad, double lo, double hi) {
    bool ok = lo >= b.lo - pad && hi <= b.hi + pad;
    add(criterion, name, "[" + fmt(b.lo) + ", " + fmt(b.hi) + "]", "[" + fmt(lo) + ", " + fmt(hi) + "]",
        "+/-" + fmt(pad), ok);
  }

  ValidationReport take() { return std::move(out_); }

 private:
  ValidationReport out_;
};

const ResultRow* find_row(const ResultSeries& s, RefrigerantId id) {
  for (const auto& r : s.rows)
    if (r.refrigerant == id) return &r;
  return nullptr;
}

std::string names(const std::vector<RefrigerantId>& ids) {
  std::string s;
  for (auto id : ids) s += (s.empty() ? "" : " > ") + std::string(to_string(id));
  return s;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

const ReferenceRow& ReferenceDataset::row(RefrigerantId id) const {
  for (const auto& r : rows)
    if (r.id == id) return r;
  fail(Errc::UnknownRefrigerant, "no reference row for " + std::string(to_string(id)));
}

const ReferenceDataset& reference_dataset() { return kRefs; }

std::size_t ValidationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](auto& c) { return c.pass; }));
}

std::size_t ValidationReport::failed() const { return checks.size() - passed(); }

ValidationReport validate_against_reference(const ResultSeries& design, const ResultSeries& sweep,
                                            const ReferenceDataset& refs,
                                            const ValidationTolerances& tol) {
  std::map<RefrigerantId, const ResultRow*> d;
  for (const auto& ref : refs.rows) {
    const auto* row = find_row(design, ref.id);
    if (!row)
      fail(Errc::IncompleteResults, "design-point results missing " + std::string(to_string(ref.id)));
    d[ref.id] = row;
  }
  if (sweep.rows.empty()) fail(Errc::IncompleteResults, "sweep results are empty");

  Checks c;
  std::vector<RefrigerantId> ref_order;
  for (const auto& ref : refs.rows) ref_order.push_back(ref.id);

  // 1. cycle and system COP at the design point
  for (const auto& ref : refs.rows) {
    const auto name = std::string(to_string(ref.id));
    c.rel(1, "COP_cycle " + name, ref.COP_cycle, d[ref.id]->cycle.COP_cycle, tol.cop_rel);
    c.rel(1, "COP_system " + name, ref.COP_system, d[ref.id]->cycle.COP_system, tol.cop_rel);
  }
  {
    auto by_cop = ref_order;
    std::stable_sort(by_cop.begin(), by_cop.end(), [&](auto a, auto b) {
      return d[a]->cycle.COP_cycle > d[b]->cycle.COP_cycle;
    });
    bool strict = true;
    for (std::size_t i = 0; i + 1 < ref_order.size(); ++i)
      strict = strict && d[ref_order[i]]->cycle.COP_cycle > d[ref_order[i + 1]]->cycle.COP_cycle;
    c.add(1, "COP_cycle ordering", names(ref_order), names(by_cop), "strict", strict);
  }

  // 2. reverse Carnot COP and second-law efficiency
  c.abs(2, "COP_carnot", refs.COP_carnot, d[R::R134a]->cycle.COP_carnot, tol.carnot_abs);
  for (const auto& ref : refs.rows)
    c.abs(2, "eta_2nd " + std::string(to_string(ref.id)), ref.eta_2nd,
          d[ref.id]->exergy.system.second_law * 100.0, tol.eta_2nd_pp, " pp");

  // 3. component exergy efficiencies
  for (const auto& ref : refs.rows) {
    const auto name = std::string(to_string(ref.id));
    const auto& e = d[ref.id]->exergy.efficiency;
    c.abs(3, "eta_evap " + name, ref.eta_evap, e.evaporator * 100.0, tol.component_pp, " pp");
    c.abs(3, "eta_comp " + name, ref.eta_comp, e.compressor * 100.0, tol.component_pp, " pp");
    c.abs(3, "eta_cond " + name, ref.eta_cond, e.condenser * 100.0, tol.component_pp, " pp");
    c.abs(3, "eta_tev " + name, ref.eta_tev, e.tev * 100.0, tol.component_pp, " pp");
  }
  {
    auto cond_eff = [&](RefrigerantId id) { return d[id]->exergy.efficiency.condenser * 100.0; };
    auto [mn, mx] = std::minmax_element(ref_order.begin(), ref_order.end(),
                                        [&](auto a, auto b) { return cond_eff(a) < cond_eff(b); });
    bool ok = *mn == R::R152a && *mx == R::R1234yf &&
              std::abs(cond_eff(*mn) - refs.eta_cond_min_pct) <= tol.component_pp &&
              std::abs(cond_eff(*mx) - refs.eta_cond_max_pct) <= tol.component_pp;
    c.add(3, "eta_cond span",
          "R152a " + fmt(refs.eta_cond_min_pct) + " .. R1234yf " + fmt(refs.eta_cond_max_pct),
          std::string(to_string(*mn)) + " " + fmt_pct(cond_eff(*mn)) + " .. " +
              std::string(to_string(*mx)) + " " + fmt_pct(cond_eff(*mx)),
          "+/-" + fmt(tol.component_pp) + " pp", ok);

    auto by_t4 = ref_order;
    std::sort(by_t4.begin(), by_t4.end(), [&](auto a, auto b) {
      return d[a]->cycle.points.state4.T < d[b]->cycle.points.state4.T;
    });
    bool dec = true;
    for (std::size_t i = 0; i + 1 < by_t4.size(); ++i)
      dec = dec && cond_eff(by_t4[i]) > cond_eff(by_t4[i + 1]);
    std::string got;
    for (auto id : by_t4)
      got += (got.empty() ? "" : ", ") + std::string(to_string(id)) + " T4=" +
             fmt_pct(d[id]->cycle.points.state4.T) + " eta=" + fmt_pct(cond_eff(id));
    c.add(3, "eta_cond decreases with T4", "strictly decreasing", got, "strict", dec);
  }

  // 4. exergy destruction
  for (const auto& ref : refs.rows) {
    const auto& x = d[ref.id]->exergy.destruction;
    bool ok = x.compressor > x.tev && x.tev > x.evaporator && x.evaporator > x.condenser;
    c.add(4, "destruction ordering " + std::string(to_string(ref.id)), "comp > TEV > evap > cond",
          fmt_pct(x.compressor) + " / " + fmt_pct(x.tev) + " / " + fmt_pct(x.evaporator) + " / " +
              fmt_pct(x.condenser),
          "strict", ok);
  }
  {
    auto total = [&](RefrigerantId id) { return d[id]->exergy.cycle_destruction; };
    auto [mn, mx] = std::minmax_element(ref_order.begin(), ref_order.end(),
                                        [&](auto a, auto b) { return total(a) < total(b); });
    c.add(4, "destruction minimum at R152a", "R152a", std::string(to_string(*mn)), "exact",
          *mn == R::R152a);
    c.add(4, "destruction maximum at R1234yf", "R1234yf", std::string(to_string(*mx)), "exact",
          *mx == R::R1234yf);
    c.rel(4, "destruction total R152a", refs.E_dest_min_W, total(R::R152a), tol.destruction_rel);
    c.rel(4, "destruction total R1234yf", refs.E_dest_max_W, total(R::R1234yf), tol.destruction_rel);

    auto share = [&](RefrigerantId id) { return d[id]->exergy.relative.tev * 100.0; };
    bool rising = true;
    std::string got;
    for (std::size_t i = 0; i < ref_order.size(); ++i) {
      if (i + 1 < ref_order.size()) rising = rising && share(ref_order[i + 1]) >= share(ref_order[i]);
      got += (got.empty() ? "" : ", ") + fmt_pct(share(ref_order[i]));
    }
    c.add(4, "TEV share rises along COP order", "non-decreasing", got, "monotone", rising);
    c.abs(4, "TEV share first (R152a)", refs.tev_share_first_pct, share(ref_order.front()),
          tol.tev_share_pp, " pp");
    c.abs(4, "TEV share last (R1234yf)", refs.tev_share_last_pct, share(ref_order.back()),
          tol.tev_share_pp, " pp");
  }

  // 5. screening quantities
  c.rel(5, "m_ref R152a [g/s]", refs.R152a_m_ref_gs, d[R::R152a]->cycle.m_ref * 1000.0, tol.screening_rel);
  c.rel(5, "VRC R152a [kJ/m3]", refs.R152a_VRC, d[R::R152a]->cycle.VRC, tol.screening_rel);
  c.rel(5, "m_ref R450A [g/s]", refs.R450A_m_ref_gs, d[R::R450A]->cycle.m_ref * 1000.0, tol.screening_rel);
  c.rel(5, "m_ref R1234ze(E) [g/s]", refs.R1234zeE_m_ref_gs, d[R::R1234ze_E]->cycle.m_ref * 1000.0,
        tol.screening_rel);
  {
    auto by_latent = ref_order;
    std::sort(by_latent.begin(), by_latent.end(),
              [&](auto a, auto b) { return d[a]->latent_heat_evap < d[b]->latent_heat_evap; });
    bool dec = true;
    for (std::size_t i = 0; i + 1 < by_latent.size(); ++i)
      dec = dec && d[by_latent[i]]->cycle.m_ref > d[by_latent[i + 1]]->cycle.m_ref;
    std::string got;
    for (auto id : by_latent)
      got += (got.empty() ? "" : ", ") + std::string(to_string(id)) + " " +
             fmt_pct(d[id]->cycle.m_ref * 1000.0);
    c.add(5, "m_ref decreases with latent heat", "strictly decreasing", got, "strict", dec);
  }

  // 6. regression sweep bands
  {
    auto series = [&](auto get) {
      std::vector<double> v;
      for (const auto& r : sweep.rows) v.push_back(get(r));
      return v;
    };
    auto check = [&](const std::string& name, Band b, double pad, const std::vector<double>& v) {
      auto [lo, hi] = std::minmax_element(v.begin(), v.end());
      c.band(6, name + " band", b, pad, *lo, *hi);
      bool dec = true;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) dec = dec && v[i + 1] < v[i];
      c.add(6, name + " decreasing in T_sink", "strictly decreasing",
            fmt_pct(v.front()) + " -> " + fmt_pct(v.back()), "strict", dec);
    };
    check("Q_cond", refs.Q_cond_model, tol.band_Q_cond, series([](auto& r) { return r.cycle.Q_cond; }));
    check("Q_evap", refs.Q_evap_model, tol.band_Q_evap, series([](auto& r) { return r.cycle.Q_evap; }));
    check("COP_cycle", refs.COP_cycle_model, tol.band_cop,
          series([](auto& r) { return r.cycle.COP_cycle; }));
    check("COP_system", refs.COP_system_model, tol.band_cop,
          series([](auto& r) { return r.cycle.COP_system; }));
  }

  // 7. algebraic identities over every row
  {
    double energy = 0, power = 0, balance = 0, shares = 0;
    auto visit = [&](const ResultRow& r) {
      const auto& cy = r.cycle;
      const auto& p = cy.points;
      energy = std::max(energy, rel_err(cy.Q_cond, cy.Q_evap + cy.W_comp));
      power = std::max(power, rel_err(cy.W_elec_comp, cy.m_ref * (p.state4s.h - p.state3.h) / cy.eta_comp));
      const auto& e = r.exergy.rates;
      double global = cy.W_elec_comp * 1000.0 + (e[1] - e[2]) - (e[8] - e[7]);
      balance = std::max(balance, rel_err(r.exergy.cycle_destruction, global));
      shares = std::max(shares, std::abs(r.exergy.relative.sum() - 1.0));
    };
    for (const auto& r : design.rows) visit(r);
    for (const auto& r : sweep.rows) visit(r);
    auto id = [&](const std::string& name, double err) {
      c.add(7, name, "0", fmt(err), "<= " + fmt(tol.identity_rel), err <= tol.identity_rel);
    };
    id("Q_cond = Q_evap + W_comp", energy);
    id("W_elec = m (h4s - h3) / eta_comp", power);
    id("cycle destruction = W + (E1 - E2) - (E8 - E7)", balance);
    id("relative destructions sum to 1", shares);
  }

  // 9. TEWI ordering under common parameters
  {
    auto total = [&](RefrigerantId id) { return d[id]->tewi.total; };
    auto direct = [&](RefrigerantId id) { return d[id]->tewi.direct; };
    auto mn = *std::min_element(ref_order.begin(), ref_order.end(),
                                [&](auto a, auto b) { return total(a) < total(b); });
    auto mx = *std::max_element(ref_order.begin(), ref_order.end(),
                                [&](auto a, auto b) { return direct(a) < direct(b); });
    c.add(9, "lowest TEWI total", "R152a", std::string(to_string(mn)), "exact", mn == R::R152a);
    c.add(9, "largest TEWI direct", "R134a", std::string(to_string(mx)), "exact", mx == R::R134a);
  }

  return c.take();
}

Scenario reference_design_scenario() {
  Scenario s;
  s.refrigerants.assign(kAllRefrigerants.begin(), kAllRefrigerants.end());
  s.mode = ScenarioMode::DesignPoint;
  s.t_sink = {50.0, 50.0, 1.0};
  return s;
}

Scenario reference_sweep_scenario() {
  Scenario s;
  s.refrigerants = {RefrigerantId::R134a};
  s.mode = ScenarioMode::RegressionSweep;
  s.t_sink = {40.0, 50.0, 1.0};
  return s;
}

ValidationReport run_reference_validation(const std::filesystem::path& data_dir,
                                          const ValidationTolerances& tol) {
  auto design = run_scenario(reference_design_scenario(), data_dir);
  auto sweep = run_scenario(reference_sweep_scenario(), data_dir);
  for (const auto* series : {&design, &sweep})
    if (!series->failures.empty()) {
      const auto& f = series->failures.front();
      throw Error(f.code, std::string(to_string(f.refrigerant)) + " at T_sink " +
                              format_number(f.T_sink) + " C: " + f.message);
    }
  return validate_against_reference(design, sweep, reference_dataset(), tol);
}

std::string format_validation(const ValidationReport& r, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    auto quote = [](const std::string& s) {
      if (s.find_first_of(",\"") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    };
    std::string out = "criterion,check,expected,computed,tolerance,result\n";
    for (const auto& ch : r.checks)
      out += std::to_string(ch.criterion) + "," + quote(ch.name) + "," + quote(ch.expected) + "," +
             quote(ch.computed) + "," + quote(ch.tolerance) + "," + (ch.pass ? "PASS" : "FAIL") + "\n";
    return out;
  }
  nlohmann::ordered_json j;
  j["passed"] = r.passed();
  j["failed"] = r.failed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& ch : r.checks)
    arr.push_back({{"criterion", ch.criterion},
                   {"check", ch.name},
                   {"expected", ch.expected},
                   {"computed", ch.computed},
                   {"tolerance", ch.tolerance},
                   {"pass", ch.pass}});
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace hpck
