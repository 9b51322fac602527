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

#include "hpck/properties.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <string>

#include "csv.hpp"
#include "hpck/errors.hpp"

namespace hpck {

namespace {

constexpr double kTolT = 1e-9;  // K; below this two temperatures are the same
constexpr double kDeadP = 101.325;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double lerp(double a, double b, double f) { return f == 0.0 ? a : a + (b - a) * f; }

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

// Bracket x in ascending xs. Returns (i, f) with x = xs[i] + f (xs[i+1] - xs[i]);
// f is exactly 0 on a node. Caller checks the range first.
std::pair<std::size_t, double> locate(const std::vector<double>& xs, double x) {
  auto it = std::lower_bound(xs.begin(), xs.end(), x);
  auto i = static_cast<std::size_t>(it - xs.begin());
  if (it != xs.end() && *it == x) return {i, 0.0};
  --i;
  return {i, (x - xs[i]) / (xs[i + 1] - xs[i])};
}

}  // namespace

struct PropertySet::Impl {
  RefrigerantId id;
  RefrigerantMeta meta;
  std::uint64_t convention = 0;

  std::vector<SaturationRecord> sat;
  std::vector<double> sat_T, sat_P;

  // Superheat grid: one row per pressure, columns are superheat offsets
  // (identical for every row). Values are stored as departures from the
  // first column of the row, which is saturated vapor at that pressure.
  std::vector<double> sh_P, sh_lnP, offsets;
  std::vector<double> h, s, rho;     // raw values, row-major
  std::vector<double> dh, ds, drho;  // departures, row-major
  std::vector<SuperheatRecord> sh_records;

  std::size_t ncol() const { return offsets.size(); }

  SaturationRecord sat_at(double T) const {
    if (!(T >= sat_T.front() && T <= sat_T.back()))
      fail(Errc::OutOfRange, std::string(to_string(id)) + ": temperature " + num(T) +
                                 " C outside saturation table " + num(sat_T.front()) + ".." +
                                 num(sat_T.back()) + " C");
    auto [i, f] = locate(sat_T, T);
    if (f == 0.0) return sat[i];
    const auto& a = sat[i];
    const auto& b = sat[i + 1];
    return {T,
            lerp(a.P, b.P, f),
            lerp(a.h_f, b.h_f, f),
            lerp(a.h_g, b.h_g, f),
            lerp(a.s_f, b.s_f, f),
            lerp(a.s_g, b.s_g, f),
            lerp(a.rho_f, b.rho_f, f),
            lerp(a.rho_g, b.rho_g, f)};
  }

  double tsat(double P) const {
    if (!(P >= sat_P.front() && P <= sat_P.back()))
      fail(Errc::OutOfRange, std::string(to_string(id)) + ": pressure " + num(P) +
                                 " kPa outside saturation table " + num(sat_P.front()) + ".." +
                                 num(sat_P.back()) + " kPa");
    auto [i, f] = locate(sat_P, P);
    if (f == 0.0) return sat_T[i];
    return lerp(sat_T[i], sat_T[i + 1], f);
  }

  ThermoState sat_vapor(double Ts, double P) const {
    auto r = sat_at(Ts);
    return {Ts, P, r.h_g, r.s_g, r.rho_g, 1.0, Phase::TwoPhase, convention};
  }

  void check_superheat_pressure(double P) const {
    if (!(P >= sh_P.front() && P <= sh_P.back()))
      fail(Errc::OutOfRange, std::string(to_string(id)) + ": pressure " + num(P) +
                                 " kPa outside superheat grid " + num(sh_P.front()) + ".." +
                                 num(sh_P.back()) + " kPa");
  }

  // Superheated state at pressure P and offset above saturation; Ts = tsat(P).
  ThermoState superheat(double P, double Ts, double off) const {
    if (off <= kTolT) return sat_vapor(Ts, P);
    if (off > offsets.back() + kTolT)
      fail(Errc::OutOfRange, std::string(to_string(id)) + ": superheat " + num(off) +
                                 " K exceeds grid limit " + num(offsets.back()) + " K");
    off = std::min(off, offsets.back());

    std::size_t k = 0;
    double u = 0.0;
    if (P == sh_P.back()) {
      k = sh_P.size() - 1;
    } else {
      std::tie(k, u) = locate(sh_P, P);
      if (u != 0.0) u = (std::log(P) - sh_lnP[k]) / (sh_lnP[k + 1] - sh_lnP[k]);
    }
    std::size_t j = 0;
    double w = 0.0;
    if (off == offsets.back()) {
      j = ncol() - 1;
    } else {
      std::tie(j, w) = locate(offsets, off);
    }

    const double T = Ts + off;
    if (u == 0.0 && w == 0.0) {
      std::size_t n = k * ncol() + j;
      return {T, P, h[n], s[n], rho[n], std::numeric_limits<double>::quiet_NaN(),
              Phase::SuperheatedVapor, convention};
    }
    auto row = [&](const std::vector<double>& v, std::size_t kk) {
      std::size_t n = kk * ncol() + j;
      return w == 0.0 ? v[n] : lerp(v[n], v[n + 1], w);
    };
    auto field = [&](const std::vector<double>& v) {
      double a = row(v, k);
      return u == 0.0 ? a : lerp(a, row(v, k + 1), u);
    };
    auto base = sat_at(Ts);
    return {T,
            P,
            base.h_g + field(dh),
            base.s_g + field(ds),
            base.rho_g + field(drho),
            std::numeric_limits<double>::quiet_NaN(),
            Phase::SuperheatedVapor,
            convention};
  }

  template <class Get>
  ThermoState solve_superheat(double P, double target, Get get, const char* what) const {
    check_superheat_pressure(P);
    const double Ts = tsat(P);
    const double at_sat = get(sat_vapor(Ts, P));
    if (target < at_sat) {
      if (at_sat - target <= 1e-10 * std::max(1.0, std::abs(at_sat))) return sat_vapor(Ts, P);
      fail(Errc::WetCompression, std::string(to_string(id)) + ": " + what + " " + num(target) +
                                     " below saturated vapor value " + num(at_sat) + " at " +
                                     num(P) + " kPa");
    }
    const double top = get(superheat(P, Ts, offsets.back()));
    if (target > top)
      fail(Errc::OutOfRange, std::string(to_string(id)) + ": " + what + " " + num(target) +
                                 " above superheat grid at " + num(P) + " kPa");
    double lo = 0.0, hi = offsets.back();
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
      double mid = 0.5 * (lo + hi);
      if (get(superheat(P, Ts, mid)) < target)
        lo = mid;
      else
        hi = mid;
    }
    return superheat(P, Ts, 0.5 * (lo + hi));
  }
};

PropertySet::PropertySet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

PropertySet PropertySet::from_records(RefrigerantId id, std::vector<SaturationRecord> sat,
                                      std::vector<SuperheatRecord> sh,
                                      const RefrigerantMeta& meta) {
  const std::string name(to_string(id));
  auto violation = [&](const std::string& why) { fail(Errc::InvariantViolation, name + ": " + why); };

  if (sat.size() < 2) violation("saturation table needs at least two records");
  for (std::size_t i = 0; i < sat.size(); ++i) {
    const auto& r = sat[i];
    for (double v : {r.T, r.P, r.h_f, r.h_g, r.s_f, r.s_g, r.rho_f, r.rho_g})
      if (!std::isfinite(v)) violation("non-finite saturation value at T = " + num(r.T));
    if (!(r.P > 0 && r.rho_g > 0)) violation("non-positive pressure or density at T = " + num(r.T));
    if (!(r.h_g > r.h_f)) violation("h_g <= h_f at T = " + num(r.T));
    if (!(r.s_g > r.s_f)) violation("s_g <= s_f at T = " + num(r.T));
    if (!(r.rho_f > r.rho_g)) violation("rho_f <= rho_g at T = " + num(r.T));
    if (i > 0) {
      const auto& p = sat[i - 1];
      if (!(r.T > p.T)) violation("saturation temperatures not ascending at T = " + num(r.T));
      if (r.T - p.T > 1.0 + kTolT) violation("saturation grid spacing above 1 K at T = " + num(r.T));
      if (!(r.P > p.P)) violation("saturation pressure not increasing at T = " + num(r.T));
    }
  }
  const double t_cover = meta.critical_temperature - 5.0;
  if (sat.front().T > -45.0 + kTolT || sat.back().T < t_cover - kTolT)
    violation("saturation table covers " + num(sat.front().T) + ".." + num(sat.back().T) +
              " C, needs -45.." + num(t_cover) + " C");

  auto impl = std::make_shared<Impl>();
  impl->id = id;
  impl->meta = meta;
  for (const auto& r : sat) {
    impl->sat_T.push_back(r.T);
    impl->sat_P.push_back(r.P);
  }
  impl->sat = std::move(sat);

  // Superheat grid, grouped by pressure.
  if (sh.empty()) violation("superheat table is empty");
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < sh.size(); ++i) {
    const auto& r = sh[i];
    for (double v : {r.P, r.T, r.h, r.s, r.rho})
      if (!std::isfinite(v)) violation("non-finite superheat value at P = " + num(r.P));
    if (i == 0 || r.P != sh[i - 1].P) {
      if (i > 0 && !(r.P > sh[i - 1].P)) violation("superheat pressures not ascending at P = " + num(r.P));
      starts.push_back(i);
    }
  }
  starts.push_back(sh.size());
  const std::size_t nrow = starts.size() - 1;
  if (nrow < 2) violation("superheat grid needs at least two pressures");
  const std::size_t ncol = starts[1] - starts[0];
  if (ncol < 2) violation("superheat grid needs at least two temperatures per pressure");

  for (std::size_t k = 0; k < nrow; ++k) {
    const std::size_t b = starts[k];
    const double P = sh[b].P;
    if (starts[k + 1] - b != ncol)
      violation("superheat grid not rectangular at P = " + num(P));
    if (!(P > 0)) violation("non-positive superheat pressure");
    for (std::size_t j = 0; j < ncol; ++j) {
      const auto& r = sh[b + j];
      double off = r.T - sh[b].T;
      if (k == 0) {
        impl->offsets.push_back(off);
      } else if (std::abs(off - impl->offsets[j]) > 1e-6) {
        violation("superheat offsets differ between pressures at P = " + num(P));
      }
      if (!(r.rho > 0)) violation("non-positive superheat density at P = " + num(P));
      if (j > 0) {
        const auto& p = sh[b + j - 1];
        if (!(r.T > p.T)) violation("superheat temperatures not ascending at P = " + num(P));
        if (!(r.h > p.h)) violation("superheat enthalpy not increasing at P = " + num(P) + ", T = " + num(r.T));
        if (!(r.s > p.s)) violation("superheat entropy not increasing at P = " + num(P) + ", T = " + num(r.T));
        if (!(r.rho < p.rho)) violation("superheat density not decreasing at P = " + num(P) + ", T = " + num(r.T));
      }
      impl->h.push_back(r.h);
      impl->s.push_back(r.s);
      impl->rho.push_back(r.rho);
      impl->dh.push_back(r.h - sh[b].h);
      impl->ds.push_back(r.s - sh[b].s);
      impl->drho.push_back(r.rho - sh[b].rho);
    }
    if (!(P >= impl->sat_P.front() && P <= impl->sat_P.back()))
      violation("superheat pressure " + num(P) + " kPa outside saturation table");
    double ts = impl->tsat(P);
    if (std::abs(sh[b].T - ts) > 0.05)
      violation("superheat row at P = " + num(P) + " starts at " + num(sh[b].T) +
                " C, saturation is " + num(ts) + " C");
    impl->sh_P.push_back(P);
    impl->sh_lnP.push_back(std::log(P));
  }
  if (impl->offsets.front() != 0.0) violation("superheat rows must start at saturation");
  if (impl->offsets.back() < 80.0 - 1e-6) violation("superheat grid must extend 80 K above saturation");
  if (impl->sh_P.front() > kDeadP) violation("lowest superheat pressure above 101.325 kPa");
  const double p_cap = 0.9 * meta.critical_pressure * 1000.0;
  if (impl->sh_P.back() > p_cap * (1.0 + 1e-12))
    violation("highest superheat pressure above 0.9 x critical pressure");
  impl->sh_records = std::move(sh);

  std::uint64_t hsh = 14695981039346656037ull;
  int idv = static_cast<int>(id);
  hsh = fnv1a(hsh, &idv, sizeof idv);
  for (double v : {impl->sat.front().h_f, impl->sat.front().s_f, impl->sat.back().h_g,
                   impl->sat.back().s_g, impl->h.front(), impl->s.back()})
    hsh = fnv1a(hsh, &v, sizeof v);
  impl->convention = hsh;

  return PropertySet(std::move(impl));
}

PropertySet PropertySet::load(RefrigerantId id, const std::filesystem::path& dir,
                              const MetadataTable& meta) {
  static const std::vector<std::string> kSatHeader = {
      "T_C", "P_kPa", "hf_kJkg", "hg_kJkg", "sf_kJkgK", "sg_kJkgK", "rhof_kgm3", "rhog_kgm3"};
  static const std::vector<std::string> kShHeader = {"P_kPa", "T_C", "h_kJkg", "s_kJkgK", "rho_kgm3"};

  const std::string stem(to_string(id));
  auto sat_csv = detail::read_csv(dir / (stem + ".sat.csv"));
  auto sh_csv = detail::read_csv(dir / (stem + ".sh.csv"));
  if (sat_csv.header != kSatHeader)
    fail(Errc::MalformedData, sat_csv.path.string() + ": unexpected header");
  if (sh_csv.header != kShHeader)
    fail(Errc::MalformedData, sh_csv.path.string() + ": unexpected header");

  std::vector<SaturationRecord> sat;
  sat.reserve(sat_csv.rows.size());
  for (std::size_t r = 0; r < sat_csv.rows.size(); ++r) {
    double v[8];
    for (std::size_t c = 0; c < 8; ++c) v[c] = detail::cell_number(sat_csv, r, c);
    sat.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
  }
  std::vector<SuperheatRecord> sh;
  sh.reserve(sh_csv.rows.size());
  for (std::size_t r = 0; r < sh_csv.rows.size(); ++r) {
    double v[5];
    for (std::size_t c = 0; c < 5; ++c) v[c] = detail::cell_number(sh_csv, r, c);
    sh.push_back({v[0], v[1], v[2], v[3], v[4]});
  }
  return from_records(id, std::move(sat), std::move(sh), meta.get(id));
}

PropertySet PropertySet::load(RefrigerantId id, const std::filesystem::path& dir) {
  return load(id, dir, MetadataTable::for_data_dir(dir));
}

RefrigerantId PropertySet::refrigerant() const { return impl_->id; }
std::uint64_t PropertySet::convention() const { return impl_->convention; }
const std::vector<SaturationRecord>& PropertySet::saturation() const { return impl_->sat; }
double PropertySet::t_min() const { return impl_->sat_T.front(); }
double PropertySet::t_max() const { return impl_->sat_T.back(); }
double PropertySet::superheat_p_min() const { return impl_->sh_P.front(); }
double PropertySet::superheat_p_max() const { return impl_->sh_P.back(); }
double PropertySet::max_superheat() const { return impl_->offsets.back(); }

double PropertySet::saturation_pressure(double T) const { return impl_->sat_at(T).P; }

double PropertySet::saturation_temperature(double P) const { return impl_->tsat(P); }

ThermoState PropertySet::saturated_state(double T, SatPhase phase) const {
  auto r = impl_->sat_at(T);
  if (phase == SatPhase::Liquid)
    return {T, r.P, r.h_f, r.s_f, r.rho_f, 0.0, Phase::TwoPhase, impl_->convention};
  return {T, r.P, r.h_g, r.s_g, r.rho_g, 1.0, Phase::TwoPhase, impl_->convention};
}

ThermoState PropertySet::superheated_state(double P, double T) const {
  impl_->check_superheat_pressure(P);
  const double Ts = impl_->tsat(P);
  const double off = T - Ts;
  if (off < -kTolT)
    fail(Errc::SubSaturation, std::string(to_string(impl_->id)) + ": " + num(T) +
                                  " C is below saturation " + num(Ts) + " C at " + num(P) + " kPa");
  return impl_->superheat(P, Ts, off);
}

ThermoState PropertySet::state_at_entropy(double P, double s) const {
  return impl_->solve_superheat(P, s, [](const ThermoState& st) { return st.s; }, "entropy");
}

ThermoState PropertySet::state_at_enthalpy(double P, double h) const {
  return impl_->solve_superheat(P, h, [](const ThermoState& st) { return st.h; }, "enthalpy");
}

ThermoState PropertySet::two_phase_state(double P, double h) const {
  const double Ts = impl_->tsat(P);
  auto r = impl_->sat_at(Ts);
  // Round-off from the pressure inversion is absorbed at the saturation lines.
  const double eps = 1e-9 * (r.h_g - r.h_f);
  if (!(h >= r.h_f - eps && h <= r.h_g + eps))
    fail(Errc::OutOfRange, std::string(to_string(impl_->id)) + ": enthalpy " + num(h) +
                               " outside two-phase dome " + num(r.h_f) + ".." + num(r.h_g) +
                               " at " + num(P) + " kPa");
  double x = (h - r.h_f) / (r.h_g - r.h_f);
  if (std::abs(h - r.h_f) <= eps) x = 0.0;
  if (std::abs(h - r.h_g) <= eps) x = 1.0;
  const double s = r.s_f + x * (r.s_g - r.s_f);
  const double rho = 1.0 / ((1.0 - x) / r.rho_f + x / r.rho_g);
  return {Ts, P, h, s, rho, x, Phase::TwoPhase, impl_->convention};
}

ThermoState PropertySet::subcooled_state(double T, double P) const {
  const double Ts = impl_->tsat(P);
  if (T > Ts + kTolT)
    fail(Errc::OutOfRange, std::string(to_string(impl_->id)) + ": " + num(T) +
                               " C is above saturation " + num(Ts) + " C at " + num(P) + " kPa");
  auto r = impl_->sat_at(T);
  if (T >= Ts - kTolT) return {T, P, r.h_f, r.s_f, r.rho_f, 0.0, Phase::TwoPhase, impl_->convention};
  return {T, P, r.h_f, r.s_f, r.rho_f, std::numeric_limits<double>::quiet_NaN(),
          Phase::SubcooledLiquid, impl_->convention};
}

ThermoState PropertySet::dead_state(double T0, double P0) const {
  try {
    return superheated_state(P0, T0);
  } catch (const Error& e) {
    if (e.code() == Errc::SubSaturation) fail(Errc::OutOfRange, std::string("dead state: ") + e.what());
    throw;
  }
}

PropertySet PropertySet::shifted(double dh, double ds) const {
  auto sat = impl_->sat;
  for (auto& r : sat) {
    r.h_f += dh;
    r.h_g += dh;
    r.s_f += ds;
    r.s_g += ds;
  }
  auto sh = impl_->sh_records;
  for (auto& r : sh) {
    r.h += dh;
    r.s += ds;
  }
  return from_records(impl_->id, std::move(sat), std::move(sh), impl_->meta);
}

}  // namespace hpck
