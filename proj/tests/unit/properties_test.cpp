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

#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

#include "test_support.hpp"

using namespace hpck;
using hpck::test::data_dir;

namespace {

const PropertySet& props(RefrigerantId id) {
  static std::map<RefrigerantId, PropertySet> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, PropertySet::load(id, data_dir())).first;
  return it->second;
}

const PropertySet& r134a() { return props(RefrigerantId::R134a); }

// Reference values computed independently with CoolProp 8.0.0 (HEOS backend)
// under the same h/s convention. Blends use the mid-glide temperature.
constexpr double kPsat0 = 292.8031823;     // R134a, kPa at 0 C
constexpr double kHg0 = 398.6034651;       // R134a, saturated vapor at 0 C
constexpr double kPsat3 = 325.9849315;
constexpr double kPsat54 = 1455.493461;
constexpr double kH3 = 407.5818406;        // P_sat(3 C), 11 C
constexpr double kS3 = 1.751314179;
constexpr double kRho3 = 15.36788528;
constexpr double kH4s = 440.1000798;       // P_sat(54 C), s = kS3
constexpr double kT4s = 66.4646;
constexpr double kHf52 = 274.7404220;
constexpr double kX6 = 0.3601488;          // P_sat(3 C), h = kHf52
constexpr double kS6 = 1.270637888;
constexpr double kDeadH = 420.2879231;     // 20 C, 101.325 kPa
constexpr double kDeadS = 1.886268648;

const std::map<RefrigerantId, double> kOracleNbp = {
    {RefrigerantId::R134a, -26.0738},   {RefrigerantId::R152a, -24.0221},
    {RefrigerantId::R450A, -23.3383},   {RefrigerantId::R513A, -29.3931},
    {RefrigerantId::R1234yf, -29.4580}, {RefrigerantId::R1234ze_E, -18.9725},
};

std::string sat_name(RefrigerantId id) { return std::string(to_string(id)) + ".sat.csv"; }

}  // namespace

TEST(PropertyLoad, AllRefrigerantsLoadWithRequiredCoverage) {
  for (auto id : kAllRefrigerants) {
    const auto& ps = props(id);
    EXPECT_EQ(ps.refrigerant(), id);
    EXPECT_LE(ps.t_min(), -45.0);
    EXPECT_GE(ps.t_max(), refrigerant_metadata(id).critical_temperature - 5.0);
    EXPECT_LE(ps.superheat_p_min(), 101.325);
    EXPECT_LE(ps.superheat_p_max(), 0.9 * refrigerant_metadata(id).critical_pressure * 1000.0);
    const auto& sat = ps.saturation();
    for (std::size_t i = 1; i < sat.size(); ++i) EXPECT_LE(sat[i].T - sat[i - 1].T, 1.0 + 1e-12);
  }
  EXPECT_GE(r134a().saturation().size(), 150u);
  EXPECT_LE(r134a().t_min(), -45.0);
  EXPECT_GE(r134a().t_max(), 95.0);
}

TEST(PropertyLoad, MissingFilesReportMissingData) {
  test::TempDir dir;
  EXPECT_HPCK_ERROR(PropertySet::load(RefrigerantId::R134a, dir.path()), Errc::MissingData);
}

TEST(PropertyLoad, DecreasingPressureIsAnInvariantViolation) {
  test::TempDir dir;
  dir.copy_data();
  auto path = dir.path() / sat_name(RefrigerantId::R134a);
  auto text = test::read_file(path);
  // Row for 10 C gets a pressure below the 9 C row.
  auto pos = text.find("\n10,");
  ASSERT_NE(pos, std::string::npos);
  auto start = text.find(',', pos + 1) + 1;
  auto end = text.find(',', start);
  text.replace(start, end - start, "1.0");
  test::write_file(path, text);
  EXPECT_HPCK_ERROR(PropertySet::load(RefrigerantId::R134a, dir.path()), Errc::InvariantViolation);
}

TEST(PropertyLoad, BadHeaderAndBadNumbersAreMalformed) {
  {
    test::TempDir dir;
    dir.copy_data();
    auto path = dir.path() / sat_name(RefrigerantId::R134a);
    auto text = test::read_file(path);
    text.replace(0, 3, "Tx_");
    test::write_file(path, text);
    EXPECT_HPCK_ERROR(PropertySet::load(RefrigerantId::R134a, dir.path()), Errc::MalformedData);
  }
  {
    test::TempDir dir;
    dir.copy_data();
    auto path = dir.path() / sat_name(RefrigerantId::R134a);
    auto text = test::read_file(path);
    auto pos = text.find("\n10,");
    text.replace(pos + 4, 3, "abc");
    test::write_file(path, text);
    EXPECT_HPCK_ERROR(PropertySet::load(RefrigerantId::R134a, dir.path()), Errc::MalformedData);
  }
}

TEST(PropertyLoad, ShortCoverageIsAnInvariantViolation) {
  test::TempDir dir;
  dir.copy_data();
  auto path = dir.path() / sat_name(RefrigerantId::R134a);
  auto text = test::read_file(path);
  // Drop everything above 80 C.
  auto pos = text.find("\n81,");
  ASSERT_NE(pos, std::string::npos);
  text.erase(pos + 1);
  test::write_file(path, text);
  EXPECT_HPCK_ERROR(PropertySet::load(RefrigerantId::R134a, dir.path()), Errc::InvariantViolation);
}

TEST(Saturation, MatchesOracle) {
  EXPECT_NEAR(r134a().saturation_pressure(0.0), kPsat0, 1e-5);
  EXPECT_NEAR(r134a().saturation_pressure(3.0), kPsat3, 1e-5);
  EXPECT_NEAR(r134a().saturation_pressure(54.0), kPsat54, 1e-5);
  auto v = r134a().saturated_state(0.0, SatPhase::Vapor);
  EXPECT_NEAR(v.h, kHg0, 1e-5);
  EXPECT_DOUBLE_EQ(v.quality, 1.0);
  auto l = r134a().saturated_state(0.0, SatPhase::Liquid);
  EXPECT_NEAR(l.h, 200.0, 1e-6);
  EXPECT_NEAR(l.s, 1.0, 1e-8);
  EXPECT_DOUBLE_EQ(l.quality, 0.0);
  EXPECT_NEAR(l.P, kPsat0, 1e-5);
}

TEST(Saturation, OutOfRangeNeverExtrapolates) {
  EXPECT_HPCK_ERROR(r134a().saturation_pressure(200.0), Errc::OutOfRange);
  EXPECT_HPCK_ERROR(r134a().saturation_pressure(-120.0), Errc::OutOfRange);
  EXPECT_HPCK_ERROR(r134a().saturation_temperature(1e6), Errc::OutOfRange);
  EXPECT_HPCK_ERROR(r134a().saturated_state(200.0, SatPhase::Vapor), Errc::OutOfRange);
}

TEST(Saturation, RoundTripWithinTolerance) {
  EXPECT_NEAR(r134a().saturation_temperature(r134a().saturation_pressure(3.0)), 3.0, 0.05);
  for (auto id : kAllRefrigerants) {
    const auto& ps = props(id);
    double worst = 0;
    for (const auto& r : ps.saturation())
      worst = std::max(worst, std::abs(ps.saturation_temperature(ps.saturation_pressure(r.T)) - r.T));
    // Off-node points as well.
    for (double T = ps.t_min() + 0.37; T < ps.t_max(); T += 0.71)
      worst = std::max(worst, std::abs(ps.saturation_temperature(ps.saturation_pressure(T)) - T));
    EXPECT_LE(worst, 0.05) << to_string(id);
  }
}

TEST(Saturation, NodesReturnStoredValues) {
  for (auto id : kAllRefrigerants) {
    const auto& ps = props(id);
    for (const auto& r : ps.saturation()) {
      ASSERT_EQ(ps.saturation_pressure(r.T), r.P);
      auto l = ps.saturated_state(r.T, SatPhase::Liquid);
      auto v = ps.saturated_state(r.T, SatPhase::Vapor);
      ASSERT_EQ(l.h, r.h_f);
      ASSERT_EQ(v.h, r.h_g);
      ASSERT_EQ(l.s, r.s_f);
      ASSERT_EQ(v.s, r.s_g);
      ASSERT_EQ(l.rho, r.rho_f);
      ASSERT_EQ(v.rho, r.rho_g);
      ASSERT_EQ(ps.saturation_temperature(r.P), r.T);
    }
  }
}

TEST(Saturation, PressureStrictlyIncreasing) {
  for (auto id : kAllRefrigerants) {
    const auto& ps = props(id);
    double prev = -1;
    for (double T = ps.t_min(); T <= ps.t_max(); T += 0.13) {
      double P = ps.saturation_pressure(T);
      ASSERT_GT(P, prev) << to_string(id) << " at " << T;
      prev = P;
    }
  }
}

TEST(Saturation, LatentHeatShrinksTowardCriticalPoint) {
  for (auto id : kAllRefrigerants) {
    const auto& sat = props(id).saturation();
    for (std::size_t i = 1; i < sat.size(); ++i)
      ASSERT_LT(sat[i].h_g - sat[i].h_f, sat[i - 1].h_g - sat[i - 1].h_f) << to_string(id);
  }
}

TEST(Saturation, NormalBoilingPointsMatchOracle) {
  for (auto [id, nbp] : kOracleNbp)
    EXPECT_NEAR(props(id).saturation_temperature(101.325), nbp, 0.02) << to_string(id);
}

TEST(Superheat, DesignSuctionStateMatchesOracle) {
  double P = r134a().saturation_pressure(3.0);
  auto st = r134a().superheated_state(P, 11.0);
  EXPECT_EQ(st.phase, Phase::SuperheatedVapor);
  EXPECT_TRUE(std::isnan(st.quality));
  EXPECT_NEAR(st.h, kH3, 0.02);
  EXPECT_NEAR(st.h - r134a().saturated_state(3.0, SatPhase::Vapor).h, kH3 - 400.3439127, 0.02);
  EXPECT_NEAR(st.s, kS3, 1e-4);
  EXPECT_NEAR(st.rho, kRho3, 0.02);
}

TEST(Superheat, BoundaryEqualsSaturatedVapor) {
  for (double T : {-30.0, 3.0, 3.5, 40.0}) {
    double P = r134a().saturation_pressure(T);
    auto st = r134a().superheated_state(P, r134a().saturation_temperature(P));
    auto v = r134a().saturated_state(T, SatPhase::Vapor);
    EXPECT_NEAR(st.h, v.h, 1e-9);
    EXPECT_NEAR(st.s, v.s, 1e-9);
    EXPECT_NEAR(st.rho, v.rho, 1e-9);
  }
}

TEST(Superheat, BelowSaturationIsRejected) {
  double P = r134a().saturation_pressure(3.0);
  EXPECT_HPCK_ERROR(r134a().superheated_state(P, -2.0), Errc::SubSaturation);
  EXPECT_HPCK_ERROR(r134a().superheated_state(P, 3.0 + 81.0), Errc::OutOfRange);
  EXPECT_HPCK_ERROR(r134a().superheated_state(1e6, 50.0), Errc::OutOfRange);
  EXPECT_HPCK_ERROR(r134a().superheated_state(1.0, 50.0), Errc::OutOfRange);
}

TEST(Superheat, StoredNodesReturnedExactly) {
  for (auto id : kAllRefrigerants) {
    auto path = data_dir() / (std::string(to_string(id)) + ".sh.csv");
    std::istringstream in(test::read_file(path));
    std::string line;
    std::getline(in, line);
    int n = 0;
    const auto& ps = props(id);
    while (std::getline(in, line) && n < 4000) {
      double P, T, h, s, rho;
      ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &P, &T, &h, &s, &rho), 5);
      if (++n % 7) continue;
      auto st = ps.superheated_state(P, T);
      ASSERT_EQ(st.h, h) << line;
      ASSERT_EQ(st.s, s) << line;
      ASSERT_EQ(st.rho, rho) << line;
    }
  }
}

TEST(Superheat, MonotoneAtFixedPressure) {
  for (auto id : kAllRefrigerants) {
    const auto& ps = props(id);
    for (double Tsat : {-40.0, -10.3, 3.0, 25.7, 54.0}) {
      double P = ps.saturation_pressure(Tsat);
      double Ts = ps.saturation_temperature(P);
      auto prev = ps.superheated_state(P, Ts);
      for (double off = 0.29; off <= ps.max_superheat(); off += 0.29) {
        auto st = ps.superheated_state(P, Ts + off);
        ASSERT_GT(st.h, prev.h) << to_string(id) << " P=" << P << " off=" << off;
        ASSERT_GT(st.s, prev.s) << to_string(id) << " P=" << P << " off=" << off;
        ASSERT_LT(st.rho, prev.rho) << to_string(id) << " P=" << P << " off=" << off;
        prev = st;
      }
    }
  }
}

TEST(InverseLookup, IsentropicDischargeMatchesOracle) {
  double P = r134a().saturation_pressure(54.0);
  auto st = r134a().state_at_entropy(P, kS3);
  EXPECT_NEAR(st.s, kS3, 1e-6);
  EXPECT_NEAR(st.h, kH4s, 0.05);
  EXPECT_NEAR(st.T, kT4s, 0.1);
  EXPECT_NEAR(st.T - 54.0, 12.46, 0.1);
}

TEST(InverseLookup, EnthalpyInverseRoundTrips) {
  double P = r134a().saturation_pressure(20.0);
  auto a = r134a().superheated_state(P, 47.3);
  auto b = r134a().state_at_enthalpy(P, a.h);
  EXPECT_NEAR(b.T, 47.3, 1e-6);
  EXPECT_NEAR(b.s, a.s, 1e-8);
}

TEST(InverseLookup, SaturatedVaporEntropyGivesBoundary) {
  double P = r134a().saturation_pressure(54.0);
  auto v = r134a().saturated_state(54.0, SatPhase::Vapor);
  auto st = r134a().state_at_entropy(P, v.s);
  EXPECT_NEAR(st.T, 54.0, 1e-6);
  EXPECT_NEAR(st.h, v.h, 1e-6);
}

TEST(InverseLookup, WetCompressionAndGridLimits) {
  double P = r134a().saturation_pressure(54.0);
  EXPECT_HPCK_ERROR(r134a().state_at_entropy(P, 1.2), Errc::WetCompression);
  EXPECT_HPCK_ERROR(r134a().state_at_entropy(P, 5.0), Errc::OutOfRange);
  EXPECT_HPCK_ERROR(r134a().state_at_enthalpy(P, 300.0), Errc::WetCompression);
}

TEST(TwoPhase, ExpansionValveOutletMatchesOracle) {
  double P = r134a().saturation_pressure(3.0);
  double hf52 = r134a().saturated_state(52.0, SatPhase::Liquid).h;
  EXPECT_NEAR(hf52, kHf52, 1e-5);
  auto st = r134a().two_phase_state(P, hf52);
  EXPECT_EQ(st.phase, Phase::TwoPhase);
  EXPECT_NEAR(st.quality, kX6, 1e-5);
  EXPECT_NEAR(st.s, kS6, 1e-5);
  EXPECT_NEAR(st.T, 3.0, 1e-9);
}

TEST(TwoPhase, QualityBoundsOnTheDome) {
  for (auto id : kAllRefrigerants) {
    const auto& ps = props(id);
    for (double T = -40.0; T < ps.t_max() - 1.0; T += 6.1) {
      double P = ps.saturation_pressure(T);
      auto l = ps.saturated_state(T, SatPhase::Liquid);
      auto v = ps.saturated_state(T, SatPhase::Vapor);
      EXPECT_EQ(ps.two_phase_state(P, l.h).quality, 0.0);
      EXPECT_EQ(ps.two_phase_state(P, v.h).quality, 1.0);
      EXPECT_NEAR(ps.two_phase_state(P, l.h).s, l.s, 1e-9);
      EXPECT_NEAR(ps.two_phase_state(P, 0.5 * (l.h + v.h)).quality, 0.5, 1e-12);
      for (double f = 0.05; f < 1.0; f += 0.1) {
        auto st = ps.two_phase_state(P, l.h + f * (v.h - l.h));
        EXPECT_GE(st.quality, 0.0);
        EXPECT_LE(st.quality, 1.0);
        EXPECT_LE(std::abs(st.T - T), 0.1);
      }
      EXPECT_HPCK_ERROR(ps.two_phase_state(P, v.h + 1.0), Errc::OutOfRange);
      EXPECT_HPCK_ERROR(ps.two_phase_state(P, l.h - 1.0), Errc::OutOfRange);
    }
  }
}

TEST(Subcooled, LiquidBelowSaturation) {
  double P = r134a().saturation_pressure(54.0);
  auto st = r134a().subcooled_state(52.0, P);
  EXPECT_EQ(st.phase, Phase::SubcooledLiquid);
  EXPECT_NEAR(st.h, kHf52, 1e-5);
  auto edge = r134a().subcooled_state(54.0, P);
  EXPECT_EQ(edge.phase, Phase::TwoPhase);
  EXPECT_EQ(edge.quality, 0.0);
  EXPECT_HPCK_ERROR(r134a().subcooled_state(60.0, P), Errc::OutOfRange);
}

TEST(DeadState, SuperheatedAtDefaultsForAllRefrigerants) {
  auto st = r134a().dead_state(20.0, 101.325);
  EXPECT_EQ(st.phase, Phase::SuperheatedVapor);
  EXPECT_NEAR(st.h, kDeadH, 0.02);
  EXPECT_NEAR(st.s, kDeadS, 1e-4);
  for (auto id : kAllRefrigerants)
    EXPECT_EQ(props(id).dead_state(20.0, 101.325).phase, Phase::SuperheatedVapor) << to_string(id);
}

TEST(DeadState, AtSaturationIsSaturatedVapor) {
  double T0 = r134a().saturation_temperature(101.325);
  auto st = r134a().dead_state(T0, 101.325);
  auto v = r134a().saturated_state(T0, SatPhase::Vapor);
  EXPECT_NEAR(st.h, v.h, 1e-9);
  EXPECT_HPCK_ERROR(r134a().dead_state(-40.0, 101.325), Errc::OutOfRange);
}

TEST(Convention, ShiftChangesIdentityAndValues) {
  auto s = r134a().shifted(12.5, -0.3);
  EXPECT_NE(s.convention(), r134a().convention());
  auto a = r134a().saturated_state(10.0, SatPhase::Vapor);
  auto b = s.saturated_state(10.0, SatPhase::Vapor);
  EXPECT_NEAR(b.h - a.h, 12.5, 1e-9);
  EXPECT_NEAR(b.s - a.s, -0.3, 1e-9);
  EXPECT_EQ(b.P, a.P);
  EXPECT_EQ(a.convention, r134a().convention());
  EXPECT_EQ(b.convention, s.convention());
  // Loading the same tables twice gives the same identity.
  EXPECT_EQ(PropertySet::load(RefrigerantId::R134a, data_dir()).convention(), r134a().convention());
}
