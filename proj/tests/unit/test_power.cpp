// Copyright 2026 The ionscatter Authors.
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


#include <gtest/gtest.h>

#include <cmath>

#include "ionscatter/constants.hpp"
#include "ionscatter/errors.hpp"
#include "ionscatter/gates.hpp"
#include "ionscatter/power.hpp"

namespace is = ionscatter;
namespace k = ionscatter::constants;

namespace {

constexpr double kThz = k::two_pi * k::THz;

is::ScatteringEngine make(const std::string& name, is::Encoding enc, is::ModelVariant model) {
  const auto s = is::builtin_species(name);
  return is::ScatteringEngine(s, is::make_dressed_qubit(s, enc), model);
}

TEST(Power, OneQubitClosesTheLoop) {
  for (auto enc : {is::Encoding::g, is::Encoding::m}) {
    const auto e = make("Ca43", enc, is::ModelVariant::full(false));
    const auto beams = is::BeamConfig::raman_pair(enc, 1.0);
    const double D = -12 * kThz, tau = 5e-6, w = 25e-6;
    const auto p = is::power_1q(e, beams, D, tau, w);
    ASSERT_EQ(p.per_beam.size(), 2u);
    const auto r = is::error_1q(e, is::BeamConfig::raman_pair(enc, p.per_beam[0], w), D);
    EXPECT_NEAR(r.tau, tau, 1e-10 * tau);
    EXPECT_NEAR(p.error, r.p_raman, 1e-12 * r.p_raman);
  }
}

TEST(Power, TwoQubitClosesTheLoop) {
  const auto e = make("Sr87", is::Encoding::m, is::ModelVariant::full(false));
  const is::TrapConfig trap;
  const double D = -60 * kThz, tau = 10e-6, w = 20e-6;
  const auto p = is::power_2q(e, is::BeamConfig::raman_pair(is::Encoding::m, 1.0), D, tau, w, trap);
  ASSERT_EQ(p.per_beam.size(), 3u);
  EXPECT_NEAR(p.per_beam[2], 0.5 * p.total_power, 1e-15);
  // The co-propagating pair at P/4 each sets the gate Rabi frequency.
  const auto r = is::error_2q(e, is::BeamConfig::raman_pair(is::Encoding::m, p.per_beam[0], w), D, trap);
  EXPECT_NEAR(r.tau, tau, 1e-10 * tau);
}

TEST(Power, ScalesInverselyWithGateTime) {
  const auto e = make("Ca43", is::Encoding::g, is::ModelVariant::full(false));
  const auto beams = is::BeamConfig::raman_pair(is::Encoding::g, 1.0);
  const is::TrapConfig trap;
  const double a = is::power_2q(e, beams, -9 * kThz, 10e-6, 20e-6, trap).total_power;
  const double b = is::power_2q(e, beams, -9 * kThz, 5e-6, 20e-6, trap).total_power;
  EXPECT_NEAR(b / a, 2.0, 1e-12);
  const double c = is::power_2q(e, beams, -9 * kThz, 10e-6, 40e-6, trap).total_power;
  EXPECT_NEAR(c / a, 4.0, 1e-12);
  EXPECT_THROW(is::power_2q(e, beams, -9 * kThz, 0.0, 20e-6, trap), is::DomainError);
}

TEST(Power, SimplifiedClosedFormMatchesEngine) {
  for (const auto& name : {"Ca43", "Ba137"}) {
    const auto e = make(name, is::Encoding::m, is::ModelVariant::simplified());
    const auto beams = is::BeamConfig::raman_pair(is::Encoding::m, 1.0);
    const double rho = is::raman_fraction_rho(e, beams);
    const is::TrapConfig trap;
    const double eps = 1e-4, tau = 10e-6, w = 20e-6;
    const auto one = is::power_of_error_simplified(e, rho, eps, tau, w, trap, is::GateKind::one_qubit);
    EXPECT_NEAR(is::error_1q(e, beams, one.detuning).p_raman, eps, 1e-9 * eps) << name;
    EXPECT_NEAR(is::power_1q(e, beams, one.detuning, tau, w).total_power, one.total_power, 1e-9 * one.total_power);
    const auto two = is::power_of_error_simplified(e, rho, eps, tau, w, trap, is::GateKind::two_qubit);
    EXPECT_NEAR(is::error_2q(e, beams, two.detuning, trap).p_raman, eps, 1e-9 * eps) << name;
    EXPECT_NEAR(is::power_2q(e, beams, two.detuning, tau, w, trap).total_power, two.total_power,
                1e-9 * two.total_power);
  }
}

TEST(Power, SimplifiedClosedFormRejectsGQubits) {
  const auto e = make("Ca43", is::Encoding::g, is::ModelVariant::simplified());
  EXPECT_THROW(is::power_of_error_simplified(e, 0.5, 1e-4, 1e-5, 2e-5, is::TrapConfig{}, is::GateKind::one_qubit),
               is::DomainError);
}

TEST(Power, BackbendFlag) {
  std::vector<is::PowerCurvePoint> pts{{0, 3e-4, 1.0}, {0, 2e-4, 2.0}, {0, 2.5e-4, 3.0}, {0, 2.4e-4, 2.9}};
  const auto out = is::flag_backbend(pts);
  EXPECT_FALSE(out[0].backbend);
  EXPECT_FALSE(out[1].backbend);
  EXPECT_TRUE(out[2].backbend);
  EXPECT_FALSE(out[3].backbend);
}

TEST(Power, MQubitRedSideCurveBendsBack) {
  // Past the error minimum more power buys a larger error.
  const auto e = make("Ca43", is::Encoding::m, is::ModelVariant::full(false));
  const auto beams = is::BeamConfig::raman_pair(is::Encoding::m, 1.0);
  const is::TrapConfig trap;
  std::vector<is::PowerCurvePoint> pts;
  for (int i = 1; i < 100; ++i) {
    const double D = -e.omega_Pi() * i / 100.0;
    is::PowerCurvePoint p;
    p.delta = D;
    p.error = is::error_2q(e, beams, D, trap).p_raman;
    p.power = is::power_2q(e, beams, D, 10e-6, 20e-6, trap).total_power;
    pts.push_back(p);
  }
  const auto out = is::flag_backbend(pts);
  EXPECT_FALSE(out[1].backbend);
  EXPECT_TRUE(out.back().backbend);
}

}  // namespace
