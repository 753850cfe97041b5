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
#include "ionscatter/couplings.hpp"
#include "ionscatter/errors.hpp"

namespace is = ionscatter;
namespace k = ionscatter::constants;

namespace {

TEST(Mu, SelectionRule) {
  const auto s = is::builtin_species("Ca43");
  EXPECT_THROW(is::mu(s.level("P3/2"), s.level("P1/2"), 1.0), is::DomainError);
  EXPECT_GT(is::mu(s.level("P3/2"), s.level("S1/2"), 1.0), 0.0);
}

TEST(Mu, SPLinesShareTheRadialStrength) {
  // With an S lower level both fine-structure components give mu = R / sqrt(3).
  const auto& S = is::builtin_species("Ca43").level("S1/2");
  const auto& P1 = is::builtin_species("Ca43").level("P1/2");
  const auto& P3 = is::builtin_species("Ca43").level("P3/2");
  EXPECT_NEAR(is::mu(P1, S, 2.0), 2.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(is::mu(P3, S, 2.0), 2.0 / std::sqrt(3.0), 1e-14);
}

TEST(DecayRate, ZeroDipoleAndCubicScaling) {
  EXPECT_EQ(is::decay_rate(0.0, 1e15), 0.0);
  const double a = is::decay_rate(2.0, 1e15), b = is::decay_rate(2.0, 2e15);
  EXPECT_NEAR(b / a, 8.0, 1e-12);
  EXPECT_NEAR(is::decay_rate(4.0, 1e15) / a, 4.0, 1e-12);
  EXPECT_THROW(is::decay_rate(1.0, -1.0), is::DomainError);
  EXPECT_EQ(is::decay_rate_per_mu2(0.0), 0.0);
}

TEST(DecayRate, CalciumLinewidth) {
  const auto s = is::builtin_species("Ca43");
  const double g = is::decay_rate(is::mu(s, "P3/2", "S1/2"), s.level("P3/2").energy - s.level("S1/2").energy);
  // S1/2 branch carries about 93.5% of the 23.2 MHz width.
  EXPECT_NEAR(g / k::two_pi / 1e6, 23.2 * 0.935, 0.5);
}

TEST(FieldCoupling, PowerRoundTripAndScaling) {
  const double E = is::field_from_power(1.0, 20e-6);
  EXPECT_NEAR(is::power_from_field(E, 20e-6), 1.0, 1e-14);
  EXPECT_NEAR(is::field_from_power(4.0, 20e-6) / E, 2.0, 1e-14);
  const auto c = is::coupling_g(E, 2.0);
  EXPECT_NEAR(c.g, k::e * E * 2.0 * k::a0 / (2.0 * k::hbar), 1e-6 * c.g);
  EXPECT_EQ(is::coupling_g(0.0, 2.0).g, 0.0);
}

TEST(Polarization, Constructors) {
  EXPECT_TRUE(is::Polarization::pi().is_normalized());
  const auto lin = is::Polarization::from_cartesian(1.0, 0.0, 0.0);
  EXPECT_TRUE(lin.is_normalized());
  EXPECT_NEAR(std::abs(lin.c_plus), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(std::abs(lin.c_minus), std::sqrt(0.5), 1e-15);
  EXPECT_THROW(is::Polarization::from_components(0.0, 0.0, 0.0), is::DomainError);
}

TEST(Polarization, ConjugateOfSigmaPlusIsSigmaMinusUpToSign) {
  const auto c = is::Polarization::sigma_plus().conjugate();
  EXPECT_NEAR(std::abs(c.c_minus), 1.0, 1e-15);
  EXPECT_EQ(std::abs(c.c_plus), 0.0);
  const auto lin = is::Polarization::from_cartesian(1.0, 0.0, 0.0);
  const auto lc = lin.conjugate();
  EXPECT_NEAR(std::abs(lc.c_minus - lin.c_minus), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(lc.c_plus - lin.c_plus), 0.0, 1e-15);
}

TEST(DipoleFactor, SelectionRules) {
  const auto s = is::builtin_species("Ca43");
  using is::HalfInt;
  const is::HyperfineState i{"S1/2", HalfInt::integer(4), HalfInt::integer(0)};
  const is::HyperfineState f{"P3/2", HalfInt::integer(3), HalfInt::integer(1)};
  EXPECT_EQ(is::dipole_factor(s, f, 0, i), 0.0);
  EXPECT_NE(is::dipole_factor(s, f, 1, i), 0.0);
  const is::HyperfineState far{"P3/2", HalfInt::integer(2), HalfInt::integer(1)};
  EXPECT_EQ(is::dipole_factor(s, far, 1, i), 0.0);  // |dF| = 2
}

TEST(DipoleElement, HyperfineAgreesWithProductBasis) {
  // <F mF| r_q |F' mF'> summed back to the fine-structure element.
  const auto s = is::builtin_species("Sr87");
  using is::HalfInt;
  double total_hf = 0.0, total_fs = 0.0;
  for (const auto& f : is::hyperfine_sublevels(s, "P3/2")) {
    for (const auto& i : is::hyperfine_sublevels(s, "D5/2")) {
      for (int q = -1; q <= 1; ++q) total_hf += std::pow(is::dipole_element(s, f, q, i), 2);
    }
  }
  for (int ma = -3; ma <= 3; ma += 2) {
    for (int mb = -5; mb <= 5; mb += 2) {
      for (int q = -1; q <= 1; ++q) {
        total_fs += std::pow(
            is::dipole_element_J(s, "P3/2", HalfInt::from_twice(ma), q, "D5/2", HalfInt::from_twice(mb)), 2);
      }
    }
  }
  const double nuclear = s.nuclear_spin.twice() + 1.0;
  EXPECT_NEAR(total_hf, total_fs * nuclear, 1e-10 * total_hf);
}

}  // namespace
