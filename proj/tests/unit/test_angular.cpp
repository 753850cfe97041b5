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
#include <random>

#include "angular_checks.hpp"
#include "ionscatter/angular.hpp"
#include "ionscatter/species.hpp"

namespace is = ionscatter;
using is::HalfInt;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

TEST(HalfInt, ParsesAndPrints) {
  EXPECT_EQ(HalfInt::parse("3/2").twice(), 3);
  EXPECT_EQ(HalfInt::parse("-1/2").twice(), -1);
  EXPECT_EQ(HalfInt::parse("2").twice(), 4);
  EXPECT_EQ(HalfInt::parse("1.5").twice(), 3);
  EXPECT_EQ(h(5).str(), "5/2");
  EXPECT_EQ(h(-4).str(), "-2");
  EXPECT_THROW(HalfInt::parse("1/3"), std::invalid_argument);
  EXPECT_THROW(HalfInt::parse("0.3"), std::invalid_argument);
}

TEST(Wigner3j, KnownValues) {
  EXPECT_NEAR(is::wigner3j(h(2), h(2), h(0), h(0), h(0), h(0)), -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(is::wigner3j(h(1), h(1), h(2), h(1), h(-1), h(0)), 1.0 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(is::wigner3j(h(2), h(2), h(2), h(2), h(-2), h(0)), 1.0 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(is::wigner3j(h(2), h(2), h(2), h(0), h(0), h(0)), 0.0, 1e-15);
}

TEST(Wigner3j, SelectionRulesGiveZero) {
  EXPECT_EQ(is::wigner3j(h(2), h(2), h(6), h(0), h(0), h(0)), 0.0);
  EXPECT_EQ(is::wigner3j(h(2), h(2), h(2), h(2), h(0), h(0)), 0.0);
}

TEST(Wigner3j, LargeArgumentsStayExact) {
  // (j j 0; m -m 0) = (-1)^(j-m) / sqrt(2j+1)
  for (int tj = 0; tj <= 40; tj += 5) {
    for (int tm = -tj; tm <= tj; tm += 2) {
      const double want = (((tj - tm) / 2) % 2 ? -1.0 : 1.0) / std::sqrt(tj + 1.0);
      EXPECT_NEAR(is::wigner3j(h(tj), h(tj), h(0), h(tm), h(-tm), h(0)), want, 1e-14);
    }
  }
}

TEST(Wigner6j, KnownValues) {
  EXPECT_NEAR(is::wigner6j(h(2), h(2), h(2), h(2), h(2), h(2)), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(is::wigner6j(h(1), h(1), h(2), h(1), h(1), h(0)), 0.5, 1e-15);
  // {a b c; b a 0} = (-1)^(a+b+c) / sqrt((2a+1)(2b+1))
  EXPECT_NEAR(is::wigner6j(h(3), h(2), h(3), h(2), h(3), h(0)), 1.0 / std::sqrt(12.0), 1e-15);
  EXPECT_EQ(is::wigner6j(h(2), h(2), h(8), h(2), h(2), h(2)), 0.0);
}

TEST(ClebschGordan, KnownValues) {
  EXPECT_NEAR(is::clebsch_gordan(h(1), h(1), h(1), h(-1), h(0), h(0)), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(is::clebsch_gordan(h(1), h(-1), h(1), h(1), h(0), h(0)), -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(is::clebsch_gordan(h(2), h(2), h(2), h(0), h(2), h(2)), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(is::clebsch_gordan(h(1), h(1), h(1), h(1), h(0), h(0)), 0.0);
}

TEST(Phase, FromTwice) {
  EXPECT_EQ(is::phase_from_twice(0), 1);
  EXPECT_EQ(is::phase_from_twice(2), -1);
  EXPECT_EQ(is::phase_from_twice(-2), -1);
  EXPECT_EQ(is::phase_from_twice(4), 1);
  EXPECT_THROW(is::phase_from_twice(1), std::invalid_argument);
}

TEST(AngularProperties, ThreeJOrthogonality) { EXPECT_LT(is::testing::three_j_orthogonality(6), 1e-10); }

TEST(AngularProperties, ThreeJSymmetries) {
  std::mt19937_64 rng(11);
  EXPECT_LT(is::testing::three_j_symmetries(rng, 1000, 8), 1e-10);
}

TEST(AngularProperties, SixJOrthogonality) { EXPECT_LT(is::testing::six_j_orthogonality(4), 1e-10); }

TEST(AngularProperties, SixJSymmetries) {
  std::mt19937_64 rng(12);
  EXPECT_LT(is::testing::six_j_symmetries(rng, 1000, 8), 1e-10);
}

TEST(AngularProperties, ClebschGordanUnitarity) { EXPECT_LT(is::testing::clebsch_gordan_unitarity(6), 1e-10); }

class DipoleProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(DipoleProperties, SumRule) {
  EXPECT_LT(is::testing::dipole_sum_rule(is::builtin_species(GetParam())), 1e-10);
}

TEST_P(DipoleProperties, Hermiticity) {
  EXPECT_LT(is::testing::dipole_hermiticity(is::builtin_species(GetParam())), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Builtins, DipoleProperties, ::testing::ValuesIn(is::builtin_species_names()));

}  // namespace
