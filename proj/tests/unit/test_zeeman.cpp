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

#include <algorithm>
#include <cmath>
#include <map>

#include "ionscatter/constants.hpp"
#include "ionscatter/zeeman.hpp"

namespace is = ionscatter;
namespace k = ionscatter::constants;
using is::HalfInt;

namespace {

TEST(Zeeman, ZeroFieldSplittingOfS) {
  for (const auto& name : is::builtin_species_names()) {
    const auto s = is::builtin_species(name);
    const auto& S = s.level("S1/2");
    const double I = s.nuclear_spin.twice() / 2.0;
    EXPECT_NEAR(is::qubit_frequency(s, s.qubit(is::Encoding::g), 0.0), std::abs(*S.hyperfine_A) * (I + 0.5),
                1e-6 * std::abs(*S.hyperfine_A))
        << name;
  }
}

TEST(Zeeman, BreitRabiForSOneHalf) {
  const auto s = is::builtin_species("Ca43");
  const auto& S = s.level("S1/2");
  const double A = *S.hyperfine_A, gJ = S.gJ(), gI = s.nuclear_g;
  const double I = s.nuclear_spin.twice() / 2.0;
  const double dE = A * (I + 0.5);
  for (double B : {1e-4, 5e-3, 0.1}) {
    const auto sp = is::zeeman_spectrum(S, s.nuclear_spin, B, gI);
    std::map<int, std::vector<double>> numeric, analytic;
    for (const auto& st : sp.states) numeric[st.mF.twice()].push_back(st.energy);
    const double x = (gJ - gI) * k::mu_B_over_h * B / dE;
    for (int tm = -s.nuclear_spin.twice() - 1; tm <= s.nuclear_spin.twice() + 1; tm += 2) {
      const double m = tm / 2.0;
      if (std::abs(m) == I + 0.5) {
        const double sg = m > 0 ? 1.0 : -1.0;
        analytic[tm].push_back(A * I / 2.0 + sg * (gJ / 2.0 + gI * I) * k::mu_B_over_h * B);
        continue;
      }
      const double base = -dE / (2.0 * (2.0 * I + 1.0)) + gI * k::mu_B_over_h * B * m;
      const double root = 0.5 * dE * std::sqrt(1.0 + 4.0 * m * x / (2.0 * I + 1.0) + x * x);
      analytic[tm].push_back(base + root);
      analytic[tm].push_back(base - root);
    }
    for (auto& [tm, v] : numeric) {
      auto& w = analytic[tm];
      std::sort(v.begin(), v.end());
      std::sort(w.begin(), w.end());
      ASSERT_EQ(v.size(), w.size());
      for (std::size_t n = 0; n < v.size(); ++n) EXPECT_NEAR(v[n], w[n], 1e-6 * std::abs(dE)) << "mF " << tm;
    }
  }
}

TEST(Zeeman, EigenvectorsOrthonormal) {
  const auto s = is::builtin_species("Ba137");
  const auto sp = is::zeeman_spectrum(s.level("D5/2"), s.nuclear_spin, 3e-4, s.nuclear_g);
  for (std::size_t a = 0; a < sp.states.size(); ++a) {
    for (std::size_t b = a; b < sp.states.size(); ++b) {
      double dot = 0.0;
      for (std::size_t n = 0; n < sp.states[a].amplitudes.size(); ++n) {
        dot += sp.states[a].amplitudes[n] * sp.states[b].amplitudes[n];
      }
      EXPECT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-12);
    }
  }
}

TEST(Zeeman, AdiabaticLabelsMatchZeroField) {
  const auto s = is::builtin_species("Sr87");
  const auto& D = s.level("D5/2");
  const auto sp = is::zeeman_spectrum(D, s.nuclear_spin, 1e-12, s.nuclear_g);
  for (const auto& st : sp.states) {
    EXPECT_NEAR(st.energy, is::hyperfine_energy(D, s.nuclear_spin, st.F), 1.0) << st.F.str();
  }
}

TEST(ClockPoint, SlopeVanishes) {
  for (const auto& name : {"Ca43", "Sr87", "Ba133", "Ba135", "Ba137"}) {
    const auto s = is::builtin_species(name);
    const auto& q = s.qubit(is::Encoding::m);
    const double B = is::clock_point(s, q);
    EXPECT_LT(std::abs(is::qubit_frequency_slope(s, q, B)), 1.0 / k::gauss) << name;
  }
}

TEST(ClockPoint, SlopeMatchesFiniteDifference) {
  const auto s = is::builtin_species("Ca43");
  const auto& q = s.qubit(is::Encoding::m);
  const double B = 5e-4, h = 1e-8;
  const double fd = (is::qubit_frequency(s, q, B + h) - is::qubit_frequency(s, q, B - h)) / (2 * h);
  EXPECT_NEAR(is::qubit_frequency_slope(s, q, B), fd, 1e-5 * std::abs(fd));
}

TEST(ClockPoint, ReferenceFields) {
  const auto ba = is::builtin_species("Ba133");
  EXPECT_NEAR(std::abs(is::clock_point(ba, ba.qubit(is::Encoding::m))) / k::gauss, 33.0, 0.05 * 33.0);
  const auto sr = is::builtin_species("Sr87");
  EXPECT_NEAR(std::abs(is::clock_point(sr, sr.qubit(is::Encoding::m))) / k::gauss, 6.49, 0.05 * 6.49);
  const auto ca = is::builtin_species("Ca43");
  EXPECT_NEAR(std::abs(is::clock_point(ca, ca.qubit(is::Encoding::m))) / k::gauss, 2.54, 0.05 * 2.54);
}

TEST(ClockPoint, GQubitAtZeroField) {
  const auto s = is::builtin_species("Yb171");
  EXPECT_EQ(is::clock_point(s, s.qubit(is::Encoding::g)), 0.0);
}

TEST(Curvature, CalciumGQubit) {
  const auto s = is::builtin_species("Ca43");
  const double c = is::curvature_at(s, s.qubit(is::Encoding::g), 0.0, 1e-6) * k::gauss * k::gauss / 1e3;
  EXPECT_NEAR(c, 1.21, 0.05 * 1.21);
}

TEST(Curvature, IsTheQuadraticCoefficient) {
  const auto s = is::builtin_species("Yb171");
  const auto& q = s.qubit(is::Encoding::g);
  const double c = is::curvature_at(s, q, 0.0, 1e-6);
  const double b = 2e-5;
  EXPECT_NEAR(is::qubit_frequency(s, q, b) - is::qubit_frequency(s, q, 0.0), c * b * b, 1e-3 * c * b * b);
}

TEST(DressedQubit, UsesClockPointForM) {
  const auto s = is::builtin_species("Ca43");
  const auto d = is::make_dressed_qubit(s, is::Encoding::m);
  EXPECT_NEAR(d.field, is::clock_point(s, s.qubit(is::Encoding::m)), 1e-12);
  EXPECT_EQ(d.level, "D5/2");
  EXPECT_EQ(d.state0.F, s.qubit(is::Encoding::m).state0.F);
}

}  // namespace
