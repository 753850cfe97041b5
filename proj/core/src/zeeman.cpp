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

#include "ionscatter/zeeman.hpp"

#include <Eigen/Dense>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "ionscatter/constants.hpp"
#include "ionscatter/couplings.hpp"
#include "ionscatter/errors.hpp"

namespace ionscatter {

namespace k = constants;

namespace {

struct Block {
  int twice_mF;
  std::vector<int> index;  // product-basis indices in this block
  std::vector<HalfInt> mJ, mI;
};

std::vector<Block> blocks(HalfInt J, HalfInt I) {
  std::vector<Block> out;
  const int jt = J.twice(), it = I.twice();
  for (int mf = -(jt + it); mf <= jt + it; mf += 2) {
    Block b{mf, {}, {}, {}};
    for (int mj = -jt; mj <= jt; mj += 2) {
      const int mi = mf - mj;
      if (std::abs(mi) > it) continue;
      b.index.push_back(product_index(J, I, HalfInt::from_twice(mj), HalfInt::from_twice(mi)));
      b.mJ.push_back(HalfInt::from_twice(mj));
      b.mI.push_back(HalfInt::from_twice(mi));
    }
    out.push_back(std::move(b));
  }
  return out;
}

double ladder(double j, double m, int dir) { return std::sqrt(j * (j + 1) - m * (m + dir)); }

struct Constants {
  double A = 0.0, B = 0.0;
};

Constants hyperfine_constants(const LevelSpec& level, HalfInt I) {
  Constants c;
  if (I.twice() == 0) return c;
  if (!level.hyperfine_A) throw DataError("level " + level.label + " has no hyperfine A constant");
  c.A = *level.hyperfine_A;
  if (I.twice() >= 2 && level.J.twice() >= 2) {
    if (!level.hyperfine_B) throw DataError("level " + level.label + " has no hyperfine B constant");
    c.B = *level.hyperfine_B;
  }
  return c;
}

Eigen::MatrixXd block_hamiltonian(const Block& b, const LevelSpec& level, HalfInt I, const Constants& hc, double field,
                                  double gI) {
  const int n = static_cast<int>(b.index.size());
  const double j = level.J.value(), i = I.value();
  Eigen::MatrixXd IJ = Eigen::MatrixXd::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    const double mj = b.mJ[r].value(), mi = b.mI[r].value();
    IJ(r, r) = mj * mi;
    // J+ I- couples (mj, mi) -> (mj+1, mi-1), the next state in mJ-ascending order.
    if (r + 1 < n) {
      const double v = 0.5 * ladder(j, mj, +1) * ladder(i, mi, -1);
      IJ(r + 1, r) = v;
      IJ(r, r + 1) = v;
    }
  }
  Eigen::MatrixXd H = hc.A * IJ;
  if (hc.B != 0.0) {
    Eigen::MatrixXd one = Eigen::MatrixXd::Identity(n, n);
    H += hc.B * (3.0 * IJ * IJ + 1.5 * IJ - i * (i + 1) * j * (j + 1) * one) /
         (2.0 * i * (2 * i - 1) * j * (2 * j - 1));
  }
  const double gJ = level.gJ();
  for (int r = 0; r < n; ++r) {
    H(r, r) += k::mu_B_over_h * field * (gJ * b.mJ[r].value() + gI * b.mI[r].value());
  }
  return H;
}

double slope_of_state(const DressedState& s, const LevelSpec& level, HalfInt I, double gI) {
  const double gJ = level.gJ();
  double out = 0.0;
  const int ni = I.twice() + 1;
  for (size_t idx = 0; idx < s.amplitudes.size(); ++idx) {
    const double a = s.amplitudes[idx];
    if (a == 0.0) continue;
    const double mj = -level.J.value() + static_cast<double>(idx / ni);
    const double mi = -I.value() + static_cast<double>(idx % ni);
    out += a * a * (gJ * mj + gI * mi);
  }
  return k::mu_B_over_h * out;
}

}  // namespace

int product_index(HalfInt J, HalfInt I, HalfInt mJ, HalfInt mI) {
  const int jn = (mJ.twice() + J.twice()) / 2;
  const int in = (mI.twice() + I.twice()) / 2;
  return jn * (I.twice() + 1) + in;
}

double hyperfine_energy(const LevelSpec& level, HalfInt I, HalfInt F) {
  const Constants hc = hyperfine_constants(level, I);
  const double j = level.J.value(), i = I.value(), f = F.value();
  const double K = f * (f + 1) - i * (i + 1) - j * (j + 1);
  double e = 0.5 * hc.A * K;
  if (hc.B != 0.0) {
    e += hc.B * (0.75 * K * (K + 1) - i * (i + 1) * j * (j + 1)) / (2.0 * i * (2 * i - 1) * j * (2 * j - 1));
  }
  return e;
}

const DressedState& ZeemanSpectrum::find(HalfInt F, HalfInt mF) const {
  for (const auto& s : states) {
    if (s.F == F && s.mF == mF) return s;
  }
  throw DataError("no dressed state |F=" + F.str() + ", mF=" + mF.str() + ">");
}

ZeemanSpectrum zeeman_spectrum(const LevelSpec& level, HalfInt I, double field, double gI) {
  const Constants hc = hyperfine_constants(level, I);
  ZeemanSpectrum out;
  out.B = field;
  out.J = level.J;
  out.I = I;
  const int dim = (level.J.twice() + 1) * (I.twice() + 1);
  for (const Block& b : blocks(level.J, I)) {
    const int n = static_cast<int>(b.index.size());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block_hamiltonian(b, level, I, hc, field, gI));
    // Allowed F values in this block, ordered by zero-field energy; the eigenvalue
    // order within a block is preserved along B since same-mF levels do not cross.
    std::vector<HalfInt> Fs;
    const int jt = level.J.twice(), it = I.twice();
    for (int ft = std::abs(jt - it); ft <= jt + it; ft += 2) {
      if (std::abs(b.twice_mF) <= ft) Fs.push_back(HalfInt::from_twice(ft));
    }
    std::stable_sort(Fs.begin(), Fs.end(), [&](HalfInt a, HalfInt c) {
      return hyperfine_energy(level, I, a) < hyperfine_energy(level, I, c);
    });
    const HalfInt mF = HalfInt::from_twice(b.twice_mF);
    for (int col = 0; col < n; ++col) {
      DressedState s;
      s.energy = solver.eigenvalues()(col);
      s.F = Fs[col];
      s.mF = mF;
      s.amplitudes.assign(dim, 0.0);
      double overlap = 0.0;
      int largest = 0;
      for (int r = 0; r < n; ++r) {
        const double a = solver.eigenvectors()(r, col);
        s.amplitudes[b.index[r]] = a;
        overlap += a * clebsch_gordan(level.J, b.mJ[r], I, b.mI[r], s.F, mF);
        if (std::abs(a) > std::abs(solver.eigenvectors()(largest, col))) largest = r;
      }
      const bool flip = std::abs(overlap) > 1e-9 ? overlap < 0 : solver.eigenvectors()(largest, col) < 0;
      if (flip) {
        for (double& a : s.amplitudes) a = -a;
      }
      out.states.push_back(std::move(s));
    }
  }
  return out;
}

double qubit_frequency(const SpeciesData& s, const QubitSpec& q, double B) {
  const LevelSpec& level = s.level(q.state0.level);
  ZeemanSpectrum sp = zeeman_spectrum(level, s.nuclear_spin, B, s.nuclear_g);
  return std::abs(sp.find(q.state0.F, q.state0.mF).energy - sp.find(q.state1.F, q.state1.mF).energy);
}

double qubit_frequency_slope(const SpeciesData& s, const QubitSpec& q, double B) {
  const LevelSpec& level = s.level(q.state0.level);
  ZeemanSpectrum sp = zeeman_spectrum(level, s.nuclear_spin, B, s.nuclear_g);
  const DressedState& a = sp.find(q.state0.F, q.state0.mF);
  const DressedState& b = sp.find(q.state1.F, q.state1.mF);
  const double sign = a.energy >= b.energy ? 1.0 : -1.0;
  return sign * (slope_of_state(a, level, s.nuclear_spin, s.nuclear_g) -
                 slope_of_state(b, level, s.nuclear_spin, s.nuclear_g));
}

double clock_point(const SpeciesData& s, const QubitSpec& q) {
  constexpr double kWindow = 200.0 * k::gauss;
  constexpr double kStep = 0.25 * k::gauss;
  constexpr double kTolerance = 1.0 / k::gauss;  // 1 Hz/G
  auto slope = [&](double B) { return qubit_frequency_slope(s, q, B); };
  if (std::abs(slope(0.0)) < kTolerance) return 0.0;
  double best = std::numeric_limits<double>::infinity(), best_at = 0.0;
  for (double dir : {1.0, -1.0}) {
    double b0 = 0.0, s0 = slope(0.0);
    for (double b1 = kStep; b1 <= kWindow + 0.5 * kStep; b1 += kStep) {
      const double s1 = slope(dir * b1);
      if (std::abs(s1) < best) {
        best = std::abs(s1);
        best_at = dir * b1;
      }
      if ((s0 < 0) != (s1 < 0)) {
        boost::uintmax_t iters = 200;
        auto tol = [](double x, double y) { return std::abs(x - y) < 1e-13; };
        auto [lo, hi] = dir > 0 ? boost::math::tools::toms748_solve(slope, b0, b1, s0, s1, tol, iters)
                                : boost::math::tools::toms748_solve(slope, -b1, -b0, s1, s0, tol, iters);
        const double root = 0.5 * (lo + hi);
        if (std::abs(slope(root)) < kTolerance) return root;
      }
      b0 = b1;
      s0 = s1;
    }
  }
  throw NoSolutionError("no clock point within +-200 G for " + s.name, best * k::gauss, best_at);
}

double curvature_at(const SpeciesData& s, const QubitSpec& q, double B, double step) {
  const double f0 = qubit_frequency(s, q, B);
  const double fp = qubit_frequency(s, q, B + step);
  const double fm = qubit_frequency(s, q, B - step);
  return (fp + fm - 2.0 * f0) / (2.0 * step * step);
}

double curvature(const SpeciesData& s, const QubitSpec& q, double step) {
  return curvature_at(s, q, clock_point(s, q), step);
}

namespace {

// <1| r_0 P r_0 |0> with P the projector onto P3/2. Used to fix the relative
// phase of the m-qubit pair so that the pi-pi Raman coupling is positive.
double pi_pair_element(const SpeciesData& s, const DressedQubit& d) {
  const LevelSpec& lv = s.level(d.level);
  const HalfInt I = s.nuclear_spin;
  double sum = 0.0;
  for (int mj = -lv.J.twice(); mj <= lv.J.twice(); mj += 2) {
    const HalfInt mJ = HalfInt::from_twice(mj);
    if (mj > 3 || mj < -3) continue;
    const double r = dipole_element_J(s, "P3/2", mJ, 0, d.level, mJ);
    for (int mi = -I.twice(); mi <= I.twice(); mi += 2) {
      const int idx = product_index(lv.J, I, mJ, HalfInt::from_twice(mi));
      sum += d.state1.amplitudes[idx] * r * r * d.state0.amplitudes[idx];
    }
  }
  return sum;
}

}  // namespace

DressedQubit make_dressed_qubit(const SpeciesData& s, const QubitSpec& q, double B) {
  DressedQubit d;
  d.spec = q;
  d.level = q.state0.level;
  d.field = B;
  d.spectrum = zeeman_spectrum(s.level(d.level), s.nuclear_spin, B, s.nuclear_g);
  d.state0 = d.spectrum.find(q.state0.F, q.state0.mF);
  d.state1 = d.spectrum.find(q.state1.F, q.state1.mF);
  if (q.encoding == Encoding::m && pi_pair_element(s, d) < 0.0) {
    for (auto& st : d.spectrum.states) {
      if (st.F == d.state1.F && st.mF == d.state1.mF) {
        for (double& a : st.amplitudes) a = -a;
      }
    }
    for (double& a : d.state1.amplitudes) a = -a;
  }
  return d;
}

DressedQubit make_dressed_qubit(const SpeciesData& s, Encoding enc) {
  const QubitSpec& q = s.qubit(enc);
  double B = 0.0;
  if (q.clock_field) B = *q.clock_field;
  else if (enc == Encoding::m) B = clock_point(s, q);
  return make_dressed_qubit(s, q, B);
}

}  // namespace ionscatter
