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

#include "ionscatter/limits.hpp"

#include <cmath>
#include <limits>

#include "ionscatter/constants.hpp"
#include "ionscatter/couplings.hpp"
#include "ionscatter/errors.hpp"

namespace ionscatter {

namespace k = constants;

namespace {

struct Line {
  double omega;     // E_k - E_i, signed
  double strength;  // |<i|z|k>|^2 summed over m_k, averaged over m_i, m^2
};

std::vector<Line> lines(const SpeciesData& s, const HyperfineState& i) {
  const LevelSpec& li = s.level(i.level);
  std::vector<Line> out;
  for (const auto& l : s.levels) {
    if (l.label == li.label || !s.find_transition(l.label, li.label)) continue;
    const double red = reduced_element_J(s, li.label, l.label) * k::a0;
    out.push_back({l.energy - li.energy, red * red / (3.0 * (li.J.twice() + 1.0))});
  }
  return out;
}

}  // namespace

double thomson_cross_section() {
  const double a2 = k::alpha * k::alpha;
  return 8.0 * k::pi / 3.0 * a2 * a2 * k::a0 * k::a0;
}

CrossSectionResult elastic_cross_section(const SpeciesData& s, const HyperfineState& i, double omega_L,
                                         bool include_v_term) {
  if (!(omega_L > 0)) throw DomainError("laser frequency must be positive");
  double sum = 0.0;
  for (const Line& ln : lines(s, i)) {
    const double d = ln.omega - omega_L;
    if (std::abs(d) <= 1e-12 * std::abs(ln.omega)) throw PoleError("laser frequency on a resonance");
    sum += ln.strength / d;
    if (include_v_term) sum += ln.strength / (ln.omega + omega_L);
  }
  CrossSectionResult r;
  const double w2 = omega_L * omega_L;
  r.sigma = k::alpha * k::alpha * 8.0 * k::pi / 3.0 * w2 * w2 / (k::c * k::c) * sum * sum;
  r.omega_L = omega_L;
  r.thomson_sigma = thomson_cross_section();
  r.trk_fraction = trk_partial_sum(s, i);
  return r;
}

double trk_partial_sum(const SpeciesData& s, const HyperfineState& i) {
  double sum = 0.0;
  for (const Line& ln : lines(s, i)) sum += ln.omega * ln.strength;
  return sum / (k::hbar / (2.0 * k::m_e));
}

std::pair<double, double> transition_frequency_range(const SpeciesData& s, const HyperfineState& i) {
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const Line& ln : lines(s, i)) {
    lo = std::min(lo, std::abs(ln.omega));
    hi = std::max(hi, std::abs(ln.omega));
  }
  return {lo, hi};
}

double thomson_limit_check(const SpeciesData& s, const HyperfineState& i, double omega_large, bool include_v_term) {
  const double top = transition_frequency_range(s, i).second;
  if (omega_large < 100.0 * top * (1.0 - 1e-12)) {
    throw DomainError("blue limit needs omega at least 100 times the largest transition frequency");
  }
  const CrossSectionResult r = elastic_cross_section(s, i, omega_large, include_v_term);
  return r.sigma / r.thomson_sigma;
}

double dc_polarizability(const SpeciesData& s, const HyperfineState& i) {
  double sum = 0.0;
  for (const Line& ln : lines(s, i)) sum += 2.0 * ln.strength / ln.omega;
  return k::e * k::e * sum / k::hbar;
}

double rayleigh_red_limit(double alpha_dc, double omega_L) {
  const double kl = omega_L / k::c;
  const double a = alpha_dc / (4.0 * k::pi * k::epsilon0);
  return 8.0 * k::pi / 3.0 * kl * kl * kl * kl * a * a;
}

}  // namespace ionscatter
