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

#ifndef IONSCATTER_LIMITS_HPP
#define IONSCATTER_LIMITS_HPP

#include "ionscatter/species.hpp"

namespace ionscatter {

struct CrossSectionResult {
  /// m^2.
  double sigma = 0.0;
  double omega_L = 0.0;
  /// (8 pi / 3) alpha^4 a0^2.
  double thomson_sigma = 0.0;
  double trk_fraction = 0.0;
};

/// Thomson cross-section of a free electron, m^2.
double thomson_cross_section();

/// Elastic cross-section of a sublevel of `i.level` at laser frequency omega_L, using
/// m-summed line strengths. `include_v_term = false` drops the counter-rotating term.
/// Throws PoleError on a resonance.
CrossSectionResult elastic_cross_section(const SpeciesData& species, const HyperfineState& i, double omega_L,
                                         bool include_v_term = true);

/// Oscillator-strength sum over the file's levels as a fraction of hbar / 2 m_e.
double trk_partial_sum(const SpeciesData& species, const HyperfineState& i);

/// sigma(omega_large) / sigma_Thomson. Throws DomainError below 100 times the largest transition frequency.
double thomson_limit_check(const SpeciesData& species, const HyperfineState& i, double omega_large,
                           bool include_v_term = true);

/// Static scalar polarizability, C m^2 / V.
double dc_polarizability(const SpeciesData& species, const HyperfineState& i);

/// (8 pi / 3) k^4 |alpha / 4 pi eps0|^2, the classical red-side Rayleigh cross-section.
double rayleigh_red_limit(double alpha_dc, double omega_L);

/// Smallest and largest |E_k - E_i| over levels coupled to i, rad/s.
std::pair<double, double> transition_frequency_range(const SpeciesData& species, const HyperfineState& i);

}  // namespace ionscatter

#endif
