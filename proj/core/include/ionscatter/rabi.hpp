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

#ifndef IONSCATTER_RABI_HPP
#define IONSCATTER_RABI_HPP

#include "ionscatter/scattering.hpp"

namespace ionscatter {

struct RabiResult {
  /// rad/s; the relative phase of the two beams is folded into the sign.
  double omega_R = 0.0;
  /// |omega_R| / g^2, in s.
  double r_of_delta = 0.0;
};

/// Real part of a two-photon amplitude; a complex value (a beam phase
/// convention) collapses to its modulus carrying the real part's sign.
double signed_real(std::complex<double> value);

/// Two-photon Rabi frequency between the qubit states driven by the red and blue beams.
RabiResult rabi_frequency(const ScatteringEngine& engine, const BeamConfig& beams, double delta);
RabiResult rabi_frequency(const SpeciesData& species, const DressedQubit& qubit, const BeamConfig& beams, double delta,
                          const ModelVariant& model);

/// r(delta) = |omega_R| / g^2 for the encoding's standard polarizations.
double rabi_profile(const ScatteringEngine& engine, const BeamConfig& beams, double delta);

}  // namespace ionscatter

#endif
