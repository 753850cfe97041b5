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

#include "ionscatter/rabi.hpp"

#include <cmath>

namespace ionscatter {

double signed_real(std::complex<double> v) {
  if (std::abs(v.imag()) > 1e-9 * std::abs(v)) {
    return (v.real() < 0 ? -1.0 : 1.0) * std::abs(v);
  }
  return v.real();
}

RabiResult rabi_frequency(const ScatteringEngine& engine, const BeamConfig& beams, double delta) {
  const Beam& red = beams.find(BeamLabel::red);
  const Beam& blue = beams.find(BeamLabel::blue);
  const std::complex<double> per_g2 = engine.rabi_per_g2(delta, red.polarization, blue.polarization);
  const double g2 = engine.coupling(red, beams.waist) * engine.coupling(blue, beams.waist);
  RabiResult r;
  r.r_of_delta = std::abs(per_g2);
  r.omega_R = g2 * signed_real(per_g2);
  return r;
}

RabiResult rabi_frequency(const SpeciesData& species, const DressedQubit& qubit, const BeamConfig& beams, double delta,
                          const ModelVariant& model) {
  return rabi_frequency(ScatteringEngine(species, qubit, model), beams, delta);
}

double rabi_profile(const ScatteringEngine& engine, const BeamConfig& beams, double delta) {
  const Beam& red = beams.find(BeamLabel::red);
  const Beam& blue = beams.find(BeamLabel::blue);
  return std::abs(engine.rabi_per_g2(delta, red.polarization, blue.polarization));
}

}  // namespace ionscatter
