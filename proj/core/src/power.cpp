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

#include "ionscatter/power.hpp"

#include <cmath>

#include "ionscatter/constants.hpp"
#include "ionscatter/errors.hpp"

namespace ionscatter {

namespace k = constants;

namespace {

// hbar omega^3 w0^2 / (c^2 gamma_Pi), the common prefactor of all power formulas.
double prefactor(const ScatteringEngine& engine, double waist) {
  const double w = engine.omega_Pi();
  return k::hbar * w * w * w * waist * waist / (k::c * k::c * engine.gamma_Pi());
}

}  // namespace

PowerReport power_1q(const ScatteringEngine& engine, const BeamConfig& beams, double delta, double tau,
                     double waist) {
  if (!(tau > 0)) throw DomainError("gate time must be positive");
  const double r = rabi_profile(engine, beams, delta);
  if (!(r > 0)) throw NoSolutionError("Rabi frequency vanishes at this detuning", 0.0, delta);
  PowerReport out;
  out.total_power = 2.0 / 6.0 * prefactor(engine, waist) * k::pi / (tau * r);
  out.per_beam = {0.5 * out.total_power, 0.5 * out.total_power};
  out.detuning = delta;
  out.gate_time = tau;
  out.error = error_1q(engine, beams, delta).p_raman;
  return out;
}

PowerReport power_2q(const ScatteringEngine& engine, const BeamConfig& beams, double delta, double tau,
                     double waist, const TrapConfig& trap, EtaConvention convention) {
  if (!(tau > 0)) throw DomainError("gate time must be positive");
  const double r = rabi_profile(engine, beams, delta);
  if (!(r > 0)) throw NoSolutionError("Rabi frequency vanishes at this detuning", 0.0, delta);
  const double eta = lamb_dicke(engine, delta, trap, convention);
  PowerReport out;
  out.total_power = 4.0 / (6.0 * std::sqrt(2.0)) * prefactor(engine, waist) * k::pi * std::sqrt(double(trap.K)) /
                    (tau * eta * r);
  out.per_beam = {0.25 * out.total_power, 0.25 * out.total_power, 0.5 * out.total_power};
  out.detuning = delta;
  out.gate_time = tau;
  out.error = error_2q(engine, beams, delta, trap, convention).p_raman;
  return out;
}

PowerReport power_of_error_simplified(const ScatteringEngine& engine, double rho, double epsilon, double tau,
                                      double waist, const TrapConfig& trap, GateKind gate,
                                      EtaConvention convention) {
  if (engine.qubit().spec.encoding != Encoding::m) {
    throw DomainError("closed-form power versus error holds for m qubits only");
  }
  if (!(epsilon > 0)) throw DomainError("error must be positive");
  if (!(tau > 0)) throw DomainError("gate time must be positive");
  // hbar omega^3 w0^2 / (c^2 alpha_q) with alpha_q = gamma_Pi / gamma.
  const double gamma = engine.gamma_P();
  const double base = rho * k::pi * prefactor(engine, waist) * gamma / epsilon;
  PowerReport out;
  out.gate_time = tau;
  out.error = epsilon;
  if (gate == GateKind::one_qubit) {
    out.total_power = 2.5 * base * k::pi / tau;
    out.per_beam = {0.5 * out.total_power, 0.5 * out.total_power};
    out.detuning = -k::pi * rho * gamma / epsilon;
  } else {
    const double eta = lamb_dicke(engine, 0.0, trap, convention);
    out.total_power = 10.0 * base * (k::pi / tau) * trap.K / (eta * eta);
    out.per_beam = {0.25 * out.total_power, 0.25 * out.total_power, 0.5 * out.total_power};
    out.detuning = -k::pi * rho * gamma * 4.0 * std::sqrt(double(trap.K)) / (std::sqrt(2.0) * eta * epsilon);
  }
  return out;
}

std::vector<PowerCurvePoint> flag_backbend(std::vector<PowerCurvePoint> points) {
  for (size_t n = 1; n < points.size(); ++n) {
    const auto& p = points[n - 1];
    auto& q = points[n];
    q.backbend = q.error > p.error && q.power > p.power;
  }
  return points;
}

}  // namespace ionscatter
