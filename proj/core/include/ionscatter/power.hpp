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

#ifndef IONSCATTER_POWER_HPP
#define IONSCATTER_POWER_HPP

#include <vector>

#include "ionscatter/gates.hpp"

namespace ionscatter {

struct PowerReport {
  /// W, summed over beams.
  double total_power = 0.0;
  std::vector<double> per_beam;
  /// rad/s from P3/2.
  double detuning = 0.0;
  double error = 0.0;
  /// s.
  double gate_time = 0.0;
};

/// Total power of two equal beams giving a single-qubit gate of duration tau at detuning delta.
/// Throws NoSolutionError when r(delta) vanishes.
PowerReport power_1q(const ScatteringEngine& engine, const BeamConfig& beams, double delta, double tau,
                     double waist);
/// Total power of the 1:1:2 beam set giving a two-qubit gate of duration tau.
PowerReport power_2q(const ScatteringEngine& engine, const BeamConfig& beams, double delta, double tau,
                     double waist, const TrapConfig& trap, EtaConvention convention = EtaConvention::eq_eta);

/// Closed-form power for an m qubit in the simplified model at error epsilon.
/// Throws DomainError for g qubits, where the closed form does not apply.
PowerReport power_of_error_simplified(const ScatteringEngine& engine, double rho, double epsilon, double tau,
                                      double waist, const TrapConfig& trap, GateKind gate,
                                      EtaConvention convention = EtaConvention::eq_eta);

/// Parametric (error, power) curve; `backbend` marks points past which power and error both grow.
struct PowerCurvePoint {
  double delta = 0.0;
  double error = 0.0;
  double power = 0.0;
  bool backbend = false;
};
std::vector<PowerCurvePoint> flag_backbend(std::vector<PowerCurvePoint> points);

}  // namespace ionscatter

#endif
