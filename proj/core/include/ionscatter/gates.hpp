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

#ifndef IONSCATTER_GATES_HPP
#define IONSCATTER_GATES_HPP

#include <vector>

#include "ionscatter/rabi.hpp"
#include "ionscatter/scattering.hpp"

namespace ionscatter {

/// eq_eta: eta = 2 (omega_L / c) z0 b_p, i.e. sqrt(2) (omega_L / c) z0 for b_p = 1/sqrt(2).
/// table2: eta = (omega_L / c) z0, the convention the published gate table follows.
enum class EtaConvention { eq_eta, table2 };
enum class GateKind { one_qubit, two_qubit };
enum class Side { red, blue };

std::string to_string(EtaConvention c);
std::string to_string(GateKind g);
std::string to_string(Side s);

struct TrapConfig {
  /// rad/s.
  double omega_trap = 2.0 * 3.14159265358979323846 * 5e6;
  double mode_participation = 0.70710678118654752440;
  int K = 1;
  /// Empty iff the invariants hold.
  std::vector<std::string> validate() const;
};

struct GateErrorReport {
  /// Gate duration, s.
  double tau = 0.0;
  double eta = 0.0;
  double p_raman = 0.0;
  /// Zero for single-qubit gates.
  double p_rayleigh_recoil_bound = 0.0;
  /// Raman share of the scattering rate at this detuning.
  double rho = 0.0;
  double omega_R = 0.0;
  double gamma_raman = 0.0;
  double gamma_rayleigh = 0.0;
  /// Set when a probability exceeds 1 (rate model outside its regime).
  bool regime_invalid = false;
};

/// z0 = sqrt(hbar / 2 M omega_trap), m.
double ground_state_spread(double mass, double omega_trap);
double lamb_dicke(double omega_L, double z0, const TrapConfig& trap, EtaConvention convention);
/// Lamb-Dicke parameter at the engine's laser frequency (fixed at omega_Pi in the simplified model).
double lamb_dicke(const ScatteringEngine& engine, double delta, const TrapConfig& trap, EtaConvention convention);

double gate_time_1q(double omega_R);
double gate_time_2q(double omega_R, double eta, int K);

/// 3/8 + 1/(2 sqrt 2).
double recoil_bound_constant();

GateErrorReport error_1q(const ScatteringEngine& engine, const BeamConfig& beams, double delta);
GateErrorReport error_2q(const ScatteringEngine& engine, const BeamConfig& beams, double delta,
                         const TrapConfig& trap, EtaConvention convention = EtaConvention::eq_eta);
GateErrorReport gate_error(const ScatteringEngine& engine, const BeamConfig& beams, double delta,
                           const TrapConfig& trap, GateKind gate, EtaConvention convention = EtaConvention::eq_eta);
double rayleigh_recoil_bound(const ScatteringEngine& engine, const BeamConfig& beams, double delta,
                             const TrapConfig& trap, EtaConvention convention = EtaConvention::eq_eta);

/// Detuning (from P3/2) used as origin when reporting: P1/2 for g-qubit red detunings, else P3/2.
double reporting_origin(const ScatteringEngine& engine, Side side);

struct ThresholdResult {
  /// rad/s from P3/2.
  double delta = 0.0;
  /// rad/s from the reporting origin.
  double reported_delta = 0.0;
  double error = 0.0;
  double wavelength = 0.0;
  GateErrorReport report;
  /// Detunings (from P3/2) where the Rabi frequency changes sign inside the searched range.
  std::vector<double> rabi_zeros;
};

/// Detuning nearest the reporting origin at which the Raman error falls to `target`.
/// Throws NoSolutionError carrying the smallest error found when the target is out of reach.
ThresholdResult threshold_detuning(const ScatteringEngine& engine, const BeamConfig& beams, const TrapConfig& trap,
                                   double target, Side side, GateKind gate,
                                   EtaConvention convention = EtaConvention::eq_eta);

/// Smallest Raman error on one side, located by a scan and golden-section refinement.
struct ErrorMinimum {
  double delta = 0.0;
  double error = 0.0;
  /// False if the smallest value sits on the edge of the searched range.
  bool interior = false;
};
ErrorMinimum minimum_error(const ScatteringEngine& engine, const BeamConfig& beams, const TrapConfig& trap, Side side,
                           GateKind gate, EtaConvention convention = EtaConvention::eq_eta);

/// Searchable detuning range (from P3/2) on one side: from the reporting origin
/// to zero laser frequency (red) or the next intermediate resonance (blue).
std::pair<double, double> search_range(const ScatteringEngine& engine, Side side);

}  // namespace ionscatter

#endif
