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

#ifndef IONSCATTER_SCATTERING_HPP
#define IONSCATTER_SCATTERING_HPP

#include <complex>
#include <memory>
#include <vector>

#include "ionscatter/couplings.hpp"
#include "ionscatter/species.hpp"
#include "ionscatter/zeeman.hpp"

namespace ionscatter {

enum class ModelKind { full, simplified };

struct ModelVariant {
  ModelKind kind = ModelKind::full;
  bool include_higher_levels = true;
  bool include_counter_rotating = true;
  bool include_frequency_cubed = true;

  static ModelVariant full(bool higher_levels = true);
  static ModelVariant simplified();
  bool ladder() const { return kind == ModelKind::full; }
  /// Throws DomainError if a simplified variant has any full-model flag set.
  void check() const;
  std::string str() const;
};

enum class BeamLabel { red, blue, third };

struct Beam {
  Polarization polarization;
  /// W.
  double power = 0.0;
  BeamLabel label = BeamLabel::red;
};

enum class Geometry { co_propagating_pair_plus_counter, counter_propagating_pair };

struct BeamConfig {
  std::vector<Beam> beams;
  /// m.
  double waist = 20e-6;
  Geometry geometry = Geometry::counter_propagating_pair;

  /// Raman pair with the encoding's standard polarizations: both pi for m
  /// qubits; equal sigma+/sigma- parts with orthogonal linear polarizations for g qubits.
  static BeamConfig raman_pair(Encoding enc, double power_per_beam, double waist = 20e-6);
  /// Two co-propagating beams of power P and one counter-propagating beam of 2P.
  static BeamConfig ms_triplet(Encoding enc, double power, double waist = 20e-6);
  const Beam& find(BeamLabel label) const;
  /// Empty iff the invariants hold.
  std::vector<std::string> validate() const;
};

enum class Classification { raman, rayleigh };

struct ScatteringEntry {
  /// 0 or 1: the qubit state the event starts from.
  int initial = 0;
  HyperfineState final_state;
  /// rad/s, weighted by the occupation 1/2.
  double rate_lambda_v = 0.0;
  double rate_ladder = 0.0;
  Classification classification = Classification::raman;
};

struct ScatteringBreakdown {
  std::vector<ScatteringEntry> entries;
  double raman_total() const;
  double rayleigh_total() const;
};

/// Rates from an engine call. With a single polarization they are per unit g^2
/// (units of s); with a BeamConfig they are absolute (rad/s).
struct ScatteringTotals {
  double raman_lambda_v = 0.0;
  double raman_ladder = 0.0;
  double rayleigh = 0.0;
  double raman() const { return raman_lambda_v + raman_ladder; }
  double total() const { return raman() + rayleigh; }
};

/// Precomputed dipole matrices for one species, qubit and model. Detunings are
/// angular frequencies measured from the P3/2 manifold mean, positive to the blue.
class ScatteringEngine {
 public:
  ScatteringEngine(const SpeciesData& species, DressedQubit qubit, ModelVariant model);

  const SpeciesData& species() const { return *species_; }
  const DressedQubit& qubit() const { return qubit_; }
  const ModelVariant& model() const { return model_; }

  /// P3/2 to qubit manifold angular frequency.
  double omega_Pi() const { return omega_Pi_; }
  /// P3/2 - P1/2 splitting.
  double omega_f() const { return omega_f_; }
  /// Coupling strength between P3/2 and the qubit manifold, Bohr radii.
  double mu_Pi() const { return mu_Pi_; }
  /// Partial decay rate from P3/2 into the qubit manifold.
  double gamma_Pi() const;
  /// Total P3/2 decay rate summed over the file's transitions.
  double gamma_P() const;
  /// Laser angular frequency at detuning delta.
  double omega_L(double delta) const { return omega_Pi_ + delta; }
  /// Detunings (from P3/2) of the included intermediate manifolds.
  std::vector<double> poles() const;
  std::vector<std::string> intermediate_levels() const;
  std::vector<std::string> final_levels() const;

  /// g for one beam.
  double coupling(const Beam& beam, double waist) const;

  ScatteringTotals totals(double delta, const Polarization& pol) const;
  ScatteringTotals totals(double delta, const BeamConfig& beams) const;
  ScatteringBreakdown breakdown(double delta, const BeamConfig& beams) const;

  /// Raman Rabi frequency divided by g_red g_blue, in s. Throws PoleError on a resonance.
  std::complex<double> rabi_per_g2(double delta, const Polarization& red, const Polarization& blue) const;

  /// Opaque precomputed state.
  struct Impl;

 private:
  std::shared_ptr<const SpeciesData> species_;
  DressedQubit qubit_;
  ModelVariant model_;
  double omega_Pi_ = 0.0;
  double omega_f_ = 0.0;
  double mu_Pi_ = 0.0;
  std::shared_ptr<const Impl> impl_;
};

/// Convenience wrappers building a fresh engine per call.
double rate_lambda_v(const SpeciesData& species, const DressedQubit& qubit, const BeamConfig& beams, double delta,
                     const HyperfineState& f, const ModelVariant& model);
double rate_ladder(const SpeciesData& species, const DressedQubit& qubit, const BeamConfig& beams, double delta,
                   const HyperfineState& f, const ModelVariant& model);
double raman_total(const SpeciesData& species, const DressedQubit& qubit, const BeamConfig& beams, double delta,
                   const ModelVariant& model);
double rayleigh_total(const SpeciesData& species, const DressedQubit& qubit, const BeamConfig& beams, double delta,
                      const ModelVariant& model);

/// Detuning at which the Raman fraction is evaluated: sqrt(0.01 * 0.1) omega_f red of P3/2.
double rho_reference_detuning(const ScatteringEngine& engine);
/// Raman share of the total scattering rate at the reference detuning.
double raman_fraction_rho(const ScatteringEngine& engine, const BeamConfig& beams);
double raman_fraction_rho(const SpeciesData& species, const DressedQubit& qubit, const BeamConfig& beams,
                          const ModelVariant& model);

}  // namespace ionscatter

#endif
