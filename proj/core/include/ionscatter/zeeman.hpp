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

#ifndef IONSCATTER_ZEEMAN_HPP
#define IONSCATTER_ZEEMAN_HPP

#include <vector>

#include "ionscatter/species.hpp"

namespace ionscatter {

/// Index of |mJ, mI> in the product basis of a manifold: mJ-major, both ascending.
int product_index(HalfInt J, HalfInt I, HalfInt mJ, HalfInt mI);

/// Eigenstate of the hyperfine plus Zeeman Hamiltonian.
struct DressedState {
  /// Hz, relative to the manifold mean.
  double energy = 0.0;
  /// Zero-field label reached adiabatically.
  HalfInt F;
  HalfInt mF;
  /// Amplitudes on the product basis (see product_index). Real, with the
  /// overlap onto the zero-field |F, mF> made non-negative.
  std::vector<double> amplitudes;
};

struct ZeemanSpectrum {
  /// Tesla.
  double B = 0.0;
  HalfInt J;
  HalfInt I;
  /// Ordered by mF, then by zero-field energy within each mF block.
  std::vector<DressedState> states;

  const DressedState& find(HalfInt F, HalfInt mF) const;
};

/// Diagonalizes A I.J + quadrupole term + mu_B B (g_J J_z + g_I I_z) block by block in mF.
/// Throws DataError when the level lacks a required hyperfine constant.
ZeemanSpectrum zeeman_spectrum(const LevelSpec& level, HalfInt I, double B, double nuclear_g = 0.0);

/// Zero-field hyperfine energy of the F sublevel, Hz.
double hyperfine_energy(const LevelSpec& level, HalfInt I, HalfInt F);

/// |E(state0) - E(state1)| in Hz at field B (tesla).
double qubit_frequency(const SpeciesData& species, const QubitSpec& qubit, double B);
/// d(frequency)/dB in Hz/T from the Hellmann-Feynman derivative.
double qubit_frequency_slope(const SpeciesData& species, const QubitSpec& qubit, double B);

/// Field (tesla) where the qubit frequency is stationary. Searches 0 to 200 G,
/// then the reversed orientation. Throws NoSolutionError if none exists.
double clock_point(const SpeciesData& species, const QubitSpec& qubit);

/// Second-order field sensitivity: the coefficient c in f(B* + b) = f(B*) + c b^2, Hz/T^2.
double curvature(const SpeciesData& species, const QubitSpec& qubit, double step = 1e-6);
double curvature_at(const SpeciesData& species, const QubitSpec& qubit, double B, double step);

/// Qubit states and the full dressed basis of the qubit manifold at the operating field.
/// For m qubits the sign of state1 (and of its entry in the spectrum) is chosen so that
/// <1| r_0 P r_0 |0> > 0, P the P3/2 projector; this fixes the sign of the pi-pi Rabi frequency.
struct DressedQubit {
  QubitSpec spec;
  std::string level;
  /// Tesla.
  double field = 0.0;
  ZeemanSpectrum spectrum;
  DressedState state0;
  DressedState state1;
};

/// Operating field: the file's clock_field if present; zero for g qubits; the clock point for m qubits.
DressedQubit make_dressed_qubit(const SpeciesData& species, Encoding encoding);
DressedQubit make_dressed_qubit(const SpeciesData& species, const QubitSpec& qubit, double B);

}  // namespace ionscatter

#endif
