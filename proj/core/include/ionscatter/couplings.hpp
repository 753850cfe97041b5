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

#ifndef IONSCATTER_COUPLINGS_HPP
#define IONSCATTER_COUPLINGS_HPP

#include <complex>

#include "ionscatter/species.hpp"

namespace ionscatter {

/// Spherical components of a unit polarization vector, with
/// e_{+1} = -(x + i y)/sqrt(2), e_0 = z, e_{-1} = (x - i y)/sqrt(2).
struct Polarization {
  std::complex<double> c_minus;
  std::complex<double> c_zero;
  std::complex<double> c_plus;

  std::complex<double> component(int q) const;
  std::complex<double>& component(int q);
  double norm2() const;
  bool is_normalized(double tol = 1e-12) const;
  /// Spherical components of the complex-conjugate vector: c'_{-q} = (-1)^q conj(c_q).
  Polarization conjugate() const;

  static Polarization pi();
  static Polarization sigma_plus();
  static Polarization sigma_minus();
  /// Normalized combination of spherical components.
  static Polarization from_components(std::complex<double> minus, std::complex<double> zero,
                                      std::complex<double> plus);
  /// From Cartesian components (x, y, z).
  static Polarization from_cartesian(std::complex<double> x, std::complex<double> y, std::complex<double> z);
};

/// Field coupling g = e E mu / 2 hbar.
struct FieldCoupling {
  /// rad/s.
  double g = 0.0;
  /// V/m.
  double E = 0.0;
  /// Bohr radii.
  double mu = 0.0;
};

/// Fine-structure coupling strength in Bohr radii for the pair (upper, lower)
/// given the reduced orbital element R. Throws DomainError unless |L_u - L_l| = 1.
double mu(const LevelSpec& upper, const LevelSpec& lower, double reduced_element);
/// Same, from the species transition list; 0 if the pair has no transition.
double mu(const SpeciesData& species, const std::string& upper, const std::string& lower);

/// Partial spontaneous decay rate (rad/s) for coupling mu (Bohr radii) at angular frequency omega.
double decay_rate(double mu_a0, double omega_ul);
/// Rate per unit mu^2 (rad/s per a0^2) at angular frequency omega; zero for omega <= 0.
double decay_rate_per_mu2(double omega);

FieldCoupling coupling_g(double E, double mu_a0);

/// Peak field of a Gaussian beam: E^2 = 4 P / (pi w0^2 c eps0).
double field_from_power(double power, double waist);
double power_from_field(double E, double waist);

/// Reduced matrix element <a||r||b> between fine-structure manifolds, Bohr radii,
/// Edmonds normalization, Condon-Shortley phases. Zero when no transition is listed.
double reduced_element_J(const SpeciesData& species, const std::string& a, const std::string& b);

/// Reduced matrix element <(J_a I) F_a || r || (J_b I) F_b>, Bohr radii.
double reduced_element_F(const SpeciesData& species, const std::string& a, HalfInt Fa, const std::string& b,
                         HalfInt Fb);

/// <f| r_q |i> in Bohr radii between zero-field hyperfine sublevels.
double dipole_element(const SpeciesData& species, const HyperfineState& f, int q, const HyperfineState& i);

/// <f| r_q |i> / mu(level pair): the geometric factor. Zero for forbidden combinations.
double dipole_factor(const SpeciesData& species, const HyperfineState& f, int q, const HyperfineState& i);

/// <a, mJa | r_q | b, mJb> in Bohr radii for fine-structure sublevels (nuclear spin spectator).
double dipole_element_J(const SpeciesData& species, const std::string& a, HalfInt mJa, int q, const std::string& b,
                        HalfInt mJb);

}  // namespace ionscatter

#endif
