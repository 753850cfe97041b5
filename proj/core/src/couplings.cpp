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

#include "ionscatter/couplings.hpp"

#include <cmath>
#include <cstdlib>

#include "ionscatter/constants.hpp"
#include "ionscatter/errors.hpp"

namespace ionscatter {

namespace k = constants;

std::complex<double> Polarization::component(int q) const {
  switch (q) {
    case -1:
      return c_minus;
    case 0:
      return c_zero;
    case 1:
      return c_plus;
  }
  return 0.0;
}

std::complex<double>& Polarization::component(int q) {
  if (q < -1 || q > 1) throw std::out_of_range("spherical index must be -1, 0 or +1");
  return q < 0 ? c_minus : (q == 0 ? c_zero : c_plus);
}

double Polarization::norm2() const { return std::norm(c_minus) + std::norm(c_zero) + std::norm(c_plus); }

bool Polarization::is_normalized(double tol) const { return std::abs(norm2() - 1.0) <= tol; }

Polarization Polarization::conjugate() const {
  // c'_{-q} = (-1)^q conj(c_q)
  return Polarization{-std::conj(c_plus), std::conj(c_zero), -std::conj(c_minus)};
}

Polarization Polarization::pi() { return {0.0, 1.0, 0.0}; }
Polarization Polarization::sigma_plus() { return {0.0, 0.0, 1.0}; }
Polarization Polarization::sigma_minus() { return {1.0, 0.0, 0.0}; }

Polarization Polarization::from_components(std::complex<double> minus, std::complex<double> zero,
                                           std::complex<double> plus) {
  Polarization p{minus, zero, plus};
  const double n = std::sqrt(p.norm2());
  if (!(n > 0)) throw DomainError("polarization vector has zero length");
  p.c_minus /= n;
  p.c_zero /= n;
  p.c_plus /= n;
  return p;
}

Polarization Polarization::from_cartesian(std::complex<double> x, std::complex<double> y, std::complex<double> z) {
  const std::complex<double> i(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  return from_components(s * (x + i * y), z, -s * (x - i * y));
}

double mu(const LevelSpec& upper, const LevelSpec& lower, double reduced_element) {
  if (std::abs(upper.L.twice() - lower.L.twice()) != 2) {
    throw DomainError("dipole-forbidden pair " + upper.label + " - " + lower.label);
  }
  const double six = wigner6j(lower.L, lower.J, lower.S, upper.J, upper.L, HalfInt::integer(1));
  return std::abs(reduced_element * std::sqrt((lower.J.twice() + 1.0) * (lower.L.twice() + 1.0)) * six);
}

double mu(const SpeciesData& s, const std::string& upper, const std::string& lower) {
  const TransitionSpec* t = s.find_transition(upper, lower);
  if (!t) return 0.0;
  const LevelSpec& u = s.level(t->upper);
  const LevelSpec& l = s.level(t->lower);
  return mu(u, l, t->reduced_element);
}

double decay_rate_per_mu2(double omega) {
  if (omega <= 0) return 0.0;
  return k::e * k::e * omega * omega * omega * k::a0 * k::a0 /
         (3.0 * k::pi * k::epsilon0 * k::hbar * k::c * k::c * k::c);
}

double decay_rate(double mu_a0, double omega_ul) {
  if (!(omega_ul > 0)) throw DomainError("decay rate needs a positive transition frequency");
  return decay_rate_per_mu2(omega_ul) * mu_a0 * mu_a0;
}

FieldCoupling coupling_g(double E, double mu_a0) {
  return FieldCoupling{k::e * E * mu_a0 * k::a0 / (2.0 * k::hbar), E, mu_a0};
}

double field_from_power(double power, double waist) {
  return std::sqrt(4.0 * power / (k::pi * waist * waist * k::c * k::epsilon0));
}

double power_from_field(double E, double waist) { return E * E * k::pi * waist * waist * k::c * k::epsilon0 / 4.0; }

namespace {

// Orbital reduced element <L_a||r||L_b> in Edmonds normalization.
double reduced_element_L(const LevelSpec& a, const LevelSpec& b, const TransitionSpec& t) {
  const bool a_is_lower = (t.lower == a.label);
  const LevelSpec& lo = a_is_lower ? a : b;
  const LevelSpec& up = a_is_lower ? b : a;
  // Sign of the one-electron formula (-1)^{L_l} (L_l 1 L_u; 0 0 0) with a positive radial integral.
  const double three = wigner3j(lo.L, HalfInt::integer(1), up.L, HalfInt(), HalfInt(), HalfInt());
  const int sign = phase_from_twice(lo.L.twice()) * (three < 0 ? -1 : 1);
  const double lower_upper = sign * t.radial_sign * std::sqrt(lo.L.twice() + 1.0) * t.reduced_element;
  if (a_is_lower) return lower_upper;
  return phase_from_twice(up.L.twice() - lo.L.twice()) * lower_upper;
}

}  // namespace

double reduced_element_J(const SpeciesData& s, const std::string& a, const std::string& b) {
  const TransitionSpec* t = s.find_transition(a, b);
  if (!t) return 0.0;
  const LevelSpec& la = s.level(a);
  const LevelSpec& lb = s.level(b);
  const double rl = reduced_element_L(la, lb, *t);
  const double six = wigner6j(la.L, la.J, la.S, lb.J, lb.L, HalfInt::integer(1));
  const int ph = phase_from_twice(la.L.twice() + la.S.twice() + lb.J.twice() + 2);
  return ph * std::sqrt((la.J.twice() + 1.0) * (lb.J.twice() + 1.0)) * six * rl;
}

double reduced_element_F(const SpeciesData& s, const std::string& a, HalfInt Fa, const std::string& b, HalfInt Fb) {
  const LevelSpec& la = s.level(a);
  const LevelSpec& lb = s.level(b);
  const HalfInt I = s.nuclear_spin;
  const double six = wigner6j(la.J, Fa, I, Fb, lb.J, HalfInt::integer(1));
  if (six == 0.0) return 0.0;
  const int ph = phase_from_twice(la.J.twice() + I.twice() + Fb.twice() + 2);
  return ph * std::sqrt((Fa.twice() + 1.0) * (Fb.twice() + 1.0)) * six * reduced_element_J(s, a, b);
}

double dipole_element(const SpeciesData& s, const HyperfineState& f, int q, const HyperfineState& i) {
  if (f.mF.twice() != i.mF.twice() + 2 * q) return 0.0;
  const double three = wigner3j(f.F, HalfInt::integer(1), i.F, -f.mF, HalfInt::integer(q), i.mF);
  if (three == 0.0) return 0.0;
  return phase_from_twice(f.F.twice() - f.mF.twice()) * three * reduced_element_F(s, f.level, f.F, i.level, i.F);
}

double dipole_factor(const SpeciesData& s, const HyperfineState& f, int q, const HyperfineState& i) {
  const TransitionSpec* t = s.find_transition(f.level, i.level);
  if (!t) return 0.0;
  const double m = mu(s.level(t->upper), s.level(t->lower), t->reduced_element);
  if (m == 0.0) return 0.0;
  return dipole_element(s, f, q, i) / m;
}

double dipole_element_J(const SpeciesData& s, const std::string& a, HalfInt mJa, int q, const std::string& b,
                        HalfInt mJb) {
  if (mJa.twice() != mJb.twice() + 2 * q) return 0.0;
  const LevelSpec& la = s.level(a);
  const LevelSpec& lb = s.level(b);
  const double three = wigner3j(la.J, HalfInt::integer(1), lb.J, -mJa, HalfInt::integer(q), mJb);
  if (three == 0.0) return 0.0;
  return phase_from_twice(la.J.twice() - mJa.twice()) * three * reduced_element_J(s, a, b);
}

}  // namespace ionscatter
