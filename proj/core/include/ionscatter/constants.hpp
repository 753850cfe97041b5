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

#ifndef IONSCATTER_CONSTANTS_HPP
#define IONSCATTER_CONSTANTS_HPP

#include <numbers>

// CODATA 2018 values, SI units.
namespace ionscatter::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double h = 6.62607015e-34;
inline constexpr double hbar = h / (2.0 * pi);
inline constexpr double c = 299792458.0;
inline constexpr double e = 1.602176634e-19;
inline constexpr double epsilon0 = 8.8541878128e-12;
inline constexpr double a0 = 5.29177210903e-11;
inline constexpr double amu = 1.66053906660e-27;
inline constexpr double m_e = 9.1093837015e-31;
inline constexpr double alpha = 7.2973525693e-3;
inline constexpr double mu_B = 9.2740100783e-24;
/// Bohr magneton over h, Hz per tesla.
inline constexpr double mu_B_over_h = mu_B / h;

inline constexpr double gauss = 1e-4;
inline constexpr double THz = 1e12;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace ionscatter::constants

#endif
