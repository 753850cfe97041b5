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

#ifndef IONSCATTER_ANGULAR_HPP
#define IONSCATTER_ANGULAR_HPP

#include <compare>
#include <string>

namespace ionscatter {

/// Angular momentum quantum number stored as twice its value, so that
/// half-integers are exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt integer(int value) { return HalfInt(2 * value); }
  static constexpr HalfInt half(int numerator) { return HalfInt(numerator); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Parity class of 2j (0 for integers, 1 for half-integers).
  constexpr int parity() const { return twice_ & 1; }
  /// Number of projections 2j+1.
  constexpr int multiplicity() const { return twice_ + 1; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "3/2", "2", "-1/2".
  std::string str() const;
  /// Parses "3/2", "2", "-1/2" or a decimal like "1.5".
  static HalfInt parse(const std::string& text);

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3).
///
/// Returns exactly 0 when a selection rule fails (triangle, m-sum, |m| > j).
/// Throws std::invalid_argument on a negative j or when some m does not
/// share the integer/half-integer class of its j.
double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

/// Wigner 6j symbol {j1 j2 j3; j4 j5 j6}.
///
/// Returns exactly 0 when a triad violates the triangle inequality. Throws
/// std::invalid_argument on a negative j or a triad whose sum is not an
/// integer.
double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6);

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

/// (-1)^x for integer-valued x given as twice its value.
int phase_from_twice(int twice_x);

}  // namespace ionscatter

#endif
