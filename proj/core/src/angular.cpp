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

#include "ionscatter/angular.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ionscatter {

namespace mp = boost::multiprecision;

namespace {

constexpr int kMaxFactorial = 400;

const std::vector<mp::cpp_int>& factorials() {
  static const std::vector<mp::cpp_int> table = [] {
    std::vector<mp::cpp_int> f(kMaxFactorial + 1);
    f[0] = 1;
    for (int n = 1; n <= kMaxFactorial; ++n) f[n] = f[n - 1] * n;
    return f;
  }();
  return table;
}

const mp::cpp_int& fact(int n) {
  if (n < 0 || n > kMaxFactorial) throw std::out_of_range("angular momentum too large for factorial table");
  return factorials()[n];
}

// Arguments below are all twice the physical value; halves are exact integers by construction.
bool triangle_ok(int a, int b, int c) {
  if ((a + b + c) % 2 != 0) return false;
  return c <= a + b && c >= std::abs(a - b);
}

// Triangle coefficient (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)! as an exact rational.
mp::cpp_rational delta(int a, int b, int c) {
  mp::cpp_rational num = fact((a + b - c) / 2) * fact((a - b + c) / 2) * fact((-a + b + c) / 2);
  return num / mp::cpp_rational(fact((a + b + c) / 2 + 1));
}

// sign * sqrt(q) * s where s is an exact rational sum; evaluated in extended precision.
double signed_sqrt_product(int sign, const mp::cpp_rational& q, const mp::cpp_rational& s) {
  if (s == 0) return 0.0;
  using big_float = mp::cpp_bin_float_100;
  mp::cpp_rational prod = q * s * s;
  big_float v = big_float(mp::numerator(prod)) / big_float(mp::denominator(prod));
  double out = static_cast<double>(mp::sqrt(v));
  if (s < 0) sign = -sign;
  return sign * out;
}

void require_nonnegative(HalfInt j) {
  if (j.twice() < 0) throw std::invalid_argument("negative angular momentum " + j.str());
}

void require_projection_parity(HalfInt j, HalfInt m) {
  if (j.parity() != (m.twice() & 1)) {
    throw std::invalid_argument("projection " + m.str() + " inconsistent with j = " + j.str());
  }
}

}  // namespace

int phase_from_twice(int twice_x) {
  if (twice_x % 2 != 0) throw std::invalid_argument("phase exponent is not an integer");
  int x = twice_x / 2;
  return (x % 2 == 0) ? 1 : -1;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    int num = std::stoi(text.substr(0, slash));
    int den = std::stoi(text.substr(slash + 1));
    if (den == 1) return integer(num);
    if (den != 2) throw std::invalid_argument("not a half-integer: " + text);
    return from_twice(num);
  }
  double v = std::stod(text);
  double twice = 2.0 * v;
  if (std::abs(twice - std::round(twice)) > 1e-9) throw std::invalid_argument("not a half-integer: " + text);
  return from_twice(static_cast<int>(std::lround(twice)));
}

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  require_nonnegative(j1);
  require_nonnegative(j2);
  require_nonnegative(j3);
  require_projection_parity(j1, m1);
  require_projection_parity(j2, m2);
  require_projection_parity(j3, m3);
  const int a = j1.twice(), b = j2.twice(), c = j3.twice();
  const int ma = m1.twice(), mb = m2.twice(), mc = m3.twice();
  if (ma + mb + mc != 0) return 0.0;
  if (std::abs(ma) > a || std::abs(mb) > b || std::abs(mc) > c) return 0.0;
  if (!triangle_ok(a, b, c)) return 0.0;

  // Racah single sum; every quantity below is an integer.
  const int t1 = (c - b + ma) / 2;
  const int t2 = (c - a - mb) / 2;
  const int t3 = (a + b - c) / 2;
  const int t4 = (a - ma) / 2;
  const int t5 = (b + mb) / 2;
  const int kmin = std::max({0, -t1, -t2});
  const int kmax = std::min({t3, t4, t5});
  mp::cpp_rational sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    mp::cpp_int den = fact(k) * fact(t1 + k) * fact(t2 + k) * fact(t3 - k) * fact(t4 - k) * fact(t5 - k);
    mp::cpp_rational term(mp::cpp_int(1), den);
    if (k % 2) sum -= term;
    else sum += term;
  }
  mp::cpp_rational q = delta(a, b, c);
  q *= mp::cpp_rational(fact((a + ma) / 2) * fact((a - ma) / 2) * fact((b + mb) / 2) * fact((b - mb) / 2) *
                        fact((c + mc) / 2) * fact((c - mc) / 2));
  const int sign = phase_from_twice(a - b - mc);
  return signed_sqrt_product(sign, q, sum);
}

double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
  for (HalfInt j : {j1, j2, j3, j4, j5, j6}) require_nonnegative(j);
  const int a = j1.twice(), b = j2.twice(), c = j3.twice();
  const int d = j4.twice(), e = j5.twice(), f = j6.twice();
  const int triads[4][3] = {{a, b, c}, {a, e, f}, {d, b, f}, {d, e, c}};
  for (const auto& t : triads) {
    if ((t[0] + t[1] + t[2]) % 2 != 0) throw std::invalid_argument("6j triad with non-integer sum");
  }
  for (const auto& t : triads) {
    if (!triangle_ok(t[0], t[1], t[2])) return 0.0;
  }
  const int s1 = (a + b + c) / 2, s2 = (a + e + f) / 2, s3 = (d + b + f) / 2, s4 = (d + e + c) / 2;
  const int p1 = (a + b + d + e) / 2, p2 = (b + c + e + f) / 2, p3 = (c + a + f + d) / 2;
  const int kmin = std::max({s1, s2, s3, s4});
  const int kmax = std::min({p1, p2, p3});
  mp::cpp_rational sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    mp::cpp_int den = fact(k - s1) * fact(k - s2) * fact(k - s3) * fact(k - s4) * fact(p1 - k) * fact(p2 - k) *
                      fact(p3 - k);
    mp::cpp_rational term(fact(k + 1), den);
    if (k % 2) sum -= term;
    else sum += term;
  }
  mp::cpp_rational q = delta(a, b, c) * delta(a, e, f) * delta(d, b, f) * delta(d, e, c);
  return signed_sqrt_product(1, q, sum);
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
  double w = wigner3j(j1, j2, J, m1, m2, -M);
  if (w == 0.0) return 0.0;
  return phase_from_twice(j1.twice() - j2.twice() + M.twice()) * std::sqrt(J.twice() + 1.0) * w;
}

}  // namespace ionscatter
