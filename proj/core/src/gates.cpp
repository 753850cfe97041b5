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

#include "ionscatter/gates.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include "ionscatter/constants.hpp"
#include "ionscatter/errors.hpp"

namespace ionscatter {

namespace k = constants;

std::string to_string(EtaConvention c) { return c == EtaConvention::eq_eta ? "eq" : "table2"; }
std::string to_string(GateKind g) { return g == GateKind::one_qubit ? "1q" : "2q"; }
std::string to_string(Side s) { return s == Side::red ? "red" : "blue"; }

std::vector<std::string> TrapConfig::validate() const {
  std::vector<std::string> out;
  if (!(omega_trap > 0)) out.push_back("trap frequency must be positive");
  if (!(mode_participation > 0 && mode_participation <= 1)) out.push_back("mode participation must be in (0, 1]");
  if (K < 1) out.push_back("loop count K must be a positive integer");
  return out;
}

double ground_state_spread(double mass, double omega_trap) { return std::sqrt(k::hbar / (2.0 * mass * omega_trap)); }

double lamb_dicke(double omega_L, double z0, const TrapConfig& trap, EtaConvention convention) {
  const double eq = 2.0 * (omega_L / k::c) * z0 * trap.mode_participation;
  return convention == EtaConvention::eq_eta ? eq : eq / std::sqrt(2.0);
}

double lamb_dicke(const ScatteringEngine& engine, double delta, const TrapConfig& trap, EtaConvention convention) {
  const double wL = engine.model().kind == ModelKind::full ? engine.omega_L(delta) : engine.omega_Pi();
  return lamb_dicke(wL, ground_state_spread(engine.species().mass, trap.omega_trap), trap, convention);
}

double gate_time_1q(double omega_R) {
  if (omega_R == 0.0) throw DomainError("zero Rabi frequency");
  return k::pi / (2.0 * std::abs(omega_R));
}

double gate_time_2q(double omega_R, double eta, int K) {
  if (omega_R == 0.0) throw DomainError("zero Rabi frequency");
  if (!(eta > 0)) throw DomainError("Lamb-Dicke parameter must be positive");
  return k::pi * std::sqrt(static_cast<double>(K)) / (2.0 * std::sqrt(2.0) * std::abs(omega_R) * eta);
}

double recoil_bound_constant() { return 3.0 / 8.0 + 1.0 / (2.0 * std::sqrt(2.0)); }

namespace {

GateErrorReport base_report(const ScatteringEngine& engine, const BeamConfig& beams, double delta) {
  GateErrorReport r;
  const ScatteringTotals t = engine.totals(delta, beams);
  r.gamma_raman = t.raman();
  r.gamma_rayleigh = t.rayleigh;
  r.rho = t.total() > 0 ? t.raman() / t.total() : 0.0;
  r.omega_R = rabi_frequency(engine, beams, delta).omega_R;
  return r;
}

}  // namespace

GateErrorReport error_1q(const ScatteringEngine& engine, const BeamConfig& beams, double delta) {
  GateErrorReport r = base_report(engine, beams, delta);
  r.tau = gate_time_1q(r.omega_R);
  r.p_raman = r.gamma_raman * r.tau;
  r.regime_invalid = r.p_raman > 1.0;
  return r;
}

GateErrorReport error_2q(const ScatteringEngine& engine, const BeamConfig& beams, double delta,
                         const TrapConfig& trap, EtaConvention convention) {
  GateErrorReport r = base_report(engine, beams, delta);
  r.eta = lamb_dicke(engine, delta, trap, convention);
  r.tau = gate_time_2q(r.omega_R, r.eta, trap.K);
  // Two ions and two beams per ion: the single-ion rate enters four times.
  r.p_raman = 4.0 * r.gamma_raman * r.tau;
  const double p_elastic = 4.0 * r.gamma_rayleigh * r.tau;
  r.p_rayleigh_recoil_bound = p_elastic * r.eta * r.eta * recoil_bound_constant();
  r.regime_invalid = r.p_raman > 1.0 || p_elastic > 1.0;
  return r;
}

GateErrorReport gate_error(const ScatteringEngine& engine, const BeamConfig& beams, double delta,
                           const TrapConfig& trap, GateKind gate, EtaConvention convention) {
  return gate == GateKind::one_qubit ? error_1q(engine, beams, delta)
                                     : error_2q(engine, beams, delta, trap, convention);
}

double rayleigh_recoil_bound(const ScatteringEngine& engine, const BeamConfig& beams, double delta,
                             const TrapConfig& trap, EtaConvention convention) {
  return error_2q(engine, beams, delta, trap, convention).p_rayleigh_recoil_bound;
}

double reporting_origin(const ScatteringEngine& engine, Side side) {
  if (side == Side::red && engine.qubit().spec.encoding == Encoding::g) return -engine.omega_f();
  return 0.0;
}

std::pair<double, double> search_range(const ScatteringEngine& engine, Side side) {
  const double origin = reporting_origin(engine, side);
  if (side == Side::red) return {origin, -engine.omega_Pi() * (1.0 - 1e-9)};
  double far = engine.omega_Pi();
  for (double p : engine.poles()) {
    if (p > 1e-9 * engine.omega_Pi()) far = std::min(far, p * (1.0 - 1e-9));
  }
  return {origin, far};
}

namespace {

constexpr double kFirstStep = k::two_pi * 0.1 * k::THz;
constexpr double kGrowth = 1.25;

double sign_of(double x) { return x < 0 ? -1.0 : 1.0; }

}  // namespace

ThresholdResult threshold_detuning(const ScatteringEngine& engine, const BeamConfig& beams, const TrapConfig& trap,
                                   double target, Side side, GateKind gate, EtaConvention convention) {
  if (!(target > 0)) throw DomainError("target error must be positive");
  const auto [origin, far] = search_range(engine, side);
  const double dir = side == Side::red ? -1.0 : 1.0;
  const double x_max = std::abs(far - origin);
  auto delta_at = [&, origin = origin](double x) { return origin + dir * x; };
  auto error_at = [&](double x) { return gate_error(engine, beams, delta_at(x), trap, gate, convention).p_raman; };

  ThresholdResult res;
  double lo = 0.0, hi = 0.0;
  double best = std::numeric_limits<double>::infinity(), best_at = 0.0;
  double x = std::min(kFirstStep, 0.5 * x_max);
  double e = error_at(x);
  if (e <= target) {
    // Already below target: walk back toward the resonance to bracket the crossing.
    hi = x;
    lo = x;
    for (int n = 0; n < 60; ++n) {
      lo *= 0.5;
      if (error_at(lo) > target) break;
    }
    if (error_at(lo) <= target) {
      throw NoSolutionError("error stays below target down to the resonance", error_at(lo), delta_at(lo));
    }
  } else {
    double prev_x = x;
    double prev_omega = rabi_frequency(engine, beams, delta_at(x)).omega_R;
    bool found = false;
    best = e;
    best_at = delta_at(x);
    while (true) {
      double nx = x * kGrowth;
      if (nx >= x_max) {
        if (x >= x_max * (1 - 1e-12)) break;
        nx = x_max;
      }
      prev_x = x;
      x = nx;
      e = error_at(x);
      const double omega = rabi_frequency(engine, beams, delta_at(x)).omega_R;
      if (sign_of(omega) != sign_of(prev_omega)) res.rabi_zeros.push_back(delta_at(0.5 * (x + prev_x)));
      prev_omega = omega;
      if (e < best) {
        best = e;
        best_at = delta_at(x);
      }
      if (e <= target) {
        lo = prev_x;
        hi = x;
        found = true;
        break;
      }
    }
    if (!found) {
      std::ostringstream msg;
      msg << "error " << target << " not reached on the " << to_string(side) << " side; smallest error " << best
          << " at detuning " << best_at / (k::two_pi * k::THz) << " THz from P3/2";
      throw NoSolutionError(msg.str(), best, best_at);
    }
  }

  auto f = [&](double xx) { return std::log(error_at(xx) / target); };
  boost::uintmax_t iters = 200;
  auto tol = [](double a, double b) { return std::abs(a - b) <= 1e-13 * std::max(std::abs(a), std::abs(b)); };
  auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, tol, iters);
  const double fa = std::abs(f(a)), fb = std::abs(f(b));
  const double xs = fa < fb ? a : b;
  res.delta = delta_at(xs);
  res.reported_delta = res.delta - origin;
  res.report = gate_error(engine, beams, res.delta, trap, gate, convention);
  res.error = res.report.p_raman;
  res.wavelength = k::two_pi * k::c / engine.omega_L(res.delta);
  return res;
}

ErrorMinimum minimum_error(const ScatteringEngine& engine, const BeamConfig& beams, const TrapConfig& trap, Side side,
                           GateKind gate, EtaConvention convention) {
  const auto [origin, far] = search_range(engine, side);
  const double dir = side == Side::red ? -1.0 : 1.0;
  const double x_max = std::abs(far - origin);
  const double x_min = std::min(k::two_pi * 0.01 * k::THz, 1e-3 * x_max);
  auto error_at_log = [&, origin = origin](double lx) {
    return gate_error(engine, beams, origin + dir * std::exp(lx), trap, gate, convention).p_raman;
  };
  const int n = 240;
  const double l0 = std::log(x_min), l1 = std::log(x_max);
  int best_n = 0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> grid(n + 1);
  for (int j = 0; j <= n; ++j) {
    grid[j] = l0 + (l1 - l0) * j / n;
    const double e = error_at_log(grid[j]);
    if (e < best) {
      best = e;
      best_n = j;
    }
  }
  ErrorMinimum out;
  out.interior = best_n > 0 && best_n < n;
  if (out.interior) {
    boost::uintmax_t iters = 200;
    auto [lx, e] = boost::math::tools::brent_find_minima(error_at_log, grid[best_n - 1], grid[best_n + 1], 52, iters);
    out.delta = origin + dir * std::exp(lx);
    out.error = e;
  } else {
    out.delta = origin + dir * std::exp(grid[best_n]);
    out.error = best;
  }
  return out;
}

}  // namespace ionscatter
