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


#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <ostream>
#include <thread>
#include <vector>

#include "commands.hpp"
#include "ionscatter/constants.hpp"

namespace ionscatter::cli {

namespace k = constants;

const std::vector<std::string>& scan_columns() {
  static const std::vector<std::string> cols{"delta_THz", "laser_wavelength_nm", "error_1q",       "error_2q",
                                             "eta",       "tau_2q_us",           "power_2q_W",     "rayleigh_bound",
                                             "model"};
  return cols;
}

namespace {

constexpr double kThz = k::two_pi * k::THz;

struct GridPoint {
  double reported = 0.0;
  bool pole = false;
};

std::vector<double> make_grid(double a, double b, int n, bool log_spacing) {
  if (a == b || n == 1) return {a};
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    if (log_spacing) {
      const double s = a < 0 ? -1.0 : 1.0;
      g[static_cast<std::size_t>(i)] = s * std::exp(std::log(std::abs(a)) + t * (std::log(std::abs(b)) - std::log(std::abs(a))));
    } else {
      g[static_cast<std::size_t>(i)] = a + t * (b - a);
    }
  }
  return g;
}

void check_range(const ScanOptions& opt) {
  std::vector<std::string> bad;
  if (opt.points < 1) bad.push_back("points must be at least 1");
  if (!std::isfinite(opt.from_thz) || !std::isfinite(opt.to_thz)) bad.push_back("range must be finite");
  const double lo = std::min(opt.from_thz, opt.to_thz), hi = std::max(opt.from_thz, opt.to_thz);
  if (opt.side == Side::red && hi > 0) bad.push_back("red-side range must be <= 0 THz from its origin");
  if (opt.side == Side::blue && lo < 0) bad.push_back("blue-side range must be >= 0 THz from its origin");
  if (opt.log_spacing && lo <= 0 && hi >= 0) bad.push_back("log spacing needs a range that excludes 0");
  if (!bad.empty()) throw ValidationError(bad);
}

ScanRow evaluate(const Setup& st, const CommonOptions& c, const TrapConfig& trap, double origin, double reported) {
  ScanRow r;
  r.delta_thz = reported;
  const double delta = reported * kThz + origin;
  try {
    const GateErrorReport e1 = gate_error(st.engine, st.beams, delta, trap, GateKind::one_qubit, c.eta);
    const GateErrorReport e2 = gate_error(st.engine, st.beams, delta, trap, GateKind::two_qubit, c.eta);
    const PowerReport p = power_2q(st.engine, st.beams, delta, c.gate_time(), c.waist(), trap, c.eta);
    r.wavelength_nm = k::c / (st.engine.omega_L(delta) / k::two_pi) * 1e9;
    r.error_1q = e1.p_raman;
    r.error_2q = e2.p_raman;
    r.eta = e2.eta;
    r.tau_2q_us = e2.tau * 1e6;
    r.power_2q_w = p.total_power;
    r.rayleigh_bound = e2.p_rayleigh_recoil_bound;
  } catch (const PoleError&) {
    r.gap = true;
  }
  for (double v : {r.wavelength_nm, r.error_1q, r.error_2q, r.eta, r.tau_2q_us, r.power_2q_w, r.rayleigh_bound}) {
    if (!std::isfinite(v)) r.gap = true;
  }
  return r;
}

}  // namespace

std::vector<ScanRow> scan(const ScanOptions& opt) {
  check_range(opt);
  const Setup st = make_setup(opt.common);
  const TrapConfig trap = opt.common.trap();
  const double origin = reporting_origin(st.engine, opt.side);
  const double floor_thz = (-st.engine.omega_Pi() - origin) / kThz;
  if (std::min(opt.from_thz, opt.to_thz) <= floor_thz) {
    throw ValidationError({"range reaches zero laser frequency at " + format_number(floor_thz, 6) + " THz"});
  }

  std::vector<GridPoint> grid;
  for (double x : make_grid(opt.from_thz, opt.to_thz, opt.points, opt.log_spacing)) grid.push_back({x, false});
  std::sort(grid.begin(), grid.end(), [](const GridPoint& a, const GridPoint& b) { return a.reported < b.reported; });
  const double lo = grid.front().reported, hi = grid.back().reported;
  for (double p : st.engine.poles()) {
    const double rp = (p - origin) / kThz;
    if (rp < lo || rp > hi) continue;
    auto it = std::find_if(grid.begin(), grid.end(), [&](const GridPoint& g) { return g.reported == rp; });
    if (it != grid.end()) {
      it->pole = true;
    } else if (grid.size() > 1) {
      grid.insert(std::lower_bound(grid.begin(), grid.end(), rp,
                                   [](const GridPoint& g, double v) { return g.reported < v; }),
                  GridPoint{rp, true});
    }
  }

  std::vector<ScanRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      if (grid[i].pole) {
        rows[i].delta_thz = grid[i].reported;
        rows[i].gap = true;
      } else {
        rows[i] = evaluate(st, opt.common, trap, origin, grid[i].reported);
      }
    }
  };
  unsigned n = opt.threads > 0 ? static_cast<unsigned>(opt.threads) : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(grid.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
    work();
  }
  return rows;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows, ModelKind model) {
  const auto& cols = scan_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  const char* m = model == ModelKind::full ? "full" : "simplified";
  for (const auto& r : rows) {
    os << format_number(r.delta_thz);
    if (r.gap) {
      os << ",,,,,,,," << m << "\n";
      continue;
    }
    for (double v : {r.wavelength_nm, r.error_1q, r.error_2q, r.eta, r.tau_2q_us, r.power_2q_w, r.rayleigh_bound}) {
      os << "," << format_number(v);
    }
    os << "," << m << "\n";
  }
}

int cmd_scan(const ScanOptions& opt, std::ostream& log) {
  const std::vector<ScanRow> rows = scan(opt);
  if (opt.common.out.empty()) {
    write_scan_csv(log, rows, opt.common.model);
    return kOk;
  }
  std::ofstream f(opt.common.out, std::ios::binary);
  if (!f) throw IoError("cannot open " + opt.common.out + " for writing");
  write_scan_csv(f, rows, opt.common.model);
  f.flush();
  if (!f) throw IoError("write failed: " + opt.common.out);
  return kOk;
}

}  // namespace ionscatter::cli
