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


#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "ionscatter/constants.hpp"
#include "ionscatter/limits.hpp"

namespace ionscatter::cli {

namespace k = constants;

TrapConfig CommonOptions::trap() const {
  TrapConfig t;
  t.omega_trap = k::two_pi * trap_mhz * 1e6;
  return t;
}

ModelVariant CommonOptions::variant() const {
  return model == ModelKind::full ? ModelVariant::full(higher_levels) : ModelVariant::simplified();
}

Setup make_setup(const CommonOptions& opt) {
  SpeciesData s = resolve_species(opt.species);
  if (!s.has_qubit(opt.encoding)) {
    throw DataError(s.name + " defines no " + to_string(opt.encoding) + " qubit");
  }
  if (auto bad = opt.trap().validate(); !bad.empty()) throw ValidationError(bad);
  if (!(opt.waist_um > 0) || !(opt.gate_time_us > 0)) {
    throw ValidationError({"waist and gate time must be positive"});
  }
  DressedQubit q = make_dressed_qubit(s, opt.encoding);
  ScatteringEngine engine(s, q, opt.variant());
  BeamConfig beams = BeamConfig::raman_pair(opt.encoding, 1.0, opt.waist());
  return Setup{std::move(s), std::move(engine), std::move(beams)};
}

std::string format_number(double value, int digits) {
  if (value == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

namespace {

double to_thz(double omega) { return omega / (k::two_pi * k::THz); }

std::string origin_name(const ScatteringEngine& e, Side side) {
  return reporting_origin(e, side) != 0.0 ? "P1/2" : "P3/2";
}

}  // namespace

int cmd_threshold(const ThresholdOptions& opt, std::ostream& os) {
  if (!(opt.target > 0)) throw ValidationError({"target error must be positive"});
  Setup st = make_setup(opt.common);
  const auto& c = opt.common;
  const TrapConfig trap = c.trap();
  os << st.species.name << " " << to_string(c.encoding) << " qubit, " << to_string(c.gate) << " gate, "
     << to_string(opt.side) << " side, target " << format_number(opt.target, 4) << ", model "
     << st.engine.model().str() << "\n";
  ThresholdResult t;
  try {
    t = threshold_detuning(st.engine, st.beams, trap, opt.target, opt.side, c.gate, c.eta);
  } catch (const NoSolutionError& e) {
    const ErrorMinimum m = minimum_error(st.engine, st.beams, trap, opt.side, c.gate, c.eta);
    const double origin = reporting_origin(st.engine, opt.side);
    os << "no detuning reaches " << format_number(opt.target, 4) << "\n";
    os << "smallest error " << format_number(m.error, 4) << " at "
       << format_number(to_thz(m.delta - origin), 6) << " THz from " << origin_name(st.engine, opt.side)
       << (m.interior ? "" : " (edge of the searched range)") << "\n";
    return kNoSolution;
  }
  PowerReport p = c.gate == GateKind::one_qubit
                      ? power_1q(st.engine, st.beams, t.delta, c.gate_time(), c.waist())
                      : power_2q(st.engine, st.beams, t.delta, c.gate_time(), c.waist(), trap, c.eta);
  os << "detuning    " << format_number(to_thz(t.reported_delta), 6) << " THz from "
     << origin_name(st.engine, opt.side) << " (" << format_number(to_thz(t.delta), 6) << " THz from P3/2)\n";
  os << "wavelength  " << format_number(t.wavelength * 1e9, 6) << " nm\n";
  os << "error       " << format_number(t.error, 6) << "\n";
  os << "eta         " << format_number(t.report.eta, 6) << " (" << to_string(c.eta) << ")\n";
  os << "Rabi tau    " << format_number(t.report.tau * 1e6, 6) << " us\n";
  os << "power       " << format_number(p.total_power, 6) << " W for a " << format_number(c.gate_time_us, 6)
     << " us gate, " << format_number(c.waist_um, 6) << " um waist\n";
  for (double z : t.rabi_zeros) {
    os << "Rabi frequency changes sign near " << format_number(to_thz(z), 6) << " THz from P3/2\n";
  }
  return kOk;
}

int cmd_limits(const std::vector<std::string>& species, std::ostream& os) {
  char line[256];
  std::snprintf(line, sizeof line, "%-8s %-3s %9s %12s %12s %12s %12s %12s\n", "species", "V", "trk", "blue/thom",
                "trk^2", "red-w4-dev", "red/alpha", "alpha0[au]");
  os << line;
  const double au_pol = 4.0 * k::pi * k::epsilon0 * k::a0 * k::a0 * k::a0;
  for (const auto& name : species) {
    SpeciesData s = resolve_species(name);
    const HyperfineState i = s.qubit(Encoding::g).state0;
    const auto [lo, hi] = transition_frequency_range(s, i);
    const double trk = trk_partial_sum(s, i);
    const double alpha0 = dc_polarizability(s, i);
    for (bool v : {true, false}) {
      const double blue = thomson_limit_check(s, i, 1000.0 * hi, v);
      const double w1 = 1e-3 * lo, w2 = 1e-2 * lo;
      const double s1 = elastic_cross_section(s, i, w1, v).sigma;
      const double s2 = elastic_cross_section(s, i, w2, v).sigma;
      const double law = (s2 / std::pow(w2, 4)) / (s1 / std::pow(w1, 4)) - 1.0;
      const double red = s1 / rayleigh_red_limit(alpha0, w1);
      std::snprintf(line, sizeof line, "%-8s %-3s %9.5f %12.6g %12.6g %12.3e %12.6g %12.6g\n", s.name.c_str(),
                    v ? "on" : "off", trk, blue, trk * trk, law, red, alpha0 / au_pol);
      os << line;
    }
  }
  return kOk;
}

int cmd_validate(const std::string& path, std::ostream& os) {
  SpeciesData s = resolve_species(path);
  os << s.name << ": " << s.levels.size() << " levels, " << s.transitions.size() << " transitions, "
     << s.qubits.size() << " qubit(s); valid\n";
  return kOk;
}

}  // namespace ionscatter::cli
