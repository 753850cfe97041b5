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
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>

#include "commands.hpp"
#include "ionscatter/constants.hpp"
#include "reference.hpp"

namespace ionscatter::cli {

namespace k = constants;

namespace {

constexpr double kGauss = 1e-4;

struct Entry {
  std::string species;
  std::string quantity;
  double computed = 0.0;
  std::optional<double> reference;
};

bool selected(const std::vector<std::string>& filter, const std::string& name) {
  return filter.empty() || std::find(filter.begin(), filter.end(), name) != filter.end();
}

void table1_rows(const Table1Row& ref, std::vector<Entry>& out) {
  const SpeciesData s = resolve_species(ref.species);
  const ScatteringEngine e(s, make_dressed_qubit(s, Encoding::g), ModelVariant::full(false));
  out.push_back({s.name, "gamma_P3/2 [MHz]", e.gamma_P() / k::two_pi / 1e6, ref.gamma_p32_mhz});
  if (const LevelSpec* d = s.find_level("D5/2"); d && d->lifetime) {
    out.push_back({s.name, "tau_D5/2 [s]", *d->lifetime, ref.tau_d52_s});
  }
  out.push_back({s.name, "omega_f [THz]", e.omega_f() / k::two_pi / k::THz, ref.omega_f_thz});
  const QubitSpec& g = s.qubit(Encoding::g);
  const double bg = g.clock_field.value_or(0.0);
  out.push_back({s.name, "g omega_0 [GHz]", qubit_frequency(s, g, bg) / 1e9, ref.g_omega0_ghz});
  out.push_back({s.name, "g curvature [kHz/G^2]", curvature_at(s, g, bg, 1e-6) * kGauss * kGauss / 1e3,
                 ref.g_curvature_khz_g2});
  if (!s.has_qubit(Encoding::m)) return;
  const QubitSpec& m = s.qubit(Encoding::m);
  const double bm = m.clock_field ? *m.clock_field : clock_point(s, m);
  out.push_back({s.name, "m clock field [G]", std::abs(bm) / kGauss, ref.m_clock_g});
  out.push_back({s.name, "m omega_0 [GHz]", qubit_frequency(s, m, bm) / 1e9, ref.m_omega0_ghz});
  out.push_back({s.name, "m curvature [kHz/G^2]", curvature_at(s, m, bm, 1e-6) * kGauss * kGauss / 1e3,
                 ref.m_curvature_khz_g2});
}

void table2_rows(const Table2Row& ref, std::vector<Entry>& out) {
  const SpeciesData s = resolve_species(ref.species);
  const Encoding enc = ref.encoding == 'g' ? Encoding::g : Encoding::m;
  const std::string tag = s.name + " " + ref.encoding;
  const ScatteringEngine e(s, make_dressed_qubit(s, enc), ModelVariant::full(false));
  const BeamConfig beams = BeamConfig::raman_pair(enc, 1.0);
  const TrapConfig trap;
  out.push_back({tag, "eta (table2, at resonance)", lamb_dicke(e, 0.0, trap, EtaConvention::table2), ref.eta});
  const ThresholdResult t =
      threshold_detuning(e, beams, trap, 1e-4, Side::red, GateKind::two_qubit, EtaConvention::eq_eta);
  out.push_back({tag, "delta at 1e-4 [THz]", t.reported_delta / k::two_pi / k::THz, ref.delta_thz});
  out.push_back({tag, "wavelength [nm]", t.wavelength * 1e9, ref.wavelength_nm});
  const PowerReport p = power_2q(e, beams, t.delta, 10e-6, 20e-6, trap, EtaConvention::table2);
  out.push_back({tag, "power, 10 us gate [W]", p.total_power, ref.power_w});
}

void print(const std::vector<Entry>& rows, std::ostream& os) {
  char line[256];
  std::snprintf(line, sizeof line, "%-9s %-28s %14s %12s %9s\n", "species", "quantity", "computed", "ref", "dev");
  os << line;
  for (const auto& r : rows) {
    const std::string ref = r.reference ? format_number(*r.reference, 6) : "-";
    const std::string dev =
        r.reference && *r.reference != 0.0 ? format_number(100.0 * (r.computed / *r.reference - 1.0), 3) + "%" : "-";
    std::snprintf(line, sizeof line, "%-9s %-28s %14s %12s %9s\n", r.species.c_str(), r.quantity.c_str(),
                  format_number(r.computed, 6).c_str(), ref.c_str(), dev.c_str());
    os << line;
  }
}

void write_csv(const std::vector<Entry>& rows, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << "species,quantity,computed,reference,rel_dev\n";
  for (const auto& r : rows) {
    f << r.species << "," << r.quantity << "," << format_number(r.computed) << ",";
    if (r.reference) {
      f << format_number(*r.reference) << ",";
      if (*r.reference != 0.0) f << format_number(r.computed / *r.reference - 1.0);
    } else {
      f << ",";
    }
    f << "\n";
  }
  if (!f.flush()) throw IoError("write failed: " + path);
}

}  // namespace

int cmd_tables(const std::string& which, const std::vector<std::string>& species, const std::string& out,
               std::ostream& os) {
  std::vector<Entry> rows;
  for (const auto& name : species) {
    if (!find_table1(name)) resolve_species(name);
  }
  if (which == "table1") {
    for (const auto& r : table1_reference()) {
      if (selected(species, r.species)) table1_rows(r, rows);
    }
  } else if (which == "table2") {
    os << "red side, 2q gate, target 1e-4, full model without higher levels; delta from eq_eta, power from table2 eta\n";
    for (const auto& r : table2_reference()) {
      if (selected(species, r.species)) table2_rows(r, rows);
    }
  } else {
    throw ValidationError({"unknown table '" + which + "' (expected table1 or table2)"});
  }
  print(rows, os);
  if (!out.empty()) write_csv(rows, out);
  return kOk;
}

}  // namespace ionscatter::cli
