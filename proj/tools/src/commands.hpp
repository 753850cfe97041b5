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


#ifndef IONSCATTER_TOOLS_COMMANDS_HPP
#define IONSCATTER_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ionscatter/gates.hpp"
#include "ionscatter/power.hpp"

namespace ionscatter::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kNoSolution = 3, kIo = 4 };

struct CommonOptions {
  std::string species = "Ca43";
  Encoding encoding = Encoding::g;
  GateKind gate = GateKind::two_qubit;
  ModelKind model = ModelKind::full;
  bool higher_levels = true;
  EtaConvention eta = EtaConvention::eq_eta;
  double trap_mhz = 5.0;
  double waist_um = 20.0;
  double gate_time_us = 10.0;
  std::string out;

  TrapConfig trap() const;
  ModelVariant variant() const;
  double waist() const { return waist_um * 1e-6; }
  double gate_time() const { return gate_time_us * 1e-6; }
};

/// A species with its dressed qubit and engine, built once per command.
struct Setup {
  SpeciesData species;
  ScatteringEngine engine;
  BeamConfig beams;
};
Setup make_setup(const CommonOptions& opt);

struct ScanOptions {
  CommonOptions common;
  Side side = Side::red;
  /// Reported detunings in THz (g red side relative to P1/2, otherwise P3/2).
  double from_thz = -1.0;
  double to_thz = -100.0;
  int points = 200;
  bool log_spacing = false;
  int threads = 0;
};

struct ScanRow {
  double delta_thz = 0.0;
  double wavelength_nm = 0.0;
  double error_1q = 0.0;
  double error_2q = 0.0;
  double eta = 0.0;
  double tau_2q_us = 0.0;
  double power_2q_w = 0.0;
  double rayleigh_bound = 0.0;
  bool gap = false;
};

const std::vector<std::string>& scan_columns();
std::vector<ScanRow> scan(const ScanOptions& opt);
void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows, ModelKind model);
int cmd_scan(const ScanOptions& opt, std::ostream& log);

struct ThresholdOptions {
  CommonOptions common;
  Side side = Side::red;
  double target = 1e-4;
};
int cmd_threshold(const ThresholdOptions& opt, std::ostream& os);

int cmd_tables(const std::string& which, const std::vector<std::string>& species, const std::string& out,
               std::ostream& os);

int cmd_limits(const std::vector<std::string>& species, std::ostream& os);

int cmd_validate(const std::string& path, std::ostream& os);

/// Runs a command body, mapping library exceptions to exit codes and messages on err.
template <class F>
int guarded(F&& body, std::ostream& err);

std::string format_number(double value, int digits = 10);

}  // namespace ionscatter::cli

#include "commands_inl.hpp"

#endif
