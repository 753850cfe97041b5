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


#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace cli = ionscatter::cli;
using ionscatter::EtaConvention;
using ionscatter::GateKind;
using ionscatter::ModelKind;
using ionscatter::Side;

namespace {

// Maps names to values; the help line lists the names instead of the underlying map.
template <typename T>
CLI::Validator choice(std::map<std::string, T> names) {
  return CLI::CheckedTransformer(std::move(names)).description("");
}

void add_common(CLI::App* sub, cli::CommonOptions& o) {
  sub->add_option("--species", o.species, "builtin species name or JSON file")->capture_default_str();
  sub->add_option("--encoding", o.encoding, "qubit encoding")
      ->option_text("{g,m} [g]")
      ->transform(choice(
          std::map<std::string, ionscatter::Encoding>{{"g", ionscatter::Encoding::g}, {"m", ionscatter::Encoding::m}}));
  sub->add_option("--gate", o.gate, "gate")
      ->option_text("{1q,2q} [2q]")
      ->transform(choice(
          std::map<std::string, GateKind>{{"1q", GateKind::one_qubit}, {"2q", GateKind::two_qubit}}));
  sub->add_option("--model", o.model, "scattering model")
      ->option_text("{full,simplified} [full]")
      ->transform(choice(
          std::map<std::string, ModelKind>{{"full", ModelKind::full}, {"simplified", ModelKind::simplified}}));
  sub->add_option("--higher-levels", o.higher_levels, "include manifolds above the lowest P, D set")
      ->option_text("{on,off} [on]")
      ->transform(choice(std::map<std::string, bool>{{"on", true}, {"off", false}}));
  sub->add_option("--eta-convention", o.eta, "Lamb-Dicke convention")
      ->option_text("{eq,table2} [eq]")
      ->transform(choice(
          std::map<std::string, EtaConvention>{{"eq", EtaConvention::eq_eta}, {"table2", EtaConvention::table2}}));
  sub->add_option("--trap-mhz", o.trap_mhz, "trap frequency, MHz")->capture_default_str();
  sub->add_option("--waist-um", o.waist_um, "beam waist, um")->capture_default_str();
  sub->add_option("--gate-time-us", o.gate_time_us, "gate time for the power column, us")->capture_default_str();
  sub->add_option("--out", o.out, "output file (default: standard output)");
}

void add_side(CLI::App* sub, Side& side) {
  sub->add_option("--side", side, "detuning side")
      ->option_text("{red,blue} [red]")
      ->transform(choice(std::map<std::string, Side>{{"red", Side::red}, {"blue", Side::blue}}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Raman and Rayleigh scattering errors for trapped-ion qubit gates"};
  app.require_subcommand(1);

  cli::ScanOptions scan;
  auto* s = app.add_subcommand("scan", "error, power and Rayleigh bound over a detuning range, as CSV");
  add_common(s, scan.common);
  add_side(s, scan.side);
  s->add_option("--from-thz", scan.from_thz, "range start, THz from the reporting origin")->capture_default_str();
  s->add_option("--to-thz", scan.to_thz, "range end, THz from the reporting origin")->capture_default_str();
  s->add_option("--points", scan.points, "grid points")->capture_default_str();
  s->add_flag("--log", scan.log_spacing, "logarithmic grid spacing");
  s->add_option("--threads", scan.threads, "worker threads (0: hardware concurrency)");

  cli::ThresholdOptions thr;
  auto* t = app.add_subcommand("threshold", "detuning where the Raman error falls to a target");
  add_common(t, thr.common);
  add_side(t, thr.side);
  t->add_option("--target", thr.target, "target error")->capture_default_str();

  std::string which;
  std::vector<std::string> species;
  std::string out;
  auto* tb = app.add_subcommand("tables", "computed hyperfine and gate tables next to reference values");
  tb->add_option("which", which, "table1 or table2")->required();
  tb->add_option("--species", species, "restrict to these species");
  tb->add_option("--out", out, "CSV output file");

  std::vector<std::string> lim_species = ionscatter::builtin_species_names();
  auto* lm = app.add_subcommand("limits", "classical limits of the elastic cross-section");
  lm->add_option("--species", lim_species, "species to check");

  std::string path;
  auto* v = app.add_subcommand("validate", "load and validate a species file");
  v->add_option("path", path, "species JSON file or builtin name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kValidation;
  }

  if (*s) return cli::guarded([&] { return cli::cmd_scan(scan, std::cout); }, std::cerr);
  if (*t) return cli::guarded([&] { return cli::cmd_threshold(thr, std::cout); }, std::cerr);
  if (*tb) return cli::guarded([&] { return cli::cmd_tables(which, species, out, std::cout); }, std::cerr);
  if (*lm) return cli::guarded([&] { return cli::cmd_limits(lim_species, std::cout); }, std::cerr);
  return cli::guarded([&] { return cli::cmd_validate(path, std::cout); }, std::cerr);
}
