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

#ifndef IONSCATTER_SPECIES_HPP
#define IONSCATTER_SPECIES_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ionscatter/angular.hpp"

namespace ionscatter {

/// One fine-structure manifold.
struct LevelSpec {
  std::string label;
  HalfInt L;
  HalfInt J;
  HalfInt S = HalfInt::half(1);
  /// Angular frequency above the S1/2 manifold mean, rad/s.
  double energy = 0.0;
  /// Magnetic dipole and electric quadrupole hyperfine constants, Hz.
  std::optional<double> hyperfine_A;
  std::optional<double> hyperfine_B;
  /// Seconds.
  std::optional<double> lifetime;
  std::optional<double> lande_gJ;
  /// Marks manifolds beyond the lowest S, P, D set.
  bool higher = false;

  /// g_J from the file, else the LS-coupling value with the free-electron spin g factor.
  double gJ() const;
};

/// Electric dipole line between two manifolds.
struct TransitionSpec {
  std::string upper;
  std::string lower;
  /// Reduced orbital element <L_l||r||L_u> in Bohr radii, normalized so that
  /// mu = R sqrt((2J_l+1)(2L_l+1)) |{L_l J_l S; J_u L_u 1}|.
  double reduced_element = 0.0;
  /// Partial decay rate upper -> lower, rad/s.
  std::optional<double> decay_rate;
  std::optional<double> branching_ratio;
  /// Relative sign of the radial integral; +1 unless the file says otherwise.
  int radial_sign = 1;
};

struct HyperfineState {
  std::string level;
  HalfInt F;
  HalfInt mF;
  bool operator==(const HyperfineState&) const = default;
  std::string str() const;
};

enum class Encoding { g, m };

struct QubitSpec {
  Encoding encoding = Encoding::g;
  HyperfineState state0;
  HyperfineState state1;
  /// Tesla. Absent means: search for the clock point (m) or use zero field (g).
  std::optional<double> clock_field;
};

struct SpeciesData {
  std::string name;
  /// kg.
  double mass = 0.0;
  double mass_amu = 0.0;
  HalfInt nuclear_spin;
  /// Nuclear g factor in units of the Bohr magneton, enters as +g_I m_I mu_B B.
  double nuclear_g = 0.0;
  std::vector<LevelSpec> levels;
  std::vector<TransitionSpec> transitions;
  std::vector<QubitSpec> qubits;
  bool includes_higher_levels = false;

  const LevelSpec& level(const std::string& label) const;
  const LevelSpec* find_level(const std::string& label) const;
  int level_index(const std::string& label) const;
  /// The transition joining two manifolds in either order, or nullptr.
  const TransitionSpec* find_transition(const std::string& a, const std::string& b) const;
  const QubitSpec& qubit(Encoding enc) const;
  bool has_qubit(Encoding enc) const;
};

std::string to_string(Encoding enc);
Encoding parse_encoding(const std::string& text);

/// Reads and validates a species JSON document. Throws ParseError, ValidationError or IoError.
SpeciesData load_species(const std::filesystem::path& path);
/// Same, from an in-memory document; `origin` names it in diagnostics.
SpeciesData parse_species(const std::string& json_text, const std::string& origin = "<memory>");
/// Parses without running the invariant checks.
SpeciesData parse_species_unchecked(const std::string& json_text, const std::string& origin = "<memory>");
std::string serialize_species(const SpeciesData& data);

/// Empty iff every invariant holds.
std::vector<std::string> validate_species(const SpeciesData& data);

/// Field-for-field comparison, with doubles equal to within `rel_tol`.
bool equivalent(const SpeciesData& a, const SpeciesData& b, double rel_tol = 1e-14);

/// Datasets compiled into the library.
std::vector<std::string> builtin_species_names();
std::optional<std::string> builtin_species_json(const std::string& name);
SpeciesData builtin_species(const std::string& name);
/// A builtin name (case-insensitive) or a path to a JSON file.
SpeciesData resolve_species(const std::string& name_or_path);

/// All |F, mF> sublevels of a manifold, ordered by F then mF.
std::vector<HyperfineState> hyperfine_sublevels(const SpeciesData& data, const std::string& level);

}  // namespace ionscatter

#endif
