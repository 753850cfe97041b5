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

#include "ionscatter/species.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "builtin_data.hpp"
#include "ionscatter/constants.hpp"
#include "ionscatter/couplings.hpp"
#include "ionscatter/errors.hpp"

namespace ionscatter {

using nlohmann::json;
namespace k = constants;

namespace {

constexpr double kTHzToRad = k::two_pi * k::THz;
constexpr double kElectronSpinG = 2.00231930436;

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (size_t n = 0; n < items.size(); ++n) {
    if (n) out += sep;
    out += items[n];
  }
  return out;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return s;
}

// Collects field-level problems while walking the document.
class Reader {
 public:
  explicit Reader(std::string origin) : origin_(std::move(origin)) {}

  void fail(const std::string& where, const std::string& msg) { problems_.push_back(origin_ + ": " + where + ": " + msg); }
  bool ok() const { return problems_.empty(); }
  const std::vector<std::string>& problems() const { return problems_; }

  void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (!allowed.count(it.key())) fail(where + "." + it.key(), "unknown field");
    }
  }

  template <typename T>
  std::optional<T> get(const json& obj, const std::string& where, const std::string& key, bool required) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
      if (required) fail(where + "." + key, "missing required field");
      return std::nullopt;
    }
    try {
      if constexpr (std::is_same_v<T, int>) {
        if (!it->is_number_integer()) throw json::type_error::create(302, "expected an integer", nullptr);
      } else if constexpr (std::is_same_v<T, double>) {
        if (!it->is_number()) throw json::type_error::create(302, "expected a number", nullptr);
      } else if constexpr (std::is_same_v<T, bool>) {
        if (!it->is_boolean()) throw json::type_error::create(302, "expected a boolean", nullptr);
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!it->is_string()) throw json::type_error::create(302, "expected a string", nullptr);
      }
      return it->get<T>();
    } catch (const json::exception&) {
      fail(where + "." + key, std::string("wrong type (") + it->type_name() + ")");
      return std::nullopt;
    }
  }

 private:
  std::string origin_;
  std::vector<std::string> problems_;
};

HyperfineState read_state(Reader& r, const json& obj, const std::string& where) {
  HyperfineState s;
  if (!obj.is_object()) {
    r.fail(where, "expected an object");
    return s;
  }
  r.check_keys(obj, where, {"level", "F_2x", "mF_2x"});
  s.level = r.get<std::string>(obj, where, "level", true).value_or("");
  s.F = HalfInt::from_twice(r.get<int>(obj, where, "F_2x", true).value_or(0));
  s.mF = HalfInt::from_twice(r.get<int>(obj, where, "mF_2x", true).value_or(0));
  return s;
}

json write_state(const HyperfineState& s) {
  return json{{"level", s.level}, {"F_2x", s.F.twice()}, {"mF_2x", s.mF.twice()}};
}

std::pair<int, int> line_and_column(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t n = 0; n < std::min(byte, text.size()); ++n) {
    if (text[n] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

bool close(double a, double b, double rel_tol) {
  if (a == b) return true;
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

bool close(const std::optional<double>& a, const std::optional<double>& b, double rel_tol) {
  if (a.has_value() != b.has_value()) return false;
  return !a || close(*a, *b, rel_tol);
}

}  // namespace

double LevelSpec::gJ() const {
  if (lande_gJ) return *lande_gJ;
  const double j = J.value(), l = L.value(), s = S.value();
  if (j == 0.0) return 0.0;
  const double jj = j * (j + 1), ll = l * (l + 1), ss = s * (s + 1);
  return (jj - ss + ll) / (2 * jj) + kElectronSpinG * (jj + ss - ll) / (2 * jj);
}

std::string HyperfineState::str() const { return level + "|F=" + F.str() + ",mF=" + mF.str() + ">"; }

const LevelSpec* SpeciesData::find_level(const std::string& label) const {
  for (const auto& l : levels) {
    if (l.label == label) return &l;
  }
  return nullptr;
}

const LevelSpec& SpeciesData::level(const std::string& label) const {
  const LevelSpec* l = find_level(label);
  if (!l) throw DataError(name + ": no level " + label);
  return *l;
}

int SpeciesData::level_index(const std::string& label) const {
  for (size_t n = 0; n < levels.size(); ++n) {
    if (levels[n].label == label) return static_cast<int>(n);
  }
  return -1;
}

const TransitionSpec* SpeciesData::find_transition(const std::string& a, const std::string& b) const {
  for (const auto& t : transitions) {
    if ((t.upper == a && t.lower == b) || (t.upper == b && t.lower == a)) return &t;
  }
  return nullptr;
}

bool SpeciesData::has_qubit(Encoding enc) const {
  return std::any_of(qubits.begin(), qubits.end(), [&](const QubitSpec& q) { return q.encoding == enc; });
}

const QubitSpec& SpeciesData::qubit(Encoding enc) const {
  for (const auto& q : qubits) {
    if (q.encoding == enc) return q;
  }
  throw DataError(name + " has no " + to_string(enc) + " qubit");
}

std::string to_string(Encoding enc) { return enc == Encoding::g ? "g" : "m"; }

Encoding parse_encoding(const std::string& text) {
  if (text == "g") return Encoding::g;
  if (text == "m") return Encoding::m;
  throw std::invalid_argument("encoding must be g or m, got '" + text + "'");
}

SpeciesData parse_species_unchecked(const std::string& json_text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    auto [line, col] = line_and_column(json_text, err.byte);
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + err.what());
  }
  Reader r(origin);
  if (!doc.is_object()) throw ParseError(origin + ": top level must be an object");
  r.check_keys(doc, "$",
               {"name", "mass_amu", "nuclear_spin_2x", "nuclear_g", "levels", "transitions", "qubits", "notes"});

  SpeciesData d;
  d.name = r.get<std::string>(doc, "$", "name", true).value_or("");
  d.mass_amu = r.get<double>(doc, "$", "mass_amu", true).value_or(0.0);
  d.mass = d.mass_amu * k::amu;
  d.nuclear_spin = HalfInt::from_twice(r.get<int>(doc, "$", "nuclear_spin_2x", true).value_or(0));
  d.nuclear_g = r.get<double>(doc, "$", "nuclear_g", false).value_or(0.0);

  if (auto it = doc.find("levels"); it != doc.end() && it->is_array()) {
    for (size_t n = 0; n < it->size(); ++n) {
      const json& obj = (*it)[n];
      const std::string where = "levels[" + std::to_string(n) + "]";
      if (!obj.is_object()) {
        r.fail(where, "expected an object");
        continue;
      }
      r.check_keys(obj, where,
                   {"label", "L", "J_2x", "S_2x", "energy_THz", "hyperfine_A_THz", "hyperfine_B_THz", "lifetime_s",
                    "lande_gJ", "higher", "notes"});
      LevelSpec l;
      l.label = r.get<std::string>(obj, where, "label", true).value_or("");
      l.L = HalfInt::integer(r.get<int>(obj, where, "L", true).value_or(0));
      l.J = HalfInt::from_twice(r.get<int>(obj, where, "J_2x", true).value_or(0));
      l.S = HalfInt::from_twice(r.get<int>(obj, where, "S_2x", false).value_or(1));
      l.energy = r.get<double>(obj, where, "energy_THz", true).value_or(0.0) * kTHzToRad;
      if (auto a = r.get<double>(obj, where, "hyperfine_A_THz", false)) l.hyperfine_A = *a * k::THz;
      if (auto b = r.get<double>(obj, where, "hyperfine_B_THz", false)) l.hyperfine_B = *b * k::THz;
      l.lifetime = r.get<double>(obj, where, "lifetime_s", false);
      l.lande_gJ = r.get<double>(obj, where, "lande_gJ", false);
      l.higher = r.get<bool>(obj, where, "higher", false).value_or(false);
      d.levels.push_back(l);
    }
  } else {
    r.fail("$.levels", "missing required array");
  }

  if (auto it = doc.find("transitions"); it != doc.end() && it->is_array()) {
    for (size_t n = 0; n < it->size(); ++n) {
      const json& obj = (*it)[n];
      const std::string where = "transitions[" + std::to_string(n) + "]";
      if (!obj.is_object()) {
        r.fail(where, "expected an object");
        continue;
      }
      r.check_keys(obj, where,
                   {"upper", "lower", "reduced_element_a0", "decay_rate_THz", "branching_ratio", "radial_sign", "notes"});
      TransitionSpec t;
      t.upper = r.get<std::string>(obj, where, "upper", true).value_or("");
      t.lower = r.get<std::string>(obj, where, "lower", true).value_or("");
      t.reduced_element = r.get<double>(obj, where, "reduced_element_a0", true).value_or(0.0);
      if (auto g = r.get<double>(obj, where, "decay_rate_THz", false)) t.decay_rate = *g * kTHzToRad;
      t.branching_ratio = r.get<double>(obj, where, "branching_ratio", false);
      t.radial_sign = r.get<int>(obj, where, "radial_sign", false).value_or(1);
      if (t.radial_sign != 1 && t.radial_sign != -1) r.fail(where + ".radial_sign", "must be +1 or -1");
      d.transitions.push_back(t);
    }
  } else {
    r.fail("$.transitions", "missing required array");
  }

  if (auto it = doc.find("qubits"); it != doc.end()) {
    if (!it->is_array()) r.fail("$.qubits", "expected an array");
    for (size_t n = 0; it->is_array() && n < it->size(); ++n) {
      const json& obj = (*it)[n];
      const std::string where = "qubits[" + std::to_string(n) + "]";
      if (!obj.is_object()) {
        r.fail(where, "expected an object");
        continue;
      }
      r.check_keys(obj, where, {"encoding", "state0", "state1", "clock_field_gauss", "notes"});
      QubitSpec q;
      auto enc = r.get<std::string>(obj, where, "encoding", true).value_or("g");
      if (enc != "g" && enc != "m") r.fail(where + ".encoding", "must be \"g\" or \"m\"");
      q.encoding = enc == "m" ? Encoding::m : Encoding::g;
      q.state0 = read_state(r, obj.value("state0", json()), where + ".state0");
      q.state1 = read_state(r, obj.value("state1", json()), where + ".state1");
      if (auto bf = r.get<double>(obj, where, "clock_field_gauss", false)) q.clock_field = *bf * k::gauss;
      d.qubits.push_back(q);
    }
  }
  if (!r.ok()) throw ParseError(join(r.problems(), "\n"));
  d.includes_higher_levels = std::any_of(d.levels.begin(), d.levels.end(), [](const LevelSpec& l) { return l.higher; });
  return d;
}

SpeciesData parse_species(const std::string& json_text, const std::string& origin) {
  SpeciesData d = parse_species_unchecked(json_text, origin);
  auto diags = validate_species(d);
  if (!diags.empty()) {
    for (auto& msg : diags) msg = origin + ": " + msg;
    throw ValidationError(std::move(diags));
  }
  return d;
}

SpeciesData load_species(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open species file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return parse_species(buf.str(), path.string());
}

std::string serialize_species(const SpeciesData& d) {
  json doc;
  doc["name"] = d.name;
  doc["mass_amu"] = d.mass_amu;
  doc["nuclear_spin_2x"] = d.nuclear_spin.twice();
  if (d.nuclear_g != 0.0) doc["nuclear_g"] = d.nuclear_g;
  json levels = json::array();
  for (const auto& l : d.levels) {
    json o{{"label", l.label}, {"L", l.L.twice() / 2}, {"J_2x", l.J.twice()}, {"energy_THz", l.energy / kTHzToRad}};
    if (l.S.twice() != 1) o["S_2x"] = l.S.twice();
    if (l.hyperfine_A) o["hyperfine_A_THz"] = *l.hyperfine_A / k::THz;
    if (l.hyperfine_B) o["hyperfine_B_THz"] = *l.hyperfine_B / k::THz;
    if (l.lifetime) o["lifetime_s"] = *l.lifetime;
    if (l.lande_gJ) o["lande_gJ"] = *l.lande_gJ;
    if (l.higher) o["higher"] = true;
    levels.push_back(o);
  }
  doc["levels"] = levels;
  json trans = json::array();
  for (const auto& t : d.transitions) {
    json o{{"upper", t.upper}, {"lower", t.lower}, {"reduced_element_a0", t.reduced_element}};
    if (t.decay_rate) o["decay_rate_THz"] = *t.decay_rate / kTHzToRad;
    if (t.branching_ratio) o["branching_ratio"] = *t.branching_ratio;
    if (t.radial_sign != 1) o["radial_sign"] = t.radial_sign;
    trans.push_back(o);
  }
  doc["transitions"] = trans;
  json qubits = json::array();
  for (const auto& q : d.qubits) {
    json o{{"encoding", to_string(q.encoding)}, {"state0", write_state(q.state0)}, {"state1", write_state(q.state1)}};
    if (q.clock_field) o["clock_field_gauss"] = *q.clock_field / k::gauss;
    qubits.push_back(o);
  }
  if (!qubits.empty()) doc["qubits"] = qubits;
  return doc.dump(2);
}

std::vector<std::string> validate_species(const SpeciesData& d) {
  std::vector<std::string> out;
  if (d.name.empty()) out.push_back("name is empty");
  if (!(d.mass > 0)) out.push_back("mass must be positive");
  if (d.nuclear_spin.twice() < 0) out.push_back("nuclear spin must be non-negative");

  std::set<std::string> labels;
  for (const auto& l : d.levels) {
    const std::string where = "level " + l.label;
    if (!labels.insert(l.label).second) out.push_back(where + ": duplicate label");
    if (l.energy < 0) out.push_back(where + ": energy must be >= 0");
    if (l.L.twice() < 0 || l.J.twice() < 0 || l.S.twice() < 0) out.push_back(where + ": negative quantum number");
    if (l.J.twice() > l.L.twice() + l.S.twice() || l.J.twice() < std::abs(l.L.twice() - l.S.twice()) ||
        l.J.parity() != ((l.L.twice() + l.S.twice()) & 1)) {
      out.push_back(where + ": J = " + l.J.str() + " not reachable from L = " + l.L.str() + ", S = " + l.S.str());
    }
    if (l.lifetime && !(*l.lifetime > 0)) out.push_back(where + ": lifetime must be > 0");
  }
  for (const char* req : {"S1/2", "P1/2", "P3/2"}) {
    if (!labels.count(req)) out.push_back(std::string("missing required level ") + req);
  }
  if (d.has_qubit(Encoding::m)) {
    for (const char* req : {"D3/2", "D5/2"}) {
      if (!labels.count(req)) out.push_back(std::string("m-qubit species missing level ") + req);
    }
  }

  if (d.transitions.empty()) out.push_back("transition list is empty");
  double p32_branching = 0.0;
  bool p32_has_branching = false;
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& t : d.transitions) {
    const std::string where = "transition " + t.upper + " -> " + t.lower;
    const LevelSpec* u = d.find_level(t.upper);
    const LevelSpec* l = d.find_level(t.lower);
    if (!u || !l) {
      out.push_back(where + ": unknown level");
      continue;
    }
    if (!pairs.insert(std::minmax(t.upper, t.lower)).second) out.push_back(where + ": duplicate transition");
    if (!(u->energy > l->energy)) out.push_back(where + ": upper level is not above lower level");
    if (std::abs(u->L.twice() - l->L.twice()) != 2) out.push_back(where + ": not electric-dipole allowed (|dL| != 1)");
    if (t.reduced_element < 0) out.push_back(where + ": reduced element must be >= 0");
    if (t.branching_ratio && (*t.branching_ratio < 0 || *t.branching_ratio > 1)) {
      out.push_back(where + ": branching ratio outside [0, 1]");
    }
    if (t.decay_rate && !(*t.decay_rate > 0)) out.push_back(where + ": decay rate must be > 0");
    if (t.decay_rate && t.reduced_element > 0 && u->energy > l->energy &&
        std::abs(u->L.twice() - l->L.twice()) == 2) {
      const double g = decay_rate(mu(*u, *l, t.reduced_element), u->energy - l->energy);
      const double rel = std::abs(*t.decay_rate - g) / *t.decay_rate;
      if (rel > 0.02) {
        std::ostringstream msg;
        msg << where << ": decay rate and reduced element disagree by " << 100 * rel << "% (limit 2%)";
        out.push_back(msg.str());
      }
    }
    if (t.upper == "P3/2" && t.branching_ratio) {
      p32_has_branching = true;
      p32_branching += *t.branching_ratio;
    }
  }
  if (p32_has_branching && std::abs(p32_branching - 1.0) > 1e-3) {
    std::ostringstream msg;
    msg << "branching ratios out of P3/2 sum to " << p32_branching << " (expected 1 within 1e-3)";
    out.push_back(msg.str());
  }

  std::set<Encoding> seen;
  for (const auto& q : d.qubits) {
    const std::string where = to_string(q.encoding) + " qubit";
    if (!seen.insert(q.encoding).second) out.push_back(where + ": defined twice");
    const std::string manifold = q.encoding == Encoding::g ? "S1/2" : "D5/2";
    for (const auto* s : {&q.state0, &q.state1}) {
      if (s->level != manifold) {
        out.push_back(where + ": state " + s->str() + " not in " + manifold);
        continue;
      }
      const LevelSpec* l = d.find_level(s->level);
      if (!l) continue;
      const int jt = l->J.twice(), it = d.nuclear_spin.twice();
      const int ft = s->F.twice();
      if (ft < std::abs(jt - it) || ft > jt + it || ((ft - jt - it) & 1)) {
        out.push_back(where + ": F = " + s->F.str() + " impossible for J = " + l->J.str() + ", I = " +
                      d.nuclear_spin.str());
      }
      if (std::abs(s->mF.twice()) > ft || ((s->mF.twice() - ft) & 1)) {
        out.push_back(where + ": mF = " + s->mF.str() + " invalid for F = " + s->F.str());
      }
    }
    if (q.state0 == q.state1) out.push_back(where + ": states coincide");
  }
  return out;
}

bool equivalent(const SpeciesData& a, const SpeciesData& b, double tol) {
  if (a.name != b.name || a.nuclear_spin != b.nuclear_spin || !close(a.mass, b.mass, tol) ||
      !close(a.mass_amu, b.mass_amu, tol) || !close(a.nuclear_g, b.nuclear_g, tol) ||
      a.includes_higher_levels != b.includes_higher_levels || a.levels.size() != b.levels.size() ||
      a.transitions.size() != b.transitions.size() || a.qubits.size() != b.qubits.size()) {
    return false;
  }
  for (size_t n = 0; n < a.levels.size(); ++n) {
    const auto &x = a.levels[n], &y = b.levels[n];
    if (x.label != y.label || x.L != y.L || x.J != y.J || x.S != y.S || x.higher != y.higher ||
        !close(x.energy, y.energy, tol) || !close(x.hyperfine_A, y.hyperfine_A, tol) ||
        !close(x.hyperfine_B, y.hyperfine_B, tol) || !close(x.lifetime, y.lifetime, tol) ||
        !close(x.lande_gJ, y.lande_gJ, tol)) {
      return false;
    }
  }
  for (size_t n = 0; n < a.transitions.size(); ++n) {
    const auto &x = a.transitions[n], &y = b.transitions[n];
    if (x.upper != y.upper || x.lower != y.lower || x.radial_sign != y.radial_sign ||
        !close(x.reduced_element, y.reduced_element, tol) || !close(x.decay_rate, y.decay_rate, tol) ||
        !close(x.branching_ratio, y.branching_ratio, tol)) {
      return false;
    }
  }
  for (size_t n = 0; n < a.qubits.size(); ++n) {
    const auto &x = a.qubits[n], &y = b.qubits[n];
    if (x.encoding != y.encoding || !(x.state0 == y.state0) || !(x.state1 == y.state1) ||
        !close(x.clock_field, y.clock_field, tol)) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> builtin_species_names() {
  std::vector<std::string> out;
  for (size_t n = 0; n < detail::kBuiltinDatasetCount; ++n) out.emplace_back(detail::kBuiltinDatasets[n].name);
  return out;
}

std::optional<std::string> builtin_species_json(const std::string& name) {
  const std::string key = lower(name);
  for (size_t n = 0; n < detail::kBuiltinDatasetCount; ++n) {
    if (lower(detail::kBuiltinDatasets[n].name) == key) return std::string(detail::kBuiltinDatasets[n].json);
  }
  return std::nullopt;
}

SpeciesData builtin_species(const std::string& name) {
  auto text = builtin_species_json(name);
  if (!text) {
    throw DataError("unknown builtin species '" + name + "'; available: " + join(builtin_species_names(), ", "));
  }
  return parse_species(*text, "builtin:" + name);
}

SpeciesData resolve_species(const std::string& name_or_path) {
  if (builtin_species_json(name_or_path)) return builtin_species(name_or_path);
  std::filesystem::path p(name_or_path);
  if (std::filesystem::exists(p)) return load_species(p);
  throw DataError("'" + name_or_path + "' is neither a file nor a builtin species; builtins: " +
                  join(builtin_species_names(), ", "));
}

std::vector<HyperfineState> hyperfine_sublevels(const SpeciesData& d, const std::string& label) {
  const LevelSpec& l = d.level(label);
  std::vector<HyperfineState> out;
  const int jt = l.J.twice(), it = d.nuclear_spin.twice();
  for (int ft = std::abs(jt - it); ft <= jt + it; ft += 2) {
    for (int mt = -ft; mt <= ft; mt += 2) out.push_back({label, HalfInt::from_twice(ft), HalfInt::from_twice(mt)});
  }
  return out;
}

ValidationError::ValidationError(std::vector<std::string> diagnostics)
    : std::runtime_error(join(diagnostics, "\n")), diagnostics_(std::move(diagnostics)) {}

}  // namespace ionscatter
