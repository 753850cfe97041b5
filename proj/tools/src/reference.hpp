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


#ifndef IONSCATTER_TOOLS_REFERENCE_HPP
#define IONSCATTER_TOOLS_REFERENCE_HPP

#include <optional>
#include <string>
#include <vector>

namespace ionscatter::cli {

// Published qubit characteristics, used for side-by-side comparison.
struct Table1Row {
  std::string species;
  double gamma_p32_mhz;
  std::optional<double> tau_d52_s;
  double omega_f_thz;
  double g_omega0_ghz;
  double g_curvature_khz_g2;
  std::optional<double> m_clock_g;
  std::optional<double> m_omega0_ghz;
  std::optional<double> m_curvature_khz_g2;
};

struct Table2Row {
  std::string species;
  char encoding;
  double eta;
  double delta_thz;
  double wavelength_nm;
  double power_w;
};

const std::vector<Table1Row>& table1_reference();
const std::vector<Table2Row>& table2_reference();
const Table1Row* find_table1(const std::string& species);
const Table2Row* find_table2(const std::string& species, char encoding);

}  // namespace ionscatter::cli

#endif
