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


#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "ionscatter/constants.hpp"

namespace is = ionscatter;
namespace cli = ionscatter::cli;
namespace k = ionscatter::constants;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::string run_scan(const cli::ScanOptions& opt) {
  std::ostringstream os;
  cli::write_scan_csv(os, cli::scan(opt), opt.common.model);
  return os.str();
}

cli::ScanOptions g_ca(double from, double to, int points) {
  cli::ScanOptions o;
  o.common.species = "Ca43";
  o.from_thz = from;
  o.to_thz = to;
  o.points = points;
  return o;
}

std::vector<double> column(const std::vector<std::vector<std::string>>& rows, std::size_t col) {
  std::vector<double> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (!rows[r][col].empty()) out.push_back(std::stod(rows[r][col]));
  }
  return out;
}

TEST(Cli, GoldenHeader) {
  std::ostringstream os;
  cli::write_scan_csv(os, {}, is::ModelKind::full);
  EXPECT_EQ(os.str(),
            "delta_THz,laser_wavelength_nm,error_1q,error_2q,eta,tau_2q_us,power_2q_W,rayleigh_bound,model\n");
}

TEST(Cli, ScanIsDeterministicAcrossThreadCounts) {
  auto o = g_ca(-0.5, -20, 64);
  o.threads = 1;
  const std::string a = run_scan(o);
  o.threads = 7;
  const std::string b = run_scan(o);
  EXPECT_EQ(a, b);
  EXPECT_EQ(run_scan(o), b);
}

TEST(Cli, ZeroWidthRangeGivesOneRow) {
  const auto rows = parse_csv(run_scan(g_ca(-3, -3, 50)));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].size(), cli::scan_columns().size());
  EXPECT_EQ(rows[1][0], "-3");
}

TEST(Cli, RowsSortedAndFinite) {
  const auto rows = parse_csv(run_scan(g_ca(-30, -0.2, 40)));
  ASSERT_EQ(rows.size(), 41u);
  for (std::size_t r = 2; r < rows.size(); ++r) EXPECT_LT(std::stod(rows[r - 1][0]), std::stod(rows[r][0]));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    for (std::size_t c = 0; c + 1 < rows[r].size(); ++c) EXPECT_TRUE(std::isfinite(std::stod(rows[r][c])));
    EXPECT_EQ(rows[r].back(), "full");
  }
}

TEST(Cli, PoleGivesGapRow) {
  auto o = g_ca(0, 10, 11);
  o.side = is::Side::blue;
  const auto rows = parse_csv(run_scan(o));
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[1][0], "0");
  for (std::size_t c = 1; c + 1 < rows[1].size(); ++c) EXPECT_TRUE(rows[1][c].empty());
  EXPECT_FALSE(rows[2][1].empty());
}

TEST(Cli, InsertsGapBetweenGridPoints) {
  // The D5/2 - 5P3/2 pole lies near +1055 THz; a scan across it gets an extra gap row.
  cli::ScanOptions o;
  o.common.species = "Ca43";
  o.common.encoding = is::Encoding::m;
  o.common.higher_levels = true;
  o.side = is::Side::blue;
  o.from_thz = 900;
  o.to_thz = 1200;
  o.points = 4;
  const auto rows = parse_csv(run_scan(o));
  ASSERT_EQ(rows.size(), 6u);
  int gaps = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) gaps += rows[r][1].empty() ? 1 : 0;
  EXPECT_EQ(gaps, 1);
}

TEST(Cli, InvalidRangesRejected) {
  EXPECT_THROW(cli::scan(g_ca(1, -3, 10)), is::ValidationError);
  auto o = g_ca(-1, -3, 0);
  EXPECT_THROW(cli::scan(o), is::ValidationError);
  o = g_ca(-1, -1e6, 10);
  EXPECT_THROW(cli::scan(o), is::ValidationError);
}

TEST(Cli, GCalciumErrorFallsPastLastChannel) {
  const auto s = is::builtin_species("Ca43");
  const double wf = s.level("P3/2").energy - s.level("P1/2").energy;
  const double closes = s.level("D3/2").energy - s.level("P3/2").energy;
  const double wpi = s.level("P3/2").energy - s.level("S1/2").energy;
  const double to_thz = 1.0 / (k::two_pi * k::THz);
  auto o = g_ca((closes + wf) * to_thz, (-0.99 * wpi + wf) * to_thz, 200);
  const auto err = column(parse_csv(run_scan(o)), 3);
  ASSERT_EQ(err.size(), 200u);
  // Rows ascend in detuning, so moving red means walking the column backwards.
  for (std::size_t n = 1; n < err.size(); ++n) EXPECT_GT(err[n], err[n - 1]) << n;
}

TEST(Cli, MQubitErrorDivergesAsLaserFrequencyVanishes) {
  cli::ScanOptions o;
  o.common.species = "Sr87";
  o.common.encoding = is::Encoding::m;
  const auto s = is::builtin_species("Sr87");
  const double wpi = (s.level("P3/2").energy - s.level("D5/2").energy) / (k::two_pi * k::THz);
  o.from_thz = -0.90 * wpi;
  o.to_thz = -0.999 * wpi;
  o.points = 20;
  const auto err = column(parse_csv(run_scan(o)), 3);
  for (std::size_t n = 1; n < err.size(); ++n) EXPECT_LT(err[n], err[n - 1]);
  EXPECT_GT(err.front(), 10 * err.back());
}

TEST(Cli, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "ionscatter_cli_test.csv";
  auto o = g_ca(-1, -2, 3);
  o.common.out = path.string();
  std::ostringstream log;
  EXPECT_EQ(cli::cmd_scan(o, log), cli::kOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), run_scan(g_ca(-1, -2, 3)));
  std::filesystem::remove(path);
  o.common.out = "/nonexistent-dir/x.csv";
  std::ostringstream err;
  EXPECT_EQ(cli::guarded([&] { return cli::cmd_scan(o, log); }, err), cli::kIo);
}

TEST(Cli, ThresholdReport) {
  cli::ThresholdOptions t;
  t.common.species = "Ba133";
  t.common.encoding = is::Encoding::m;
  std::ostringstream os;
  EXPECT_EQ(cli::cmd_threshold(t, os), cli::kOk);
  const std::string out = os.str();
  for (const auto& word : {"detuning", "wavelength", "power", "Rabi tau", "eta"}) {
    EXPECT_NE(out.find(word), std::string::npos) << word;
  }
  EXPECT_EQ(out.find("nan"), std::string::npos);
}

TEST(Cli, ThresholdNoSolution) {
  cli::ThresholdOptions t;
  t.common.species = "Sr87";
  t.common.encoding = is::Encoding::m;
  t.side = is::Side::blue;
  t.target = 1e-7;
  std::ostringstream os;
  EXPECT_EQ(cli::cmd_threshold(t, os), cli::kNoSolution);
  EXPECT_NE(os.str().find("smallest error"), std::string::npos);
}

TEST(Cli, GuardedMapsErrors) {
  std::ostringstream err;
  EXPECT_EQ(cli::guarded([]() -> int { throw is::ValidationError({"a", "b"}); }, err), cli::kValidation);
  EXPECT_NE(err.str().find("b"), std::string::npos);
  EXPECT_EQ(cli::guarded([]() -> int { throw is::DataError("x"); }, err), cli::kValidation);
  EXPECT_EQ(cli::guarded([]() -> int { throw is::NoSolutionError("x", 0, 0); }, err), cli::kNoSolution);
  EXPECT_EQ(cli::guarded([]() -> int { throw is::IoError("x"); }, err), cli::kIo);
  EXPECT_EQ(cli::guarded([]() -> int { return cli::kOk; }, err), cli::kOk);
}

std::vector<std::vector<std::string>> tables_csv(const std::string& which, const std::vector<std::string>& sp) {
  const auto path = std::filesystem::temp_directory_path() / ("ionscatter_" + which + ".csv");
  std::ostringstream os;
  EXPECT_EQ(cli::cmd_tables(which, sp, path.string(), os), cli::kOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::filesystem::remove(path);
  return parse_csv(buf.str());
}

double lookup(const std::vector<std::vector<std::string>>& rows, const std::string& sp, const std::string& q) {
  for (const auto& r : rows) {
    if (r[0] == sp && r[1].rfind(q, 0) == 0) return std::stod(r[2]);
  }
  ADD_FAILURE() << sp << " " << q;
  return 0.0;
}

TEST(Cli, TableTwoStrontiumMRow) {
  const auto rows = tables_csv("table2", {"Sr87"});
  EXPECT_EQ(rows[0][0], "species");
  EXPECT_NEAR(lookup(rows, "Sr87 m", "delta"), -66.0, 0.1 * 66.0);
  EXPECT_NEAR(lookup(rows, "Sr87 m", "wavelength"), 1335, 0.1 * 1335);
}

TEST(Cli, TableOneBariumLinewidth) {
  const auto rows = tables_csv("table1", {"Ba133", "Ba135", "Ba137"});
  for (const auto& sp : {"Ba133", "Ba135", "Ba137"}) EXPECT_NEAR(lookup(rows, sp, "gamma"), 25.2, 0.05 * 25.2);
}

TEST(Cli, TablesRejectUnknownSpeciesAndTable) {
  std::ostringstream os;
  EXPECT_THROW(cli::cmd_tables("table1", {"Xx1"}, "", os), is::DataError);
  EXPECT_THROW(cli::cmd_tables("table3", {}, "", os), is::ValidationError);
}

TEST(Cli, LimitsAndValidate) {
  std::ostringstream os;
  EXPECT_EQ(cli::cmd_limits({"Ca43"}, os), cli::kOk);
  EXPECT_NE(os.str().find("Ca43"), std::string::npos);
  EXPECT_EQ(cli::cmd_validate(std::string(IONSCATTER_DATA_DIR) + "/Yb171.json", os), cli::kOk);
}

TEST(Cli, FormatNumber) {
  EXPECT_EQ(cli::format_number(0.0), "0");
  EXPECT_EQ(cli::format_number(1.5), "1.5");
  EXPECT_EQ(cli::format_number(-66.0), "-66");
  EXPECT_EQ(cli::format_number(1.0 / 3.0, 4), "0.3333");
}

}  // namespace
