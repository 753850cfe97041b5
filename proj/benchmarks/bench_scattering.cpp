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


#include <benchmark/benchmark.h>

#include <string>

#include "ionscatter/angular.hpp"
#include "ionscatter/gates.hpp"
#include "ionscatter/scattering.hpp"
#include "ionscatter/species.hpp"
#include "ionscatter/zeeman.hpp"

namespace is = ionscatter;

namespace {

constexpr double kThz = 2.0 * 3.14159265358979323846 * 1e12;

struct Fixture {
  is::SpeciesData species;
  is::ScatteringEngine engine;
  is::BeamConfig beams;
};

Fixture make(const std::string& name, is::Encoding enc, bool higher) {
  auto s = is::builtin_species(name);
  auto q = is::make_dressed_qubit(s, enc);
  is::ScatteringEngine e(s, q, is::ModelVariant::full(higher));
  return {std::move(s), std::move(e), is::BeamConfig::raman_pair(enc, 1.0)};
}

void BM_EngineConstruction(benchmark::State& state) {
  const auto s = is::builtin_species("Ba137");
  const auto q = is::make_dressed_qubit(s, is::Encoding::m);
  for (auto _ : state) {
    is::ScatteringEngine e(s, q, is::ModelVariant::full(true));
    benchmark::DoNotOptimize(e.omega_Pi());
  }
}
BENCHMARK(BM_EngineConstruction)->Unit(benchmark::kMillisecond);

void BM_TotalsG(benchmark::State& state) {
  const auto f = make("Ca43", is::Encoding::g, true);
  for (auto _ : state) benchmark::DoNotOptimize(f.engine.totals(-20.0 * kThz, f.beams).total());
}
BENCHMARK(BM_TotalsG)->Unit(benchmark::kMicrosecond);

void BM_TotalsM(benchmark::State& state) {
  const auto f = make("Ba137", is::Encoding::m, true);
  for (auto _ : state) benchmark::DoNotOptimize(f.engine.totals(-50.0 * kThz, f.beams).total());
}
BENCHMARK(BM_TotalsM)->Unit(benchmark::kMicrosecond);

void BM_Breakdown(benchmark::State& state) {
  const auto f = make("Ba137", is::Encoding::m, true);
  for (auto _ : state) benchmark::DoNotOptimize(f.engine.breakdown(-50.0 * kThz, f.beams));
}
BENCHMARK(BM_Breakdown)->Unit(benchmark::kMicrosecond);

void BM_Threshold(benchmark::State& state) {
  const auto f = make("Sr87", is::Encoding::m, true);
  const is::TrapConfig trap;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        is::threshold_detuning(f.engine, f.beams, trap, 1e-4, is::Side::red, is::GateKind::two_qubit).delta);
  }
}
BENCHMARK(BM_Threshold)->Unit(benchmark::kMillisecond);

void BM_Wigner6j(benchmark::State& state) {
  using is::HalfInt;
  const HalfInt a = HalfInt::from_twice(7), b = HalfInt::from_twice(5), c = HalfInt::from_twice(4);
  const HalfInt d = HalfInt::from_twice(4), e = HalfInt::from_twice(6), g = HalfInt::from_twice(5);
  for (auto _ : state) benchmark::DoNotOptimize(is::wigner6j(a, b, c, d, e, g));
}
BENCHMARK(BM_Wigner6j);

}  // namespace

BENCHMARK_MAIN();
