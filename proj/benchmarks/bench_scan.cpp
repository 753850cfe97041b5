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

#include "commands.hpp"

namespace cli = ionscatter::cli;

namespace {

void BM_Scan(benchmark::State& state) {
  cli::ScanOptions o;
  o.common.species = "Sr87";
  o.common.encoding = ionscatter::Encoding::m;
  o.from_thz = -1.0;
  o.to_thz = -200.0;
  o.points = 64;
  o.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cli::scan(o).size());
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
