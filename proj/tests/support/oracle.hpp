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


#ifndef IONSCATTER_TESTS_ORACLE_HPP
#define IONSCATTER_TESTS_ORACLE_HPP

#include "ionscatter/scattering.hpp"

namespace ionscatter::testing {

/// Scattering totals for unit coupling, summed term by term over zero-field
/// |F, mF> sublevels of every intermediate and final manifold. Shares no code
/// with the engine beyond the single-element dipole routine.
ScatteringTotals reference_totals(const SpeciesData& species, const DressedQubit& qubit, const ModelVariant& model,
                                  double delta, const Polarization& pol);

}  // namespace ionscatter::testing

#endif
