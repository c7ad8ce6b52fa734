// Copyright 2026 The steercoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded random generators used by the property suites and `verify`.

#pragma once

#include <random>

#include "steercoh/qcore.hpp"

namespace steercoh {

Ket random_ket(std::size_t dim, std::mt19937_64& rng);

// Haar unitary: Gram-Schmidt on a complex Ginibre matrix.
ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng);

// G G^dagger / tr for a dim x rank Ginibre G (rank = 0 means full rank).
DensityMatrix random_density(std::vector<std::size_t> dims, std::mt19937_64& rng,
                             std::size_t rank = 0);

BlochVector random_unit_vector(std::mt19937_64& rng);

}  // namespace steercoh
