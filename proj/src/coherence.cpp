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

#include "steercoh/coherence.hpp"

#include <cmath>
#include <string>

namespace steercoh {

double coherence_l1(const ComplexMatrix& rho, const Basis& basis) {
  const std::size_t d = basis.dimension();
  if (!rho.is_square() || rho.rows() != d) {
    throw Error(ErrorCode::kDimensionMismatch,
                "state has side " + std::to_string(rho.rows()) + ", basis has " +
                    std::to_string(d) + " vectors");
  }
  std::vector<Ket> images(d);
  for (std::size_t j = 0; j < d; ++j) {
    const ComplexMatrix col = apply(rho, basis.vectors[j]);
    images[j].assign(col.entries().begin(), col.entries().end());
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) sum += std::abs(inner(basis.vectors[i], images[j]));
  return sum;
}

double coherence_l1(const DensityMatrix& rho, const Basis& basis) {
  return coherence_l1(rho.matrix(), basis);
}

double coherence_bloch(const BlochVector& b, const BlochVector& n) {
  const double len = norm(n);
  if (std::abs(len - 1.0) > 1e-10) {
    throw Error(ErrorCode::kNonUnitAxis, "|n| = " + std::to_string(len));
  }
  return norm(cross(b, n));
}

Basis bloch_basis(const BlochVector& n) {
  return {{bloch_ket(n), bloch_ket(-n)}, false};
}

}  // namespace steercoh
