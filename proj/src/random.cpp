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

#include "steercoh/random.hpp"

#include <cmath>
#include <numeric>

namespace steercoh {

Ket random_ket(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Ket v(dim);
  for (auto& c : v) c = Complex(gauss(rng), gauss(rng));
  const double n = norm(v);
  for (auto& c : v) c /= n;
  return v;
}

ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::vector<Ket> cols;
  while (cols.size() < dim) {
    Ket v = random_ket(dim, rng);
    for (const auto& q : cols) {
      const Complex proj = inner(q, v);
      for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * q[i];
    }
    const double n = norm(v);
    if (n < 1e-8) continue;
    for (auto& c : v) c /= n;
    cols.push_back(std::move(v));
  }
  ComplexMatrix u(dim, dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = cols[c][r];
  return u;
}

DensityMatrix random_density(std::vector<std::size_t> dims, std::mt19937_64& rng,
                             std::size_t rank) {
  const std::size_t d = std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                                        std::multiplies<>());
  if (rank == 0) rank = d;
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(d, rank);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < rank; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  return normalize_density(g * g.adjoint(), std::move(dims));
}

BlochVector random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  BlochVector v;
  do {
    v = {gauss(rng), gauss(rng), gauss(rng)};
  } while (norm(v) < 1e-6);
  return normalized(v);
}

}  // namespace steercoh
