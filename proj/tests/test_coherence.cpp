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

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "steercoh/coherence.hpp"
#include "steercoh/random.hpp"

using namespace steercoh;

TEST_SUITE("coherence") {

TEST_CASE("l1 coherence examples") {
  const Basis computational{{Ket{1.0, 0.0}, Ket{0.0, 1.0}}, false};
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(coherence_l1(outer(Ket{s, s}), computational) == doctest::Approx(1.0));
  const std::vector<double> d{0.7, 0.3};
  CHECK(coherence_l1(ComplexMatrix::diagonal(d), computational) == 0.0);

  Basis three{{Ket{1, 0, 0}, Ket{0, 1, 0}, Ket{0, 0, 1}}, false};
  const double r = 1.0 / std::sqrt(3.0);
  CHECK(coherence_l1(outer(Ket{r, r, r}), three) == doctest::Approx(2.0).epsilon(1e-14));

  CHECK_THROWS_AS(coherence_l1(ComplexMatrix::identity(3), computational), Error);
}

TEST_CASE("Bloch form matches the matrix form") {
  CHECK(coherence_bloch({0, 0, 0.5}, {0, 0, 1}) == 0.0);
  CHECK(coherence_bloch({0.5, 0, 0}, {0, 0, 1}) == doctest::Approx(0.5));
  try {
    coherence_bloch({0.5, 0, 0}, {0, 0, 2});
    FAIL("expected NonUnitAxis");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonUnitAxis);
  }

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const BlochVector b = random_unit_vector(rng) * unif(rng);
    const BlochVector n = random_unit_vector(rng);
    const auto basis = bloch_basis(n);
    const double expected =
        oracle::l1_coherence(qubit_state(b).matrix(), {basis.vectors[0], basis.vectors[1]});
    CHECK(std::abs(coherence_bloch(b, n) - expected) <= 1e-10);
    CHECK(std::abs(coherence_l1(qubit_state(b), basis) - expected) <= 1e-10);
  }
}

TEST_CASE("basis phases do not change coherence") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  for (int i = 0; i < 100; ++i) {
    const auto rho = random_density({3}, rng);
    const auto u = random_unitary(3, rng);
    Basis basis, rephased;
    for (std::size_t k = 0; k < 3; ++k) {
      Ket v(3);
      for (std::size_t r = 0; r < 3; ++r) v[r] = u(r, k);
      basis.vectors.push_back(v);
      const Complex z = std::polar(1.0, phase(rng));
      for (auto& x : v) x *= z;
      rephased.vectors.push_back(v);
    }
    CHECK(std::abs(coherence_l1(rho, basis) - coherence_l1(rho, rephased)) <= 1e-10);
  }
}

}  // TEST_SUITE
