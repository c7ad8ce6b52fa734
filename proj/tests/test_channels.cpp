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
#include "steercoh/channels.hpp"
#include "steercoh/coherence.hpp"
#include "steercoh/msc.hpp"
#include "steercoh/random.hpp"
#include "steercoh/states.hpp"

using namespace steercoh;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kParseError;
}

void check_complete(const KrausChannel& ch) {
  ComplexMatrix sum(ch.dim(), ch.dim());
  for (const auto& k : ch.kraus_ops()) sum += k.adjoint() * k;
  CHECK(max_abs_diff(sum, ComplexMatrix::identity(ch.dim())) <= 1e-10);
}

}  // namespace

TEST_SUITE("channels") {

TEST_CASE("amplitude damping") {
  std::mt19937_64 rng(201);
  const auto rho = random_density({2}, rng);
  CHECK(max_abs_diff(amplitude_damping(0.0).apply(rho.matrix()), rho.matrix()) < 1e-15);
  CHECK(max_abs_diff(amplitude_damping(1.0).apply(rho.matrix()), outer(Ket{1.0, 0.0})) < 1e-15);
  const auto half = amplitude_damping(0.5).apply(outer(Ket{0.0, 1.0}));
  CHECK(max_abs_diff(half, ComplexMatrix::identity(2) * Complex(0.5)) < 1e-15);
  for (double g : {0.0, 0.3, 1.0}) check_complete(amplitude_damping(g));
  CHECK(code_of([] { amplitude_damping(1.2); }) == ErrorCode::kParameterOutOfRange);
  CHECK(code_of([] { amplitude_damping(-0.1); }) == ErrorCode::kParameterOutOfRange);
}

TEST_CASE("unital Pauli channels") {
  std::mt19937_64 rng(203);
  const auto rho = random_density({2}, rng);
  CHECK(max_abs_diff(unital_pauli(1, 0, 0, 0).apply(rho.matrix()), rho.matrix()) < 1e-15);
  CHECK(norm(bloch_vector(unital_pauli(0.25, 0.25, 0.25, 0.25).apply(rho.matrix()))) < 1e-15);
  const auto p = unital_shrink_factors(0.5, 0.5, 0, 0);
  CHECK(p == std::array<double, 3>{1.0, 0.0, 0.0});
  const BlochVector r{0.3, 0.4, -0.5};
  const auto out = bloch_vector(unital_pauli(0.5, 0.5, 0, 0).apply(qubit_state(r).matrix()));
  CHECK(norm(out - BlochVector{0.3, 0.0, 0.0}) < 1e-15);
  const auto f = unital_shrink_factors(0.4, 0.3, 0.2, 0.1);
  const auto shrunk = bloch_vector(unital_pauli(0.4, 0.3, 0.2, 0.1).apply(qubit_state(r).matrix()));
  for (int k = 0; k < 3; ++k) CHECK(shrunk[k] == doctest::Approx(f[k] * r[k]).epsilon(1e-14));
  CHECK(code_of([] { unital_pauli(0.5, 0.5, 0.5, 0.0); }) == ErrorCode::kParameterOutOfRange);
  CHECK(code_of([] { unital_pauli(1.2, -0.2, 0.0, 0.0); }) == ErrorCode::kParameterOutOfRange);
}

TEST_CASE("semi-classical channels") {
  const Basis computational{{Ket{1.0, 0.0}, Ket{0.0, 1.0}}, false};
  const std::vector<PovmElement> z{PovmElement::from_bloch({0, 0, 1}),
                                   PovmElement::from_bloch({0, 0, -1})};
  const auto dephase = semi_classical(computational, z);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(dephase.apply(outer(Ket{s, s})), ComplexMatrix::identity(2) * Complex(0.5)) < 1e-15);
  CHECK(code_of([&] { semi_classical(computational, {PovmElement::from_bloch({0, 0, 1})}); }) ==
        ErrorCode::kIncompletePovm);

  std::mt19937_64 rng(207);
  for (int i = 0; i < 20; ++i) {
    const auto basis = bloch_basis(random_unit_vector(rng));
    const BlochVector m = random_unit_vector(rng) * 0.8;
    const auto ch = semi_classical(basis, {PovmElement::from_bloch(m), PovmElement::from_bloch(-m)});
    check_complete(ch);
    CHECK(coherence_l1(ch.apply(random_density({2}, rng).matrix()), basis) < 1e-14);
    CHECK(msc(apply_on_b(random_density({2, 2}, rng), ch)).value <= 1e-8);
  }
}

TEST_CASE("local application") {
  std::mt19937_64 rng(211);
  const auto rho = random_density({2, 2}, rng);
  CHECK(max_abs_diff(apply_on_b(rho, identity_channel(2)).matrix(), rho.matrix()) < 1e-15);
  CHECK(max_abs_diff(apply_on_a(rho, identity_channel(2)).matrix(), rho.matrix()) < 1e-15);
  const auto ad = amplitude_damping(0.4);
  // Marginals transform locally.
  const auto out_b = apply_on_b(rho, ad);
  CHECK(max_abs_diff(partial_trace(out_b, Subsystem::kB).matrix(),
                     ad.apply(partial_trace(rho, Subsystem::kB).matrix())) < 1e-14);
  CHECK(max_abs_diff(partial_trace(out_b, Subsystem::kA).matrix(),
                     partial_trace(rho, Subsystem::kA).matrix()) < 1e-14);
  const auto out_a = apply_on_a(rho, ad);
  CHECK(max_abs_diff(partial_trace(out_a, Subsystem::kA).matrix(),
                     ad.apply(partial_trace(rho, Subsystem::kA).matrix())) < 1e-14);
  const auto r3 = random_density({2, 3}, rng);
  CHECK(code_of([&] { apply_on_b(r3, ad); }) == ErrorCode::kDimensionMismatch);
}

TEST_CASE("amplitude damping on the classical family") {
  for (double t : {0.6, 0.75, 0.9}) {
    for (double g : {0.1, 0.5, 0.8}) {
      const auto v = msc(apply_on_b(classical_c(t).state, amplitude_damping(g))).value;
      CHECK(std::abs(v - oracle::damped_classical(t, g)) <= 1e-6);
    }
  }
  const auto damped = apply_on_b(classical_c(0.75).state, amplitude_damping(0.5));
  CHECK(std::abs(msc_oracle(damped, 10000) - oracle::damped_classical(0.75, 0.5)) < 1e-3);
}

TEST_CASE("random channels are trace preserving") {
  std::mt19937_64 rng(213);
  for (std::size_t d : {2u, 3u}) check_complete(random_channel(d, 3, rng));
  for (int i = 0; i < 10; ++i) {
    const auto u = random_unital(rng);
    check_complete(u);
    CHECK(max_abs_diff(u.apply(ComplexMatrix::identity(2) * Complex(0.5)),
                       ComplexMatrix::identity(2) * Complex(0.5)) < 1e-14);
  }
}

}  // TEST_SUITE
