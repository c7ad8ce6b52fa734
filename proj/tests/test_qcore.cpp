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
#include "steercoh/qcore.hpp"
#include "steercoh/random.hpp"
#include "steercoh/states.hpp"

using namespace steercoh;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kParseError;
}

ComplexMatrix random_hermitian(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix h(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const Complex z(g(rng), i == j ? 0.0 : g(rng));
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  return h;
}

}  // namespace

TEST_SUITE("qcore") {

TEST_CASE("matrix shape and arithmetic") {
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), Error);
  const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  const auto id = ComplexMatrix::identity(2);
  CHECK(approx_equal(a * id, a, 0.0));
  CHECK(a.trace() == Complex(5.0));
  const auto k = kron(a, id);
  CHECK(k.rows() == 4);
  CHECK(k(2, 2) == Complex(4.0));
  CHECK(k(1, 3) == Complex(2.0));
  CHECK_FALSE(a.same_shape(k));
}

TEST_CASE("validate_density accepts states and names violations") {
  const auto mixed = ComplexMatrix::identity(4) * Complex(0.25);
  CHECK_NOTHROW(validate_density(mixed, {2, 2}));
  const std::vector<double> bad{1.5, -0.5};
  CHECK(code_of([&] { validate_density(ComplexMatrix::diagonal(bad), {2}); }) ==
        ErrorCode::kNotPSD);
  CHECK(code_of([&] { validate_density(ComplexMatrix{{0.5, 1.0}, {0.0, 0.5}}, {2}); }) ==
        ErrorCode::kNotHermitian);
  CHECK(code_of([&] { validate_density(ComplexMatrix::identity(2), {2}); }) ==
        ErrorCode::kNotUnitTrace);
  CHECK(code_of([&] { validate_density(mixed, {2, 3}); }) == ErrorCode::kWrongDimension);
  CHECK(code_of([&] { validate_density(ComplexMatrix::identity(17) * Complex(1.0 / 17), {17}); }) ==
        ErrorCode::kDimensionTooLarge);
  CHECK_NOTHROW(validate_density(werner(0.7).state.matrix(), {2, 2}));
  try {
    validate_density(ComplexMatrix::diagonal(bad), {2});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("-0.5") != std::string::npos);
  }
}

TEST_CASE("partial trace") {
  const Ket zz{1.0, 0.0, 0.0, 0.0};
  const auto prod = validate_density(outer(zz), {2, 2});
  CHECK(approx_equal(partial_trace(prod, Subsystem::kB).matrix(),
                     ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}, 1e-15));
  const double s = 1.0 / std::sqrt(2.0);
  const auto bell = validate_density(outer(Ket{s, 0.0, 0.0, s}), {2, 2});
  CHECK(approx_equal(partial_trace(bell, Subsystem::kB).matrix(),
                     ComplexMatrix::identity(2) * Complex(0.5), 1e-15));
  const auto rp = rho_p(0.5, 0.1 * M_PI).state;
  const auto b = bloch_vector(partial_trace(rp, Subsystem::kB));
  CHECK(b.x == doctest::Approx(0.5 * std::cos(0.1 * M_PI)).epsilon(1e-12));
  CHECK(std::abs(b.y) < 1e-12);
  CHECK(std::abs(b.z) < 1e-12);
  CHECK(code_of([&] { partial_trace(validate_density(ComplexMatrix::identity(2) * Complex(0.5), {2}), Subsystem::kA); }) ==
        ErrorCode::kNotBipartite);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto rho = random_density({2, 3}, rng);
    CHECK(std::abs(partial_trace(rho, Subsystem::kA).matrix().trace() - 1.0) < 1e-10);
    CHECK(std::abs(partial_trace(rho, Subsystem::kB).matrix().trace() - 1.0) < 1e-10);
  }
}

TEST_CASE("eigen_hermitian examples") {
  const std::vector<double> d{0.3, 0.7};
  auto es = eigen_hermitian(ComplexMatrix::diagonal(d));
  CHECK(es.values[0] == doctest::Approx(0.7));
  CHECK(es.values[1] == doctest::Approx(0.3));
  CHECK(std::abs(es.basis.vectors[0][1] - 1.0) < 1e-14);
  CHECK_FALSE(es.basis.degenerate);

  CHECK(eigen_hermitian(ComplexMatrix::identity(2) * Complex(0.5)).basis.degenerate);

  es = eigen_hermitian(qubit_operator(1.0, {0.6, 0.0, 0.0}));
  CHECK(es.values[0] == doctest::Approx(0.8));
  CHECK(es.values[1] == doctest::Approx(0.2));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(es.basis.vectors[0][0] - s) < 1e-12);
  CHECK(std::abs(es.basis.vectors[0][1] - s) < 1e-12);
  CHECK(std::abs(std::abs(es.basis.vectors[1][0]) - s) < 1e-12);
  CHECK(std::abs(es.basis.vectors[1][0] + es.basis.vectors[1][1]) < 1e-12);

  CHECK(code_of([] { eigen_hermitian(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}); }) ==
        ErrorCode::kNotHermitian);
}

TEST_CASE("eigen_hermitian reconstruction and phase convention") {
  std::mt19937_64 rng(11);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto h = random_hermitian(d, rng);
      const auto es = eigen_hermitian(h);
      const auto v = es.basis.as_columns();
      const auto rebuilt = v * ComplexMatrix::diagonal(es.values) * v.adjoint();
      CHECK(max_abs_diff(rebuilt, h) <= 1e-9);
      CHECK(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(d)) <= 1e-12);
      for (std::size_t k = 1; k < d; ++k) CHECK(es.values[k - 1] >= es.values[k]);
      for (const auto& vec : es.basis.vectors) {
        std::size_t big = 0;
        for (std::size_t i = 1; i < d; ++i)
          if (std::abs(vec[i]) > std::abs(vec[big]) + 1e-12) big = i;
        CHECK(std::abs(vec[big].imag()) < 1e-12);
        CHECK(vec[big].real() > 0.0);
      }
    }
  }
}

TEST_CASE("pauli decomposition") {
  const auto mixed = validate_density(ComplexMatrix::identity(4) * Complex(0.25), {2, 2});
  const auto th = pauli_decompose(mixed).theta;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(th[i][j] - (i == 0 && j == 0 ? 1.0 : 0.0)) < 1e-15);

  const auto w = pauli_decompose(werner(0.7).state);
  for (int i = 1; i < 4; ++i) {
    CHECK(std::abs(w.theta[i][0]) < 1e-15);
    CHECK(std::abs(w.theta[0][i]) < 1e-15);
    for (int j = 1; j < 4; ++j) CHECK(std::abs(w.theta[i][j] - (i == j ? -0.7 : 0.0)) < 1e-14);
  }
  const auto rp = pauli_decompose(rho_p(0.9, 0.3).state);
  CHECK(rp.b().x == doctest::Approx(0.9 * std::cos(0.3)).epsilon(1e-12));

  CHECK(code_of([] {
          pauli_decompose(validate_density(ComplexMatrix::identity(6) * Complex(1.0 / 6), {2, 3}));
        }) == ErrorCode::kWrongDimension);

  PauliForm unit;
  unit.theta[0][0] = 1.0;
  CHECK(approx_equal(pauli_compose(unit).matrix(), mixed.matrix(), 1e-15));
  unit.theta[1][1] = 2.0;
  CHECK(code_of([&] { pauli_compose(unit); }) == ErrorCode::kNotPSD);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto rho = random_density({2, 2}, rng);
    const auto form = pauli_decompose(rho);
    CHECK(max_abs_diff(pauli_compose(form).matrix(), rho.matrix()) <= 1e-10);
    const auto ref = oracle::correlations(oracle::to_array(rho.matrix()));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) CHECK(std::abs(form.theta[r][c] - ref[r][c]) < 1e-12);
  }
}

TEST_CASE("subsystem swap and qubit helpers") {
  std::mt19937_64 rng(9);
  const auto rho = random_density({2, 3}, rng);
  const auto swapped = swap_subsystems(rho.matrix(), 2, 3);
  CHECK(max_abs_diff(partial_trace(swapped, 3, 2, Subsystem::kA),
                     partial_trace(rho, Subsystem::kB).matrix()) < 1e-14);
  const BlochVector r{0.3, -0.4, 0.5};
  const auto back = bloch_vector(qubit_state(r));
  CHECK(norm(back - r) < 1e-15);
  for (const BlochVector& n : {BlochVector{0, 0, 1}, BlochVector{0, 0, -1}, BlochVector{0.6, 0, 0.8}}) {
    CHECK(norm(bloch_vector(outer(bloch_ket(n))) - n) < 1e-14);
  }
}

}  // TEST_SUITE
