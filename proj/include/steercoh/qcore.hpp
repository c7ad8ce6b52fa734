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

// Dense complex linear algebra for small quantum systems (dimension <= 16):
// density-operator validation, partial trace, Hermitian eigendecomposition
// by cyclic Jacobi rotations, and the Pauli block form of two-qubit states.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "steercoh/error.hpp"

namespace steercoh {

using Complex = std::complex<double>;
using Ket = std::vector<Complex>;

inline constexpr std::size_t kMaxDimension = 16;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) { return lhs *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) { return rhs *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  // Dimensions compare exactly; entries never do (see approx_equal).
  bool same_shape(const ComplexMatrix& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix outer(std::span<const Complex> ket);  // |v><v|
ComplexMatrix apply(const ComplexMatrix& m, std::span<const Complex> ket);
Complex inner(std::span<const Complex> bra, std::span<const Complex> ket);  // <bra|ket>
double norm(std::span<const Complex> ket);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);
double hermitian_deviation(const ComplexMatrix& m);  // max |m - m^dagger|

// Bipartite pure state; amplitudes are indexed a * dim_b + j.
struct PureState {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  Ket amplitudes;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

  BlochVector& operator+=(const BlochVector& o) {
    x += o.x, y += o.y, z += o.z;
    return *this;
  }
  BlochVector& operator-=(const BlochVector& o) {
    x -= o.x, y -= o.y, z -= o.z;
    return *this;
  }
  BlochVector& operator*=(double s) {
    x *= s, y *= s, z *= s;
    return *this;
  }
  friend BlochVector operator+(BlochVector a, const BlochVector& b) { return a += b; }
  friend BlochVector operator-(BlochVector a, const BlochVector& b) { return a -= b; }
  friend BlochVector operator*(BlochVector a, double s) { return a *= s; }
  friend BlochVector operator*(double s, BlochVector a) { return a *= s; }
  friend BlochVector operator/(BlochVector a, double s) { return a *= 1.0 / s; }
  friend BlochVector operator-(BlochVector a) { return a *= -1.0; }
};

double dot(const BlochVector& a, const BlochVector& b);
BlochVector cross(const BlochVector& a, const BlochVector& b);
double norm(const BlochVector& v);
BlochVector normalized(const BlochVector& v);

// Row-major real 3x3 block.
struct Matrix3 {
  std::array<std::array<double, 3>, 3> m{};

  double operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
  double& operator()(std::size_t r, std::size_t c) { return m[r][c]; }

  Matrix3 transpose() const;
  BlochVector operator*(const BlochVector& v) const;
  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
};

struct DensityTolerance {
  double hermitian = 1e-10;
  double trace = 1e-10;
  double min_eigenvalue = -1e-9;
};

enum class Subsystem { kA = 0, kB = 1 };

// Hermitian, unit-trace, positive semidefinite operator on one system
// (dims = {d}) or two (dims = {dA, dB}, A is the left tensor factor).
class DensityMatrix {
 public:
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  bool is_bipartite() const noexcept { return dims_.size() == 2; }
  std::size_t dim_a() const { return dims_.front(); }
  std::size_t dim_b() const { return dims_.back(); }

 private:
  DensityMatrix(std::vector<std::size_t> dims, ComplexMatrix matrix)
      : dims_(std::move(dims)), matrix_(std::move(matrix)) {}

  friend DensityMatrix validate_density(const ComplexMatrix&, std::vector<std::size_t>,
                                        const DensityTolerance&);

  std::vector<std::size_t> dims_;
  ComplexMatrix matrix_;
};

DensityMatrix validate_density(const ComplexMatrix& matrix, std::vector<std::size_t> dims,
                               const DensityTolerance& tol = {});

// Validates after symmetrizing (m + m^dagger)/2 and dividing by the trace.
// Intended for operators built by exact algebra where only round-off spoils
// hermiticity; the validation tolerances still apply to the raw input.
DensityMatrix normalize_density(const ComplexMatrix& matrix, std::vector<std::size_t> dims);

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

// Exchanges the tensor factors: (A x B) -> (B x A).
ComplexMatrix swap_subsystems(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

struct Basis {
  std::vector<Ket> vectors;
  bool degenerate = false;

  std::size_t dimension() const noexcept { return vectors.size(); }
  ComplexMatrix as_columns() const;
};

struct Eigensystem {
  std::vector<double> values;  // descending
  Basis basis;
};

inline constexpr double kDefaultDegeneracyTol = 1e-9;

Eigensystem eigen_hermitian(const ComplexMatrix& h,
                            double tol_degenerate = kDefaultDegeneracyTol);

// Columns-of-eigenvectors helpers built on eigen_hermitian.
ComplexMatrix hermitian_function(const ComplexMatrix& h, double (*fn)(double));
ComplexMatrix expi_hermitian(const ComplexMatrix& h);  // exp(i h)

struct PauliForm {
  std::array<std::array<double, 4>, 4> theta{};

  BlochVector a() const { return {theta[1][0], theta[2][0], theta[3][0]}; }
  BlochVector b() const { return {theta[0][1], theta[0][2], theta[0][3]}; }
  Matrix3 T() const;
};

// sigma_0 = identity, sigma_1..3 = X, Y, Z.
const ComplexMatrix& pauli(std::size_t i);

PauliForm pauli_decompose(const DensityMatrix& rho);
DensityMatrix pauli_compose(const PauliForm& form);

DensityMatrix qubit_state(const BlochVector& r);
ComplexMatrix qubit_operator(double weight, const BlochVector& r);  // (w 1 + r.sigma)/2
BlochVector bloch_vector(const ComplexMatrix& qubit);
BlochVector bloch_vector(const DensityMatrix& qubit);

// Pure-state ket pointing along r on the Bloch sphere (|r| = 1).
Ket bloch_ket(const BlochVector& r);

}  // namespace steercoh
