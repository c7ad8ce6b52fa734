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

// Steering of one party's state by a measurement outcome on the other, and
// the quantum steering ellipsoid (QSE) of two-qubit states.

#pragma once

#include <array>

#include "steercoh/qcore.hpp"

namespace steercoh {

inline constexpr double kZeroProbability = 1e-12;

// A positive operator M with 0 <= M <= 1 on Alice's space.
class PovmElement {
 public:
  explicit PovmElement(ComplexMatrix m);

  static PovmElement from_bloch(const BlochVector& m);  // (1 + m.sigma)/2, |m| <= 1
  static PovmElement projector(std::span<const Complex> ket);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

struct SteeredState {
  DensityMatrix state;
  double probability;
};

// Unnormalized tr_A((M x 1) rho); its trace is the outcome probability.
ComplexMatrix steered_operator(const ComplexMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                               const ComplexMatrix& m);

SteeredState steer(const DensityMatrix& rho, const PovmElement& m);

// Bob's Bloch vector after Alice obtains (1 + m.sigma)/2:
// (b + T^T m) / |1 + a.m|.
BlochVector steered_bloch(const PauliForm& theta, const BlochVector& m);

// (rho_A^{-1/2} x 1) rho (rho_A^{-1/2} x 1), renormalized. Alice's marginal
// becomes maximally mixed; the set of Bob's steered states is unchanged.
DensityMatrix canonical_transform(const DensityMatrix& rho);

struct Ellipsoid {
  BlochVector center;
  std::array<double, 3> semiaxes{};   // c1 >= c2 >= c3 >= 0
  std::array<BlochVector, 3> frame{};  // frame[i] is the axis of semiaxes[i]
};

Ellipsoid qse(const DensityMatrix& rho);

// center + sum_i c_i u_i e_i for a unit u.
BlochVector surface_point(const Ellipsoid& e, const BlochVector& unit);

struct QuadricResidual {
  double quadric = 0.0;      // sum over nonzero axes of (y_i/c_i)^2, minus 1
  double off_support = 0.0;  // largest |y_i| along axes with c_i = 0
};

QuadricResidual quadric_residual(const Ellipsoid& e, const BlochVector& point,
                                 double zero_axis = 1e-9);

}  // namespace steercoh
