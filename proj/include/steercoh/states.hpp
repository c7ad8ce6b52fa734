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

// Constructors for the state families with known steering geometry. Each
// returns the state together with its closed-form MSC and steering
// ellipsoid where those are known.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "steercoh/qcore.hpp"
#include "steercoh/steering.hpp"

namespace steercoh {

// Bounds on the MSC of a state whose QSE is a nonradial segment [b1, b2]
// with |b1| >= |b2|.
struct DlcBounds {
  double b1 = 0.0;      // longer endpoint length
  double b2 = 0.0;      // shorter endpoint length
  double theta = 0.0;   // angle between the endpoints
  double theta1 = 0.0;  // b1 sin(theta1) = b2 sin(theta - theta1)
  double lower = 0.0;   // b1 sin(theta1)
  double upper = 0.0;   // b1 sin(theta) if theta <= pi/2, else b1
  bool strict_upper = false;
};

struct StateFamilyResult {
  DensityMatrix state;
  std::optional<double> analytic_msc;
  std::optional<Ellipsoid> analytic_qse;
  std::optional<DlcBounds> dlc_bounds;
  std::optional<PureState> pure;
};

// sum_i p_i rho_i^A x |xi_i><xi_i|.
StateFamilyResult classical_state(std::span<const double> weights,
                                  const std::vector<DensityMatrix>& alice_states,
                                  const Basis& basis);

// t|++><++| + (1-t)|--><--|.
StateFamilyResult classical_c(double t);

// p|Psi><Psi| + (1-p)/4, |Psi> = cos(theta/2)|++> + sin(theta/2)|-->.
StateFamilyResult rho_p(double p, double theta);

// p|Psi-><Psi-| + (1-p)/4.
StateFamilyResult werner(double p);

StateFamilyResult maximally_obese(double b);

// (1/2)|psi><psi| x |chi><chi| + (1/2)|psi_bar><psi_bar| x |chi'><chi'|.
StateFamilyResult chord_state(const Ket& psi, const Ket& chi, const Ket& chi_prime);

// chord_state with psi = |0> and chi, chi' at polar angle arccos(b) in the
// xz-plane, symmetric about the z axis; Bob's Bloch vector is (0, 0, b).
StateFamilyResult chord_state_symmetric(double b);

// q|0><0| x sigma(b1) + (1-q)|1><1| x sigma(b2).
StateFamilyResult dlc_state(const BlochVector& b1, const BlochVector& b2, double q);

// Root of b1 sin(x) = b2 sin(theta - x) on [0, theta] by bisection.
double dlc_theta1(double b1, double b2, double theta);
DlcBounds dlc_bounds(const BlochVector& b1, const BlochVector& b2);

// sum_i lambda_i U_A|i> x U_B|i>.
StateFamilyResult pure_schmidt(std::span<const double> lambda, const ComplexMatrix& u_a,
                               const ComplexMatrix& u_b);

// Nonzero entries only on the diagonal and anti-diagonal.
StateFamilyResult x_state(const std::array<double, 4>& diagonal,
                          const std::array<Complex, 2>& anti_diagonal);

StateFamilyResult product_state(const DensityMatrix& alice, const DensityMatrix& bob);

DensityMatrix pure_density(const PureState& psi);

}  // namespace steercoh
