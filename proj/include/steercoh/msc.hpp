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

// Maximal steered coherence (MSC): the largest l1 coherence, measured in the
// eigenbasis of Bob's marginal, that a single measurement outcome on Alice's
// side can induce in Bob's conditional state. When Bob's marginal is
// degenerate the eigenbasis is not unique and the infimum over eigenbases
// is taken.

#pragma once

#include <cstdint>
#include <optional>

#include "steercoh/optimize.hpp"
#include "steercoh/qcore.hpp"
#include "steercoh/steering.hpp"

namespace steercoh {

struct MscOptions {
  double tol_degenerate = kDefaultDegeneracyTol;
  // Non-degenerate but closer than this: the eigenbasis is unstable and the
  // result is flagged ill-conditioned.
  double conditioning_gap = 1e-4;

  // Two-qubit path: inner maximization over Alice's unit Bloch vectors.
  opt::SphereSearchOptions sphere{};
  // Degenerate two-qubit path: outer minimization over Bob's axis n_B. The
  // inner maximization per outer point uses `inner_sphere`.
  opt::SphereSearchOptions outer_sphere{64, 3, 0.35, {}};
  opt::SphereSearchOptions inner_sphere{128, 2, 0.35, {}};

  // General path: rank-1 measurements |psi><psi| on Alice's space.
  std::size_t general_starts = 48;
  std::size_t general_refine = 4;
  // Degenerate general path: generators of the unitary on each degenerate
  // eigenspace of Bob's marginal.
  std::size_t basis_starts = 16;
  std::size_t basis_refine = 3;
  std::size_t inner_general_starts = 16;
  std::size_t inner_general_refine = 2;

  opt::NelderMeadOptions nelder_mead{};
  std::uint64_t seed = 20160418;
};

struct MscResult {
  double value = 0.0;
  BlochVector optimal_m;      // two-qubit path (and qubit Alice on the general path)
  Ket optimal_vector;         // rank-1 measurement |psi>, normalized
  DensityMatrix steered_state;
  Basis reference_basis;
  bool degenerate_path = false;
  bool ill_conditioned = false;
  bool converged = true;
};

// Two-qubit MSC from the Pauli form: max over unit m of
// |T^T m x n_B| / |1 + a.m| with n_B = b/|b|, or its infimum over n_B when
// b = 0.
MscResult msc_two_qubit(const DensityMatrix& rho, const MscOptions& opts = {});

// Any d_A, d_B <= 4, maximizing over rank-1 POVM elements directly.
MscResult msc_general(const DensityMatrix& rho, const MscOptions& opts = {});

// Dispatches to msc_two_qubit for two qubits, msc_general otherwise.
MscResult msc(const DensityMatrix& rho, const MscOptions& opts = {});

// The objective of msc_two_qubit for a fixed axis n_B.
double steered_coherence_bloch(const PauliForm& theta, const BlochVector& m,
                               const BlochVector& n_b);

// l1 coherence in `basis` of Bob's state conditioned on |psi><psi|; zero when
// the outcome probability vanishes.
double steered_coherence(const ComplexMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                         std::span<const Complex> psi, const Basis& basis);

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // descending, lambda_i >= 0
  std::vector<Ket> alice;
  std::vector<Ket> bob;
};

SchmidtDecomposition schmidt_decompose(const PureState& psi);

// Rank-1 outcome that steers a full-Schmidt-rank pure state to the maximally
// coherent state in Bob's Schmidt basis: |psi_A> ~ sum_i (1/lambda_i)|phi_i>.
PovmElement optimal_measurement_pure(const PureState& psi);

// Deterministic brute force over a nested quasi-random set of rank-1
// measurement directions (d_A <= 3). For a non-degenerate marginal it never
// exceeds the true MSC. For a degenerate marginal it minimizes over a fixed
// set of 64 eigenbases.
double msc_oracle(const DensityMatrix& rho, std::size_t resolution);

}  // namespace steercoh
