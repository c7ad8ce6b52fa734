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

#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "steercoh/qcore.hpp"
#include "steercoh/steering.hpp"

namespace steercoh {

// Completely positive trace-preserving map in Kraus form.
class KrausChannel {
 public:
  KrausChannel(std::vector<ComplexMatrix> kraus_ops, std::string label);

  const std::vector<ComplexMatrix>& kraus_ops() const noexcept { return ops_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t dim() const noexcept { return ops_.front().cols(); }

  ComplexMatrix apply(const ComplexMatrix& rho) const;

 private:
  std::vector<ComplexMatrix> ops_;
  std::string label_;
};

// E0 = |0><0| + sqrt(1-g)|1><1|, E1 = sqrt(g)|0><1|.
KrausChannel amplitude_damping(double gamma);

// sum_i e_i sigma_i (.) sigma_i. Bloch components shrink by
// p1 = e0 + e1 - e2 - e3 and its cyclic analogues.
KrausChannel unital_pauli(double e0, double e1, double e2, double e3);
std::array<double, 3> unital_shrink_factors(double e0, double e1, double e2, double e3);

// Measure-and-prepare: rho -> sum_k tr(F_k rho) |xi_k><xi_k|.
KrausChannel semi_classical(const Basis& basis, const std::vector<PovmElement>& povm);

KrausChannel identity_channel(std::size_t dim);

DensityMatrix apply_on_b(const DensityMatrix& rho, const KrausChannel& channel);
DensityMatrix apply_on_a(const DensityMatrix& rho, const KrausChannel& channel);

// Haar-random Stiefel isometry split into `n_kraus` blocks.
KrausChannel random_channel(std::size_t dim, std::size_t n_kraus, std::mt19937_64& rng);
KrausChannel random_unital(std::mt19937_64& rng);

}  // namespace steercoh
