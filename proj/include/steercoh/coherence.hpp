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

#include "steercoh/qcore.hpp"

namespace steercoh {

// l1-norm coherence: sum of |<xi_i|rho|xi_j>| over i != j. The state is used
// as given; normalizing by an outcome probability is the caller's job.
double coherence_l1(const ComplexMatrix& rho, const Basis& basis);
double coherence_l1(const DensityMatrix& rho, const Basis& basis);

// Qubit specialization: the distance from the point b to the line spanned
// by the unit axis n, i.e. |b x n|.
double coherence_bloch(const BlochVector& b, const BlochVector& n);

// Eigenbasis {|n>, |-n>} of the qubit observable n.sigma.
Basis bloch_basis(const BlochVector& n);

}  // namespace steercoh
