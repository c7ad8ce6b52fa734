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

#include "steercoh/channels.hpp"

#include <cmath>
#include <string>

namespace steercoh {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops, std::string label)
    : ops_(std::move(kraus_ops)), label_(std::move(label)) {
  if (ops_.empty()) throw Error(ErrorCode::kParameterOutOfRange, "channel without Kraus operators");
  const std::size_t d = ops_.front().cols();
  ComplexMatrix sum(d, d);
  for (const auto& e : ops_) {
    if (e.cols() != d || e.rows() != d) {
      throw Error(ErrorCode::kDimensionMismatch, "Kraus operators of mixed shape");
    }
    sum += e.adjoint() * e;
  }
  const double dev = max_abs_diff(sum, ComplexMatrix::identity(d));
  if (dev > 1e-10) {
    throw Error(ErrorCode::kIncompletePovm, "sum E^dagger E deviates from identity by " +
                                                 std::to_string(dev));
  }
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& rho) const {
  ComplexMatrix out(rho.rows(), rho.cols());
  for (const auto& e : ops_) out += e * rho * e.adjoint();
  return out;
}

KrausChannel amplitude_damping(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw Error(ErrorCode::kParameterOutOfRange, "gamma = " + std::to_string(gamma));
  }
  return KrausChannel({ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}},
                       ComplexMatrix{{0.0, std::sqrt(gamma)}, {0.0, 0.0}}},
                      "amplitude-damping");
}

std::array<double, 3> unital_shrink_factors(double e0, double e1, double e2, double e3) {
  return {e0 + e1 - e2 - e3, e0 - e1 + e2 - e3, e0 - e1 - e2 + e3};
}

KrausChannel unital_pauli(double e0, double e1, double e2, double e3) {
  const std::array<double, 4> e{e0, e1, e2, e3};
  double sum = 0.0;
  for (double v : e) {
    if (!(v >= 0.0)) throw Error(ErrorCode::kParameterOutOfRange, "negative Pauli weight");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::kParameterOutOfRange, "Pauli weights sum to " + std::to_string(sum));
  }
  std::vector<ComplexMatrix> ops;
  for (std::size_t i = 0; i < 4; ++i)
    if (e[i] > 0.0) ops.push_back(pauli(i) * std::sqrt(e[i]));
  return KrausChannel(std::move(ops), "unital-pauli");
}

KrausChannel semi_classical(const Basis& basis, const std::vector<PovmElement>& povm) {
  const std::size_t d = basis.dimension();
  if (povm.empty() || povm.size() > d) {
    throw Error(ErrorCode::kParameterOutOfRange, "need between 1 and d POVM elements");
  }
  ComplexMatrix sum(d, d);
  for (const auto& f : povm) {
    if (f.dim() != d) throw Error(ErrorCode::kDimensionMismatch, "POVM element dimension");
    sum += f.matrix();
  }
  const double dev = max_abs_diff(sum, ComplexMatrix::identity(d));
  if (dev > 1e-10) {
    throw Error(ErrorCode::kIncompletePovm, "POVM sums to identity within " + std::to_string(dev));
  }
  // F_k = sum_j mu_j |f_j><f_j| gives Kraus operators sqrt(mu_j) |xi_k><f_j|.
  std::vector<ComplexMatrix> ops;
  for (std::size_t k = 0; k < povm.size(); ++k) {
    const auto es = eigen_hermitian(povm[k].matrix());
    for (std::size_t j = 0; j < d; ++j) {
      if (es.values[j] <= 1e-15) continue;
      ComplexMatrix e(d, d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          e(r, c) = std::sqrt(es.values[j]) * basis.vectors[k][r] * std::conj(es.basis.vectors[j][c]);
      ops.push_back(std::move(e));
    }
  }
  return KrausChannel(std::move(ops), "semi-classical");
}

KrausChannel identity_channel(std::size_t dim) {
  return KrausChannel({ComplexMatrix::identity(dim)}, "identity");
}

DensityMatrix apply_on_b(const DensityMatrix& rho, const KrausChannel& channel) {
  if (!rho.is_bipartite()) throw Error(ErrorCode::kNotBipartite, "apply_on_b needs two subsystems");
  if (channel.dim() != rho.dim_b()) {
    throw Error(ErrorCode::kDimensionMismatch, "channel does not act on B's dimension");
  }
  const ComplexMatrix id = ComplexMatrix::identity(rho.dim_a());
  ComplexMatrix out(rho.dim(), rho.dim());
  for (const auto& e : channel.kraus_ops()) {
    const ComplexMatrix k = kron(id, e);
    out += k * rho.matrix() * k.adjoint();
  }
  return normalize_density(out, rho.dims());
}

DensityMatrix apply_on_a(const DensityMatrix& rho, const KrausChannel& channel) {
  if (!rho.is_bipartite()) throw Error(ErrorCode::kNotBipartite, "apply_on_a needs two subsystems");
  const std::size_t da = rho.dim_a();
  const std::size_t db = rho.dim_b();
  const auto swapped = normalize_density(swap_subsystems(rho.matrix(), da, db), {db, da});
  const auto acted = apply_on_b(swapped, channel);
  return normalize_density(swap_subsystems(acted.matrix(), db, da), {da, db});
}

KrausChannel random_channel(std::size_t dim, std::size_t n_kraus, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  // Stack G_k, then V = G (G^dagger G)^{-1/2} is an isometry.
  std::vector<ComplexMatrix> g(n_kraus, ComplexMatrix(dim, dim));
  ComplexMatrix gram(dim, dim);
  for (auto& gk : g) {
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) gk(r, c) = Complex(gauss(rng), gauss(rng));
    gram += gk.adjoint() * gk;
  }
  const ComplexMatrix inv_sqrt =
      hermitian_function((gram + gram.adjoint()) * 0.5, [](double x) { return 1.0 / std::sqrt(x); });
  for (auto& gk : g) gk = gk * inv_sqrt;
  return KrausChannel(std::move(g), "random");
}

KrausChannel random_unital(std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::array<double, 4> e{};
  double sum = 0.0;
  for (auto& v : e) sum += (v = expo(rng));
  for (auto& v : e) v /= sum;
  // Absorb round-off so the weights sum to 1 within 1e-12.
  e[0] = 1.0 - e[1] - e[2] - e[3];
  return unital_pauli(e[0], e[1], e[2], e[3]);
}

}  // namespace steercoh
