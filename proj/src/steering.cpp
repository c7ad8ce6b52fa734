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

#include "steercoh/steering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steercoh {

PovmElement::PovmElement(ComplexMatrix m) : m_(std::move(m)) {
  const double herm = hermitian_deviation(m_);
  if (!(herm <= 1e-10)) {
    throw Error(ErrorCode::kInvalidPovmElement, "not Hermitian, deviation " + std::to_string(herm));
  }
  const auto es = eigen_hermitian(m_);
  if (es.values.back() < -1e-10 || es.values.front() > 1.0 + 1e-10) {
    throw Error(ErrorCode::kInvalidPovmElement,
                "eigenvalues outside [0, 1]: [" + std::to_string(es.values.back()) + ", " +
                    std::to_string(es.values.front()) + "]");
  }
}

PovmElement PovmElement::from_bloch(const BlochVector& m) {
  return PovmElement(qubit_operator(1.0, m));
}

PovmElement PovmElement::projector(std::span<const Complex> ket) {
  const double n = norm(ket);
  if (!(n > 0.0)) throw Error(ErrorCode::kInvalidPovmElement, "zero vector");
  return PovmElement(outer(ket) * (1.0 / (n * n)));
}

ComplexMatrix steered_operator(const ComplexMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                               const ComplexMatrix& m) {
  if (m.rows() != dim_a || !m.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch, "POVM element does not act on Alice's space");
  }
  // tr_A((M x 1) rho)_{jk} = sum_{a,a'} M_{a'a} rho_{(a j),(a' k)}
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t ap = 0; ap < dim_a; ++ap) {
      const Complex w = m(ap, a);
      if (w == Complex{}) continue;
      for (std::size_t j = 0; j < dim_b; ++j)
        for (std::size_t k = 0; k < dim_b; ++k) out(j, k) += w * rho(a * dim_b + j, ap * dim_b + k);
    }
  return out;
}

SteeredState steer(const DensityMatrix& rho, const PovmElement& m) {
  if (!rho.is_bipartite()) throw Error(ErrorCode::kNotBipartite, "steering needs two subsystems");
  const ComplexMatrix sigma = steered_operator(rho.matrix(), rho.dim_a(), rho.dim_b(), m.matrix());
  const double p = std::real(sigma.trace());
  if (!(p > kZeroProbability)) {
    throw Error(ErrorCode::kZeroProbability, "outcome probability " + std::to_string(p));
  }
  return {normalize_density(sigma, {rho.dim_b()}), p};
}

BlochVector steered_bloch(const PauliForm& theta, const BlochVector& m) {
  const double denom = 1.0 + dot(theta.a(), m);
  if (!(std::abs(denom) > 1e-12)) {
    throw Error(ErrorCode::kSingularDenominator, "|1 + a.m| = " + std::to_string(std::abs(denom)));
  }
  return (theta.b() + theta.T().transpose() * m) / std::abs(denom);
}

DensityMatrix canonical_transform(const DensityMatrix& rho) {
  if (rho.dims() != std::vector<std::size_t>{2, 2}) {
    throw Error(ErrorCode::kWrongDimension, "canonical_transform needs a two-qubit state");
  }
  const ComplexMatrix rho_a = partial_trace(rho.matrix(), 2, 2, Subsystem::kA);
  const auto es = eigen_hermitian(rho_a);
  if (es.values.back() < 1e-10) {
    throw Error(ErrorCode::kSingularMarginal,
                "Alice's marginal has eigenvalue " + std::to_string(es.values.back()));
  }
  std::vector<double> inv_sqrt(es.values.size());
  for (std::size_t i = 0; i < inv_sqrt.size(); ++i) inv_sqrt[i] = 1.0 / std::sqrt(es.values[i]);
  const ComplexMatrix v = es.basis.as_columns();
  const ComplexMatrix filter =
      kron(v * ComplexMatrix::diagonal(inv_sqrt) * v.adjoint(), ComplexMatrix::identity(2));
  return normalize_density(filter * rho.matrix() * filter, {2, 2});
}

Ellipsoid qse(const DensityMatrix& rho) {
  const PauliForm can = pauli_decompose(canonical_transform(rho));
  const Matrix3 t = can.T();
  // Steered points are b + T^T m over the unit ball, so the axes are the
  // eigenvectors of T^T T and the semiaxes its square-rooted eigenvalues.
  const Matrix3 gram = t.transpose() * t;
  ComplexMatrix g(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) g(r, c) = 0.5 * (gram(r, c) + gram(c, r));
  const auto es = eigen_hermitian(g);

  Ellipsoid e;
  e.center = can.b();
  for (std::size_t i = 0; i < 3; ++i) {
    e.semiaxes[i] = std::sqrt(std::max(0.0, es.values[i]));
    const auto& v = es.basis.vectors[i];
    e.frame[i] = normalized(BlochVector{v[0].real(), v[1].real(), v[2].real()});
  }
  return e;
}

BlochVector surface_point(const Ellipsoid& e, const BlochVector& unit) {
  BlochVector p = e.center;
  for (std::size_t i = 0; i < 3; ++i) p += e.frame[i] * (e.semiaxes[i] * unit[i]);
  return p;
}

QuadricResidual quadric_residual(const Ellipsoid& e, const BlochVector& point, double zero_axis) {
  QuadricResidual r;
  double s = 0.0;
  const BlochVector rel = point - e.center;
  for (std::size_t i = 0; i < 3; ++i) {
    const double y = dot(rel, e.frame[i]);
    if (e.semiaxes[i] > zero_axis) {
      s += (y / e.semiaxes[i]) * (y / e.semiaxes[i]);
    } else {
      r.off_support = std::max(r.off_support, std::abs(y));
    }
  }
  r.quadric = s - 1.0;
  return r;
}

}  // namespace steercoh
