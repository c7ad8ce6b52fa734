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

#include "steercoh/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace steercoh {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

const Ket kPlus{kInvSqrt2, kInvSqrt2};
const Ket kMinus{kInvSqrt2, -kInvSqrt2};

Ket tensor(const Ket& a, const Ket& b) {
  Ket out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

Ellipsoid axis_aligned(BlochVector center, std::array<double, 3> semiaxes,
                       std::array<BlochVector, 3> frame) {
  std::array<std::size_t, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return semiaxes[a] > semiaxes[b]; });
  Ellipsoid e;
  e.center = center;
  for (std::size_t i = 0; i < 3; ++i) {
    e.semiaxes[i] = semiaxes[idx[i]];
    e.frame[i] = frame[idx[i]];
  }
  return e;
}

constexpr std::array<BlochVector, 3> kCoordinateFrame{BlochVector{1, 0, 0}, BlochVector{0, 1, 0},
                                                      BlochVector{0, 0, 1}};

void require_open_unit(double v, const char* name, bool closed_low, bool closed_high) {
  const bool ok_low = closed_low ? v >= 0.0 : v > 0.0;
  const bool ok_high = closed_high ? v <= 1.0 : v < 1.0;
  if (!(ok_low && ok_high)) {
    throw Error(ErrorCode::kParameterOutOfRange, std::string(name) + " = " + std::to_string(v));
  }
}

Ket normalized_or_throw(const Ket& v, const char* name) {
  const double n = norm(v);
  if (v.size() != 2 || !(n > 1e-12)) {
    throw Error(ErrorCode::kGeometryViolation, std::string(name) + " is not a qubit state");
  }
  Ket out = v;
  for (auto& c : out) c /= n;
  return out;
}

}  // namespace

DensityMatrix pure_density(const PureState& psi) {
  return normalize_density(outer(psi.amplitudes), {psi.dim_a, psi.dim_b});
}

StateFamilyResult classical_state(std::span<const double> weights,
                                  const std::vector<DensityMatrix>& alice_states,
                                  const Basis& basis) {
  if (weights.empty() || weights.size() != alice_states.size() ||
      weights.size() > basis.dimension()) {
    throw Error(ErrorCode::kWeightsInvalid, "need one weight per Alice state, at most d_B terms");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw Error(ErrorCode::kWeightsInvalid, "negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::kWeightsInvalid, "weights sum to " + std::to_string(sum));
  }
  for (std::size_t i = 0; i < basis.dimension(); ++i)
    for (std::size_t j = 0; j < basis.dimension(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(inner(basis.vectors[i], basis.vectors[j]) - expected) > 1e-9) {
        throw Error(ErrorCode::kParameterOutOfRange, "basis is not orthonormal");
      }
    }
  const std::size_t da = alice_states.front().dim();
  const std::size_t db = basis.dimension();
  ComplexMatrix m(da * db, da * db);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (alice_states[i].dim() != da) {
      throw Error(ErrorCode::kDimensionMismatch, "Alice states of different dimension");
    }
    m += kron(alice_states[i].matrix(), outer(basis.vectors[i])) * weights[i];
  }
  return {normalize_density(m, {da, db}), 0.0, std::nullopt, std::nullopt, std::nullopt};
}

StateFamilyResult classical_c(double t) {
  require_open_unit(t, "t", true, true);
  const std::vector<double> w{t, 1.0 - t};
  const std::vector<DensityMatrix> alice{normalize_density(outer(kPlus), {2}),
                                         normalize_density(outer(kMinus), {2})};
  auto out = classical_state(w, alice, Basis{{kPlus, kMinus}, false});
  // Steered states are all mixtures of |+> and |->: the x-axis diameter.
  if (t > 0.0 && t < 1.0) {
    out.analytic_qse = axis_aligned({}, {1.0, 0.0, 0.0}, kCoordinateFrame);
  }
  return out;
}

StateFamilyResult rho_p(double p, double theta) {
  require_open_unit(p, "p", false, false);
  const Ket pp = tensor(kPlus, kPlus);
  const Ket mm = tensor(kMinus, kMinus);
  Ket psi(4);
  for (std::size_t i = 0; i < 4; ++i)
    psi[i] = std::cos(theta / 2.0) * pp[i] + std::sin(theta / 2.0) * mm[i];
  const ComplexMatrix m = outer(psi) * p + ComplexMatrix::identity(4) * ((1.0 - p) / 4.0);

  const double pc = p * std::cos(theta);
  const double denom = 1.0 - pc * pc;
  const double transverse = p * std::abs(std::sin(theta)) / std::sqrt(denom);
  const double c1 = p * (1.0 - p * std::cos(theta) * std::cos(theta)) / denom;
  return {normalize_density(m, {2, 2}), transverse,
          axis_aligned({p * (1.0 - p) * std::cos(theta) / denom, 0.0, 0.0},
                       {c1, transverse, transverse}, kCoordinateFrame),
          std::nullopt, std::nullopt};
}

StateFamilyResult werner(double p) {
  require_open_unit(p, "p", true, true);
  const Ket singlet{0.0, kInvSqrt2, -kInvSqrt2, 0.0};
  const ComplexMatrix m = outer(singlet) * p + ComplexMatrix::identity(4) * ((1.0 - p) / 4.0);
  return {normalize_density(m, {2, 2}), p, axis_aligned({}, {p, p, p}, kCoordinateFrame),
          std::nullopt, std::nullopt};
}

StateFamilyResult maximally_obese(double b) {
  require_open_unit(b, "b", true, false);
  const double s = std::sqrt(2.0 - b);
  const Ket psi_b{0.0, std::sqrt(1.0 - b) / s, 1.0 / s, 0.0};
  ComplexMatrix m = outer(psi_b) * (1.0 - b / 2.0);
  m(0, 0) += b / 2.0;
  const double r = std::sqrt(1.0 - b);
  return {normalize_density(m, {2, 2}), r,
          axis_aligned({0.0, 0.0, b}, {r, r, 1.0 - b}, kCoordinateFrame), std::nullopt,
          std::nullopt};
}

StateFamilyResult chord_state(const Ket& psi_in, const Ket& chi_in, const Ket& chi_prime_in) {
  const Ket psi = normalized_or_throw(psi_in, "psi");
  const Ket chi = normalized_or_throw(chi_in, "chi");
  const Ket chi_prime = normalized_or_throw(chi_prime_in, "chi'");
  const Ket psi_bar{-std::conj(psi[1]), std::conj(psi[0])};

  const BlochVector r = bloch_vector(outer(chi));
  const BlochVector r_prime = bloch_vector(outer(chi_prime));
  const BlochVector b = (r + r_prime) * 0.5;
  const BlochVector chord = r - r_prime;
  const double half = 0.5 * norm(chord);
  if (half < 1e-9) throw Error(ErrorCode::kGeometryViolation, "chi and chi' coincide");
  const double tilt = std::abs(dot(normalized(chord), b));
  if (tilt > 1e-9) {
    throw Error(ErrorCode::kGeometryViolation,
                "chord is not perpendicular to b (|cos| * b = " + std::to_string(tilt) + ")");
  }

  const ComplexMatrix m = (kron(outer(psi), outer(chi)) + kron(outer(psi_bar), outer(chi_prime))) * 0.5;

  const BlochVector u = normalized(chord);
  const BlochVector helper = std::abs(u.x) < 0.9 ? BlochVector{1, 0, 0} : BlochVector{0, 1, 0};
  const BlochVector v = normalized(cross(u, helper));
  Ellipsoid e;
  e.center = b;
  e.semiaxes = {half, 0.0, 0.0};
  e.frame = {u, v, cross(u, v)};
  // With b = 0 the state is classical (Bob's steered states are
  // antipodal), so the infimum over eigenbases vanishes.
  const double msc = norm(b) > 1e-9 ? std::sqrt(std::max(0.0, 1.0 - dot(b, b))) : 0.0;
  return {normalize_density(m, {2, 2}), msc, e, std::nullopt, std::nullopt};
}

StateFamilyResult chord_state_symmetric(double b) {
  require_open_unit(b, "b", true, false);
  const double s = std::sqrt(1.0 - b * b);
  return chord_state({1.0, 0.0}, bloch_ket({s, 0.0, b}), bloch_ket({-s, 0.0, b}));
}

double dlc_theta1(double b1, double b2, double theta) {
  auto h = [&](double x) { return b1 * std::sin(x) - b2 * std::sin(theta - x); };
  double lo = 0.0, hi = theta;
  // h(0) = -b2 sin(theta) <= 0 <= b1 sin(theta) = h(theta).
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DlcBounds dlc_bounds(const BlochVector& b1, const BlochVector& b2) {
  const bool swap = norm(b2) > norm(b1);
  const BlochVector& longer = swap ? b2 : b1;
  const BlochVector& shorter = swap ? b1 : b2;
  DlcBounds out;
  out.b1 = norm(longer);
  out.b2 = norm(shorter);
  out.theta = std::atan2(norm(cross(longer, shorter)), dot(longer, shorter));
  out.theta1 = dlc_theta1(out.b1, out.b2, out.theta);
  out.lower = out.b1 * std::sin(out.theta1);
  if (out.theta <= std::numbers::pi / 2.0) {
    out.upper = out.b1 * std::sin(out.theta);
    out.strict_upper = true;
  } else {
    out.upper = out.b1;
  }
  return out;
}

StateFamilyResult dlc_state(const BlochVector& b1, const BlochVector& b2, double q) {
  require_open_unit(q, "q", false, false);
  if (norm(b1) > 1.0 + 1e-10 || norm(b2) > 1.0 + 1e-10) {
    throw Error(ErrorCode::kParameterOutOfRange, "endpoint outside the Bloch ball");
  }
  if (norm(cross(b1, b2)) < 1e-9) {
    throw Error(ErrorCode::kRadialSegment, "segment [b1, b2] is collinear with the origin");
  }
  const ComplexMatrix zero{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix one{{0.0, 0.0}, {0.0, 1.0}};
  const ComplexMatrix m =
      kron(zero, qubit_operator(1.0, b1)) * q + kron(one, qubit_operator(1.0, b2)) * (1.0 - q);
  const BlochVector chord = b1 - b2;
  const BlochVector u = normalized(chord);
  const BlochVector v = normalized(cross(b1, b2));
  Ellipsoid e;
  e.center = (b1 + b2) * 0.5;
  e.semiaxes = {0.5 * norm(chord), 0.0, 0.0};
  e.frame = {u, v, cross(u, v)};
  return {normalize_density(m, {2, 2}), std::nullopt, e, dlc_bounds(b1, b2), std::nullopt};
}

StateFamilyResult pure_schmidt(std::span<const double> lambda, const ComplexMatrix& u_a,
                               const ComplexMatrix& u_b) {
  const std::size_t d = lambda.size();
  if (d < 2 || u_a.rows() != d || u_b.rows() != d || !u_a.is_square() || !u_b.is_square()) {
    throw Error(ErrorCode::kWrongDimension, "Schmidt data and unitaries disagree on d");
  }
  double sum = 0.0;
  for (double l : lambda) {
    if (!(l > 1e-12)) throw Error(ErrorCode::kRankDeficient, "Schmidt coefficient " + std::to_string(l));
    sum += l * l;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw Error(ErrorCode::kParameterOutOfRange, "sum lambda^2 = " + std::to_string(sum));
  }
  for (const auto* u : {&u_a, &u_b}) {
    if (max_abs_diff(u->adjoint() * *u, ComplexMatrix::identity(d)) > 1e-10) {
      throw Error(ErrorCode::kParameterOutOfRange, "local operator is not unitary");
    }
  }
  PureState psi{d, d, Ket(d * d, 0.0)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t j = 0; j < d; ++j) psi.amplitudes[a * d + j] += lambda[i] * u_a(a, i) * u_b(j, i);
  return {pure_density(psi), double(d - 1), std::nullopt, std::nullopt, psi};
}

StateFamilyResult x_state(const std::array<double, 4>& diagonal,
                          const std::array<Complex, 2>& anti_diagonal) {
  ComplexMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = diagonal[i];
  m(0, 3) = anti_diagonal[0];
  m(3, 0) = std::conj(anti_diagonal[0]);
  m(1, 2) = anti_diagonal[1];
  m(2, 1) = std::conj(anti_diagonal[1]);
  StateFamilyResult out{validate_density(m, {2, 2}), std::nullopt, std::nullopt, std::nullopt,
                        std::nullopt};

  const PauliForm theta = pauli_decompose(out.state);
  if (norm(theta.a()) >= 1.0 - 1e-9) return out;
  const Ellipsoid e = qse(out.state);
  const double b = norm(theta.b());
  if (b > kDefaultDegeneracyTol) {
    // Bob's Bloch vector lies on z, which is one of the QSE axes; the MSC is
    // the longer of the two transverse semiaxes.
    std::size_t along = 0;
    for (std::size_t i = 1; i < 3; ++i)
      if (std::abs(e.frame[i].z) > std::abs(e.frame[along].z)) along = i;
    double best = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != along) best = std::max(best, e.semiaxes[i]);
    out.analytic_msc = best;
  } else if (norm(e.center) < 1e-9) {
    // Origin-centered QSE and arbitrary n_B: the infimum is reached with n_B
    // along the longest axis, leaving the middle semiaxis.
    out.analytic_msc = e.semiaxes[1];
  }
  return out;
}

StateFamilyResult product_state(const DensityMatrix& alice, const DensityMatrix& bob) {
  if (alice.is_bipartite() || bob.is_bipartite()) {
    throw Error(ErrorCode::kWrongDimension, "product_state takes single-system states");
  }
  StateFamilyResult out{normalize_density(kron(alice.matrix(), bob.matrix()),
                                          {alice.dim(), bob.dim()}),
                        0.0, std::nullopt, std::nullopt, std::nullopt};
  if (alice.dim() == 2 && bob.dim() == 2 && norm(bloch_vector(alice)) < 1.0 - 1e-9) {
    out.analytic_qse = axis_aligned(bloch_vector(bob), {0.0, 0.0, 0.0}, kCoordinateFrame);
  }
  return out;
}

}  // namespace steercoh
