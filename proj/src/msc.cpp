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

#include "steercoh/msc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "steercoh/coherence.hpp"

namespace steercoh {

namespace {

constexpr std::size_t kMaxGeneralDimension = 4;

double smallest_gap(const std::vector<double>& values) {
  double gap = INFINITY;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) gap = std::min(gap, values[i] - values[i + 1]);
  return gap;
}

Ket normalized_ket(std::span<const double> x) {
  const std::size_t d = x.size() / 2;
  Ket psi(d);
  double n2 = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    psi[i] = {x[i], x[d + i]};
    n2 += std::norm(psi[i]);
  }
  if (n2 > 0.0) {
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& c : psi) c *= inv;
  }
  return psi;
}

struct Rank1Optimum {
  double value = 0.0;
  Ket psi;
  bool converged = true;
};

// Multi-start Nelder-Mead over unnormalized psi in R^{2 d_A}.
Rank1Optimum maximize_rank1(const ComplexMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            const Basis& basis, std::size_t n_starts, std::size_t n_refine,
                            const opt::NelderMeadOptions& nm, std::uint64_t seed) {
  auto objective = [&](std::span<const double> x) {
    double n2 = 0.0;
    for (double v : x) n2 += v * v;
    if (n2 < 1e-24) return 0.0;
    return -steered_coherence(rho, dim_a, dim_b, normalized_ket(x), basis);
  };

  std::vector<std::vector<double>> starts;
  for (std::size_t a = 0; a < dim_a && starts.size() < n_starts; ++a) {
    std::vector<double> x(2 * dim_a, 0.0);
    x[a] = 1.0;
    starts.push_back(std::move(x));
  }
  if (starts.size() < n_starts) {
    std::vector<double> x(2 * dim_a, 0.0);
    std::fill(x.begin(), x.begin() + long(dim_a), 1.0 / std::sqrt(double(dim_a)));
    starts.push_back(std::move(x));
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (starts.size() < n_starts) {
    std::vector<double> x(2 * dim_a);
    for (auto& v : x) v = gauss(rng);
    starts.push_back(std::move(x));
  }

  std::vector<double> values(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) values[i] = objective(starts[i]);
  std::vector<std::size_t> order(starts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  opt::NelderMeadOptions local = nm;
  local.initial_step = 0.2;
  Rank1Optimum best{-values[order.front()], normalized_ket(starts[order.front()]), true};
  bool refined = false;
  for (std::size_t k = 0; k < std::min(n_refine, order.size()); ++k) {
    auto res = opt::nelder_mead_minimize(objective, starts[order[k]], local);
    if (!refined || -res.value > best.value + 1e-12) {
      best = {-res.value, normalized_ket(res.x), res.converged};
      refined = true;
    }
  }
  return best;
}

// Groups of consecutive indices whose eigenvalues are within tol.
std::vector<std::vector<std::size_t>> degenerate_blocks(const std::vector<double>& values,
                                                        double tol) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || values[i - 1] - values[i] >= tol) blocks.emplace_back();
    blocks.back().push_back(i);
  }
  std::erase_if(blocks, [](const auto& b) { return b.size() < 2; });
  return blocks;
}

std::size_t generator_size(const std::vector<std::vector<std::size_t>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size() * b.size();
  return n;
}

// Rotates each degenerate eigenspace by exp(iH), H read from `params`
// (per block: k diagonal reals, then real and imaginary upper entries).
Basis rotate_blocks(const Basis& basis, const std::vector<std::vector<std::size_t>>& blocks,
                    std::span<const double> params) {
  Basis out = basis;
  std::size_t pos = 0;
  for (const auto& block : blocks) {
    const std::size_t k = block.size();
    ComplexMatrix h(k, k);
    for (std::size_t i = 0; i < k; ++i) h(i, i) = params[pos++];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        h(i, j) = Complex(params[pos], params[pos + 1]);
        h(j, i) = std::conj(h(i, j));
        pos += 2;
      }
    const ComplexMatrix u = expi_hermitian(h);
    for (std::size_t j = 0; j < k; ++j) {
      Ket v(basis.vectors[0].size(), 0.0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < v.size(); ++r) v[r] += basis.vectors[block[i]][r] * u(i, j);
      out.vectors[block[j]] = std::move(v);
    }
  }
  return out;
}

BlochVector qubit_direction(std::span<const Complex> psi) { return bloch_vector(outer(psi)); }

void check_general_dims(const DensityMatrix& rho, std::size_t max_a) {
  if (!rho.is_bipartite()) throw Error(ErrorCode::kNotBipartite, "MSC needs a bipartite state");
  if (rho.dim_a() > max_a || rho.dim_b() > kMaxGeneralDimension) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "d_A = " + std::to_string(rho.dim_a()) + ", d_B = " + std::to_string(rho.dim_b()));
  }
}

}  // namespace

double steered_coherence_bloch(const PauliForm& theta, const BlochVector& m,
                               const BlochVector& n_b) {
  const double denom = std::abs(1.0 + dot(theta.a(), m));
  if (denom < 1e-15) return 0.0;
  return norm(cross(theta.T().transpose() * m, n_b)) / denom;
}

double steered_coherence(const ComplexMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                         std::span<const Complex> psi, const Basis& basis) {
  // sigma_{jk} = sum_{a,a'} conj(psi_a) psi_{a'} rho_{(a j),(a' k)}
  ComplexMatrix sigma(dim_b, dim_b);
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t ap = 0; ap < dim_a; ++ap) {
      const Complex w = std::conj(psi[a]) * psi[ap];
      for (std::size_t j = 0; j < dim_b; ++j)
        for (std::size_t k = 0; k < dim_b; ++k) sigma(j, k) += w * rho(a * dim_b + j, ap * dim_b + k);
    }
  const double p = std::real(sigma.trace());
  if (!(p > kZeroProbability)) return 0.0;
  return coherence_l1(sigma, basis) / p;
}

MscResult msc_two_qubit(const DensityMatrix& rho, const MscOptions& opts) {
  if (rho.dims() != std::vector<std::size_t>{2, 2}) {
    throw Error(ErrorCode::kWrongDimension, "msc_two_qubit needs a two-qubit state");
  }
  const PauliForm theta = pauli_decompose(rho);
  if (norm(theta.a()) >= 1.0 - 1e-9) {
    throw Error(ErrorCode::kTrivialProductState, "Alice's marginal is pure (|a| = 1)");
  }
  const auto marginal = eigen_hermitian(partial_trace(rho.matrix(), 2, 2, Subsystem::kB),
                                        opts.tol_degenerate);

  BlochVector axis;
  opt::SphereOptimum best;
  Basis reference;
  const bool degenerate = marginal.basis.degenerate;
  if (!degenerate) {
    axis = normalized(theta.b());
    best = opt::maximize_on_sphere(
        [&](const BlochVector& m) { return steered_coherence_bloch(theta, m, axis); }, opts.sphere);
    reference = marginal.basis;
  } else {
    // inf over n_B of max over m. The inner max is not concave in n_B, so
    // the outer search restarts from several grid minima.
    auto inner = [&](const BlochVector& n, const opt::SphereSearchOptions& s) {
      return opt::maximize_on_sphere(
          [&](const BlochVector& m) { return steered_coherence_bloch(theta, m, n); }, s);
    };
    const auto outer = opt::maximize_on_sphere(
        [&](const BlochVector& n) { return -inner(n, opts.inner_sphere).value; },
        opts.outer_sphere);
    axis = outer.argmax;
    best = inner(axis, opts.sphere);
    best.converged = best.converged && outer.converged;
    reference = bloch_basis(axis);
    reference.degenerate = true;
  }

  auto steered = steer(rho, PovmElement::from_bloch(best.argmax));
  return MscResult{
      .value = best.value,
      .optimal_m = best.argmax,
      .optimal_vector = bloch_ket(best.argmax),
      .steered_state = std::move(steered.state),
      .reference_basis = std::move(reference),
      .degenerate_path = degenerate,
      .ill_conditioned = !degenerate && smallest_gap(marginal.values) < opts.conditioning_gap,
      .converged = best.converged,
  };
}

MscResult msc_general(const DensityMatrix& rho, const MscOptions& opts) {
  check_general_dims(rho, kMaxGeneralDimension);
  const std::size_t da = rho.dim_a();
  const std::size_t db = rho.dim_b();
  const ComplexMatrix& m = rho.matrix();
  const auto marginal =
      eigen_hermitian(partial_trace(m, da, db, Subsystem::kB), opts.tol_degenerate);

  Basis reference = marginal.basis;
  Rank1Optimum best;
  bool converged = true;
  if (!marginal.basis.degenerate) {
    best = maximize_rank1(m, da, db, reference, opts.general_starts, opts.general_refine,
                          opts.nelder_mead, opts.seed);
  } else {
    const auto blocks = degenerate_blocks(marginal.values, opts.tol_degenerate);
    const std::size_t n_params = generator_size(blocks);
    auto inner = [&](std::span<const double> params) {
      return maximize_rank1(m, da, db, rotate_blocks(marginal.basis, blocks, params),
                            opts.inner_general_starts, opts.inner_general_refine,
                            opts.nelder_mead, opts.seed)
          .value;
    };

    std::vector<std::vector<double>> starts{std::vector<double>(n_params, 0.0)};
    std::mt19937_64 rng(opts.seed ^ 0x5bd1e995ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (starts.size() < opts.basis_starts) {
      std::vector<double> p(n_params);
      for (auto& v : p) v = gauss(rng);
      starts.push_back(std::move(p));
    }
    std::vector<double> values(starts.size());
    for (std::size_t i = 0; i < starts.size(); ++i) values[i] = inner(starts[i]);
    std::vector<std::size_t> order(starts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> best_params = starts[order.front()];
    double best_value = values[order.front()];
    opt::NelderMeadOptions outer_nm = opts.nelder_mead;
    outer_nm.initial_step = 0.3;
    outer_nm.x_tol = 1e-7;
    outer_nm.f_tol = 1e-11;
    outer_nm.max_evaluations = 600;
    for (std::size_t k = 0; k < std::min(opts.basis_refine, order.size()); ++k) {
      auto res = opt::nelder_mead_minimize(inner, starts[order[k]], outer_nm);
      if (res.value < best_value - 1e-12) {
        best_value = res.value;
        best_params = res.x;
      }
      converged = converged && res.converged;
    }
    reference = rotate_blocks(marginal.basis, blocks, best_params);
    reference.degenerate = true;
    best = maximize_rank1(m, da, db, reference, opts.general_starts, opts.general_refine,
                          opts.nelder_mead, opts.seed);
  }

  auto steered = steer(rho, PovmElement::projector(best.psi));
  return MscResult{
      .value = best.value,
      .optimal_m = da == 2 ? qubit_direction(best.psi) : BlochVector{},
      .optimal_vector = best.psi,
      .steered_state = std::move(steered.state),
      .reference_basis = std::move(reference),
      .degenerate_path = marginal.basis.degenerate,
      .ill_conditioned =
          !marginal.basis.degenerate && smallest_gap(marginal.values) < opts.conditioning_gap,
      .converged = converged && best.converged,
  };
}

MscResult msc(const DensityMatrix& rho, const MscOptions& opts) {
  if (rho.dims() == std::vector<std::size_t>{2, 2}) return msc_two_qubit(rho, opts);
  return msc_general(rho, opts);
}

SchmidtDecomposition schmidt_decompose(const PureState& psi) {
  const std::size_t da = psi.dim_a;
  const std::size_t db = psi.dim_b;
  if (psi.amplitudes.size() != da * db || da == 0 || db == 0) {
    throw Error(ErrorCode::kWrongDimension, "amplitude count does not match dims");
  }
  ComplexMatrix c(da, db, psi.amplitudes);
  const auto es = eigen_hermitian(c * c.adjoint());
  SchmidtDecomposition out;
  for (std::size_t i = 0; i < std::min(da, db); ++i) {
    const double lambda = std::sqrt(std::max(0.0, es.values[i]));
    out.coefficients.push_back(lambda);
    out.alice.push_back(es.basis.vectors[i]);
    Ket bob(db, 0.0);
    if (lambda > 1e-14) {
      for (std::size_t j = 0; j < db; ++j)
        for (std::size_t a = 0; a < da; ++a) bob[j] += std::conj(es.basis.vectors[i][a]) * c(a, j);
      for (auto& v : bob) v /= lambda;
    }
    out.bob.push_back(std::move(bob));
  }
  return out;
}

PovmElement optimal_measurement_pure(const PureState& psi) {
  const auto sd = schmidt_decompose(psi);
  if (psi.dim_a < psi.dim_b) {
    throw Error(ErrorCode::kRankDeficientSchmidt, "Schmidt rank cannot reach d_B when d_A < d_B");
  }
  Ket weights(psi.dim_a, 0.0);
  for (std::size_t i = 0; i < psi.dim_b; ++i) {
    const double lambda = sd.coefficients[i];
    if (lambda < 1e-8) {
      throw Error(ErrorCode::kRankDeficientSchmidt,
                  "Schmidt coefficient " + std::to_string(lambda) + " below 1e-8");
    }
    for (std::size_t a = 0; a < psi.dim_a; ++a) weights[a] += sd.alice[i][a] / lambda;
  }
  return PovmElement::projector(weights);
}

double msc_oracle(const DensityMatrix& rho, std::size_t resolution) {
  check_general_dims(rho, 3);
  const std::size_t da = rho.dim_a();
  const std::size_t db = rho.dim_b();
  const ComplexMatrix& m = rho.matrix();
  const auto marginal = eigen_hermitian(partial_trace(m, da, db, Subsystem::kB));

  std::vector<Basis> bases{marginal.basis};
  if (marginal.basis.degenerate) {
    const auto blocks = degenerate_blocks(marginal.values, kDefaultDegeneracyTol);
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> params(generator_size(blocks));
    while (bases.size() < 64) {
      for (auto& v : params) v = gauss(rng);
      bases.push_back(rotate_blocks(marginal.basis, blocks, params));
    }
  }

  auto direction = [&](std::size_t i) -> Ket {
    if (da == 1) return {1.0};
    if (da == 2) return bloch_ket(opt::sphere_sequence_point(i));
    const auto u = opt::golden_sequence_point(i, 4);
    const double r = std::sqrt(u[0]);
    const double s0 = 1.0 - r, s1 = r * (1.0 - u[1]), s2 = r * u[1];
    return {std::sqrt(s0), std::polar(std::sqrt(s1), 2.0 * std::numbers::pi * u[2]),
            std::polar(std::sqrt(s2), 2.0 * std::numbers::pi * u[3])};
  };

  std::vector<Ket> dirs;
  dirs.reserve(resolution);
  for (std::size_t i = 0; i < resolution; ++i) dirs.push_back(direction(i));

  double value = INFINITY;
  for (const auto& basis : bases) {
    double best = 0.0;
    for (const auto& psi : dirs) best = std::max(best, steered_coherence(m, da, db, psi, basis));
    value = std::min(value, best);
  }
  return value;
}

}  // namespace steercoh
