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

#include "steercoh/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace steercoh::opt {

namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

// One Nelder-Mead run with standard coefficients.
NelderMeadResult run_simplex(const Objective& f, const std::vector<double>& start, double step,
                             const NelderMeadOptions& opts, int budget) {
  const std::size_t n = start.size();
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  simplex.push_back({start, eval(start)});
  for (std::size_t i = 0; i < n; ++i) {
    auto x = start;
    x[i] += step;
    simplex.push_back({x, eval(x)});
  }

  bool converged = false;
  std::vector<double> centroid(n), trial(n);
  while (evals < budget) {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    const double spread = simplex.back().f - simplex.front().f;
    double size = 0.0;
    for (std::size_t v = 1; v <= n; ++v) {
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double diff = simplex[v].x[i] - simplex[0].x[i];
        d += diff * diff;
      }
      size = std::max(size, std::sqrt(d));
    }
    if (spread <= opts.f_tol && size <= opts.x_tol) {
      converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i] / double(n);

    auto along = [&](double coef) {
      for (std::size_t i = 0; i < n; ++i)
        trial[i] = centroid[i] + coef * (simplex[n].x[i] - centroid[i]);
      return trial;
    };

    auto reflected = along(-1.0);
    const double fr = eval(reflected);
    if (fr < simplex[0].f) {
      auto expanded = along(-2.0);
      const double fe = eval(expanded);
      simplex[n] = fe < fr ? Vertex{expanded, fe} : Vertex{reflected, fr};
    } else if (fr < simplex[n - 1].f) {
      simplex[n] = {reflected, fr};
    } else {
      auto contracted = fr < simplex[n].f ? along(-0.5) : along(0.5);
      const double fc = eval(contracted);
      if (fc < std::min(fr, simplex[n].f)) {
        simplex[n] = {contracted, fc};
      } else {
        for (std::size_t v = 1; v <= n; ++v) {
          for (std::size_t i = 0; i < n; ++i)
            simplex[v].x[i] = simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
          simplex[v].f = eval(simplex[v].x);
        }
      }
    }
  }
  const auto best = std::min_element(simplex.begin(), simplex.end(),
                                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  return {best->x, best->f, evals, converged};
}

}  // namespace

NelderMeadResult nelder_mead_minimize(const Objective& f, std::vector<double> start,
                                      const NelderMeadOptions& opts) {
  NelderMeadResult best = run_simplex(f, start, opts.initial_step, opts, opts.max_evaluations);
  int total = best.evaluations;
  double step = opts.initial_step;
  for (int r = 0; r < opts.max_restarts && total < opts.max_evaluations; ++r) {
    step *= 0.1;
    auto next = run_simplex(f, best.x, std::max(step, 10 * opts.x_tol), opts,
                            opts.max_evaluations - total);
    total += next.evaluations;
    const double gain = best.value - next.value;
    if (next.value <= best.value) {
      best.x = std::move(next.x);
      best.value = next.value;
    }
    best.converged = next.converged;
    if (gain <= opts.f_tol) break;
  }
  best.evaluations = total;
  return best;
}

std::vector<BlochVector> fibonacci_sphere(std::size_t n) {
  std::vector<BlochVector> pts;
  pts.reserve(n);
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * double(i) + 1.0) / double(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * double(i);
    pts.push_back({r * std::cos(phi), r * std::sin(phi), z});
  }
  return pts;
}

std::vector<double> golden_sequence_point(std::size_t index, std::size_t dim) {
  // phi_d is the positive root of x^{d+1} = x + 1.
  double phi = 2.0;
  for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / double(dim + 1));
  std::vector<double> out(dim);
  double alpha = 1.0;
  for (std::size_t k = 0; k < dim; ++k) {
    alpha /= phi;
    const double v = 0.5 + alpha * double(index + 1);
    out[k] = v - std::floor(v);
  }
  return out;
}

BlochVector sphere_sequence_point(std::size_t index) {
  const auto u = golden_sequence_point(index, 2);
  const double z = 1.0 - 2.0 * u[0];
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = 2.0 * std::numbers::pi * u[1];
  return {r * std::cos(phi), r * std::sin(phi), z};
}

SphereOptimum refine_on_sphere(const std::function<double(const BlochVector&)>& f,
                               const BlochVector& start, const NelderMeadOptions& opts) {
  SphereOptimum out{normalized(start), f(normalized(start)), true, 1};
  double step = opts.initial_step;
  for (int round = 0; round < 6; ++round) {
    const BlochVector m0 = out.argmax;
    const BlochVector helper = std::abs(m0.x) < 0.9 ? BlochVector{1, 0, 0} : BlochVector{0, 1, 0};
    const BlochVector e1 = normalized(cross(m0, helper));
    const BlochVector e2 = cross(m0, e1);
    auto chart = [&](std::span<const double> uv) { return normalized(m0 + e1 * uv[0] + e2 * uv[1]); };

    NelderMeadOptions local = opts;
    local.initial_step = step;
    local.max_restarts = 0;
    const auto res = nelder_mead_minimize(
        [&](std::span<const double> uv) { return -f(chart(uv)); }, {0.0, 0.0}, local);
    out.evaluations += res.evaluations;
    const double gain = -res.value - out.value;
    if (-res.value >= out.value) {
      out.argmax = chart(res.x);
      out.value = -res.value;
    }
    out.converged = res.converged;
    if (gain <= opts.f_tol) break;
    step = std::max(step * 0.1, 10 * opts.x_tol);
  }
  return out;
}

SphereOptimum maximize_on_sphere(const std::function<double(const BlochVector&)>& f,
                                 const SphereSearchOptions& opts) {
  const auto grid = fibonacci_sphere(opts.grid);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f(grid[i]);

  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

  std::vector<std::size_t> starts;
  const double min_cos = std::cos(opts.min_separation);
  for (auto idx : order) {
    if (starts.size() >= opts.refine) break;
    const bool far = std::all_of(starts.begin(), starts.end(), [&](std::size_t s) {
      return dot(grid[s], grid[idx]) < min_cos;
    });
    if (far) starts.push_back(idx);
  }

  SphereOptimum best{grid[order.front()], values[order.front()], true, int(grid.size())};
  bool have_refined = false;
  int evals = int(grid.size());
  for (auto s : starts) {
    auto r = refine_on_sphere(f, grid[s], opts.nelder_mead);
    evals += r.evaluations;
    // Strict improvement keeps the earliest start on ties.
    if (!have_refined || r.value > best.value + 1e-12) {
      best = r;
      have_refined = true;
    }
  }
  best.evaluations = evals;
  return best;
}

}  // namespace steercoh::opt
