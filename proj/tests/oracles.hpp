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

// Reference computations for the tests, written directly from the
// definitions with plain arrays so they share no code with the library.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "steercoh/qcore.hpp"

namespace oracle {

using C = std::complex<double>;
using M4 = std::array<std::array<C, 4>, 4>;
using V3 = std::array<double, 3>;

inline M4 to_array(const steercoh::ComplexMatrix& m) {
  M4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = m(i, j);
  return out;
}

inline C sigma(int k, int r, int c) {
  const C i(0.0, 1.0);
  switch (k) {
    case 0: return r == c ? 1.0 : 0.0;
    case 1: return r != c ? 1.0 : 0.0;
    case 2: return r == c ? C(0.0) : (r == 0 ? -i : i);
    default: return r != c ? C(0.0) : (r == 0 ? 1.0 : -1.0);
  }
}

// theta_ij = tr(rho sigma_i (x) sigma_j).
inline std::array<std::array<double, 4>, 4> correlations(const M4& rho) {
  std::array<std::array<double, 4>, 4> th{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      C acc = 0.0;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
          acc += rho[c][r] * sigma(i, r / 2, c / 2) * sigma(j, r % 2, c % 2);
        }
      th[i][j] = acc.real();
    }
  return th;
}

inline V3 cross3(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm3(const V3& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

// Maximum over unit m of |T^T m x n| / (1 + a.m), n = b/|b|; requires b != 0.
// Product grid in (polar, azimuth) followed by compass search.
inline double brute_msc(const M4& rho) {
  const auto th = correlations(rho);
  const V3 a{th[1][0], th[2][0], th[3][0]};
  V3 n{th[0][1], th[0][2], th[0][3]};
  const double nb = norm3(n);
  for (auto& x : n) x /= nb;
  auto f = [&](double u, double v) {
    const V3 m{std::sin(u) * std::cos(v), std::sin(u) * std::sin(v), std::cos(u)};
    V3 s{};
    double den = 1.0;
    for (int k = 0; k < 3; ++k) {
      den += a[k] * m[k];
      for (int j = 0; j < 3; ++j) s[k] += th[j + 1][k + 1] * m[j];
    }
    return norm3(cross3(s, n)) / std::abs(den);
  };
  constexpr int kU = 90, kV = 180;
  std::vector<std::array<double, 3>> seeds;
  for (int i = 0; i <= kU; ++i)
    for (int j = 0; j < kV; ++j) {
      const double u = M_PI * i / kU, v = 2.0 * M_PI * j / kV;
      seeds.push_back({f(u, v), u, v});
    }
  std::partial_sort(seeds.begin(), seeds.begin() + 8, seeds.end(),
                    [](const auto& x, const auto& y) { return x[0] > y[0]; });
  double best = 0.0;
  for (int s = 0; s < 8; ++s) {
    double val = seeds[s][0], u = seeds[s][1], v = seeds[s][2];
    for (double step = 0.05; step > 1e-13;) {
      bool moved = false;
      for (auto [du, dv] : {std::pair{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}}) {
        const double cand = f(u + du, v + dv);
        if (cand > val) val = cand, u += du, v += dv, moved = true;
      }
      if (!moved) step *= 0.5;
    }
    best = std::max(best, val);
  }
  return best;
}

// sum_{i != j} |<xi_i| rho |xi_j>|.
inline double l1_coherence(const steercoh::ComplexMatrix& rho,
                           const std::vector<std::vector<C>>& basis) {
  double total = 0.0;
  const std::size_t d = basis.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      C acc = 0.0;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) acc += std::conj(basis[i][r]) * rho(r, c) * basis[j][c];
      total += std::abs(acc);
    }
  return total;
}

inline double damped_classical(double t, double g) {
  return 2.0 * t * g * std::sqrt(1.0 - g) /
         std::sqrt((1.0 - 2.0 * t) * (1.0 - 2.0 * t) * (1.0 - g) + g * g);
}

inline double rho_p_msc(double p, double th) {
  const double pc = p * std::cos(th);
  return p * std::abs(std::sin(th)) / std::sqrt(1.0 - pc * pc);
}

struct Spheroid {
  double center_x, c1, c2;
};
inline Spheroid rho_p_ellipsoid(double p, double th) {
  const double c = std::cos(th), pc = p * c;
  return {p * (1.0 - p) * c / (1.0 - pc * pc), p * (1.0 - p * c * c) / (1.0 - pc * pc),
          p * std::abs(std::sin(th)) / std::sqrt(1.0 - pc * pc)};
}

}  // namespace oracle
