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

#include "steercoh/families.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace steercoh {

namespace {

double param(const FamilySpec& spec, std::string_view key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "family '" + spec.name + "' needs parameter '" + std::string(key) + "'");
  }
  return it->second;
}

double param_or(const FamilySpec& spec, std::string_view key, double fallback) {
  const auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

}  // namespace

std::vector<std::string> family_names() {
  return {"werner", "rho-p", "classical-c", "max-obese", "chord", "dlc",
          "schmidt", "bell",  "product",     "x-state"};
}

StateFamilyResult make_family(const FamilySpec& spec) {
  const std::string& n = spec.name;
  if (n == "werner") return werner(param(spec, "p"));
  if (n == "rho-p") return rho_p(param(spec, "p"), param(spec, "theta"));
  if (n == "classical-c") return classical_c(param(spec, "t"));
  if (n == "max-obese") return maximally_obese(param(spec, "b"));
  if (n == "chord") return chord_state_symmetric(param(spec, "b"));
  if (n == "dlc") {
    const double theta = param(spec, "theta");
    const double b2 = param(spec, "b2");
    return dlc_state({0.0, 0.0, param(spec, "b1")},
                     {b2 * std::sin(theta), 0.0, b2 * std::cos(theta)}, param(spec, "q"));
  }
  if (n == "schmidt" || n == "bell") {
    const double t = n == "bell" ? 0.5 : param(spec, "t");
    if (!(t > 0.0 && t < 1.0)) {
      throw Error(ErrorCode::kParameterOutOfRange, "t = " + std::to_string(t));
    }
    const std::vector<double> lambda{std::sqrt(t), std::sqrt(1.0 - t)};
    const auto id = ComplexMatrix::identity(2);
    return pure_schmidt(lambda, id, id);
  }
  if (n == "product") {
    const double a = param_or(spec, "a", 0.0);
    const double b = param_or(spec, "b", 0.0);
    if (std::abs(a) > 1.0 || std::abs(b) > 1.0) {
      throw Error(ErrorCode::kParameterOutOfRange, "product Bloch lengths must lie in [-1, 1]");
    }
    return product_state(qubit_state({0.0, 0.0, a}), qubit_state({0.0, 0.0, b}));
  }
  if (n == "x-state") {
    return x_state({param(spec, "d0"), param(spec, "d1"), param(spec, "d2"), param(spec, "d3")},
                   {Complex(param_or(spec, "z0re", 0.0), param_or(spec, "z0im", 0.0)),
                    Complex(param_or(spec, "z1re", 0.0), param_or(spec, "z1im", 0.0))});
  }
  throw Error(ErrorCode::kParameterOutOfRange, "unknown family '" + n + "'");
}

double parse_real(std::string_view text) {
  double factor = 1.0;
  if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
    factor = std::numbers::pi;
    text.remove_suffix(2);
    if (text.empty()) return factor;
    if (text.back() == '*') text.remove_suffix(1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "not a number: '" + std::string(text) + "'");
  }
  return value * factor;
}

std::vector<std::string> channel_names() {
  return {"amplitude-damping", "phase-damping", "depolarizing"};
}

KrausChannel make_channel(std::string_view name, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw Error(ErrorCode::kParameterOutOfRange, "gamma = " + std::to_string(gamma));
  }
  if (name == "amplitude-damping") return amplitude_damping(gamma);
  if (name == "phase-damping") return unital_pauli(1.0 - gamma / 2.0, 0.0, 0.0, gamma / 2.0);
  if (name == "depolarizing") {
    return unital_pauli(1.0 - 0.75 * gamma, gamma / 4.0, gamma / 4.0, gamma / 4.0);
  }
  throw Error(ErrorCode::kParameterOutOfRange, "unknown channel '" + std::string(name) + "'");
}

std::vector<double> uniform_grid(std::size_t points) {
  if (points < 2) throw Error(ErrorCode::kParameterOutOfRange, "grid needs at least 2 points");
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) g[i] = double(i) / double(points - 1);
  return g;
}

std::vector<SweepPoint> sweep(const DensityMatrix& rho, std::string_view channel,
                              std::span<const double> gammas, const MscOptions& opts) {
  std::vector<SweepPoint> out;
  out.reserve(gammas.size());
  for (double g : gammas) {
    const auto r = msc(apply_on_b(rho, make_channel(channel, g)), opts);
    out.push_back({g, r.value, r.converged});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SweepPoint& a, const SweepPoint& b) { return a.gamma < b.gamma; });
  return out;
}

std::string sweep_csv(std::span<const SweepPoint> points) {
  std::string csv = "gamma,msc\n";
  char buf[64];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof buf, "%.10g,%.15g\n", p.gamma, p.msc);
    csv += buf;
  }
  return csv;
}

}  // namespace steercoh
