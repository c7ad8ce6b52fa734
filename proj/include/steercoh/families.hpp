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

// Named state families and channels as used by the command-line tool and the
// Python module, plus channel-strength sweeps of the MSC.

#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "steercoh/channels.hpp"
#include "steercoh/msc.hpp"
#include "steercoh/states.hpp"

namespace steercoh {

struct FamilySpec {
  std::string name;
  std::map<std::string, double, std::less<>> params;
};

// werner(p), rho-p(p, theta), classical-c(t), max-obese(b), chord(b),
// dlc(b1, b2, theta, q), schmidt(t), bell(), product(a, b),
// x-state(d0..d3, z0re, z0im, z1re, z1im).
std::vector<std::string> family_names();
StateFamilyResult make_family(const FamilySpec& spec);

// Reals with an optional "pi" factor: "0.25", "0.1pi", "pi".
double parse_real(std::string_view text);

// amplitude-damping, phase-damping, depolarizing; gamma in [0, 1].
std::vector<std::string> channel_names();
KrausChannel make_channel(std::string_view name, double gamma);

struct SweepPoint {
  double gamma = 0.0;
  double msc = 0.0;
  bool converged = true;
};

std::vector<double> uniform_grid(std::size_t points);

// MSC of (1 x channel(gamma)) rho for each gamma, sorted by gamma.
std::vector<SweepPoint> sweep(const DensityMatrix& rho, std::string_view channel,
                              std::span<const double> gammas, const MscOptions& opts = {});

// Header "gamma,msc", one row per point, '\n' line endings.
std::string sweep_csv(std::span<const SweepPoint> points);

}  // namespace steercoh
