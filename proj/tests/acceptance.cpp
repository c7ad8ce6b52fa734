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

// Acceptance run: one PASS/FAIL line per criterion. Tolerances are pinned
// here as well as in the checks so a relaxed library tolerance still fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "steercoh/families.hpp"
#include "steercoh/states.hpp"
#include "steercoh/steering.hpp"
#include "steercoh/verify.hpp"

namespace {

using namespace steercoh;

struct Criterion {
  int id;
  const char* check;
  double pinned;  // bound on report.measured; NAN when measured is a margin
  const char* summary;
};

const std::vector<Criterion> kCriteria{
    {1, "closed-form", 1e-6, "closed-form MSC for werner, rho_p, maximally obese, classical"},
    {2, "damping-curve", 1e-6, "amplitude-damped classical family follows its closed form"},
    {3, "spheroid-ratios", 1e-3, "c3/c1 of the four rho_p spheroids"},
    {4, "damping-gain", NAN, "local damping raises MSC, more for prolate ellipsoids"},
    {5, "channel-monotone", 1e-6, "unital and semi-classical channels never raise MSC"},
    {6, "semiaxis-bound", 1e-8, "canonical states: MSC <= c1 <= sqrt(1-b^2), chords saturate"},
    {7, "properties", 1e-6, "zero on classical states, local-unitary invariance, d-1 on pure states"},
    {8, "oracle", 1e-3, "optimizer dominates and matches the sampling oracle"},
    {9, "degenerate", 1e-4, "werner MSC through the inf-max path"},
    {10, "dlc", 1e-6, "dlc states respect the segment bounds and reach 1"},
};

// Recomputes criterion 2 and 3 targets from test-side formulas.
bool independent_extras(int id, std::string& note) {
  char buf[160];
  if (id == 2) {
    double worst = 0.0;
    for (double t : {0.6, 0.75, 0.9}) {
      const auto pts = sweep(classical_c(t).state, "amplitude-damping", uniform_grid(101));
      for (const auto& p : pts) {
        const double ref = (p.gamma == 0.0 || p.gamma == 1.0) ? 0.0 : oracle::damped_classical(t, p.gamma);
        worst = std::max(worst, std::abs(p.msc - ref));
      }
    }
    std::snprintf(buf, sizeof buf, " | test-side formula dev %.2e", worst);
    note = buf;
    return worst <= 1e-6;
  }
  if (id == 3) {
    const double cases[4][3] = {{0.9, 0.2, 0.980}, {0.9, 0.1, 0.859}, {0.7, 0.1, 0.629}, {0.5, 0.1, 0.496}};
    double worst = 0.0;
    for (const auto& c : cases) {
      const auto ref = oracle::rho_p_ellipsoid(c[0], c[1] * M_PI);
      worst = std::max(worst, std::abs(std::min(ref.c1, ref.c2) / std::max(ref.c1, ref.c2) - c[2]));
      const auto e = qse(rho_p(c[0], c[1] * M_PI).state);
      worst = std::max(worst, std::abs(e.semiaxes[2] / e.semiaxes[0] - c[2]));
    }
    std::snprintf(buf, sizeof buf, " | closed-form ratio dev %.2e", worst);
    note = buf;
    return worst <= 1e-3;
  }
  return true;
}

}  // namespace

int main() {
  int failures = 0;
  std::vector<std::string> details;
  for (const auto& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    const auto report = verify::run_check(c.check);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = report.passed;
    if (!std::isnan(c.pinned)) ok = ok && report.measured <= c.pinned;
    std::string note;
    ok = independent_extras(c.id, note) && ok;
    std::printf("%s criterion %2d %-16s measured %.3e%s (%.1fs)  %s\n", ok ? "PASS" : "FAIL", c.id,
                c.check, report.measured, note.c_str(), secs, c.summary);
    std::fflush(stdout);
    if (!ok) {
      ++failures;
      details.push_back(verify::format_report(report));
    }
  }
  for (const auto& d : details) std::printf("\n%s", d.c_str());
  std::printf("%d/%zu criteria passed\n", int(kCriteria.size()) - failures, kCriteria.size());
  return failures == 0 ? 0 : 1;
}
