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

#include "steercoh/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "steercoh/channels.hpp"
#include "steercoh/coherence.hpp"
#include "steercoh/families.hpp"
#include "steercoh/msc.hpp"
#include "steercoh/random.hpp"
#include "steercoh/states.hpp"
#include "steercoh/steering.hpp"

namespace steercoh::verify {

namespace {

constexpr double kPi = std::numbers::pi;

template <typename... Args>
std::string fmt(const char* pattern, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// Midpoints of n equal cells of (lo, hi).
std::vector<double> cells(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * (double(i) + 0.5) / double(n);
  return out;
}

double amplitude_damped_classical(double t, double g) {
  const double s = 1.0 - 2.0 * t;
  return 2.0 * t * g * std::sqrt(1.0 - g) / std::sqrt(s * s * (1.0 - g) + g * g);
}

DensityMatrix random_classical(std::size_t da, std::size_t db, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> w(db);
  double sum = 0.0;
  for (auto& x : w) sum += (x = unif(rng) + 1e-3);
  for (auto& x : w) x /= sum;
  std::vector<DensityMatrix> alice;
  for (std::size_t k = 0; k < db; ++k) alice.push_back(random_density({da}, rng));
  const auto u = random_unitary(db, rng);
  Basis basis;
  for (std::size_t k = 0; k < db; ++k) {
    Ket col(db);
    for (std::size_t i = 0; i < db; ++i) col[i] = u(i, k);
    basis.vectors.push_back(col);
  }
  return classical_state(w, alice, basis).state;
}

DensityMatrix local_rotate(const DensityMatrix& rho, const ComplexMatrix& ua,
                           const ComplexMatrix& ub) {
  const auto u = kron(ua, ub);
  return normalize_density(u * rho.matrix() * u.adjoint(), rho.dims());
}

KrausChannel random_semi_classical(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const auto basis = bloch_basis(random_unit_vector(rng));
  const BlochVector m = random_unit_vector(rng) * unif(rng);
  return semi_classical(basis, {PovmElement::from_bloch(m), PovmElement::from_bloch(m * -1.0)});
}

CheckReport closed_form(const VerifyOptions& opts) {
  CheckReport r{"closed-form", false, 0.0, 1e-6, {}};
  auto track = [&](const char* family, double worst) {
    r.detail.push_back(fmt("%-12s max |optimizer - analytic| = %.3e", family, worst));
    r.measured = std::max(r.measured, worst);
  };
  double worst = 0.0;
  for (double p : cells(0.0, 1.0, 20)) {
    worst = std::max(worst, std::abs(msc(werner(p).state).value - p));
  }
  track("werner", worst);
  worst = 0.0;
  const auto ps = cells(0.05, 0.95, 20);
  const auto thetas = cells(0.0, kPi, 20);
  for (std::size_t i = 0; i < 20; ++i) {
    const auto f = rho_p(ps[i], thetas[(7 * i) % 20]);
    worst = std::max(worst, std::abs(msc(f.state).value - *f.analytic_msc));
  }
  track("rho_p", worst);
  worst = 0.0;
  for (double b : cells(0.0, 1.0, 20)) {
    worst = std::max(worst, std::abs(msc(maximally_obese(b).state).value - std::sqrt(1.0 - b)));
  }
  track("max-obese", worst);
  worst = 0.0;
  std::mt19937_64 rng(opts.seed);
  for (double t : cells(0.0, 1.0, 10)) worst = std::max(worst, msc(classical_c(t).state).value);
  for (int i = 0; i < 10; ++i) worst = std::max(worst, msc(random_classical(2, 2, rng)).value);
  track("classical", worst);
  r.passed = r.measured <= r.tolerance;
  return r;
}

CheckReport damping_curve(const VerifyOptions&) {
  CheckReport r{"damping-curve", true, 0.0, 1e-6, {}};
  const auto grid = uniform_grid(101);
  double endpoint = 0.0;
  for (double t : {0.6, 0.75, 0.9}) {
    const auto rho = classical_c(t).state;
    const auto pts = sweep(rho, "amplitude-damping", grid);
    double worst = 0.0;
    for (const auto& p : pts) {
      worst = std::max(worst, std::abs(p.msc - amplitude_damped_classical(t, p.gamma)));
    }
    const double ends = std::max(std::abs(pts.front().msc), std::abs(pts.back().msc));
    endpoint = std::max(endpoint, ends);
    r.detail.push_back(fmt("t = %.2f  max |sweep - closed form| = %.3e  endpoints %.3e", t, worst, ends));
    r.measured = std::max(r.measured, worst);
  }
  r.passed = r.measured <= r.tolerance && endpoint <= 1e-9;
  return r;
}

struct SpheroidCase {
  double p, theta, ratio;
};
constexpr std::array<SpheroidCase, 4> kSpheroids{{{0.9, 0.2 * kPi, 0.980},
                                         {0.9, 0.1 * kPi, 0.859},
                                         {0.7, 0.1 * kPi, 0.629},
                                         {0.5, 0.1 * kPi, 0.496}}};

CheckReport spheroid_ratios(const VerifyOptions&) {
  CheckReport r{"spheroid-ratios", false, 0.0, 1e-3, {}};
  for (const auto& c : kSpheroids) {
    const auto e = qse(rho_p(c.p, c.theta).state);
    const double ratio = e.semiaxes[2] / e.semiaxes[0];
    r.detail.push_back(fmt("p = %.1f theta = %.1fpi  c3/c1 = %.6f  expected %.3f", c.p,
                           c.theta / kPi, ratio, c.ratio));
    r.measured = std::max(r.measured, std::abs(ratio - c.ratio));
  }
  r.passed = r.measured <= r.tolerance;
  return r;
}

CheckReport damping_gain(const VerifyOptions&) {
  CheckReport r{"damping-gain", true, 1e300, 1e-4, {}};
  const auto grid = uniform_grid(101);
  double previous = -1.0;
  for (const auto& c : kSpheroids) {  // ordered by decreasing c3/c1
    const auto pts = sweep(rho_p(c.p, c.theta).state, "amplitude-damping", grid);
    double best = pts.front().msc;
    double best_gamma = 0.0;
    for (const auto& p : pts) {
      if (p.msc > best) best = p.msc, best_gamma = p.gamma;
    }
    const double margin = best - pts.front().msc;
    r.detail.push_back(fmt("p = %.1f theta = %.1fpi  msc(0) = %.6f  max = %.6f at gamma = %.2f  margin %.6f",
                           c.p, c.theta / kPi, pts.front().msc, best, best_gamma, margin));
    r.measured = std::min(r.measured, margin);
    if (margin < r.tolerance) r.passed = false;
    if (margin <= previous) {
      r.passed = false;
      r.detail.push_back("margin not increasing as c3/c1 decreases");
    }
    previous = margin;
  }
  return r;
}

CheckReport channel_monotone(const VerifyOptions& opts) {
  CheckReport r{"channel-monotone", false, -1e300, 1e-6, {}};
  std::mt19937_64 rng(opts.seed);
  std::vector<KrausChannel> channels;
  for (int k = 0; k < 50; ++k) channels.push_back(random_unital(rng));
  double semi = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto rho = random_density({2, 2}, rng);
    const double base = msc(rho).value;
    for (const auto& ch : channels) {
      r.measured = std::max(r.measured, msc(apply_on_b(rho, ch)).value - base);
    }
    if (i < 50) semi = std::max(semi, msc(apply_on_b(rho, random_semi_classical(rng))).value);
  }
  const double damped =
      msc(apply_on_b(classical_c(0.75).state, amplitude_damping(0.5))).value;
  r.detail.push_back(fmt("unital: max increase %.3e over 200 states x 50 channels", r.measured));
  r.detail.push_back(fmt("semi-classical: max msc %.3e (limit 1e-8)", semi));
  r.detail.push_back(fmt("amplitude damping on classical t = 0.75, gamma = 0.5: msc %.6f (> 0.01)", damped));
  r.passed = r.measured <= r.tolerance && semi <= 1e-8 && damped > 0.01;
  return r;
}

CheckReport semiaxis_bound(const VerifyOptions& opts) {
  CheckReport r{"semiaxis-bound", true, -1e300, 1e-8, {}};
  std::mt19937_64 rng(opts.seed);
  double slack_bound = -1e300;
  for (int i = 0; i < 100; ++i) {
    const auto can = canonical_transform(random_density({2, 2}, rng));
    const auto e = qse(can);
    const double value = msc(can).value;
    const double c1 = e.semiaxes[0];
    const double ball = std::sqrt(std::max(0.0, 1.0 - dot(e.center, e.center)));
    r.measured = std::max(r.measured, value - c1);
    slack_bound = std::max(slack_bound, c1 - ball);
  }
  r.detail.push_back(fmt("100 canonical states: max(msc - c1) = %.3e, max(c1 - sqrt(1-b^2)) = %.3e",
                         r.measured, slack_bound));
  double chord = 0.0;
  for (double b : cells(0.0, 1.0, 20)) {
    const auto f = chord_state_symmetric(b);
    chord = std::max(chord, std::abs(msc(f.state).value - std::sqrt(1.0 - b * b)));
  }
  r.detail.push_back(fmt("chord states: max |msc - sqrt(1-b^2)| = %.3e (limit 1e-6)", chord));
  r.passed = r.measured <= 1e-8 && slack_bound <= 1e-8 && chord <= 1e-6;
  return r;
}

CheckReport properties(const VerifyOptions& opts) {
  CheckReport r{"properties", true, 0.0, 1e-6, {}};
  std::mt19937_64 rng(opts.seed);
  double classical = 0.0;
  for (int i = 0; i < 20; ++i) classical = std::max(classical, msc(random_classical(2, 2, rng)).value);
  double classical3 = 0.0;
  for (int i = 0; i < 3; ++i) classical3 = std::max(classical3, msc(random_classical(2, 3, rng)).value);
  double discord = 1e300;
  for (int i = 0; i < 20; ++i) discord = std::min(discord, msc_oracle(random_density({2, 2}, rng), 2000));
  double invariance = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto rho = random_density({2, 2}, rng);
    const auto moved = local_rotate(rho, random_unitary(2, rng), random_unitary(2, rng));
    invariance = std::max(invariance, std::abs(msc(rho).value - msc(moved).value));
  }
  double schmidt = 0.0;
  std::uniform_real_distribution<double> unif(0.2, 1.0);
  for (std::size_t d : {2u, 3u}) {
    for (int i = 0; i < 3; ++i) {
      std::vector<double> lambda(d);
      double sum = 0.0;
      for (auto& l : lambda) {
        l = unif(rng);
        sum += l * l;
      }
      for (auto& l : lambda) l /= std::sqrt(sum);
      const auto f = pure_schmidt(lambda, random_unitary(d, rng), random_unitary(d, rng));
      schmidt = std::max(schmidt, std::abs(msc(f.state).value - double(d - 1)));
    }
  }
  r.detail.push_back(fmt("classical: max msc %.3e (d_B = 2), %.3e (d_B = 3), limit 1e-8", classical, classical3));
  r.detail.push_back(fmt("random states: min oracle lower bound %.3e (>= 1e-4)", discord));
  r.detail.push_back(fmt("local unitaries: max |change| %.3e over 100 samples", invariance));
  r.detail.push_back(fmt("pure full Schmidt rank: max |msc - (d-1)| %.3e at d = 2, 3", schmidt));
  r.measured = std::max(invariance, schmidt);
  r.passed = classical <= 1e-8 && classical3 <= 1e-8 && discord >= 1e-4 && invariance <= 1e-6 &&
             schmidt <= 1e-6;
  return r;
}

CheckReport oracle(const VerifyOptions& opts) {
  CheckReport r{"oracle", true, 0.0, 1e-3, {}};
  std::mt19937_64 rng(opts.seed);
  double shortfall = -1e300;
  for (int i = 0; i < 30; ++i) {
    const auto rho = random_density({2, 2}, rng);
    shortfall = std::max(shortfall, msc_oracle(rho, 2000) - msc(rho).value);
  }
  const std::vector<std::pair<std::string, DensityMatrix>> families{
      {"werner 0.7", werner(0.7).state},
      {"rho_p 0.5 0.1pi", rho_p(0.5, 0.1 * kPi).state},
      {"rho_p 0.9 0.3pi", rho_p(0.9, 0.3 * kPi).state},
      {"max-obese 0.5", maximally_obese(0.5).state},
      {"classical 0.75", classical_c(0.75).state},
      {"chord 0.6", chord_state_symmetric(0.6).state}};
  for (const auto& [label, rho] : families) {
    const double o = msc_oracle(rho, 10000);
    const double v = msc(rho).value;
    shortfall = std::max(shortfall, o - v);
    r.detail.push_back(fmt("%-16s optimizer %.8f oracle %.8f", label.c_str(), v, o));
    r.measured = std::max(r.measured, std::abs(o - v));
  }
  r.detail.push_back(fmt("max(oracle - optimizer) = %.3e (limit 1e-9)", shortfall));
  r.passed = shortfall <= 1e-9 && r.measured <= r.tolerance;
  return r;
}

CheckReport degenerate(const VerifyOptions&) {
  CheckReport r{"degenerate", true, 0.0, 1e-4, {}};
  for (double p : {0.3, 0.7, 1.0}) {
    const auto res = msc_two_qubit(werner(p).state);
    r.detail.push_back(fmt("werner p = %.1f  msc %.10f  degenerate path %s", p, res.value,
                           res.degenerate_path ? "yes" : "no"));
    r.measured = std::max(r.measured, std::abs(res.value - p));
    if (!res.degenerate_path) r.passed = false;
  }
  r.passed = r.passed && r.measured <= r.tolerance;
  return r;
}

CheckReport dlc(const VerifyOptions& opts) {
  CheckReport r{"dlc", true, -1e300, 1e-6, {}};
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> length(0.1, 0.95);
  std::uniform_real_distribution<double> weight(0.05, 0.95);
  std::uniform_real_distribution<double> angle(0.05 * kPi, 0.95 * kPi);
  int built = 0;
  int violations = 0;
  int violations_obtuse = 0;
  double corrected = -1e300;
  while (built < 50) {
    const BlochVector u = random_unit_vector(rng);
    BlochVector w = cross(u, random_unit_vector(rng));
    if (norm(w) < 1e-3) continue;
    w = normalized(w);
    const double theta = angle(rng);
    const BlochVector b1 = u * length(rng);
    const BlochVector b2 = (u * std::cos(theta) + w * std::sin(theta)) * length(rng);
    const auto f = dlc_state(b1, b2, weight(rng));
    const auto& bounds = *f.dlc_bounds;
    const double value = msc(f.state).value;
    const double excess = std::max(bounds.lower - value, value - bounds.upper);
    if (excess > r.tolerance) {
      ++violations;
      if (bounds.theta > kPi / 2) ++violations_obtuse;
    }
    r.measured = std::max(r.measured, excess);
    // For an obtuse opening angle the infimum over the open segment can sit
    // at the end nearest b1, where the distance tends to b2 sin(theta).
    const double floor = bounds.theta > kPi / 2
                             ? std::min(bounds.lower, bounds.b2 * std::sin(bounds.theta))
                             : bounds.lower;
    corrected = std::max({corrected, floor - value, value - bounds.upper});
    ++built;
  }
  r.detail.push_back(fmt("50 random dlc states: worst bound violation %.3e, %d states outside "
                         "(%d with theta > pi/2)", r.measured, violations, violations_obtuse));
  r.detail.push_back(fmt("with lower bound min(b1 sin theta1, b2 sin theta) for theta > pi/2: "
                         "worst violation %.3e", corrected));
  double reach = 1.0;
  for (double b1 : {0.999, 0.9999}) {
    for (double rr : {0.3, 0.6, 0.9}) {
      const double theta = 0.75 * kPi;
      // Weight that makes Bob's Bloch vector orthogonal to b1.
      const double q = -rr * std::cos(theta) / (b1 - rr * std::cos(theta));
      const auto f = dlc_state({0.0, 0.0, b1}, {rr * std::sin(theta), 0.0, rr * std::cos(theta)}, q);
      reach = std::min(reach, msc(f.state).value);
    }
  }
  r.detail.push_back(fmt("b1 -> 1, theta = 0.75pi: min msc %.6f (>= 0.99)", reach));
  r.passed = r.measured <= r.tolerance && reach >= 0.99;
  return r;
}

using CheckFn = std::function<CheckReport(const VerifyOptions&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks{
      {"closed-form", closed_form},
      {"damping-curve", damping_curve},
      {"spheroid-ratios", spheroid_ratios},
      {"damping-gain", damping_gain},
      {"channel-monotone", channel_monotone},
      {"semiaxis-bound", semiaxis_bound},
      {"properties", properties},
      {"oracle", oracle},
      {"degenerate", degenerate},
      {"dlc", dlc}};
  return checks;
}

// Older short names, still accepted on the command line.
const std::vector<std::pair<std::string, std::string>>& aliases() {
  static const std::vector<std::pair<std::string, std::string>> table{
      {"eq11", "damping-curve"},        {"fig2-ratios", "spheroid-ratios"},
      {"fig2-increase", "damping-gain"}, {"thm1", "channel-monotone"},
      {"thm2", "semiaxis-bound"},        {"props", "properties"}};
  return table;
}

std::string_view canonical_name(std::string_view name) {
  for (const auto& [alias, target] : aliases())
    if (alias == name) return target;
  return name;
}

}  // namespace

bool is_check(std::string_view name) {
  name = canonical_name(name);
  for (const auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

CheckReport run_check(std::string_view name, const VerifyOptions& opts) {
  name = canonical_name(name);
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    try {
      return fn(opts);
    } catch (const std::exception& e) {
      return {n, false, 0.0, 0.0, {std::string("exception: ") + e.what()}};
    }
  }
  throw Error(ErrorCode::kParameterOutOfRange, "unknown check '" + std::string(name) + "'");
}

std::string format_report(const CheckReport& report) {
  std::string out = fmt("%s %-16s measured %.3e tol %.1e\n", report.passed ? "PASS" : "FAIL",
                        report.name.c_str(), report.measured, report.tolerance);
  for (const auto& line : report.detail) out += "    " + line + "\n";
  return out;
}

}  // namespace steercoh::verify
