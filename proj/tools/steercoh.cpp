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

// steercoh: command-line front end.
//
//   steercoh msc    [STATE.json | --family NAME --p ...]
//   steercoh qse    [STATE.json | --family NAME ...]
//   steercoh sweep  --family NAME ... [--channel C] [--grid N] [--out PATH]
//   steercoh gen    --family NAME ... [--out PATH]
//   steercoh verify [--only CHECK]... [--seed S]
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 no convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "steercoh/families.hpp"
#include "steercoh/msc.hpp"
#include "steercoh/state_io.hpp"
#include "steercoh/steering.hpp"
#include "steercoh/verify.hpp"

namespace {

using namespace steercoh;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;
constexpr int kNotConverged = 3;

struct StateArgs {
  std::string path;
  std::string family;
  std::optional<std::string> p, theta, t, b, gamma;
  std::vector<std::string> extra;
  std::string channel = "amplitude-damping";

  void attach(CLI::App* cmd, bool with_path = true) {
    if (with_path) cmd->add_option("state", path, "State file (JSON)");
    cmd->add_option("--family", family, "State family")
        ->check(CLI::IsMember(family_names()));
    cmd->add_option("--p", p, "Family parameter p");
    cmd->add_option("--theta", theta, "Family parameter theta (accepts e.g. 0.1pi)");
    cmd->add_option("--t", t, "Family parameter t");
    cmd->add_option("--b", b, "Family parameter b");
    cmd->add_option("--set", extra, "Other family parameters as key=value");
    cmd->add_option("--channel", channel, "Channel applied to B")
        ->check(CLI::IsMember(channel_names()));
  }

  FamilySpec spec() const {
    FamilySpec s{family, {}};
    const std::pair<const char*, const std::optional<std::string>*> named[] = {
        {"p", &p}, {"theta", &theta}, {"t", &t}, {"b", &b}};
    for (const auto& [key, value] : named) {
      if (*value) s.params[key] = parse_real(**value);
    }
    for (const auto& kv : extra) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorCode::kParseError, "expected key=value, got '" + kv + "'");
      }
      s.params[kv.substr(0, eq)] = parse_real(kv.substr(eq + 1));
    }
    return s;
  }

  DensityMatrix load() const {
    if (!path.empty() && !family.empty()) {
      throw Error(ErrorCode::kParseError, "give either a state file or --family, not both");
    }
    if (path.empty() && family.empty()) {
      throw Error(ErrorCode::kParseError, "no state given: pass a file or --family");
    }
    DensityMatrix rho = path.empty() ? make_family(spec()).state : read_state_file(path);
    if (gamma) rho = apply_on_b(rho, make_channel(channel, parse_real(*gamma)));
    return rho;
  }
};

std::string vec(const BlochVector& v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.10f, %.10f, %.10f)", v.x, v.y, v.z);
  return buf;
}

std::string real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10f", x);
  return buf;
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorCode::kParseError, "cannot write '" + out + "'");
  f << text;
}

int run_msc(const StateArgs& args, double tol) {
  const auto rho = args.load();
  MscOptions opts;
  opts.tol_degenerate = tol;
  const auto r = msc(rho, opts);
  std::cout << "msc        " << real(r.value) << "\n";
  if (rho.dims() == std::vector<std::size_t>{2, 2}) {
    std::cout << "direction  " << vec(r.optimal_m) << "\n"
              << "steered    " << vec(bloch_vector(r.steered_state)) << "\n";
  }
  std::cout << "degenerate " << (r.degenerate_path ? "yes" : "no") << "\n";
  if (r.ill_conditioned) std::cout << "warning    marginal spectrum nearly degenerate\n";
  if (!r.converged) {
    std::cerr << "steercoh: optimizer did not converge\n";
    return kNotConverged;
  }
  return kOk;
}

int run_qse(const StateArgs& args) {
  const auto rho = args.load();
  if (rho.dims() != std::vector<std::size_t>{2, 2}) {
    throw Error(ErrorCode::kWrongDimension, "qse needs a two-qubit state");
  }
  const auto e = qse(rho);
  std::cout << "center   " << vec(e.center) << "\n"
            << "semiaxes (" << real(e.semiaxes[0]) << ", " << real(e.semiaxes[1]) << ", "
            << real(e.semiaxes[2]) << ")\n";
  for (int i = 0; i < 3; ++i) std::cout << "axis " << i + 1 << "   " << vec(e.frame[i]) << "\n";
  std::cout << "bob      " << vec(bloch_vector(partial_trace(rho, Subsystem::kB))) << "\n";
  return kOk;
}

int run_sweep(const StateArgs& args, std::size_t grid, const std::string& out) {
  if (args.family.empty()) throw Error(ErrorCode::kParseError, "sweep needs --family");
  const auto rho = make_family(args.spec()).state;
  const auto gammas = uniform_grid(grid);
  const auto pts = sweep(rho, args.channel, gammas);
  write_output(out, sweep_csv(pts));
  for (const auto& p : pts) {
    if (!p.converged) {
      std::cerr << "steercoh: optimizer did not converge at gamma = " << p.gamma << "\n";
      return kNotConverged;
    }
  }
  return kOk;
}

int run_gen(const StateArgs& args, const std::string& out) {
  if (args.family.empty()) throw Error(ErrorCode::kParseError, "gen needs --family");
  const auto rho = args.load();
  write_output(out, to_state_json(rho));
  return kOk;
}

int run_verify(std::vector<std::string> only, std::uint64_t seed) {
  if (only.empty()) only = verify::check_names();
  bool ok = true;
  for (const auto& name : only) {
    const auto report = verify::run_check(name, {seed});
    std::cout << verify::format_report(report) << std::flush;
    ok = ok && report.passed;
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal steered coherence and quantum steering ellipsoids"};
  app.require_subcommand(1);

  StateArgs state;
  double tol = kDefaultDegeneracyTol;
  std::size_t grid = 101;
  std::uint64_t seed = verify::VerifyOptions{}.seed;
  std::string out;
  std::vector<std::string> only;

  auto* msc_cmd = app.add_subcommand("msc", "Maximal steered coherence of a state");
  state.attach(msc_cmd);
  msc_cmd->add_option("--gamma", state.gamma, "Apply the channel on B first");
  msc_cmd->add_option("--tol", tol, "Degeneracy tolerance for the marginal spectrum");

  auto* qse_cmd = app.add_subcommand("qse", "Steering ellipsoid of a two-qubit state");
  state.attach(qse_cmd);
  qse_cmd->add_option("--gamma", state.gamma, "Apply the channel on B first");

  auto* sweep_cmd = app.add_subcommand("sweep", "MSC against channel strength, as CSV");
  state.attach(sweep_cmd, false);
  sweep_cmd->add_option("--grid", grid, "Number of gamma points in [0, 1]")
      ->check(CLI::Range(2, 100000));
  sweep_cmd->add_option("--out", out, "Output path (default stdout)");

  auto* gen_cmd = app.add_subcommand("gen", "Write a family state as JSON");
  state.attach(gen_cmd, false);
  gen_cmd->add_option("--gamma", state.gamma, "Apply the channel on B first");
  gen_cmd->add_option("--out", out, "Output path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the numerical self-checks");
  verify_cmd->add_option("--only", only, "Run only these checks")
      ->check(CLI::Validator(
          [](std::string& v) {
            return verify::is_check(v) ? std::string() : "unknown check '" + v + "'";
          },
          "CHECK"));
  verify_cmd->add_option("--seed", seed, "Seed for randomized checks");
  for (auto* cmd : {msc_cmd, qse_cmd, sweep_cmd, gen_cmd}) {
    cmd->add_option("--seed", seed, "Unused; accepted for uniformity");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*msc_cmd) return run_msc(state, tol);
    if (*qse_cmd) return run_qse(state);
    if (*sweep_cmd) return run_sweep(state, grid, out);
    if (*gen_cmd) return run_gen(state, out);
    if (*verify_cmd) return run_verify(only, seed);
  } catch (const Error& e) {
    std::cerr << "steercoh: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
