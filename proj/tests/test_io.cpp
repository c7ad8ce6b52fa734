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

#include <cmath>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "steercoh/families.hpp"
#include "steercoh/random.hpp"
#include "steercoh/state_io.hpp"

using namespace steercoh;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kNotHermitian;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("state files round-trip") {
  std::mt19937_64 rng(401);
  for (const auto& dims : {std::vector<std::size_t>{2, 2}, {3, 2}, {3}}) {
    for (int i = 0; i < 20; ++i) {
      const auto rho = random_density(dims, rng);
      const auto back = from_state_json(to_state_json(rho));
      CHECK(back.dims() == rho.dims());
      CHECK(max_abs_diff(back.matrix(), rho.matrix()) <= 1e-12);
    }
  }
  const auto path = std::filesystem::temp_directory_path() / "steercoh_io_test.json";
  const auto rho = make_family({"rho-p", {{"p", 0.5}, {"theta", M_PI / 2}}}).state;
  write_state_file(path, rho);
  CHECK(max_abs_diff(read_state_file(path).matrix(), rho.matrix()) == 0.0);
  std::filesystem::remove(path);
}

TEST_CASE("malformed state files") {
  CHECK(code_of([] { from_state_json("not json"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { from_state_json(R"({"dims":[2]})"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { from_state_json(R"({"dims":[2],"matrix":[[[1,0],[0,0]],[[0,0]]]})"); }) ==
        ErrorCode::kParseError);
  CHECK(code_of([] { from_state_json(R"({"dims":[2],"matrix":[[[1,0],[0,0]],[[0,0],[1,0]]]})"); }) ==
        ErrorCode::kNotUnitTrace);
  CHECK(code_of([] { read_state_file("/nonexistent/steercoh.json"); }) == ErrorCode::kParseError);
}

TEST_CASE("number parsing and family specs") {
  CHECK(parse_real("0.25") == 0.25);
  CHECK(parse_real("0.1pi") == doctest::Approx(0.1 * M_PI));
  CHECK(parse_real("pi") == doctest::Approx(M_PI));
  CHECK(code_of([] { parse_real("abc"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_real("0.5x"); }) == ErrorCode::kParseError);

  for (const auto& name : family_names()) CHECK_FALSE(name.empty());
  CHECK(code_of([] { make_family({"werner", {}}); }) == ErrorCode::kParameterOutOfRange);
  CHECK(code_of([] { make_family({"nope", {}}); }) == ErrorCode::kParameterOutOfRange);
  CHECK(code_of([] { make_family({"werner", {{"p", 1.5}}}); }) == ErrorCode::kParameterOutOfRange);
  CHECK(*make_family({"max-obese", {{"b", 0.64}}}).analytic_msc == doctest::Approx(0.6));
  CHECK(code_of([] { make_channel("amplitude-damping", 1.5); }) == ErrorCode::kParameterOutOfRange);
  CHECK(code_of([] { make_channel("nope", 0.5); }) == ErrorCode::kParameterOutOfRange);
}

TEST_CASE("sweeps") {
  const auto rho = make_family({"classical-c", {{"t", 0.75}}}).state;
  const std::vector<double> gammas{1.0, 0.0, 0.5};
  const auto pts = sweep(rho, "amplitude-damping", gammas);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].gamma == 0.0);
  CHECK(pts[2].gamma == 1.0);
  CHECK(std::abs(pts[0].msc) < 1e-9);
  CHECK(std::abs(pts[2].msc) < 1e-9);
  CHECK(std::abs(pts[1].msc - oracle::damped_classical(0.75, 0.5)) < 1e-6);

  const auto csv = sweep_csv(pts);
  CHECK(csv.rfind("gamma,msc\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(sweep_csv(sweep(rho, "amplitude-damping", gammas)) == csv);

  const auto rp = make_family({"rho-p", {{"p", 0.5}, {"theta", 0.1 * M_PI}}}).state;
  const auto grid = uniform_grid(21);
  const auto curve = sweep(rp, "amplitude-damping", grid);
  double best = 0.0;
  for (const auto& p : curve) best = std::max(best, p.msc);
  CHECK(best > curve.front().msc);
  CHECK(code_of([] { uniform_grid(1); }) == ErrorCode::kParameterOutOfRange);
}

}  // TEST_SUITE
