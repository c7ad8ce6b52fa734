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

// Numerical self-checks comparing the optimizer against closed forms, channel
// monotonicity, geometric bounds and an independent sampling oracle.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace steercoh::verify {

struct CheckReport {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst deviation or margin, see detail
  double tolerance = 0.0;
  std::vector<std::string> detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20160418;
};

// closed-form, damping-curve, spheroid-ratios, damping-gain,
// channel-monotone, semiaxis-bound, properties, oracle, degenerate, dlc.
std::vector<std::string> check_names();
bool is_check(std::string_view name);

// Unknown names throw Error(kParameterOutOfRange). Exceptions raised inside a
// check are reported as a failure.
CheckReport run_check(std::string_view name, const VerifyOptions& opts = {});

std::string format_report(const CheckReport& report);

}  // namespace steercoh::verify
