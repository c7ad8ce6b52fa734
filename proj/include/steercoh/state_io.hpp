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

// State files: a JSON document {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}
// with row-major entries.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "steercoh/qcore.hpp"

namespace steercoh {

std::string to_state_json(const DensityMatrix& rho);
DensityMatrix from_state_json(std::string_view text);

void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho);
DensityMatrix read_state_file(const std::filesystem::path& path);

}  // namespace steercoh
