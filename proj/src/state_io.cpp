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

#include "steercoh/state_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace steercoh {

using nlohmann::json;

std::string to_state_json(const DensityMatrix& rho) {
  json doc;
  doc["dims"] = rho.dims();
  json rows = json::array();
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump(2) + "\n";
}

DensityMatrix from_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  std::vector<std::size_t> dims;
  std::vector<Complex> entries;
  std::size_t side = 0;
  try {
    dims = doc.at("dims").get<std::vector<std::size_t>>();
    const auto& rows = doc.at("matrix");
    side = rows.size();
    for (const auto& row : rows) {
      if (row.size() != side) throw Error(ErrorCode::kParseError, "matrix is not square");
      for (const auto& entry : row) {
        if (!entry.is_array() || entry.size() != 2) {
          throw Error(ErrorCode::kParseError, "entries must be [re, im] pairs");
        }
        entries.emplace_back(entry[0].get<double>(), entry[1].get<double>());
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return validate_density(ComplexMatrix(side, side, std::move(entries)), std::move(dims));
}

void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot open " + path.string() + " for writing");
  out << to_state_json(rho);
}

DensityMatrix read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_state_json(buf.str());
}

}  // namespace steercoh
