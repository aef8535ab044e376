// Copyright 2026 The patc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "patc/matrix.h"

#include <fmt/format.h>

#include <stdexcept>

namespace patc {

void check_shape(const ClauseMatrix& m) {
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    if (m.rows[r].cells.size() != m.columns()) {
      throw std::invalid_argument(
          fmt::format("row {} has {} cells for {} scrutinees", r,
                      m.rows[r].cells.size(), m.columns()));
    }
  }
}

std::string to_string(const ClauseMatrix& m) {
  std::string out = "match (";
  for (std::size_t i = 0; i < m.scrutinees.size(); ++i) {
    if (i) out += ", ";
    out += to_string(m.scrutinees[i]);
  }
  out += ")\n";
  for (const MatrixRow& row : m.rows) {
    out += " ";
    for (const Ndnf& cell : row.cells) out += " " + to_string(cell);
    out += " => " + to_string(row.rhs) + "\n";
  }
  return out + "  default => " + to_string(m.default_rhs) + "\n";
}

}  // namespace patc
