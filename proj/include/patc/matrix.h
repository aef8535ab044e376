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

#ifndef PATC_MATRIX_H_
#define PATC_MATRIX_H_

#include <string>
#include <vector>

#include "patc/expr.h"
#include "patc/normalize.h"

namespace patc {

struct MatrixRow {
  std::vector<Ndnf> cells;
  Expression rhs;
};

/// Several scrutinees matched at once against rows of normalized patterns,
/// with a single default right-hand side.
struct ClauseMatrix {
  std::vector<Expression> scrutinees;
  std::vector<MatrixRow> rows;
  Expression default_rhs;

  std::size_t columns() const { return scrutinees.size(); }
};

/// Throws std::invalid_argument when a row has the wrong number of cells.
void check_shape(const ClauseMatrix& m);

std::string to_string(const ClauseMatrix& m);

}  // namespace patc

#endif  // PATC_MATRIX_H_
