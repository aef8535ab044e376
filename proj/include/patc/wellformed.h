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

#ifndef PATC_WELLFORMED_H_
#define PATC_WELLFORMED_H_

#include <string>
#include <vector>

#include "patc/expr.h"
#include "patc/matrix.h"
#include "patc/pattern.h"
#include "patc/typing.h"

namespace patc {

struct Violation {
  std::string rule;
  // Child indices from the root of the offending pattern. For clause and row
  // checks the first index selects the clause or row.
  std::vector<std::size_t> path;
  std::string message;
};

struct WfReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    ok = false;
    violations.push_back(std::move(v));
  }
  void merge(const WfReport& other);
};

std::string to_string(const Violation& v);

bool linear_pos(const Pattern& p);
bool linear_neg(const Pattern& p);
/// Positive linearity with the first failing rule and its position.
WfReport check_linear(const Pattern& p);

/// Determinism; the disjointness side conditions go through the normal-form
/// overlap procedure. With `decls` the negative/negative case may use type
/// signatures; constructors the declarations do not cover fall back to the
/// type-free answer.
bool deterministic(const Pattern& p, const DataDecls* decls = nullptr);
WfReport check_deterministic(const Pattern& p,
                             const DataDecls* decls = nullptr);

WfReport wf_expr(const Expression& e, const DataDecls* decls = nullptr);
WfReport wf_matrix(const ClauseMatrix& m, const DataDecls* decls = nullptr);

}  // namespace patc

#endif  // PATC_WELLFORMED_H_
