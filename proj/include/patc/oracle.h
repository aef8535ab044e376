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

#ifndef PATC_ORACLE_H_
#define PATC_ORACLE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "patc/compiler.h"
#include "patc/expr.h"
#include "patc/pattern.h"
#include "patc/typing.h"

namespace patc {

/// Declarations used by the property suites:
///   Color = Red | Green | Blue
///   Day   = Mo | Tu | We | Th | Fr | Sa | Su
///   List  = Nil | Cons(Bool, List)
///   T     = A | B | C(T) | D(T, T)
DataDecls reference_decls();

/// Types the generators draw from, all finite at a given depth.
std::vector<Type> reference_types();

/// Every value of `tau` whose constructor tree has height at most `depth`,
/// in constructor declaration order. Throws std::out_of_range on an unknown
/// type and std::invalid_argument when depth is zero.
std::vector<Value> enumerate_values(const DataDecls& decls, const Type& tau,
                                    std::size_t depth);

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenOptions {
  bool require_linear = false;      // linear_pos
  bool require_linear_neg = false;  // linear_neg
  bool require_det = false;
  std::size_t max_retries = 2000;
  std::vector<std::string> var_pool = {"x", "y", "z"};
};

/// Well-typed random pattern of roughly `size` nodes; a deterministic
/// function of its arguments. Throws GenerationError when the constraints
/// reject `max_retries` candidates in a row.
Pattern gen_pattern(const DataDecls& decls, const Type& tau, std::size_t size,
                    std::uint64_t seed, const GenOptions& options = {});

struct CaseOptions {
  std::size_t max_clauses = 4;
  std::size_t pattern_size = 5;
  std::string scrutinee = "s";
  std::size_t max_retries = 200;
};

/// Wellformed `case s of { ... }` over `tau`. Clause right-hand sides are
/// `R<i>(bound variables)` and the default is `Dflt`.
Expression gen_case(const DataDecls& decls, const Type& tau,
                    std::uint64_t seed, const CaseOptions& options = {});

struct Agree {
  std::size_t values_checked = 0;
};
struct Disagree {
  Value witness;
  std::string expected;
  std::string actual;
};
using DiffResult = std::variant<Agree, Disagree>;

/// Evaluates the case directly and through its compiled tree for every
/// scrutinee value of `tau` up to `depth`. The scrutinee must be a variable.
DiffResult differential_compile_check(const Expression& case_expr,
                                      const DataDecls& decls, const Type& tau,
                                      std::size_t depth,
                                      const Definitions* defs = nullptr);

/// As above against a given tree instead of the compiler's output.
DiffResult differential_tree_check(const Expression& case_expr,
                                   const DecisionTree& tree,
                                   const DataDecls& decls, const Type& tau,
                                   std::size_t depth,
                                   const Definitions* defs = nullptr);

/// Fault injection: exchanges the subtrees of the first arm and the default
/// arm of the root switch, or wraps a leaf in a wrong constructor.
DecisionTree corrupt_tree(const DecisionTree& t);

// ---------------------------------------------------------------------------
// Universe kernels. Each has a serial reference and an OpenMP version with
// identical results.

enum class Exec { kSerial, kParallel };

/// One flag per value: whether `p` matches it.
std::vector<std::uint8_t> match_vector(const Pattern& p,
                                       std::span<const Value> universe,
                                       Exec exec);

/// pattern_equiv_bounded, optionally spread across threads.
bool equiv_over(const Pattern& p, const Pattern& q,
                std::span<const Value> universe, Exec exec);

/// First value (in universe order) matched by both patterns.
std::optional<Value> common_match(const Pattern& p, const Pattern& q,
                                  std::span<const Value> universe, Exec exec);

}  // namespace patc

#endif  // PATC_ORACLE_H_
