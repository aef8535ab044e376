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

#ifndef PATC_COMPILER_H_
#define PATC_COMPILER_H_

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "patc/expr.h"
#include "patc/matrix.h"
#include "patc/normalize.h"
#include "patc/semantics.h"
#include "patc/wellformed.h"

namespace patc {

struct Arm;

/// Compiled match: switches on one scrutinee at a time, each with simple
/// constructor arms and a default arm, ending in right-hand sides.
class DecisionTree {
 public:
  enum class Kind { kLeaf, kSwitch };

  static DecisionTree leaf(Expression rhs);
  static DecisionTree switch_on(Expression scrutinee, std::vector<Arm> arms,
                                DecisionTree default_arm);

  Kind kind() const;
  bool is_leaf() const { return kind() == Kind::kLeaf; }
  // Leaf right-hand side, or the switch scrutinee.
  const Expression& expr() const;
  const std::vector<Arm>& arms() const;
  const DecisionTree& default_arm() const;

  friend bool operator==(const DecisionTree& a, const DecisionTree& b);

 private:
  struct Node;
  explicit DecisionTree(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Arm {
  CtorName ctor;
  std::vector<std::string> binders;
  DecisionTree tree;

  friend bool operator==(const Arm&, const Arm&) = default;
};

/// Source of binder names `<prefix><counter>`. The default prefix `$k` cannot
/// appear in parsed programs.
struct FreshSupply {
  std::size_t counter = 0;
  std::string prefix = "$k";

  std::string next();
};

class CompileError : public std::runtime_error {
 public:
  explicit CompileError(WfReport report);
  const WfReport& report() const { return report_; }

 private:
  WfReport report_;
};

/// One column holding the normalized clause patterns of a case expression.
/// Throws std::invalid_argument when `e` is not a case expression.
ClauseMatrix embed_case(const Expression& e);

std::set<CtorName> head_ctors(const ClauseMatrix& m, std::size_t column);
std::set<CtorName> head_ctors(std::span<const Ndnf> column);

/// Subproblem assuming scrutinee `column` has constructor `ctor` whose
/// arguments are named by `binders`.
ClauseMatrix specialize(std::size_t column, const CtorName& ctor,
                        const std::vector<std::string>& binders,
                        const ClauseMatrix& m);

/// Subproblem assuming scrutinee `column` has none of the constructors in
/// `heads`.
ClauseMatrix default_matrix(std::size_t column,
                            const std::set<CtorName>& heads,
                            const ClauseMatrix& m);

/// Throws CompileError when `wf_matrix(m)` reports violations.
DecisionTree compile(const ClauseMatrix& m, FreshSupply& fresh);
DecisionTree compile(const ClauseMatrix& m);

/// Distinct arm constructors, binder counts equal to arities, and no
/// scrutinee switched twice on a path. Returns a description of the first
/// problem, or an empty string.
std::string check_tree(const DecisionTree& t);

/// Evaluates a tree. Scrutinee expressions are closed with `env` and
/// evaluated; binders extend `env`; leaves evaluate through `eval`.
EvalResult eval_tree(const DecisionTree& t, const Substitution& env,
                     std::size_t fuel = kDefaultFuel,
                     const Definitions* defs = nullptr);

/// Multi-column single step: every matching row with each combination of
/// column substitutions, or the default when no row matches. Stuck unless
/// every scrutinee is a value.
StepResult step_matrix(const ClauseMatrix& m);

std::string to_string(const DecisionTree& t);
nlohmann::ordered_json to_json(const DecisionTree& t);

}  // namespace patc

#endif  // PATC_COMPILER_H_
