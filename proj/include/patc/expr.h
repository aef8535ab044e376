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

#ifndef PATC_EXPR_H_
#define PATC_EXPR_H_

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patc/pattern.h"

namespace patc {

struct Clause;

/// Terms: variables, constructor applications, case expressions with a
/// mandatory default, and calls to top-level definitions. Calls are surface
/// sugar that the evaluator unfolds; they never appear in compiled trees.
class Expression {
 public:
  enum class Kind { kVar, kCtor, kCase, kCall };

  static Expression var(std::string name);
  static Expression ctor(CtorName ctor, std::vector<Expression> args);
  // Arity is taken from the argument count.
  static Expression ctor(std::string name, std::vector<Expression> args = {});
  static Expression case_of(Expression scrutinee, std::vector<Clause> clauses,
                            Expression default_rhs);
  static Expression call(std::string function, std::vector<Expression> args);
  static Expression from_value(const Value& v);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  // Variable name for kVar, function name for kCall.
  const std::string& name() const;
  const CtorName& ctor_name() const;
  // Constructor or call arguments.
  std::span<const Expression> args() const;
  const Expression& scrutinee() const;
  std::span<const Clause> clauses() const;
  const Expression& default_rhs() const;

  // A constructor tree without variables, cases or calls.
  bool is_value() const;
  std::optional<Value> to_value() const;
  std::size_t size() const;

  friend bool operator==(const Expression& a, const Expression& b);
  friend std::strong_ordering operator<=>(const Expression& a,
                                          const Expression& b);

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Clause {
  Pattern pattern;
  Expression rhs;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Surface syntax: `case e of { p => e, default => e }`.
std::string to_string(const Expression& e);

/// Free variables. A clause binds the even-negation variables of its pattern.
VarSet free_vars(const Expression& e);

/// Simultaneous capture-avoiding replacement of free variables by expressions.
/// Clause binders that would capture a free variable of a replacement are
/// renamed to `$<name>_<n>`.
Expression substitute(const Expression& e,
                      const std::map<std::string, Expression>& replacements);

/// Applies a matching substitution. Throws std::invalid_argument when `s`
/// binds some variable twice.
Expression apply_subst(const Expression& e, const Substitution& s);

/// Renames every occurrence of the given variables in a pattern.
Pattern rename_pattern_vars(const Pattern& p,
                            const std::map<std::string, std::string>& renaming);

}  // namespace patc

#endif  // PATC_EXPR_H_
