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

#ifndef PATC_TYPING_H_
#define PATC_TYPING_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "patc/expr.h"
#include "patc/pattern.h"

namespace patc {

class Type {
 public:
  enum class Kind { kBool, kPair, kSum, kNamed };

  static Type boolean();
  static Type pair(Type first, Type second);
  static Type sum(Type left, Type right);
  static Type named(std::string name);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  const std::string& name() const { return node_->name; }
  const Type& first() const { return node_->children[0]; }
  const Type& second() const { return node_->children[1]; }

  friend bool operator==(const Type& a, const Type& b);
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Type> children;
  };
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// `Bool`, `A * B`, `A + B`, or a declared name.
std::string to_string(const Type& t);

struct CtorSig {
  CtorName ctor;
  std::vector<Type> args;
};

/// Declared algebraic data types. Constructor names are unique across all
/// declarations. The builtin constructors `True`, `False` (type `Bool`),
/// `Pair/2`, `Inl/1` and `Inr/1` are always known unless a declaration
/// reuses their names.
class DataDecls {
 public:
  // Throws std::invalid_argument on a duplicate type or constructor name or
  // on a constructor whose arity disagrees with its argument list.
  void add(const std::string& type_name, std::vector<CtorSig> ctors);

  bool has_type(const std::string& name) const;
  const std::vector<CtorSig>& ctors_of(const std::string& type_name) const;
  std::vector<std::string> type_names() const;

  // Declared owner of a constructor (by name and arity), if any.
  std::optional<std::string> owner(const CtorName& c) const;
  const CtorSig* find_sig(const CtorName& c) const;
  // Declared constructor with this name, ignoring arity.
  const CtorSig* find_by_name(const std::string& name) const;

  // Full constructor set of the type containing `c`, consulting declarations
  // first and the builtin signatures second. Empty when `c` is unknown.
  std::vector<CtorName> signature_of(const CtorName& c) const;

  // All constructors of a type, including the builtin Bool, pairs and sums.
  std::vector<CtorSig> ctors_for(const Type& t) const;

  bool empty() const { return types_.empty(); }

 private:
  std::vector<std::pair<std::string, std::vector<CtorSig>>> types_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_ctor_;
};

/// Typing context: ordered, duplicates allowed.
using Context = std::vector<std::pair<std::string, Type>>;

std::string to_string(const Context& c);

/// Multiset comparison of contexts.
bool same_bindings(const Context& a, const Context& b);

struct Typed {
  Context gamma;  // binders under an even number of negations
  Context delta;  // binders under an odd number of negations
};
struct Ill {
  std::string message;
};

using PatternTyping = std::variant<Typed, Ill>;
using ExprTyping = std::variant<Type, Ill>;

/// Synthesizes the two binder contexts of a pattern checked against `tau`.
PatternTyping type_pattern(const Pattern& p, const Type& tau,
                           const DataDecls& decls);

/// Signature of a top-level definition for typing calls.
struct FunctionSig {
  std::vector<Type> params;
  std::optional<Type> result;
};
using FunctionSigs = std::map<std::string, FunctionSig>;

/// Synthesizes the type of `e`. `Inl`/`Inr` only type in checking positions,
/// i.e. under `check_expr` or as a branch of a case whose type is known.
ExprTyping type_expr(const Context& ctx, const Expression& e,
                     const DataDecls& decls,
                     const FunctionSigs* functions = nullptr);

/// Checks `e` against an expected type.
std::optional<Ill> check_expr(const Context& ctx, const Expression& e,
                              const Type& expected, const DataDecls& decls,
                              const FunctionSigs* functions = nullptr);

}  // namespace patc

#endif  // PATC_TYPING_H_
