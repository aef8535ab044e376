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

#ifndef PATC_PATTERN_H_
#define PATC_PATTERN_H_

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace patc {

/// A constructor name together with its arity. `Cons/2` and `Cons/1` are
/// different constructors.
struct CtorName {
  std::string name;
  std::size_t arity = 0;

  auto operator<=>(const CtorName&) const = default;
  bool operator==(const CtorName&) const = default;
};

std::string to_string(const CtorName& c);

/// A finite constructor tree. Immutable; copies share structure.
class Value {
 public:
  Value(CtorName ctor, std::vector<Value> args);
  static Value nullary(std::string name);

  const CtorName& ctor() const { return node_->ctor; }
  std::span<const Value> args() const { return node_->args; }
  std::size_t hash() const { return node_->hash; }
  std::size_t height() const { return node_->height; }
  // Identity of the shared node, used as a memoization key.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  struct Node {
    CtorName ctor;
    std::vector<Value> args;
    std::size_t hash;
    std::size_t height;
  };
  std::shared_ptr<const Node> node_;
};

std::string to_string(const Value& v);

/// Algebraic pattern: variables, constructors, and/or/negation, wildcard and
/// absurd. Immutable; copies share structure.
class Pattern {
 public:
  enum class Kind { kVar, kCtor, kAnd, kOr, kWildcard, kAbsurd, kNeg };

  static Pattern var(std::string name);
  static Pattern ctor(CtorName ctor, std::vector<Pattern> args);
  // Arity is taken from the argument count.
  static Pattern ctor(std::string name, std::vector<Pattern> args = {});
  static Pattern conj(Pattern lhs, Pattern rhs);
  static Pattern disj(Pattern lhs, Pattern rhs);
  static Pattern wildcard();
  static Pattern absurd();
  static Pattern neg(Pattern operand);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  // Variable name; only valid for kVar.
  const std::string& var_name() const { return node_->name; }
  // Constructor; only valid for kCtor.
  const CtorName& ctor_name() const { return node_->ctor; }
  // Constructor arguments, the two operands of and/or, or the negated operand.
  std::span<const Pattern> children() const { return node_->children; }
  const Pattern& lhs() const { return node_->children[0]; }
  const Pattern& rhs() const { return node_->children[1]; }
  const Pattern& operand() const { return node_->children[0]; }
  std::size_t size() const { return node_->size; }
  const void* id() const { return node_.get(); }

  friend bool operator==(const Pattern& a, const Pattern& b);
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    CtorName ctor;
    std::vector<Pattern> children;
    std::size_t size;
  };
  explicit Pattern(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Pattern make(Kind kind, std::string name, CtorName ctor,
                      std::vector<Pattern> children);

  std::shared_ptr<const Node> node_;
};

/// Prints in surface syntax: `!`, `&`, `|`, `_`, `#`. Compound operands of
/// binary connectives and negation are parenthesized, so the output parses
/// back to the same tree.
std::string to_string(const Pattern& p);

using VarSet = std::set<std::string>;

/// Variables occurring under an even number of negations.
VarSet fv_even(const Pattern& p);
/// Variables occurring under an odd number of negations.
VarSet fv_odd(const Pattern& p);

struct Mapping {
  std::string var;
  Value value;

  friend bool operator==(const Mapping&, const Mapping&) = default;
  friend std::strong_ordering operator<=>(const Mapping& a, const Mapping& b);
};

/// Ordered list of mappings. Not necessarily proper: nonlinear patterns bind
/// a variable more than once.
using Substitution = std::vector<Mapping>;

std::string to_string(const Substitution& s);

/// No variable occurs twice in the domain.
bool is_proper(const Substitution& s);
VarSet domain(const Substitution& s);

/// Same mappings, ignoring order and multiplicity.
bool subst_equiv(const Substitution& a, const Substitution& b);

/// Set of substitutions up to `subst_equiv`. Keeps the first representative
/// inserted for each class; iteration order is the canonical class order.
class SubstSet {
 public:
  SubstSet() = default;
  SubstSet(std::initializer_list<Substitution> items);

  // Returns false if an equivalent substitution was already present.
  bool insert(Substitution s);
  bool contains(const Substitution& s) const;
  bool empty() const { return classes_.empty(); }
  std::size_t size() const { return classes_.size(); }
  std::vector<Substitution> members() const;

  // Mutual coverage under subst_equiv.
  friend bool operator==(const SubstSet& a, const SubstSet& b);

 private:
  struct Entry {
    std::vector<Mapping> key;  // sorted, duplicates removed
    Substitution representative;
  };
  std::vector<Entry> classes_;  // sorted by key
};

/// All σ with a positive matching derivation, up to equivalence.
SubstSet match_pos(const Pattern& p, const Value& v);
/// All σ with a negative (non-matching) derivation, up to equivalence.
SubstSet match_neg(const Pattern& p, const Value& v);

/// Raw derivation results with mapping order normalized but multiplicity
/// kept, so properness and domains stay observable.
std::vector<Substitution> derivations_pos(const Pattern& p, const Value& v);
std::vector<Substitution> derivations_neg(const Pattern& p, const Value& v);

/// Cheaper yes/no check that skips substitution bookkeeping.
bool matches(const Pattern& p, const Value& v);

/// Semantic pattern equivalence restricted to the given values.
bool pattern_equiv_bounded(const Pattern& p, const Pattern& q,
                           std::span<const Value> universe);

}  // namespace patc

#endif  // PATC_PATTERN_H_
