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

#ifndef PATC_NORMALIZE_H_
#define PATC_NORMALIZE_H_

#include <compare>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "patc/pattern.h"

namespace patc {

/// Negation normal form: negation only in front of variables and of
/// constructor heads `!C`, which stands for `!C(_, ..., _)`.
class Nnf {
 public:
  enum class Kind { kVar, kNegVar, kNegCtor, kCtor, kAnd, kOr, kWildcard, kAbsurd };

  static Nnf var(std::string name);
  static Nnf neg_var(std::string name);
  static Nnf neg_ctor(CtorName ctor);
  static Nnf ctor(CtorName ctor, std::vector<Nnf> args);
  static Nnf conj(Nnf lhs, Nnf rhs);
  static Nnf disj(Nnf lhs, Nnf rhs);
  static Nnf wildcard();
  static Nnf absurd();

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  const std::string& var_name() const { return node_->name; }
  const CtorName& ctor_name() const { return node_->ctor; }
  std::span<const Nnf> children() const { return node_->children; }
  const Nnf& lhs() const { return node_->children[0]; }
  const Nnf& rhs() const { return node_->children[1]; }

  friend bool operator==(const Nnf& a, const Nnf& b);
  friend std::strong_ordering operator<=>(const Nnf& a, const Nnf& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    CtorName ctor;
    std::vector<Nnf> children;
  };
  explicit Nnf(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// An elementary conjunct is an Nnf without or-nodes.
using Conjunct = Nnf;

std::string to_string(const Nnf& n);
Pattern to_pattern(const Nnf& n);

Nnf nnf(const Pattern& p);
Nnf nnf_pos(const Pattern& p);
Nnf nnf_neg(const Pattern& p);

/// Elementary conjuncts in discovery order, duplicates removed.
std::vector<Conjunct> dnf(const Nnf& n);
/// `||{ k1, k2 }`.
std::string to_string(const std::vector<Conjunct>& d);

/// Normalized conjunct: `{vars} & C(args)`, `{vars} & !{banned}` or
/// `{vars} & #`.
struct NConjunct {
  enum class Kind { kPositive, kNegative, kUnsat };

  Kind kind = Kind::kNegative;
  VarSet vars;
  CtorName ctor;                 // kPositive only
  std::vector<NConjunct> args;   // kPositive only
  std::set<CtorName> banned;     // kNegative only

  static NConjunct positive(VarSet vars, CtorName ctor,
                            std::vector<NConjunct> args);
  static NConjunct negative(VarSet vars, std::set<CtorName> banned);
  static NConjunct unsat(VarSet vars);
  static NConjunct wildcard() { return negative({}, {}); }

  bool is(Kind k) const { return kind == k; }
  // Negative with no banned constructors: matches every value.
  bool is_catch_all() const { return kind == Kind::kNegative && banned.empty(); }
  // False when some Unsat conjunct occurs at or below this node.
  bool satisfiable() const;

  friend bool operator==(const NConjunct& a, const NConjunct& b);
  friend std::strong_ordering operator<=>(const NConjunct& a,
                                          const NConjunct& b);
};

/// Disjunction of normalized conjuncts. The empty disjunction is absurd.
struct Ndnf {
  std::vector<NConjunct> disjuncts;

  static Ndnf of(NConjunct k) { return Ndnf{{std::move(k)}}; }
  static Ndnf wildcard() { return of(NConjunct::wildcard()); }

  friend bool operator==(const Ndnf&, const Ndnf&) = default;
};

std::string to_string(const NConjunct& k);
std::string to_string(const Ndnf& d);

NConjunct normalize_conjunct(const Conjunct& k);
NConjunct combine(const NConjunct& a, const NConjunct& b);

/// nnf, then dnf, then conjunct normalization; structural duplicates removed.
Ndnf to_ndnf(const Pattern& p);

/// Reads a normal form back as a pattern. The empty disjunction becomes `#`.
Pattern to_pattern(const NConjunct& k);
Pattern to_pattern(const Ndnf& d);

}  // namespace patc

#endif  // PATC_NORMALIZE_H_
