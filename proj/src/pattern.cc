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

#include "patc/pattern.h"

#include <fmt/format.h>

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace patc {

std::string to_string(const CtorName& c) {
  return fmt::format("{}/{}", c.name, c.arity);
}

// ---------------------------------------------------------------------------
// Value

Value::Value(CtorName ctor, std::vector<Value> args) {
  if (args.size() != ctor.arity) {
    throw std::invalid_argument(fmt::format(
        "constructor {} applied to {} arguments", to_string(ctor), args.size()));
  }
  std::size_t h = std::hash<std::string>{}(ctor.name) ^ (ctor.arity * 0x9e37);
  std::size_t height = 0;
  for (const Value& a : args) {
    h = h * 1000003u ^ a.hash();
    height = std::max(height, a.height());
  }
  node_ = std::make_shared<const Node>(
      Node{std::move(ctor), std::move(args), h, height + 1});
}

Value Value::nullary(std::string name) {
  return Value(CtorName{std::move(name), 0}, {});
}

bool operator==(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.ctor() != b.ctor()) return false;
  return std::equal(a.args().begin(), a.args().end(), b.args().begin(),
                    b.args().end());
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.ctor() <=> b.ctor(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.args().begin(), a.args().end(), b.args().begin(), b.args().end());
}

std::string to_string(const Value& v) {
  if (v.args().empty()) return v.ctor().name;
  std::string out = v.ctor().name + "(";
  for (std::size_t i = 0; i < v.args().size(); ++i) {
    if (i) out += ", ";
    out += to_string(v.args()[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Pattern

Pattern Pattern::make(Kind kind, std::string name, CtorName ctor,
                      std::vector<Pattern> children) {
  std::size_t size = 1;
  for (const Pattern& c : children) size += c.size();
  return Pattern(std::make_shared<const Node>(Node{
      kind, std::move(name), std::move(ctor), std::move(children), size}));
}

Pattern Pattern::var(std::string name) {
  return make(Kind::kVar, std::move(name), {}, {});
}

Pattern Pattern::ctor(CtorName ctor, std::vector<Pattern> args) {
  if (args.size() != ctor.arity) {
    throw std::invalid_argument(fmt::format(
        "constructor {} applied to {} patterns", to_string(ctor), args.size()));
  }
  return make(Kind::kCtor, {}, std::move(ctor), std::move(args));
}

Pattern Pattern::ctor(std::string name, std::vector<Pattern> args) {
  CtorName c{std::move(name), args.size()};
  return ctor(std::move(c), std::move(args));
}

Pattern Pattern::conj(Pattern lhs, Pattern rhs) {
  return make(Kind::kAnd, {}, {}, {std::move(lhs), std::move(rhs)});
}

Pattern Pattern::disj(Pattern lhs, Pattern rhs) {
  return make(Kind::kOr, {}, {}, {std::move(lhs), std::move(rhs)});
}

Pattern Pattern::wildcard() {
  static const Pattern w = make(Kind::kWildcard, {}, {}, {});
  return w;
}

Pattern Pattern::absurd() {
  static const Pattern a = make(Kind::kAbsurd, {}, {}, {});
  return a;
}

Pattern Pattern::neg(Pattern operand) {
  return make(Kind::kNeg, {}, {}, {std::move(operand)});
}

std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Pattern::Kind::kVar:
      return a.var_name() <=> b.var_name();
    case Pattern::Kind::kCtor:
      if (auto c = a.ctor_name() <=> b.ctor_name(); c != 0) return c;
      break;
    default:
      break;
  }
  return std::lexicographical_compare_three_way(
      a.children().begin(), a.children().end(), b.children().begin(),
      b.children().end());
}

bool operator==(const Pattern& a, const Pattern& b) {
  return (a <=> b) == 0;
}

namespace {

bool is_binary(const Pattern& p) {
  return p.is(Pattern::Kind::kAnd) || p.is(Pattern::Kind::kOr);
}

void print(const Pattern& p, std::string& out);

void print_operand(const Pattern& p, std::string& out) {
  if (is_binary(p)) {
    out += '(';
    print(p, out);
    out += ')';
  } else {
    print(p, out);
  }
}

void print(const Pattern& p, std::string& out) {
  switch (p.kind()) {
    case Pattern::Kind::kVar:
      out += p.var_name();
      return;
    case Pattern::Kind::kWildcard:
      out += '_';
      return;
    case Pattern::Kind::kAbsurd:
      out += '#';
      return;
    case Pattern::Kind::kNeg:
      out += '!';
      print_operand(p.operand(), out);
      return;
    case Pattern::Kind::kAnd:
    case Pattern::Kind::kOr:
      print_operand(p.lhs(), out);
      out += p.is(Pattern::Kind::kAnd) ? " & " : " | ";
      print_operand(p.rhs(), out);
      return;
    case Pattern::Kind::kCtor:
      out += p.ctor_name().name;
      if (!p.children().empty()) {
        out += '(';
        for (std::size_t i = 0; i < p.children().size(); ++i) {
          if (i) out += ", ";
          print(p.children()[i], out);
        }
        out += ')';
      }
      return;
  }
}

void collect_fv(const Pattern& p, bool even, VarSet& even_out,
                VarSet& odd_out) {
  switch (p.kind()) {
    case Pattern::Kind::kVar:
      (even ? even_out : odd_out).insert(p.var_name());
      return;
    case Pattern::Kind::kNeg:
      collect_fv(p.operand(), !even, even_out, odd_out);
      return;
    default:
      for (const Pattern& c : p.children()) {
        collect_fv(c, even, even_out, odd_out);
      }
  }
}

}  // namespace

std::string to_string(const Pattern& p) {
  std::string out;
  print(p, out);
  return out;
}

VarSet fv_even(const Pattern& p) {
  VarSet even, odd;
  collect_fv(p, true, even, odd);
  return even;
}

VarSet fv_odd(const Pattern& p) {
  VarSet even, odd;
  collect_fv(p, true, even, odd);
  return odd;
}

// ---------------------------------------------------------------------------
// Substitutions

std::strong_ordering operator<=>(const Mapping& a, const Mapping& b) {
  if (auto c = a.var <=> b.var; c != 0) return c;
  return a.value <=> b.value;
}

std::string to_string(const Substitution& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i].var + " -> " + to_string(s[i].value);
  }
  return out + "]";
}

bool is_proper(const Substitution& s) {
  VarSet seen;
  for (const Mapping& m : s) {
    if (!seen.insert(m.var).second) return false;
  }
  return true;
}

VarSet domain(const Substitution& s) {
  VarSet d;
  for (const Mapping& m : s) d.insert(m.var);
  return d;
}

namespace {

std::vector<Mapping> canonical_key(Substitution s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

bool subst_equiv(const Substitution& a, const Substitution& b) {
  return canonical_key(a) == canonical_key(b);
}

SubstSet::SubstSet(std::initializer_list<Substitution> items) {
  for (const Substitution& s : items) insert(s);
}

bool SubstSet::insert(Substitution s) {
  std::vector<Mapping> key = canonical_key(s);
  auto it = std::lower_bound(
      classes_.begin(), classes_.end(), key,
      [](const Entry& e, const std::vector<Mapping>& k) { return e.key < k; });
  if (it != classes_.end() && it->key == key) return false;
  classes_.insert(it, Entry{std::move(key), std::move(s)});
  return true;
}

bool SubstSet::contains(const Substitution& s) const {
  std::vector<Mapping> key = canonical_key(s);
  auto it = std::lower_bound(
      classes_.begin(), classes_.end(), key,
      [](const Entry& e, const std::vector<Mapping>& k) { return e.key < k; });
  return it != classes_.end() && it->key == key;
}

std::vector<Substitution> SubstSet::members() const {
  std::vector<Substitution> out;
  out.reserve(classes_.size());
  for (const Entry& e : classes_) out.push_back(e.representative);
  return out;
}

bool operator==(const SubstSet& a, const SubstSet& b) {
  if (a.classes_.size() != b.classes_.size()) return false;
  for (std::size_t i = 0; i < a.classes_.size(); ++i) {
    if (a.classes_[i].key != b.classes_[i].key) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Matching
//
// Both judgments are computed as complete derivation sets. Each result is a
// sorted vector of substitutions whose mappings are themselves sorted; this
// forgets mapping order (unobservable) but keeps duplicates.

namespace {

using Derivs = std::vector<Substitution>;

struct PairHash {
  std::size_t operator()(const std::pair<const void*, const void*>& k) const {
    return std::hash<const void*>{}(k.first) * 31 ^
           std::hash<const void*>{}(k.second);
  }
};

Substitution concat_sorted(const Substitution& a, const Substitution& b) {
  Substitution out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void normalize(Derivs& d) {
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
}

Derivs product(const Derivs& a, const Derivs& b) {
  Derivs out;
  out.reserve(a.size() * b.size());
  for (const Substitution& x : a) {
    for (const Substitution& y : b) out.push_back(concat_sorted(x, y));
  }
  normalize(out);
  return out;
}

Derivs unite(Derivs a, const Derivs& b) {
  a.insert(a.end(), b.begin(), b.end());
  normalize(a);
  return a;
}

class Matcher {
 public:
  const Derivs& pos(const Pattern& p, const Value& v) {
    auto key = std::make_pair(p.id(), v.id());
    if (auto it = pos_memo_.find(key); it != pos_memo_.end()) return it->second;
    Derivs d = compute_pos(p, v);
    return pos_memo_.emplace(key, std::move(d)).first->second;
  }

  const Derivs& neg(const Pattern& p, const Value& v) {
    auto key = std::make_pair(p.id(), v.id());
    if (auto it = neg_memo_.find(key); it != neg_memo_.end()) return it->second;
    Derivs d = compute_neg(p, v);
    return neg_memo_.emplace(key, std::move(d)).first->second;
  }

 private:
  Derivs compute_pos(const Pattern& p, const Value& v) {
    switch (p.kind()) {
      case Pattern::Kind::kVar:
        return {Substitution{Mapping{p.var_name(), v}}};
      case Pattern::Kind::kWildcard:
        return {Substitution{}};
      case Pattern::Kind::kAbsurd:
        return {};
      case Pattern::Kind::kNeg:
        return neg(p.operand(), v);
      case Pattern::Kind::kOr:
        return unite(pos(p.lhs(), v), pos(p.rhs(), v));
      case Pattern::Kind::kAnd: {
        const Derivs& l = pos(p.lhs(), v);
        if (l.empty()) return {};
        return product(l, pos(p.rhs(), v));
      }
      case Pattern::Kind::kCtor: {
        if (p.ctor_name() != v.ctor()) return {};
        Derivs acc{Substitution{}};
        for (std::size_t i = 0; i < p.children().size() && !acc.empty(); ++i) {
          acc = product(acc, pos(p.children()[i], v.args()[i]));
        }
        return acc;
      }
    }
    return {};
  }

  Derivs compute_neg(const Pattern& p, const Value& v) {
    switch (p.kind()) {
      case Pattern::Kind::kVar:
      case Pattern::Kind::kWildcard:
        return {};
      case Pattern::Kind::kAbsurd:
        return {Substitution{}};
      case Pattern::Kind::kNeg:
        return pos(p.operand(), v);
      case Pattern::Kind::kAnd:
        return unite(neg(p.lhs(), v), neg(p.rhs(), v));
      case Pattern::Kind::kOr: {
        const Derivs& l = neg(p.lhs(), v);
        if (l.empty()) return {};
        return product(l, neg(p.rhs(), v));
      }
      case Pattern::Kind::kCtor: {
        if (p.ctor_name() != v.ctor()) return {Substitution{}};
        Derivs acc;
        for (std::size_t i = 0; i < p.children().size(); ++i) {
          const Derivs& d = neg(p.children()[i], v.args()[i]);
          acc.insert(acc.end(), d.begin(), d.end());
        }
        normalize(acc);
        return acc;
      }
    }
    return {};
  }

  std::unordered_map<std::pair<const void*, const void*>, Derivs, PairHash>
      pos_memo_, neg_memo_;
};

SubstSet to_set(const Derivs& d) {
  SubstSet out;
  for (const Substitution& s : d) out.insert(s);
  return out;
}

}  // namespace

std::vector<Substitution> derivations_pos(const Pattern& p, const Value& v) {
  Matcher m;
  Derivs d = m.pos(p, v);
  return d;
}

std::vector<Substitution> derivations_neg(const Pattern& p, const Value& v) {
  Matcher m;
  Derivs d = m.neg(p, v);
  return d;
}

SubstSet match_pos(const Pattern& p, const Value& v) {
  Matcher m;
  SubstSet out = to_set(m.pos(p, v));
#ifndef NDEBUG
  // Soundness and completeness of the two judgments.
  assert(out.empty() != m.neg(p, v).empty());
#endif
  return out;
}

SubstSet match_neg(const Pattern& p, const Value& v) {
  Matcher m;
  SubstSet out = to_set(m.neg(p, v));
#ifndef NDEBUG
  assert(out.empty() != m.pos(p, v).empty());
#endif
  return out;
}

bool matches(const Pattern& p, const Value& v) {
  switch (p.kind()) {
    case Pattern::Kind::kVar:
    case Pattern::Kind::kWildcard:
      return true;
    case Pattern::Kind::kAbsurd:
      return false;
    case Pattern::Kind::kNeg:
      return !matches(p.operand(), v);
    case Pattern::Kind::kAnd:
      return matches(p.lhs(), v) && matches(p.rhs(), v);
    case Pattern::Kind::kOr:
      return matches(p.lhs(), v) || matches(p.rhs(), v);
    case Pattern::Kind::kCtor:
      if (p.ctor_name() != v.ctor()) return false;
      for (std::size_t i = 0; i < p.children().size(); ++i) {
        if (!matches(p.children()[i], v.args()[i])) return false;
      }
      return true;
  }
  return false;
}

bool pattern_equiv_bounded(const Pattern& p, const Pattern& q,
                           std::span<const Value> universe) {
  for (const Value& v : universe) {
    Matcher m;
    // Derivation sets are already deduplicated; equivalence classes are
    // compared through SubstSet.
    if (to_set(m.pos(p, v)) != to_set(m.pos(q, v))) return false;
    if (to_set(m.neg(p, v)) != to_set(m.neg(q, v))) return false;
  }
  return true;
}

}  // namespace patc
