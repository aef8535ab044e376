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

#include "patc/normalize.h"

#include <algorithm>
#include <stdexcept>

namespace patc {

Nnf Nnf::var(std::string name) {
  return Nnf(std::make_shared<const Node>(
      Node{Kind::kVar, std::move(name), {}, {}}));
}

Nnf Nnf::neg_var(std::string name) {
  return Nnf(std::make_shared<const Node>(
      Node{Kind::kNegVar, std::move(name), {}, {}}));
}

Nnf Nnf::neg_ctor(CtorName ctor) {
  return Nnf(std::make_shared<const Node>(
      Node{Kind::kNegCtor, {}, std::move(ctor), {}}));
}

Nnf Nnf::ctor(CtorName ctor, std::vector<Nnf> args) {
  return Nnf(std::make_shared<const Node>(
      Node{Kind::kCtor, {}, std::move(ctor), std::move(args)}));
}

Nnf Nnf::conj(Nnf lhs, Nnf rhs) {
  return Nnf(std::make_shared<const Node>(
      Node{Kind::kAnd, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Nnf Nnf::disj(Nnf lhs, Nnf rhs) {
  return Nnf(std::make_shared<const Node>(
      Node{Kind::kOr, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Nnf Nnf::wildcard() {
  static const Nnf w(
      std::make_shared<const Node>(Node{Kind::kWildcard, {}, {}, {}}));
  return w;
}

Nnf Nnf::absurd() {
  static const Nnf a(
      std::make_shared<const Node>(Node{Kind::kAbsurd, {}, {}, {}}));
  return a;
}

std::strong_ordering operator<=>(const Nnf& a, const Nnf& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.var_name() <=> b.var_name(); c != 0) return c;
  if (auto c = a.ctor_name() <=> b.ctor_name(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.children().begin(), a.children().end(), b.children().begin(),
      b.children().end());
}

bool operator==(const Nnf& a, const Nnf& b) { return (a <=> b) == 0; }

namespace {

void print(const Nnf& n, std::string& out);

void print_operand(const Nnf& n, std::string& out) {
  bool compound = n.is(Nnf::Kind::kAnd) || n.is(Nnf::Kind::kOr);
  if (compound) out += '(';
  print(n, out);
  if (compound) out += ')';
}

void print(const Nnf& n, std::string& out) {
  switch (n.kind()) {
    case Nnf::Kind::kVar:
      out += n.var_name();
      return;
    case Nnf::Kind::kNegVar:
      out += '!' + n.var_name();
      return;
    case Nnf::Kind::kNegCtor:
      out += '!' + n.ctor_name().name;
      return;
    case Nnf::Kind::kWildcard:
      out += '_';
      return;
    case Nnf::Kind::kAbsurd:
      out += '#';
      return;
    case Nnf::Kind::kAnd:
    case Nnf::Kind::kOr:
      print_operand(n.lhs(), out);
      out += n.is(Nnf::Kind::kAnd) ? " & " : " | ";
      print_operand(n.rhs(), out);
      return;
    case Nnf::Kind::kCtor:
      out += n.ctor_name().name;
      if (!n.children().empty()) {
        out += '(';
        for (std::size_t i = 0; i < n.children().size(); ++i) {
          if (i) out += ", ";
          print(n.children()[i], out);
        }
        out += ')';
      }
      return;
  }
}

template <typename T>
void dedupe_in_order(std::vector<T>& items) {
  std::vector<T> out;
  for (T& item : items) {
    if (std::find(out.begin(), out.end(), item) == out.end()) {
      out.push_back(std::move(item));
    }
  }
  items = std::move(out);
}

}  // namespace

std::string to_string(const Nnf& n) {
  std::string out;
  print(n, out);
  return out;
}

Pattern to_pattern(const Nnf& n) {
  switch (n.kind()) {
    case Nnf::Kind::kVar:
      return Pattern::var(n.var_name());
    case Nnf::Kind::kNegVar:
      return Pattern::neg(Pattern::var(n.var_name()));
    case Nnf::Kind::kNegCtor:
      return Pattern::neg(Pattern::ctor(
          n.ctor_name(),
          std::vector<Pattern>(n.ctor_name().arity, Pattern::wildcard())));
    case Nnf::Kind::kWildcard:
      return Pattern::wildcard();
    case Nnf::Kind::kAbsurd:
      return Pattern::absurd();
    case Nnf::Kind::kAnd:
      return Pattern::conj(to_pattern(n.lhs()), to_pattern(n.rhs()));
    case Nnf::Kind::kOr:
      return Pattern::disj(to_pattern(n.lhs()), to_pattern(n.rhs()));
    case Nnf::Kind::kCtor: {
      std::vector<Pattern> args;
      for (const Nnf& a : n.children()) args.push_back(to_pattern(a));
      return Pattern::ctor(n.ctor_name(), std::move(args));
    }
  }
  return Pattern::absurd();
}

// ---------------------------------------------------------------------------
// Negation normal form

Nnf nnf(const Pattern& p) { return nnf_pos(p); }

Nnf nnf_pos(const Pattern& p) {
  switch (p.kind()) {
    case Pattern::Kind::kVar:
      return Nnf::var(p.var_name());
    case Pattern::Kind::kWildcard:
      return Nnf::wildcard();
    case Pattern::Kind::kAbsurd:
      return Nnf::absurd();
    case Pattern::Kind::kNeg:
      return nnf_neg(p.operand());
    case Pattern::Kind::kAnd:
      return Nnf::conj(nnf_pos(p.lhs()), nnf_pos(p.rhs()));
    case Pattern::Kind::kOr:
      return Nnf::disj(nnf_pos(p.lhs()), nnf_pos(p.rhs()));
    case Pattern::Kind::kCtor: {
      std::vector<Nnf> args;
      for (const Pattern& a : p.children()) args.push_back(nnf_pos(a));
      return Nnf::ctor(p.ctor_name(), std::move(args));
    }
  }
  return Nnf::absurd();
}

Nnf nnf_neg(const Pattern& p) {
  switch (p.kind()) {
    case Pattern::Kind::kVar:
      return Nnf::neg_var(p.var_name());
    case Pattern::Kind::kWildcard:
      return Nnf::absurd();
    case Pattern::Kind::kAbsurd:
      return Nnf::wildcard();
    case Pattern::Kind::kNeg:
      return nnf_pos(p.operand());
    case Pattern::Kind::kAnd:
      return Nnf::disj(nnf_neg(p.lhs()), nnf_neg(p.rhs()));
    case Pattern::Kind::kOr:
      return Nnf::conj(nnf_neg(p.lhs()), nnf_neg(p.rhs()));
    case Pattern::Kind::kCtor: {
      const std::size_t n = p.children().size();
      // !C | (C(!p1, _, ..) | (.. | C(_, .., !pn))), nested to the right.
      std::vector<Nnf> alternatives;
      alternatives.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Nnf> args(n, Nnf::wildcard());
        args[i] = nnf_neg(p.children()[i]);
        alternatives.push_back(Nnf::ctor(p.ctor_name(), std::move(args)));
      }
      Nnf acc = Nnf::neg_ctor(p.ctor_name());
      if (alternatives.empty()) return acc;
      Nnf tail = alternatives.back();
      for (std::size_t i = n - 1; i-- > 0;) {
        tail = Nnf::disj(alternatives[i], tail);
      }
      return Nnf::disj(acc, tail);
    }
  }
  return Nnf::absurd();
}

// ---------------------------------------------------------------------------
// Disjunctive normal form

std::vector<Conjunct> dnf(const Nnf& n) {
  std::vector<Conjunct> out;
  switch (n.kind()) {
    case Nnf::Kind::kVar:
    case Nnf::Kind::kNegVar:
    case Nnf::Kind::kNegCtor:
    case Nnf::Kind::kWildcard:
    case Nnf::Kind::kAbsurd:
      return {n};
    case Nnf::Kind::kOr:
      out = dnf(n.lhs());
      for (Conjunct& k : dnf(n.rhs())) out.push_back(std::move(k));
      break;
    case Nnf::Kind::kAnd: {
      std::vector<Conjunct> left = dnf(n.lhs());
      std::vector<Conjunct> right = dnf(n.rhs());
      for (const Conjunct& a : left) {
        for (const Conjunct& b : right) out.push_back(Nnf::conj(a, b));
      }
      break;
    }
    case Nnf::Kind::kCtor: {
      std::vector<std::vector<Conjunct>> partial{{}};
      for (const Nnf& arg : n.children()) {
        std::vector<Conjunct> options = dnf(arg);
        std::vector<std::vector<Conjunct>> next;
        next.reserve(partial.size() * options.size());
        for (const auto& prefix : partial) {
          for (const Conjunct& k : options) {
            next.push_back(prefix);
            next.back().push_back(k);
          }
        }
        partial = std::move(next);
      }
      for (auto& args : partial) {
        out.push_back(Nnf::ctor(n.ctor_name(), std::move(args)));
      }
      break;
    }
  }
  dedupe_in_order(out);
  return out;
}

std::string to_string(const std::vector<Conjunct>& d) {
  if (d.empty()) return "||{}";
  std::string out = "||{ ";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ", ";
    out += to_string(d[i]);
  }
  return out + " }";
}

// ---------------------------------------------------------------------------
// Normalized conjuncts

NConjunct NConjunct::positive(VarSet vars, CtorName ctor,
                              std::vector<NConjunct> args) {
  NConjunct k;
  k.kind = Kind::kPositive;
  k.vars = std::move(vars);
  k.ctor = std::move(ctor);
  k.args = std::move(args);
  return k;
}

NConjunct NConjunct::negative(VarSet vars, std::set<CtorName> banned) {
  NConjunct k;
  k.kind = Kind::kNegative;
  k.vars = std::move(vars);
  k.banned = std::move(banned);
  return k;
}

NConjunct NConjunct::unsat(VarSet vars) {
  NConjunct k;
  k.kind = Kind::kUnsat;
  k.vars = std::move(vars);
  return k;
}

bool NConjunct::satisfiable() const {
  switch (kind) {
    case Kind::kUnsat:
      return false;
    case Kind::kNegative:
      return true;
    case Kind::kPositive:
      return std::all_of(args.begin(), args.end(),
                         [](const NConjunct& a) { return a.satisfiable(); });
  }
  return false;
}

std::strong_ordering operator<=>(const NConjunct& a, const NConjunct& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.vars <=> b.vars; c != 0) return c;
  if (auto c = a.ctor <=> b.ctor; c != 0) return c;
  if (auto c = a.banned <=> b.banned; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
}

bool operator==(const NConjunct& a, const NConjunct& b) {
  return (a <=> b) == 0;
}

namespace {

std::string print_names(const VarSet& vars) {
  std::string out = "{";
  bool first = true;
  for (const std::string& x : vars) {
    if (!first) out += ", ";
    out += x;
    first = false;
  }
  return out + "}";
}

VarSet unite(const VarSet& a, const VarSet& b) {
  VarSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

}  // namespace

std::string to_string(const NConjunct& k) {
  std::string out = print_names(k.vars) + " & ";
  switch (k.kind) {
    case NConjunct::Kind::kUnsat:
      return out + "#";
    case NConjunct::Kind::kNegative: {
      out += "!{";
      bool first = true;
      for (const CtorName& c : k.banned) {
        if (!first) out += ", ";
        out += c.name;
        first = false;
      }
      return out + "}";
    }
    case NConjunct::Kind::kPositive:
      out += k.ctor.name;
      if (!k.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < k.args.size(); ++i) {
          if (i) out += ", ";
          out += to_string(k.args[i]);
        }
        out += ')';
      }
      return out;
  }
  return out;
}

std::string to_string(const Ndnf& d) {
  if (d.disjuncts.empty()) return "||{}";
  std::string out = "||{ ";
  for (std::size_t i = 0; i < d.disjuncts.size(); ++i) {
    if (i) out += ", ";
    out += to_string(d.disjuncts[i]);
  }
  return out + " }";
}

NConjunct combine(const NConjunct& a, const NConjunct& b) {
  using K = NConjunct::Kind;
  VarSet vars = unite(a.vars, b.vars);
  if (a.is(K::kUnsat) || b.is(K::kUnsat)) return NConjunct::unsat(vars);
  if (a.is(K::kNegative) && b.is(K::kNegative)) {
    std::set<CtorName> banned = a.banned;
    banned.insert(b.banned.begin(), b.banned.end());
    return NConjunct::negative(std::move(vars), std::move(banned));
  }
  if (a.is(K::kNegative)) return combine(b, a);
  if (b.is(K::kNegative)) {
    if (b.banned.contains(a.ctor)) return NConjunct::unsat(vars);
    return NConjunct::positive(std::move(vars), a.ctor, a.args);
  }
  if (a.ctor != b.ctor) return NConjunct::unsat(vars);
  std::vector<NConjunct> args;
  args.reserve(a.args.size());
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    args.push_back(combine(a.args[i], b.args[i]));
  }
  return NConjunct::positive(std::move(vars), a.ctor, std::move(args));
}

NConjunct normalize_conjunct(const Conjunct& k) {
  switch (k.kind()) {
    case Nnf::Kind::kVar:
      return NConjunct::negative({k.var_name()}, {});
    case Nnf::Kind::kWildcard:
      return NConjunct::negative({}, {});
    case Nnf::Kind::kAbsurd:
    case Nnf::Kind::kNegVar:
      return NConjunct::unsat({});
    case Nnf::Kind::kNegCtor:
      return NConjunct::negative({}, {k.ctor_name()});
    case Nnf::Kind::kCtor: {
      std::vector<NConjunct> args;
      for (const Conjunct& a : k.children()) {
        args.push_back(normalize_conjunct(a));
      }
      return NConjunct::positive({}, k.ctor_name(), std::move(args));
    }
    case Nnf::Kind::kAnd:
      return combine(normalize_conjunct(k.lhs()), normalize_conjunct(k.rhs()));
    case Nnf::Kind::kOr:
      break;
  }
  throw std::invalid_argument("or-pattern inside an elementary conjunct: " +
                              to_string(k));
}

Ndnf to_ndnf(const Pattern& p) {
  Ndnf out;
  for (const Conjunct& k : dnf(nnf(p))) {
    out.disjuncts.push_back(normalize_conjunct(k));
  }
  const bool any_sat = std::any_of(out.disjuncts.begin(), out.disjuncts.end(),
                                   [](const NConjunct& k) { return k.satisfiable(); });
  if (any_sat) {
    std::erase_if(out.disjuncts,
                  [](const NConjunct& k) { return !k.satisfiable(); });
  }
  dedupe_in_order(out.disjuncts);
  return out;
}

Pattern to_pattern(const NConjunct& k) {
  Pattern core = Pattern::wildcard();
  switch (k.kind) {
    case NConjunct::Kind::kUnsat:
      core = Pattern::absurd();
      break;
    case NConjunct::Kind::kPositive: {
      std::vector<Pattern> args;
      for (const NConjunct& a : k.args) args.push_back(to_pattern(a));
      core = Pattern::ctor(k.ctor, std::move(args));
      break;
    }
    case NConjunct::Kind::kNegative: {
      bool first = true;
      for (auto it = k.banned.rbegin(); it != k.banned.rend(); ++it) {
        Pattern neg = Pattern::neg(Pattern::ctor(
            *it, std::vector<Pattern>(it->arity, Pattern::wildcard())));
        core = first ? neg : Pattern::conj(neg, core);
        first = false;
      }
      break;
    }
  }
  if (k.vars.empty()) return core;
  bool keep_core = !k.is_catch_all();
  std::vector<std::string> vars(k.vars.begin(), k.vars.end());
  Pattern acc = keep_core ? Pattern::conj(Pattern::var(vars.back()), core)
                          : Pattern::var(vars.back());
  for (std::size_t i = vars.size() - 1; i-- > 0;) {
    acc = Pattern::conj(Pattern::var(vars[i]), acc);
  }
  return acc;
}

Pattern to_pattern(const Ndnf& d) {
  if (d.disjuncts.empty()) return Pattern::absurd();
  Pattern acc = to_pattern(d.disjuncts.back());
  for (std::size_t i = d.disjuncts.size() - 1; i-- > 0;) {
    acc = Pattern::disj(to_pattern(d.disjuncts[i]), acc);
  }
  return acc;
}

}  // namespace patc
