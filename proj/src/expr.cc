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

#include "patc/expr.h"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace patc {

struct Expression::Node {
  Kind kind;
  std::string name;
  CtorName ctor;
  // Constructor or call arguments; for a case, the scrutinee then the default.
  std::vector<Expression> children;
  std::vector<Clause> clauses;
  std::size_t size;
};

Expression Expression::var(std::string name) {
  return Expression(std::make_shared<const Node>(
      Node{Kind::kVar, std::move(name), {}, {}, {}, 1}));
}

Expression Expression::ctor(CtorName ctor, std::vector<Expression> args) {
  if (args.size() != ctor.arity) {
    throw std::invalid_argument(fmt::format(
        "constructor {} applied to {} expressions", to_string(ctor),
        args.size()));
  }
  std::size_t size = 1;
  for (const Expression& a : args) size += a.size();
  return Expression(std::make_shared<const Node>(
      Node{Kind::kCtor, {}, std::move(ctor), std::move(args), {}, size}));
}

Expression Expression::ctor(std::string name, std::vector<Expression> args) {
  CtorName c{std::move(name), args.size()};
  return ctor(std::move(c), std::move(args));
}

Expression Expression::case_of(Expression scrutinee,
                               std::vector<Clause> clauses,
                               Expression default_rhs) {
  std::size_t size = 1 + scrutinee.size() + default_rhs.size();
  for (const Clause& c : clauses) size += c.pattern.size() + c.rhs.size();
  return Expression(std::make_shared<const Node>(
      Node{Kind::kCase,
           {},
           {},
           {std::move(scrutinee), std::move(default_rhs)},
           std::move(clauses),
           size}));
}

Expression Expression::call(std::string function,
                            std::vector<Expression> args) {
  std::size_t size = 1;
  for (const Expression& a : args) size += a.size();
  return Expression(std::make_shared<const Node>(Node{
      Kind::kCall, std::move(function), {}, std::move(args), {}, size}));
}

Expression Expression::from_value(const Value& v) {
  std::vector<Expression> args;
  args.reserve(v.args().size());
  for (const Value& a : v.args()) args.push_back(from_value(a));
  return ctor(v.ctor(), std::move(args));
}

Expression::Kind Expression::kind() const { return node_->kind; }
const std::string& Expression::name() const { return node_->name; }
const CtorName& Expression::ctor_name() const { return node_->ctor; }

std::span<const Expression> Expression::args() const {
  if (node_->kind == Kind::kCase) return {};
  return node_->children;
}

const Expression& Expression::scrutinee() const { return node_->children[0]; }
std::span<const Clause> Expression::clauses() const { return node_->clauses; }
const Expression& Expression::default_rhs() const {
  return node_->children[1];
}
std::size_t Expression::size() const { return node_->size; }

bool Expression::is_value() const {
  if (node_->kind != Kind::kCtor) return false;
  return std::all_of(node_->children.begin(), node_->children.end(),
                     [](const Expression& a) { return a.is_value(); });
}

std::optional<Value> Expression::to_value() const {
  if (node_->kind != Kind::kCtor) return std::nullopt;
  std::vector<Value> args;
  args.reserve(node_->children.size());
  for (const Expression& a : node_->children) {
    std::optional<Value> v = a.to_value();
    if (!v) return std::nullopt;
    args.push_back(std::move(*v));
  }
  return Value(node_->ctor, std::move(args));
}

std::strong_ordering operator<=>(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.node_->name <=> b.node_->name; c != 0) return c;
  if (auto c = a.node_->ctor <=> b.node_->ctor; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(
          a.node_->children.begin(), a.node_->children.end(),
          b.node_->children.begin(), b.node_->children.end());
      c != 0) {
    return c;
  }
  const auto& ca = a.node_->clauses;
  const auto& cb = b.node_->clauses;
  for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i) {
    if (auto c = ca[i].pattern <=> cb[i].pattern; c != 0) return c;
    if (auto c = ca[i].rhs <=> cb[i].rhs; c != 0) return c;
  }
  return ca.size() <=> cb.size();
}

bool operator==(const Expression& a, const Expression& b) {
  return (a <=> b) == 0;
}

namespace {

void print(const Expression& e, std::string& out) {
  switch (e.kind()) {
    case Expression::Kind::kVar:
      out += e.name();
      return;
    case Expression::Kind::kCtor:
    case Expression::Kind::kCall: {
      bool is_call = e.is(Expression::Kind::kCall);
      out += is_call ? e.name() : e.ctor_name().name;
      if (e.args().empty() && !is_call) return;
      out += '(';
      for (std::size_t i = 0; i < e.args().size(); ++i) {
        if (i) out += ", ";
        print(e.args()[i], out);
      }
      out += ')';
      return;
    }
    case Expression::Kind::kCase:
      out += "case ";
      print(e.scrutinee(), out);
      out += " of { ";
      for (const Clause& c : e.clauses()) {
        out += to_string(c.pattern);
        out += " => ";
        print(c.rhs, out);
        out += ", ";
      }
      out += "default => ";
      print(e.default_rhs(), out);
      out += " }";
      return;
  }
}

void collect_free(const Expression& e, VarSet& bound, VarSet& out) {
  switch (e.kind()) {
    case Expression::Kind::kVar:
      if (!bound.contains(e.name())) out.insert(e.name());
      return;
    case Expression::Kind::kCtor:
    case Expression::Kind::kCall:
      for (const Expression& a : e.args()) collect_free(a, bound, out);
      return;
    case Expression::Kind::kCase: {
      collect_free(e.scrutinee(), bound, out);
      collect_free(e.default_rhs(), bound, out);
      for (const Clause& c : e.clauses()) {
        VarSet inner = bound;
        for (const std::string& x : fv_even(c.pattern)) inner.insert(x);
        collect_free(c.rhs, inner, out);
      }
      return;
    }
  }
}

std::string fresh_name(const std::string& base, const VarSet& avoid) {
  for (std::size_t n = 1;; ++n) {
    std::string candidate = fmt::format("${}_{}", base, n);
    if (!avoid.contains(candidate)) return candidate;
  }
}

}  // namespace

std::string to_string(const Expression& e) {
  std::string out;
  print(e, out);
  return out;
}

VarSet free_vars(const Expression& e) {
  VarSet bound, out;
  collect_free(e, bound, out);
  return out;
}

Pattern rename_pattern_vars(
    const Pattern& p, const std::map<std::string, std::string>& renaming) {
  switch (p.kind()) {
    case Pattern::Kind::kVar: {
      auto it = renaming.find(p.var_name());
      return it == renaming.end() ? p : Pattern::var(it->second);
    }
    case Pattern::Kind::kWildcard:
    case Pattern::Kind::kAbsurd:
      return p;
    case Pattern::Kind::kNeg:
      return Pattern::neg(rename_pattern_vars(p.operand(), renaming));
    case Pattern::Kind::kAnd:
      return Pattern::conj(rename_pattern_vars(p.lhs(), renaming),
                           rename_pattern_vars(p.rhs(), renaming));
    case Pattern::Kind::kOr:
      return Pattern::disj(rename_pattern_vars(p.lhs(), renaming),
                           rename_pattern_vars(p.rhs(), renaming));
    case Pattern::Kind::kCtor: {
      std::vector<Pattern> args;
      for (const Pattern& a : p.children()) {
        args.push_back(rename_pattern_vars(a, renaming));
      }
      return Pattern::ctor(p.ctor_name(), std::move(args));
    }
  }
  return p;
}

Expression substitute(const Expression& e,
                      const std::map<std::string, Expression>& replacements) {
  if (replacements.empty()) return e;
  switch (e.kind()) {
    case Expression::Kind::kVar: {
      auto it = replacements.find(e.name());
      return it == replacements.end() ? e : it->second;
    }
    case Expression::Kind::kCtor:
    case Expression::Kind::kCall: {
      std::vector<Expression> args;
      args.reserve(e.args().size());
      for (const Expression& a : e.args()) {
        args.push_back(substitute(a, replacements));
      }
      return e.is(Expression::Kind::kCall)
                 ? Expression::call(e.name(), std::move(args))
                 : Expression::ctor(e.ctor_name(), std::move(args));
    }
    case Expression::Kind::kCase: {
      std::vector<Clause> clauses;
      clauses.reserve(e.clauses().size());
      for (const Clause& c : e.clauses()) {
        VarSet binders = fv_even(c.pattern);
        std::map<std::string, Expression> inner;
        VarSet incoming;
        for (const auto& [x, r] : replacements) {
          if (binders.contains(x)) continue;
          inner.emplace(x, r);
          for (const std::string& y : free_vars(r)) incoming.insert(y);
        }
        if (inner.empty()) {
          clauses.push_back(c);
          continue;
        }
        std::map<std::string, std::string> renaming;
        VarSet avoid = free_vars(c.rhs);
        avoid.insert(incoming.begin(), incoming.end());
        avoid.insert(binders.begin(), binders.end());
        for (const std::string& b : binders) {
          if (!incoming.contains(b)) continue;
          std::string fresh = fresh_name(b, avoid);
          avoid.insert(fresh);
          renaming.emplace(b, fresh);
        }
        Pattern pattern = c.pattern;
        Expression rhs = c.rhs;
        if (!renaming.empty()) {
          pattern = rename_pattern_vars(pattern, renaming);
          std::map<std::string, Expression> rename_exprs;
          for (const auto& [from, to] : renaming) {
            rename_exprs.emplace(from, Expression::var(to));
          }
          rhs = substitute(rhs, rename_exprs);
        }
        clauses.push_back(Clause{std::move(pattern), substitute(rhs, inner)});
      }
      return Expression::case_of(substitute(e.scrutinee(), replacements),
                                 std::move(clauses),
                                 substitute(e.default_rhs(), replacements));
    }
  }
  return e;
}

Expression apply_subst(const Expression& e, const Substitution& s) {
  if (!is_proper(s)) {
    throw std::invalid_argument("improper substitution " + to_string(s));
  }
  std::map<std::string, Expression> replacements;
  for (const Mapping& m : s) {
    replacements.emplace(m.var, Expression::from_value(m.value));
  }
  return substitute(e, replacements);
}

}  // namespace patc
