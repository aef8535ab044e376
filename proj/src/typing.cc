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

#include "patc/typing.h"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace patc {

Type Type::boolean() {
  static const Type t(std::make_shared<const Node>(Node{Kind::kBool, {}, {}}));
  return t;
}

Type Type::pair(Type first, Type second) {
  return Type(std::make_shared<const Node>(
      Node{Kind::kPair, {}, {std::move(first), std::move(second)}}));
}

Type Type::sum(Type left, Type right) {
  return Type(std::make_shared<const Node>(
      Node{Kind::kSum, {}, {std::move(left), std::move(right)}}));
}

Type Type::named(std::string name) {
  return Type(
      std::make_shared<const Node>(Node{Kind::kNamed, std::move(name), {}}));
}

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.node_->children.begin(), a.node_->children.end(),
      b.node_->children.begin(), b.node_->children.end());
}

bool operator==(const Type& a, const Type& b) { return (a <=> b) == 0; }

std::string to_string(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::kBool:
      return "Bool";
    case Type::Kind::kNamed:
      return t.name();
    case Type::Kind::kPair:
      return fmt::format("({} * {})", to_string(t.first()),
                         to_string(t.second()));
    case Type::Kind::kSum:
      return fmt::format("({} + {})", to_string(t.first()),
                         to_string(t.second()));
  }
  return "?";
}

// ---------------------------------------------------------------------------
// DataDecls

void DataDecls::add(const std::string& type_name, std::vector<CtorSig> ctors) {
  if (has_type(type_name)) {
    throw std::invalid_argument("duplicate data type " + type_name);
  }
  for (std::size_t i = 0; i < ctors.size(); ++i) {
    const CtorSig& sig = ctors[i];
    if (sig.ctor.arity != sig.args.size()) {
      throw std::invalid_argument("arity mismatch for constructor " +
                                  sig.ctor.name);
    }
    if (by_ctor_.contains(sig.ctor.name)) {
      throw std::invalid_argument("duplicate constructor " + sig.ctor.name);
    }
    by_ctor_.emplace(sig.ctor.name, std::make_pair(types_.size(), i));
  }
  types_.emplace_back(type_name, std::move(ctors));
}

bool DataDecls::has_type(const std::string& name) const {
  return std::any_of(types_.begin(), types_.end(),
                     [&](const auto& t) { return t.first == name; });
}

const std::vector<CtorSig>& DataDecls::ctors_of(
    const std::string& type_name) const {
  for (const auto& [name, ctors] : types_) {
    if (name == type_name) return ctors;
  }
  throw std::out_of_range("unknown data type " + type_name);
}

std::vector<std::string> DataDecls::type_names() const {
  std::vector<std::string> out;
  for (const auto& t : types_) out.push_back(t.first);
  return out;
}

const CtorSig* DataDecls::find_by_name(const std::string& name) const {
  auto it = by_ctor_.find(name);
  if (it == by_ctor_.end()) return nullptr;
  return &types_[it->second.first].second[it->second.second];
}

const CtorSig* DataDecls::find_sig(const CtorName& c) const {
  const CtorSig* sig = find_by_name(c.name);
  return sig && sig->ctor.arity == c.arity ? sig : nullptr;
}

std::optional<std::string> DataDecls::owner(const CtorName& c) const {
  auto it = by_ctor_.find(c.name);
  if (it == by_ctor_.end()) return std::nullopt;
  const auto& [type_name, ctors] = types_[it->second.first];
  if (ctors[it->second.second].ctor.arity != c.arity) return std::nullopt;
  return type_name;
}

namespace {

const CtorName kTrue{"True", 0};
const CtorName kFalse{"False", 0};
const CtorName kPair{"Pair", 2};
const CtorName kInl{"Inl", 1};
const CtorName kInr{"Inr", 1};

}  // namespace

std::vector<CtorName> DataDecls::signature_of(const CtorName& c) const {
  if (std::optional<std::string> t = owner(c)) {
    std::vector<CtorName> out;
    for (const CtorSig& s : ctors_of(*t)) out.push_back(s.ctor);
    return out;
  }
  if (by_ctor_.contains(c.name)) return {};
  if (c == kTrue || c == kFalse) return {kTrue, kFalse};
  if (c == kPair) return {kPair};
  if (c == kInl || c == kInr) return {kInl, kInr};
  return {};
}

std::vector<CtorSig> DataDecls::ctors_for(const Type& t) const {
  switch (t.kind()) {
    case Type::Kind::kBool:
      return {CtorSig{kTrue, {}}, CtorSig{kFalse, {}}};
    case Type::Kind::kPair:
      return {CtorSig{kPair, {t.first(), t.second()}}};
    case Type::Kind::kSum:
      return {CtorSig{kInl, {t.first()}}, CtorSig{kInr, {t.second()}}};
    case Type::Kind::kNamed:
      return ctors_of(t.name());
  }
  return {};
}

// ---------------------------------------------------------------------------
// Contexts

std::string to_string(const Context& c) {
  if (c.empty()) return ".";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += c[i].first + " : " + to_string(c[i].second);
  }
  return out;
}

bool same_bindings(const Context& a, const Context& b) {
  if (a.size() != b.size()) return false;
  Context x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

namespace {

Context concat(Context a, const Context& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Argument types for constructor `c` checked against `tau`, or an error.
std::variant<std::vector<Type>, Ill> ctor_arg_types(const CtorName& c,
                                                    const Type& tau,
                                                    const DataDecls& decls) {
  std::vector<CtorSig> sigs;
  try {
    sigs = decls.ctors_for(tau);
  } catch (const std::out_of_range& e) {
    return Ill{e.what()};
  }
  for (const CtorSig& s : sigs) {
    if (s.ctor == c) return s.args;
  }
  return Ill{fmt::format("constructor {} does not belong to type {}",
                         to_string(c), to_string(tau))};
}

}  // namespace

PatternTyping type_pattern(const Pattern& p, const Type& tau,
                           const DataDecls& decls) {
  switch (p.kind()) {
    case Pattern::Kind::kVar:
      return Typed{{{p.var_name(), tau}}, {}};
    case Pattern::Kind::kWildcard:
    case Pattern::Kind::kAbsurd:
      return Typed{};
    case Pattern::Kind::kNeg: {
      PatternTyping inner = type_pattern(p.operand(), tau, decls);
      if (auto* t = std::get_if<Typed>(&inner)) {
        return Typed{std::move(t->delta), std::move(t->gamma)};
      }
      return inner;
    }
    case Pattern::Kind::kAnd:
    case Pattern::Kind::kOr: {
      PatternTyping l = type_pattern(p.lhs(), tau, decls);
      if (std::holds_alternative<Ill>(l)) return l;
      PatternTyping r = type_pattern(p.rhs(), tau, decls);
      if (std::holds_alternative<Ill>(r)) return r;
      Typed& a = std::get<Typed>(l);
      Typed& b = std::get<Typed>(r);
      if (p.is(Pattern::Kind::kAnd)) {
        if (!same_bindings(a.delta, b.delta)) {
          return Ill{fmt::format(
              "and-pattern {}: operands bind different negated contexts "
              "[{}] and [{}]",
              to_string(p), to_string(a.delta), to_string(b.delta))};
        }
        return Typed{concat(std::move(a.gamma), b.gamma), std::move(a.delta)};
      }
      if (!same_bindings(a.gamma, b.gamma)) {
        return Ill{fmt::format(
            "or-pattern {}: branches bind different contexts [{}] and [{}]",
            to_string(p), to_string(a.gamma), to_string(b.gamma))};
      }
      return Typed{std::move(a.gamma), concat(std::move(a.delta), b.delta)};
    }
    case Pattern::Kind::kCtor: {
      auto args = ctor_arg_types(p.ctor_name(), tau, decls);
      if (auto* ill = std::get_if<Ill>(&args)) return *ill;
      const auto& types = std::get<std::vector<Type>>(args);
      Typed out;
      for (std::size_t i = 0; i < types.size(); ++i) {
        PatternTyping sub = type_pattern(p.children()[i], types[i], decls);
        if (std::holds_alternative<Ill>(sub)) return sub;
        Typed& t = std::get<Typed>(sub);
        out.gamma = concat(std::move(out.gamma), t.gamma);
        out.delta = concat(std::move(out.delta), t.delta);
      }
      return out;
    }
  }
  return Ill{"unreachable"};
}

namespace {

class ExprTyper {
 public:
  ExprTyper(const DataDecls& decls, const FunctionSigs* functions)
      : decls_(decls), functions_(functions) {}

  ExprTyping synth(const Context& ctx, const Expression& e) {
    switch (e.kind()) {
      case Expression::Kind::kVar:
        for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
          if (it->first == e.name()) return it->second;
        }
        return Ill{"unbound variable " + e.name()};
      case Expression::Kind::kCtor:
        return synth_ctor(ctx, e);
      case Expression::Kind::kCall:
        return synth_call(ctx, e);
      case Expression::Kind::kCase:
        return synth_case(ctx, e);
    }
    return Ill{"unreachable"};
  }

  std::optional<Ill> check(const Context& ctx, const Expression& e,
                           const Type& expected) {
    if (e.is(Expression::Kind::kCase)) {
      auto scrut = synth(ctx, e.scrutinee());
      if (auto* ill = std::get_if<Ill>(&scrut)) return *ill;
      return check_case(ctx, e, std::get<Type>(scrut), expected);
    }
    if (e.is(Expression::Kind::kCtor)) {
      const CtorName& c = e.ctor_name();
      bool builtin_shape =
          (expected.is(Type::Kind::kSum) && (c == kInl || c == kInr) &&
           !decls_.find_by_name(c.name)) ||
          (expected.is(Type::Kind::kPair) && c == kPair &&
           !decls_.find_by_name(c.name)) ||
          expected.is(Type::Kind::kNamed);
      if (builtin_shape) {
        auto args = ctor_arg_types(c, expected, decls_);
        if (auto* ill = std::get_if<Ill>(&args)) return *ill;
        const auto& types = std::get<std::vector<Type>>(args);
        for (std::size_t i = 0; i < types.size(); ++i) {
          if (auto err = check(ctx, e.args()[i], types[i])) return err;
        }
        return std::nullopt;
      }
    }
    auto got = synth(ctx, e);
    if (auto* ill = std::get_if<Ill>(&got)) return *ill;
    if (std::get<Type>(got) != expected) {
      return Ill{fmt::format("{} has type {} but {} was expected",
                             to_string(e), to_string(std::get<Type>(got)),
                             to_string(expected))};
    }
    return std::nullopt;
  }

 private:
  ExprTyping synth_ctor(const Context& ctx, const Expression& e) {
    const CtorName& c = e.ctor_name();
    if (const CtorSig* sig = decls_.find_sig(c)) {
      for (std::size_t i = 0; i < sig->args.size(); ++i) {
        if (auto err = check(ctx, e.args()[i], sig->args[i])) return *err;
      }
      return Type::named(*decls_.owner(c));
    }
    if (decls_.find_by_name(c.name)) {
      return Ill{fmt::format("constructor {} used with arity {}", c.name,
                             c.arity)};
    }
    if (c == kTrue || c == kFalse) return Type::boolean();
    if (c == kPair) {
      auto a = synth(ctx, e.args()[0]);
      if (std::holds_alternative<Ill>(a)) return a;
      auto b = synth(ctx, e.args()[1]);
      if (std::holds_alternative<Ill>(b)) return b;
      return Type::pair(std::get<Type>(a), std::get<Type>(b));
    }
    if (c == kInl || c == kInr) {
      return Ill{fmt::format("cannot infer the sum type of {}", to_string(e))};
    }
    return Ill{"unknown constructor " + to_string(c)};
  }

  ExprTyping synth_call(const Context& ctx, const Expression& e) {
    if (!functions_) return Ill{"call to " + e.name() + " without signatures"};
    auto it = functions_->find(e.name());
    if (it == functions_->end()) return Ill{"unknown function " + e.name()};
    const FunctionSig& sig = it->second;
    if (sig.params.size() != e.args().size()) {
      return Ill{fmt::format("{} expects {} arguments, got {}", e.name(),
                             sig.params.size(), e.args().size())};
    }
    for (std::size_t i = 0; i < sig.params.size(); ++i) {
      if (auto err = check(ctx, e.args()[i], sig.params[i])) return *err;
    }
    if (!sig.result) return Ill{"result type of " + e.name() + " is unknown"};
    return *sig.result;
  }

  // Binder context of every clause, or the first pattern typing error.
  std::variant<std::vector<Context>, Ill> clause_contexts(
      const Expression& e, const Type& scrut) {
    std::vector<Context> out;
    for (const Clause& c : e.clauses()) {
      PatternTyping t = type_pattern(c.pattern, scrut, decls_);
      if (auto* ill = std::get_if<Ill>(&t)) return *ill;
      out.push_back(std::get<Typed>(t).gamma);
    }
    return out;
  }

  ExprTyping synth_case(const Context& ctx, const Expression& e) {
    auto scrut = synth(ctx, e.scrutinee());
    if (std::holds_alternative<Ill>(scrut)) return scrut;
    auto contexts = clause_contexts(e, std::get<Type>(scrut));
    if (auto* ill = std::get_if<Ill>(&contexts)) return *ill;
    const auto& gammas = std::get<std::vector<Context>>(contexts);
    ExprTyping result = synth(ctx, e.default_rhs());
    for (std::size_t i = 0;
         std::holds_alternative<Ill>(result) && i < gammas.size(); ++i) {
      ExprTyping candidate = synth(concat(ctx, gammas[i]), e.clauses()[i].rhs);
      if (std::holds_alternative<Type>(candidate)) result = candidate;
    }
    if (std::holds_alternative<Ill>(result)) return result;
    if (auto err = check_case(ctx, e, std::get<Type>(scrut),
                              std::get<Type>(result))) {
      return *err;
    }
    return result;
  }

  std::optional<Ill> check_case(const Context& ctx, const Expression& e,
                                const Type& scrut, const Type& expected) {
    auto contexts = clause_contexts(e, scrut);
    if (auto* ill = std::get_if<Ill>(&contexts)) return *ill;
    const auto& gammas = std::get<std::vector<Context>>(contexts);
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      if (auto err =
              check(concat(ctx, gammas[i]), e.clauses()[i].rhs, expected)) {
        return err;
      }
    }
    return check(ctx, e.default_rhs(), expected);
  }

  const DataDecls& decls_;
  const FunctionSigs* functions_;
};

}  // namespace

ExprTyping type_expr(const Context& ctx, const Expression& e,
                     const DataDecls& decls, const FunctionSigs* functions) {
  return ExprTyper(decls, functions).synth(ctx, e);
}

std::optional<Ill> check_expr(const Context& ctx, const Expression& e,
                              const Type& expected, const DataDecls& decls,
                              const FunctionSigs* functions) {
  return ExprTyper(decls, functions).check(ctx, e, expected);
}

}  // namespace patc
