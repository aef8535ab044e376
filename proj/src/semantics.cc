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

#include "patc/semantics.h"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace patc {
namespace {

void sort_unique(std::vector<Expression>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Steps the leftmost non-value among `items` and rebuilds the enclosing
// expression around each successor. Returns nullopt when all are values.
template <typename Rebuild>
std::optional<StepResult> step_leftmost(std::span<const Expression> items,
                                        const Definitions* defs,
                                        Rebuild rebuild) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].is_value()) continue;
    StepResult inner = step(items[i], defs);
    if (auto* s = std::get_if<Stepped>(&inner)) {
      std::vector<Expression> out;
      for (const Expression& succ : s->successors) {
        std::vector<Expression> copy(items.begin(), items.end());
        copy[i] = succ;
        out.push_back(rebuild(std::move(copy)));
      }
      sort_unique(out);
      return Stepped{std::move(out)};
    }
    return inner;
  }
  return std::nullopt;
}

StepResult step_case(const Expression& e, const Definitions* defs) {
  const Expression& scrutinee = e.scrutinee();
  if (!scrutinee.is_value()) {
    std::vector<Clause> clauses(e.clauses().begin(), e.clauses().end());
    const Expression& d = e.default_rhs();
    std::optional<StepResult> r = step_leftmost(
        std::span<const Expression>(&scrutinee, 1), defs,
        [&](std::vector<Expression> s) {
          return Expression::case_of(std::move(s[0]), clauses, d);
        });
    return *r;
  }
  Value v = *scrutinee.to_value();
  std::vector<Expression> out;
  for (const Clause& c : e.clauses()) {
    for (const Substitution& sigma : match_pos(c.pattern, v).members()) {
      if (!is_proper(sigma)) {
        return Stuck{fmt::format("pattern {} binds {} improperly",
                                 to_string(c.pattern), to_string(sigma))};
      }
      out.push_back(apply_subst(c.rhs, sigma));
    }
  }
  if (out.empty()) out.push_back(e.default_rhs());
  sort_unique(out);
  return Stepped{std::move(out)};
}

StepResult step_call(const Expression& e, const Definitions* defs) {
  const std::string& f = e.name();
  if (auto r = step_leftmost(e.args(), defs, [&](std::vector<Expression> a) {
        return Expression::call(f, std::move(a));
      })) {
    return *r;
  }
  if (defs == nullptr) return Stuck{fmt::format("unknown function {}", f)};
  auto it = defs->find(f);
  if (it == defs->end()) return Stuck{fmt::format("unknown function {}", f)};
  const Definition& def = it->second;
  if (def.params.size() != e.args().size()) {
    return Stuck{fmt::format("{} expects {} arguments, got {}", f,
                             def.params.size(), e.args().size())};
  }
  std::map<std::string, Expression> binding;
  for (std::size_t i = 0; i < def.params.size(); ++i) {
    binding.emplace(def.params[i], e.args()[i]);
  }
  return Stepped{{substitute(def.body, binding)}};
}

}  // namespace

StepResult step(const Expression& e, const Definitions* defs) {
  switch (e.kind()) {
    case Expression::Kind::kVar:
      return Stuck{fmt::format("free variable {}", e.name())};
    case Expression::Kind::kCtor: {
      const CtorName& c = e.ctor_name();
      if (auto r = step_leftmost(e.args(), defs, [&](std::vector<Expression> a) {
            return Expression::ctor(c, std::move(a));
          })) {
        return *r;
      }
      return IsValue{};
    }
    case Expression::Kind::kCase:
      return step_case(e, defs);
    case Expression::Kind::kCall:
      return step_call(e, defs);
  }
  return Stuck{"unknown expression"};
}

EvalResult eval(const Expression& e, std::size_t fuel,
                const Definitions* defs) {
  if (fuel == 0) throw std::invalid_argument("eval needs positive fuel");
  Expression current = e;
  for (std::size_t i = 0; i < fuel; ++i) {
    StepResult r = step(current, defs);
    if (std::holds_alternative<IsValue>(r)) return *current.to_value();
    if (auto* s = std::get_if<Stuck>(&r)) return *s;
    auto& next = std::get<Stepped>(r).successors;
    if (next.size() > 1) return Nondeterministic{current, next};
    current = next.front();
  }
  if (current.is_value()) return *current.to_value();
  return Diverged{};
}

std::string to_string(const EvalResult& r) {
  if (auto* v = std::get_if<Value>(&r)) return to_string(*v);
  if (std::holds_alternative<Diverged>(r)) return "diverged (out of fuel)";
  if (auto* s = std::get_if<Stuck>(&r)) return "stuck: " + s->reason;
  const auto& n = std::get<Nondeterministic>(r);
  std::string out = fmt::format("nondeterministic at {}:", to_string(n.at));
  for (const Expression& s : n.successors) out += " " + to_string(s);
  return out;
}

bool expr_equiv_bounded(const Expression& a, const Expression& b,
                        std::size_t fuel, const Definitions* defs) {
  EvalResult ra = eval(a, fuel, defs);
  EvalResult rb = eval(b, fuel, defs);
  if (std::holds_alternative<Diverged>(ra)) {
    return std::holds_alternative<Diverged>(rb);
  }
  const Value* va = std::get_if<Value>(&ra);
  const Value* vb = std::get_if<Value>(&rb);
  return va != nullptr && vb != nullptr && *va == *vb;
}

}  // namespace patc
