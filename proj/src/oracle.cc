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

#include "patc/oracle.h"

#include <fmt/format.h>

#include <map>
#include <random>

#include "patc/normalize.h"
#include "patc/overlap.h"
#include "patc/wellformed.h"

namespace patc {

DataDecls reference_decls() {
  DataDecls d;
  auto nullary = [](const char* n) { return CtorSig{CtorName{n, 0}, {}}; };
  d.add("Color", {nullary("Red"), nullary("Green"), nullary("Blue")});
  d.add("Day", {nullary("Mo"), nullary("Tu"), nullary("We"), nullary("Th"),
                nullary("Fr"), nullary("Sa"), nullary("Su")});
  d.add("List", {nullary("Nil"),
                 CtorSig{CtorName{"Cons", 2},
                         {Type::boolean(), Type::named("List")}}});
  d.add("T", {nullary("A"), nullary("B"),
              CtorSig{CtorName{"C", 1}, {Type::named("T")}},
              CtorSig{CtorName{"D", 2}, {Type::named("T"), Type::named("T")}}});
  return d;
}

std::vector<Type> reference_types() {
  return {Type::boolean(),
          Type::named("Color"),
          Type::named("Day"),
          Type::named("List"),
          Type::named("T"),
          Type::pair(Type::boolean(), Type::named("Color")),
          Type::sum(Type::boolean(), Type::named("Color"))};
}

namespace {

class Enumerator {
 public:
  explicit Enumerator(const DataDecls& decls) : decls_(decls) {}

  const std::vector<Value>& values(const Type& tau, std::size_t depth) {
    auto key = std::make_pair(to_string(tau), depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Value> out;
    if (depth > 0) {
      for (const CtorSig& sig : decls_.ctors_for(tau)) {
        std::vector<std::vector<Value>> partial{{}};
        for (const Type& arg : sig.args) {
          const std::vector<Value>& options = values(arg, depth - 1);
          std::vector<std::vector<Value>> next;
          for (const auto& prefix : partial) {
            for (const Value& v : options) {
              next.push_back(prefix);
              next.back().push_back(v);
            }
          }
          partial = std::move(next);
        }
        for (auto& args : partial) out.emplace_back(sig.ctor, std::move(args));
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const DataDecls& decls_;
  std::map<std::pair<std::string, std::size_t>, std::vector<Value>> memo_;
};

class PatternGen {
 public:
  PatternGen(const DataDecls& decls, std::uint64_t seed,
             const std::vector<std::string>& pool)
      : decls_(decls), rng_(seed), pool_(pool) {}

  Pattern gen(const Type& tau, std::size_t size) {
    std::vector<CtorSig> ctors = decls_.ctors_for(tau);
    if (size == 0) {
      std::vector<Pattern> leaves{Pattern::wildcard()};
      for (const CtorSig& s : ctors) {
        if (s.args.empty()) leaves.push_back(Pattern::ctor(s.ctor, {}));
      }
      return leaves[pick(leaves.size())];
    }
    const std::size_t roll = pick(100);
    if (roll < 14 && !pool_.empty()) return Pattern::var(pool_[pick(pool_.size())]);
    if (roll < 19) return Pattern::wildcard();
    if (roll < 22) return Pattern::absurd();
    if (roll < 52) {
      const CtorSig& s = ctors[pick(ctors.size())];
      std::vector<std::size_t> parts = split(size - 1, s.args.size());
      std::vector<Pattern> args;
      for (std::size_t i = 0; i < s.args.size(); ++i) {
        args.push_back(gen(s.args[i], parts[i]));
      }
      return Pattern::ctor(s.ctor, std::move(args));
    }
    if (roll < 66) return Pattern::neg(gen(tau, size - 1));
    std::vector<std::size_t> parts = split(size - 1, 2);
    Pattern l = gen(tau, parts[0]);
    Pattern r = gen(tau, parts[1]);
    return roll < 83 ? Pattern::conj(l, r) : Pattern::disj(l, r);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  std::vector<std::size_t> split(std::size_t n, std::size_t k) {
    std::vector<std::size_t> parts(k, 0);
    if (k == 0) return parts;
    for (std::size_t i = 0; i < n; ++i) ++parts[pick(k)];
    return parts;
  }

  const DataDecls& decls_;
  std::mt19937_64 rng_;
  const std::vector<std::string>& pool_;
};

bool same_result(const EvalResult& a, const EvalResult& b) {
  const Value* va = std::get_if<Value>(&a);
  const Value* vb = std::get_if<Value>(&b);
  return va != nullptr && vb != nullptr && *va == *vb;
}

}  // namespace

std::vector<Value> enumerate_values(const DataDecls& decls, const Type& tau,
                                    std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("depth must be positive");
  Enumerator e(decls);
  return e.values(tau, depth);
}

Pattern gen_pattern(const DataDecls& decls, const Type& tau, std::size_t size,
                    std::uint64_t seed, const GenOptions& options) {
  PatternGen gen(decls, seed, options.var_pool);
  for (std::size_t attempt = 0; attempt < options.max_retries; ++attempt) {
    Pattern p = gen.gen(tau, size);
    if (options.require_linear && !linear_pos(p)) continue;
    if (options.require_linear_neg && !linear_neg(p)) continue;
    if (options.require_det && !deterministic(p)) continue;
    return p;
  }
  throw GenerationError(fmt::format(
      "no pattern of type {} and size {} met the constraints after {} tries "
      "(seed {})",
      to_string(tau), size, options.max_retries, seed));
}

Expression gen_case(const DataDecls& decls, const Type& tau,
                    std::uint64_t seed, const CaseOptions& options) {
  std::mt19937_64 rng(seed);
  const std::size_t target =
      std::uniform_int_distribution<std::size_t>(1, options.max_clauses)(rng);
  GenOptions gen_options;
  gen_options.require_linear = true;
  gen_options.require_det = true;
  std::vector<Clause> clauses;
  std::vector<Ndnf> normal;
  for (std::size_t attempt = 0;
       attempt < options.max_retries && clauses.size() < target; ++attempt) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(
        0, options.pattern_size)(rng);
    Pattern p = gen_pattern(decls, tau, size, rng(), gen_options);
    Ndnf n = to_ndnf(p);
    bool clash = false;
    for (const Ndnf& other : normal) clash = clash || decide(n, other);
    if (clash) continue;
    std::vector<Expression> bound;
    for (const std::string& x : fv_even(p)) bound.push_back(Expression::var(x));
    clauses.push_back(Clause{
        p, Expression::ctor(fmt::format("R{}", clauses.size()), bound)});
    normal.push_back(std::move(n));
  }
  return Expression::case_of(Expression::var(options.scrutinee),
                             std::move(clauses), Expression::ctor("Dflt"));
}

DiffResult differential_tree_check(const Expression& case_expr,
                                   const DecisionTree& tree,
                                   const DataDecls& decls, const Type& tau,
                                   std::size_t depth, const Definitions* defs) {
  if (!case_expr.is(Expression::Kind::kCase) ||
      !case_expr.scrutinee().is(Expression::Kind::kVar)) {
    throw std::invalid_argument(
        "differential check needs a case over a variable");
  }
  const std::string& x = case_expr.scrutinee().name();
  Agree agree;
  for (const Value& v : enumerate_values(decls, tau, depth)) {
    Substitution env{Mapping{x, v}};
    EvalResult expected = eval(apply_subst(case_expr, env), kDefaultFuel, defs);
    EvalResult actual = eval_tree(tree, env, kDefaultFuel, defs);
    if (!same_result(expected, actual)) {
      return Disagree{v, to_string(expected), to_string(actual)};
    }
    ++agree.values_checked;
  }
  return agree;
}

DiffResult differential_compile_check(const Expression& case_expr,
                                      const DataDecls& decls, const Type& tau,
                                      std::size_t depth,
                                      const Definitions* defs) {
  return differential_tree_check(case_expr, compile(embed_case(case_expr)),
                                 decls, tau, depth, defs);
}

DecisionTree corrupt_tree(const DecisionTree& t) {
  if (t.is_leaf()) {
    return DecisionTree::leaf(Expression::ctor("Corrupted", {t.expr()}));
  }
  if (t.arms().empty()) {
    return DecisionTree::switch_on(t.expr(), {}, corrupt_tree(t.default_arm()));
  }
  std::vector<Arm> arms = t.arms();
  DecisionTree fallback = arms.front().tree;
  arms.front().tree = t.default_arm();
  return DecisionTree::switch_on(t.expr(), std::move(arms), fallback);
}

// ---------------------------------------------------------------------------
// Universe kernels

std::vector<std::uint8_t> match_vector(const Pattern& p,
                                       std::span<const Value> universe,
                                       Exec exec) {
  const auto n = static_cast<std::int64_t>(universe.size());
  std::vector<std::uint8_t> out(universe.size(), 0);
  if (exec == Exec::kSerial) {
    for (std::int64_t i = 0; i < n; ++i) out[i] = matches(p, universe[i]);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = matches(p, universe[i]);
  return out;
}

bool equiv_over(const Pattern& p, const Pattern& q,
                std::span<const Value> universe, Exec exec) {
  if (exec == Exec::kSerial) return pattern_equiv_bounded(p, q, universe);
  const auto n = static_cast<std::int64_t>(universe.size());
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : ok)
  for (std::int64_t i = 0; i < n; ++i) {
    ok = ok && pattern_equiv_bounded(p, q, universe.subspan(i, 1));
  }
  return ok;
}

std::optional<Value> common_match(const Pattern& p, const Pattern& q,
                                  std::span<const Value> universe, Exec exec) {
  std::vector<std::uint8_t> a = match_vector(p, universe, exec);
  std::vector<std::uint8_t> b = match_vector(q, universe, exec);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (a[i] && b[i]) return universe[i];
  }
  return std::nullopt;
}

}  // namespace patc
