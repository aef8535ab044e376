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

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <stdexcept>

#include "patc/compiler.h"
#include "patc/exhaustiveness.h"
#include "patc/normalize.h"
#include "patc/overlap.h"
#include "patc/properties.h"
#include "patc/semantics.h"
#include "patc/wellformed.h"

namespace patc {
namespace {

using Outcome = CaseOutcome;

std::string show(const SubstSet& s) {
  std::vector<std::string> parts;
  for (const Substitution& m : s.members()) parts.push_back(to_string(m));
  return fmt::format("{{{}}}", fmt::join(parts, ", "));
}

bool linear_both(const Pattern& p) { return linear_pos(p) && linear_neg(p); }

// Bounded semantic equivalence with a readable counterexample.
Outcome equivalent(const Pattern& p, const Pattern& q,
                   std::span<const Value> universe) {
  for (const Value& v : universe) {
    const SubstSet pp = match_pos(p, v);
    const SubstSet qp = match_pos(q, v);
    const SubstSet pn = match_neg(p, v);
    const SubstSet qn = match_neg(q, v);
    if (pp == qp && pn == qn) continue;
    return Outcome::fail(fmt::format(
        "{} vs {} at {}: positive {} vs {}, negative {} vs {}", to_string(p),
        to_string(q), to_string(v), show(pp), show(qp), show(pn), show(qn)));
  }
  return Outcome::pass();
}

Property make(std::string suite, std::string name,
              std::function<Outcome(CaseEnv&)> f) {
  return Property{std::move(suite), std::move(name), std::move(f)};
}

// ---------------------------------------------------------------------------
// Pattern algebra

using Law = std::function<std::pair<Pattern, Pattern>(
    const Pattern&, const Pattern&, const Pattern&)>;

constexpr std::size_t kLinearAttempts = 60;

Property law(std::string name, bool linear_only, Law f) {
  return make("algebra", std::move(name), [f, linear_only](CaseEnv& env) {
    const Type& tau = env.any_type();
    GenOptions options;
    options.require_linear = linear_only;
    options.require_linear_neg = linear_only;
    const std::size_t attempts = linear_only ? kLinearAttempts : 1;
    for (std::size_t i = 0; i < attempts; ++i) {
      Pattern p = env.pattern(tau, 4, options);
      Pattern q = env.pattern(tau, 4, options);
      Pattern r = env.pattern(tau, 4, options);
      auto [lhs, rhs] = f(p, q, r);
      if (linear_only && !(linear_both(lhs) && linear_both(rhs))) continue;
      return equivalent(lhs, rhs, env.universes().of(tau));
    }
    return Outcome::skip("no instance with linear sides");
  });
}

struct CtorChoice {
  Type owner;
  CtorSig sig;
};

std::vector<CtorChoice> ctors_where(
    CaseEnv& env, const std::function<bool(const CtorSig&)>& keep) {
  std::vector<CtorChoice> out;
  for (const Type& t : env.types()) {
    for (const CtorSig& s : env.decls().ctors_for(t)) {
      if (keep(s)) out.push_back(CtorChoice{t, s});
    }
  }
  return out;
}

std::vector<Pattern> gen_args(CaseEnv& env, const CtorSig& sig,
                              const GenOptions& options) {
  std::vector<Pattern> args;
  for (const Type& t : sig.args) args.push_back(env.pattern(t, 3, options));
  return args;
}

std::vector<Pattern> wildcards(std::size_t n) {
  return std::vector<Pattern>(n, Pattern::wildcard());
}

// Constructor law over a constructor with at least `min_arity` arguments.
// `second` supplies a distinct constructor of the same type when requested.
using CtorLaw = std::function<std::pair<Pattern, Pattern>(
    CaseEnv&, const CtorSig&, const CtorSig*, const GenOptions&)>;

Property ctor_law(std::string name, bool linear_only, std::size_t min_arity,
                  bool needs_sibling, CtorLaw f) {
  return make("algebra", std::move(name), [=](CaseEnv& env) {
    std::vector<CtorChoice> choices = ctors_where(env, [&](const CtorSig& s) {
      return s.ctor.arity >= min_arity;
    });
    if (needs_sibling) {
      std::erase_if(choices, [&](const CtorChoice& c) {
        return env.decls().ctors_for(c.owner).size() < 2;
      });
    }
    const CtorChoice choice = choices[env.pick(choices.size())];
    const CtorSig* sibling = nullptr;
    std::vector<CtorSig> all = env.decls().ctors_for(choice.owner);
    std::erase_if(all, [&](const CtorSig& s) {
      return s.ctor == choice.sig.ctor;
    });
    if (needs_sibling) sibling = &all[env.pick(all.size())];
    GenOptions options;
    options.require_linear = linear_only;
    options.require_linear_neg = linear_only;
    const std::size_t attempts = linear_only ? kLinearAttempts : 1;
    for (std::size_t i = 0; i < attempts; ++i) {
      auto [lhs, rhs] = f(env, choice.sig, sibling, options);
      if (linear_only && !(linear_both(lhs) && linear_both(rhs))) continue;
      return equivalent(lhs, rhs, env.universes().of(choice.owner));
    }
    return Outcome::skip("no instance with linear sides");
  });
}

// A pattern equivalent to p by one of the boolean laws.
Pattern equivalent_rewrite(CaseEnv& env, const Pattern& p) {
  switch (env.pick(4)) {
    case 0:
      return Pattern::neg(Pattern::neg(p));
    case 1:
      return Pattern::conj(p, Pattern::wildcard());
    case 2:
      return Pattern::disj(p, Pattern::absurd());
    default:
      if (p.is(Pattern::Kind::kAnd)) return Pattern::conj(p.rhs(), p.lhs());
      if (p.is(Pattern::Kind::kOr)) return Pattern::disj(p.rhs(), p.lhs());
      return Pattern::neg(Pattern::neg(p));
  }
}

Outcome congruence(CaseEnv& env) {
  const Type& tau = env.any_type();
  const std::vector<Value>& u = env.universes().of(tau);
  Pattern p = env.pattern(tau);
  Pattern p2 = equivalent_rewrite(env, p);
  if (equivalent(p, p2, u).status != CaseStatus::kPass) {
    return Outcome::skip("rewrite not equivalent");
  }
  Pattern q = env.pattern(tau);
  const std::pair<Pattern, Pattern> same_type[] = {
      {Pattern::neg(p), Pattern::neg(p2)},
      {Pattern::conj(p, q), Pattern::conj(p2, q)},
      {Pattern::conj(q, p), Pattern::conj(q, p2)},
      {Pattern::disj(p, q), Pattern::disj(p2, q)},
      {Pattern::disj(q, p), Pattern::disj(q, p2)},
  };
  for (const auto& [a, b] : same_type) {
    Outcome o = equivalent(a, b, u);
    if (o.status == CaseStatus::kFail) return o;
  }
  std::vector<CtorChoice> hosts = ctors_where(env, [&](const CtorSig& s) {
    return std::find(s.args.begin(), s.args.end(), tau) != s.args.end();
  });
  if (hosts.empty()) return Outcome::pass();
  const CtorChoice host = hosts[env.pick(hosts.size())];
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < host.sig.args.size(); ++i) {
    if (host.sig.args[i] == tau) slots.push_back(i);
  }
  const std::size_t slot = slots[env.pick(slots.size())];
  std::vector<Pattern> args = gen_args(env, host.sig, {});
  std::vector<Pattern> args2 = args;
  args[slot] = p;
  args2[slot] = p2;
  return equivalent(Pattern::ctor(host.sig.ctor, args),
                    Pattern::ctor(host.sig.ctor, args2),
                    env.universes().of(host.owner));
}

std::vector<Property> algebra() {
  using P = const Pattern&;
  std::vector<Property> out;
  out.push_back(make("algebra", "soundness", [](CaseEnv& env) {
    const Type& tau = env.any_type();
    Pattern p = env.pattern(tau);
    for (const Value& v : env.universes().of(tau)) {
      if (!match_pos(p, v).empty() && !match_neg(p, v).empty()) {
        return Outcome::fail(fmt::format("{} both matches and does not match {}",
                                         to_string(p), to_string(v)));
      }
    }
    return Outcome::pass();
  }));
  out.push_back(make("algebra", "completeness", [](CaseEnv& env) {
    const Type& tau = env.any_type();
    Pattern p = env.pattern(tau);
    for (const Value& v : env.universes().of(tau)) {
      if (match_pos(p, v).empty() && match_neg(p, v).empty()) {
        return Outcome::fail(fmt::format(
            "{} neither matches nor fails to match {}", to_string(p),
            to_string(v)));
      }
    }
    return Outcome::pass();
  }));
  out.push_back(make("algebra", "congruence", congruence));

  auto pair = [](Pattern a, Pattern b) {
    return std::make_pair(std::move(a), std::move(b));
  };
  using enum Pattern::Kind;
  const auto conj = Pattern::conj;
  const auto disj = Pattern::disj;
  const auto neg = Pattern::neg;
  out.push_back(law("and_commutative", false, [=](P p, P q, P) {
    return pair(conj(p, q), conj(q, p));
  }));
  out.push_back(law("or_commutative", false, [=](P p, P q, P) {
    return pair(disj(p, q), disj(q, p));
  }));
  out.push_back(law("and_associative", false, [=](P p, P q, P r) {
    return pair(conj(p, conj(q, r)), conj(conj(p, q), r));
  }));
  out.push_back(law("or_associative", false, [=](P p, P q, P r) {
    return pair(disj(p, disj(q, r)), disj(disj(p, q), r));
  }));
  out.push_back(law("and_neutral", false, [=](P p, P, P) {
    return pair(conj(p, Pattern::wildcard()), p);
  }));
  out.push_back(law("or_neutral", false, [=](P p, P, P) {
    return pair(disj(p, Pattern::absurd()), p);
  }));
  out.push_back(law("duality", false, [=](P, P, P) {
    return pair(neg(Pattern::wildcard()), Pattern::absurd());
  }));
  out.push_back(law("duality_absurd", false, [=](P, P, P) {
    return pair(neg(Pattern::absurd()), Pattern::wildcard());
  }));
  out.push_back(law("de_morgan_or", false, [=](P p, P q, P) {
    return pair(neg(disj(p, q)), conj(neg(p), neg(q)));
  }));
  out.push_back(law("de_morgan_and", false, [=](P p, P q, P) {
    return pair(neg(conj(p, q)), disj(neg(p), neg(q)));
  }));
  out.push_back(law("double_negation", false, [=](P p, P, P) {
    return pair(neg(neg(p)), p);
  }));

  out.push_back(ctor_law(
      "ctor_and_merge", false, 0, false,
      [](CaseEnv& env, const CtorSig& c, const CtorSig*, const GenOptions& o) {
        std::vector<Pattern> a = gen_args(env, c, o);
        std::vector<Pattern> b = gen_args(env, c, o);
        std::vector<Pattern> merged;
        for (std::size_t i = 0; i < a.size(); ++i) {
          merged.push_back(Pattern::conj(a[i], b[i]));
        }
        return std::make_pair(
            Pattern::conj(Pattern::ctor(c.ctor, a), Pattern::ctor(c.ctor, b)),
            Pattern::ctor(c.ctor, merged));
      }));
  out.push_back(ctor_law(
      "ctor_or_distribution", false, 1, false,
      [](CaseEnv& env, const CtorSig& c, const CtorSig*, const GenOptions& o) {
        std::vector<Pattern> a = gen_args(env, c, o);
        const std::size_t i = env.pick(a.size());
        Pattern alt = env.pattern(c.args[i], 3, o);
        std::vector<Pattern> joined = a;
        std::vector<Pattern> second = a;
        joined[i] = Pattern::disj(a[i], alt);
        second[i] = alt;
        return std::make_pair(Pattern::ctor(c.ctor, joined),
                              Pattern::disj(Pattern::ctor(c.ctor, a),
                                            Pattern::ctor(c.ctor, second)));
      }));

  out.push_back(law("and_distributes", true, [=](P p, P q, P r) {
    return pair(conj(p, disj(q, r)), disj(conj(p, q), conj(p, r)));
  }));
  out.push_back(law("or_distributes", true, [=](P p, P q, P r) {
    return pair(disj(p, conj(q, r)), conj(disj(p, q), disj(p, r)));
  }));
  out.push_back(law("and_idempotent", true, [=](P p, P, P) {
    return pair(conj(p, p), p);
  }));
  out.push_back(law("or_idempotent", true, [=](P p, P, P) {
    return pair(disj(p, p), p);
  }));
  out.push_back(law("and_zero", true, [=](P p, P, P) {
    return pair(conj(p, Pattern::absurd()), Pattern::absurd());
  }));
  out.push_back(law("or_zero", true, [=](P p, P, P) {
    return pair(disj(p, Pattern::wildcard()), Pattern::wildcard());
  }));

  out.push_back(ctor_law(
      "ctor_absurd_argument", true, 1, false,
      [](CaseEnv& env, const CtorSig& c, const CtorSig*, const GenOptions& o) {
        std::vector<Pattern> a = gen_args(env, c, o);
        a[env.pick(a.size())] = Pattern::absurd();
        return std::make_pair(Pattern::ctor(c.ctor, a), Pattern::absurd());
      }));
  out.push_back(ctor_law(
      "ctor_clash", true, 0, true,
      [](CaseEnv& env, const CtorSig& c, const CtorSig* d,
         const GenOptions& o) {
        return std::make_pair(
            Pattern::conj(Pattern::ctor(c.ctor, gen_args(env, c, o)),
                          Pattern::ctor(d->ctor, gen_args(env, *d, o))),
            Pattern::absurd());
      }));
  out.push_back(ctor_law(
      "ctor_and_negated_other", true, 0, true,
      [](CaseEnv& env, const CtorSig& c, const CtorSig* d,
         const GenOptions& o) {
        Pattern lhs = Pattern::ctor(c.ctor, gen_args(env, c, o));
        return std::make_pair(
            Pattern::conj(lhs, Pattern::neg(Pattern::ctor(
                                   d->ctor, gen_args(env, *d, o)))),
            lhs);
      }));
  out.push_back(ctor_law(
      "negated_ctor_expansion", true, 1, false,
      [](CaseEnv& env, const CtorSig& c, const CtorSig*, const GenOptions& o) {
        std::vector<Pattern> a = gen_args(env, c, o);
        const std::size_t n = a.size();
        std::vector<Pattern> disjuncts{
            Pattern::neg(Pattern::ctor(c.ctor, wildcards(n)))};
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<Pattern> args = wildcards(n);
          args[i] = Pattern::neg(a[i]);
          disjuncts.push_back(Pattern::ctor(c.ctor, args));
        }
        Pattern rhs = disjuncts.back();
        for (std::size_t i = n; i-- > 0;) rhs = Pattern::disj(disjuncts[i], rhs);
        return std::make_pair(Pattern::neg(Pattern::ctor(c.ctor, a)), rhs);
      }));
  return out;
}

// ---------------------------------------------------------------------------
// Linearity and determinism

enum class Side { kPos, kNeg };

Property covering(Side side) {
  const bool pos = side == Side::kPos;
  return make("linearity", pos ? "covering_pos" : "covering_neg",
              [pos](CaseEnv& env) {
                const Type& tau = env.any_type();
                GenOptions o;
                o.require_linear = pos;
                o.require_linear_neg = !pos;
                Pattern p = env.pattern(tau, 5, o);
                const VarSet expected = pos ? fv_even(p) : fv_odd(p);
                for (const Value& v : env.universes().of(tau)) {
                  const SubstSet s = pos ? match_pos(p, v) : match_neg(p, v);
                  for (const Substitution& sigma : s.members()) {
                    if (domain(sigma) != expected) {
                      return Outcome::fail(fmt::format(
                          "{} at {} gives {} with domain [{}], expected [{}]",
                          to_string(p), to_string(v), to_string(sigma),
                          fmt::join(domain(sigma), ", "),
                          fmt::join(expected, ", ")));
                    }
                  }
                }
                return Outcome::pass();
              });
}

Property properness(Side side) {
  const bool pos = side == Side::kPos;
  return make("linearity", pos ? "proper_pos" : "proper_neg",
              [pos](CaseEnv& env) {
                const Type& tau = env.any_type();
                GenOptions o;
                o.require_linear = pos;
                o.require_linear_neg = !pos;
                Pattern p = env.pattern(tau, 5, o);
                for (const Value& v : env.universes().of(tau)) {
                  const std::vector<Substitution> all =
                      pos ? derivations_pos(p, v) : derivations_neg(p, v);
                  for (const Substitution& sigma : all) {
                    if (!is_proper(sigma)) {
                      return Outcome::fail(fmt::format(
                          "{} at {} derives improper {}", to_string(p),
                          to_string(v), to_string(sigma)));
                    }
                  }
                }
                return Outcome::pass();
              });
}

Property determinism(Side side) {
  const bool pos = side == Side::kPos;
  return make("linearity", pos ? "deterministic_pos" : "deterministic_neg",
              [pos](CaseEnv& env) {
                const Type& tau = env.any_type();
                GenOptions o;
                o.require_linear = pos;
                o.require_linear_neg = !pos;
                o.require_det = true;
                Pattern p = env.pattern(tau, 5, o);
                for (const Value& v : env.universes().of(tau)) {
                  const std::vector<Substitution> all =
                      pos ? derivations_pos(p, v) : derivations_neg(p, v);
                  for (const Substitution& sigma : all) {
                    if (!subst_equiv(sigma, all.front())) {
                      return Outcome::fail(fmt::format(
                          "{} at {} derives {} and {}", to_string(p),
                          to_string(v), to_string(all.front()),
                          to_string(sigma)));
                    }
                  }
                }
                return Outcome::pass();
              });
}

Outcome de_morgan_linearity(CaseEnv& env) {
  const Type& tau = env.any_type();
  Pattern p = env.pattern(tau);
  Pattern q = env.pattern(tau);
  using Pred = bool (*)(const Pattern&);
  const std::pair<Pattern, Pattern> pairs[] = {
      {Pattern::neg(Pattern::disj(p, q)),
       Pattern::conj(Pattern::neg(p), Pattern::neg(q))},
      {Pattern::neg(Pattern::conj(p, q)),
       Pattern::disj(Pattern::neg(p), Pattern::neg(q))},
      {Pattern::neg(Pattern::neg(p)), p},
  };
  for (const auto& [from, to] : pairs) {
    for (Pred pred : {Pred{linear_pos}, Pred{linear_neg}}) {
      if (pred(from) && !pred(to)) {
        return Outcome::fail(fmt::format("{} is linear but {} is not",
                                         to_string(from), to_string(to)));
      }
    }
  }
  return Outcome::pass();
}

std::vector<Property> linearity() {
  return {covering(Side::kPos),    covering(Side::kNeg),
          properness(Side::kPos),  properness(Side::kNeg),
          determinism(Side::kPos), determinism(Side::kNeg),
          make("linearity", "de_morgan_preserves_linearity",
               de_morgan_linearity)};
}

// ---------------------------------------------------------------------------
// Normalization

std::vector<Property> normalization() {
  std::vector<Property> out;
  out.push_back(make("normalize", "nnf_preserves_linearity", [](CaseEnv& env) {
    const Type& tau = env.any_type();
    GenOptions o;
    o.require_linear = true;
    Pattern p = env.pattern(tau, 5, o);
    Pattern n = to_pattern(nnf(p));
    if (!linear_pos(n)) {
      return Outcome::fail(fmt::format("nnf of {} is {}, which is not linear",
                                       to_string(p), to_string(n)));
    }
    return Outcome::pass();
  }));
  out.push_back(make("normalize", "nnf_preserves_semantics", [](CaseEnv& env) {
    const Type& tau = env.any_type();
    GenOptions o;
    o.require_linear = true;
    o.require_linear_neg = true;
    Pattern p = env.pattern(tau, 5, o);
    return equivalent(p, to_pattern(nnf(p)), env.universes().of(tau));
  }));
  out.push_back(make("normalize", "nnf_preserves_typing", [](CaseEnv& env) {
    const Type& tau = env.any_type();
    GenOptions o;
    o.require_linear = true;
    Pattern p = env.pattern(tau, 5, o);
    Pattern n = to_pattern(nnf(p));
    PatternTyping before = type_pattern(p, tau, env.decls());
    const Typed* t = std::get_if<Typed>(&before);
    if (t == nullptr) return Outcome::skip("pattern is ill-typed");
    PatternTyping after = type_pattern(n, tau, env.decls());
    const Typed* u = std::get_if<Typed>(&after);
    if (u == nullptr) {
      return Outcome::fail(fmt::format("nnf {} of {} is ill-typed: {}",
                                       to_string(n), to_string(p),
                                       std::get<Ill>(after).message));
    }
    if (!same_bindings(t->gamma, u->gamma) ||
        !same_bindings(t->delta, u->delta)) {
      return Outcome::fail(fmt::format(
          "{} types as {} / {}, nnf {} as {} / {}", to_string(p),
          to_string(t->gamma), to_string(t->delta), to_string(n),
          to_string(u->gamma), to_string(u->delta)));
    }
    return Outcome::pass();
  }));
  out.push_back(make("normalize", "ndnf_preserves_matching", [](CaseEnv& env) {
    const Type& tau = env.any_type();
    GenOptions o;
    o.require_linear = true;
    o.require_det = true;
    Pattern p = env.pattern(tau, 5, o);
    Pattern n = to_pattern(to_ndnf(p));
    for (const Value& v : env.universes().of(tau)) {
      const SubstSet a = match_pos(p, v);
      const SubstSet b = match_pos(n, v);
      if (!(a == b)) {
        return Outcome::fail(fmt::format("{} gives {} at {}, its nDNF {} gives {}",
                                         to_string(p), show(a), to_string(v),
                                         to_string(n), show(b)));
      }
    }
    return Outcome::pass();
  }));
  return out;
}

// ---------------------------------------------------------------------------
// Semantics

const std::string kScrutinee = "s";

Expression at(const Expression& e, const Value& v) {
  return apply_subst(e, Substitution{Mapping{kScrutinee, v}});
}

Expression random_case(CaseEnv& env, const Type& tau) {
  return gen_case(env.decls(), tau, env.rng()());
}

std::string show(const StepResult& r) {
  if (const auto* s = std::get_if<Stepped>(&r)) {
    std::vector<std::string> parts;
    for (const Expression& e : s->successors) parts.push_back(to_string(e));
    return fmt::format("steps to {{{}}}", fmt::join(parts, ", "));
  }
  if (const auto* s = std::get_if<Stuck>(&r)) return "stuck: " + s->reason;
  return "is a value";
}

Outcome same_evaluation(const Expression& a, const Expression& b,
                        std::span<const Value> universe) {
  for (const Value& v : universe) {
    const std::string ra = to_string(eval(at(a, v)));
    const std::string rb = to_string(eval(at(b, v)));
    if (ra != rb) {
      return Outcome::fail(fmt::format("at s = {}: {} gives {}, {} gives {}",
                                       to_string(v), to_string(a), ra,
                                       to_string(b), rb));
    }
  }
  return Outcome::pass();
}

Expression with_clauses(const Expression& e, std::vector<Clause> clauses) {
  return Expression::case_of(e.scrutinee(), std::move(clauses),
                             e.default_rhs());
}

std::vector<Property> semantics() {
  std::vector<Property> out;
  out.push_back(make("semantics", "wellformed_evaluation_deterministic",
                     [](CaseEnv& env) {
    const Type& tau = env.any_type();
    Expression e = random_case(env, tau);
    WfReport wf = wf_expr(e);
    if (!wf.ok) {
      return Outcome::fail(fmt::format("generated {} is not wellformed: {}",
                                       to_string(e),
                                       to_string(wf.violations.front())));
    }
    for (const Value& v : env.universes().of(tau)) {
      StepResult r = step(at(e, v));
      const auto* s = std::get_if<Stepped>(&r);
      if (s == nullptr || s->successors.size() != 1) {
        return Outcome::fail(fmt::format("{} at s = {} {}", to_string(e),
                                         to_string(v), show(r)));
      }
    }
    return Outcome::pass();
  }));
  out.push_back(make("semantics", "clause_permutation_invariance",
                     [](CaseEnv& env) {
    const Type& tau = env.any_type();
    Expression e = random_case(env, tau);
    std::vector<Clause> clauses(e.clauses().begin(), e.clauses().end());
    if (clauses.size() < 2) return Outcome::skip("fewer than two clauses");
    std::shuffle(clauses.begin(), clauses.end(), env.rng());
    return same_evaluation(e, with_clauses(e, clauses),
                           env.universes().of(tau));
  }));
  out.push_back(make("semantics", "equivalent_pattern_substitution",
                     [](CaseEnv& env) {
    const Type& tau = env.any_type();
    Expression e = random_case(env, tau);
    std::vector<Clause> clauses(e.clauses().begin(), e.clauses().end());
    if (clauses.empty()) return Outcome::skip("no clauses");
    const std::size_t i = env.pick(clauses.size());
    Pattern replacement = equivalent_rewrite(env, clauses[i].pattern);
    if (equivalent(clauses[i].pattern, replacement, env.universes().of(tau))
            .status != CaseStatus::kPass) {
      return Outcome::skip("rewrite not equivalent");
    }
    clauses[i].pattern = replacement;
    return same_evaluation(e, with_clauses(e, clauses),
                           env.universes().of(tau));
  }));
  out.push_back(make("semantics", "default_differs_from_wildcard",
                     [](CaseEnv& env) {
    const Type& tau = env.any_type();
    Expression e = random_case(env, tau);
    std::vector<Clause> clauses(e.clauses().begin(), e.clauses().end());
    clauses.push_back(Clause{Pattern::wildcard(), e.default_rhs()});
    Expression w = with_clauses(e, clauses);
    bool any_matched = false;
    for (const Value& v : env.universes().of(tau)) {
      bool matched = false;
      for (const Clause& c : e.clauses()) matched = matched || matches(c.pattern, v);
      any_matched = any_matched || matched;
      StepResult ro = step(at(e, v));
      StepResult rw = step(at(w, v));
      const auto* so = std::get_if<Stepped>(&ro);
      const auto* sw = std::get_if<Stepped>(&rw);
      if (so == nullptr || sw == nullptr || so->successors.size() != 1) {
        return Outcome::fail(fmt::format("at s = {}: default form {}, wildcard form {}",
                                         to_string(v), show(ro), show(rw)));
      }
      const bool default_taken = so->successors.front() == e.default_rhs();
      const std::size_t expected = matched ? 2 : 1;
      if (default_taken == matched || sw->successors.size() != expected) {
        return Outcome::fail(fmt::format(
            "at s = {} (clause match: {}): default form {}, wildcard form {}",
            to_string(v), matched, show(ro), show(rw)));
      }
    }
    if (!any_matched) return Outcome::skip("no clause matches any value");
    if (wf_expr(w).ok) {
      return Outcome::fail("wildcard form accepted as wellformed: " +
                           to_string(w));
    }
    return Outcome::pass();
  }));
  return out;
}

// ---------------------------------------------------------------------------
// Compilation

ClauseMatrix instantiate(const ClauseMatrix& m, const Substitution& env) {
  ClauseMatrix out{{}, {}, apply_subst(m.default_rhs, env)};
  for (const Expression& s : m.scrutinees) {
    out.scrutinees.push_back(apply_subst(s, env));
  }
  for (const MatrixRow& row : m.rows) {
    out.rows.push_back(MatrixRow{row.cells, apply_subst(row.rhs, env)});
  }
  return out;
}

std::string show(const StepResult& r, const ClauseMatrix& m) {
  return show(r) + " for\n" + to_string(m);
}

Outcome subproblem_lemma(CaseEnv& env) {
  const Type& tau = env.any_type();
  ClauseMatrix m = embed_case(random_case(env, tau));
  const std::set<CtorName> heads = head_ctors(m, 0);
  ClauseMatrix dflt = default_matrix(0, heads, m);
  for (const Value& v : env.universes().of(tau)) {
    Substitution sigma{Mapping{kScrutinee, v}};
    const StepResult expected = step_matrix(instantiate(m, sigma));
    ClauseMatrix sub = dflt;
    if (heads.contains(v.ctor())) {
      std::vector<std::string> binders;
      for (std::size_t i = 0; i < v.ctor().arity; ++i) {
        binders.push_back(fmt::format("$b{}", i));
        sigma.push_back(Mapping{binders.back(), v.args()[i]});
      }
      sub = specialize(0, v.ctor(), binders, m);
    }
    const StepResult actual = step_matrix(instantiate(sub, sigma));
    if (show(expected) != show(actual)) {
      return Outcome::fail(fmt::format("at s = {}: matrix {} but subproblem {}",
                                       to_string(v), show(expected, m),
                                       show(actual, sub)));
    }
  }
  return Outcome::pass();
}

Outcome subproblem_wellformed(CaseEnv& env) {
  const Type& tau = env.any_type();
  ClauseMatrix m = embed_case(random_case(env, tau));
  if (!wf_matrix(m).ok) return Outcome::skip("input not wellformed");
  const std::set<CtorName> heads = head_ctors(m, 0);
  std::vector<ClauseMatrix> subs{default_matrix(0, heads, m)};
  FreshSupply fresh;
  for (const CtorName& c : heads) {
    std::vector<std::string> binders;
    for (std::size_t i = 0; i < c.arity; ++i) binders.push_back(fresh.next());
    subs.push_back(specialize(0, c, binders, m));
  }
  for (const ClauseMatrix& s : subs) {
    WfReport r = wf_matrix(s);
    if (!r.ok) {
      return Outcome::fail(fmt::format("subproblem of\n{}is not wellformed:\n{}{}",
                                       to_string(m), to_string(s),
                                       to_string(r.violations.front())));
    }
  }
  return Outcome::pass();
}

Outcome multi_column(CaseEnv& env) {
  const Type& t0 = env.any_type();
  const Type& t1 = env.any_type();
  if (env.universes().of(t0).size() * env.universes().of(t1).size() > 600) {
    return Outcome::skip("product universe too large");
  }
  const std::vector<std::string> pools[] = {{"x", "y"}, {"z", "w"}};
  const Type* types[] = {&t0, &t1};
  ClauseMatrix m{{Expression::var("s0"), Expression::var("s1")},
                 {},
                 Expression::ctor("Dflt")};
  const std::size_t target = 1 + env.pick(4);
  for (std::size_t attempt = 0; attempt < 100 && m.rows.size() < target;
       ++attempt) {
    std::vector<Ndnf> cells;
    VarSet bound;
    for (std::size_t c = 0; c < 2; ++c) {
      GenOptions o;
      o.require_linear = true;
      o.require_det = true;
      o.var_pool = pools[c];
      Pattern p = env.pattern(*types[c], 4, o);
      VarSet fv = fv_even(p);
      bound.insert(fv.begin(), fv.end());
      cells.push_back(to_ndnf(p));
    }
    bool clash = false;
    for (const MatrixRow& row : m.rows) {
      clash = clash || (decide(row.cells[0], cells[0]) &&
                        decide(row.cells[1], cells[1]));
    }
    if (clash) continue;
    std::vector<Expression> args;
    for (const std::string& x : bound) args.push_back(Expression::var(x));
    m.rows.push_back(MatrixRow{
        std::move(cells),
        Expression::ctor(fmt::format("R{}", m.rows.size()), args)});
  }
  WfReport wf = wf_matrix(m);
  if (!wf.ok) return Outcome::skip("matrix not wellformed");
  const DecisionTree tree = compile(m);
  for (const Value& v0 : env.universes().of(t0)) {
    for (const Value& v1 : env.universes().of(t1)) {
      Substitution sigma{Mapping{"s0", v0}, Mapping{"s1", v1}};
      StepResult r = step_matrix(instantiate(m, sigma));
      const auto* s = std::get_if<Stepped>(&r);
      if (s == nullptr || s->successors.size() != 1) {
        return Outcome::fail(fmt::format("at ({}, {}): {}", to_string(v0),
                                         to_string(v1), show(r, m)));
      }
      const std::string expected = to_string(eval(s->successors.front()));
      const std::string actual = to_string(eval_tree(tree, sigma));
      if (expected != actual) {
        return Outcome::fail(fmt::format(
            "at ({}, {}): matrix gives {}, tree gives {}\n{}{}", to_string(v0),
            to_string(v1), expected, actual, to_string(m), to_string(tree)));
      }
    }
  }
  return Outcome::pass();
}

std::vector<Property> compilation() {
  std::vector<Property> out;
  out.push_back(make("compile", "differential_compile", [](CaseEnv& env) {
    const Type& tau = env.any_type();
    Expression e = random_case(env, tau);
    DiffResult r = differential_compile_check(e, env.decls(), tau,
                                              env.universes().depth());
    if (const auto* d = std::get_if<Disagree>(&r)) {
      return Outcome::fail(fmt::format("{} at s = {}: expected {}, tree gives {}",
                                       to_string(e), to_string(d->witness),
                                       d->expected, d->actual));
    }
    return Outcome::pass();
  }));
  out.push_back(make("compile", "tree_well_formed", [](CaseEnv& env) {
    const Type& tau = env.any_type();
    Expression e = random_case(env, tau);
    const std::string problem = check_tree(compile(embed_case(e)));
    if (!problem.empty()) {
      return Outcome::fail(to_string(e) + ": " + problem);
    }
    return Outcome::pass();
  }));
  out.push_back(make("compile", "specialize_default_lemma", subproblem_lemma));
  out.push_back(make("compile", "subproblems_wellformed", subproblem_wellformed));
  out.push_back(make("compile", "multi_column_differential", multi_column));
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustiveness

bool consistent(const Witness& w, const Value& v) {
  if (!w.ctor) return true;
  if (v.ctor() != *w.ctor) return false;
  for (std::size_t i = 0; i < w.args.size(); ++i) {
    if (!consistent(w.args[i], v.args()[i])) return false;
  }
  return true;
}

std::vector<Property> exhaustiveness() {
  std::vector<Property> out;
  out.push_back(make("exhaustive", "exhaustive_matches_oracle", [](CaseEnv& env) {
    const Type& tau = env.any_type();
    Expression e = random_case(env, tau);
    PatternMatrix pm = pattern_matrix(embed_case(e));
    const bool claimed = exhaustive(pm, env.decls());
    std::optional<Value> uncovered;
    for (const Value& v : env.universes().of(tau)) {
      bool hit = false;
      for (const Clause& c : e.clauses()) hit = hit || matches(c.pattern, v);
      if (!hit) {
        uncovered = v;
        break;
      }
    }
    if (claimed && uncovered) {
      return Outcome::fail(fmt::format("{} reported exhaustive but misses {}",
                                       to_string(e), to_string(*uncovered)));
    }
    if (!claimed && !uncovered && env.universes().complete(tau)) {
      return Outcome::fail(fmt::format(
          "{} reported non-exhaustive but covers every value", to_string(e)));
    }
    return Outcome::pass();
  }));
  out.push_back(make("exhaustive", "witness_sound", [](CaseEnv& env) {
    const Type& tau = env.any_type();
    Expression e = random_case(env, tau);
    PatternMatrix pm = pattern_matrix(embed_case(e));
    std::optional<std::vector<Witness>> w = missing_witness(pm, env.decls());
    if (exhaustive(pm, env.decls()) != !w.has_value()) {
      return Outcome::fail("exhaustive and missing_witness disagree on " +
                           to_string(e));
    }
    if (!w) return Outcome::skip("exhaustive");
    if (!verify_witness(pm, {Ndnf::wildcard()}, *w)) {
      return Outcome::fail(fmt::format("witness {} for {} is matched",
                                       to_string(*w), to_string(e)));
    }
    bool seen = false;
    for (const Value& v : env.universes().of(tau)) {
      if (!consistent(w->front(), v)) continue;
      seen = true;
      bool hit = false;
      for (const Clause& c : e.clauses()) hit = hit || matches(c.pattern, v);
      if (!hit) return Outcome::pass();
    }
    if (!seen) return Outcome::skip("witness deeper than the universe");
    return Outcome::fail(fmt::format(
        "every value fitting witness {} is matched by {}", to_string(*w),
        to_string(e)));
  }));
  return out;
}

// ---------------------------------------------------------------------------
// Overlap

Outcome overlap_case(CaseEnv& env, bool typed) {
  const Type& tau = env.any_type();
  Pattern p = env.pattern(tau);
  Pattern q = env.pattern(tau);
  const std::vector<Value>& u = env.universes().of(tau);
  const bool separate = disjoint(p, q, typed ? &env.decls() : nullptr);
  std::optional<Value> common = common_match(p, q, u, Exec::kSerial);
  if (separate && common) {
    return Outcome::fail(fmt::format("{} and {} reported disjoint, both match {}",
                                     to_string(p), to_string(q),
                                     to_string(*common)));
  }
  if (typed && !separate && !common && env.universes().complete(tau)) {
    return Outcome::fail(fmt::format(
        "{} and {} reported overlapping at type {}, no common value",
        to_string(p), to_string(q), to_string(tau)));
  }
  return Outcome::pass();
}

std::vector<Property> overlap() {
  std::vector<Property> out;
  out.push_back(make("overlap", "overlap_sound",
                     [](CaseEnv& env) { return overlap_case(env, false); }));
  out.push_back(make("overlap", "overlap_type_aware",
                     [](CaseEnv& env) { return overlap_case(env, true); }));
  out.push_back(make("overlap", "overlap_symmetric", [](CaseEnv& env) {
    const Type& tau = env.any_type();
    Ndnf a = to_ndnf(env.pattern(tau));
    Ndnf b = to_ndnf(env.pattern(tau));
    if (decide(a, b) != decide(b, a)) {
      return Outcome::fail(fmt::format("decide not symmetric on {} and {}",
                                       to_string(a), to_string(b)));
    }
    return Outcome::pass();
  }));
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"algebra",    "linearity", "normalize", "semantics",
          "compile",    "exhaustive", "overlap"};
}

std::vector<Property> properties(std::string_view suite) {
  if (suite == "algebra") return algebra();
  if (suite == "linearity") return linearity();
  if (suite == "normalize") return normalization();
  if (suite == "semantics") return semantics();
  if (suite == "compile") return compilation();
  if (suite == "exhaustive") return exhaustiveness();
  if (suite == "overlap") return overlap();
  if (suite == "all") {
    std::vector<Property> out;
    for (const std::string& name : suite_names()) {
      std::vector<Property> part = properties(name);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument(fmt::format("unknown suite '{}'", suite));
}

}  // namespace patc
