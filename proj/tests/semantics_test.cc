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

#include <gtest/gtest.h>

#include "test_util.h"

namespace patc {
namespace {

using testing::E;
using testing::Prog;
using testing::V;

Value value_of(const EvalResult& r) {
  if (const auto* v = std::get_if<Value>(&r)) return *v;
  throw std::runtime_error("not a value: " + to_string(r));
}

TEST(Eval, FirstMatchingClauseFires) {
  EXPECT_EQ(value_of(eval(E("case Sa of { y & (Sa | Su) => W(y), "
                            "y & !(Fr | Sa | Su) => D(y), default => F }"))),
            V("W", {V("Sa")}));
  EXPECT_EQ(value_of(eval(E("case Fr of { y & (Sa | Su) => W(y), "
                            "y & !(Fr | Sa | Su) => D(y), default => F }"))),
            V("F"));
}

TEST(Eval, NegatedVariableBindsInClause) {
  EXPECT_EQ(value_of(eval(E("case True of { !!x => Got(x), default => No }"))),
            V("Got", {V("True")}));
}

TEST(Eval, DefaultDiffersFromWildcard) {
  const Expression with_default = E("case A of { _ => X, default => Y }");
  const Expression with_absurd = E("case A of { # => X, default => Y }");
  EXPECT_EQ(value_of(eval(with_default)), V("X"));
  EXPECT_EQ(value_of(eval(with_absurd)), V("Y"));
}

TEST(Eval, OverlappingClausesAreNondeterministic) {
  const EvalResult r = eval(E("case Red of { Red => A, x => B, default => C }"));
  ASSERT_TRUE(std::holds_alternative<Nondeterministic>(r));
  EXPECT_EQ(std::get<Nondeterministic>(r).successors.size(), 2u);
}

TEST(Eval, ImproperSubstitutionIsStuck) {
  const EvalResult r =
      eval(E("case Cons(A, Nil) of { Cons(x, x) => x, default => Z }"));
  EXPECT_TRUE(std::holds_alternative<Stuck>(r));
}

TEST(Eval, UnboundVariableIsStuck) {
  EXPECT_TRUE(std::holds_alternative<Stuck>(eval(E("Wrap(x)"))));
}

TEST(Eval, RecursiveDefinitionsAndFuel) {
  const Program p = Prog(
      "def all(l) := case l of { Nil => True, Cons(True, r) => all(r), "
      "Cons(False, _) => False, default => False };"
      "def loop(x) := loop(x);");
  const Definitions defs = p.definitions();
  EXPECT_EQ(value_of(eval(E("all(Cons(True, Cons(True, Nil)))"),
                          kDefaultFuel, &defs)),
            V("True"));
  EXPECT_EQ(value_of(eval(E("all(Cons(True, Cons(False, Nil)))"),
                          kDefaultFuel, &defs)),
            V("False"));
  EXPECT_TRUE(
      std::holds_alternative<Diverged>(eval(E("loop(A)"), 50, &defs)));
}

TEST(Step, ValuesDoNotStep) {
  EXPECT_TRUE(std::holds_alternative<IsValue>(step(E("Cons(A, Nil)"))));
  const StepResult r = step(E("case A of { A => B, default => C }"));
  ASSERT_TRUE(std::holds_alternative<Stepped>(r));
  EXPECT_EQ(std::get<Stepped>(r).successors, std::vector<Expression>{E("B")});
}

TEST(Equivalence, ClauseOrderIrrelevantWhenDisjoint) {
  EXPECT_TRUE(expr_equiv_bounded(
      E("case Blue of { Red => A, !Red => B, default => C }"),
      E("case Blue of { !Red => B, Red => A, default => C }")));
}

TEST(Printing, EvalResults) {
  EXPECT_EQ(to_string(EvalResult{V("A")}), "A");
  EXPECT_NE(to_string(EvalResult{Diverged{}}).find("diverge"),
            std::string::npos);
}

}  // namespace
}  // namespace patc
