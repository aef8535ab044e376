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

#include <gtest/gtest.h>

#include "patc/wellformed.h"
#include "test_util.h"

namespace patc {
namespace {

using testing::P;
using testing::S;
using testing::V;

const Value kTwo = V("2");
const Value kThree = V("3");
const Value kNil = V("Nil");
const Value kTrue = V("True");
const Value kFalse = V("False");

TEST(MatchingExamples, ConsBindsHeadAndTail) {
  const Value list = V("Cons", {kTwo, V("Cons", {kThree, kNil})});
  EXPECT_EQ(match_pos(P("Cons(x, xs)"), list),
            (SubstSet{S({{"x", kTwo}, {"xs", V("Cons", {kThree, kNil})}})}));
  EXPECT_TRUE(match_neg(P("Cons(x, xs)"), list).empty());
}

TEST(MatchingExamples, OrMatchesLeftAlternative) {
  EXPECT_EQ(match_pos(P("True | False"), kTrue), (SubstSet{S({})}));
}

TEST(MatchingExamples, ConstructorMismatchIsNegativeMatch) {
  EXPECT_EQ(match_neg(P("True"), kFalse), (SubstSet{S({})}));
  EXPECT_TRUE(match_pos(P("True"), kFalse).empty());
}

TEST(MatchingExamples, NegatedVariableBindsOnNegativeSide) {
  EXPECT_EQ(match_neg(P("!x"), kTrue), (SubstSet{S({{"x", kTrue}})}));
  EXPECT_TRUE(match_pos(P("!x"), kTrue).empty());
}

TEST(MatchingExamples, DoubleNegationBinds) {
  EXPECT_EQ(match_pos(P("!!x"), kTrue), (SubstSet{S({{"x", kTrue}})}));
}

TEST(MatchingExamples, RepeatedVariableGivesImproperSubstitution) {
  const Pattern p = P("Cons(x, x)");
  const SubstSet s = match_pos(p, V("Cons", {kTwo, kNil}));
  ASSERT_EQ(s.size(), 1u);
  const Substitution sigma = s.members().front();
  EXPECT_TRUE(subst_equiv(sigma, S({{"x", kTwo}, {"x", kNil}})));
  EXPECT_FALSE(is_proper(sigma));
  EXPECT_FALSE(linear_pos(p));
}

TEST(MatchingExamples, OrWithUnevenBindingsGivesDifferentDomains) {
  const Pattern p = P("(x & True) | False");
  EXPECT_EQ(match_pos(p, kTrue), (SubstSet{S({{"x", kTrue}})}));
  EXPECT_EQ(match_pos(p, kFalse), (SubstSet{S({})}));
  EXPECT_FALSE(linear_pos(p));
}

TEST(Printing, BinaryOperandsAreParenthesized) {
  EXPECT_EQ(to_string(P("x & (Sa | Su)")), "x & (Sa | Su)");
  EXPECT_EQ(to_string(P("!(Sa | Su)")), "!(Sa | Su)");
  EXPECT_EQ(to_string(P("Cons(_, #)")), "Cons(_, #)");
  EXPECT_EQ(to_string(V("Cons", {kTrue, kNil})), "Cons(True, Nil)");
}

TEST(Printing, ConstructorNameShowsArity) {
  EXPECT_EQ(to_string(CtorName{"Cons", 2}), "Cons/2");
}

TEST(FreeVariables, SplitByNegationParity) {
  const Pattern p = P("!(x & !y) | z");
  EXPECT_EQ(fv_even(p), (VarSet{"y", "z"}));
  EXPECT_EQ(fv_odd(p), (VarSet{"x"}));
}

TEST(Substitutions, EquivalenceIgnoresOrderAndDuplicates) {
  EXPECT_TRUE(subst_equiv(S({{"x", kTrue}, {"y", kNil}}),
                          S({{"y", kNil}, {"x", kTrue}, {"x", kTrue}})));
  EXPECT_FALSE(subst_equiv(S({{"x", kTrue}}), S({{"x", kFalse}})));
  EXPECT_FALSE(is_proper(S({{"x", kTrue}, {"x", kTrue}})));
  EXPECT_FALSE(is_proper(S({{"x", kTrue}, {"x", kFalse}})));
  EXPECT_EQ(domain(S({{"x", kTrue}, {"y", kNil}})), (VarSet{"x", "y"}));
}

TEST(Substitutions, SetDeduplicatesEquivalentMembers) {
  SubstSet s;
  EXPECT_TRUE(s.insert(S({{"x", kTrue}, {"y", kNil}})));
  EXPECT_FALSE(s.insert(S({{"y", kNil}, {"x", kTrue}})));
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.contains(S({{"x", kTrue}, {"y", kNil}})));
}

TEST(Derivations, OrWithSameVariableYieldsOneSubstitution) {
  const Pattern p = P("x | x");
  EXPECT_FALSE(derivations_pos(p, kTrue).empty());
  EXPECT_EQ(match_pos(p, kTrue).size(), 1u);
}

TEST(Derivations, PairOrBindsEitherComponent) {
  const Pattern p = P("Pair(x, _) | Pair(_, x)");
  const SubstSet s = match_pos(p, V("Pair", {kTwo, V("4")}));
  EXPECT_EQ(s, (SubstSet{S({{"x", kTwo}}), S({{"x", V("4")}})}));
}

TEST(Matching, WildcardAndAbsurd) {
  EXPECT_EQ(match_pos(P("_"), kNil), (SubstSet{S({})}));
  EXPECT_TRUE(match_neg(P("_"), kNil).empty());
  EXPECT_TRUE(match_pos(P("#"), kNil).empty());
  EXPECT_EQ(match_neg(P("#"), kNil), (SubstSet{S({})}));
}

TEST(Matching, AndCombinesBindings) {
  EXPECT_EQ(match_pos(P("x & Cons(y, _)"), V("Cons", {kTrue, kNil})),
            (SubstSet{S({{"x", V("Cons", {kTrue, kNil})}, {"y", kTrue}})}));
  EXPECT_TRUE(matches(P("x & Cons(y, _)"), V("Cons", {kTrue, kNil})));
  EXPECT_FALSE(matches(P("x & Nil"), V("Cons", {kTrue, kNil})));
}

TEST(Matching, NegativeAndTakesEitherSide) {
  EXPECT_EQ(match_neg(P("!x & !y"), kTrue),
            (SubstSet{S({{"x", kTrue}}), S({{"y", kTrue}})}));
  EXPECT_EQ(match_neg(P("True & y"), kFalse), (SubstSet{S({})}));
}

TEST(Equivalence, AbsurdDiffersFromNegatedVariable) {
  const std::vector<Value> u{kTrue, kFalse};
  EXPECT_FALSE(pattern_equiv_bounded(P("#"), P("!x"), u));
  EXPECT_TRUE(pattern_equiv_bounded(P("!!x"), P("x"), u));
  EXPECT_TRUE(pattern_equiv_bounded(P("!_"), P("#"), u));
}

TEST(Values, StructuralEqualityAndOrder) {
  EXPECT_EQ(V("Cons", {kTrue, kNil}), V("Cons", {kTrue, kNil}));
  EXPECT_NE(V("Cons", {kTrue, kNil}), V("Cons", {kFalse, kNil}));
  EXPECT_EQ(V("Cons", {kTrue, kNil}).height(), 2u);
  EXPECT_EQ(kNil.height(), 1u);
}

}  // namespace
}  // namespace patc
