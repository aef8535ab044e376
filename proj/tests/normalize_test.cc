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

#include <gtest/gtest.h>

#include "patc/oracle.h"
#include "patc/wellformed.h"
#include "test_util.h"

namespace patc {
namespace {

using testing::P;
using testing::V;

TEST(NnfGolden, WeekendPatterns) {
  EXPECT_EQ(to_string(nnf(P("x & (Sa | Su)"))), "x & (Sa | Su)");
  EXPECT_EQ(to_string(nnf(P("x & !(Fr | Sa | Su)"))),
            "x & (!Fr & (!Sa & !Su))");
  EXPECT_EQ(to_string(nnf(P("x & !(Sa | Su)"))), "x & (!Sa & !Su)");
}

TEST(NnfGolden, NegatedConstructorExpandsIntoArguments) {
  EXPECT_EQ(to_string(nnf(P("!Pair(True, False)"))),
            "!Pair | (Pair(!True, _) | Pair(_, !False))");
}

TEST(NnfGolden, BooleanConstants) {
  EXPECT_EQ(to_string(nnf(P("!_"))), "#");
  EXPECT_EQ(to_string(nnf(P("!#"))), "_");
  EXPECT_EQ(to_string(nnf(P("!!x"))), "x");
  EXPECT_EQ(to_string(nnf(P("!x"))), "!x");
  EXPECT_EQ(to_string(nnf(P("!Nil"))), "!Nil");
}

TEST(DnfGolden, WeekendPatterns) {
  EXPECT_EQ(to_string(dnf(nnf(P("x & (Sa | Su)")))), "||{ x & Sa, x & Su }");
  EXPECT_EQ(to_string(dnf(nnf(P("x & !(Sa | Su)")))),
            "||{ x & (!Sa & !Su) }");
}

TEST(NdnfGolden, WeekendPatterns) {
  EXPECT_EQ(to_string(to_ndnf(P("x & (Sa | Su)"))),
            "||{ {x} & Sa, {x} & Su }");
  EXPECT_EQ(to_string(to_ndnf(P("x & !(Sa | Su)"))), "||{ {x} & !{Sa, Su} }");
  EXPECT_EQ(to_string(to_ndnf(P("y & !(Fr | Sa | Su)"))),
            "||{ {y} & !{Fr, Sa, Su} }");
}

TEST(Ndnf, UnsatisfiableConjuncts) {
  const Ndnf clash = to_ndnf(P("Red & Green"));
  ASSERT_EQ(clash.disjuncts.size(), 1u);
  EXPECT_FALSE(clash.disjuncts[0].satisfiable());
  const Ndnf both = to_ndnf(P("Red & !Red"));
  ASSERT_EQ(both.disjuncts.size(), 1u);
  EXPECT_FALSE(both.disjuncts[0].satisfiable());
}

TEST(Ndnf, UnsatisfiableDisjunctsAreDropped) {
  const Pattern p = P("Cons(x, Cons(y, _)) & !Cons(True, _)");
  const Ndnf d = to_ndnf(p);
  ASSERT_FALSE(d.disjuncts.empty());
  for (const NConjunct& k : d.disjuncts) EXPECT_TRUE(k.satisfiable());
  EXPECT_TRUE(linear_pos(to_pattern(d))) << to_string(d);
}

TEST(Ndnf, NestedConstructorsCollectVariables) {
  EXPECT_EQ(to_string(to_ndnf(P("x & Cons(y & True, z)"))),
            "||{ {x} & Cons({y} & True, {z} & !{}) }");
}

TEST(Ndnf, ConjunctNormalization) {
  const NConjunct k = normalize_conjunct(nnf(P("x & !Red & !Green & y")));
  EXPECT_TRUE(k.is(NConjunct::Kind::kNegative));
  EXPECT_EQ(k.vars, (VarSet{"x", "y"}));
  EXPECT_EQ(k.banned, (std::set<CtorName>{{"Green", 0}, {"Red", 0}}));
  EXPECT_TRUE(NConjunct::wildcard().is_catch_all());
}

TEST(Ndnf, RoundTripPreservesMatching) {
  const DataDecls d = reference_decls();
  const auto u = enumerate_values(d, Type::named("T"), 3);
  for (const char* src :
       {"x & (A | C(y))", "!(D(_, A) | B)", "C(x) & !C(B)", "D(x, !A & y)"}) {
    const Pattern p = P(src);
    const Pattern back = to_pattern(to_ndnf(p));
    for (const Value& v : u) {
      EXPECT_EQ(matches(p, v), matches(back, v)) << src << " at "
                                                 << to_string(v);
    }
  }
}

TEST(Nnf, PositiveAndNegativeTranslations) {
  const Pattern p = P("Cons(x, !Nil)");
  const Value v = V("Cons", {V("True"), V("Nil")});
  EXPECT_EQ(match_pos(to_pattern(nnf_pos(p)), v), match_pos(p, v));
  EXPECT_EQ(match_pos(to_pattern(nnf_neg(p)), v), match_neg(p, v));
}

}  // namespace
}  // namespace patc
