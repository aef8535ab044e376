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

#include "patc/compiler.h"

#include <gtest/gtest.h>

#include "patc/oracle.h"
#include "test_util.h"

namespace patc {
namespace {

using testing::E;
using testing::P;
using testing::Prog;
using testing::V;

Ndnf nd(const char* src) { return to_ndnf(P(src)); }
Ndnf negative(std::initializer_list<CtorName> banned) {
  return Ndnf::of(NConjunct::negative({}, banned));
}

const char* kWeekend =
    "case x of { y & (Sa | Su) => E1(y), y & !(Fr | Sa | Su) => E2(y), "
    "default => Dflt }";

TEST(EmbedCase, WeekendInputMatrix) {
  EXPECT_EQ(to_string(embed_case(E(kWeekend))),
            "match (x)\n"
            "  ||{ {y} & Sa, {y} & Su } => E1(y)\n"
            "  ||{ {y} & !{Fr, Sa, Su} } => E2(y)\n"
            "  default => Dflt\n");
}

TEST(Specialize, WeekendSaturdayAndDefault) {
  const ClauseMatrix m = embed_case(E(kWeekend));
  const ClauseMatrix sa = specialize(0, CtorName{"Sa", 0}, {}, m);
  EXPECT_EQ(sa.columns(), 0u);
  ASSERT_EQ(sa.rows.size(), 1u);
  EXPECT_EQ(sa.rows[0].rhs, E("E1(x)"));
  EXPECT_EQ(sa.default_rhs, E("Dflt"));

  EXPECT_EQ(head_ctors(m, 0),
            (std::set<CtorName>{{"Fr", 0}, {"Sa", 0}, {"Su", 0}}));
  const ClauseMatrix d = default_matrix(0, head_ctors(m, 0), m);
  ASSERT_EQ(d.rows.size(), 1u);
  EXPECT_EQ(d.rows[0].rhs, E("E2(x)"));

  EXPECT_TRUE(specialize(0, CtorName{"Fr", 0}, {}, m).rows.empty());
}

TEST(Specialize, NegatedConsRowIsDroppedAndNilRowWidened) {
  const Expression e1 = E("E1"), e2 = E("E2"), ed = E("Ed");
  const ClauseMatrix m{
      {E("v1"), E("v2")},
      {MatrixRow{{negative({{"Cons", 2}}), nd("D12")}, e1},
       MatrixRow{{negative({{"Nil", 0}}), nd("D22")}, e2}},
      ed};
  const ClauseMatrix s = specialize(0, CtorName{"Cons", 2}, {"x", "y"}, m);
  EXPECT_EQ(to_string(s),
            "match (x, y, v2)\n"
            "  ||{ {} & !{} } ||{ {} & !{} } ||{ {} & D22 } => E2\n"
            "  default => Ed\n");
}

TEST(DefaultMatrix, RedGreenKeepsOnlyCompatibleRow) {
  const Expression e1 = E("E1"), e2 = E("E2"), ed = E("Ed");
  const ClauseMatrix m{{E("v1"), E("v2")},
                       {MatrixRow{{nd("Red"), nd("D12")}, e1},
                        MatrixRow{{negative({{"Green", 0}}), nd("D22")}, e2}},
                       ed};
  EXPECT_EQ(head_ctors(m, 0),
            (std::set<CtorName>{{"Green", 0}, {"Red", 0}}));
  EXPECT_EQ(to_string(default_matrix(0, head_ctors(m, 0), m)),
            "match (v2)\n"
            "  ||{ {} & D22 } => E2\n"
            "  default => Ed\n");
}

TEST(Compile, WeekendTree) {
  EXPECT_EQ(to_string(compile(embed_case(E(kWeekend)))),
            "switch x {\n"
            "  Fr => Dflt\n"
            "  Sa => E1(x)\n"
            "  Su => E1(x)\n"
            "  default => E2(x)\n"
            "}");
}

TEST(Compile, FreshBindersForConstructorArms) {
  const DecisionTree t = compile(embed_case(
      E("case l of { Cons(h, Nil) => One(h), Nil => Zero, default => Many }")));
  ASSERT_FALSE(t.is_leaf());
  ASSERT_EQ(t.arms().size(), 2u);
  EXPECT_EQ(t.arms()[0].ctor, (CtorName{"Cons", 2}));
  EXPECT_EQ(t.arms()[0].binders, (std::vector<std::string>{"$k0", "$k1"}));
  EXPECT_EQ(t.arms()[1].ctor, (CtorName{"Nil", 0}));
  EXPECT_TRUE(check_tree(t).empty());
}

TEST(Compile, RejectsIllFormedInput) {
  const ClauseMatrix m =
      embed_case(E("case c of { Red => A, x => B, default => C }"));
  try {
    (void)compile(m);
    FAIL() << "expected CompileError";
  } catch (const CompileError& e) {
    EXPECT_FALSE(e.report().ok);
  }
}

TEST(Compile, TreeAgreesWithMatrixOnEveryValue) {
  const DataDecls d = reference_decls();
  const Expression c = E(
      "case s of { Cons(True, r) => A(r), Cons(x, Cons(y, _)) & !Cons(True, _) "
      "=> B(x, y), Nil => C, default => Z }");
  const auto r = differential_compile_check(c, d, Type::named("List"), 4);
  ASSERT_TRUE(std::holds_alternative<Agree>(r));
  EXPECT_GT(std::get<Agree>(r).values_checked, 10u);
}

TEST(Compile, EvalTreeBindsScrutinee) {
  const DecisionTree t = compile(embed_case(E(kWeekend)));
  const EvalResult r = eval_tree(t, testing::S({{"x", V("Sa")}}));
  ASSERT_TRUE(std::holds_alternative<Value>(r));
  EXPECT_EQ(std::get<Value>(r), V("E1", {V("Sa")}));
}

TEST(Compile, JsonShape) {
  const auto j = to_json(compile(embed_case(E(kWeekend))));
  EXPECT_EQ(j["switch"], "x");
  ASSERT_EQ(j["arms"].size(), 3u);
  EXPECT_EQ(j["arms"][0]["ctor"], "Fr");
  EXPECT_EQ(j["arms"][0]["tree"]["leaf"], "Dflt");
  EXPECT_EQ(j["default"]["leaf"], "E2(x)");
}

TEST(StepMatrix, AgreesWithCaseStep) {
  const ClauseMatrix m = embed_case(E(
      "case Fr of { y & (Sa | Su) => E1(y), y & !(Fr | Sa | Su) => E2(y), "
      "default => Dflt }"));
  const StepResult r = step_matrix(m);
  ASSERT_TRUE(std::holds_alternative<Stepped>(r));
  EXPECT_EQ(std::get<Stepped>(r).successors, std::vector<Expression>{E("Dflt")});
}

TEST(FreshSupply, Sequential) {
  FreshSupply f;
  EXPECT_EQ(f.next(), "$k0");
  EXPECT_EQ(f.next(), "$k1");
}

}  // namespace
}  // namespace patc
