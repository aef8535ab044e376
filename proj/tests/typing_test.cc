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

#include <gtest/gtest.h>

#include "patc/oracle.h"
#include "test_util.h"

namespace patc {
namespace {

using testing::E;
using testing::P;

const Type kBool = Type::boolean();

TEST(DataDecls, RejectsDuplicates) {
  DataDecls d;
  d.add("Color", {{CtorName{"Red", 0}, {}}, {CtorName{"Green", 0}, {}}});
  EXPECT_THROW(d.add("Color", {{CtorName{"Blue", 0}, {}}}),
               std::invalid_argument);
  EXPECT_THROW(d.add("Other", {{CtorName{"Red", 0}, {}}}),
               std::invalid_argument);
  EXPECT_THROW(d.add("Bad", {{CtorName{"Mk", 2}, {kBool}}}),
               std::invalid_argument);
}

TEST(DataDecls, SignatureLookup) {
  const DataDecls d = reference_decls();
  EXPECT_EQ(d.owner(CtorName{"Cons", 2}), "List");
  EXPECT_FALSE(d.owner(CtorName{"Cons", 1}).has_value());
  EXPECT_EQ(d.signature_of(CtorName{"Green", 0}),
            (std::vector<CtorName>{{"Red", 0}, {"Green", 0}, {"Blue", 0}}));
  EXPECT_EQ(d.signature_of(CtorName{"True", 0}),
            (std::vector<CtorName>{{"True", 0}, {"False", 0}}));
  EXPECT_TRUE(d.signature_of(CtorName{"Nope", 0}).empty());
  EXPECT_EQ(d.ctors_for(Type::sum(kBool, kBool)).size(), 2u);
  EXPECT_EQ(d.ctors_for(Type::pair(kBool, kBool)).size(), 1u);
}

TEST(PatternTyping, ConstructorBindsComponents) {
  const DataDecls d = reference_decls();
  const auto r = type_pattern(P("Cons(x, xs)"), Type::named("List"), d);
  ASSERT_TRUE(std::holds_alternative<Typed>(r));
  const auto& t = std::get<Typed>(r);
  EXPECT_TRUE(same_bindings(
      t.gamma, Context{{"x", kBool}, {"xs", Type::named("List")}}));
  EXPECT_TRUE(t.delta.empty());
}

TEST(PatternTyping, NegationMovesBindersToDelta) {
  const DataDecls d = reference_decls();
  const auto r = type_pattern(P("!x"), kBool, d);
  ASSERT_TRUE(std::holds_alternative<Typed>(r));
  EXPECT_TRUE(std::get<Typed>(r).gamma.empty());
  EXPECT_TRUE(same_bindings(std::get<Typed>(r).delta, Context{{"x", kBool}}));
}

TEST(PatternTyping, OrRequiresSameBindings) {
  const DataDecls d = reference_decls();
  EXPECT_TRUE(std::holds_alternative<Typed>(
      type_pattern(P("Pair(x, _) | Pair(_, x)"), Type::pair(kBool, kBool), d)));
  EXPECT_TRUE(std::holds_alternative<Ill>(
      type_pattern(P("(x & True) | False"), kBool, d)));
}

TEST(PatternTyping, RejectsForeignConstructor) {
  const DataDecls d = reference_decls();
  EXPECT_TRUE(std::holds_alternative<Ill>(type_pattern(P("Red"), kBool, d)));
  EXPECT_TRUE(std::holds_alternative<Ill>(
      type_pattern(P("Pair(True, Red)"), Type::pair(kBool, kBool), d)));
  EXPECT_TRUE(std::holds_alternative<Typed>(
      type_pattern(P("Inl(True) | Inr(Red)"),
                   Type::sum(kBool, Type::named("Color")), d)));
}

TEST(PatternTyping, AndConcatenatesGammaAndSharesDelta) {
  const DataDecls d = reference_decls();
  const auto r = type_pattern(P("x & y"), Type::named("Color"), d);
  ASSERT_TRUE(std::holds_alternative<Typed>(r));
  EXPECT_EQ(std::get<Typed>(r).gamma.size(), 2u);
  const auto n = type_pattern(P("!z & !z"), Type::named("Color"), d);
  ASSERT_TRUE(std::holds_alternative<Typed>(n));
  EXPECT_TRUE(same_bindings(std::get<Typed>(n).delta,
                            Context{{"z", Type::named("Color")}}));
  EXPECT_TRUE(std::holds_alternative<Ill>(
      type_pattern(P("x & !y"), Type::named("Color"), d)));
}

TEST(ExprTyping, CaseBindsPatternVariables) {
  const DataDecls d = reference_decls();
  const Expression e =
      E("case l of { Cons(h, _) => h, default => False }");
  const auto r = type_expr(Context{{"l", Type::named("List")}}, e, d);
  ASSERT_TRUE(std::holds_alternative<Type>(r));
  EXPECT_EQ(std::get<Type>(r), kBool);
  EXPECT_FALSE(check_expr(Context{{"l", Type::named("List")}}, e, kBool, d));
  EXPECT_TRUE(check_expr(Context{{"l", Type::named("List")}}, e,
                         Type::named("Color"), d));
}

TEST(ExprTyping, UnboundVariableIsIll) {
  const DataDecls d = reference_decls();
  EXPECT_TRUE(std::holds_alternative<Ill>(type_expr({}, E("x"), d)));
}

TEST(ExprTyping, CallsUseSignatures) {
  const DataDecls d = reference_decls();
  FunctionSigs sigs;
  sigs["neg"] = FunctionSig{{kBool}, kBool};
  EXPECT_FALSE(check_expr({}, E("neg(True)"), kBool, d, &sigs));
  EXPECT_TRUE(check_expr({}, E("neg(Red)"), kBool, d, &sigs));
}

TEST(Types, Printing) {
  EXPECT_EQ(to_string(kBool), "Bool");
  EXPECT_EQ(to_string(Type::named("List")), "List");
}

}  // namespace
}  // namespace patc
