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

#include "patc/exhaustiveness.h"

#include <gtest/gtest.h>

#include "patc/compiler.h"
#include "patc/oracle.h"
#include "test_util.h"

namespace patc {
namespace {

using testing::E;
using testing::P;
using testing::Prog;

DataDecls day_decls() { return Prog(testing::kDayDecl).decls; }

PatternMatrix rows_of(std::initializer_list<const char*> pats) {
  PatternMatrix m;
  m.columns = 1;
  for (const char* p : pats) m.rows.push_back({to_ndnf(P(p))});
  return m;
}

TEST(Exhaustiveness, WeekendMissesFriday) {
  const DataDecls d = day_decls();
  const PatternMatrix m = pattern_matrix(embed_case(
      E("case x of { y & (Sa | Su) => A(y), y & !(Fr | Sa | Su) => B(y), "
        "default => C }")));
  EXPECT_FALSE(exhaustive(m, d));
  const auto w = missing_witness(m, d);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->size(), 1u);
  EXPECT_EQ(to_string(*w), "Fr");
  EXPECT_EQ(to_value((*w)[0]), testing::V("Fr"));
}

TEST(Exhaustiveness, IsRedVariantsAreExhaustive) {
  const DataDecls d = reference_decls();
  EXPECT_TRUE(exhaustive(rows_of({"Red", "!Red"}), d));
  EXPECT_TRUE(exhaustive(rows_of({"Red", "Green | Blue"}), d));
  EXPECT_FALSE(exhaustive(rows_of({"Red", "Green"}), d));
  EXPECT_FALSE(exhaustive(rows_of({"Red"}), d));
  EXPECT_TRUE(exhaustive(rows_of({"_"}), d));
  EXPECT_FALSE(exhaustive(rows_of({}), d));
}

TEST(Exhaustiveness, NestedConstructors) {
  const DataDecls d = reference_decls();
  EXPECT_TRUE(exhaustive(rows_of({"Nil", "Cons(True, _)", "Cons(False, _)"}), d));
  const PatternMatrix m = rows_of({"Nil", "Cons(True, _)"});
  const auto w = missing_witness(m, d);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(m, {Ndnf::wildcard()}, *w));
  EXPECT_EQ(to_value((*w)[0]).ctor(), (CtorName{"Cons", 2}));
  EXPECT_EQ(to_value((*w)[0]).args()[0], testing::V("False"));
}

TEST(Exhaustiveness, NegationInsideArgument) {
  const DataDecls d = reference_decls();
  EXPECT_TRUE(exhaustive(rows_of({"Nil", "Cons(!True, _)", "Cons(True, _)"}), d));
  EXPECT_FALSE(exhaustive(rows_of({"Cons(!True, _)", "Cons(True, _)"}), d));
}

TEST(Usefulness, RowAfterCatchAllIsUseless) {
  const DataDecls d = reference_decls();
  const PatternMatrix m = rows_of({"_"});
  EXPECT_FALSE(useful(m, {to_ndnf(P("Red"))}, d));
  EXPECT_TRUE(useful(rows_of({"Red"}), {to_ndnf(P("!Red"))}, d));
  const auto w = useful_witness(rows_of({"Red", "Blue"}), {Ndnf::wildcard()}, d);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(to_string(*w), "Green");
}

TEST(Usefulness, UnknownConstructorRaisesSignatureError) {
  const DataDecls d = reference_decls();
  EXPECT_THROW((void)exhaustive(rows_of({"Mystery"}), d), SignatureError);
}

TEST(Witness, AnyPrintsAsWildcard) {
  Witness any;
  Witness cons{CtorName{"Cons", 2}, {Witness{CtorName{"True", 0}, {}}, any}};
  EXPECT_EQ(to_string(std::vector<Witness>{cons}), "Cons(True, _)");
}

}  // namespace
}  // namespace patc
