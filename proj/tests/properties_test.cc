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

#include "patc/properties.h"

#include <gtest/gtest.h>

#include <atomic>

namespace patc {
namespace {

Property always(CaseStatus status) {
  return Property{"test", "constant", [status](CaseEnv&) {
                    return CaseOutcome{status, "constant"};
                  }};
}

TEST(Runner, CountsPasses) {
  const PropertyConfig cfg{7, 25, 2};
  const PropertyOutcome o = run_property(always(CaseStatus::kPass), cfg,
                                         Exec::kSerial);
  EXPECT_TRUE(o.ok());
  EXPECT_EQ(o.passed, 25u);
  EXPECT_EQ(o.failed, 0u);
}

TEST(Runner, AllSkipsIsNotOk) {
  const PropertyConfig cfg{7, 10, 2};
  for (Exec exec : {Exec::kSerial, Exec::kParallel}) {
    const PropertyOutcome o = run_property(always(CaseStatus::kSkip), cfg, exec);
    EXPECT_FALSE(o.ok());
    EXPECT_EQ(o.passed, 0u);
    EXPECT_GT(o.skipped, 0u);
  }
}

TEST(Runner, StopsAtFirstFailureWithSameCounterexample) {
  const Property p{"test", "fails_on_third", [](CaseEnv& env) {
                     return env.seed() % 3 == 0 ? CaseOutcome::fail("boom")
                                                : CaseOutcome::pass();
                   }};
  const PropertyConfig cfg{11, 50, 2};
  const PropertyOutcome s = run_property(p, cfg, Exec::kSerial);
  const PropertyOutcome q = run_property(p, cfg, Exec::kParallel);
  ASSERT_TRUE(s.counterexample.has_value());
  ASSERT_TRUE(q.counterexample.has_value());
  EXPECT_EQ(s.counterexample->index, q.counterexample->index);
  EXPECT_EQ(s.counterexample->seed, q.counterexample->seed);
  EXPECT_EQ(s.passed, q.passed);
  EXPECT_EQ(s.failed, 1u);
  EXPECT_EQ(s.counterexample->seed, case_seed(11, "fails_on_third",
                                              s.counterexample->index));
}

TEST(Runner, ExceptionsBecomeFailures) {
  const Property p{"test", "throws", [](CaseEnv&) -> CaseOutcome {
                     throw std::runtime_error("bad");
                   }};
  const PropertyOutcome o = run_property(p, PropertyConfig{1, 5, 2},
                                         Exec::kParallel);
  EXPECT_EQ(o.failed, 1u);
  EXPECT_FALSE(o.ok());
}

TEST(Runner, CaseSeedsDifferByIndexAndName) {
  EXPECT_NE(case_seed(1, "a", 0), case_seed(1, "a", 1));
  EXPECT_NE(case_seed(1, "a", 0), case_seed(1, "b", 0));
  EXPECT_EQ(case_seed(1, "a", 5), case_seed(1, "a", 5));
}

TEST(Suites, AllRegisteredSuitesAreNonEmpty) {
  const auto names = suite_names();
  EXPECT_GE(names.size(), 7u);
  for (const std::string& s : names) EXPECT_FALSE(properties(s).empty()) << s;
}

TEST(Suites, SerialAndParallelRunsMatch) {
  const PropertyConfig cfg{3, 40, 3};
  const auto props = properties("overlap");
  const SuiteReport serial = run_properties(props, cfg, Exec::kSerial);
  const SuiteReport parallel = run_properties(props, cfg, Exec::kParallel);
  ASSERT_EQ(serial.outcomes.size(), parallel.outcomes.size());
  for (std::size_t i = 0; i < serial.outcomes.size(); ++i) {
    EXPECT_EQ(serial.outcomes[i].passed, parallel.outcomes[i].passed);
    EXPECT_EQ(serial.outcomes[i].skipped, parallel.outcomes[i].skipped);
    EXPECT_EQ(serial.outcomes[i].failed, parallel.outcomes[i].failed);
  }
}

TEST(Universes, CompletenessOfFiniteTypes) {
  const DataDecls d = reference_decls();
  const auto types = reference_types();
  const Universes u(d, types, 3);
  EXPECT_TRUE(u.complete(Type::named("Color")));
  EXPECT_FALSE(u.complete(Type::named("List")));
  EXPECT_EQ(u.of(Type::boolean()).size(), 2u);
}

}  // namespace
}  // namespace patc
