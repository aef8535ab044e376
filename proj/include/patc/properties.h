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

// Seeded property runner. Each property is a function from a per-case
// environment (seeded RNG, declarations, enumerated universes) to a case
// outcome. The serial and OpenMP runners evaluate case indices in batches and
// fold the outcomes in index order, so both report identical counts and the
// same first counterexample for a given configuration.

#ifndef PATC_PROPERTIES_H_
#define PATC_PROPERTIES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patc/oracle.h"
#include "patc/pattern.h"
#include "patc/typing.h"

namespace patc {

struct PropertyConfig {
  std::uint64_t seed = 42;
  std::size_t cases = 200;  // required non-skipped cases per property
  std::size_t depth = 3;    // universe depth
};

// Values of every reference type up to a fixed depth, computed once per run
// and shared read-only between cases.
class Universes {
 public:
  Universes(const DataDecls& decls, std::span<const Type> types,
            std::size_t depth);

  const std::vector<Value>& of(const Type& t) const;
  // True when the enumeration at depth d+1 adds nothing, i.e. the type is
  // finite and the universe is complete.
  bool complete(const Type& t) const;
  std::size_t depth() const { return depth_; }

 private:
  struct Entry {
    std::vector<Value> values;
    bool complete;
  };
  std::map<std::string, Entry> table_;
  std::size_t depth_;
};

class CaseEnv {
 public:
  CaseEnv(const DataDecls& decls, std::span<const Type> types,
          const Universes& universes, std::uint64_t seed);

  const DataDecls& decls() const { return decls_; }
  std::span<const Type> types() const { return types_; }
  const Universes& universes() const { return universes_; }
  std::uint64_t seed() const { return seed_; }
  std::mt19937_64& rng() { return rng_; }

  std::size_t pick(std::size_t n);
  const Type& any_type();
  // Random pattern of the given type with size in [0, max_size].
  Pattern pattern(const Type& tau, std::size_t max_size = 5,
                  const GenOptions& options = {});

 private:
  const DataDecls& decls_;
  std::span<const Type> types_;
  const Universes& universes_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

enum class CaseStatus { kPass, kSkip, kFail };

struct CaseOutcome {
  CaseStatus status = CaseStatus::kPass;
  std::string detail;

  static CaseOutcome pass() { return {}; }
  static CaseOutcome skip(std::string why) {
    return {CaseStatus::kSkip, std::move(why)};
  }
  static CaseOutcome fail(std::string why) {
    return {CaseStatus::kFail, std::move(why)};
  }
};

struct Property {
  std::string suite;
  std::string name;
  std::function<CaseOutcome(CaseEnv&)> check;
};

struct Counterexample {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string detail;
};

struct PropertyOutcome {
  std::string suite;
  std::string name;
  std::size_t target = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  std::optional<Counterexample> counterexample;

  bool ok() const { return failed == 0 && passed >= target; }
};

std::string to_string(const PropertyOutcome& o);

struct SuiteReport {
  std::vector<PropertyOutcome> outcomes;

  bool ok() const;
  const PropertyOutcome* find(std::string_view name) const;
};

// Seed of case `index` of the named property.
std::uint64_t case_seed(std::uint64_t base, std::string_view property,
                        std::size_t index);

PropertyOutcome run_property(const Property& property,
                             const PropertyConfig& config, Exec exec);
SuiteReport run_properties(std::span<const Property> properties,
                           const PropertyConfig& config, Exec exec);

// Suite names: algebra, linearity, semantics, compile, exhaustive, overlap,
// normalize, or all. Throws std::invalid_argument for anything else.
std::vector<Property> properties(std::string_view suite);
std::vector<std::string> suite_names();

}  // namespace patc

#endif  // PATC_PROPERTIES_H_
