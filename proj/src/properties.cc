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

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace patc {

Universes::Universes(const DataDecls& decls, std::span<const Type> types,
                     std::size_t depth)
    : depth_(depth) {
  for (const Type& t : types) {
    std::vector<Value> values = enumerate_values(decls, t, depth);
    const bool complete =
        enumerate_values(decls, t, depth + 1).size() == values.size();
    table_.emplace(to_string(t), Entry{std::move(values), complete});
  }
}

const std::vector<Value>& Universes::of(const Type& t) const {
  auto it = table_.find(to_string(t));
  if (it == table_.end()) {
    throw std::out_of_range("no universe for type " + to_string(t));
  }
  return it->second.values;
}

bool Universes::complete(const Type& t) const {
  auto it = table_.find(to_string(t));
  return it != table_.end() && it->second.complete;
}

CaseEnv::CaseEnv(const DataDecls& decls, std::span<const Type> types,
                 const Universes& universes, std::uint64_t seed)
    : decls_(decls),
      types_(types),
      universes_(universes),
      seed_(seed),
      rng_(seed) {}

std::size_t CaseEnv::pick(std::size_t n) {
  if (n == 0) throw std::invalid_argument("pick from an empty range");
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

const Type& CaseEnv::any_type() { return types_[pick(types_.size())]; }

Pattern CaseEnv::pattern(const Type& tau, std::size_t max_size,
                         const GenOptions& options) {
  const std::size_t size = pick(max_size + 1);
  return gen_pattern(decls_, tau, size, rng_(), options);
}

std::string to_string(const PropertyOutcome& o) {
  std::string line =
      fmt::format("{:<5} {}/{}: {} passed, {} skipped, {} failed (target {})",
                  o.ok() ? "PASS" : "FAIL", o.suite, o.name, o.passed,
                  o.skipped, o.failed, o.target);
  if (o.counterexample) {
    line += fmt::format("\n      counterexample at case {} (seed {}): {}",
                        o.counterexample->index, o.counterexample->seed,
                        o.counterexample->detail);
  } else if (!o.ok()) {
    line += "\n      too many skipped cases to reach the target";
  }
  return line;
}

bool SuiteReport::ok() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const PropertyOutcome& o) { return o.ok(); });
}

const PropertyOutcome* SuiteReport::find(std::string_view name) const {
  for (const PropertyOutcome& o : outcomes) {
    if (o.name == name) return &o;
  }
  return nullptr;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Shared {
  DataDecls decls = reference_decls();
  std::vector<Type> types = reference_types();
  Universes universes;

  explicit Shared(std::size_t depth) : universes(decls, types, depth) {}
};

CaseOutcome run_case(const Property& property, const Shared& shared,
                     std::uint64_t seed) {
  CaseEnv env(shared.decls, shared.types, shared.universes, seed);
  try {
    return property.check(env);
  } catch (const GenerationError& e) {
    return CaseOutcome::skip(e.what());
  } catch (const std::exception& e) {
    return CaseOutcome::fail(fmt::format("exception: {}", e.what()));
  }
}

// Folds one case outcome; returns true once the property is decided.
bool fold(PropertyOutcome& out, const CaseOutcome& c, std::size_t index,
          std::uint64_t seed) {
  switch (c.status) {
    case CaseStatus::kPass:
      ++out.passed;
      break;
    case CaseStatus::kSkip:
      ++out.skipped;
      break;
    case CaseStatus::kFail:
      ++out.failed;
      out.counterexample = Counterexample{index, seed, c.detail};
      return true;
  }
  return out.passed >= out.target;
}

PropertyOutcome run_shared(const Property& property,
                           const PropertyConfig& config, Exec exec,
                           const Shared& shared) {
  PropertyOutcome out;
  out.suite = property.suite;
  out.name = property.name;
  out.target = config.cases;
  if (config.cases == 0) return out;
  const std::size_t budget = config.cases * 20 + 64;
  std::size_t next = 0;
  bool done = false;
  if (exec == Exec::kSerial) {
    for (; next < budget && !done; ++next) {
      const std::uint64_t seed = case_seed(config.seed, property.name, next);
      done = fold(out, run_case(property, shared, seed), next, seed);
    }
    return out;
  }
  while (next < budget && !done) {
    const std::size_t needed = out.target - out.passed;
    const std::size_t batch =
        std::min(budget - next, std::max<std::size_t>(needed + needed / 4, 16));
    std::vector<CaseOutcome> results(batch);
    std::vector<std::uint64_t> seeds(batch);
    for (std::size_t i = 0; i < batch; ++i) {
      seeds[i] = case_seed(config.seed, property.name, next + i);
    }
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < batch; ++i) {
      results[i] = run_case(property, shared, seeds[i]);
    }
    for (std::size_t i = 0; i < batch && !done; ++i) {
      done = fold(out, results[i], next + i, seeds[i]);
    }
    next += batch;
  }
  return out;
}

}  // namespace

std::uint64_t case_seed(std::uint64_t base, std::string_view property,
                        std::size_t index) {
  const std::uint64_t h = std::hash<std::string_view>{}(property);
  return splitmix64(splitmix64(base ^ h) + index);
}

PropertyOutcome run_property(const Property& property,
                             const PropertyConfig& config, Exec exec) {
  if (config.depth == 0) throw std::invalid_argument("depth must be positive");
  Shared shared(config.depth);
  return run_shared(property, config, exec, shared);
}

SuiteReport run_properties(std::span<const Property> properties,
                           const PropertyConfig& config, Exec exec) {
  if (config.depth == 0) throw std::invalid_argument("depth must be positive");
  Shared shared(config.depth);
  SuiteReport report;
  for (const Property& p : properties) {
    report.outcomes.push_back(run_shared(p, config, exec, shared));
  }
  return report;
}

}  // namespace patc
