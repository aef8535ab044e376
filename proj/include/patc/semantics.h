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

#ifndef PATC_SEMANTICS_H_
#define PATC_SEMANTICS_H_

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "patc/expr.h"
#include "patc/pattern.h"

namespace patc {

inline constexpr std::size_t kDefaultFuel = 10000;

/// Top-level definition `def f(x, y) := body`. Calls unfold by substituting
/// the argument expressions for the parameters.
struct Definition {
  std::string name;
  std::vector<std::string> params;
  Expression body;
};
using Definitions = std::map<std::string, Definition>;

struct Stepped {
  std::vector<Expression> successors;  // nonempty, sorted, distinct
};
struct Stuck {
  std::string reason;
};
struct IsValue {};
using StepResult = std::variant<Stepped, Stuck, IsValue>;

/// All one-step successors of `e`.
StepResult step(const Expression& e, const Definitions* defs = nullptr);

struct Diverged {};
struct Nondeterministic {
  Expression at;
  std::vector<Expression> successors;
};
using EvalResult = std::variant<Value, Diverged, Stuck, Nondeterministic>;

EvalResult eval(const Expression& e, std::size_t fuel = kDefaultFuel,
                const Definitions* defs = nullptr);

std::string to_string(const EvalResult& r);

/// Both reach the same value within `fuel` steps, or both run out of fuel.
bool expr_equiv_bounded(const Expression& a, const Expression& b,
                        std::size_t fuel = kDefaultFuel,
                        const Definitions* defs = nullptr);

}  // namespace patc

#endif  // PATC_SEMANTICS_H_
