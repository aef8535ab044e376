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

#ifndef PATC_EXHAUSTIVENESS_H_
#define PATC_EXHAUSTIVENESS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "patc/matrix.h"
#include "patc/normalize.h"
#include "patc/pattern.h"
#include "patc/typing.h"

namespace patc {

/// Rows of normalized patterns without right-hand sides.
struct PatternMatrix {
  std::size_t columns = 0;
  std::vector<std::vector<Ndnf>> rows;
};

PatternMatrix pattern_matrix(const ClauseMatrix& m);

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Value skeleton: a constructor with argument skeletons, or any value.
struct Witness {
  std::optional<CtorName> ctor;  // nullopt: any value
  std::vector<Witness> args;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Surface syntax; any value prints as `_`.
std::string to_string(const Witness& w);
std::string to_string(const std::vector<Witness>& ws);

/// Replaces unconstrained positions by the nullary constructor `$Any`, which
/// no constructor pattern matches.
Value to_value(const Witness& w);

/// First-column specialization by `ctor` and default matrix.
PatternMatrix table_b1_specialize(const PatternMatrix& p, const CtorName& ctor);
PatternMatrix table_b1_default(const PatternMatrix& p);

/// Whether some value vector matches `pvec` but no row of `p`. Throws
/// SignatureError when a completeness test involves constructors that are not
/// declared or belong to different types.
bool useful(const PatternMatrix& p, const std::vector<Ndnf>& pvec,
            const DataDecls& decls);

/// As `useful`, returning a witness vector when useful.
std::optional<std::vector<Witness>> useful_witness(
    const PatternMatrix& p, const std::vector<Ndnf>& pvec,
    const DataDecls& decls);

bool exhaustive(const PatternMatrix& p, const DataDecls& decls);

/// A value vector matched by no row, if there is one.
std::optional<std::vector<Witness>> missing_witness(const PatternMatrix& p,
                                                    const DataDecls& decls);

/// Checks that the witness values match `pvec` and no row of `p`.
bool verify_witness(const PatternMatrix& p, const std::vector<Ndnf>& pvec,
                    const std::vector<Witness>& witness);

}  // namespace patc

#endif  // PATC_EXHAUSTIVENESS_H_
