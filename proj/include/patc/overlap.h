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

#ifndef PATC_OVERLAP_H_
#define PATC_OVERLAP_H_

#include "patc/normalize.h"
#include "patc/pattern.h"
#include "patc/typing.h"

namespace patc {

/// Whether two normalized conjuncts can match a common value. Without
/// declarations two negative conjuncts always overlap. With declarations they
/// are disjoint when their banned sets jointly cover a whole type; this throws
/// std::invalid_argument when the banned constructors are undeclared or come
/// from more than one type.
bool overlap_conjuncts(const NConjunct& a, const NConjunct& b,
                       const DataDecls* decls = nullptr);

/// True when some conjunct of `a` overlaps some conjunct of `b`. Conservative:
/// may answer true for disjoint inputs, never false for overlapping ones.
bool decide(const Ndnf& a, const Ndnf& b, const DataDecls* decls = nullptr);

/// `!decide(to_ndnf(p), to_ndnf(q), decls)`.
bool disjoint(const Pattern& p, const Pattern& q,
              const DataDecls* decls = nullptr);

/// Number of entries in the shared type-free memo table.
std::size_t overlap_cache_size();
void clear_overlap_cache();

}  // namespace patc

#endif  // PATC_OVERLAP_H_
