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

#include "patc/overlap.h"

#include <fmt/format.h>

#include <algorithm>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace patc {
namespace {

void append_key(const NConjunct& k, std::string& out) {
  out += '{';
  for (const std::string& x : k.vars) out += x + ',';
  out += '}';
  switch (k.kind) {
    case NConjunct::Kind::kUnsat:
      out += '#';
      return;
    case NConjunct::Kind::kNegative:
      out += "!{";
      for (const CtorName& c : k.banned) {
        out += fmt::format("{}/{},", c.name, c.arity);
      }
      out += '}';
      return;
    case NConjunct::Kind::kPositive:
      out += fmt::format("{}/{}(", k.ctor.name, k.ctor.arity);
      for (const NConjunct& a : k.args) {
        append_key(a, out);
        out += ';';
      }
      out += ')';
      return;
  }
}

class OverlapCache {
 public:
  std::optional<bool> find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void store(std::string key, bool value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }
  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, bool> table_;
};

OverlapCache& cache() {
  static OverlapCache instance;
  return instance;
}

bool covers_signature(const std::set<CtorName>& banned,
                      const DataDecls& decls) {
  if (banned.empty()) return false;
  std::vector<CtorName> signature;
  for (const CtorName& c : banned) {
    std::vector<CtorName> sig = decls.signature_of(c);
    if (sig.empty()) {
      throw std::invalid_argument(
          fmt::format("constructor {} belongs to no declared type",
                      to_string(c)));
    }
    std::sort(sig.begin(), sig.end());
    if (signature.empty()) {
      signature = std::move(sig);
    } else if (signature != sig) {
      throw std::invalid_argument(fmt::format(
          "banned constructors span more than one type (at {})",
          to_string(c)));
    }
  }
  return std::includes(banned.begin(), banned.end(), signature.begin(),
                       signature.end());
}

bool compute(const NConjunct& a, const NConjunct& b, const DataDecls* decls) {
  using K = NConjunct::Kind;
  if (a.is(K::kUnsat) || b.is(K::kUnsat)) return false;
  if (a.is(K::kPositive) && b.is(K::kPositive)) {
    if (a.ctor != b.ctor) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (!overlap_conjuncts(a.args[i], b.args[i], decls)) return false;
    }
    return true;
  }
  if (a.is(K::kPositive) || b.is(K::kPositive)) {
    const NConjunct& pos = a.is(K::kPositive) ? a : b;
    const NConjunct& neg = a.is(K::kPositive) ? b : a;
    if (neg.banned.contains(pos.ctor)) return false;
    const NConjunct any = NConjunct::wildcard();
    return std::all_of(pos.args.begin(), pos.args.end(),
                       [&](const NConjunct& arg) {
                         return overlap_conjuncts(arg, any, decls);
                       });
  }
  if (decls == nullptr) return true;
  std::set<CtorName> banned = a.banned;
  banned.insert(b.banned.begin(), b.banned.end());
  return !covers_signature(banned, *decls);
}

}  // namespace

bool overlap_conjuncts(const NConjunct& a, const NConjunct& b,
                       const DataDecls* decls) {
  if (decls != nullptr) return compute(a, b, decls);
  std::string key;
  append_key(a, key);
  key += '|';
  append_key(b, key);
  if (std::optional<bool> hit = cache().find(key)) return *hit;
  bool result = compute(a, b, nullptr);
  cache().store(std::move(key), result);
  return result;
}

bool decide(const Ndnf& a, const Ndnf& b, const DataDecls* decls) {
  for (const NConjunct& x : a.disjuncts) {
    for (const NConjunct& y : b.disjuncts) {
      if (overlap_conjuncts(x, y, decls)) return true;
    }
  }
  return false;
}

bool disjoint(const Pattern& p, const Pattern& q, const DataDecls* decls) {
  return !decide(to_ndnf(p), to_ndnf(q), decls);
}

std::size_t overlap_cache_size() { return cache().size(); }

void clear_overlap_cache() { cache().clear(); }

}  // namespace patc
