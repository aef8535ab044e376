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

#include <fmt/format.h>

#include <algorithm>
#include <set>

namespace patc {

PatternMatrix pattern_matrix(const ClauseMatrix& m) {
  check_shape(m);
  PatternMatrix p{m.columns(), {}};
  for (const MatrixRow& row : m.rows) p.rows.push_back(row.cells);
  return p;
}

std::string to_string(const Witness& w) {
  if (!w.ctor) return "_";
  if (w.args.empty()) return w.ctor->name;
  std::string out = w.ctor->name + "(";
  for (std::size_t i = 0; i < w.args.size(); ++i) {
    if (i) out += ", ";
    out += to_string(w.args[i]);
  }
  return out + ")";
}

std::string to_string(const std::vector<Witness>& ws) {
  if (ws.size() == 1) return to_string(ws.front());
  std::string out = "(";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ws[i]);
  }
  return out + ")";
}

Value to_value(const Witness& w) {
  if (!w.ctor) return Value::nullary("$Any");
  std::vector<Value> args;
  for (const Witness& a : w.args) args.push_back(to_value(a));
  return Value(*w.ctor, std::move(args));
}

namespace {

using Row = std::vector<Ndnf>;

// Specialization rules applied to one row, appending its contributions to `out`.
void specialize_row(const Row& row, const CtorName& ctor,
                    std::vector<Row>& out) {
  for (const NConjunct& k : row.front().disjuncts) {
    Row next;
    if (k.is(NConjunct::Kind::kPositive) && k.ctor == ctor) {
      for (const NConjunct& arg : k.args) next.push_back(Ndnf::of(arg));
    } else if (k.is(NConjunct::Kind::kNegative) && !k.banned.contains(ctor)) {
      next.assign(ctor.arity, Ndnf::wildcard());
    } else {
      continue;
    }
    next.insert(next.end(), row.begin() + 1, row.end());
    out.push_back(std::move(next));
  }
}

void default_row(const Row& row, std::vector<Row>& out) {
  for (const NConjunct& k : row.front().disjuncts) {
    if (k.is(NConjunct::Kind::kNegative)) {
      out.emplace_back(row.begin() + 1, row.end());
    }
  }
}

// Complete constructor list of the single type owning every member of
// `ctors`.
std::vector<CtorName> signature(const std::set<CtorName>& ctors,
                                const DataDecls& decls) {
  std::vector<CtorName> sig;
  for (const CtorName& c : ctors) {
    std::vector<CtorName> s = decls.signature_of(c);
    if (s.empty()) {
      throw SignatureError(fmt::format(
          "constructor {} has no declared type", to_string(c)));
    }
    std::sort(s.begin(), s.end());
    if (sig.empty()) {
      sig = std::move(s);
    } else if (sig != s) {
      throw SignatureError(fmt::format(
          "constructors of different types in one column (at {})",
          to_string(c)));
    }
  }
  return sig;
}

class Usefulness {
 public:
  explicit Usefulness(const DataDecls& decls) : decls_(decls) {}

  std::optional<std::vector<Witness>> run(const std::vector<Row>& rows,
                                          const Row& pvec) {
    if (pvec.empty()) {
      if (rows.empty()) return std::vector<Witness>{};
      return std::nullopt;
    }
    const Ndnf& first = pvec.front();
    if (first.disjuncts.size() != 1) {
      for (const NConjunct& k : first.disjuncts) {
        Row alt = pvec;
        alt.front() = Ndnf::of(k);
        if (auto w = run(rows, alt)) return w;
      }
      return std::nullopt;
    }
    const NConjunct& p1 = first.disjuncts.front();
    switch (p1.kind) {
      case NConjunct::Kind::kUnsat:
        return std::nullopt;
      case NConjunct::Kind::kPositive:
        return via_specialization(rows, pvec, p1.ctor);
      case NConjunct::Kind::kNegative:
        break;
    }
    std::set<CtorName> heads;
    for (const Row& r : rows) {
      std::set<CtorName> h = head_set(r.front());
      heads.insert(h.begin(), h.end());
    }
    std::set<CtorName> sigma = heads;
    sigma.insert(p1.banned.begin(), p1.banned.end());
    if (!sigma.empty()) {
      std::vector<CtorName> sig = signature(sigma, decls_);
      if (std::includes(sigma.begin(), sigma.end(), sig.begin(), sig.end())) {
        for (const CtorName& c : sig) {
          if (p1.banned.contains(c)) continue;
          if (auto w = via_specialization(rows, pvec, c)) return w;
        }
        return std::nullopt;
      }
    }
    for (const CtorName& c : heads) {
      if (p1.banned.contains(c)) continue;
      if (auto w = via_specialization(rows, pvec, c)) return w;
    }
    std::vector<Row> rest;
    for (const Row& r : rows) default_row(r, rest);
    Row tail(pvec.begin() + 1, pvec.end());
    std::optional<std::vector<Witness>> w = run(rest, tail);
    if (!w) return std::nullopt;
    w->insert(w->begin(), missing_ctor(sigma));
    return w;
  }

 private:
  static std::set<CtorName> head_set(const Ndnf& cell) {
    std::set<CtorName> out;
    for (const NConjunct& k : cell.disjuncts) {
      if (k.is(NConjunct::Kind::kPositive)) out.insert(k.ctor);
      if (k.is(NConjunct::Kind::kNegative)) {
        out.insert(k.banned.begin(), k.banned.end());
      }
    }
    return out;
  }

  // Some constructor outside `sigma`, or any value when the type is unknown.
  Witness missing_ctor(const std::set<CtorName>& sigma) const {
    if (sigma.empty()) return Witness{};
    for (const CtorName& c : signature(sigma, decls_)) {
      if (!sigma.contains(c)) {
        return Witness{c, std::vector<Witness>(c.arity, Witness{})};
      }
    }
    return Witness{};
  }

  std::optional<std::vector<Witness>> via_specialization(
      const std::vector<Row>& rows, const Row& pvec, const CtorName& c) {
    std::vector<Row> spec;
    for (const Row& r : rows) specialize_row(r, c, spec);
    std::vector<Row> spec_p;
    specialize_row(pvec, c, spec_p);
    for (const Row& q : spec_p) {
      std::optional<std::vector<Witness>> w = run(spec, q);
      if (!w) continue;
      Witness head{c, {}};
      head.args.assign(w->begin(), w->begin() + static_cast<long>(c.arity));
      std::vector<Witness> out{std::move(head)};
      out.insert(out.end(), w->begin() + static_cast<long>(c.arity), w->end());
      return out;
    }
    return std::nullopt;
  }

  const DataDecls& decls_;
};

void check_rows(const PatternMatrix& p) {
  for (const Row& r : p.rows) {
    if (r.size() != p.columns) {
      throw std::invalid_argument("pattern matrix is not rectangular");
    }
  }
}

}  // namespace

PatternMatrix table_b1_specialize(const PatternMatrix& p,
                                  const CtorName& ctor) {
  check_rows(p);
  if (p.columns == 0) throw std::invalid_argument("matrix has no columns");
  PatternMatrix out{p.columns - 1 + ctor.arity, {}};
  for (const Row& r : p.rows) specialize_row(r, ctor, out.rows);
  return out;
}

PatternMatrix table_b1_default(const PatternMatrix& p) {
  check_rows(p);
  if (p.columns == 0) throw std::invalid_argument("matrix has no columns");
  PatternMatrix out{p.columns - 1, {}};
  for (const Row& r : p.rows) default_row(r, out.rows);
  return out;
}

std::optional<std::vector<Witness>> useful_witness(
    const PatternMatrix& p, const std::vector<Ndnf>& pvec,
    const DataDecls& decls) {
  check_rows(p);
  if (pvec.size() != p.columns) {
    throw std::invalid_argument("pattern vector length differs from columns");
  }
  return Usefulness(decls).run(p.rows, pvec);
}

bool useful(const PatternMatrix& p, const std::vector<Ndnf>& pvec,
            const DataDecls& decls) {
  return useful_witness(p, pvec, decls).has_value();
}

std::optional<std::vector<Witness>> missing_witness(const PatternMatrix& p,
                                                    const DataDecls& decls) {
  return useful_witness(p, std::vector<Ndnf>(p.columns, Ndnf::wildcard()),
                        decls);
}

bool exhaustive(const PatternMatrix& p, const DataDecls& decls) {
  return !missing_witness(p, decls).has_value();
}

bool verify_witness(const PatternMatrix& p, const std::vector<Ndnf>& pvec,
                    const std::vector<Witness>& witness) {
  if (witness.size() != pvec.size()) return false;
  std::vector<Value> values;
  for (const Witness& w : witness) values.push_back(to_value(w));
  auto row_matches = [&](const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!matches(to_pattern(row[i]), values[i])) return false;
    }
    return true;
  };
  if (!row_matches(pvec)) return false;
  return std::none_of(p.rows.begin(), p.rows.end(), row_matches);
}

}  // namespace patc
