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

#include "patc/wellformed.h"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

#include "patc/normalize.h"
#include "patc/overlap.h"

namespace patc {

void WfReport::merge(const WfReport& other) {
  for (const Violation& v : other.violations) add(v);
}

std::string to_string(const Violation& v) {
  std::string path;
  for (std::size_t i : v.path) path += fmt::format(".{}", i);
  if (path.empty()) path = ".";
  return fmt::format("[{}] at {}: {}", v.rule, path, v.message);
}

namespace {

bool intersects(const VarSet& a, const VarSet& b) {
  for (const std::string& x : a) {
    if (b.contains(x)) return true;
  }
  return false;
}

std::string names(const VarSet& s) {
  std::string out = "{";
  for (const std::string& x : s) out += (out.size() > 1 ? ", " : "") + x;
  return out + "}";
}

// Returns false on the first failing rule and records it in `report` when
// one is given.
bool linear(const Pattern& p, bool positive, std::vector<std::size_t>& path,
            WfReport* report) {
  auto fail = [&](const char* rule, std::string message) {
    if (report) report->add({rule, path, std::move(message)});
    return false;
  };
  auto child = [&](std::size_t i, bool pol) {
    path.push_back(i);
    bool ok = linear(p.children()[i], pol, path, report);
    path.pop_back();
    return ok;
  };
  switch (p.kind()) {
    case Pattern::Kind::kVar:
    case Pattern::Kind::kWildcard:
    case Pattern::Kind::kAbsurd:
      return true;
    case Pattern::Kind::kNeg:
      return child(0, !positive);
    case Pattern::Kind::kOr:
    case Pattern::Kind::kAnd: {
      if (!child(0, positive) || !child(1, positive)) return false;
      const bool is_or = p.is(Pattern::Kind::kOr);
      if (positive) {
        VarSet l = fv_even(p.lhs()), r = fv_even(p.rhs());
        if (is_or && l != r) {
          return fail("L-Or+", fmt::format("branches bind {} and {}",
                                           names(l), names(r)));
        }
        if (!is_or && intersects(l, r)) {
          return fail("L-And+", fmt::format("both sides bind from {} and {}",
                                            names(l), names(r)));
        }
      } else {
        VarSet l = fv_odd(p.lhs()), r = fv_odd(p.rhs());
        if (is_or && intersects(l, r)) {
          return fail("L-Or-", fmt::format("negated branches share {} and {}",
                                           names(l), names(r)));
        }
        if (!is_or && l != r) {
          return fail("L-And-", fmt::format("negated sides bind {} and {}",
                                            names(l), names(r)));
        }
      }
      return true;
    }
    case Pattern::Kind::kCtor: {
      for (std::size_t i = 0; i < p.children().size(); ++i) {
        if (!child(i, positive)) return false;
      }
      if (positive) {
        VarSet seen;
        for (const Pattern& c : p.children()) {
          VarSet fv = fv_even(c);
          if (intersects(seen, fv)) {
            return fail("L-Ctor+",
                        fmt::format("arguments of {} share variables",
                                    p.ctor_name().name));
          }
          seen.insert(fv.begin(), fv.end());
        }
      } else {
        for (const Pattern& c : p.children()) {
          if (!fv_odd(c).empty()) {
            return fail("L-Ctor-",
                        fmt::format("argument of {} binds {} under negation",
                                    p.ctor_name().name, names(fv_odd(c))));
          }
        }
      }
      return true;
    }
  }
  return false;
}

bool disjoint_checked(const Pattern& p, const Pattern& q,
                      const DataDecls* decls) {
  if (decls != nullptr) {
    try {
      return disjoint(p, q, decls);
    } catch (const std::invalid_argument&) {
      // Constructors outside the declarations: answer without types.
    }
  }
  return disjoint(p, q, nullptr);
}

bool det(const Pattern& p, const DataDecls* decls,
         std::vector<std::size_t>& path, WfReport* report) {
  auto child = [&](std::size_t i) {
    path.push_back(i);
    bool ok = det(p.children()[i], decls, path, report);
    path.pop_back();
    return ok;
  };
  switch (p.kind()) {
    case Pattern::Kind::kVar:
    case Pattern::Kind::kWildcard:
    case Pattern::Kind::kAbsurd:
      return true;
    case Pattern::Kind::kNeg:
      return child(0);
    case Pattern::Kind::kCtor:
      for (std::size_t i = 0; i < p.children().size(); ++i) {
        if (!child(i)) return false;
      }
      return true;
    case Pattern::Kind::kOr:
      if (!child(0) || !child(1)) return false;
      if (fv_even(p.lhs()).empty() && fv_even(p.rhs()).empty()) return true;
      if (disjoint_checked(p.lhs(), p.rhs(), decls)) return true;
      if (report) {
        report->add({"D-Or", path,
                     fmt::format("{} and {} may overlap and bind variables",
                                 to_string(p.lhs()), to_string(p.rhs()))});
      }
      return false;
    case Pattern::Kind::kAnd:
      if (!child(0) || !child(1)) return false;
      if (fv_odd(p.lhs()).empty() && fv_odd(p.rhs()).empty()) return true;
      if (disjoint_checked(Pattern::neg(p.lhs()), Pattern::neg(p.rhs()),
                           decls)) {
        return true;
      }
      if (report) {
        report->add(
            {"D-And", path,
             fmt::format("negations of {} and {} may overlap and bind "
                         "variables",
                         to_string(p.lhs()), to_string(p.rhs()))});
      }
      return false;
  }
  return false;
}

void check_clause_patterns(std::span<const Pattern> patterns,
                           const DataDecls* decls, WfReport& report) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    std::vector<std::size_t> path{i};
    linear(patterns[i], true, path, &report);
    path = {i};
    det(patterns[i], decls, path, &report);
  }
}

void wf_expr_into(const Expression& e, const DataDecls* decls,
                  WfReport& report) {
  switch (e.kind()) {
    case Expression::Kind::kVar:
      return;
    case Expression::Kind::kCtor:
    case Expression::Kind::kCall:
      for (const Expression& a : e.args()) wf_expr_into(a, decls, report);
      return;
    case Expression::Kind::kCase: {
      wf_expr_into(e.scrutinee(), decls, report);
      std::vector<Pattern> patterns;
      for (const Clause& c : e.clauses()) patterns.push_back(c.pattern);
      check_clause_patterns(patterns, decls, report);
      std::vector<Ndnf> normal;
      for (const Pattern& p : patterns) normal.push_back(to_ndnf(p));
      for (std::size_t i = 0; i < normal.size(); ++i) {
        for (std::size_t j = i + 1; j < normal.size(); ++j) {
          bool overlaps;
          try {
            overlaps = decide(normal[i], normal[j], decls);
          } catch (const std::invalid_argument&) {
            overlaps = decide(normal[i], normal[j], nullptr);
          }
          if (overlaps) {
            report.add({"Wf-Case", {i, j},
                        fmt::format("clauses {} and {} overlap: {} and {}", i,
                                    j, to_string(patterns[i]),
                                    to_string(patterns[j]))});
          }
        }
      }
      for (const Clause& c : e.clauses()) wf_expr_into(c.rhs, decls, report);
      wf_expr_into(e.default_rhs(), decls, report);
      return;
    }
  }
}

}  // namespace

bool linear_pos(const Pattern& p) {
  std::vector<std::size_t> path;
  return linear(p, true, path, nullptr);
}

bool linear_neg(const Pattern& p) {
  std::vector<std::size_t> path;
  return linear(p, false, path, nullptr);
}

WfReport check_linear(const Pattern& p) {
  WfReport report;
  std::vector<std::size_t> path;
  linear(p, true, path, &report);
  return report;
}

bool deterministic(const Pattern& p, const DataDecls* decls) {
  std::vector<std::size_t> path;
  return det(p, decls, path, nullptr);
}

WfReport check_deterministic(const Pattern& p, const DataDecls* decls) {
  WfReport report;
  std::vector<std::size_t> path;
  det(p, decls, path, &report);
  return report;
}

WfReport wf_expr(const Expression& e, const DataDecls* decls) {
  WfReport report;
  wf_expr_into(e, decls, report);
  return report;
}

WfReport wf_matrix(const ClauseMatrix& m, const DataDecls* decls) {
  WfReport report;
  check_shape(m);
  const std::size_t n = m.columns();
  std::vector<std::vector<Pattern>> cells(m.rows.size());
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    VarSet bound;
    for (std::size_t c = 0; c < n; ++c) {
      Pattern p = to_pattern(m.rows[r].cells[c]);
      std::vector<std::size_t> path{r, c};
      linear(p, true, path, &report);
      path = {r, c};
      det(p, decls, path, &report);
      VarSet fv = fv_even(p);
      if (intersects(bound, fv)) {
        report.add({"Wf-MC", {r, c},
                    fmt::format("row {} binds a variable of {} in two columns",
                                r, names(fv))});
      }
      bound.insert(fv.begin(), fv.end());
      cells[r].push_back(std::move(p));
    }
  }
  for (std::size_t a = 0; a < m.rows.size(); ++a) {
    for (std::size_t b = a + 1; b < m.rows.size(); ++b) {
      bool separated = false;
      for (std::size_t c = 0; c < n && !separated; ++c) {
        separated = disjoint_checked(cells[a][c], cells[b][c], decls);
      }
      if (!separated) {
        report.add({"Wf-MC", {a, b},
                    fmt::format("rows {} and {} overlap in every column", a,
                                b)});
      }
    }
  }
  return report;
}

}  // namespace patc
