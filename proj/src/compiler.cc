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

#include "patc/compiler.h"

#include <fmt/format.h>

#include <algorithm>
#include <map>

namespace patc {

struct DecisionTree::Node {
  Kind kind;
  Expression expr;
  std::vector<Arm> arms;
  std::vector<DecisionTree> default_arm;  // one element for kSwitch
};

DecisionTree DecisionTree::leaf(Expression rhs) {
  return DecisionTree(
      std::make_shared<const Node>(Node{Kind::kLeaf, std::move(rhs), {}, {}}));
}

DecisionTree DecisionTree::switch_on(Expression scrutinee,
                                     std::vector<Arm> arms,
                                     DecisionTree default_arm) {
  return DecisionTree(std::make_shared<const Node>(
      Node{Kind::kSwitch, std::move(scrutinee), std::move(arms),
           {std::move(default_arm)}}));
}

DecisionTree::Kind DecisionTree::kind() const { return node_->kind; }
const Expression& DecisionTree::expr() const { return node_->expr; }
const std::vector<Arm>& DecisionTree::arms() const { return node_->arms; }
const DecisionTree& DecisionTree::default_arm() const {
  return node_->default_arm.front();
}

bool operator==(const DecisionTree& a, const DecisionTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.expr() != b.expr()) return false;
  if (a.is_leaf()) return true;
  return a.arms() == b.arms() && a.default_arm() == b.default_arm();
}

std::string FreshSupply::next() { return fmt::format("{}{}", prefix, counter++); }

CompileError::CompileError(WfReport report)
    : std::runtime_error([&] {
        std::string msg = "clause matrix is not wellformed";
        for (const Violation& v : report.violations) {
          msg += "\n  " + to_string(v);
        }
        return msg;
      }()),
      report_(std::move(report)) {}

// ---------------------------------------------------------------------------
// Matrix construction

ClauseMatrix embed_case(const Expression& e) {
  if (!e.is(Expression::Kind::kCase)) {
    throw std::invalid_argument("embed_case expects a case expression, got " +
                                to_string(e));
  }
  ClauseMatrix m{{e.scrutinee()}, {}, e.default_rhs()};
  for (const Clause& c : e.clauses()) {
    m.rows.push_back(MatrixRow{{to_ndnf(c.pattern)}, c.rhs});
  }
  return m;
}

std::set<CtorName> head_ctors(std::span<const Ndnf> column) {
  std::set<CtorName> heads;
  for (const Ndnf& cell : column) {
    for (const NConjunct& k : cell.disjuncts) {
      if (k.is(NConjunct::Kind::kPositive)) heads.insert(k.ctor);
      if (k.is(NConjunct::Kind::kNegative)) {
        heads.insert(k.banned.begin(), k.banned.end());
      }
    }
  }
  return heads;
}

std::set<CtorName> head_ctors(const ClauseMatrix& m, std::size_t column) {
  std::vector<Ndnf> cells;
  for (const MatrixRow& row : m.rows) cells.push_back(row.cells.at(column));
  return head_ctors(cells);
}

namespace {

Expression bind_all(const Expression& rhs, const VarSet& vars,
                    const Expression& target) {
  if (vars.empty()) return rhs;
  std::map<std::string, Expression> replacement;
  for (const std::string& y : vars) replacement.emplace(y, target);
  return substitute(rhs, replacement);
}

std::vector<Ndnf> without(const std::vector<Ndnf>& cells, std::size_t i) {
  std::vector<Ndnf> out;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (c != i) out.push_back(cells[c]);
  }
  return out;
}

}  // namespace

ClauseMatrix specialize(std::size_t column, const CtorName& ctor,
                        const std::vector<std::string>& binders,
                        const ClauseMatrix& m) {
  check_shape(m);
  if (binders.size() != ctor.arity) {
    throw std::invalid_argument("binder count differs from constructor arity");
  }
  ClauseMatrix out{{}, {}, m.default_rhs};
  for (const std::string& b : binders) {
    out.scrutinees.push_back(Expression::var(b));
  }
  for (std::size_t c = 0; c < m.columns(); ++c) {
    if (c != column) out.scrutinees.push_back(m.scrutinees[c]);
  }
  const Expression& target = m.scrutinees.at(column);
  for (const MatrixRow& row : m.rows) {
    const std::vector<Ndnf> rest = without(row.cells, column);
    for (const NConjunct& k : row.cells[column].disjuncts) {
      std::vector<Ndnf> cells;
      if (k.is(NConjunct::Kind::kPositive) && k.ctor == ctor) {
        for (const NConjunct& arg : k.args) cells.push_back(Ndnf::of(arg));
      } else if (k.is(NConjunct::Kind::kNegative) &&
                 !k.banned.contains(ctor)) {
        cells.assign(ctor.arity, Ndnf::wildcard());
      } else {
        continue;
      }
      cells.insert(cells.end(), rest.begin(), rest.end());
      out.rows.push_back(
          MatrixRow{std::move(cells), bind_all(row.rhs, k.vars, target)});
    }
  }
  return out;
}

ClauseMatrix default_matrix(std::size_t column,
                            const std::set<CtorName>& heads,
                            const ClauseMatrix& m) {
  check_shape(m);
  ClauseMatrix out{{}, {}, m.default_rhs};
  for (std::size_t c = 0; c < m.columns(); ++c) {
    if (c != column) out.scrutinees.push_back(m.scrutinees[c]);
  }
  const Expression& target = m.scrutinees.at(column);
  for (const MatrixRow& row : m.rows) {
    const std::vector<Ndnf> rest = without(row.cells, column);
    for (const NConjunct& k : row.cells[column].disjuncts) {
      if (!k.is(NConjunct::Kind::kNegative)) continue;
      if (!std::includes(heads.begin(), heads.end(), k.banned.begin(),
                         k.banned.end())) {
        throw std::invalid_argument(
            "default matrix: banned constructors outside the head set");
      }
      out.rows.push_back(MatrixRow{rest, bind_all(row.rhs, k.vars, target)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Compilation

namespace {

// Drops conjuncts that can match nothing and rows left with an empty cell.
ClauseMatrix prune(const ClauseMatrix& m) {
  ClauseMatrix out{m.scrutinees, {}, m.default_rhs};
  for (const MatrixRow& row : m.rows) {
    MatrixRow kept{{}, row.rhs};
    bool alive = true;
    for (const Ndnf& cell : row.cells) {
      Ndnf live;
      for (const NConjunct& k : cell.disjuncts) {
        if (k.satisfiable()) live.disjuncts.push_back(k);
      }
      if (live.disjuncts.empty()) {
        alive = false;
        break;
      }
      kept.cells.push_back(std::move(live));
    }
    if (alive) out.rows.push_back(std::move(kept));
  }
  return out;
}

const NConjunct* catch_all(const Ndnf& cell) {
  for (const NConjunct& k : cell.disjuncts) {
    if (k.is_catch_all()) return &k;
  }
  return nullptr;
}

DecisionTree compile_rec(const ClauseMatrix& input, FreshSupply& fresh) {
  ClauseMatrix m = prune(input);
  if (m.rows.empty()) return DecisionTree::leaf(m.default_rhs);

  const MatrixRow& first = m.rows.front();
  bool simple = true;
  Expression rhs = first.rhs;
  for (std::size_t c = 0; c < m.columns() && simple; ++c) {
    const NConjunct* k = catch_all(first.cells[c]);
    if (k == nullptr) {
      simple = false;
    } else {
      rhs = bind_all(rhs, k->vars, m.scrutinees[c]);
    }
  }
  if (simple) return DecisionTree::leaf(rhs);

  for (std::size_t c = 0; c < m.columns(); ++c) {
    std::set<CtorName> heads = head_ctors(m, c);
    if (heads.empty()) continue;
    std::vector<Arm> arms;
    for (const CtorName& ctor : heads) {
      std::vector<std::string> binders;
      for (std::size_t j = 0; j < ctor.arity; ++j) {
        binders.push_back(fresh.next());
      }
      DecisionTree sub = compile_rec(specialize(c, ctor, binders, m), fresh);
      arms.push_back(Arm{ctor, std::move(binders), std::move(sub)});
    }
    DecisionTree fallback = compile_rec(default_matrix(c, heads, m), fresh);
    return DecisionTree::switch_on(m.scrutinees[c], std::move(arms),
                                   std::move(fallback));
  }
  throw std::logic_error("compile: no column with head constructors");
}

}  // namespace

DecisionTree compile(const ClauseMatrix& m, FreshSupply& fresh) {
  check_shape(m);
  WfReport report = wf_matrix(m);
  if (!report.ok) throw CompileError(std::move(report));
  return compile_rec(m, fresh);
}

DecisionTree compile(const ClauseMatrix& m) {
  FreshSupply fresh;
  return compile(m, fresh);
}

namespace {

std::string check_tree_rec(const DecisionTree& t,
                           std::vector<Expression>& path) {
  if (t.is_leaf()) return {};
  if (std::find(path.begin(), path.end(), t.expr()) != path.end()) {
    return fmt::format("scrutinee {} switched twice on one path",
                       to_string(t.expr()));
  }
  std::set<CtorName> seen;
  for (const Arm& arm : t.arms()) {
    if (!seen.insert(arm.ctor).second) {
      return fmt::format("duplicate arm {}", to_string(arm.ctor));
    }
    if (arm.binders.size() != arm.ctor.arity) {
      return fmt::format("arm {} has {} binders", to_string(arm.ctor),
                         arm.binders.size());
    }
  }
  path.push_back(t.expr());
  for (const Arm& arm : t.arms()) {
    if (std::string e = check_tree_rec(arm.tree, path); !e.empty()) return e;
  }
  std::string e = check_tree_rec(t.default_arm(), path);
  path.pop_back();
  return e;
}

}  // namespace

std::string check_tree(const DecisionTree& t) {
  std::vector<Expression> path;
  return check_tree_rec(t, path);
}

// ---------------------------------------------------------------------------
// Execution

EvalResult eval_tree(const DecisionTree& t, const Substitution& env,
                     std::size_t fuel, const Definitions* defs) {
  if (t.is_leaf()) return eval(apply_subst(t.expr(), env), fuel, defs);
  EvalResult scrutinee = eval(apply_subst(t.expr(), env), fuel, defs);
  const Value* v = std::get_if<Value>(&scrutinee);
  if (v == nullptr) return scrutinee;
  for (const Arm& arm : t.arms()) {
    if (arm.ctor != v->ctor()) continue;
    Substitution extended = env;
    for (std::size_t i = 0; i < arm.binders.size(); ++i) {
      extended.push_back(Mapping{arm.binders[i], v->args()[i]});
    }
    return eval_tree(arm.tree, extended, fuel, defs);
  }
  return eval_tree(t.default_arm(), env, fuel, defs);
}

StepResult step_matrix(const ClauseMatrix& m) {
  check_shape(m);
  std::vector<Value> values;
  for (const Expression& s : m.scrutinees) {
    std::optional<Value> v = s.to_value();
    if (!v) return Stuck{"scrutinee " + to_string(s) + " is not a value"};
    values.push_back(*v);
  }
  std::vector<Expression> out;
  for (const MatrixRow& row : m.rows) {
    std::vector<Substitution> combos{Substitution{}};
    for (std::size_t c = 0; c < m.columns() && !combos.empty(); ++c) {
      SubstSet matches = match_pos(to_pattern(row.cells[c]), values[c]);
      std::vector<Substitution> next;
      for (const Substitution& prefix : combos) {
        for (const Substitution& s : matches.members()) {
          Substitution joined = prefix;
          joined.insert(joined.end(), s.begin(), s.end());
          next.push_back(std::move(joined));
        }
      }
      combos = std::move(next);
    }
    for (const Substitution& sigma : combos) {
      if (!is_proper(sigma)) {
        return Stuck{"row binds improperly: " + to_string(sigma)};
      }
      out.push_back(apply_subst(row.rhs, sigma));
    }
  }
  if (out.empty()) out.push_back(m.default_rhs);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Stepped{std::move(out)};
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_tree(const DecisionTree& t, int indent, std::string& out) {
  if (t.is_leaf()) {
    out += to_string(t.expr());
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  out += "switch " + to_string(t.expr()) + " {\n";
  for (const Arm& arm : t.arms()) {
    out += pad + arm.ctor.name;
    if (!arm.binders.empty()) {
      out += '(';
      for (std::size_t i = 0; i < arm.binders.size(); ++i) {
        if (i) out += ", ";
        out += arm.binders[i];
      }
      out += ')';
    }
    out += " => ";
    print_tree(arm.tree, indent + 2, out);
    out += '\n';
  }
  out += pad + "default => ";
  print_tree(t.default_arm(), indent + 2, out);
  out += '\n' + std::string(static_cast<std::size_t>(indent), ' ') + '}';
}

}  // namespace

std::string to_string(const DecisionTree& t) {
  std::string out;
  print_tree(t, 0, out);
  return out;
}

nlohmann::ordered_json to_json(const DecisionTree& t) {
  nlohmann::ordered_json j;
  if (t.is_leaf()) {
    j["leaf"] = to_string(t.expr());
    return j;
  }
  j["switch"] = to_string(t.expr());
  j["arms"] = nlohmann::ordered_json::array();
  for (const Arm& arm : t.arms()) {
    nlohmann::ordered_json a;
    a["ctor"] = arm.ctor.name;
    a["binders"] = arm.binders;
    a["tree"] = to_json(arm.tree);
    j["arms"].push_back(std::move(a));
  }
  j["default"] = to_json(t.default_arm());
  return j;
}

}  // namespace patc
