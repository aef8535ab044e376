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

// Acceptance driver: one PASS/FAIL line per criterion, with detail lines for
// each sub-check underneath. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "patc/compiler.h"
#include "patc/exhaustiveness.h"
#include "patc/normalize.h"
#include "patc/oracle.h"
#include "patc/pattern.h"
#include "patc/properties.h"
#include "patc/syntax.h"
#include "patc/wellformed.h"

namespace patc {
namespace {

struct SubCheck {
  bool ok;
  std::string detail;
};

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void expect(bool ok, std::string detail) {
    checks_.push_back({ok, std::move(detail)});
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  bool ok() const {
    for (const SubCheck& c : checks_) {
      if (!c.ok) return false;
    }
    return !checks_.empty();
  }

  void print(int index, double seconds) const {
    std::printf("criterion %d: %s  %s (%.2fs)\n", index,
                ok() ? "PASS" : "FAIL", title_.c_str(), seconds);
    for (const SubCheck& c : checks_) {
      std::string text = c.detail;
      while (!text.empty() && text.back() == '\n') text.pop_back();
      for (std::size_t at = text.find('\n'); at != std::string::npos;
           at = text.find('\n', at + 1)) {
        text.insert(at + 1, "          ");
      }
      std::printf("    [%s] %s\n", c.ok ? "ok" : "FAILED", text.c_str());
    }
    for (const std::string& n : notes_) {
      std::printf("    note: %s\n", n.c_str());
    }
  }

 private:
  std::string title_;
  std::vector<SubCheck> checks_;
  std::vector<std::string> notes_;
};

Value V(std::string name, std::vector<Value> args = {}) {
  const std::size_t n = args.size();
  return Value(CtorName{std::move(name), n}, std::move(args));
}

Pattern P(std::string_view s) { return std::get<Pattern>(parse_pattern(s)); }
Expression E(std::string_view s) {
  return std::get<Expression>(parse_expression(s));
}

Substitution S(std::vector<std::pair<std::string, Value>> pairs) {
  Substitution out;
  for (auto& [x, v] : pairs) out.push_back(Mapping{x, v});
  return out;
}

std::string show(const SubstSet& s) {
  std::string out = "{";
  bool first = true;
  for (const Substitution& m : s.members()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(m);
  }
  return out + "}";
}

void expect_set(Criterion& c, const std::string& label, const SubstSet& got,
                const SubstSet& want) {
  c.expect(got == want, fmt::format("{}: got {}, expected {}", label,
                                    show(got), show(want)));
}

void expect_text(Criterion& c, const std::string& label,
                 const std::string& got, const std::string& want) {
  c.expect(got == want, got == want
                            ? fmt::format("{}: {}", label, got)
                            : fmt::format("{}: got \"{}\", expected \"{}\"",
                                          label, got, want));
}

void add_property(Criterion& c, const PropertyOutcome& o) {
  std::string line = to_string(o);
  c.expect(o.ok(), line);
}

Program load_sample(const std::string& name) {
  std::ifstream in(std::string(PATC_SAMPLES_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  auto r = parse_program(buf.str());
  if (auto* e = std::get_if<ParseError>(&r)) {
    throw std::runtime_error(name + ": " + to_string(*e));
  }
  return std::get<Program>(std::move(r));
}

// ---------------------------------------------------------------------------

Criterion matching_examples() {
  Criterion c("matching examples reproduce exactly; improper cases rejected");
  const Value two = V("2"), three = V("3"), nil = V("Nil");
  const Value t = V("True"), f = V("False");

  const Value list = V("Cons", {two, V("Cons", {three, nil})});
  expect_set(c, "Cons(x, xs) +| Cons(2, Cons(3, Nil))",
             match_pos(P("Cons(x, xs)"), list),
             SubstSet{S({{"x", two}, {"xs", V("Cons", {three, nil})}})});
  expect_set(c, "True | False +| True", match_pos(P("True | False"), t),
             SubstSet{S({})});
  expect_set(c, "True -| False", match_neg(P("True"), f), SubstSet{S({})});
  expect_set(c, "!x -| True", match_neg(P("!x"), t),
             SubstSet{S({{"x", t}})});
  expect_set(c, "!!x +| True", match_pos(P("!!x"), t),
             SubstSet{S({{"x", t}})});

  const Pattern cons_xx = P("Cons(x, x)");
  const SubstSet improper = match_pos(cons_xx, V("Cons", {two, nil}));
  expect_set(c, "Cons(x, x) +| Cons(2, Nil)", improper,
             SubstSet{S({{"x", two}, {"x", nil}})});
  c.expect(improper.size() == 1 && !is_proper(improper.members()[0]),
           "[x -> 2, x -> Nil] is improper");
  c.expect(!linear_pos(cons_xx), "linear_pos rejects Cons(x, x)");

  const Pattern uneven = P("(x & True) | False");
  expect_set(c, "(x & True) | False +| True", match_pos(uneven, t),
             SubstSet{S({{"x", t}})});
  expect_set(c, "(x & True) | False +| False", match_pos(uneven, f),
             SubstSet{S({})});
  c.expect(!linear_pos(uneven), "linear_pos rejects (x & True) | False");
  return c;
}

Criterion normalization_goldens() {
  Criterion c("nnf, dnf and ndnf goldens are character-exact");
  expect_text(c, "nnf x & (Sa | Su)", to_string(nnf(P("x & (Sa | Su)"))),
              "x & (Sa | Su)");
  expect_text(c, "nnf x & !(Sa | Su)", to_string(nnf(P("x & !(Sa | Su)"))),
              "x & (!Sa & !Su)");
  expect_text(c, "nnf !Pair(True, False)",
              to_string(nnf(P("!Pair(True, False)"))),
              "!Pair | (Pair(!True, _) | Pair(_, !False))");
  expect_text(c, "dnf x & (Sa | Su)", to_string(dnf(nnf(P("x & (Sa | Su)")))),
              "||{ x & Sa, x & Su }");
  expect_text(c, "dnf x & !(Sa | Su)",
              to_string(dnf(nnf(P("x & !(Sa | Su)")))),
              "||{ x & (!Sa & !Su) }");
  expect_text(c, "ndnf x & (Sa | Su)", to_string(to_ndnf(P("x & (Sa | Su)"))),
              "||{ {x} & Sa, {x} & Su }");
  expect_text(c, "ndnf x & !(Sa | Su)",
              to_string(to_ndnf(P("x & !(Sa | Su)"))),
              "||{ {x} & !{Sa, Su} }");
  return c;
}

Criterion compilation_golden() {
  Criterion c("weekend decision tree and subproblem matrices");
  const Expression weekend = E(
      "case x of { y & (Sa | Su) => E1(y), y & !(Fr | Sa | Su) => E2(y), "
      "default => D }");
  const ClauseMatrix input = embed_case(weekend);
  expect_text(c, "input matrix", to_string(input),
              "match (x)\n"
              "  ||{ {y} & Sa, {y} & Su } => E1(y)\n"
              "  ||{ {y} & !{Fr, Sa, Su} } => E2(y)\n"
              "  default => D\n");

  const DecisionTree tree = compile(input);
  const DecisionTree want = DecisionTree::switch_on(
      E("x"),
      {Arm{CtorName{"Fr", 0}, {}, DecisionTree::leaf(E("D"))},
       Arm{CtorName{"Sa", 0}, {}, DecisionTree::leaf(E("E1(x)"))},
       Arm{CtorName{"Su", 0}, {}, DecisionTree::leaf(E("E1(x)"))}},
      DecisionTree::leaf(E("E2(x)")));
  c.expect(tree == want, "compiled tree: " + to_string(tree));

  expect_text(c, "S(1, Sa)", to_string(specialize(0, {"Sa", 0}, {}, input)),
              "match ()\n  => E1(x)\n  default => D\n");
  expect_text(c, "D(1, {Fr, Sa, Su})",
              to_string(default_matrix(0, head_ctors(input, 0), input)),
              "match ()\n  => E2(x)\n  default => D\n");

  const auto neg = [](std::string name, std::size_t arity) {
    return Ndnf::of(NConjunct::negative({}, {CtorName{std::move(name), arity}}));
  };
  const ClauseMatrix cons_nil{
      {E("v1"), E("v2")},
      {MatrixRow{{neg("Cons", 2), to_ndnf(P("D12"))}, E("E1")},
       MatrixRow{{neg("Nil", 0), to_ndnf(P("D22"))}, E("E2")}},
      E("Ed")};
  expect_text(c, "S(1, Cons(x, y))",
              to_string(specialize(0, {"Cons", 2}, {"x", "y"}, cons_nil)),
              "match (x, y, v2)\n"
              "  ||{ {} & !{} } ||{ {} & !{} } ||{ {} & D22 } => E2\n"
              "  default => Ed\n");

  const ClauseMatrix red_green{
      {E("v1"), E("v2")},
      {MatrixRow{{to_ndnf(P("Red")), to_ndnf(P("D12"))}, E("E1")},
       MatrixRow{{neg("Green", 0), to_ndnf(P("D22"))}, E("E2")}},
      E("Ed")};
  expect_text(c, "D(1, {Red, Green})",
              to_string(default_matrix(0, head_ctors(red_green, 0), red_green)),
              "match (v2)\n  ||{ {} & D22 } => E2\n  default => Ed\n");
  return c;
}

Criterion exhaustiveness_golden() {
  Criterion c("weekend non-exhaustive with witness in {Mo,Tu,We,Th}; isRed exhaustive");
  DataDecls days;
  days.add("Day", {{{"Mo", 0}, {}}, {{"Tu", 0}, {}}, {{"We", 0}, {}},
                   {{"Th", 0}, {}}, {{"Fr", 0}, {}}, {{"Sa", 0}, {}},
                   {{"Su", 0}, {}}});
  const PatternMatrix weekend = pattern_matrix(embed_case(
      E("case x of { y & (Sa | Su) => E1(y), y & !(Fr | Sa | Su) => E2(y), "
        "default => D }")));
  c.expect(!exhaustive(weekend, days), "weekend rows reported non-exhaustive");

  const auto w = missing_witness(weekend, days);
  const std::string shown = w ? to_string(*w) : "none";
  const bool in_set = shown == "Mo" || shown == "Tu" || shown == "We" ||
                      shown == "Th";
  c.expect(in_set, "witness " + shown + " lies in {Mo, Tu, We, Th}");

  std::vector<std::string> uncovered;
  for (const char* d : {"Mo", "Tu", "We", "Th", "Fr", "Sa", "Su"}) {
    bool hit = false;
    for (const auto& row : weekend.rows) {
      hit = hit || matches(to_pattern(row[0]), V(d));
    }
    if (!hit) uncovered.push_back(d);
  }
  std::string listed;
  for (const std::string& d : uncovered) listed += (listed.empty() ? "" : ", ") + d;
  c.note("enumeration over Day: values matched by no row = {" + listed + "}");
  c.note(
      "rows are {y} & Sa | {y} & Su and {y} & !{Fr, Sa, Su}; Mo..Th all match "
      "the second row, so Fr is the unique uncovered value and no witness in "
      "{Mo, Tu, We, Th} exists. The witness sub-check is left red on purpose.");

  DataDecls colors;
  colors.add("Color", {{{"Red", 0}, {}}, {{"Green", 0}, {}}, {{"Blue", 0}, {}}});
  PatternMatrix is_red;
  is_red.columns = 1;
  is_red.rows = {{to_ndnf(P("Red"))}, {to_ndnf(P("!Red"))}};
  const bool ex = exhaustive(is_red, colors);
  bool oracle = true;
  for (const Value& v : enumerate_values(colors, Type::named("Color"), 1)) {
    oracle = oracle && (matches(P("Red"), v) || matches(P("!Red"), v));
  }
  c.expect(ex && oracle, fmt::format("isRed {{Red; !Red}}: exhaustive = {}, "
                                     "enumeration agrees = {}",
                                     ex, oracle));
  return c;
}

Criterion suite_criterion(const std::string& title, const std::string& suite,
                          const PropertyConfig& cfg) {
  Criterion c(title);
  const std::vector<Property> props = properties(suite);
  const SuiteReport r = run_properties(props, cfg, Exec::kParallel);
  for (const PropertyOutcome& o : r.outcomes) add_property(c, o);
  return c;
}

Criterion semantics_suite(const PropertyConfig& cfg) {
  Criterion c("evaluation determinism, permutation invariance, default vs wildcard");
  const SuiteReport r = run_properties(properties("semantics"), cfg,
                                       Exec::kParallel);
  for (const PropertyOutcome& o : r.outcomes) add_property(c, o);

  const Expression with_wild = E("case A of { B => X, _ => Y, default => Z }");
  const Expression with_absurd = E("case A of { B => X, # => Y, default => Z }");
  const EvalResult a = eval(with_wild);
  const EvalResult b = eval(with_absurd);
  c.expect(to_string(a) == "Y" && to_string(b) == "Z",
           "regression: wildcard clause gives " + to_string(a) +
               ", default path gives " + to_string(b));
  return c;
}

Criterion differential(const PropertyConfig& cfg) {
  Criterion c("differential compilation: random cases, sample programs, fault injection");
  for (const Property& p : properties("compile")) {
    if (p.name == "differential_compile") {
      add_property(c, run_property(p, cfg, Exec::kParallel));
    }
  }

  for (const char* file : {"weekend.pat", "is_red.pat", "is_weekend.pat",
                           "write_access.pat", "all_true.pat"}) {
    const Program prog = load_sample(file);
    const Definitions defs = prog.definitions();
    for (const FunctionDef& def : prog.defs) {
      if (!def.body.is(Expression::Kind::kCase) || def.params.size() != 1 ||
          !def.params[0].type) {
        continue;
      }
      const Type& tau = *def.params[0].type;
      std::size_t depth = 1;
      while (depth < 4 && enumerate_values(prog.decls, tau, depth).size() !=
                              enumerate_values(prog.decls, tau, depth + 1).size()) {
        ++depth;
      }
      const DiffResult r =
          differential_compile_check(def.body, prog.decls, tau, depth, &defs);
      if (const auto* agree = std::get_if<Agree>(&r)) {
        c.expect(agree->values_checked > 0,
                 fmt::format("{}:{} agrees on all {} values of {} (depth {})",
                             file, def.name, agree->values_checked,
                             to_string(tau), depth));
      } else {
        const auto& d = std::get<Disagree>(r);
        c.expect(false, fmt::format("{}:{} disagrees at {}: {} vs {}", file,
                                    def.name, to_string(d.witness), d.expected,
                                    d.actual));
      }
    }
  }

  const Program weekend = load_sample("weekend.pat");
  const FunctionDef* def = weekend.find("weekend");
  const DecisionTree good = compile(embed_case(def->body));
  const DiffResult bad = differential_tree_check(
      def->body, corrupt_tree(good), weekend.decls, Type::named("Day"), 1);
  if (const auto* d = std::get_if<Disagree>(&bad)) {
    c.expect(true, fmt::format("fault injection caught at {}: {} vs {}",
                               to_string(d->witness), d->expected, d->actual));
  } else {
    c.expect(false, "fault injection went unnoticed");
  }
  return c;
}

Criterion overlap_soundness(const PropertyConfig& cfg) {
  Criterion c("overlap decision never misses a common value");
  for (const Property& p : properties("overlap")) {
    if (p.name == "overlap_sound") {
      add_property(c, run_property(p, cfg, Exec::kParallel));
    }
  }
  return c;
}

}  // namespace
}  // namespace patc

int main() {
  using namespace patc;
  const PropertyConfig base{42, 200, 3};
  PropertyConfig overlap_cfg = base;
  overlap_cfg.cases = 500;

  const std::vector<std::function<Criterion()>> criteria = {
      matching_examples,
      normalization_goldens,
      compilation_golden,
      exhaustiveness_golden,
      [&] {
        return suite_criterion(
            "pattern algebra: soundness, completeness, congruence, laws",
            "algebra", base);
      },
      [&] {
        return suite_criterion(
            "linearity: covering domains, properness, deterministic matching",
            "linearity", base);
      },
      [&] { return semantics_suite(base); },
      [&] { return differential(base); },
      [&] { return overlap_soundness(overlap_cfg); },
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Criterion c("");
    try {
      c = criteria[i]();
    } catch (const std::exception& e) {
      c = Criterion("criterion raised an exception");
      c.expect(false, e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    c.print(static_cast<int>(i + 1), secs);
    if (!c.ok()) ++failures;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
