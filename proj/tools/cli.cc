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

#include "patc/cli.h"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "patc/compiler.h"
#include "patc/exhaustiveness.h"
#include "patc/normalize.h"
#include "patc/properties.h"
#include "patc/syntax.h"
#include "patc/wellformed.h"

namespace patc::cli {
namespace {

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void diagnose(Streams& io, const std::string& file, SourcePos pos,
              std::string_view severity, std::string_view message) {
  fmt::print(io.err, "{}:{}:{}: {}: {}\n", file, pos.line, pos.col, severity,
             message);
}

// Reads and parses FILE, printing diagnostics on failure.
std::optional<Program> load(Streams& io, const std::string& file) {
  std::optional<std::string> text = read_file(file);
  if (!text) {
    fmt::print(io.err, "patc: cannot read {}\n", file);
    return std::nullopt;
  }
  auto parsed = parse_program(*text);
  if (const auto* e = std::get_if<ParseError>(&parsed)) {
    diagnose(io, file, SourcePos{e->line, e->col}, "error", e->message);
    return std::nullopt;
  }
  return std::get<Program>(std::move(parsed));
}

void collect_cases(const Expression& e, std::vector<Expression>& out) {
  switch (e.kind()) {
    case Expression::Kind::kVar:
      return;
    case Expression::Kind::kCtor:
    case Expression::Kind::kCall:
      for (const Expression& a : e.args()) collect_cases(a, out);
      return;
    case Expression::Kind::kCase:
      out.push_back(e);
      collect_cases(e.scrutinee(), out);
      for (const Clause& c : e.clauses()) collect_cases(c.rhs, out);
      collect_cases(e.default_rhs(), out);
      return;
  }
}

struct Body {
  std::string name;
  SourcePos pos;
  const Expression* expr;
  const FunctionDef* def;  // null for main
};

std::vector<Body> bodies(const Program& p) {
  std::vector<Body> out;
  for (const FunctionDef& d : p.defs) out.push_back({d.name, d.pos, &d.body, &d});
  if (p.main) out.push_back({"main", p.main_pos, &*p.main, nullptr});
  return out;
}

struct CheckOptions {
  std::string file;
  bool typed = false;
  bool type_aware_overlap = false;
  bool untyped = false;
};

std::size_t check_types(Streams& io, const CheckOptions& o, const Program& p,
                        const Body& b) {
  const FunctionSigs sigs = p.signatures();
  Context ctx;
  if (b.def != nullptr) {
    for (const Param& param : b.def->params) {
      if (!param.type) {
        diagnose(io, o.file, b.pos, "error",
                 fmt::format("in {}: parameter {} needs a type annotation "
                             "for --typed",
                             b.name, param.name));
        return 1;
      }
      ctx.emplace_back(param.name, *param.type);
    }
  }
  std::optional<Ill> ill;
  if (b.def != nullptr && b.def->result) {
    ill = check_expr(ctx, *b.expr, *b.def->result, p.decls, &sigs);
  } else {
    ExprTyping t = type_expr(ctx, *b.expr, p.decls, &sigs);
    if (const auto* bad = std::get_if<Ill>(&t)) ill = *bad;
  }
  if (!ill) return 0;
  diagnose(io, o.file, b.pos, "error",
           fmt::format("in {}: type error: {}", b.name, ill->message));
  return 1;
}

void report_exhaustiveness(Streams& io, const CheckOptions& o,
                           const Program& p, const Body& b,
                           const Expression& c) {
  try {
    PatternMatrix pm = pattern_matrix(embed_case(c));
    std::optional<std::vector<Witness>> w = missing_witness(pm, p.decls);
    if (!w) return;
    diagnose(io, o.file, b.pos, "note",
             fmt::format("in {}: clauses of the case on {} are not exhaustive; "
                         "{} falls through to the default",
                         b.name, to_string(c.scrutinee()), to_string(*w)));
  } catch (const SignatureError& e) {
    diagnose(io, o.file, b.pos, "warning",
             fmt::format("in {}: exhaustiveness of the case on {} not checked: "
                         "{}",
                         b.name, to_string(c.scrutinee()), e.what()));
  }
}

int check(Streams& io, const CheckOptions& o) {
  std::optional<Program> p = load(io, o.file);
  if (!p) return kUsageError;
  std::size_t errors = 0;
  if (!o.untyped) {
    for (const UndeclaredCtor& u : undeclared_constructors(*p)) {
      diagnose(io, o.file, u.pos, "error",
               fmt::format("in {}: undeclared constructor {}", u.context,
                           to_string(u.ctor)));
      ++errors;
    }
  }
  const DataDecls* decls = o.type_aware_overlap ? &p->decls : nullptr;
  for (const Body& b : bodies(*p)) {
    WfReport wf = wf_expr(*b.expr, decls);
    for (const Violation& v : wf.violations) {
      diagnose(io, o.file, b.pos, "error",
               fmt::format("in {}: {}", b.name, to_string(v)));
      ++errors;
    }
    if (!o.untyped) {
      std::vector<Expression> cases;
      collect_cases(*b.expr, cases);
      for (const Expression& c : cases) report_exhaustiveness(io, o, *p, b, c);
    }
    if (o.typed) errors += check_types(io, o, *p, b);
  }
  if (errors == 0) {
    fmt::print(io.out, "{}: ok\n", o.file);
    return kOk;
  }
  fmt::print(io.out, "{}: {} error{}\n", o.file, errors, errors == 1 ? "" : "s");
  return kCheckFailed;
}

struct CompileOptions {
  std::string file;
  std::string format = "text";
  std::string output;
};

std::string params_of(const FunctionDef& d) {
  std::vector<std::string> names;
  for (const Param& p : d.params) names.push_back(p.name);
  return fmt::format("{}", fmt::join(names, ", "));
}

int compile_cmd(Streams& io, const CompileOptions& o) {
  std::optional<Program> p = load(io, o.file);
  if (!p) return kUsageError;
  nlohmann::ordered_json json = nlohmann::ordered_json::array();
  std::string text;
  for (const FunctionDef& d : p->defs) {
    DecisionTree tree = DecisionTree::leaf(d.body);
    if (d.body.is(Expression::Kind::kCase)) {
      try {
        tree = compile(embed_case(d.body));
      } catch (const CompileError& e) {
        for (const Violation& v : e.report().violations) {
          diagnose(io, o.file, d.pos, "error",
                   fmt::format("in {}: {}", d.name, to_string(v)));
        }
        return kCheckFailed;
      }
    }
    if (o.format == "json") {
      nlohmann::ordered_json entry;
      entry["name"] = d.name;
      entry["params"] = nlohmann::ordered_json::array();
      for (const Param& param : d.params) entry["params"].push_back(param.name);
      entry["tree"] = to_json(tree);
      json.push_back(std::move(entry));
    } else {
      text += fmt::format("def {}({}) =\n{}\n", d.name, params_of(d),
                          to_string(tree));
    }
  }
  const std::string rendered = o.format == "json" ? json.dump(2) + "\n" : text;
  if (o.output.empty()) {
    io.out << rendered;
    return kOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  file << rendered;
  if (!file) {
    fmt::print(io.err, "patc: cannot write {}\n", o.output);
    return kUsageError;
  }
  return kOk;
}

struct EvalOptions {
  std::string file;
  std::string entry;
  std::string args;
  std::size_t fuel = kDefaultFuel;
};

int eval_cmd(Streams& io, const EvalOptions& o) {
  std::optional<Program> p = load(io, o.file);
  if (!p) return kUsageError;
  const Definitions defs = p->definitions();
  std::optional<Expression> target;
  if (o.entry == "main" && p->main && !p->find("main")) {
    if (!o.args.empty()) {
      fmt::print(io.err, "patc: main takes no arguments\n");
      return kUsageError;
    }
    target = *p->main;
  } else {
    const FunctionDef* d = p->find(o.entry);
    if (d == nullptr) {
      fmt::print(io.err, "patc: no definition named {}\n", o.entry);
      return kUsageError;
    }
    auto call = parse_expression(fmt::format("{}({})", o.entry, o.args));
    if (const auto* e = std::get_if<ParseError>(&call)) {
      fmt::print(io.err, "--args:{}:{}: error: {}\n", e->line,
                 e->col > o.entry.size() + 1 ? e->col - o.entry.size() - 1 : 1,
                 e->message);
      return kUsageError;
    }
    target = std::get<Expression>(call);
    if (target->args().size() != d->params.size()) {
      fmt::print(io.err, "patc: {} expects {} argument(s), got {}\n", o.entry,
                 d->params.size(), target->args().size());
      return kUsageError;
    }
  }
  EvalResult r = eval(*target, o.fuel, &defs);
  fmt::print(io.out, "{}\n", to_string(r));
  return std::holds_alternative<Value>(r) ? kOk : kCheckFailed;
}

int norm_cmd(Streams& io, const std::string& source, const std::string& stage) {
  auto parsed = parse_pattern(source);
  if (const auto* e = std::get_if<ParseError>(&parsed)) {
    fmt::print(io.err, "--pattern:{}:{}: error: {}\n", e->line, e->col,
               e->message);
    return kUsageError;
  }
  const Pattern& p = std::get<Pattern>(parsed);
  const Nnf n = nnf(p);
  if (stage == "nnf") {
    fmt::print(io.out, "{}\n", to_string(n));
  } else if (stage == "dnf") {
    fmt::print(io.out, "{}\n", to_string(dnf(n)));
  } else if (stage == "ndnf") {
    fmt::print(io.out, "{}\n", to_string(to_ndnf(p)));
  } else {
    fmt::print(io.out, "nnf:  {}\ndnf:  {}\nndnf: {}\n", to_string(n),
               to_string(dnf(n)), to_string(to_ndnf(p)));
  }
  return kOk;
}

struct FuzzOptions {
  PropertyConfig config;
  std::string suite = "all";
  bool serial = false;
};

int fuzz_cmd(Streams& io, const FuzzOptions& o) {
  std::vector<Property> props = properties(o.suite);
  SuiteReport report = run_properties(
      props, o.config, o.serial ? Exec::kSerial : Exec::kParallel);
  std::size_t failed = 0;
  for (const PropertyOutcome& outcome : report.outcomes) {
    fmt::print(io.out, "{}\n", to_string(outcome));
    if (!outcome.ok()) ++failed;
  }
  fmt::print(io.out,
             "{} properties, {} failed (seed {}, depth {}, {} cases each)\n",
             report.outcomes.size(), failed, o.config.seed, o.config.depth,
             o.config.cases);
  return failed == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Streams io{out, err};
  CLI::App app{"Order-independent pattern matching toolkit", "patc"};
  app.require_subcommand(1);

  CheckOptions check_opts;
  CLI::App* check_app = app.add_subcommand(
      "check", "Check wellformedness, overlap, exhaustiveness and typing");
  check_app->add_option("FILE", check_opts.file, "Program file")->required();
  check_app->add_flag("--typed", check_opts.typed,
                      "Type-check definitions with annotated parameters");
  check_app->add_flag("--type-aware-overlap", check_opts.type_aware_overlap,
                      "Use data declarations when deciding overlap");
  check_app->add_flag("--untyped", check_opts.untyped,
                      "Admit undeclared constructors; skip exhaustiveness");

  CompileOptions compile_opts;
  CLI::App* compile_app =
      app.add_subcommand("compile", "Compile definitions to decision trees");
  compile_app->add_option("FILE", compile_opts.file, "Program file")
      ->required();
  compile_app->add_option("--format", compile_opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  compile_app->add_option("-o,--output", compile_opts.output, "Output file");

  EvalOptions eval_opts;
  CLI::App* eval_app = app.add_subcommand("eval", "Evaluate a definition");
  eval_app->add_option("FILE", eval_opts.file, "Program file")->required();
  eval_app->add_option("--entry", eval_opts.entry, "Definition to call, or main")
      ->required();
  eval_app->add_option("--args", eval_opts.args,
                       "Comma-separated argument expressions");
  eval_app->add_option("--fuel", eval_opts.fuel, "Maximum number of steps")
      ->check(CLI::PositiveNumber);

  std::string norm_pattern;
  std::string norm_stage;
  CLI::App* norm_app = app.add_subcommand("norm", "Print normal forms");
  norm_app->add_option("--pattern", norm_pattern, "Pattern to normalize")
      ->required();
  norm_app->add_option("--stage", norm_stage, "nnf, dnf or ndnf")
      ->check(CLI::IsMember({"nnf", "dnf", "ndnf"}));

  FuzzOptions fuzz_opts;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  CLI::App* fuzz_app = app.add_subcommand("fuzz", "Run seeded property suites");
  fuzz_app->add_option("--seed", fuzz_opts.config.seed, "Base seed");
  fuzz_app->add_option("--depth", fuzz_opts.config.depth, "Universe depth")
      ->check(CLI::Range(1, 6));
  fuzz_app->add_option("--cases", fuzz_opts.config.cases,
                       "Required cases per property");
  fuzz_app->add_option("--suite", fuzz_opts.suite, "Suite to run")
      ->check(CLI::IsMember(suites));
  fuzz_app->add_flag("--serial", fuzz_opts.serial,
                     "Run cases on one thread");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*check_app) return check(io, check_opts);
    if (*compile_app) return compile_cmd(io, compile_opts);
    if (*eval_app) return eval_cmd(io, eval_opts);
    if (*norm_app) return norm_cmd(io, norm_pattern, norm_stage);
    if (*fuzz_app) return fuzz_cmd(io, fuzz_opts);
  } catch (const std::exception& e) {
    fmt::print(err, "patc: internal error: {}\n", e.what());
    return kCheckFailed;
  }
  return kUsageError;
}

}  // namespace patc::cli
