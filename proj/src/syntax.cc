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

#include "patc/syntax.h"

#include <fmt/format.h>

#include <cctype>
#include <set>

namespace patc {

std::string to_string(const ParseError& e) {
  return fmt::format("{}:{}: {}", e.line, e.col, e.message);
}

const FunctionDef* Program::find(const std::string& name) const {
  for (const FunctionDef& d : defs) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

Definitions Program::definitions() const {
  Definitions out;
  for (const FunctionDef& d : defs) {
    Definition def{d.name, {}, d.body};
    for (const Param& p : d.params) def.params.push_back(p.name);
    out.emplace(d.name, std::move(def));
  }
  return out;
}

FunctionSigs Program::signatures() const {
  FunctionSigs out;
  for (const FunctionDef& d : defs) {
    FunctionSig sig;
    bool typed = true;
    for (const Param& p : d.params) {
      if (!p.type) typed = false;
      else sig.params.push_back(*p.type);
    }
    sig.result = d.result;
    if (typed) out.emplace(d.name, std::move(sig));
  }
  return out;
}

namespace {

enum class Tok { kLower, kUpper, kSym, kEnd };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

struct Failure {
  ParseError error;
};

[[noreturn]] void fail(SourcePos pos, std::string message) {
  throw Failure{ParseError{pos.line, pos.col, std::move(message)}};
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.col = 1;
      } else {
        ++pos.col;
      }
    }
  };
  auto ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '\'';
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "//") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const SourcePos start = pos;
    if (c == '$') fail(start, "identifiers starting with '$' are reserved");
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string text(src.substr(i, j - i));
      Tok kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::kUpper
                                                              : Tok::kLower;
      out.push_back({kind, std::move(text), start});
      advance(j - i);
      continue;
    }
    for (std::string_view sym : {"=>", ":="}) {
      if (src.substr(i, 2) == sym) {
        out.push_back({Tok::kSym, std::string(sym), start});
        advance(2);
        goto next;
      }
    }
    if (std::string_view("(){},;|&!_#=:*+").find(c) != std::string_view::npos) {
      if (c == '_' && i + 1 < src.size() && ident_char(src[i + 1])) {
        fail(start, "identifiers must start with a letter");
      }
      out.push_back({Tok::kSym, std::string(1, c), start});
      advance(1);
      continue;
    }
    fail(start, fmt::format("unexpected character '{}'", c));
  next:;
  }
  out.push_back({Tok::kEnd, "", pos});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {
    for (std::size_t i = 0; i + 1 < toks_.size(); ++i) {
      if (toks_[i].kind == Tok::kLower && toks_[i].text == "data" &&
          toks_[i + 1].kind == Tok::kUpper) {
        data_names_.insert(toks_[i + 1].text);
      }
    }
  }

  Program program() {
    Program prog;
    while (!at_end()) {
      if (is_word("data")) {
        data(prog);
      } else if (is_word("def")) {
        def(prog);
      } else if (is_word("main")) {
        const SourcePos pos = peek().pos;
        next();
        expect(":=");
        if (prog.main) fail(pos, "duplicate main");
        prog.main = expr();
        prog.main_pos = pos;
        expect(";");
      } else {
        fail(peek().pos, fmt::format("expected 'data', 'def' or 'main', got {}",
                                     describe(peek())));
      }
    }
    return prog;
  }

  Pattern pattern_only() {
    Pattern p = pattern();
    finish();
    return p;
  }
  Expression expression_only() {
    Expression e = expr();
    finish();
    return e;
  }
  Type type_only() {
    Type t = type();
    finish();
    return t;
  }

 private:
  static std::string describe(const Token& t) {
    if (t.kind == Tok::kEnd) return "end of input";
    return "'" + t.text + "'";
  }

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == Tok::kEnd; }
  bool is_sym(std::string_view s) const {
    return peek().kind == Tok::kSym && peek().text == s;
  }
  bool is_word(std::string_view s) const {
    return peek().kind == Tok::kLower && peek().text == s;
  }
  bool accept(std::string_view s) {
    if (!is_sym(s)) return false;
    next();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) {
      fail(peek().pos, fmt::format("expected '{}', got {}", s, describe(peek())));
    }
  }
  void finish() {
    if (!at_end()) {
      fail(peek().pos, fmt::format("unexpected {}", describe(peek())));
    }
  }
  static bool keyword(const std::string& s) {
    return s == "data" || s == "def" || s == "case" || s == "of" ||
           s == "default" || s == "main";
  }
  std::string lower() {
    if (peek().kind != Tok::kLower || keyword(peek().text)) {
      fail(peek().pos, fmt::format("expected a lowercase identifier, got {}",
                                   describe(peek())));
    }
    return next().text;
  }
  std::string upper() {
    if (peek().kind != Tok::kUpper) {
      fail(peek().pos, fmt::format("expected a constructor name, got {}",
                                   describe(peek())));
    }
    return next().text;
  }

  Type type() {
    Type left = product();
    if (accept("+")) return Type::sum(left, type());
    return left;
  }
  Type product() {
    Type left = type_atom();
    if (accept("*")) return Type::pair(left, product());
    return left;
  }
  Type type_atom() {
    if (accept("(")) {
      Type t = type();
      expect(")");
      return t;
    }
    std::string name = upper();
    if (name == "Bool" && !data_names_.contains("Bool")) return Type::boolean();
    return Type::named(std::move(name));
  }

  void data(Program& prog) {
    const SourcePos pos = next().pos;
    std::string name = upper();
    expect("=");
    std::vector<CtorSig> ctors;
    do {
      std::string c = upper();
      std::vector<Type> args;
      if (accept("(")) {
        do {
          args.push_back(type());
        } while (accept(","));
        expect(")");
      }
      ctors.push_back(CtorSig{CtorName{c, args.size()}, std::move(args)});
    } while (accept("|"));
    expect(";");
    try {
      prog.decls.add(name, std::move(ctors));
    } catch (const std::invalid_argument& e) {
      fail(pos, e.what());
    }
  }

  void def(Program& prog) {
    next();
    FunctionDef d{{}, {}, std::nullopt, Expression::var("_"), peek().pos};
    d.name = lower();
    if (prog.find(d.name)) fail(d.pos, "duplicate definition " + d.name);
    expect("(");
    if (!is_sym(")")) {
      do {
        Param p{lower(), std::nullopt};
        if (accept(":")) p.type = type();
        d.params.push_back(std::move(p));
      } while (accept(","));
    }
    expect(")");
    if (accept(":")) d.result = type();
    expect(":=");
    d.body = expr();
    expect(";");
    prog.defs.push_back(std::move(d));
  }

  std::vector<Expression> expr_args() {
    std::vector<Expression> args;
    expect("(");
    if (!is_sym(")")) {
      do {
        args.push_back(expr());
      } while (accept(","));
    }
    expect(")");
    return args;
  }

  Expression expr() {
    if (accept("(")) {
      Expression e = expr();
      expect(")");
      return e;
    }
    if (is_word("case")) {
      next();
      Expression scrutinee = expr();
      if (!is_word("of")) fail(peek().pos, "expected 'of'");
      next();
      expect("{");
      std::vector<Clause> clauses;
      while (!is_word("default")) {
        if (at_end() || is_sym("}")) {
          fail(peek().pos, "case without a default clause");
        }
        Pattern p = pattern();
        expect("=>");
        Expression rhs = expr();
        clauses.push_back(Clause{std::move(p), std::move(rhs)});
        expect(",");
      }
      next();
      expect("=>");
      Expression d = expr();
      accept(",");
      expect("}");
      return Expression::case_of(std::move(scrutinee), std::move(clauses),
                                 std::move(d));
    }
    if (peek().kind == Tok::kUpper) {
      std::string name = next().text;
      std::vector<Expression> args;
      if (is_sym("(")) args = expr_args();
      return Expression::ctor(std::move(name), std::move(args));
    }
    std::string name = lower();
    if (is_sym("(")) return Expression::call(std::move(name), expr_args());
    return Expression::var(std::move(name));
  }

  Pattern pattern() {
    Pattern left = conjunction();
    if (accept("|")) return Pattern::disj(left, pattern());
    return left;
  }
  Pattern conjunction() {
    Pattern left = unary();
    if (accept("&")) return Pattern::conj(left, conjunction());
    return left;
  }
  Pattern unary() {
    if (accept("!")) return Pattern::neg(unary());
    if (accept("_")) return Pattern::wildcard();
    if (accept("#")) return Pattern::absurd();
    if (accept("(")) {
      Pattern p = pattern();
      expect(")");
      return p;
    }
    if (peek().kind == Tok::kUpper) {
      std::string name = next().text;
      std::vector<Pattern> args;
      if (accept("(")) {
        do {
          args.push_back(pattern());
        } while (accept(","));
        expect(")");
      }
      return Pattern::ctor(std::move(name), std::move(args));
    }
    return Pattern::var(lower());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> data_names_;
};

template <typename T, typename F>
std::variant<T, ParseError> guarded(std::string_view source, F body) {
  try {
    Parser parser(lex(source));
    return body(parser);
  } catch (const Failure& f) {
    return f.error;
  }
}

void collect_ctors(const Pattern& p, std::set<CtorName>& out) {
  if (p.is(Pattern::Kind::kCtor)) out.insert(p.ctor_name());
  for (const Pattern& c : p.children()) collect_ctors(c, out);
}

void collect_ctors(const Expression& e, std::set<CtorName>& out) {
  switch (e.kind()) {
    case Expression::Kind::kVar:
      return;
    case Expression::Kind::kCtor:
      out.insert(e.ctor_name());
      [[fallthrough]];
    case Expression::Kind::kCall:
      for (const Expression& a : e.args()) collect_ctors(a, out);
      return;
    case Expression::Kind::kCase:
      collect_ctors(e.scrutinee(), out);
      for (const Clause& c : e.clauses()) {
        collect_ctors(c.pattern, out);
        collect_ctors(c.rhs, out);
      }
      collect_ctors(e.default_rhs(), out);
      return;
  }
}

}  // namespace

std::variant<Program, ParseError> parse_program(std::string_view source) {
  return guarded<Program>(source, [](Parser& p) { return p.program(); });
}

std::variant<Pattern, ParseError> parse_pattern(std::string_view source) {
  return guarded<Pattern>(source, [](Parser& p) { return p.pattern_only(); });
}

std::variant<Expression, ParseError> parse_expression(std::string_view source) {
  return guarded<Expression>(source,
                             [](Parser& p) { return p.expression_only(); });
}

std::variant<Type, ParseError> parse_type(std::string_view source) {
  return guarded<Type>(source, [](Parser& p) { return p.type_only(); });
}

std::vector<UndeclaredCtor> undeclared_constructors(const Program& p) {
  std::vector<UndeclaredCtor> out;
  auto check = [&](const Expression& e, SourcePos pos, const std::string& where) {
    std::set<CtorName> used;
    collect_ctors(e, used);
    for (const CtorName& c : used) {
      if (p.decls.signature_of(c).empty()) out.push_back({pos, where, c});
    }
  };
  for (const FunctionDef& d : p.defs) check(d.body, d.pos, d.name);
  if (p.main) check(*p.main, p.main_pos, "main");
  return out;
}

std::string to_source(const Program& p) {
  std::string out;
  for (const std::string& name : p.decls.type_names()) {
    out += "data " + name + " =";
    bool first = true;
    for (const CtorSig& s : p.decls.ctors_of(name)) {
      out += first ? " " : " | ";
      first = false;
      out += s.ctor.name;
      if (!s.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < s.args.size(); ++i) {
          if (i) out += ", ";
          out += to_string(s.args[i]);
        }
        out += ')';
      }
    }
    out += ";\n";
  }
  for (const FunctionDef& d : p.defs) {
    out += "def " + d.name + "(";
    for (std::size_t i = 0; i < d.params.size(); ++i) {
      if (i) out += ", ";
      out += d.params[i].name;
      if (d.params[i].type) out += " : " + to_string(*d.params[i].type);
    }
    out += ")";
    if (d.result) out += " : " + to_string(*d.result);
    out += " := " + to_string(d.body) + ";\n";
  }
  if (p.main) out += "main := " + to_string(*p.main) + ";\n";
  return out;
}

bool same_program(const Program& a, const Program& b) {
  if (a.decls.type_names() != b.decls.type_names()) return false;
  for (const std::string& t : a.decls.type_names()) {
    const auto& x = a.decls.ctors_of(t);
    const auto& y = b.decls.ctors_of(t);
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].ctor != y[i].ctor || x[i].args != y[i].args) return false;
    }
  }
  if (a.defs.size() != b.defs.size() || a.main != b.main) return false;
  for (std::size_t i = 0; i < a.defs.size(); ++i) {
    const FunctionDef& x = a.defs[i];
    const FunctionDef& y = b.defs[i];
    if (x.name != y.name || x.params != y.params || x.result != y.result ||
        x.body != y.body) {
      return false;
    }
  }
  return true;
}

}  // namespace patc
