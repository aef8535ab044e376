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

#ifndef PATC_SYNTAX_H_
#define PATC_SYNTAX_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "patc/expr.h"
#include "patc/pattern.h"
#include "patc/semantics.h"
#include "patc/typing.h"

namespace patc {

struct SourcePos {
  std::size_t line = 1;
  std::size_t col = 1;
};

struct ParseError {
  std::size_t line = 1;
  std::size_t col = 1;
  std::string message;
};

std::string to_string(const ParseError& e);

struct Param {
  std::string name;
  std::optional<Type> type;

  friend bool operator==(const Param&, const Param&) = default;
};

struct FunctionDef {
  std::string name;
  std::vector<Param> params;
  std::optional<Type> result;
  Expression body;
  SourcePos pos;
};

struct Program {
  DataDecls decls;
  std::vector<FunctionDef> defs;
  std::optional<Expression> main;
  SourcePos main_pos;

  const FunctionDef* find(const std::string& name) const;
  Definitions definitions() const;
  FunctionSigs signatures() const;
};

/// Grammar:
///   program := (data | def | main)*
///   data    := 'data' Upper '=' ctor ('|' ctor)* ';'
///   ctor    := Upper ('(' type (',' type)* ')')?
///   type    := prod ('+' type)? ; prod := atom ('*' prod)?
///   atom    := Upper | '(' type ')'
///   def     := 'def' lower '(' (param (',' param)*)? ')' (':' type)? ':=' expr ';'
///   param   := lower (':' type)?
///   main    := 'main' ':=' expr ';'
///   expr    := lower | lower '(' exprs ')' | Upper ('(' exprs ')')?
///            | 'case' expr 'of' '{' (pat '=>' expr ',')* 'default' '=>' expr ','? '}'
///            | '(' expr ')'
///   pat     := and ('|' pat)? ; and := unary ('&' and)? ;
///   unary   := '!' unary | '_' | '#' | lower | Upper ('(' pats ')')? | '(' pat ')'
/// Comments run from `//` to the end of the line. Identifiers starting with
/// `$` are reserved.
std::variant<Program, ParseError> parse_program(std::string_view source);
std::variant<Pattern, ParseError> parse_pattern(std::string_view source);
std::variant<Expression, ParseError> parse_expression(std::string_view source);
std::variant<Type, ParseError> parse_type(std::string_view source);

struct UndeclaredCtor {
  SourcePos pos;        // of the enclosing definition or main
  std::string context;  // definition name, or "main"
  CtorName ctor;
};

/// Constructors used at an arity that is neither declared nor builtin.
std::vector<UndeclaredCtor> undeclared_constructors(const Program& p);

std::string to_source(const Program& p);

/// Structural equality of programs, ignoring source positions.
bool same_program(const Program& a, const Program& b);

}  // namespace patc

#endif  // PATC_SYNTAX_H_
