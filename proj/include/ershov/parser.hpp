// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ershov/errors.hpp"
#include "ershov/term.hpp"

namespace ershov {

// 1-based position of a token in the input; columns count code points.
struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 1;
};

struct ParseDiagnostic {
  SourceSpan span;
  std::string message;
};

class ParseError : public Error {
public:
  explicit ParseError(std::vector<ParseDiagnostic> diagnostics);
  const std::vector<ParseDiagnostic>& diagnostics() const { return diagnostics_; }

private:
  static std::string summary(const std::vector<ParseDiagnostic>& ds);
  std::vector<ParseDiagnostic> diagnostics_;
};

// Grammar (precedence \ over * over +, all left-associative):
//
//   term     := term "+" term | term "*" term | term "\" term
//             | "0" | variable | constant | "(" term ")"
//   variable := "x" digits            (index >= 1)
//   constant := identifier that is not a variable
//
// The operators may also be written with their mathematical glyphs
// (∨ ∧ ∖ ≤) in input.
TermPtr parse_term(std::string_view text);

// One statement per line: "term = term" or "term <= term"; "#" starts a
// comment; blank lines are ignored.  Syntax errors are collected per line
// and thrown together.
EqSystem parse_system(std::string_view text);

}  // namespace ershov
