// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ershov/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace ershov {

std::string ParseError::summary(const std::vector<ParseDiagnostic>& ds) {
  if (ds.empty()) return "parse error";
  std::string out = ds.front().message + " (line " + std::to_string(ds.front().span.line) +
                    ", column " + std::to_string(ds.front().span.column) + ")";
  if (ds.size() > 1) out += " and " + std::to_string(ds.size() - 1) + " more";
  return out;
}

ParseError::ParseError(std::vector<ParseDiagnostic> diagnostics)
    : Error(summary(diagnostics)), diagnostics_(std::move(diagnostics)) {}

namespace {

enum class Tok { Plus, Star, Diff, LParen, RParen, Zero, Var, Ident, Eq, Le, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  int var = 0;
  SourceSpan span;
};

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  int line;
  int column = 1;

  explicit Lexer(std::string_view t, int line_no) : text(t), line(line_no) {}

  [[noreturn]] void fail(const std::string& message, int col, int length) {
    throw ParseError({ParseDiagnostic{SourceSpan{line, col, length}, message}});
  }

  bool match_utf8(std::string_view glyph) {
    if (text.substr(pos, glyph.size()) == glyph) {
      pos += glyph.size();
      return true;
    }
    return false;
  }

  std::vector<Token> tokens() {
    std::vector<Token> out;
    while (pos < text.size()) {
      char c = text[pos];
      int col = column;
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
        ++column;
        continue;
      }
      if (c == '#') break;  // comment to end of line
      Token tok;
      tok.span = SourceSpan{line, col, 1};
      if (c == '+') {
        tok.type = Tok::Plus;
        ++pos;
      } else if (c == '*') {
        tok.type = Tok::Star;
        ++pos;
      } else if (c == '\\') {
        tok.type = Tok::Diff;
        ++pos;
      } else if (c == '(') {
        tok.type = Tok::LParen;
        ++pos;
      } else if (c == ')') {
        tok.type = Tok::RParen;
        ++pos;
      } else if (c == '=') {
        tok.type = Tok::Eq;
        ++pos;
      } else if (c == '<') {
        if (pos + 1 < text.size() && text[pos + 1] == '=') {
          tok.type = Tok::Le;
          tok.span.length = 2;
          pos += 2;
          ++column;
        } else {
          fail("expected '<='", col, 1);
        }
      } else if (match_utf8("\xE2\x88\xA8")) {  // ∨
        tok.type = Tok::Plus;
      } else if (match_utf8("\xE2\x88\xA7")) {  // ∧
        tok.type = Tok::Star;
      } else if (match_utf8("\xE2\x88\x96")) {  // ∖
        tok.type = Tok::Diff;
      } else if (match_utf8("\xE2\x89\xA4")) {  // ≤
        tok.type = Tok::Le;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string digits(text.substr(start, pos - start));
        if (digits != "0")
          fail("unexpected number '" + digits + "'", col, static_cast<int>(digits.size()));
        tok.type = Tok::Zero;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
          ++pos;
        std::string word(text.substr(start, pos - start));
        tok.span.length = static_cast<int>(word.size());
        tok.text = word;
        if (word.size() > 1 && word[0] == 'x' &&
            std::all_of(word.begin() + 1, word.end(),
                        [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
          int index = 0;
          try {
            index = std::stoi(word.substr(1));
          } catch (...) {
            fail("variable index out of range", col, tok.span.length);
          }
          if (index < 1) fail("variable index must be at least 1", col, tok.span.length);
          tok.type = Tok::Var;
          tok.var = index;
        } else if (word.size() > 1 && word[0] == 'x' &&
                   std::isdigit(static_cast<unsigned char>(word[1]))) {
          fail("bad variable name '" + word + "'", col, tok.span.length);
        } else {
          tok.type = Tok::Ident;
        }
        column += tok.span.length - 1;
      } else {
        fail("unexpected character", col, 1);
      }
      ++column;
      out.push_back(std::move(tok));
    }
    Token end;
    end.type = Tok::End;
    end.span = SourceSpan{line, column, 1};
    out.push_back(end);
    return out;
  }
};

struct Parser {
  const std::vector<Token>& toks;
  std::size_t pos = 0;
  int line;

  const Token& peek() const { return toks[pos]; }
  Token take() { return toks[pos++]; }

  [[noreturn]] void fail(const std::string& message, const Token& at) {
    throw ParseError({ParseDiagnostic{at.span, message}});
  }

  TermPtr parse_primary() {
    Token t = take();
    switch (t.type) {
      case Tok::Zero: return Term::zero();
      case Tok::Var: return Term::var(t.var);
      case Tok::Ident: return Term::constant(t.text);
      case Tok::LParen: {
        TermPtr inner = parse_join();
        if (peek().type != Tok::RParen) fail("expected ')'", peek());
        take();
        return inner;
      }
      default: fail("expected a term", t);
    }
  }

  TermPtr parse_diff() {
    TermPtr t = parse_primary();
    while (peek().type == Tok::Diff) {
      take();
      t = Term::diff(t, parse_primary());
    }
    return t;
  }

  TermPtr parse_meet() {
    TermPtr t = parse_diff();
    while (peek().type == Tok::Star) {
      take();
      t = Term::meet(t, parse_diff());
    }
    return t;
  }

  TermPtr parse_join() {
    TermPtr t = parse_meet();
    while (peek().type == Tok::Plus) {
      take();
      t = Term::join(t, parse_meet());
    }
    return t;
  }
};

TermPtr parse_whole_term(std::string_view text, int line_no) {
  Lexer lexer(text, line_no);
  auto toks = lexer.tokens();
  Parser parser{toks, 0, line_no};
  TermPtr t = parser.parse_join();
  if (parser.peek().type != Tok::End) parser.fail("unexpected trailing input", parser.peek());
  return t;
}

std::optional<Equation> parse_statement(std::string_view text, int line_no) {
  Lexer lexer(text, line_no);
  auto toks = lexer.tokens();
  if (toks.size() == 1) return std::nullopt;  // blank or comment-only line
  Parser parser{toks, 0, line_no};
  TermPtr lhs = parser.parse_join();
  Token rel = parser.take();
  EqKind kind;
  if (rel.type == Tok::Eq)
    kind = EqKind::Equal;
  else if (rel.type == Tok::Le)
    kind = EqKind::LessOrEqual;
  else
    parser.fail("expected '=' or '<='", rel);
  TermPtr rhs = parser.parse_join();
  if (parser.peek().type != Tok::End) parser.fail("unexpected trailing input", parser.peek());
  return Equation{lhs, rhs, kind};
}

}  // namespace

TermPtr parse_term(std::string_view text) { return parse_whole_term(text, 1); }

EqSystem parse_system(std::string_view text) {
  EqSystem system;
  std::vector<ParseDiagnostic> diagnostics;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view l = text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                          : end - start);
    ++line_no;
    try {
      if (auto eq = parse_statement(l, line_no)) system.equations.push_back(*eq);
    } catch (const ParseError& e) {
      diagnostics.insert(diagnostics.end(), e.diagnostics().begin(), e.diagnostics().end());
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (!diagnostics.empty()) throw ParseError(std::move(diagnostics));
  return system;
}

}  // namespace ershov
