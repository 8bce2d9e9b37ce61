// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ershov/render.hpp"

namespace ershov {

LabelFn decimal_labels() {
  return [](unsigned n) { return std::to_string(n); };
}

LabelFn labels_of(const PowersetModel& m) {
  return [m](unsigned n) {
    const auto& atoms = m.atoms().members();
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i] == n) return m.atom_label(static_cast<int>(i));
    return std::to_string(n);
  };
}

namespace {

int precedence(TermKind k) {
  switch (k) {
    case TermKind::Join: return 1;
    case TermKind::Meet: return 2;
    case TermKind::Diff: return 3;
    default: return 4;
  }
}

char op_char(TermKind k) {
  switch (k) {
    case TermKind::Join: return '+';
    case TermKind::Meet: return '*';
    default: return '\\';
  }
}

// min_prec is the loosest precedence printable without parentheses here.
void render_term(const TermPtr& t, int min_prec, std::string& out) {
  switch (t->kind()) {
    case TermKind::Zero: out += '0'; return;
    case TermKind::Var:
      out += 'x';
      out += std::to_string(t->var_index());
      return;
    case TermKind::Const: out += t->name(); return;
    default: break;
  }
  int p = precedence(t->kind());
  bool parens = p < min_prec;
  if (parens) out += '(';
  // left-associative: the right child needs strictly tighter binding
  render_term(t->left(), p, out);
  out += op_char(t->kind());
  render_term(t->right(), p + 1, out);
  if (parens) out += ')';
}

std::string render_clause(const Clause& c, char joiner) {
  std::string out;
  bool first = true;
  for (const auto& atom : c.atoms()) {
    if (!first) out += joiner;
    first = false;
    if (atom.is_zero()) {
      out += '0';
    } else {
      render_term(atom.base.to_term(), 4, out);
      out += '\\';
      if (atom.minus.is_zero())
        out += '0';
      else
        render_term(atom.minus.to_term(), 4, out);
    }
  }
  return out;
}

std::string render_clauses(const std::vector<Clause>& clauses, char inner, char outer) {
  if (clauses.size() == 1) return render_clause(clauses.front(), inner);
  std::string out;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i) out += outer;
    out += '(';
    out += render_clause(clauses[i], inner);
    out += ')';
  }
  return out;
}

}  // namespace

std::string render(const TermPtr& t) {
  std::string out;
  render_term(t, 0, out);
  return out;
}

std::string render(const Equation& e) {
  return render(e.lhs) + (e.kind == EqKind::Equal ? " = " : " <= ") + render(e.rhs);
}

std::string render(const EqSystem& s) {
  std::string out;
  for (std::size_t i = 0; i < s.equations.size(); ++i) {
    if (i) out += '\n';
    out += render(s.equations[i]);
  }
  return out;
}

std::string render(const DnfTerm& t) { return render_clauses(t.clauses(), '*', '+'); }

std::string render(const CnfTerm& t) { return render_clauses(t.clauses(), '+', '*'); }

std::string render(const FinSet& s, const LabelFn& labels) {
  std::string out = "{";
  bool first = true;
  for (unsigned n : s.members()) {
    if (!first) out += ',';
    out += labels(n);
    first = false;
  }
  out += '}';
  return out;
}

std::string render(const NormalInequality& ni, const LabelFn& labels) {
  std::string left;
  for (int v : ni.left_vars) {
    if (!left.empty()) left += '*';
    left += 'x';
    left += std::to_string(v);
  }
  if (ni.left_const) {
    if (!left.empty()) left += '*';
    left += render(*ni.left_const, labels);
  }
  if (left.empty()) left = "0";

  std::string right;
  for (int v : ni.right_vars) {
    if (!right.empty()) right += '+';
    right += 'x';
    right += std::to_string(v);
  }
  if (ni.right_const) {
    if (!right.empty()) right += '+';
    right += render(*ni.right_const, labels);
  }

  if (right.empty()) return left + " = 0";
  return left + " <= " + right;
}

}  // namespace ershov
