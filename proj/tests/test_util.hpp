// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for the test binaries: seeded random generators, syntactic
// validators for the canonical forms, and term metrics.  The validators are
// deliberately independent re-statements of the invariants, not calls back
// into the code that enforces them.
#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ershov/semantics.hpp"
#include "ershov/term.hpp"

namespace ershov::testing {

struct TermGen {
  std::mt19937 rng;
  int num_vars;
  std::vector<std::string> const_names;

  explicit TermGen(unsigned seed, int vars = 4, int consts = 3) : rng(seed), num_vars(vars) {
    for (int i = 1; i <= consts; ++i) const_names.push_back("c" + std::to_string(i));
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  TermPtr leaf() {
    int r = pick(10);
    if (r == 0) return Term::zero();
    if (r <= 6 || const_names.empty()) return Term::var(1 + pick(num_vars));
    return Term::constant(const_names[pick(static_cast<int>(const_names.size()))]);
  }

  TermPtr term(int max_depth) {
    if (max_depth <= 0 || pick(10) < 3) return leaf();
    TermPtr l = term(max_depth - 1);
    TermPtr r = term(max_depth - 1);
    switch (pick(3)) {
      case 0: return Term::join(l, r);
      case 1: return Term::meet(l, r);
      default: return Term::diff(l, r);
    }
  }

  Equation equation(int max_depth) {
    EqKind kind = pick(2) == 0 ? EqKind::Equal : EqKind::LessOrEqual;
    return Equation{term(max_depth), term(max_depth), kind};
  }

  EqSystem system(int max_eqs, int max_depth) {
    EqSystem s;
    int n = 1 + pick(max_eqs);
    for (int i = 0; i < n; ++i) s.equations.push_back(equation(max_depth));
    return s;
  }
};

// Constant interpretation over the atoms {0, 1, 2} used by the bulk of the
// randomized suites.
inline ConstantTable three_atom_constants() {
  return {{"c1", FinSet{0}}, {"c2", FinSet{1, 2}}, {"c3", FinSet{0, 2}}};
}

inline int op_count(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Join:
    case TermKind::Meet:
    case TermKind::Diff: return 1 + op_count(t->left()) + op_count(t->right());
    default: return 0;
  }
}

inline void collect_diff_ops(const TermPtr& t, long& left_ops, long& right_ops) {
  switch (t->kind()) {
    case TermKind::Diff:
      left_ops += op_count(t->left());
      right_ops += op_count(t->right());
      [[fallthrough]];
    case TermKind::Join:
    case TermKind::Meet:
      collect_diff_ops(t->left(), left_ops, right_ops);
      collect_diff_ops(t->right(), left_ops, right_ops);
      break;
    default: break;
  }
}

// (operator count inside left operands of differences, same for right
// operands) -- the lexicographic termination metric of the eliminator.
inline std::pair<long, long> diff_operand_ops(const TermPtr& t) {
  long l = 0, r = 0;
  collect_diff_ops(t, l, r);
  return {l, r};
}

namespace detail {

inline std::optional<std::string> check_clause(const Clause& c, bool meet_polarity) {
  const auto& atoms = c.atoms();
  if (atoms.empty()) return "empty clause";
  for (std::size_t i = 1; i < atoms.size(); ++i)
    if (!(atoms[i - 1] < atoms[i])) return "atoms not strictly sorted";
  for (const auto& a : atoms) {
    if (a.base.is_zero() && !a.minus.is_zero()) return "0\\x atom not collapsed";
    if (!a.base.is_zero() && a.base == a.minus) return "x\\x atom not collapsed";
    if (a.is_zero() && atoms.size() != 1) return "zero atom mixed with others";
  }
  for (const auto& a : atoms) {
    if (a.is_zero()) continue;
    for (const auto& b : atoms) {
      if (&a == &b || a.base != b.base) continue;
      if (meet_polarity && a.minus.is_zero() && !b.minus.is_zero())
        return "u\\0 not absorbed in meet clause";
      if (!meet_polarity && !a.minus.is_zero() && b.minus.is_zero())
        return "u\\w not absorbed in join clause";
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_clauses(const std::vector<Clause>& clauses,
                                                bool meet_polarity) {
  if (clauses.empty()) return "no clauses";
  for (std::size_t i = 1; i < clauses.size(); ++i)
    if (!(clauses[i - 1] < clauses[i])) return "clauses not strictly sorted";
  for (const auto& c : clauses)
    if (auto err = check_clause(c, meet_polarity)) return err;
  for (const auto& c : clauses) {
    if (c.is_zero_clause() && clauses.size() != 1) return "zero clause mixed with others";
    for (const auto& d : clauses)
      if (&c != &d && c.subset_of(d)) return "subsumed clause kept";
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<std::string> check_dnf_shape(const DnfTerm& t) {
  return detail::check_clauses(t.clauses(), true);
}

inline std::optional<std::string> check_cnf_shape(const CnfTerm& t) {
  return detail::check_clauses(t.clauses(), false);
}

// eval-equality of two terms over every assignment of the model
inline bool same_value_everywhere(const TermPtr& a, const TermPtr& b, const PowersetModel& m) {
  auto va = free_vars(a);
  auto vb = free_vars(b);
  va.insert(vb.begin(), vb.end());
  std::vector<int> vars(va.begin(), va.end());
  bool same = true;
  for_each_assignment(m, vars, kDefaultBudget, [&](const Assignment& asg) {
    if (same && eval(a, m, asg) != eval(b, m, asg)) same = false;
  });
  return same;
}

}  // namespace ershov::testing
