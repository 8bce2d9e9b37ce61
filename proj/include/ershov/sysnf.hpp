// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ershov/rewrite.hpp"
#include "ershov/semantics.hpp"
#include "ershov/term.hpp"

namespace ershov {

// ---------------------------------------------------------------------------
// Atomic inequalities.  A normalized system consists of inequalities
//
//     x_{i_1} * ... * x_{i_m} [* c_a]  <=  x_{j_1} + ... + x_{j_l} [+ c_b]
//
// with disjoint variable sides, at most one constant overall (pre-evaluated
// to an element value), a positive constant when present, a nonempty left
// side, and a possibly empty right side (which denotes 0 and gives the
// "X * c = 0" reading).  Inequalities with an empty variable part on the
// left ("c <= Y") are admitted as an extended shape.
// ---------------------------------------------------------------------------

struct NormalInequality {
  std::vector<int> left_vars;  // sorted, duplicate-free
  std::optional<FinSet> left_const;
  std::vector<int> right_vars;
  std::optional<FinSet> right_const;

  bool operator==(const NormalInequality&) const = default;
  std::strong_ordering operator<=>(const NormalInequality&) const = default;
};

enum class InequalityShape {
  MeetConstBelowVars,  // X * c <= Y
  MeetConstZero,       // X * c = 0
  VarsBelowJoinConst,  // X <= Y + c
  VarsBelowVars,       // X <= Y        (right side may be empty: X = 0)
  ConstBelowJoin,      // c <= Y        (extended shape)
  GroundFalse,         // c = 0 with c > 0: the unsatisfiable marker
  TwoConstants,        // both constants present: pipeline-internal only
};

InequalityShape shape_of(const NormalInequality& ni);

// nullopt when the inequality satisfies every invariant, else the reason.
std::optional<std::string> validate(const NormalInequality& ni);

bool satisfies(const NormalInequality& ni, const PowersetModel& m, const Assignment& a);
bool satisfies(const std::vector<NormalInequality>& s, const PowersetModel& m,
               const Assignment& a);

std::vector<int> variables_of(const std::vector<NormalInequality>& s);
FinSet support_of(const std::vector<NormalInequality>& s);

// Equivalence of normalized systems over probe models built from the
// inequalities' own constant supports.
EquivVerdict equivalent_normal(const std::vector<NormalInequality>& a,
                               const std::vector<NormalInequality>& b,
                               const ProbeConfig& probe = {});

// Equivalence of a term system against a normalized system over probe models
// covering both constant supports.
EquivVerdict equivalent_mixed(const EqSystem& s, const ConstantTable& constants,
                              const std::vector<NormalInequality>& n,
                              const ProbeConfig& probe = {});

// ---------------------------------------------------------------------------
// Pipeline steps.  normalize_system chains them; each is usable on its own.
// ---------------------------------------------------------------------------

// Meet-clause of difference atoms below an arbitrary term:
//   (a1\b1) * ... * (ak\bk) <= s   ->   a1*...*ak <= s + b1 + ... + bk.
// Merges the clause into one difference, then shifts the minus part right.
Equation eliminate_left_diffs(const Clause& lhs, const TermPtr& rhs);

// One right-side elimination step.  Finds the first difference in the right
// join, t <= s + (a\b), and returns {t <= s + a, t*b <= s}.  Returns the
// input unchanged when the right side has no difference.
std::vector<Equation> eliminate_right_diff(const Equation& ineq);

// Difference-free inequality -> atomic inequalities: distributes both sides,
// collapses duplicate variables, folds constants in the interpretation
// (meet on the left, join on the right) and drops trivially true results
// (shared variable, left side 0, or folded c_a <= c_b).  Outputs may carry
// two constants; merge_two_constants removes the second.
std::vector<NormalInequality> dist_normalize(const Equation& ineq, const ConstantTable& constants);

// X * c_a <= Y + c_b  ->  X * (c_a - c_b) <= Y.  Requires both constants
// present and c_a not below c_b.
NormalInequality merge_two_constants(const NormalInequality& ni);

struct NormalSystem {
  std::vector<NormalInequality> inequalities;
  // When true the system is unsatisfiable in the interpretation and
  // `inequalities` holds the single ground-false marker.
  bool unsatisfiable = false;
};

// The full pipeline: split equalities, normalize left sides to DNF and split
// clause-wise, eliminate left differences, normalize right sides to CNF and
// split, eliminate right differences, distribute, fold and merge constants,
// deduplicate.  Solution-set preserving over every probe model.
NormalSystem normalize_system(const EqSystem& s, const ConstantTable& constants,
                              RewriteTrace* trace = nullptr);

}  // namespace ershov
