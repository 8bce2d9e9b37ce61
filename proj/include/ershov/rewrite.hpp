// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ershov/term.hpp"

namespace ershov {

// ---------------------------------------------------------------------------
// Rule catalogue.  Every law the normalizers rely on is listed here with a
// machine-checkable pattern (variables are the pattern slots) and a soundness
// status.  The brute-force oracle tests re-verify each entry exhaustively
// over small powerset models:
//   - verified:  holds as stated;
//   - corrected: the commonly quoted variant is unsound, the catalogued form
//                is the repaired one that the normalizer uses;
//   - refuted:   false in general; kept as a non-rewriting entry so that the
//                counterexample stays documented.  The refuted join-merge is
//                replaced by le-join-diff-split in the system pipeline.
// ---------------------------------------------------------------------------

enum class RuleStatus { verified, corrected, refuted };
enum class RuleKind { identity, inequality, system_equivalence };

struct CatalogueEntry {
  std::string id;
  RuleKind kind = RuleKind::identity;
  RuleStatus status = RuleStatus::verified;
  // identity:   lhs = rhs for all values of the variables
  // inequality: lhs <= rhs for all values
  TermPtr lhs, rhs;
  // system_equivalence: the two systems have equal solution sets
  std::vector<Equation> left_system, right_system;
  std::string note;
};

const std::vector<CatalogueEntry>& rule_catalogue();

// One difference-elimination step, recorded when tracing is requested.
// `before` is the rewritten subterm (the redex), `after` what replaced it.
struct RewriteStep {
  std::string rule;
  TermPtr before;
  TermPtr after;
};
using RewriteTrace = std::vector<RewriteStep>;

// Phase one of normalization: rewrites until every difference has atomic
// operands.  Strategy: innermost rewritable node first, left-operand rules
// before right-operand rules.  Terminates: at the rewrite site the pair
// (operator count inside left operands of differences, the same for right
// operands) strictly decreases lexicographically with every step.
TermPtr eliminate_compound_diffs(const TermPtr& t, RewriteTrace* trace = nullptr);

// Full canonical forms: difference elimination, then distributive expansion
// into clauses of difference atoms, then canonicalization (atom and clause
// ordering, degenerate-atom removal, subsumption).  Value-preserving in every
// model under every assignment.
DnfTerm normalize_term_dnf(const TermPtr& t, RewriteTrace* trace = nullptr);
CnfTerm normalize_term_cnf(const TermPtr& t, RewriteTrace* trace = nullptr);

// Both sides independently rewritten to canonical DNF (embedded as terms).
Equation normalize_equation(const Equation& e);

}  // namespace ershov
