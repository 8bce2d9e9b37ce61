// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ershov/rewrite.hpp"

#include <stdexcept>

namespace ershov {

namespace {

TermPtr v(int i) { return Term::var(i); }

CatalogueEntry identity(std::string id, TermPtr lhs, TermPtr rhs, RuleStatus status,
                        std::string note = {}) {
  CatalogueEntry e;
  e.id = std::move(id);
  e.kind = RuleKind::identity;
  e.status = status;
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  e.note = std::move(note);
  return e;
}

CatalogueEntry inequality(std::string id, TermPtr lhs, TermPtr rhs, std::string note = {}) {
  CatalogueEntry e;
  e.id = std::move(id);
  e.kind = RuleKind::inequality;
  e.status = RuleStatus::verified;
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  e.note = std::move(note);
  return e;
}

CatalogueEntry equivalence(std::string id, std::vector<Equation> left,
                           std::vector<Equation> right, std::string note = {}) {
  CatalogueEntry e;
  e.id = std::move(id);
  e.kind = RuleKind::system_equivalence;
  e.status = RuleStatus::verified;
  e.left_system = std::move(left);
  e.right_system = std::move(right);
  e.note = std::move(note);
  return e;
}

std::vector<CatalogueEntry> build_catalogue() {
  using K = EqKind;
  std::vector<CatalogueEntry> rules;

  // basic difference laws
  rules.push_back(inequality("diff-below-base", Term::diff(v(1), v(2)), v(1)));
  rules.push_back(identity("diff-join-base", Term::join(Term::diff(v(1), v(2)), v(1)), v(1),
                           RuleStatus::verified));
  rules.push_back(identity("diff-meet-partition",
                           Term::join(Term::diff(v(1), v(2)), Term::meet(v(1), v(2))), v(1),
                           RuleStatus::verified));
  rules.push_back(identity("diff-join-minus", Term::join(Term::diff(v(1), v(2)), v(2)),
                           Term::join(v(1), v(2)), RuleStatus::verified));
  rules.push_back(identity("diff-meet-base", Term::meet(Term::diff(v(1), v(2)), v(1)),
                           Term::diff(v(1), v(2)), RuleStatus::verified));
  rules.push_back(identity("diff-meet-minus", Term::meet(Term::diff(v(1), v(2)), v(2)),
                           Term::zero(), RuleStatus::verified));

  // left-operand elimination
  rules.push_back(identity("diff-of-join", Term::diff(Term::join(v(1), v(2)), v(3)),
                           Term::join(Term::diff(v(1), v(3)), Term::diff(v(2), v(3))),
                           RuleStatus::verified));
  rules.push_back(identity("diff-of-meet", Term::diff(Term::meet(v(1), v(2)), v(3)),
                           Term::meet(Term::diff(v(1), v(3)), Term::diff(v(2), v(3))),
                           RuleStatus::verified));
  rules.push_back(identity("diff-of-diff", Term::diff(Term::diff(v(1), v(2)), v(3)),
                           Term::meet(Term::diff(v(1), v(2)), Term::diff(v(1), v(3))),
                           RuleStatus::corrected,
                           "the join variant (x1\\x2)+(x1\\x3) is unsound; equals x1\\(x2+x3)"));

  // right-operand elimination
  rules.push_back(identity("diff-by-join", Term::diff(v(1), Term::join(v(2), v(3))),
                           Term::meet(Term::diff(v(1), v(2)), Term::diff(v(1), v(3))),
                           RuleStatus::verified));
  rules.push_back(identity("diff-by-meet", Term::diff(v(1), Term::meet(v(2), v(3))),
                           Term::join(Term::diff(v(1), v(2)), Term::diff(v(1), v(3))),
                           RuleStatus::verified));
  rules.push_back(identity("diff-by-diff", Term::diff(v(1), Term::diff(v(2), v(3))),
                           Term::join(Term::diff(v(1), v(2)),
                                      Term::meet(v(1), Term::meet(v(2), v(3)))),
                           RuleStatus::verified));

  // clause merges
  rules.push_back(identity("meet-of-diffs",
                           Term::meet(Term::diff(v(1), v(2)), Term::diff(v(3), v(4))),
                           Term::diff(Term::meet(v(1), v(3)), Term::join(v(2), v(4))),
                           RuleStatus::verified));
  rules.push_back(identity("join-of-diffs",
                           Term::join(Term::diff(v(1), v(2)), Term::diff(v(3), v(4))),
                           Term::diff(Term::join(v(1), v(3)), Term::meet(v(2), v(4))),
                           RuleStatus::refuted,
                           "only <= holds; never applied as a rewrite"));

  // inequality transforms
  rules.push_back(equivalence("diff-le-shift",
                              {Equation{Term::diff(v(1), v(2)), v(3), K::LessOrEqual}},
                              {Equation{v(1), Term::join(v(2), v(3)), K::LessOrEqual}}));
  rules.push_back(equivalence(
      "le-diff-split", {Equation{v(1), Term::diff(v(2), v(3)), K::LessOrEqual}},
      {Equation{v(1), v(2), K::LessOrEqual},
       Equation{Term::meet(v(1), v(3)), Term::zero(), K::LessOrEqual}}));
  rules.push_back(equivalence(
      "le-join-diff-split",
      {Equation{v(1), Term::join(v(2), Term::diff(v(3), v(4))), K::LessOrEqual}},
      {Equation{v(1), Term::join(v(2), v(3)), K::LessOrEqual},
       Equation{Term::meet(v(1), v(4)), v(2), K::LessOrEqual}},
      "sound replacement for the refuted join-of-diffs in the system pipeline"));

  return rules;
}

}  // namespace

const std::vector<CatalogueEntry>& rule_catalogue() {
  static const std::vector<CatalogueEntry> catalogue = build_catalogue();
  return catalogue;
}

// --- phase one: difference elimination ---------------------------------------

namespace {

// Applies one rule at the given difference node; the operands may be
// arbitrary terms, the laws hold for all values.
TermPtr apply_diff_rule(const TermPtr& t, std::string& rule) {
  const TermPtr& l = t->left();
  const TermPtr& r = t->right();
  switch (l->kind()) {
    case TermKind::Join:
      rule = "diff-of-join";
      return Term::join(Term::diff(l->left(), r), Term::diff(l->right(), r));
    case TermKind::Meet:
      rule = "diff-of-meet";
      return Term::meet(Term::diff(l->left(), r), Term::diff(l->right(), r));
    case TermKind::Diff:
      rule = "diff-of-diff";
      return Term::meet(l, Term::diff(l->left(), r));
    default: break;
  }
  switch (r->kind()) {
    case TermKind::Join:
      rule = "diff-by-join";
      return Term::meet(Term::diff(l, r->left()), Term::diff(l, r->right()));
    case TermKind::Meet:
      rule = "diff-by-meet";
      return Term::join(Term::diff(l, r->left()), Term::diff(l, r->right()));
    case TermKind::Diff:
      rule = "diff-by-diff";
      return Term::join(Term::diff(l, r->left()), Term::meet(l, Term::meet(r->left(), r->right())));
    default: break;
  }
  return t;
}

bool diff_rewritable(const TermPtr& t) {
  return t->kind() == TermKind::Diff &&
         (!t->left()->is_atomic() || !t->right()->is_atomic());
}

// Post-order search for the first rewritable difference node; rewrites it and
// records the step.  Returns t unchanged when none exists.
TermPtr rewrite_once(const TermPtr& t, bool& done, RewriteStep& step) {
  if (t->is_atomic() || done) return t;
  TermPtr l = rewrite_once(t->left(), done, step);
  if (done) {
    switch (t->kind()) {
      case TermKind::Join: return Term::join(l, t->right());
      case TermKind::Meet: return Term::meet(l, t->right());
      default: return Term::diff(l, t->right());
    }
  }
  TermPtr r = rewrite_once(t->right(), done, step);
  if (done) {
    switch (t->kind()) {
      case TermKind::Join: return Term::join(t->left(), r);
      case TermKind::Meet: return Term::meet(t->left(), r);
      default: return Term::diff(t->left(), r);
    }
  }
  if (diff_rewritable(t)) {
    TermPtr out = apply_diff_rule(t, step.rule);
    step.before = t;
    step.after = out;
    done = true;
    return out;
  }
  return t;
}

}  // namespace

TermPtr eliminate_compound_diffs(const TermPtr& t, RewriteTrace* trace) {
  TermPtr current = t;
  for (;;) {
    bool done = false;
    RewriteStep step;
    TermPtr next = rewrite_once(current, done, step);
    if (!done) return current;
    if (trace) trace->push_back(step);
    current = next;
  }
}

// --- phase two: clause expansion -----------------------------------------------

namespace {

DifferenceAtom atom_of(const TermPtr& t) {
  if (t->kind() == TermKind::Diff)
    return DifferenceAtom::make(Symbol::of_term(t->left()), Symbol::of_term(t->right()));
  return DifferenceAtom::make(Symbol::of_term(t), Symbol::zero());
}

std::vector<Clause> dnf_clauses(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Join: {
      auto out = dnf_clauses(t->left());
      auto r = dnf_clauses(t->right());
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    case TermKind::Meet: {
      auto ls = dnf_clauses(t->left());
      auto rs = dnf_clauses(t->right());
      std::vector<Clause> out;
      out.reserve(ls.size() * rs.size());
      for (const auto& a : ls)
        for (const auto& b : rs) {
          auto atoms = a.atoms();
          atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
          out.push_back(Clause::canonical_meet(std::move(atoms)));
        }
      return out;
    }
    default: return {Clause::canonical_meet({atom_of(t)})};
  }
}

std::vector<Clause> cnf_clauses(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Meet: {
      auto out = cnf_clauses(t->left());
      auto r = cnf_clauses(t->right());
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    case TermKind::Join: {
      auto ls = cnf_clauses(t->left());
      auto rs = cnf_clauses(t->right());
      std::vector<Clause> out;
      out.reserve(ls.size() * rs.size());
      for (const auto& a : ls)
        for (const auto& b : rs) {
          auto atoms = a.atoms();
          atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
          out.push_back(Clause::canonical_join(std::move(atoms)));
        }
      return out;
    }
    default: return {Clause::canonical_join({atom_of(t)})};
  }
}

}  // namespace

DnfTerm normalize_term_dnf(const TermPtr& t, RewriteTrace* trace) {
  TermPtr flat = eliminate_compound_diffs(t, trace);
  return DnfTerm::of_clauses(dnf_clauses(flat));
}

CnfTerm normalize_term_cnf(const TermPtr& t, RewriteTrace* trace) {
  TermPtr flat = eliminate_compound_diffs(t, trace);
  return CnfTerm::of_clauses(cnf_clauses(flat));
}

Equation normalize_equation(const Equation& e) {
  return Equation{normalize_term_dnf(e.lhs).to_term(), normalize_term_dnf(e.rhs).to_term(),
                  e.kind};
}

}  // namespace ershov
