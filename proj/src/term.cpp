// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ershov/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace ershov {

TermPtr Term::zero() {
  static const TermPtr instance(new Term(TermKind::Zero, 0, {}, nullptr, nullptr));
  return instance;
}

TermPtr Term::var(int index) {
  if (index < 1) throw std::invalid_argument("variable index must be >= 1");
  return TermPtr(new Term(TermKind::Var, index, {}, nullptr, nullptr));
}

TermPtr Term::constant(std::string name) {
  if (name.empty()) throw std::invalid_argument("constant name must be nonempty");
  return TermPtr(new Term(TermKind::Const, 0, std::move(name), nullptr, nullptr));
}

TermPtr Term::join(TermPtr l, TermPtr r) {
  return TermPtr(new Term(TermKind::Join, 0, {}, std::move(l), std::move(r)));
}

TermPtr Term::meet(TermPtr l, TermPtr r) {
  return TermPtr(new Term(TermKind::Meet, 0, {}, std::move(l), std::move(r)));
}

TermPtr Term::diff(TermPtr l, TermPtr r) {
  return TermPtr(new Term(TermKind::Diff, 0, {}, std::move(l), std::move(r)));
}

std::strong_ordering term_compare(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return std::strong_ordering::equal;
  if (auto c = a->kind() <=> b->kind(); c != 0) return c;
  switch (a->kind()) {
    case TermKind::Zero: return std::strong_ordering::equal;
    case TermKind::Var: return a->var_index() <=> b->var_index();
    case TermKind::Const: return a->name() <=> b->name();
    default:
      if (auto c = term_compare(a->left(), b->left()); c != 0) return c;
      return term_compare(a->right(), b->right());
  }
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  return term_compare(a, b) == std::strong_ordering::equal;
}

namespace {
void collect_vars(const TermPtr& t, std::set<int>& out) {
  switch (t->kind()) {
    case TermKind::Var: out.insert(t->var_index()); break;
    case TermKind::Join:
    case TermKind::Meet:
    case TermKind::Diff:
      collect_vars(t->left(), out);
      collect_vars(t->right(), out);
      break;
    default: break;
  }
}

void collect_consts(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind()) {
    case TermKind::Const: out.insert(t->name()); break;
    case TermKind::Join:
    case TermKind::Meet:
    case TermKind::Diff:
      collect_consts(t->left(), out);
      collect_consts(t->right(), out);
      break;
    default: break;
  }
}
}  // namespace

std::set<int> free_vars(const TermPtr& t) {
  std::set<int> out;
  collect_vars(t, out);
  return out;
}

std::set<std::string> constant_names(const TermPtr& t) {
  std::set<std::string> out;
  collect_consts(t, out);
  return out;
}

TermPtr join_all(const std::vector<TermPtr>& parts) {
  TermPtr out;
  for (const auto& p : parts) {
    if (p->kind() == TermKind::Zero) continue;
    out = out ? Term::join(out, p) : p;
  }
  return out ? out : Term::zero();
}

TermPtr meet_all(const std::vector<TermPtr>& parts) {
  if (parts.empty()) throw std::invalid_argument("meet_all: empty meet");
  TermPtr out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = Term::meet(out, parts[i]);
  return out;
}

// --- symbols and atoms ------------------------------------------------------

Symbol Symbol::of_term(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Zero: return zero();
    case TermKind::Var: return variable(t->var_index());
    case TermKind::Const: return constant(t->name());
    default: throw std::invalid_argument("Symbol::of_term: term is not atomic");
  }
}

TermPtr Symbol::to_term() const {
  switch (kind) {
    case Kind::Var: return Term::var(var);
    case Kind::Const: return Term::constant(name);
    default: return Term::zero();
  }
}

bool Symbol::operator==(const Symbol& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering Symbol::operator<=>(const Symbol& other) const {
  auto rank = [](Kind k) {
    switch (k) {
      case Kind::Var: return 0;
      case Kind::Const: return 1;
      default: return 2;
    }
  };
  if (auto c = rank(kind) <=> rank(other.kind); c != 0) return c;
  switch (kind) {
    case Kind::Var: return var <=> other.var;
    case Kind::Const: return name <=> other.name;
    default: return std::strong_ordering::equal;
  }
}

DifferenceAtom DifferenceAtom::make(Symbol base, Symbol minus) {
  if (base.is_zero() || base == minus) return zero_atom();
  return DifferenceAtom{std::move(base), std::move(minus)};
}

TermPtr DifferenceAtom::to_term() const {
  if (is_zero()) return Term::zero();
  return Term::diff(base.to_term(), minus.to_term());
}

// --- clauses ----------------------------------------------------------------

namespace {
void sort_unique(std::vector<DifferenceAtom>& atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
}

bool has_nonzero_minus_with_base(const std::vector<DifferenceAtom>& atoms, const Symbol& base) {
  return std::any_of(atoms.begin(), atoms.end(), [&](const DifferenceAtom& a) {
    return a.base == base && !a.minus.is_zero();
  });
}
}  // namespace

Clause Clause::canonical_meet(std::vector<DifferenceAtom> atoms) {
  for (const auto& a : atoms)
    if (a.is_zero()) return Clause({DifferenceAtom::zero_atom()});
  // u\0 * u\w = u\w
  std::vector<DifferenceAtom> kept;
  kept.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (a.minus.is_zero() && has_nonzero_minus_with_base(atoms, a.base)) continue;
    kept.push_back(a);
  }
  sort_unique(kept);
  if (kept.empty()) throw std::invalid_argument("canonical_meet: empty clause");
  return Clause(std::move(kept));
}

Clause Clause::canonical_join(std::vector<DifferenceAtom> atoms) {
  std::vector<DifferenceAtom> kept;
  kept.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (a.is_zero()) continue;
    // u\0 + u\w = u\0
    if (!a.minus.is_zero()) {
      bool absorbed = std::any_of(atoms.begin(), atoms.end(), [&](const DifferenceAtom& b) {
        return b.base == a.base && b.minus.is_zero();
      });
      if (absorbed) continue;
    }
    kept.push_back(a);
  }
  if (kept.empty()) return Clause({DifferenceAtom::zero_atom()});
  sort_unique(kept);
  return Clause(std::move(kept));
}

bool Clause::subset_of(const Clause& other) const {
  return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(), atoms_.end());
}

TermPtr Clause::term_as_meet() const {
  std::vector<TermPtr> parts;
  parts.reserve(atoms_.size());
  for (const auto& a : atoms_) parts.push_back(a.to_term());
  return meet_all(parts);
}

TermPtr Clause::term_as_join() const {
  std::vector<TermPtr> parts;
  parts.reserve(atoms_.size());
  for (const auto& a : atoms_) parts.push_back(a.to_term());
  return join_all(parts);
}

// --- DNF / CNF ---------------------------------------------------------------

namespace {
// Keeps only clauses with no (previously kept) subset among the others.
// Processing shortest-first makes a single pass sufficient and also removes
// duplicates.
std::vector<Clause> remove_supersets(std::vector<Clause> clauses) {
  std::stable_sort(clauses.begin(), clauses.end(), [](const Clause& a, const Clause& b) {
    if (a.atoms().size() != b.atoms().size()) return a.atoms().size() < b.atoms().size();
    return a < b;
  });
  std::vector<Clause> kept;
  for (const auto& c : clauses) {
    bool subsumed = std::any_of(kept.begin(), kept.end(),
                                [&](const Clause& k) { return k.subset_of(c); });
    if (!subsumed) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}
}  // namespace

DnfTerm DnfTerm::of_clauses(std::vector<Clause> clauses) {
  std::vector<Clause> nonzero;
  nonzero.reserve(clauses.size());
  for (auto& c : clauses)
    if (!c.is_zero_clause()) nonzero.push_back(std::move(c));
  if (nonzero.empty())
    return DnfTerm({Clause::canonical_meet({DifferenceAtom::zero_atom()})});
  return DnfTerm(remove_supersets(std::move(nonzero)));
}

CnfTerm CnfTerm::of_clauses(std::vector<Clause> clauses) {
  if (clauses.empty()) throw std::invalid_argument("CnfTerm: empty clause list");
  for (const auto& c : clauses)
    if (c.is_zero_clause())
      return CnfTerm({Clause::canonical_join({})});
  return CnfTerm(remove_supersets(std::move(clauses)));
}

TermPtr DnfTerm::to_term() const {
  if (is_zero()) return Term::zero();
  std::vector<TermPtr> parts;
  parts.reserve(clauses_.size());
  for (const auto& c : clauses_) parts.push_back(c.term_as_meet());
  return join_all(parts);
}

TermPtr CnfTerm::to_term() const {
  if (is_zero()) return Term::zero();
  std::vector<TermPtr> parts;
  parts.reserve(clauses_.size());
  for (const auto& c : clauses_) parts.push_back(c.term_as_join());
  return meet_all(parts);
}

// --- equations ----------------------------------------------------------------

bool equation_equal(const Equation& a, const Equation& b) {
  return a.kind == b.kind && term_equal(a.lhs, b.lhs) && term_equal(a.rhs, b.rhs);
}

std::set<int> free_vars(const EqSystem& s) {
  std::set<int> out;
  for (const auto& e : s.equations) {
    auto l = free_vars(e.lhs);
    auto r = free_vars(e.rhs);
    out.insert(l.begin(), l.end());
    out.insert(r.begin(), r.end());
  }
  return out;
}

std::set<std::string> constant_names(const EqSystem& s) {
  std::set<std::string> out;
  for (const auto& e : s.equations) {
    auto l = constant_names(e.lhs);
    auto r = constant_names(e.rhs);
    out.insert(l.begin(), l.end());
    out.insert(r.begin(), r.end());
  }
  return out;
}

std::vector<Equation> eq_as_pair_of_inequalities(const Equation& e) {
  if (e.kind == EqKind::LessOrEqual) return {e};
  return {Equation{e.lhs, e.rhs, EqKind::LessOrEqual},
          Equation{e.rhs, e.lhs, EqKind::LessOrEqual}};
}

}  // namespace ershov
