// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace ershov {

// ---------------------------------------------------------------------------
// Terms over the signature {+ (join), * (meet), \ (difference), 0, variables,
// named constants}.  Trees are immutable and shared; all values in this
// header are safe to copy and to use concurrently.
// ---------------------------------------------------------------------------

enum class TermKind { Zero, Var, Const, Join, Meet, Diff };

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
  TermKind kind() const { return kind_; }
  int var_index() const { return var_; }              // Var only
  const std::string& name() const { return name_; }   // Const only
  const TermPtr& left() const { return left_; }       // Join/Meet/Diff only
  const TermPtr& right() const { return right_; }

  bool is_atomic() const {
    return kind_ == TermKind::Zero || kind_ == TermKind::Var || kind_ == TermKind::Const;
  }

  static TermPtr zero();
  static TermPtr var(int index);              // index >= 1
  static TermPtr constant(std::string name);  // nonempty name
  static TermPtr join(TermPtr l, TermPtr r);
  static TermPtr meet(TermPtr l, TermPtr r);
  // diff(l, r) is "l minus r": the complement of r in the interval [0, l+r].
  static TermPtr diff(TermPtr l, TermPtr r);

private:
  Term(TermKind kind, int var, std::string name, TermPtr left, TermPtr right)
      : kind_(kind), var_(var), name_(std::move(name)), left_(std::move(left)),
        right_(std::move(right)) {}

  TermKind kind_;
  int var_;
  std::string name_;
  TermPtr left_, right_;
};

bool term_equal(const TermPtr& a, const TermPtr& b);
std::strong_ordering term_compare(const TermPtr& a, const TermPtr& b);

std::set<int> free_vars(const TermPtr& t);
std::set<std::string> constant_names(const TermPtr& t);

// Join of the parts with 0 components dropped; 0 when nothing remains.
TermPtr join_all(const std::vector<TermPtr>& parts);
// Meet of the parts; requires at least one part.
TermPtr meet_all(const std::vector<TermPtr>& parts);

// ---------------------------------------------------------------------------
// Canonical forms.  An atom is a difference a\b whose operands are plain
// symbols; a bare symbol v is stored as v\0 and the degenerate atoms x\x and
// 0\x collapse to the zero atom 0\0.
// ---------------------------------------------------------------------------

// Atomic symbol: a variable, a named constant, or 0.
// Total order: variables by index, then constants by name, then 0.
struct Symbol {
  enum class Kind { Var, Const, Zero };

  Kind kind = Kind::Zero;
  int var = 0;
  std::string name;

  static Symbol zero() { return Symbol{}; }
  static Symbol variable(int index) { return Symbol{Kind::Var, index, {}}; }
  static Symbol constant(std::string n) { return Symbol{Kind::Const, 0, std::move(n)}; }
  static Symbol of_term(const TermPtr& t);  // requires t->is_atomic()

  bool is_zero() const { return kind == Kind::Zero; }
  TermPtr to_term() const;

  bool operator==(const Symbol& other) const;
  std::strong_ordering operator<=>(const Symbol& other) const;
};

struct DifferenceAtom {
  Symbol base;
  Symbol minus;

  // Canonicalizing factory: 0\x and x\x become the zero atom 0\0.
  static DifferenceAtom make(Symbol base, Symbol minus);
  static DifferenceAtom zero_atom() { return DifferenceAtom{Symbol::zero(), Symbol::zero()}; }

  bool is_zero() const { return base.is_zero(); }
  // Zero atom embeds as 0; an atom with minus 0 embeds as base\0.
  TermPtr to_term() const;

  bool operator==(const DifferenceAtom&) const = default;
  std::strong_ordering operator<=>(const DifferenceAtom&) const = default;
};

// A duplicate-free, ordered collection of atoms.  The same shape serves as a
// meet-clause (in DNF) and as a join-clause (in CNF); the two factories apply
// the polarity-specific simplifications.
class Clause {
public:
  // Meet of atoms: a zero atom makes the whole clause 0; u\0 is absorbed by
  // any u\w with the same base.
  static Clause canonical_meet(std::vector<DifferenceAtom> atoms);
  // Join of atoms: zero atoms are dropped; u\w is absorbed by u\0.
  static Clause canonical_join(std::vector<DifferenceAtom> atoms);

  const std::vector<DifferenceAtom>& atoms() const { return atoms_; }
  bool is_zero_clause() const { return atoms_.size() == 1 && atoms_[0].is_zero(); }
  bool subset_of(const Clause& other) const;

  TermPtr term_as_meet() const;
  TermPtr term_as_join() const;

  bool operator==(const Clause&) const = default;
  std::strong_ordering operator<=>(const Clause&) const = default;

private:
  explicit Clause(std::vector<DifferenceAtom> atoms) : atoms_(std::move(atoms)) {}
  std::vector<DifferenceAtom> atoms_;
};

// Join of meet-clauses.  Canonical: zero clauses dropped (the whole term is
// {0\0} when nothing remains), no clause is a superset of another, clauses
// sorted.  Structural equality is therefore value-stable under clause
// insertion order.
class DnfTerm {
public:
  static DnfTerm of_clauses(std::vector<Clause> clauses);
  static DnfTerm zero() { return of_clauses({}); }

  const std::vector<Clause>& clauses() const { return clauses_; }
  bool is_zero() const { return clauses_.size() == 1 && clauses_[0].is_zero_clause(); }
  TermPtr to_term() const;

  bool operator==(const DnfTerm&) const = default;
  std::strong_ordering operator<=>(const DnfTerm&) const = default;

private:
  explicit DnfTerm(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {}
  std::vector<Clause> clauses_;
};

// Meet of join-clauses, dual to DnfTerm.
class CnfTerm {
public:
  static CnfTerm of_clauses(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  bool is_zero() const { return clauses_.size() == 1 && clauses_[0].is_zero_clause(); }
  TermPtr to_term() const;

  bool operator==(const CnfTerm&) const = default;
  std::strong_ordering operator<=>(const CnfTerm&) const = default;

private:
  explicit CnfTerm(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {}
  std::vector<Clause> clauses_;
};

// ---------------------------------------------------------------------------
// Equations and systems.
// ---------------------------------------------------------------------------

enum class EqKind { Equal, LessOrEqual };

// X <= Y is interchangeable with X+Y = Y; both forms are first-class here.
struct Equation {
  TermPtr lhs;
  TermPtr rhs;
  EqKind kind = EqKind::Equal;
};

bool equation_equal(const Equation& a, const Equation& b);

struct EqSystem {
  std::vector<Equation> equations;
};

std::set<int> free_vars(const EqSystem& s);
std::set<std::string> constant_names(const EqSystem& s);

// t = s  ->  {t <= s, s <= t}; inequalities pass through unchanged.
std::vector<Equation> eq_as_pair_of_inequalities(const Equation& e);

}  // namespace ershov
