// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ershov/finset.hpp"

namespace ershov {

// An element of a finite powerset model, encoded as a bitmask over the
// model's atom list.  Bit i stands for the i-th atom.
using Element = std::uint64_t;

// Finite powerset algebra: elements are the subsets of a finite atom set,
// join is union, meet is intersection, difference is set difference and 0 is
// the empty set.  Atoms are naturals (so models over "the constants' support
// plus fresh atoms" compose naturally); labels are kept for IO only.
//
// Immutable after construction; all operations are pure.
class PowersetModel {
public:
  // The one-element model over no atoms.
  PowersetModel() = default;

  // Model over an explicit atom set.  Constants must be subsets of `atoms`.
  // `natural_labels`, when given, maps a natural n to its display label.
  static PowersetModel over(const FinSet& atoms, ConstantTable constants,
                            const std::vector<std::string>* natural_labels = nullptr);
  // Model over atoms {0, ..., n-1} labelled by `atom_labels`; constant values
  // are given as lists of atom labels.
  static PowersetModel from_labels(const std::vector<std::string>& atom_labels,
                                   const std::map<std::string, std::vector<std::string>>& constants);

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  std::uint64_t element_count() const { return std::uint64_t{1} << atom_count(); }
  Element universe() const { return element_count() - 1; }
  Element zero() const { return 0; }

  Element join(Element a, Element b) const;
  Element meet(Element a, Element b) const;
  Element diff(Element b, Element a) const;  // b minus a
  bool leq(Element a, Element b) const;

  // All elements in ascending bitmask order.
  std::vector<Element> enumerate_elements() const;

  Element element_of(const FinSet& s) const;  // SemanticError if s is not a subset of the atoms
  FinSet finset_of(Element e) const;

  bool has_constant(std::string_view name) const;
  Element constant_element(std::string_view name) const;  // SemanticError when unknown
  const ConstantTable& constants() const { return constants_; }

  const FinSet& atoms() const { return atoms_; }
  const std::string& atom_label(int bit) const { return labels_[bit]; }
  std::string render_element(Element e) const;  // "{a,b}"

private:
  void check_element(Element e) const;

  FinSet atoms_;
  std::vector<std::string> labels_;  // parallel to atoms_.members()
  ConstantTable constants_;          // values are subsets of atoms_
};

// Table-driven view of a finite algebra, for axiom checking.  Tests corrupt
// the operation closures to exercise the failure paths.
struct FiniteAlgebra {
  std::vector<Element> elements;
  std::function<Element(Element, Element)> join;
  std::function<Element(Element, Element)> meet;
  std::function<Element(Element, Element)> diff;
  Element zero = 0;
};

FiniteAlgebra algebra_of(const PowersetModel& m);

struct AxiomReport {
  bool ok = true;
  std::string failed_law;         // set when !ok
  std::vector<Element> witness;   // first violating tuple
  std::vector<std::string> checked;
};

// Exhaustively checks the lattice axioms (idempotence, commutativity,
// associativity, absorption), both distributive laws and the
// interval-complement law (b\a)*a = 0, (b\a)+a = a+b.
// Requires at most 32 elements (models of up to 5 atoms).
AxiomReport verify_ershov_axioms(const FiniteAlgebra& alg);
AxiomReport verify_ershov_axioms(const PowersetModel& m);

// An indexed set of constants {c_j | j in J}, used by the weak-Noetherian
// procedures.  Three descriptions: an explicit finite list, the singleton
// family {{j} | j < limit} (all of N when limit is absent), or an opaque
// declaration carrying only finiteness metadata.
struct ConstantFamily {
  enum class Kind { Explicit, Singletons, Opaque };

  std::string label;
  Kind kind = Kind::Explicit;
  std::vector<FinSet> elements;            // Explicit
  std::optional<unsigned> singleton_limit; // Singletons; nullopt = unbounded
  std::optional<bool> declared_finite;     // Opaque
  std::optional<FinSet> witness;           // the axiom witness c, when supplied

  // nullopt when the description does not determine finiteness.
  std::optional<bool> finite() const;
  // Explicit list, or expanded singletons; FamilyError when infinite/opaque.
  std::vector<FinSet> expand() const;
};

}  // namespace ershov
