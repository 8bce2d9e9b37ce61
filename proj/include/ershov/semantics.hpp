// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ershov/model.hpp"
#include "ershov/term.hpp"

namespace ershov {

// Total map from variable indices to model elements.
using Assignment = std::map<int, Element>;

Element eval(const TermPtr& t, const PowersetModel& m, const Assignment& a);
bool satisfies(const Equation& e, const PowersetModel& m, const Assignment& a);
bool satisfies(const EqSystem& s, const PowersetModel& m, const Assignment& a);

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

// Reads ERSHOV_BUDGET when set, otherwise kDefaultBudget.
std::uint64_t budget_from_env();

// Calls fn for every assignment of model elements to `vars`, in lexicographic
// order of the value tuples.  Throws BudgetError when the model's
// element_count^|vars| exceeds the budget.
void for_each_assignment(const PowersetModel& m, const std::vector<int>& vars,
                         std::uint64_t budget, const std::function<void(const Assignment&)>& fn);

struct SolutionSet {
  std::vector<int> variables;                     // sorted
  std::vector<std::vector<Element>> assignments;  // rows parallel to variables
  Assignment assignment_at(std::size_t i) const;
};

// Exactly the assignments over the system's variable universe satisfying
// every equation, in enumeration order.
SolutionSet solve(const EqSystem& s, const PowersetModel& m,
                  std::uint64_t budget = kDefaultBudget);

// The falsification universe for system equivalence: powerset models over the
// constants' support plus f fresh atoms, for f = 0..max_fresh.  Fresh atoms
// simulate elements outside the constant subalgebra; there is no completeness
// claim for any fixed max_fresh.
struct ProbeConfig {
  int max_fresh = 2;
  std::uint64_t budget = kDefaultBudget;
};

std::vector<PowersetModel> probe_models(const ConstantTable& constants,
                                        const ProbeConfig& probe = {},
                                        const std::vector<std::string>* natural_labels = nullptr);

struct Counterexample {
  PowersetModel model;
  Assignment assignment;
  bool satisfies_first = false;  // which side the witness satisfies
};

struct EquivVerdict {
  bool equivalent = true;
  std::optional<Counterexample> witness;
};

// Compares solution sets of the two systems over every probe model; on
// mismatch returns the first witnessing model and assignment.
EquivVerdict equivalent(const EqSystem& s1, const EqSystem& s2, const ConstantTable& constants,
                        const ProbeConfig& probe = {},
                        const std::vector<std::string>* natural_labels = nullptr);

}  // namespace ershov
