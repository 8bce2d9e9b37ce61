// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ershov/semantics.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ershov/errors.hpp"

namespace ershov {

Element eval(const TermPtr& t, const PowersetModel& m, const Assignment& a) {
  switch (t->kind()) {
    case TermKind::Zero: return m.zero();
    case TermKind::Var: {
      auto it = a.find(t->var_index());
      if (it == a.end())
        throw SemanticError("unbound variable x" + std::to_string(t->var_index()),
                            "x" + std::to_string(t->var_index()));
      return it->second;
    }
    case TermKind::Const: return m.constant_element(t->name());
    case TermKind::Join: return m.join(eval(t->left(), m, a), eval(t->right(), m, a));
    case TermKind::Meet: return m.meet(eval(t->left(), m, a), eval(t->right(), m, a));
    case TermKind::Diff: return m.diff(eval(t->left(), m, a), eval(t->right(), m, a));
  }
  throw Error("eval: unreachable");
}

bool satisfies(const Equation& e, const PowersetModel& m, const Assignment& a) {
  Element l = eval(e.lhs, m, a);
  Element r = eval(e.rhs, m, a);
  return e.kind == EqKind::Equal ? l == r : m.leq(l, r);
}

bool satisfies(const EqSystem& s, const PowersetModel& m, const Assignment& a) {
  return std::all_of(s.equations.begin(), s.equations.end(),
                     [&](const Equation& e) { return satisfies(e, m, a); });
}

std::uint64_t budget_from_env() {
  if (const char* v = std::getenv("ERSHOV_BUDGET")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
  }
  return kDefaultBudget;
}

void for_each_assignment(const PowersetModel& m, const std::vector<int>& vars,
                         std::uint64_t budget, const std::function<void(const Assignment&)>& fn) {
  std::vector<int> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  unsigned bits = static_cast<unsigned>(m.atom_count()) * static_cast<unsigned>(sorted.size());
  if (bits >= 63 || (std::uint64_t{1} << bits) > budget)
    throw BudgetError("enumeration needs 2^" + std::to_string(bits) +
                          " assignments (budget " + std::to_string(budget) + ")",
                      bits, budget);

  Assignment a;
  for (int v : sorted) a[v] = 0;
  const Element top = m.universe();
  for (;;) {
    fn(a);
    // odometer: bump the last variable first, so rows come out in
    // lexicographic order of the value tuples
    auto it = sorted.rbegin();
    for (; it != sorted.rend(); ++it) {
      Element& val = a[*it];
      if (val < top) {
        ++val;
        break;
      }
      val = 0;
    }
    if (it == sorted.rend()) return;
  }
}

Assignment SolutionSet::assignment_at(std::size_t i) const {
  Assignment a;
  for (std::size_t k = 0; k < variables.size(); ++k) a[variables[k]] = assignments[i][k];
  return a;
}

SolutionSet solve(const EqSystem& s, const PowersetModel& m, std::uint64_t budget) {
  SolutionSet out;
  auto vars = free_vars(s);
  out.variables.assign(vars.begin(), vars.end());
  for_each_assignment(m, out.variables, budget, [&](const Assignment& a) {
    if (!satisfies(s, m, a)) return;
    std::vector<Element> row;
    row.reserve(out.variables.size());
    for (int v : out.variables) row.push_back(a.at(v));
    out.assignments.push_back(std::move(row));
  });
  return out;
}

std::vector<PowersetModel> probe_models(const ConstantTable& constants, const ProbeConfig& probe,
                                        const std::vector<std::string>* natural_labels) {
  FinSet support = support_of(constants);
  unsigned fresh_start = support.empty() ? 0 : support.max() + 1;
  std::vector<PowersetModel> models;
  for (int f = 0; f <= probe.max_fresh; ++f) {
    FinSet atoms = support;
    for (int i = 0; i < f; ++i) atoms.insert(fresh_start + i);
    models.push_back(PowersetModel::over(atoms, constants, natural_labels));
  }
  return models;
}

EquivVerdict equivalent(const EqSystem& s1, const EqSystem& s2, const ConstantTable& constants,
                        const ProbeConfig& probe, const std::vector<std::string>* natural_labels) {
  std::set<int> vars = free_vars(s1);
  auto v2 = free_vars(s2);
  vars.insert(v2.begin(), v2.end());
  std::vector<int> universe(vars.begin(), vars.end());

  EquivVerdict verdict;
  for (const auto& m : probe_models(constants, probe, natural_labels)) {
    bool done = false;
    for_each_assignment(m, universe, probe.budget, [&](const Assignment& a) {
      if (done) return;
      bool in1 = satisfies(s1, m, a);
      bool in2 = satisfies(s2, m, a);
      if (in1 != in2) {
        verdict.equivalent = false;
        verdict.witness = Counterexample{m, a, in1};
        done = true;
      }
    });
    if (done) break;
  }
  return verdict;
}

}  // namespace ershov
