// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ershov/sysnf.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "ershov/errors.hpp"
#include "ershov/rewrite.hpp"

namespace ershov {

InequalityShape shape_of(const NormalInequality& ni) {
  if (ni.left_const && ni.right_const) return InequalityShape::TwoConstants;
  if (ni.left_const) {
    if (!ni.right_vars.empty())
      return ni.left_vars.empty() ? InequalityShape::ConstBelowJoin
                                  : InequalityShape::MeetConstBelowVars;
    return ni.left_vars.empty() ? InequalityShape::GroundFalse : InequalityShape::MeetConstZero;
  }
  if (ni.right_const) return InequalityShape::VarsBelowJoinConst;
  return InequalityShape::VarsBelowVars;
}

std::optional<std::string> validate(const NormalInequality& ni) {
  auto sorted_unique = [](const std::vector<int>& xs) {
    return std::is_sorted(xs.begin(), xs.end()) &&
           std::adjacent_find(xs.begin(), xs.end()) == xs.end();
  };
  if (!sorted_unique(ni.left_vars) || !sorted_unique(ni.right_vars))
    return "variable lists must be sorted and duplicate-free";
  std::vector<int> shared;
  std::set_intersection(ni.left_vars.begin(), ni.left_vars.end(), ni.right_vars.begin(),
                        ni.right_vars.end(), std::back_inserter(shared));
  if (!shared.empty()) return "variable appears on both sides";
  if (ni.left_const && ni.right_const) return "two constants present";
  if (ni.left_const && ni.left_const->empty()) return "left constant must be positive";
  if (ni.right_const && ni.right_const->empty()) return "right constant must be positive";
  if (ni.left_vars.empty() && !ni.left_const) return "left side is empty";
  return std::nullopt;
}

bool satisfies(const NormalInequality& ni, const PowersetModel& m, const Assignment& a) {
  Element left = m.universe();
  for (int v : ni.left_vars) {
    auto it = a.find(v);
    if (it == a.end())
      throw SemanticError("unbound variable x" + std::to_string(v), "x" + std::to_string(v));
    left = m.meet(left, it->second);
  }
  if (ni.left_const) left = m.meet(left, m.element_of(*ni.left_const));
  Element right = 0;
  for (int v : ni.right_vars) {
    auto it = a.find(v);
    if (it == a.end())
      throw SemanticError("unbound variable x" + std::to_string(v), "x" + std::to_string(v));
    right = m.join(right, it->second);
  }
  if (ni.right_const) right = m.join(right, m.element_of(*ni.right_const));
  return m.leq(left, right);
}

bool satisfies(const std::vector<NormalInequality>& s, const PowersetModel& m,
               const Assignment& a) {
  return std::all_of(s.begin(), s.end(),
                     [&](const NormalInequality& ni) { return satisfies(ni, m, a); });
}

std::vector<int> variables_of(const std::vector<NormalInequality>& s) {
  std::set<int> vars;
  for (const auto& ni : s) {
    vars.insert(ni.left_vars.begin(), ni.left_vars.end());
    vars.insert(ni.right_vars.begin(), ni.right_vars.end());
  }
  return {vars.begin(), vars.end()};
}

FinSet support_of(const std::vector<NormalInequality>& s) {
  FinSet out;
  for (const auto& ni : s) {
    if (ni.left_const) out = out | *ni.left_const;
    if (ni.right_const) out = out | *ni.right_const;
  }
  return out;
}

namespace {
std::vector<PowersetModel> probes_over(const FinSet& support, const ProbeConfig& probe) {
  unsigned fresh_start = support.empty() ? 0 : support.max() + 1;
  std::vector<PowersetModel> models;
  for (int f = 0; f <= probe.max_fresh; ++f) {
    FinSet atoms = support;
    for (int i = 0; i < f; ++i) atoms.insert(fresh_start + i);
    models.push_back(PowersetModel::over(atoms, {}));
  }
  return models;
}
}  // namespace

EquivVerdict equivalent_normal(const std::vector<NormalInequality>& a,
                               const std::vector<NormalInequality>& b,
                               const ProbeConfig& probe) {
  std::set<int> vars;
  for (int v : variables_of(a)) vars.insert(v);
  for (int v : variables_of(b)) vars.insert(v);
  std::vector<int> universe(vars.begin(), vars.end());

  EquivVerdict verdict;
  for (const auto& m : probes_over(support_of(a) | support_of(b), probe)) {
    bool done = false;
    for_each_assignment(m, universe, probe.budget, [&](const Assignment& asg) {
      if (done) return;
      bool in1 = satisfies(a, m, asg);
      bool in2 = satisfies(b, m, asg);
      if (in1 != in2) {
        verdict.equivalent = false;
        verdict.witness = Counterexample{m, asg, in1};
        done = true;
      }
    });
    if (done) break;
  }
  return verdict;
}

EquivVerdict equivalent_mixed(const EqSystem& s, const ConstantTable& constants,
                              const std::vector<NormalInequality>& n, const ProbeConfig& probe) {
  std::set<int> vars = free_vars(s);
  for (int v : variables_of(n)) vars.insert(v);
  std::vector<int> universe(vars.begin(), vars.end());

  FinSet support = support_of(constants) | support_of(n);
  unsigned fresh_start = support.empty() ? 0 : support.max() + 1;

  EquivVerdict verdict;
  for (int f = 0; f <= probe.max_fresh; ++f) {
    FinSet atoms = support;
    for (int i = 0; i < f; ++i) atoms.insert(fresh_start + i);
    PowersetModel m = PowersetModel::over(atoms, constants);
    bool done = false;
    for_each_assignment(m, universe, probe.budget, [&](const Assignment& asg) {
      if (done) return;
      bool in1 = satisfies(s, m, asg);
      bool in2 = satisfies(n, m, asg);
      if (in1 != in2) {
        verdict.equivalent = false;
        verdict.witness = Counterexample{m, asg, in1};
        done = true;
      }
    });
    if (done) break;
  }
  return verdict;
}

// --- pipeline steps -------------------------------------------------------------

Equation eliminate_left_diffs(const Clause& lhs, const TermPtr& rhs) {
  std::vector<TermPtr> bases;
  std::vector<TermPtr> right_parts{rhs};
  bases.reserve(lhs.atoms().size());
  for (const auto& atom : lhs.atoms()) {
    bases.push_back(atom.base.to_term());
    if (!atom.minus.is_zero()) right_parts.push_back(atom.minus.to_term());
  }
  return Equation{meet_all(bases), join_all(right_parts), EqKind::LessOrEqual};
}

namespace {
void flatten_join(const TermPtr& t, std::vector<TermPtr>& out) {
  if (t->kind() == TermKind::Join) {
    flatten_join(t->left(), out);
    flatten_join(t->right(), out);
  } else {
    out.push_back(t);
  }
}
}  // namespace

std::vector<Equation> eliminate_right_diff(const Equation& ineq) {
  if (ineq.kind != EqKind::LessOrEqual)
    throw std::invalid_argument("eliminate_right_diff: expected an inequality");
  std::vector<TermPtr> parts;
  flatten_join(ineq.rhs, parts);
  auto it = std::find_if(parts.begin(), parts.end(),
                         [](const TermPtr& p) { return p->kind() == TermKind::Diff; });
  if (it == parts.end()) return {ineq};
  TermPtr base = (*it)->left();
  TermPtr minus = (*it)->right();
  std::vector<TermPtr> rest;
  for (auto jt = parts.begin(); jt != parts.end(); ++jt)
    if (jt != it) rest.push_back(*jt);

  std::vector<TermPtr> with_base = rest;
  with_base.push_back(base);
  Equation kept{ineq.lhs, join_all(with_base), EqKind::LessOrEqual};
  Equation shifted{Term::meet(ineq.lhs, minus), join_all(rest), EqKind::LessOrEqual};
  return {kept, shifted};
}

namespace {
void require_diff_free(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Diff: throw std::invalid_argument("dist_normalize: term contains a difference");
    case TermKind::Join:
    case TermKind::Meet:
      require_diff_free(t->left());
      require_diff_free(t->right());
      break;
    default: break;
  }
}

const FinSet& lookup_constant(const ConstantTable& constants, const std::string& name) {
  auto it = constants.find(name);
  if (it == constants.end())
    throw SemanticError("unknown constant '" + name + "'", name);
  return it->second;
}
}  // namespace

std::vector<NormalInequality> dist_normalize(const Equation& ineq,
                                             const ConstantTable& constants) {
  if (ineq.kind != EqKind::LessOrEqual)
    throw std::invalid_argument("dist_normalize: expected an inequality");
  require_diff_free(ineq.lhs);
  require_diff_free(ineq.rhs);

  DnfTerm left = normalize_term_dnf(ineq.lhs);
  CnfTerm right = normalize_term_cnf(ineq.rhs);

  std::vector<NormalInequality> out;
  for (const auto& lc : left.clauses()) {
    // fold the meet side
    std::set<int> xs;
    std::optional<FinSet> ca;
    bool left_zero = lc.is_zero_clause();
    for (const auto& atom : lc.atoms()) {
      if (atom.is_zero()) left_zero = true;
      switch (atom.base.kind) {
        case Symbol::Kind::Var: xs.insert(atom.base.var); break;
        case Symbol::Kind::Const: {
          const FinSet& value = lookup_constant(constants, atom.base.name);
          ca = ca ? (*ca & value) : value;
          break;
        }
        case Symbol::Kind::Zero: left_zero = true; break;
      }
    }
    if (left_zero || (ca && ca->empty())) continue;  // left side is 0

    for (const auto& rc : right.clauses()) {
      // fold the join side
      std::set<int> ys;
      std::optional<FinSet> cb;
      for (const auto& atom : rc.atoms()) {
        if (atom.is_zero()) continue;
        switch (atom.base.kind) {
          case Symbol::Kind::Var: ys.insert(atom.base.var); break;
          case Symbol::Kind::Const: {
            const FinSet& value = lookup_constant(constants, atom.base.name);
            cb = cb ? (*cb | value) : value;
            break;
          }
          case Symbol::Kind::Zero: break;
        }
      }
      if (cb && cb->empty()) cb.reset();

      // trivially true cases
      std::vector<int> shared;
      std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                            std::back_inserter(shared));
      if (!shared.empty()) continue;
      if (ca && cb && ca->subset_of(*cb)) continue;

      NormalInequality ni;
      ni.left_vars.assign(xs.begin(), xs.end());
      ni.left_const = ca;
      ni.right_vars.assign(ys.begin(), ys.end());
      ni.right_const = cb;
      out.push_back(std::move(ni));
    }
  }
  return out;
}

NormalInequality merge_two_constants(const NormalInequality& ni) {
  if (!ni.left_const || !ni.right_const)
    throw std::invalid_argument("merge_two_constants: both constants must be present");
  if (ni.left_const->subset_of(*ni.right_const))
    throw std::invalid_argument("merge_two_constants: inequality is trivially true");
  NormalInequality out = ni;
  out.left_const = *ni.left_const - *ni.right_const;
  out.right_const.reset();
  return out;
}

namespace {
// Join-clause as a term with v\0 atoms flattened to their base symbol, so the
// right-elimination loop only touches genuine differences.
TermPtr join_clause_term(const Clause& c) {
  std::vector<TermPtr> parts;
  for (const auto& atom : c.atoms()) {
    if (atom.is_zero()) continue;
    parts.push_back(atom.minus.is_zero() ? atom.base.to_term() : atom.to_term());
  }
  return join_all(parts);
}
}  // namespace

NormalSystem normalize_system(const EqSystem& s, const ConstantTable& constants,
                              RewriteTrace* trace) {
  std::vector<NormalInequality> collected;

  for (const auto& equation : s.equations) {
    for (const auto& ineq : eq_as_pair_of_inequalities(equation)) {
      DnfTerm lhs = normalize_term_dnf(ineq.lhs, trace);
      for (const auto& clause : lhs.clauses()) {
        Equation left_done = eliminate_left_diffs(clause, ineq.rhs);
        CnfTerm rhs = normalize_term_cnf(left_done.rhs, trace);
        for (const auto& jclause : rhs.clauses()) {
          std::deque<Equation> work{
              Equation{left_done.lhs, join_clause_term(jclause), EqKind::LessOrEqual}};
          while (!work.empty()) {
            Equation current = work.front();
            work.pop_front();
            auto split = eliminate_right_diff(current);
            if (split.size() == 1) {
              for (auto& ni : dist_normalize(current, constants))
                collected.push_back(std::move(ni));
            } else {
              work.insert(work.end(), split.begin(), split.end());
            }
          }
        }
      }
    }
  }

  for (auto& ni : collected)
    if (ni.left_const && ni.right_const) ni = merge_two_constants(ni);

  std::sort(collected.begin(), collected.end());
  collected.erase(std::unique(collected.begin(), collected.end()), collected.end());

  NormalSystem result;
  for (const auto& ni : collected) {
    if (shape_of(ni) == InequalityShape::GroundFalse) {
      result.unsatisfiable = true;
      result.inequalities = {ni};
      return result;
    }
  }
  result.inequalities = std::move(collected);
  return result;
}

}  // namespace ershov
