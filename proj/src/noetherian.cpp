// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ershov/noetherian.hpp"

#include <algorithm>
#include <set>

#include "ershov/errors.hpp"

namespace ershov {

std::vector<FinSet> generated_subalgebra(const std::vector<FinSet>& generators) {
  std::set<FinSet> closure(generators.begin(), generators.end());
  closure.insert(FinSet{});
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<FinSet> snapshot(closure.begin(), closure.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        for (const auto& c : {a | b, a & b, a - b}) {
          if (closure.insert(c).second) grew = true;
        }
      }
    }
  }
  return {closure.begin(), closure.end()};
}

NoetherianVerdict is_equationally_noetherian(const SubalgebraDescriptor& d) {
  NoetherianVerdict verdict;
  std::vector<FinSet> gens = d.generators;
  for (const auto& f : d.families) {
    auto finite = f.finite();
    if (!finite) {
      verdict.value = NoetherianVerdict::Value::indeterminate;
      verdict.detail = "family '" + f.label + "': finiteness unknown";
      return verdict;
    }
    if (!*finite) {
      verdict.value = NoetherianVerdict::Value::no;
      verdict.detail = "family '" + f.label + "' is infinite";
      return verdict;
    }
    if (f.kind != ConstantFamily::Kind::Opaque) {
      auto members = f.expand();
      gens.insert(gens.end(), members.begin(), members.end());
    }
  }
  verdict.value = NoetherianVerdict::Value::yes;
  verdict.closure_size = generated_subalgebra(gens).size();
  return verdict;
}

std::vector<NormalInequality> dedupe_system(const std::vector<NormalInequality>& s,
                                            const ProbeConfig& probe) {
  std::vector<NormalInequality> kept = s;
  // exact duplicates first
  std::vector<NormalInequality> unique;
  for (const auto& ni : kept)
    if (std::find(unique.begin(), unique.end(), ni) == unique.end()) unique.push_back(ni);
  kept = std::move(unique);

  for (std::size_t i = 0; i < kept.size();) {
    std::vector<NormalInequality> without;
    without.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) without.push_back(kept[j]);
    if (equivalent_normal(kept, without, probe).equivalent)
      kept = std::move(without);
    else
      ++i;
  }
  return kept;
}

std::optional<FinSet> sup_of_family(const ConstantFamily& f) {
  if (f.kind == ConstantFamily::Kind::Singletons && !f.singleton_limit) return std::nullopt;
  FinSet sup;
  for (const auto& member : f.expand()) sup = sup | member;
  return sup;
}

FinSet inf_via_sup(const ConstantFamily& f) {
  auto sup = sup_of_family(f);
  if (!sup) throw FamilyError("family '" + f.label + "' is unbounded; no supremum");
  auto members = f.expand();
  if (members.empty()) return FinSet{};
  FinSet d = *sup;
  FinSet d_prime;
  for (const auto& member : members) d_prime = d_prime | (d - member);
  return d - d_prime;
}

namespace {

struct GroupKey {
  std::vector<int> left_vars;
  std::vector<int> right_vars;
  bool constant_on_left = false;

  auto operator<=>(const GroupKey&) const = default;
};

NormalInequality with_left_const(std::vector<int> xs, std::vector<int> ys, FinSet c) {
  NormalInequality ni;
  ni.left_vars = std::move(xs);
  ni.right_vars = std::move(ys);
  if (!c.empty()) ni.left_const = std::move(c);
  return ni;
}

NormalInequality with_right_const(std::vector<int> xs, std::vector<int> ys, FinSet c) {
  NormalInequality ni;
  ni.left_vars = std::move(xs);
  ni.right_vars = std::move(ys);
  if (!c.empty()) ni.right_const = std::move(c);
  return ni;
}

// Infimum of the family members; the unbounded singleton family meets to {}
// as soon as it has two members.
FinSet family_inf(const ConstantFamily& f) {
  if (f.kind == ConstantFamily::Kind::Singletons && !f.singleton_limit) return FinSet{};
  return inf_via_sup(f);
}

}  // namespace

CompactionResult compact_system(const std::vector<NormalInequality>& s,
                                const std::vector<FamilyGroup>& family_groups,
                                const std::map<std::string, FinSet>& witnesses) {
  CompactionResult result;
  std::map<GroupKey, std::vector<FinSet>> groups;
  std::vector<NormalInequality> passthrough;

  for (const auto& ni : s) {
    if (ni.left_const && ni.right_const) {
      passthrough.push_back(ni);  // not in normal form; left alone
      continue;
    }
    if (ni.left_const) {
      groups[GroupKey{ni.left_vars, ni.right_vars, true}].push_back(*ni.left_const);
    } else if (ni.right_const) {
      groups[GroupKey{ni.left_vars, ni.right_vars, false}].push_back(*ni.right_const);
    } else {
      passthrough.push_back(ni);  // constant-free; one survives dedupe below
    }
  }

  std::vector<NormalInequality> out = std::move(passthrough);

  for (const auto& [key, constants] : groups) {
    if (key.constant_on_left) {
      FinSet sup;
      for (const auto& c : constants) sup = sup | c;
      out.push_back(with_left_const(key.left_vars, key.right_vars, sup));
    } else {
      FinSet inf = constants.front();
      for (const auto& c : constants) inf = inf & c;
      out.push_back(with_right_const(key.left_vars, key.right_vars, inf));
    }
  }

  for (const auto& g : family_groups) {
    if (g.constant_on_left) {
      auto sup = sup_of_family(g.family);
      if (sup) {
        out.push_back(with_left_const(g.left_vars, g.right_vars, *sup));
        continue;
      }
      // unbounded: {X * c_j <= Y | j} ~ (meet X - join Y) <= c, which
      // re-normalizes to X <= Y + c; needs a variable on the left
      std::optional<FinSet> witness = g.family.witness;
      if (!witness) {
        auto it = witnesses.find(g.family.label);
        if (it != witnesses.end()) witness = it->second;
      }
      if (!witness || g.left_vars.empty()) {
        result.unresolved.push_back(g.family.label);
        continue;
      }
      out.push_back(with_right_const(g.left_vars, g.right_vars, *witness));
    } else {
      out.push_back(with_right_const(g.left_vars, g.right_vars, family_inf(g.family)));
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  result.inequalities = std::move(out);
  return result;
}

}  // namespace ershov
