// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ershov/model.hpp"
#include "ershov/sysnf.hpp"

namespace ershov {

// Least set of values containing the generators and {}, closed under union,
// intersection and difference.  Always finite for finite generator lists.
std::vector<FinSet> generated_subalgebra(const std::vector<FinSet>& generators);

// The constant subalgebra, described by explicit generators and/or families.
struct SubalgebraDescriptor {
  std::vector<FinSet> generators;
  std::vector<ConstantFamily> families;
};

struct NoetherianVerdict {
  enum class Value { yes, no, indeterminate };
  Value value = Value::yes;
  std::size_t closure_size = 0;  // set when value == yes
  std::string detail;
};

// A structure with constants is equationally Noetherian exactly when its
// constant subalgebra is finite.  Families with undetermined finiteness give
// an indeterminate verdict.
NoetherianVerdict is_equationally_noetherian(const SubalgebraDescriptor& d);

// Removes every inequality semantically implied by the rest, tested over
// probe models; greedy in input order, so the result is minimal with respect
// to removing any single inequality.
std::vector<NormalInequality> dedupe_system(const std::vector<NormalInequality>& s,
                                            const ProbeConfig& probe = {});

// Supremum of the family: union for explicit/expandable families, nullopt for
// upper-unbounded ones.
std::optional<FinSet> sup_of_family(const ConstantFamily& f);

// Infimum computed as d - d' where d = sup {c_j} and d' = sup {d - c_j}.
// Equals the member-wise intersection; FamilyError when the family is
// unbounded or has no computable members.
FinSet inf_via_sup(const ConstantFamily& f);

// A group of same-shaped inequalities whose constant ranges over a family:
// {X * c_j <= Y | c_j in family} when constant_on_left, otherwise
// {X <= Y + c_j | c_j in family}.
struct FamilyGroup {
  std::vector<int> left_vars;
  std::vector<int> right_vars;
  ConstantFamily family;
  bool constant_on_left = true;
};

struct CompactionResult {
  std::vector<NormalInequality> inequalities;
  // Family labels of groups that could not be compacted: unbounded family on
  // the left with no witness supplied.
  std::vector<std::string> unresolved;
};

// Replaces every group of inequalities sharing (X, Y, constant side) by a
// single inequality: sup of the constants on the left, inf on the right.
// Unbounded left-side families use the supplied witness c, turning the group
// into (meet X - join Y) <= c, re-normalized to X <= Y + c.
CompactionResult compact_system(const std::vector<NormalInequality>& s,
                                const std::vector<FamilyGroup>& family_groups = {},
                                const std::map<std::string, FinSet>& witnesses = {});

}  // namespace ershov
