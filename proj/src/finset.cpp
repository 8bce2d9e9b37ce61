// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ershov/finset.hpp"

#include <algorithm>

namespace ershov {

namespace {
void normalize(std::vector<unsigned>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}
}  // namespace

FinSet::FinSet(std::initializer_list<unsigned> xs) : members_(xs) { normalize(members_); }

FinSet::FinSet(std::vector<unsigned> xs) : members_(std::move(xs)) { normalize(members_); }

FinSet FinSet::singleton(unsigned x) { return FinSet{x}; }

FinSet FinSet::range(unsigned n) {
  FinSet s;
  s.members_.reserve(n);
  for (unsigned i = 0; i < n; ++i) s.members_.push_back(i);
  return s;
}

bool FinSet::contains(unsigned x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool FinSet::subset_of(const FinSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

unsigned FinSet::max() const { return members_.back(); }

void FinSet::insert(unsigned x) {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) members_.insert(it, x);
}

FinSet FinSet::operator|(const FinSet& other) const {
  FinSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out.members_));
  return out;
}

FinSet FinSet::operator&(const FinSet& other) const {
  FinSet out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
  return out;
}

FinSet FinSet::operator-(const FinSet& other) const {
  FinSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

FinSet support_of(const ConstantTable& constants) {
  FinSet out;
  for (const auto& [name, value] : constants) out = out | value;
  return out;
}

}  // namespace ershov
