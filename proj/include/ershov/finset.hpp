// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace ershov {

// Finite subset of the naturals, kept sorted and duplicate-free.
// These are the constant values: the algebra of all finite subsets of N is a
// relative-complement lattice with 0 = {} and no greatest element.
class FinSet {
public:
  FinSet() = default;
  FinSet(std::initializer_list<unsigned> xs);
  explicit FinSet(std::vector<unsigned> xs);

  static FinSet singleton(unsigned x);
  static FinSet range(unsigned n);  // {0, 1, ..., n-1}

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  bool contains(unsigned x) const;
  bool subset_of(const FinSet& other) const;
  unsigned max() const;  // precondition: !empty()
  void insert(unsigned x);

  FinSet operator|(const FinSet& other) const;  // union
  FinSet operator&(const FinSet& other) const;  // intersection
  FinSet operator-(const FinSet& other) const;  // difference

  bool operator==(const FinSet&) const = default;
  std::strong_ordering operator<=>(const FinSet&) const = default;

  const std::vector<unsigned>& members() const { return members_; }

private:
  std::vector<unsigned> members_;
};

// Interpretation of named constants.
using ConstantTable = std::map<std::string, FinSet>;

// Union of the supports of all interpreted constants.
FinSet support_of(const ConstantTable& constants);

}  // namespace ershov
