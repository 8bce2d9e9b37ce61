// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ershov {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Unknown constant, unbound variable, or an element outside a model's domain.
class SemanticError : public Error {
public:
  explicit SemanticError(const std::string& what, std::string symbol = {})
      : Error(what), symbol_(std::move(symbol)) {}
  const std::string& symbol() const { return symbol_; }

private:
  std::string symbol_;
};

// Enumeration would exceed the configured budget.
class BudgetError : public Error {
public:
  BudgetError(const std::string& what, unsigned required_log2, std::uint64_t budget)
      : Error(what), required_log2_(required_log2), budget_(budget) {}
  // log2 of the number of assignments the request needs
  unsigned required_log2() const { return required_log2_; }
  std::uint64_t budget() const { return budget_; }

private:
  unsigned required_log2_;
  std::uint64_t budget_;
};

// A constant family is unbounded (or opaque) where a bound is required.
class FamilyError : public Error {
public:
  using Error::Error;
};

}  // namespace ershov
