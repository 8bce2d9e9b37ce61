// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>

#include "ershov/sysnf.hpp"
#include "ershov/term.hpp"

namespace ershov {

// Maps a natural to its display label; defaults to decimal.
using LabelFn = std::function<std::string(unsigned)>;
LabelFn decimal_labels();
LabelFn labels_of(const PowersetModel& m);

// Minimal parentheses under the precedence \ over * over +; re-parsing the
// output reproduces the term exactly.
std::string render(const TermPtr& t);
std::string render(const Equation& e);
std::string render(const EqSystem& s);

// Clause-explicit form: clauses are parenthesized when there is more than
// one; atoms print as "a\b" ("a\0" for bare symbols, "0" for the zero atom).
std::string render(const DnfTerm& t);
std::string render(const CnfTerm& t);

std::string render(const FinSet& s, const LabelFn& labels = decimal_labels());

// "x1*x2*{1,2} <= x3+x4"; an empty right side prints as "= 0".
std::string render(const NormalInequality& ni, const LabelFn& labels = decimal_labels());

}  // namespace ershov
