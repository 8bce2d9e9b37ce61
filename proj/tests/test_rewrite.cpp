// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ershov/parser.hpp"
#include "ershov/render.hpp"
#include "ershov/rewrite.hpp"
#include "ershov/semantics.hpp"
#include "test_util.hpp"

using namespace ershov;

namespace {

const CatalogueEntry& entry(const std::string& id) {
  for (const auto& e : rule_catalogue())
    if (e.id == id) return e;
  REQUIRE_MESSAGE(false, "missing catalogue entry ", id);
  throw std::logic_error("unreachable");
}

// Exhaustive check of one catalogue entry over powerset(3); pattern
// variables range over all elements.
bool holds_everywhere(const CatalogueEntry& e, const PowersetModel& m) {
  std::set<int> vars;
  if (e.kind == RuleKind::system_equivalence) {
    for (const auto& eq : e.left_system) {
      auto l = free_vars(eq.lhs), r = free_vars(eq.rhs);
      vars.insert(l.begin(), l.end());
      vars.insert(r.begin(), r.end());
    }
    for (const auto& eq : e.right_system) {
      auto l = free_vars(eq.lhs), r = free_vars(eq.rhs);
      vars.insert(l.begin(), l.end());
      vars.insert(r.begin(), r.end());
    }
  } else {
    auto l = free_vars(e.lhs), r = free_vars(e.rhs);
    vars.insert(l.begin(), l.end());
    vars.insert(r.begin(), r.end());
  }
  bool ok = true;
  for_each_assignment(m, {vars.begin(), vars.end()}, kDefaultBudget, [&](const Assignment& a) {
    if (!ok) return;
    switch (e.kind) {
      case RuleKind::identity: ok = eval(e.lhs, m, a) == eval(e.rhs, m, a); break;
      case RuleKind::inequality: ok = m.leq(eval(e.lhs, m, a), eval(e.rhs, m, a)); break;
      case RuleKind::system_equivalence: {
        EqSystem left{e.left_system}, right{e.right_system};
        ok = satisfies(left, m, a) == satisfies(right, m, a);
        break;
      }
    }
  });
  return ok;
}

}  // namespace

TEST_CASE("catalogue statuses") {
  CHECK(entry("diff-of-diff").status == RuleStatus::corrected);
  CHECK(entry("join-of-diffs").status == RuleStatus::refuted);
  CHECK(entry("meet-of-diffs").status == RuleStatus::verified);
  CHECK(entry("diff-meet-minus").status == RuleStatus::verified);
  CHECK(rule_catalogue().size() == 17);
}

TEST_CASE("every non-refuted catalogue entry holds exhaustively over powerset(3)") {
  PowersetModel m = PowersetModel::over(FinSet::range(3), {});
  for (const auto& e : rule_catalogue()) {
    if (e.status == RuleStatus::refuted) continue;
    CHECK_MESSAGE(holds_everywhere(e, m), "entry ", e.id);
  }
}

TEST_CASE("the corrected rule: join variant fails, meet variant holds") {
  PowersetModel m = PowersetModel::over(FinSet::range(3), {});
  TermPtr join_variant_lhs = parse_term("(x1\\x2)\\x3");
  TermPtr join_variant_rhs = parse_term("(x1\\x2)+(x1\\x3)");
  TermPtr meet_variant_rhs = parse_term("(x1\\x2)*(x1\\x3)");
  int join_failures = 0;
  bool meet_holds = true;
  for_each_assignment(m, {1, 2, 3}, kDefaultBudget, [&](const Assignment& a) {
    Element lhs = eval(join_variant_lhs, m, a);
    if (lhs != eval(join_variant_rhs, m, a)) ++join_failures;
    if (lhs != eval(meet_variant_rhs, m, a)) meet_holds = false;
  });
  CHECK(join_failures > 0);
  CHECK(meet_holds);
  // and the corrected form agrees with x1\(x2+x3)
  TermPtr folded = parse_term("x1\\(x2+x3)");
  CHECK(testing::same_value_everywhere(join_variant_lhs, folded, m));
}

TEST_CASE("the refuted merge: counterexample exists, one-sided bound holds") {
  PowersetModel m = PowersetModel::over(FinSet{1, 2, 3}, {});
  const CatalogueEntry& e = entry("join-of-diffs");
  int mismatches = 0;
  bool le_holds = true;
  for_each_assignment(m, {1, 2, 3, 4}, kDefaultBudget, [&](const Assignment& a) {
    Element lhs = eval(e.lhs, m, a);
    Element rhs = eval(e.rhs, m, a);
    if (lhs != rhs) ++mismatches;
    if (!m.leq(lhs, rhs)) le_holds = false;
  });
  CHECK(mismatches > 0);
  CHECK(le_holds);

  // the documented witness: a1={1,2}, b1={1}, a2={3}, b2={2}
  Assignment w{{1, m.element_of(FinSet{1, 2})},
               {2, m.element_of(FinSet{1})},
               {3, m.element_of(FinSet{3})},
               {4, m.element_of(FinSet{2})}};
  CHECK(eval(e.lhs, m, w) == m.element_of(FinSet{2, 3}));
  CHECK(eval(e.rhs, m, w) == m.element_of(FinSet{1, 2, 3}));
}

namespace {
DifferenceAtom atom(const char* base, const char* minus) {
  auto sym = [](const char* s) {
    if (std::string(s) == "0") return Symbol::zero();
    if (s[0] == 'x') return Symbol::variable(std::atoi(s + 1));
    return Symbol::constant(s);
  };
  return DifferenceAtom::make(sym(base), sym(minus));
}
}  // namespace

TEST_CASE("DNF normal forms match the documented shapes") {
  SUBCASE("difference distributes over a join on the left") {
    DnfTerm d = normalize_term_dnf(parse_term("(x1+x2)\\c"));
    REQUIRE(d.clauses().size() == 2);
    CHECK(d.clauses()[0].atoms() == std::vector<DifferenceAtom>{atom("x1", "c")});
    CHECK(d.clauses()[1].atoms() == std::vector<DifferenceAtom>{atom("x2", "c")});
  }
  SUBCASE("difference by a difference splits into two clauses") {
    DnfTerm d = normalize_term_dnf(parse_term("x1\\(c1\\c2)"));
    REQUIRE(d.clauses().size() == 2);
    CHECK(d.clauses()[0].atoms() == std::vector<DifferenceAtom>{atom("x1", "c1")});
    CHECK(d.clauses()[1].atoms() ==
          std::vector<DifferenceAtom>{atom("x1", "0"), atom("c1", "0"), atom("c2", "0")});
  }
  SUBCASE("a bare variable becomes v\\0") {
    DnfTerm d = normalize_term_dnf(parse_term("x1"));
    REQUIRE(d.clauses().size() == 1);
    CHECK(d.clauses()[0].atoms() == std::vector<DifferenceAtom>{atom("x1", "0")});
  }
  SUBCASE("left-nested differences meet") {
    DnfTerm d = normalize_term_dnf(parse_term("(x1\\x2)\\x3"));
    REQUIRE(d.clauses().size() == 1);
    CHECK(d.clauses()[0].atoms() ==
          std::vector<DifferenceAtom>{atom("x1", "x2"), atom("x1", "x3")});
    // value check against x1\(x2+x3), exhaustively over powerset(3)
    PowersetModel m = PowersetModel::over(FinSet::range(3), {});
    CHECK(testing::same_value_everywhere(d.to_term(), parse_term("x1\\(x2+x3)"), m));
  }
}

TEST_CASE("CNF normal forms match the documented shapes") {
  SUBCASE("a meet of variables is already CNF") {
    CnfTerm c = normalize_term_cnf(parse_term("x1*x2"));
    REQUIRE(c.clauses().size() == 2);
    CHECK(c.clauses()[0].atoms() == std::vector<DifferenceAtom>{atom("x1", "0")});
    CHECK(c.clauses()[1].atoms() == std::vector<DifferenceAtom>{atom("x2", "0")});
  }
  SUBCASE("join distributes into the meet") {
    CnfTerm c = normalize_term_cnf(parse_term("(x1*x2)+c"));
    REQUIRE(c.clauses().size() == 2);
    CHECK(c.clauses()[0].atoms() ==
          std::vector<DifferenceAtom>{atom("x1", "0"), atom("c", "0")});
    CHECK(c.clauses()[1].atoms() ==
          std::vector<DifferenceAtom>{atom("x2", "0"), atom("c", "0")});
  }
  SUBCASE("difference by a meet becomes one join clause") {
    CnfTerm c = normalize_term_cnf(parse_term("x1\\(c1*c2)"));
    REQUIRE(c.clauses().size() == 1);
    CHECK(c.clauses()[0].atoms() ==
          std::vector<DifferenceAtom>{atom("x1", "c1"), atom("x1", "c2")});
  }
}

TEST_CASE("normalize_equation rewrites both sides") {
  Equation e = normalize_equation(
      Equation{parse_term("(x1+x2)\\c"), parse_term("x3"), EqKind::Equal});
  CHECK(render(e.lhs) == "x1\\c+x2\\c");
  CHECK(render(e.rhs) == "x3\\0");

  Equation z = normalize_equation(Equation{parse_term("0"), parse_term("0"), EqKind::Equal});
  CHECK(z.lhs->kind() == TermKind::Zero);
  CHECK(z.rhs->kind() == TermKind::Zero);

  Equation same = normalize_equation(Equation{parse_term("x1"), parse_term("x1"), EqKind::Equal});
  CHECK(term_equal(same.lhs, same.rhs));
}

TEST_CASE("degenerate forms collapse to 0") {
  CHECK(normalize_term_dnf(parse_term("x1\\x1")).is_zero());
  CHECK(normalize_term_dnf(parse_term("0\\x1")).is_zero());
  CHECK(normalize_term_dnf(parse_term("0")).is_zero());
  CHECK(normalize_term_dnf(parse_term("x1*(x2\\x2)")).is_zero());
}

TEST_CASE("random terms: value preservation, shape, idempotence") {
  testing::TermGen gen(101);
  PowersetModel m = PowersetModel::over(FinSet::range(3), testing::three_atom_constants());
  for (int i = 0; i < 300; ++i) {
    TermPtr t = gen.term(5);
    DnfTerm d = normalize_term_dnf(t);
    CnfTerm c = normalize_term_cnf(t);

    auto dnf_shape = testing::check_dnf_shape(d);
    CHECK_MESSAGE(!dnf_shape, *dnf_shape, " for ", render(t));
    auto cnf_shape = testing::check_cnf_shape(c);
    CHECK_MESSAGE(!cnf_shape, *cnf_shape, " for ", render(t));

    CHECK_MESSAGE(testing::same_value_everywhere(t, d.to_term(), m), "dnf of ", render(t));
    CHECK_MESSAGE(testing::same_value_everywhere(t, c.to_term(), m), "cnf of ", render(t));

    CHECK(normalize_term_dnf(d.to_term()) == d);
    CHECK(normalize_term_cnf(c.to_term()) == c);
  }
}

TEST_CASE("difference elimination: trace metrics decrease lexicographically") {
  testing::TermGen gen(131);
  for (int i = 0; i < 200; ++i) {
    TermPtr t = gen.term(5);
    RewriteTrace trace;
    TermPtr flat = eliminate_compound_diffs(t, &trace);
    // result has atomic difference operands only
    std::function<void(const TermPtr&)> check_flat = [&](const TermPtr& u) {
      if (u->is_atomic()) return;
      if (u->kind() == TermKind::Diff) {
        CHECK(u->left()->is_atomic());
        CHECK(u->right()->is_atomic());
        return;
      }
      check_flat(u->left());
      check_flat(u->right());
    };
    check_flat(flat);
    for (const auto& step : trace) {
      auto before = testing::diff_operand_ops(step.before);
      auto after = testing::diff_operand_ops(step.after);
      bool decreased = after.first < before.first ||
                       (after.first == before.first && after.second < before.second);
      CHECK_MESSAGE(decreased, "step ", step.rule, ": ", render(step.before), " -> ",
                    render(step.after));
    }
  }
}

TEST_CASE("every trace step cites a catalogued left/right elimination rule") {
  const std::set<std::string> elimination_rules = {"diff-of-join", "diff-of-meet", "diff-of-diff",
                                                   "diff-by-join", "diff-by-meet", "diff-by-diff"};
  testing::TermGen gen(151);
  for (int i = 0; i < 50; ++i) {
    RewriteTrace trace;
    normalize_term_dnf(gen.term(5), &trace);
    for (const auto& step : trace) CHECK(elimination_rules.count(step.rule) == 1);
  }
}
