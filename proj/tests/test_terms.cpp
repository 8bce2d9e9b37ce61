// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ershov/term.hpp"
#include "test_util.hpp"

using namespace ershov;

TEST_CASE("free_vars") {
  CHECK(free_vars(Term::zero()).empty());
  CHECK(free_vars(Term::diff(Term::var(1), Term::constant("c"))) == std::set<int>{1});
  CHECK(free_vars(Term::join(Term::var(2), Term::meet(Term::var(1), Term::var(2)))) ==
        std::set<int>{1, 2});
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(Term::var(0), std::invalid_argument);
  CHECK_THROWS_AS(Term::var(-3), std::invalid_argument);
  CHECK_THROWS_AS(Term::constant(""), std::invalid_argument);
}

TEST_CASE("eq_as_pair_of_inequalities") {
  Equation eq{Term::var(1), Term::var(2), EqKind::Equal};
  auto pair = eq_as_pair_of_inequalities(eq);
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].kind == EqKind::LessOrEqual);
  CHECK(term_equal(pair[0].lhs, Term::var(1)));
  CHECK(term_equal(pair[0].rhs, Term::var(2)));
  CHECK(term_equal(pair[1].lhs, Term::var(2)));
  CHECK(term_equal(pair[1].rhs, Term::var(1)));

  Equation degenerate{Term::zero(), Term::zero(), EqKind::Equal};
  CHECK(eq_as_pair_of_inequalities(degenerate).size() == 2);

  Equation ineq{Term::var(1), Term::var(2), EqKind::LessOrEqual};
  auto same = eq_as_pair_of_inequalities(ineq);
  REQUIRE(same.size() == 1);
  CHECK(equation_equal(same[0], ineq));
}

TEST_CASE("symbol ordering: variables, then constants, then zero") {
  Symbol x1 = Symbol::variable(1);
  Symbol x2 = Symbol::variable(2);
  Symbol a = Symbol::constant("a");
  Symbol b = Symbol::constant("b");
  Symbol z = Symbol::zero();
  CHECK(x1 < x2);
  CHECK(x2 < a);
  CHECK(a < b);
  CHECK(b < z);
}

TEST_CASE("difference atom canonicalization") {
  CHECK(DifferenceAtom::make(Symbol::zero(), Symbol::variable(1)).is_zero());
  CHECK(DifferenceAtom::make(Symbol::variable(1), Symbol::variable(1)).is_zero());
  CHECK(DifferenceAtom::make(Symbol::constant("c"), Symbol::constant("c")).is_zero());
  auto a = DifferenceAtom::make(Symbol::variable(1), Symbol::zero());
  CHECK(!a.is_zero());
  CHECK(a.minus.is_zero());
}

TEST_CASE("meet clause drops to zero and absorbs v\\0") {
  auto x1_0 = DifferenceAtom::make(Symbol::variable(1), Symbol::zero());
  auto x1_c = DifferenceAtom::make(Symbol::variable(1), Symbol::constant("c"));
  auto x2_0 = DifferenceAtom::make(Symbol::variable(2), Symbol::zero());

  Clause absorbed = Clause::canonical_meet({x1_0, x1_c, x2_0});
  CHECK(absorbed.atoms() == std::vector<DifferenceAtom>{x1_c, x2_0});

  Clause zero = Clause::canonical_meet({x1_0, DifferenceAtom::zero_atom()});
  CHECK(zero.is_zero_clause());
}

TEST_CASE("join clause drops zero atoms and absorbs v\\w") {
  auto x1_0 = DifferenceAtom::make(Symbol::variable(1), Symbol::zero());
  auto x1_c = DifferenceAtom::make(Symbol::variable(1), Symbol::constant("c"));
  Clause c = Clause::canonical_join({x1_c, DifferenceAtom::zero_atom(), x1_0});
  CHECK(c.atoms() == std::vector<DifferenceAtom>{x1_0});

  Clause zero = Clause::canonical_join({DifferenceAtom::zero_atom()});
  CHECK(zero.is_zero_clause());
}

TEST_CASE("DNF: canonical equality is insertion-order independent") {
  auto atom = [](int v, const char* c) {
    return DifferenceAtom::make(Symbol::variable(v), Symbol::constant(c));
  };
  std::vector<Clause> clauses = {
      Clause::canonical_meet({atom(1, "a")}),
      Clause::canonical_meet({atom(2, "b"), atom(3, "a")}),
      Clause::canonical_meet({atom(1, "b")}),
  };
  DnfTerm reference = DnfTerm::of_clauses(clauses);

  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    std::shuffle(clauses.begin(), clauses.end(), rng);
    CHECK(DnfTerm::of_clauses(clauses) == reference);
  }
}

TEST_CASE("DNF: superset clauses are removed, zero clauses dropped") {
  auto a1 = DifferenceAtom::make(Symbol::variable(1), Symbol::zero());
  auto a2 = DifferenceAtom::make(Symbol::variable(2), Symbol::zero());
  DnfTerm t = DnfTerm::of_clauses({
      Clause::canonical_meet({a1, a2}),
      Clause::canonical_meet({a1}),
      Clause::canonical_meet({DifferenceAtom::zero_atom()}),
  });
  REQUIRE(t.clauses().size() == 1);
  CHECK(t.clauses()[0].atoms() == std::vector<DifferenceAtom>{a1});

  DnfTerm zero = DnfTerm::of_clauses({});
  CHECK(zero.is_zero());
  CHECK(zero.to_term()->kind() == TermKind::Zero);
}

TEST_CASE("CNF: a zero clause collapses the whole term") {
  auto a1 = DifferenceAtom::make(Symbol::variable(1), Symbol::zero());
  CnfTerm t = CnfTerm::of_clauses({
      Clause::canonical_join({a1}),
      Clause::canonical_join({}),
  });
  CHECK(t.is_zero());
}

TEST_CASE("term_compare is a total order consistent with equality") {
  testing::TermGen gen(11);
  for (int i = 0; i < 200; ++i) {
    TermPtr a = gen.term(4);
    TermPtr b = gen.term(4);
    auto ab = term_compare(a, b);
    auto ba = term_compare(b, a);
    if (ab == std::strong_ordering::equal) {
      CHECK(term_equal(a, b));
      CHECK(ba == std::strong_ordering::equal);
    } else {
      CHECK((ab == std::strong_ordering::less) == (ba == std::strong_ordering::greater));
    }
  }
}
