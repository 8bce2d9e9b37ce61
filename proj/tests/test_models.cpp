// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ershov/errors.hpp"
#include "ershov/model.hpp"

using namespace ershov;

namespace {
PowersetModel model12() { return PowersetModel::over(FinSet{1, 2}, {}); }
}  // namespace

TEST_CASE("model operations are the set operations") {
  PowersetModel m = model12();
  Element e1 = m.element_of(FinSet{1});
  Element e2 = m.element_of(FinSet{2});
  Element e12 = m.element_of(FinSet{1, 2});
  CHECK(m.join(e1, e2) == e12);
  CHECK(m.diff(e12, e2) == e1);
  CHECK(m.diff(e1, e12) == m.zero());
  CHECK(m.meet(e1, e2) == m.zero());
  CHECK(m.leq(e1, e12));
  CHECK(!m.leq(e12, e1));
}

TEST_CASE("elements outside the model are rejected") {
  PowersetModel m = model12();
  CHECK_THROWS_AS(m.element_of(FinSet{3}), SemanticError);
  CHECK_THROWS_AS(m.join(1 << 5, 0), SemanticError);
  CHECK_THROWS_AS(m.constant_element("nope"), SemanticError);
}

TEST_CASE("enumerate_elements") {
  CHECK(PowersetModel::over(FinSet{}, {}).enumerate_elements().size() == 1);
  CHECK(PowersetModel::over(FinSet{1}, {}).enumerate_elements().size() == 2);
  CHECK(model12().enumerate_elements().size() == 4);
}

TEST_CASE("axioms hold on powerset models of 1..4 atoms") {
  for (unsigned n = 1; n <= 4; ++n) {
    PowersetModel m = PowersetModel::over(FinSet::range(n), {});
    AxiomReport report = verify_ershov_axioms(m);
    CHECK(report.ok);
    CHECK(report.checked.size() == 7);
  }
}

TEST_CASE("a corrupted difference table fails the interval-complement law") {
  PowersetModel m = PowersetModel::over(FinSet{1}, {});
  FiniteAlgebra alg = algebra_of(m);
  // force diff({1},{1}) = {1}
  alg.diff = [](Element b, Element a) { return b == 1 && a == 1 ? Element{1} : (b & ~a); };
  AxiomReport report = verify_ershov_axioms(alg);
  CHECK(!report.ok);
  CHECK(report.failed_law == "interval-complement");
  REQUIRE(report.witness.size() == 2);
}

TEST_CASE("axiom check refuses models above 5 atoms") {
  PowersetModel m = PowersetModel::over(FinSet::range(6), {});
  CHECK_THROWS_AS(verify_ershov_axioms(m), BudgetError);
}

TEST_CASE("difference is the unique interval complement") {
  for (unsigned n = 1; n <= 4; ++n) {
    PowersetModel m = PowersetModel::over(FinSet::range(n), {});
    for (Element a : m.enumerate_elements()) {
      for (Element b : m.enumerate_elements()) {
        Element expected = m.diff(b, a);
        int count = 0;
        for (Element x : m.enumerate_elements())
          if (m.meet(x, a) == m.zero() && m.join(x, a) == m.join(a, b)) {
            ++count;
            CHECK(x == expected);
          }
        CHECK(count == 1);
      }
    }
  }
}

TEST_CASE("basic difference identities hold for all pairs, up to 4 atoms") {
  for (unsigned n = 1; n <= 4; ++n) {
    PowersetModel m = PowersetModel::over(FinSet::range(n), {});
    for (Element x : m.enumerate_elements()) {
      for (Element y : m.enumerate_elements()) {
        Element d = m.diff(x, y);
        CHECK(m.leq(d, x));
        CHECK(m.join(d, x) == x);
        CHECK(m.join(d, m.meet(x, y)) == x);
        CHECK(m.join(d, y) == m.join(x, y));
        CHECK(m.meet(d, x) == d);
        CHECK(m.meet(d, y) == m.zero());
      }
    }
  }
}

TEST_CASE("constants must be subsets of the atoms") {
  CHECK_THROWS_AS(PowersetModel::over(FinSet{1}, {{"c", FinSet{2}}}), SemanticError);
  PowersetModel m = PowersetModel::over(FinSet{1, 2}, {{"c", FinSet{2}}});
  CHECK(m.constant_element("c") == m.element_of(FinSet{2}));
}

TEST_CASE("from_labels maps labels to atom indices") {
  PowersetModel m = PowersetModel::from_labels({"a", "b"}, {{"c", {"b"}}});
  CHECK(m.atom_count() == 2);
  CHECK(m.constant_element("c") == m.element_of(FinSet{1}));
  CHECK(m.render_element(m.universe()) == "{a,b}");
  CHECK_THROWS_AS(PowersetModel::from_labels({"a", "a"}, {}), SemanticError);
  CHECK_THROWS_AS(PowersetModel::from_labels({"a"}, {{"c", {"zz"}}}), SemanticError);
}

TEST_CASE("constant families") {
  ConstantFamily explicit_family;
  explicit_family.label = "F";
  explicit_family.kind = ConstantFamily::Kind::Explicit;
  explicit_family.elements = {FinSet{1}, FinSet{2, 3}};
  CHECK(explicit_family.finite() == true);
  CHECK(explicit_family.expand().size() == 2);

  ConstantFamily bounded;
  bounded.label = "G";
  bounded.kind = ConstantFamily::Kind::Singletons;
  bounded.singleton_limit = 5;
  CHECK(bounded.finite() == true);
  CHECK(bounded.expand().size() == 5);
  CHECK(bounded.expand()[3] == FinSet{3});

  ConstantFamily unbounded;
  unbounded.label = "H";
  unbounded.kind = ConstantFamily::Kind::Singletons;
  CHECK(unbounded.finite() == false);
  CHECK_THROWS_AS(unbounded.expand(), FamilyError);

  ConstantFamily opaque;
  opaque.label = "K";
  opaque.kind = ConstantFamily::Kind::Opaque;
  CHECK(!opaque.finite().has_value());
  opaque.declared_finite = false;
  CHECK(opaque.finite() == false);
}
