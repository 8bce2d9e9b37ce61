// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ershov/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "ershov/errors.hpp"

namespace ershov {

namespace {
std::string decimal_label(unsigned n) { return std::to_string(n); }

void uniquify(std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    bool clash;
    do {
      clash = false;
      for (std::size_t j = 0; j < i; ++j) {
        if (labels[j] == labels[i]) {
          labels[i] += '\'';
          clash = true;
          break;
        }
      }
    } while (clash);
  }
}
}  // namespace

PowersetModel PowersetModel::over(const FinSet& atoms, ConstantTable constants,
                                  const std::vector<std::string>* natural_labels) {
  if (atoms.size() > 62) throw std::invalid_argument("model too large: more than 62 atoms");
  PowersetModel m;
  m.atoms_ = atoms;
  m.labels_.reserve(atoms.size());
  for (unsigned n : atoms.members()) {
    if (natural_labels && n < natural_labels->size() && !(*natural_labels)[n].empty())
      m.labels_.push_back((*natural_labels)[n]);
    else
      m.labels_.push_back(decimal_label(n));
  }
  uniquify(m.labels_);
  for (const auto& [name, value] : constants) {
    if (!value.subset_of(atoms))
      throw SemanticError("constant '" + name + "' is not a subset of the model atoms", name);
  }
  m.constants_ = std::move(constants);
  return m;
}

PowersetModel PowersetModel::from_labels(
    const std::vector<std::string>& atom_labels,
    const std::map<std::string, std::vector<std::string>>& constants) {
  std::map<std::string, unsigned> index_of;
  for (unsigned i = 0; i < atom_labels.size(); ++i) {
    if (!index_of.emplace(atom_labels[i], i).second)
      throw SemanticError("duplicate atom label '" + atom_labels[i] + "'", atom_labels[i]);
  }
  ConstantTable table;
  for (const auto& [name, labels] : constants) {
    FinSet value;
    for (const auto& l : labels) {
      auto it = index_of.find(l);
      if (it == index_of.end())
        throw SemanticError("constant '" + name + "' references unknown atom '" + l + "'", name);
      value.insert(it->second);
    }
    table.emplace(name, std::move(value));
  }
  std::vector<std::string> by_natural(atom_labels.begin(), atom_labels.end());
  return over(FinSet::range(static_cast<unsigned>(atom_labels.size())), std::move(table),
              &by_natural);
}

void PowersetModel::check_element(Element e) const {
  if (e & ~universe()) throw SemanticError("element is not a subset of the model atoms");
}

Element PowersetModel::join(Element a, Element b) const {
  check_element(a);
  check_element(b);
  return a | b;
}

Element PowersetModel::meet(Element a, Element b) const {
  check_element(a);
  check_element(b);
  return a & b;
}

Element PowersetModel::diff(Element b, Element a) const {
  check_element(a);
  check_element(b);
  return b & ~a & universe();
}

bool PowersetModel::leq(Element a, Element b) const {
  check_element(a);
  check_element(b);
  return (a & ~b) == 0;
}

std::vector<Element> PowersetModel::enumerate_elements() const {
  std::vector<Element> out;
  out.reserve(element_count());
  for (Element e = 0; e < element_count(); ++e) out.push_back(e);
  return out;
}

Element PowersetModel::element_of(const FinSet& s) const {
  Element e = 0;
  const auto& atoms = atoms_.members();
  for (unsigned n : s.members()) {
    auto it = std::lower_bound(atoms.begin(), atoms.end(), n);
    if (it == atoms.end() || *it != n)
      throw SemanticError("value is not a subset of the model atoms");
    e |= Element{1} << (it - atoms.begin());
  }
  return e;
}

FinSet PowersetModel::finset_of(Element e) const {
  check_element(e);
  FinSet out;
  for (int i = 0; i < atom_count(); ++i)
    if (e & (Element{1} << i)) out.insert(atoms_.members()[i]);
  return out;
}

bool PowersetModel::has_constant(std::string_view name) const {
  return constants_.find(std::string(name)) != constants_.end();
}

Element PowersetModel::constant_element(std::string_view name) const {
  auto it = constants_.find(std::string(name));
  if (it == constants_.end())
    throw SemanticError("unknown constant '" + std::string(name) + "'", std::string(name));
  return element_of(it->second);
}

std::string PowersetModel::render_element(Element e) const {
  check_element(e);
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < atom_count(); ++i) {
    if (!(e & (Element{1} << i))) continue;
    if (!first) out += ',';
    out += labels_[i];
    first = false;
  }
  out += '}';
  return out;
}

// --- axiom checking -----------------------------------------------------------

FiniteAlgebra algebra_of(const PowersetModel& m) {
  FiniteAlgebra alg;
  alg.elements = m.enumerate_elements();
  alg.join = [m](Element a, Element b) { return m.join(a, b); };
  alg.meet = [m](Element a, Element b) { return m.meet(a, b); };
  alg.diff = [m](Element b, Element a) { return m.diff(b, a); };
  alg.zero = 0;
  return alg;
}

namespace {
struct LawCheck {
  std::string name;
  int arity;
  std::function<bool(const FiniteAlgebra&, Element, Element, Element)> holds;
};
}  // namespace

AxiomReport verify_ershov_axioms(const FiniteAlgebra& alg) {
  if (alg.elements.size() > 32)
    throw BudgetError("axiom check limited to models of at most 5 atoms",
                      static_cast<unsigned>(alg.elements.size()), 32);

  const std::vector<LawCheck> laws = {
      {"idempotence", 1,
       [](const FiniteAlgebra& g, Element a, Element, Element) {
         return g.meet(a, a) == a && g.join(a, a) == a;
       }},
      {"commutativity", 2,
       [](const FiniteAlgebra& g, Element a, Element b, Element) {
         return g.meet(a, b) == g.meet(b, a) && g.join(a, b) == g.join(b, a);
       }},
      {"associativity", 3,
       [](const FiniteAlgebra& g, Element a, Element b, Element c) {
         return g.meet(g.meet(a, b), c) == g.meet(a, g.meet(b, c)) &&
                g.join(g.join(a, b), c) == g.join(a, g.join(b, c));
       }},
      {"absorption", 2,
       [](const FiniteAlgebra& g, Element a, Element b, Element) {
         return g.meet(a, g.join(a, b)) == a && g.join(a, g.meet(a, b)) == a;
       }},
      {"distributivity", 3,
       [](const FiniteAlgebra& g, Element a, Element b, Element c) {
         return g.meet(a, g.join(b, c)) == g.join(g.meet(a, b), g.meet(a, c)) &&
                g.join(a, g.meet(b, c)) == g.meet(g.join(a, b), g.join(a, c));
       }},
      {"zero", 1,
       [](const FiniteAlgebra& g, Element a, Element, Element) {
         return g.join(a, g.zero) == a && g.meet(a, g.zero) == g.zero;
       }},
      {"interval-complement", 2,
       [](const FiniteAlgebra& g, Element a, Element b, Element) {
         Element d = g.diff(b, a);
         return g.meet(d, a) == g.zero && g.join(d, a) == g.join(a, b);
       }},
  };

  AxiomReport report;
  for (const auto& law : laws) {
    report.checked.push_back(law.name);
    for (Element a : alg.elements) {
      for (Element b : law.arity >= 2 ? alg.elements : std::vector<Element>{0}) {
        for (Element c : law.arity >= 3 ? alg.elements : std::vector<Element>{0}) {
          if (!law.holds(alg, a, b, c)) {
            report.ok = false;
            report.failed_law = law.name;
            report.witness.assign({a, b, c});
            report.witness.resize(law.arity);
            return report;
          }
        }
      }
    }
  }
  return report;
}

AxiomReport verify_ershov_axioms(const PowersetModel& m) {
  return verify_ershov_axioms(algebra_of(m));
}

// --- constant families ----------------------------------------------------------

std::optional<bool> ConstantFamily::finite() const {
  switch (kind) {
    case Kind::Explicit: return true;
    case Kind::Singletons: return singleton_limit.has_value();
    case Kind::Opaque: return declared_finite;
  }
  return std::nullopt;
}

std::vector<FinSet> ConstantFamily::expand() const {
  switch (kind) {
    case Kind::Explicit: return elements;
    case Kind::Singletons: {
      if (!singleton_limit)
        throw FamilyError("family '" + label + "' is infinite and cannot be expanded");
      std::vector<FinSet> out;
      out.reserve(*singleton_limit);
      for (unsigned j = 0; j < *singleton_limit; ++j) out.push_back(FinSet::singleton(j));
      return out;
    }
    case Kind::Opaque:
      throw FamilyError("family '" + label + "' has no computable elements");
  }
  return {};
}

}  // namespace ershov
