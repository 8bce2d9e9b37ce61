// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface for the library: canonical forms, finite-model
// solving, the equivalence oracle, system compaction and the Noetherian
// checks.  Exit codes: 0 success, 2 parse error, 3 unknown symbol,
// 4 unsatisfiable ground system, 5 enumeration budget exceeded,
// 6 indeterminate verdict.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ershov/errors.hpp"
#include "ershov/model_io.hpp"
#include "ershov/noetherian.hpp"
#include "ershov/parser.hpp"
#include "ershov/render.hpp"
#include "ershov/rewrite.hpp"
#include "ershov/semantics.hpp"
#include "ershov/sysnf.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitUnsat = 4;
constexpr int kExitBudget = 5;
constexpr int kExitIndeterminate = 6;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ershov::SemanticError("cannot open file '" + path + "'", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Constants in parsed input must exist in the model (exit 3 otherwise).
void check_constants(const std::set<std::string>& names, const ershov::PowersetModel& m) {
  for (const auto& name : names)
    if (!m.has_constant(name))
      throw ershov::SemanticError("unknown constant '" + name + "'", name);
}

void print_trace(const ershov::RewriteTrace& trace) {
  for (const auto& step : trace)
    std::cout << step.rule << ": " << ershov::render(step.before) << " -> "
              << ershov::render(step.after) << "\n";
}

std::string rule_status_name(ershov::RuleStatus s) {
  switch (s) {
    case ershov::RuleStatus::verified: return "verified";
    case ershov::RuleStatus::corrected: return "corrected";
    default: return "refuted";
  }
}

int cmd_rules() {
  for (const auto& rule : ershov::rule_catalogue()) {
    std::cout << rule.id << ": ";
    switch (rule.kind) {
      case ershov::RuleKind::identity:
        std::cout << ershov::render(rule.lhs) << " = " << ershov::render(rule.rhs);
        break;
      case ershov::RuleKind::inequality:
        std::cout << ershov::render(rule.lhs) << " <= " << ershov::render(rule.rhs);
        break;
      case ershov::RuleKind::system_equivalence: {
        auto system = [](const std::vector<ershov::Equation>& eqs) {
          std::string out;
          for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (i) out += "; ";
            out += ershov::render(eqs[i]);
          }
          return out;
        };
        std::cout << system(rule.left_system) << " ~ " << system(rule.right_system);
        break;
      }
    }
    std::cout << " [" << rule_status_name(rule.status) << "]";
    if (!rule.note.empty()) std::cout << "  # " << rule.note;
    std::cout << "\n";
  }
  return 0;
}

int cmd_normalize_term(const ershov::LoadedModel& loaded, const std::string& term_text, bool cnf,
                       bool trace) {
  ershov::TermPtr term = ershov::parse_term(term_text);
  check_constants(ershov::constant_names(term), loaded.model);
  ershov::RewriteTrace steps;
  ershov::RewriteTrace* sink = trace ? &steps : nullptr;
  std::string result = cnf ? ershov::render(ershov::normalize_term_cnf(term, sink))
                           : ershov::render(ershov::normalize_term_dnf(term, sink));
  if (trace) print_trace(steps);
  std::cout << result << "\n";
  return 0;
}

int cmd_normalize_system(const ershov::LoadedModel& loaded, const std::string& path, bool trace) {
  ershov::EqSystem system = ershov::parse_system(read_file(path));
  check_constants(ershov::constant_names(system), loaded.model);
  ershov::RewriteTrace steps;
  ershov::NormalSystem normal =
      ershov::normalize_system(system, loaded.model.constants(), trace ? &steps : nullptr);
  if (trace) print_trace(steps);
  auto labels = ershov::labels_of(loaded.model);
  if (normal.unsatisfiable) {
    std::cout << "unsatisfiable: " << ershov::render(normal.inequalities.front(), labels) << "\n";
    return kExitUnsat;
  }
  for (const auto& ni : normal.inequalities) {
    std::cout << ershov::render(ni, labels);
    if (ershov::shape_of(ni) == ershov::InequalityShape::ConstBelowJoin) std::cout << " [5-ext]";
    std::cout << "\n";
  }
  return 0;
}

int cmd_solve(const ershov::LoadedModel& loaded, const std::string& path, bool count_only) {
  ershov::EqSystem system = ershov::parse_system(read_file(path));
  check_constants(ershov::constant_names(system), loaded.model);
  ershov::SolutionSet solutions =
      ershov::solve(system, loaded.model, ershov::budget_from_env());
  std::cout << "solutions: " << solutions.assignments.size() << "\n";
  if (count_only) return 0;
  for (const auto& row : solutions.assignments) {
    std::string line;
    for (std::size_t i = 0; i < solutions.variables.size(); ++i) {
      if (i) line += ' ';
      line += 'x' + std::to_string(solutions.variables[i]) + '=' +
              loaded.model.render_element(row[i]);
    }
    std::cout << line << "\n";
  }
  return 0;
}

int cmd_equiv(const ershov::LoadedModel& loaded, const std::string& path1,
              const std::string& path2, int fresh_atoms) {
  ershov::EqSystem s1 = ershov::parse_system(read_file(path1));
  ershov::EqSystem s2 = ershov::parse_system(read_file(path2));
  check_constants(ershov::constant_names(s1), loaded.model);
  check_constants(ershov::constant_names(s2), loaded.model);

  // probe models extend the labelled atoms by their naturals
  std::vector<std::string> by_natural;
  for (int i = 0; i < loaded.model.atom_count(); ++i)
    by_natural.push_back(loaded.model.atom_label(i));

  ershov::ProbeConfig probe;
  probe.max_fresh = fresh_atoms;
  probe.budget = ershov::budget_from_env();
  ershov::EquivVerdict verdict =
      ershov::equivalent(s1, s2, loaded.model.constants(), probe, &by_natural);
  if (verdict.equivalent) {
    std::cout << "equivalent\n";
    return 0;
  }
  const auto& w = *verdict.witness;
  std::cout << "not equivalent\n";
  std::cout << "model atoms: " << w.model.render_element(w.model.universe()) << "\n";
  for (const auto& [var, value] : w.assignment)
    std::cout << "x" << var << "=" << w.model.render_element(value) << "\n";
  std::cout << "first system satisfied: " << (w.satisfies_first ? "yes" : "no") << "\n";
  std::cout << "second system satisfied: " << (w.satisfies_first ? "no" : "yes") << "\n";
  return 0;
}

int cmd_compact(const ershov::LoadedModel& loaded, const std::string& path) {
  ershov::EqSystem system = ershov::parse_system(read_file(path));
  check_constants(ershov::constant_names(system), loaded.model);
  ershov::NormalSystem normal = ershov::normalize_system(system, loaded.model.constants());
  auto labels = ershov::labels_of(loaded.model);
  if (normal.unsatisfiable) {
    std::cout << "unsatisfiable: " << ershov::render(normal.inequalities.front(), labels) << "\n";
    return kExitUnsat;
  }
  ershov::CompactionResult compacted =
      ershov::compact_system(normal.inequalities, {}, loaded.witnesses);
  for (const auto& ni : compacted.inequalities)
    std::cout << ershov::render(ni, labels) << "\n";
  for (const auto& label : compacted.unresolved)
    std::cout << "cannot compact family '" << label << "': unbounded without witness\n";
  return compacted.unresolved.empty() ? 0 : kExitIndeterminate;
}

int cmd_check_noetherian(const ershov::LoadedModel& loaded) {
  ershov::SubalgebraDescriptor descriptor;
  for (const auto& [name, value] : loaded.model.constants())
    descriptor.generators.push_back(value);
  descriptor.families = loaded.families;
  ershov::NoetherianVerdict verdict = ershov::is_equationally_noetherian(descriptor);
  switch (verdict.value) {
    case ershov::NoetherianVerdict::Value::yes:
      std::cout << "equationally Noetherian: yes (|C| = " << verdict.closure_size << ")\n";
      return 0;
    case ershov::NoetherianVerdict::Value::no:
      std::cout << "equationally Noetherian: no (" << verdict.detail << ")\n";
      return 0;
    default:
      std::cout << "equationally Noetherian: indeterminate (" << verdict.detail << ")\n";
      return kExitIndeterminate;
  }
}

int cmd_verify_axioms(const ershov::LoadedModel& loaded) {
  ershov::AxiomReport report = ershov::verify_ershov_axioms(loaded.model);
  for (const auto& law : report.checked) {
    if (!report.ok && law == report.failed_law) {
      std::cout << law << ": FAIL at (";
      for (std::size_t i = 0; i < report.witness.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << loaded.model.render_element(report.witness[i]);
      }
      std::cout << ")\n";
      return 1;
    }
    std::cout << law << ": ok\n";
  }
  std::cout << "all axioms hold\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical forms and finite-model reasoning for relative-complement lattices"};
  app.require_subcommand(1);

  std::string model_path, term_text, file1, file2;
  bool cnf = false, trace = false, count_only = false;
  int fresh_atoms = 2;

  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--model", model_path, "model file (JSON)")->required();
  };

  CLI::App* normalize_term = app.add_subcommand("normalize-term", "canonical DNF/CNF of a term");
  add_model(normalize_term);
  normalize_term->add_flag("--cnf", cnf, "print the CNF instead of the DNF");
  normalize_term->add_flag("--trace", trace, "print each rewrite step");
  normalize_term->add_option("term", term_text, "term text")->required();

  CLI::App* normalize_system =
      app.add_subcommand("normalize-system", "rewrite a system into atomic inequalities");
  add_model(normalize_system);
  normalize_system->add_flag("--trace", trace, "print each rewrite step");
  normalize_system->add_option("file", file1, "system file")->required();

  CLI::App* solve = app.add_subcommand("solve", "enumerate all solutions over the model");
  add_model(solve);
  solve->add_flag("--count-only", count_only, "print only the solution count");
  solve->add_option("file", file1, "system file")->required();

  CLI::App* equiv = app.add_subcommand("equiv", "compare two systems over probe models");
  add_model(equiv);
  equiv->add_option("--fresh-atoms", fresh_atoms, "maximum number of fresh probe atoms")
      ->default_val(2);
  equiv->add_option("file1", file1, "first system file")->required();
  equiv->add_option("file2", file2, "second system file")->required();

  CLI::App* compact = app.add_subcommand("compact", "normalize and compact constant groups");
  add_model(compact);
  compact->add_option("file", file1, "system file")->required();

  CLI::App* check = app.add_subcommand("check-noetherian", "test the finiteness criterion");
  add_model(check);

  CLI::App* verify = app.add_subcommand("verify-axioms", "exhaustively check the model axioms");
  add_model(verify);

  app.add_subcommand("rules", "print the rewrite-rule catalogue");

  CLI11_PARSE(app, argc, argv);

  try {
    ershov::LoadedModel loaded;
    if (!model_path.empty()) loaded = ershov::load_model(model_path);

    if (app.got_subcommand("rules")) return cmd_rules();
    if (app.got_subcommand("normalize-term"))
      return cmd_normalize_term(loaded, term_text, cnf, trace);
    if (app.got_subcommand("normalize-system"))
      return cmd_normalize_system(loaded, file1, trace);
    if (app.got_subcommand("solve")) return cmd_solve(loaded, file1, count_only);
    if (app.got_subcommand("equiv")) return cmd_equiv(loaded, file1, file2, fresh_atoms);
    if (app.got_subcommand("compact")) return cmd_compact(loaded, file1);
    if (app.got_subcommand("check-noetherian")) return cmd_check_noetherian(loaded);
    if (app.got_subcommand("verify-axioms")) return cmd_verify_axioms(loaded);
  } catch (const ershov::ParseError& e) {
    for (const auto& d : e.diagnostics())
      std::cerr << "error: line " << d.span.line << ", column " << d.span.column << ": "
                << d.message << "\n";
    return kExitParse;
  } catch (const ershov::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ershov::SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const ershov::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
