// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ershov/model_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ershov/errors.hpp"

namespace ershov {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& origin, const std::string& message,
                      const std::string& key = {}) {
  throw SemanticError(origin + ": " + message, key);
}

bool valid_constant_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  // names like x1 would be parsed as variables
  if (name.size() > 1 && name[0] == 'x' && std::isdigit(static_cast<unsigned char>(name[1])))
    return false;
  return true;
}

FinSet atoms_to_finset(const json& value, const std::map<std::string, unsigned>& index_of,
                       const std::string& origin, const std::string& key) {
  if (!value.is_array()) bad(origin, "'" + key + "' must be an array of atom labels", key);
  FinSet out;
  for (const auto& item : value) {
    if (!item.is_string()) bad(origin, "'" + key + "' must contain atom labels", key);
    auto it = index_of.find(item.get<std::string>());
    if (it == index_of.end())
      bad(origin, "'" + key + "' references unknown atom '" + item.get<std::string>() + "'", key);
    out.insert(it->second);
  }
  return out;
}

ConstantFamily parse_family(const std::string& label, const json& spec,
                            const std::map<std::string, unsigned>& index_of,
                            const std::string& origin) {
  ConstantFamily family;
  family.label = label;
  if (!spec.is_object()) bad(origin, "family '" + label + "' must be an object", label);
  if (spec.contains("elements")) {
    family.kind = ConstantFamily::Kind::Explicit;
    if (!spec["elements"].is_array())
      bad(origin, "family '" + label + "': 'elements' must be an array", label);
    for (const auto& member : spec["elements"])
      family.elements.push_back(atoms_to_finset(member, index_of, origin, label));
  } else if (spec.contains("singletons")) {
    family.kind = ConstantFamily::Kind::Singletons;
    const auto& s = spec["singletons"];
    if (s.is_number_unsigned())
      family.singleton_limit = s.get<unsigned>();
    else if (s.is_string() && s.get<std::string>() == "all")
      family.singleton_limit.reset();
    else
      bad(origin, "family '" + label + "': 'singletons' must be a count or \"all\"", label);
  } else {
    family.kind = ConstantFamily::Kind::Opaque;
  }
  if (spec.contains("finite")) {
    if (!spec["finite"].is_boolean())
      bad(origin, "family '" + label + "': 'finite' must be a boolean", label);
    family.declared_finite = spec["finite"].get<bool>();
  }
  if (spec.contains("witness"))
    family.witness = atoms_to_finset(spec["witness"], index_of, origin, label);
  return family;
}

}  // namespace

LoadedModel parse_model(const std::string& json_text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SemanticError(origin + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) bad(origin, "model file must be a JSON object");
  if (!doc.contains("type") || !doc["type"].is_string() ||
      doc["type"].get<std::string>() != "powerset")
    bad(origin, "model 'type' must be \"powerset\"", "type");
  if (!doc.contains("atoms") || !doc["atoms"].is_array())
    bad(origin, "model must declare an 'atoms' array", "atoms");

  std::vector<std::string> atom_labels;
  std::map<std::string, unsigned> index_of;
  for (const auto& a : doc["atoms"]) {
    if (!a.is_string()) bad(origin, "atom labels must be strings", "atoms");
    std::string label = a.get<std::string>();
    if (!index_of.emplace(label, static_cast<unsigned>(atom_labels.size())).second)
      bad(origin, "duplicate atom label '" + label + "'", label);
    atom_labels.push_back(std::move(label));
  }

  std::map<std::string, std::vector<std::string>> constants;
  if (doc.contains("constants")) {
    if (!doc["constants"].is_object()) bad(origin, "'constants' must be an object", "constants");
    for (const auto& [name, value] : doc["constants"].items()) {
      if (!valid_constant_name(name))
        bad(origin, "invalid constant name '" + name + "'", name);
      if (!value.is_array()) bad(origin, "constant '" + name + "' must be an array", name);
      std::vector<std::string> labels;
      for (const auto& item : value) {
        if (!item.is_string()) bad(origin, "constant '" + name + "' must list atom labels", name);
        labels.push_back(item.get<std::string>());
      }
      constants.emplace(name, std::move(labels));
    }
  }

  LoadedModel out;
  out.model = PowersetModel::from_labels(atom_labels, constants);

  if (doc.contains("witnesses")) {
    if (!doc["witnesses"].is_object()) bad(origin, "'witnesses' must be an object", "witnesses");
    for (const auto& [label, value] : doc["witnesses"].items())
      out.witnesses.emplace(label, atoms_to_finset(value, index_of, origin, label));
  }

  if (doc.contains("families")) {
    if (!doc["families"].is_object()) bad(origin, "'families' must be an object", "families");
    for (const auto& [label, spec] : doc["families"].items())
      out.families.push_back(parse_family(label, spec, index_of, origin));
  }
  return out;
}

LoadedModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SemanticError("cannot open model file '" + path + "'", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str(), path);
}

}  // namespace ershov
