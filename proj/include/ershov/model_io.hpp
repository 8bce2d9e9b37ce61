// Copyright (c) ershov-algebras contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ershov/model.hpp"

namespace ershov {

// Parsed model file.
//
//   {
//     "type": "powerset",
//     "atoms": ["1", "2"],
//     "constants": {"c": ["1"]},
//     "witnesses": {"F": ["1"]},                     // optional
//     "families": {                                  // optional
//       "F": {"elements": [["1"], ["2"]]},
//       "G": {"singletons": 5},
//       "H": {"singletons": "all"},
//       "K": {"finite": false}
//     }
//   }
//
// Atom labels are strings; constant and witness values are arrays of atom
// labels.  Family elements may also use plain naturals beyond the declared
// atoms ("singletons" does).
struct LoadedModel {
  PowersetModel model;
  std::map<std::string, FinSet> witnesses;  // family label -> witness element
  std::vector<ConstantFamily> families;
};

LoadedModel load_model(const std::string& path);
LoadedModel parse_model(const std::string& json_text, const std::string& origin = "<model>");

}  // namespace ershov
