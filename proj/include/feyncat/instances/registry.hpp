#pragma once

// Name-based instance lookup for the command line and the test harness.

#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "../algebra.hpp"
#include "ck_graph.hpp"
#include "ck_tree.hpp"
#include "joyal.hpp"
#include "nerve.hpp"
#include "sequence.hpp"
#include "surjections.hpp"

namespace feyncat {

// Fixed-name instances (seq:<letters> and nerve:<file> are parameterized on
// top of these).
inline std::vector<std::string> builtin_instances() {
  return {"surj-ord",      "surj-sym",          "joyal",
          "ck-tree-planar", "ck-tree-sym",      "ck-tree-planar-amp",
          "ck-tree-sym-amp", "ck-graph-core",   "ck-graph-1pi",
          "ck-graph-motic"};
}

inline InstanceSpec instance_by_name(const std::string& name) {
  if (name == "surj-ord") return surjections_instance(true);
  if (name == "surj-sym") return surjections_instance(false);
  if (name == "joyal") return joyal_injection_instance();
  if (name == "ck-tree-planar") return ck_tree_instance(true, false);
  if (name == "ck-tree-sym") return ck_tree_instance(false, false);
  if (name == "ck-tree-planar-amp") return ck_tree_instance(true, true);
  if (name == "ck-tree-sym-amp") return ck_tree_instance(false, true);
  if (name == "ck-graph-core") return ck_graph_instance(GraphFilter::core);
  if (name == "ck-graph-1pi") return ck_graph_instance(GraphFilter::one_pi);
  if (name == "ck-graph-motic") return ck_graph_instance(GraphFilter::motic);
  if (name.rfind("seq:", 0) == 0) {
    std::string letters = name.substr(4);
    if (letters.empty())
      throw std::invalid_argument("registry: seq needs a nonempty alphabet");
    std::vector<std::string> alphabet;
    std::set<char> seen;
    for (char c : letters) {
      if (!seen.insert(c).second)
        throw std::invalid_argument("registry: repeated alphabet letter");
      alphabet.push_back(std::string(1, c));
    }
    return sequence_instance(alphabet);
  }
  if (name.rfind("nerve:", 0) == 0) {
    std::string path = name.substr(6);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("registry: cannot open " + path);
    nlohmann::json j;
    in >> j;
    return nerve_instance(nerve_from_json(j));
  }
  throw std::invalid_argument("registry: unknown instance " + name);
}

}  // namespace feyncat
