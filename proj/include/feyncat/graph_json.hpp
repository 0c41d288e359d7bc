#pragma once

// JSON wire format for graphs:
//   {vertices:[id...], flags:[id...], involution:[[f,g]...] (2-orbits only;
//    omitted flags are tails), boundary:{f:v...}, decorations:{...}}
// Serialization is deterministic (sorted keys, sorted orbit lists) and
// round-trips bit-exactly: serialize(parse(s)) == s for serialized output.

#include <string>

#include <nlohmann/json.hpp>

#include "graph.hpp"

namespace feyncat {

using json = nlohmann::json;

inline json graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.vertices;
  j["flags"] = g.flags;
  json inv = json::array();
  for (auto& [f, p] : edges(g)) inv.push_back({f, p});
  j["involution"] = inv;
  json bnd = json::object();
  for (auto& [f, v] : g.boundary) bnd[std::to_string(f)] = v;
  j["boundary"] = bnd;
  json d = json::object();
  if (!g.deco.direction.empty()) {
    json m = json::object();
    for (auto& [f, dir] : g.deco.direction)
      m[std::to_string(f)] = (dir == FlagDir::in) ? "in"
                             : (dir == FlagDir::out) ? "out"
                                                     : "none";
    d["direction"] = m;
  }
  if (!g.deco.color.empty()) {
    json m = json::object();
    for (auto& [f, c] : g.deco.color) m[std::to_string(f)] = c;
    d["color"] = m;
  }
  if (!g.deco.mass.empty()) {
    json m = json::object();
    for (auto& [f, c] : g.deco.mass) m[std::to_string(f)] = coeff_to_string(c);
    d["mass"] = m;
  }
  if (!g.deco.momentum.empty()) {
    json m = json::object();
    for (auto& [f, q] : g.deco.momentum) m[std::to_string(f)] = q ? 1 : 0;
    d["momentum"] = m;
  }
  if (!g.deco.tail_label.empty()) {
    json m = json::object();
    for (auto& [f, l] : g.deco.tail_label) m[std::to_string(f)] = l;
    d["tail_label"] = m;
  }
  if (!g.deco.planar.empty()) {
    json m = json::object();
    for (auto& [v, ord] : g.deco.planar) m[std::to_string(v)] = ord;
    d["planar"] = m;
  }
  if (g.deco.root) d["root"] = *g.deco.root;
  if (!d.empty()) j["decorations"] = d;
  return j;
}

inline Graph graph_from_json(const json& j) {
  auto bad = [](const std::string& m) {
    throw std::invalid_argument("graph json: " + m);
  };
  Graph g;
  if (!j.is_object()) bad("not an object");
  for (auto& v : j.value("vertices", json::array()))
    g.vertices.push_back(v.get<VertexId>());
  for (auto& f : j.value("flags", json::array())) g.flags.push_back(f.get<FlagId>());
  std::sort(g.vertices.begin(), g.vertices.end());
  std::sort(g.flags.begin(), g.flags.end());
  for (FlagId f : g.flags) g.involution[f] = f;
  for (auto& orb : j.value("involution", json::array())) {
    if (!orb.is_array() || orb.size() != 2) bad("involution orbit must be a pair");
    FlagId a = orb[0].get<FlagId>(), b = orb[1].get<FlagId>();
    if (!g.involution.count(a) || !g.involution.count(b) || a == b)
      bad("involution orbit references unknown or equal flags");
    g.involution[a] = b;
    g.involution[b] = a;
  }
  if (!j.contains("boundary")) bad("missing boundary");
  for (auto& [k, v] : j.at("boundary").items())
    g.boundary[static_cast<FlagId>(std::stoul(k))] = v.get<VertexId>();
  if (j.contains("decorations")) {
    const json& d = j.at("decorations");
    const json dir_m = d.value("direction", json::object());
    for (auto& [k, v] : dir_m.items()) {
      std::string s = v.get<std::string>();
      FlagDir dir = (s == "in") ? FlagDir::in : (s == "out") ? FlagDir::out : FlagDir::none;
      if (s != "in" && s != "out" && s != "none") bad("bad direction " + s);
      g.deco.direction[static_cast<FlagId>(std::stoul(k))] = dir;
    }
    const json col_m = d.value("color", json::object());
    for (auto& [k, v] : col_m.items())
      g.deco.color[static_cast<FlagId>(std::stoul(k))] = v.get<std::string>();
    const json mass_m = d.value("mass", json::object());
    for (auto& [k, v] : mass_m.items())
      g.deco.mass[static_cast<FlagId>(std::stoul(k))] =
          coeff_from_string(v.get<std::string>());
    const json mom_m = d.value("momentum", json::object());
    for (auto& [k, v] : mom_m.items())
      g.deco.momentum[static_cast<FlagId>(std::stoul(k))] = v.get<int>() ? 1 : 0;
    const json lab_m = d.value("tail_label", json::object());
    for (auto& [k, v] : lab_m.items())
      g.deco.tail_label[static_cast<FlagId>(std::stoul(k))] = v.get<std::string>();
    const json pl_m = d.value("planar", json::object());
    for (auto& [k, v] : pl_m.items()) {
      std::vector<FlagId> ord;
      for (auto& f : v) ord.push_back(f.get<FlagId>());
      g.deco.planar[static_cast<VertexId>(std::stoul(k))] = ord;
    }
    if (d.contains("root")) g.deco.root = d.at("root").get<VertexId>();
  }
  validate(g);
  return g;
}

inline std::string graph_to_json_string(const Graph& g) { return graph_to_json(g).dump(); }
inline Graph graph_from_json_string(const std::string& s) {
  return graph_from_json(json::parse(s));
}

}  // namespace feyncat
