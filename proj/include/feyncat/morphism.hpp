#pragma once

// Morphisms between aggregates: a triple (flag injection from target to
// source, vertex surjection from source to target, ghost involution pairing
// up the source tails that are not hit by the flag injection). The ghost
// graph lives on the source's vertices and flags with the ghost pairs as its
// edges; in the connected setting its canonical key determines the morphism's
// isomorphism class.

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace feyncat {

struct GraphMorphism {
  Graph source;  // aggregate (edgeless)
  Graph target;  // aggregate (edgeless)
  std::map<FlagId, FlagId> flag_inj;    // target flag -> source flag
  std::map<VertexId, VertexId> vertex_surj;  // source vertex -> target vertex
  std::map<FlagId, FlagId> ghost_inv;   // involution on uncovered source tails
};

inline void validate(const GraphMorphism& m) {
  auto fail = [](const std::string& s) {
    throw std::invalid_argument("morphism: " + s);
  };
  validate(m.source);
  validate(m.target);
  if (!is_aggregate(m.source) || !is_aggregate(m.target))
    fail("source/target must be aggregates");
  // flag_inj: total on target flags, injective into source flags
  if (m.flag_inj.size() != m.target.flags.size()) fail("flag map not total");
  std::set<FlagId> image;
  for (auto& [tf, sf] : m.flag_inj) {
    if (!has_flag(m.target, tf) || !has_flag(m.source, sf)) fail("flag map out of range");
    if (!image.insert(sf).second) fail("flag map not injective");
  }
  // vertex_surj: total and surjective
  if (m.vertex_surj.size() != m.source.vertices.size()) fail("vertex map not total");
  std::set<VertexId> hit;
  for (auto& [sv, tv] : m.vertex_surj) {
    if (!has_vertex(m.source, sv) || !has_vertex(m.target, tv))
      fail("vertex map out of range");
    hit.insert(tv);
  }
  if (hit.size() != m.target.vertices.size()) fail("vertex map not surjective");
  // boundary compatibility
  for (auto& [tf, sf] : m.flag_inj)
    if (m.vertex_surj.at(m.source.boundary.at(sf)) != m.target.boundary.at(tf))
      fail("boundary compatibility violated");
  // ghost involution: fixed-point-free pairing of exactly the uncovered flags
  std::set<FlagId> uncovered;
  for (FlagId f : m.source.flags)
    if (!image.count(f)) uncovered.insert(f);
  if (m.ghost_inv.size() != uncovered.size()) fail("ghost involution not total");
  for (auto& [f, p] : m.ghost_inv) {
    if (!uncovered.count(f) || !uncovered.count(p)) fail("ghost pairs a covered flag");
    if (f == p) fail("ghost involution has a fixed point");
    auto it = m.ghost_inv.find(p);
    if (it == m.ghost_inv.end() || it->second != f) fail("ghost map not involutive");
    if (m.vertex_surj.at(m.source.boundary.at(f)) !=
        m.vertex_surj.at(m.source.boundary.at(p)))
      fail("ghost edge endpoints map to different vertices");
  }
}

inline GraphMorphism identity(const Graph& x) {
  if (!is_aggregate(x)) throw std::invalid_argument("identity: object has edges");
  GraphMorphism m;
  m.source = x;
  m.target = x;
  for (FlagId f : x.flags) m.flag_inj[f] = f;
  for (VertexId v : x.vertices) m.vertex_surj[v] = v;
  validate(m);
  return m;
}

inline bool same_object(const Graph& a, const Graph& b) {
  return a.vertices == b.vertices && a.flags == b.flags &&
         a.involution == b.involution && a.boundary == b.boundary;
}

// outer ∘ inner: inner goes X -> Y, outer goes Y -> Z.
inline GraphMorphism compose(const GraphMorphism& outer, const GraphMorphism& inner) {
  if (!same_object(inner.target, outer.source))
    throw std::invalid_argument("compose: endpoint mismatch");
  GraphMorphism m;
  m.source = inner.source;
  m.target = outer.target;
  for (auto& [zf, yf] : outer.flag_inj) m.flag_inj[zf] = inner.flag_inj.at(yf);
  for (auto& [xv, yv] : inner.vertex_surj) m.vertex_surj[xv] = outer.vertex_surj.at(yv);
  // ghost edges: inner's, plus outer's transported along inner's flag map
  m.ghost_inv = inner.ghost_inv;
  for (auto& [yf, yp] : outer.ghost_inv) {
    FlagId a = inner.flag_inj.at(yf), b = inner.flag_inj.at(yp);
    m.ghost_inv[a] = b;
    m.ghost_inv[b] = a;
  }
  validate(m);
  return m;
}

inline GraphMorphism tensor(const GraphMorphism& a, const GraphMorphism& b) {
  GraphMorphism m;
  m.source = disjoint_union(a.source, b.source);
  m.target = disjoint_union(a.target, b.target);
  // disjoint_union compactifies: rebuild the id translations it used.
  auto translation = [](const Graph& g, std::uint32_t voff, std::uint32_t foff) {
    std::pair<std::map<VertexId, VertexId>, std::map<FlagId, FlagId>> t;
    for (VertexId v : g.vertices) t.first[v] = voff + static_cast<VertexId>(t.first.size());
    for (FlagId f : g.flags) t.second[f] = foff + static_cast<FlagId>(t.second.size());
    return t;
  };
  auto [savm, safm] = translation(a.source, 0, 0);
  auto [sbvm, sbfm] =
      translation(b.source, static_cast<std::uint32_t>(a.source.vertices.size()),
                  static_cast<std::uint32_t>(a.source.flags.size()));
  auto [tavm, tafm] = translation(a.target, 0, 0);
  auto [tbvm, tbfm] =
      translation(b.target, static_cast<std::uint32_t>(a.target.vertices.size()),
                  static_cast<std::uint32_t>(a.target.flags.size()));
  for (auto& [tf, sf] : a.flag_inj) m.flag_inj[tafm.at(tf)] = safm.at(sf);
  for (auto& [tf, sf] : b.flag_inj) m.flag_inj[tbfm.at(tf)] = sbfm.at(sf);
  for (auto& [sv, tv] : a.vertex_surj) m.vertex_surj[savm.at(sv)] = tavm.at(tv);
  for (auto& [sv, tv] : b.vertex_surj) m.vertex_surj[sbvm.at(sv)] = tbvm.at(tv);
  for (auto& [f, p] : a.ghost_inv) m.ghost_inv[safm.at(f)] = safm.at(p);
  for (auto& [f, p] : b.ghost_inv) m.ghost_inv[sbfm.at(f)] = sbfm.at(p);
  validate(m);
  return m;
}

// The ghost graph: source vertices/flags with the ghost pairs as edges.
inline Graph ghost(const GraphMorphism& m) {
  Graph g = m.source;
  for (auto& [f, p] : m.ghost_inv) g.involution[f] = p;
  validate(g);
  return g;
}

inline int ghost_edge_count(const GraphMorphism& m) {
  return static_cast<int>(m.ghost_inv.size()) / 2;
}

// Splits a morphism along its target vertices: one morphism per target
// corolla, each with the full preimage fiber as source.
inline std::vector<GraphMorphism> one_comma_decompose(const GraphMorphism& m) {
  std::vector<GraphMorphism> out;
  for (VertexId w : m.target.vertices) {
    GraphMorphism part;
    // target: the corolla at w
    part.target.vertices = {w};
    for (FlagId f : m.target.flags)
      if (m.target.boundary.at(f) == w) {
        part.target.flags.push_back(f);
        part.target.involution[f] = f;
        part.target.boundary[f] = w;
      }
    // source: the fiber over w
    std::set<VertexId> fiber;
    for (auto& [sv, tv] : m.vertex_surj)
      if (tv == w) fiber.insert(sv);
    for (VertexId v : m.source.vertices)
      if (fiber.count(v)) part.source.vertices.push_back(v);
    for (FlagId f : m.source.flags)
      if (fiber.count(m.source.boundary.at(f))) {
        part.source.flags.push_back(f);
        part.source.involution[f] = f;
        part.source.boundary[f] = m.source.boundary.at(f);
      }
    for (auto& [tf, sf] : m.flag_inj)
      if (m.target.boundary.at(tf) == w) part.flag_inj[tf] = sf;
    for (VertexId v : part.source.vertices) part.vertex_surj[v] = w;
    for (auto& [f, p] : m.ghost_inv)
      if (fiber.count(m.source.boundary.at(f))) part.ghost_inv[f] = p;
    validate(part);
    out.push_back(part);
  }
  return out;
}

}  // namespace feyncat
