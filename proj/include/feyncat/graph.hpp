#pragma once

// Graphs as quadruples (vertices, flags, involution, boundary): edges are the
// 2-orbits of the involution, tails its fixed points. Optional decorations:
// flag direction/color, per-edge mass (stored on both flags), per-tail
// momentum tag (zero/nonzero), tail labels, root vertex, and a planar flag
// order per vertex (cyclic; linear at the root of a planted tree).
//
// Values are immutable after construction; every operation below is a pure
// function returning a fresh graph. Ids are freshened on union/insertion, so
// equality of raw graphs is meaningless across operations — compare canonical
// keys instead (canonical.hpp).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace feyncat {

using VertexId = std::uint32_t;
using FlagId = std::uint32_t;
using Edge = std::pair<FlagId, FlagId>;  // normalized: first < second

enum class FlagDir : std::uint8_t { none = 0, in = 1, out = 2 };

struct Decorations {
  std::map<FlagId, FlagDir> direction;
  std::map<FlagId, std::string> color;
  std::map<FlagId, Coeff> mass;          // per-edge, mirrored on both flags
  std::map<FlagId, int> momentum;        // tails only; nonzero iff != 0
  std::map<FlagId, std::string> tail_label;
  std::map<VertexId, std::vector<FlagId>> planar;
  std::optional<VertexId> root;

  bool empty() const {
    return direction.empty() && color.empty() && mass.empty() &&
           momentum.empty() && tail_label.empty() && planar.empty() &&
           !root.has_value();
  }
};

struct Graph {
  std::vector<VertexId> vertices;  // sorted, unique
  std::vector<FlagId> flags;       // sorted, unique
  std::map<FlagId, FlagId> involution;
  std::map<FlagId, VertexId> boundary;
  Decorations deco;
};

namespace detail {
inline bool sorted_unique(const std::vector<std::uint32_t>& v) {
  return std::is_sorted(v.begin(), v.end()) &&
         std::adjacent_find(v.begin(), v.end()) == v.end();
}
}  // namespace detail

inline bool has_vertex(const Graph& g, VertexId v) {
  return std::binary_search(g.vertices.begin(), g.vertices.end(), v);
}
inline bool has_flag(const Graph& g, FlagId f) {
  return std::binary_search(g.flags.begin(), g.flags.end(), f);
}
inline bool is_tail(const Graph& g, FlagId f) { return g.involution.at(f) == f; }

inline std::vector<Edge> edges(const Graph& g) {
  std::vector<Edge> out;
  for (auto& [f, p] : g.involution)
    if (f < p) out.push_back({f, p});
  return out;  // sorted because involution map is ordered
}

inline std::vector<FlagId> tails(const Graph& g) {
  std::vector<FlagId> out;
  for (auto& [f, p] : g.involution)
    if (f == p) out.push_back(f);
  return out;
}

inline std::vector<FlagId> flags_at(const Graph& g, VertexId v) {
  std::vector<FlagId> out;
  for (auto& [f, b] : g.boundary)
    if (b == v) out.push_back(f);
  return out;
}

inline void validate(const Graph& g) {
  auto fail = [](const std::string& m) { throw std::invalid_argument("graph: " + m); };
  if (!detail::sorted_unique(g.vertices)) fail("vertex ids not sorted/unique");
  if (!detail::sorted_unique(g.flags)) fail("flag ids not sorted/unique");
  if (g.involution.size() != g.flags.size() || g.boundary.size() != g.flags.size())
    fail("involution/boundary not total on flags");
  for (FlagId f : g.flags) {
    auto it = g.involution.find(f);
    if (it == g.involution.end()) fail("involution missing flag");
    if (!has_flag(g, it->second) || g.involution.at(it->second) != f)
      fail("involution not self-inverse");
    auto bt = g.boundary.find(f);
    if (bt == g.boundary.end()) fail("boundary missing flag");
    if (!has_vertex(g, bt->second)) fail("dangling boundary target");
  }
  for (auto& [f, d] : g.deco.direction) {
    if (!has_flag(g, f)) fail("direction on unknown flag");
    if (d == FlagDir::none) continue;
    FlagId p = g.involution.at(f);
    if (p != f) {
      auto it = g.deco.direction.find(p);
      if (it == g.deco.direction.end() || it->second == d)
        fail("directed edge without opposite directions");
    }
  }
  for (auto& [f, c] : g.deco.color)
    if (!has_flag(g, f)) fail("color on unknown flag");
  for (auto& [f, m] : g.deco.mass) {
    if (!has_flag(g, f) || is_tail(g, f)) fail("mass not on an edge flag");
    auto it = g.deco.mass.find(g.involution.at(f));
    if (it == g.deco.mass.end() || it->second != m) fail("edge mass not mirrored");
  }
  for (auto& [f, q] : g.deco.momentum)
    if (!has_flag(g, f) || !is_tail(g, f)) fail("momentum not on a tail");
  for (auto& [f, l] : g.deco.tail_label)
    if (!has_flag(g, f) || !is_tail(g, f)) fail("label not on a tail");
  if (g.deco.root && !has_vertex(g, *g.deco.root)) fail("unknown root vertex");
  for (auto& [v, order] : g.deco.planar) {
    if (!has_vertex(g, v)) fail("planar order on unknown vertex");
    std::vector<FlagId> inc = flags_at(g, v), ord = order;
    std::sort(ord.begin(), ord.end());
    if (ord != inc) fail("planar order does not match incident flags");
  }
  if (!g.deco.planar.empty() && g.deco.planar.size() != g.vertices.size())
    fail("planar order must cover all vertices or none");
}

inline Graph empty_graph() { return Graph{}; }

inline bool is_aggregate(const Graph& g) { return edges(g).empty(); }

// Corolla *_n: one vertex, n tails with flag ids 1..n (vertex id 0).
inline Graph corolla(int ntails) {
  Graph g;
  g.vertices = {0};
  for (int i = 1; i <= ntails; ++i) {
    g.flags.push_back(static_cast<FlagId>(i));
    g.involution[static_cast<FlagId>(i)] = static_cast<FlagId>(i);
    g.boundary[static_cast<FlagId>(i)] = 0;
  }
  return g;
}

// Convenience constructor for tests and the CLI: nv vertices 0..nv-1, edge k
// gets flags (2k, 2k+1), tail j (attached to tail_vts[j]) gets the next ids.
inline Graph make_graph(int nv, const std::vector<std::pair<int, int>>& edge_vts,
                        const std::vector<int>& tail_vts = {}) {
  Graph g;
  for (int v = 0; v < nv; ++v) g.vertices.push_back(static_cast<VertexId>(v));
  FlagId next = 0;
  for (auto& [u, v] : edge_vts) {
    FlagId a = next++, b = next++;
    g.flags.push_back(a);
    g.flags.push_back(b);
    g.involution[a] = b;
    g.involution[b] = a;
    g.boundary[a] = static_cast<VertexId>(u);
    g.boundary[b] = static_cast<VertexId>(v);
  }
  for (int v : tail_vts) {
    FlagId a = next++;
    g.flags.push_back(a);
    g.involution[a] = a;
    g.boundary[a] = static_cast<VertexId>(v);
  }
  validate(g);
  return g;
}

// Connected-component index per vertex (indices are 0..k-1 in order of the
// smallest vertex of each component) plus the component count.
inline std::pair<std::map<VertexId, int>, int> components(const Graph& g) {
  std::map<VertexId, VertexId> parent;
  for (VertexId v : g.vertices) parent[v] = v;
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto& [f, p] : g.involution)
    if (f < p) parent[find(g.boundary.at(f))] = find(g.boundary.at(p));
  std::map<VertexId, int> comp;
  int k = 0;
  for (VertexId v : g.vertices) {
    VertexId r = find(v);
    if (!comp.count(r)) comp[r] = k++;
  }
  std::map<VertexId, int> out;
  for (VertexId v : g.vertices) out[v] = comp[find(v)];
  return {out, k};
}

inline int num_components(const Graph& g) { return components(g).second; }
inline bool is_connected(const Graph& g) { return num_components(g) <= 1; }

inline int betti1(const Graph& g) {
  return static_cast<int>(edges(g).size()) - static_cast<int>(g.vertices.size()) +
         num_components(g);
}

// Rebuilds g with new ids; vmap/fmap must be injective on g's id sets.
inline Graph relabel(const Graph& g, const std::map<VertexId, VertexId>& vmap,
                     const std::map<FlagId, FlagId>& fmap) {
  Graph r;
  for (VertexId v : g.vertices) r.vertices.push_back(vmap.at(v));
  for (FlagId f : g.flags) r.flags.push_back(fmap.at(f));
  std::sort(r.vertices.begin(), r.vertices.end());
  std::sort(r.flags.begin(), r.flags.end());
  for (auto& [f, p] : g.involution) r.involution[fmap.at(f)] = fmap.at(p);
  for (auto& [f, v] : g.boundary) r.boundary[fmap.at(f)] = vmap.at(v);
  for (auto& [f, d] : g.deco.direction) r.deco.direction[fmap.at(f)] = d;
  for (auto& [f, c] : g.deco.color) r.deco.color[fmap.at(f)] = c;
  for (auto& [f, m] : g.deco.mass) r.deco.mass[fmap.at(f)] = m;
  for (auto& [f, q] : g.deco.momentum) r.deco.momentum[fmap.at(f)] = q;
  for (auto& [f, l] : g.deco.tail_label) r.deco.tail_label[fmap.at(f)] = l;
  for (auto& [v, ord] : g.deco.planar) {
    std::vector<FlagId> o;
    for (FlagId f : ord) o.push_back(fmap.at(f));
    r.deco.planar[vmap.at(v)] = o;
  }
  if (g.deco.root) r.deco.root = vmap.at(*g.deco.root);
  validate(r);
  return r;
}

// Renumbers vertices/flags to 0..n-1 contiguously (by sorted order).
inline Graph compactify(const Graph& g) {
  std::map<VertexId, VertexId> vmap;
  std::map<FlagId, FlagId> fmap;
  for (VertexId v : g.vertices) vmap[v] = static_cast<VertexId>(vmap.size());
  for (FlagId f : g.flags) fmap[f] = static_cast<FlagId>(fmap.size());
  return relabel(g, vmap, fmap);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph ca = compactify(a);
  std::map<VertexId, VertexId> vmap;
  std::map<FlagId, FlagId> fmap;
  for (VertexId v : b.vertices)
    vmap[v] = static_cast<VertexId>(ca.vertices.size() + vmap.size());
  for (FlagId f : b.flags) fmap[f] = static_cast<FlagId>(ca.flags.size() + fmap.size());
  Graph cb = relabel(b, vmap, fmap);
  Graph r = ca;
  r.vertices.insert(r.vertices.end(), cb.vertices.begin(), cb.vertices.end());
  r.flags.insert(r.flags.end(), cb.flags.begin(), cb.flags.end());
  r.involution.insert(cb.involution.begin(), cb.involution.end());
  r.boundary.insert(cb.boundary.begin(), cb.boundary.end());
  auto& d = cb.deco;
  r.deco.direction.insert(d.direction.begin(), d.direction.end());
  r.deco.color.insert(d.color.begin(), d.color.end());
  r.deco.mass.insert(d.mass.begin(), d.mass.end());
  r.deco.momentum.insert(d.momentum.begin(), d.momentum.end());
  r.deco.tail_label.insert(d.tail_label.begin(), d.tail_label.end());
  r.deco.planar.insert(d.planar.begin(), d.planar.end());
  if (!r.deco.root && d.root) r.deco.root = d.root;
  validate(r);
  return r;
}

inline void check_edge_subset(const Graph& g, const std::set<Edge>& es) {
  for (auto& [f, p] : es) {
    if (!has_flag(g, f) || f >= p || g.involution.at(f) != p)
      throw std::invalid_argument("not an edge of the graph");
  }
}

// Same vertices and flags; edges outside `keep` are severed into tails.
inline Graph spanning_subgraph(const Graph& g, const std::set<Edge>& keep) {
  check_edge_subset(g, keep);
  Graph r = g;
  for (auto& [f, p] : edges(g)) {
    if (keep.count({f, p})) continue;
    r.involution[f] = f;
    r.involution[p] = p;
    r.deco.mass.erase(f);
    r.deco.mass.erase(p);
  }
  return r;
}

// Collapses every component of spanning_subgraph(g, contracted) to a single
// vertex; edges outside `contracted` and all tails of g survive.
inline Graph contract(const Graph& g, const std::set<Edge>& contracted) {
  check_edge_subset(g, contracted);
  if (contracted.empty()) return g;
  if (!g.deco.planar.empty())
    throw std::invalid_argument("contract: planar graphs unsupported (trees only)");
  Graph sub = spanning_subgraph(g, contracted);
  // Keep only `contracted` as edges of sub for component purposes.
  Graph skel = sub;
  for (auto& [f, p] : edges(g))
    if (!contracted.count({f, p})) {
      skel.involution[f] = f;
      skel.involution[p] = p;
    }
  auto [comp, k] = components(skel);
  // Representative vertex per component: the smallest member.
  std::map<int, VertexId> rep;
  for (VertexId v : g.vertices)
    if (!rep.count(comp[v])) rep[comp[v]] = v;

  Graph r;
  for (auto& [c, v] : rep) r.vertices.push_back(v);
  std::sort(r.vertices.begin(), r.vertices.end());
  std::set<FlagId> dropped;
  for (auto& [f, p] : contracted) {
    dropped.insert(f);
    dropped.insert(p);
  }
  for (FlagId f : g.flags) {
    if (dropped.count(f)) continue;
    r.flags.push_back(f);
    r.involution[f] = g.involution.at(f);
    r.boundary[f] = rep[comp[g.boundary.at(f)]];
  }
  for (auto& [f, d] : g.deco.direction)
    if (!dropped.count(f)) r.deco.direction[f] = d;
  for (auto& [f, c] : g.deco.color)
    if (!dropped.count(f)) r.deco.color[f] = c;
  for (auto& [f, m] : g.deco.mass)
    if (!dropped.count(f)) r.deco.mass[f] = m;
  r.deco.momentum = g.deco.momentum;
  r.deco.tail_label = g.deco.tail_label;
  if (g.deco.root) r.deco.root = rep[comp[*g.deco.root]];
  validate(r);
  return r;
}

// Deletes vertex v and merges each flag at v with its matched tail of h.
// `matching` must biject the flags at v onto the tails of h.
inline Graph insert_at_vertex(const Graph& g, VertexId v, const Graph& h,
                              const std::map<FlagId, FlagId>& matching) {
  if (!has_vertex(g, v)) throw std::invalid_argument("insert: unknown vertex");
  if (!g.deco.planar.empty() || !h.deco.planar.empty())
    throw std::invalid_argument("insert: planar graphs unsupported");
  std::vector<FlagId> fv = flags_at(g, v);
  std::vector<FlagId> th = tails(h);
  if (matching.size() != fv.size() || matching.size() != th.size())
    throw std::invalid_argument("insert: matching is not a bijection");
  std::set<FlagId> seen;
  for (FlagId f : fv) {
    auto it = matching.find(f);
    if (it == matching.end()) throw std::invalid_argument("insert: unmatched flag");
    if (!has_flag(h, it->second) || !is_tail(h, it->second))
      throw std::invalid_argument("insert: matching targets a non-tail");
    if (!seen.insert(it->second).second)
      throw std::invalid_argument("insert: matching is not injective");
  }
  // Freshen h's ids above g's.
  std::uint32_t voff = g.vertices.empty() ? 0 : g.vertices.back() + 1;
  std::uint32_t foff = g.flags.empty() ? 0 : g.flags.back() + 1;
  std::map<VertexId, VertexId> vmap;
  std::map<FlagId, FlagId> fmap;
  for (VertexId w : h.vertices) vmap[w] = voff + static_cast<VertexId>(vmap.size());
  for (FlagId f : h.flags) fmap[f] = foff + static_cast<FlagId>(fmap.size());
  Graph hh = relabel(h, vmap, fmap);

  Graph r;
  for (VertexId w : g.vertices)
    if (w != v) r.vertices.push_back(w);
  r.vertices.insert(r.vertices.end(), hh.vertices.begin(), hh.vertices.end());
  std::sort(r.vertices.begin(), r.vertices.end());
  std::set<FlagId> gone;  // matched tails of hh disappear
  for (auto& [f, t] : matching) gone.insert(fmap.at(t));
  for (FlagId f : g.flags) {
    r.flags.push_back(f);
    r.involution[f] = g.involution.at(f);
    VertexId b = g.boundary.at(f);
    r.boundary[f] = (b == v) ? hh.boundary.at(fmap.at(matching.at(f))) : b;
  }
  for (FlagId f : hh.flags) {
    if (gone.count(f)) continue;
    r.flags.push_back(f);
    r.involution[f] = hh.involution.at(f);
    r.boundary[f] = hh.boundary.at(f);
  }
  std::sort(r.flags.begin(), r.flags.end());
  auto copy_flag_deco = [&](const Decorations& src, FlagId f, bool skip) {
    if (skip) return;
    if (auto it = src.direction.find(f); it != src.direction.end())
      r.deco.direction[f] = it->second;
    if (auto it = src.color.find(f); it != src.color.end()) r.deco.color[f] = it->second;
    if (auto it = src.mass.find(f); it != src.mass.end()) r.deco.mass[f] = it->second;
    if (auto it = src.momentum.find(f); it != src.momentum.end())
      r.deco.momentum[f] = it->second;
    if (auto it = src.tail_label.find(f); it != src.tail_label.end())
      r.deco.tail_label[f] = it->second;
  };
  for (FlagId f : g.flags) copy_flag_deco(g.deco, f, false);
  for (FlagId f : hh.flags) copy_flag_deco(hh.deco, f, gone.count(f) > 0);
  // Momentum/labels live on tails only; merged flags may have become edges.
  for (FlagId f : r.flags) {
    if (r.involution.at(f) != f) {
      r.deco.momentum.erase(f);
      r.deco.tail_label.erase(f);
    } else {
      r.deco.mass.erase(f);
    }
  }
  if (g.deco.root) r.deco.root = (*g.deco.root == v) ? hh.deco.root : g.deco.root;
  validate(r);
  return r;
}

// Deletes the given flags, which must all be tails.
inline Graph remove_tails(const Graph& g, const std::set<FlagId>& ts) {
  Graph r = g;
  for (FlagId f : ts) {
    if (!has_flag(g, f) || !is_tail(g, f))
      throw std::invalid_argument("remove_tails: not a tail");
    r.flags.erase(std::find(r.flags.begin(), r.flags.end(), f));
    r.involution.erase(f);
    r.boundary.erase(f);
    r.deco.direction.erase(f);
    r.deco.color.erase(f);
    r.deco.momentum.erase(f);
    r.deco.tail_label.erase(f);
  }
  for (auto& [v, ord] : r.deco.planar) {
    std::vector<FlagId> o;
    for (FlagId f : ord)
      if (r.involution.count(f)) o.push_back(f);
    ord = o;
  }
  validate(r);
  return r;
}

inline Graph trun(const Graph& g) {
  Graph r = g;
  std::vector<FlagId> ts = tails(g);
  for (FlagId f : ts) {
    r.flags.erase(std::find(r.flags.begin(), r.flags.end(), f));
    r.involution.erase(f);
    r.boundary.erase(f);
    r.deco.direction.erase(f);
    r.deco.color.erase(f);
    r.deco.momentum.erase(f);
    r.deco.tail_label.erase(f);
  }
  for (auto& [v, ord] : r.deco.planar) {
    std::vector<FlagId> o;
    for (FlagId f : ord)
      if (r.involution.count(f)) o.push_back(f);
    ord = o;
  }
  validate(r);
  return r;
}

// All graphs obtained from tail-free g by attaching tails labeled "1".."n"
// to vertices, one graph per assignment (|V|^n of them, lexicographic order).
inline std::vector<Graph> foliage(const Graph& g, int n) {
  if (!tails(g).empty()) throw std::invalid_argument("foliage: graph has tails");
  if (n < 0) throw std::invalid_argument("foliage: negative count");
  std::vector<Graph> out;
  if (g.vertices.empty()) {
    if (n == 0) out.push_back(g);
    return out;
  }
  std::vector<int> assign(n, 0);
  int nv = static_cast<int>(g.vertices.size());
  FlagId base = g.flags.empty() ? 0 : g.flags.back() + 1;
  while (true) {
    Graph r = g;
    for (int i = 0; i < n; ++i) {
      FlagId f = base + static_cast<FlagId>(i);
      r.flags.push_back(f);
      r.involution[f] = f;
      r.boundary[f] = g.vertices[assign[i]];
      r.deco.tail_label[f] = std::to_string(i + 1);
    }
    std::sort(r.flags.begin(), r.flags.end());
    validate(r);
    out.push_back(r);
    int i = n - 1;
    while (i >= 0 && assign[i] == nv - 1) assign[i--] = 0;
    if (i < 0) break;
    ++assign[i];
  }
  return out;
}

// Splits g into its connected components (original ids kept).
inline std::vector<Graph> split_components(const Graph& g) {
  auto [comp, k] = components(g);
  std::vector<Graph> out(static_cast<size_t>(k));
  for (VertexId v : g.vertices) out[static_cast<size_t>(comp[v])].vertices.push_back(v);
  for (FlagId f : g.flags) {
    Graph& c = out[static_cast<size_t>(comp[g.boundary.at(f)])];
    c.flags.push_back(f);
    c.involution[f] = g.involution.at(f);
    c.boundary[f] = g.boundary.at(f);
  }
  for (auto& c : out) {
    for (FlagId f : c.flags) {
      if (auto it = g.deco.direction.find(f); it != g.deco.direction.end())
        c.deco.direction[f] = it->second;
      if (auto it = g.deco.color.find(f); it != g.deco.color.end())
        c.deco.color[f] = it->second;
      if (auto it = g.deco.mass.find(f); it != g.deco.mass.end())
        c.deco.mass[f] = it->second;
      if (auto it = g.deco.momentum.find(f); it != g.deco.momentum.end())
        c.deco.momentum[f] = it->second;
      if (auto it = g.deco.tail_label.find(f); it != g.deco.tail_label.end())
        c.deco.tail_label[f] = it->second;
    }
    for (VertexId v : c.vertices)
      if (auto it = g.deco.planar.find(v); it != g.deco.planar.end())
        c.deco.planar[v] = it->second;
    if (g.deco.root && has_vertex(c, *g.deco.root)) c.deco.root = g.deco.root;
    validate(c);
  }
  return out;
}

}  // namespace feyncat
