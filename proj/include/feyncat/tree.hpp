#pragma once

// Rooted trees represented as graphs carrying a root decoration. Two
// degenerate trees need care: the empty tree (no vertices) and the "line" |
// (no vertices, a single through-flag), which cannot be a Graph value — the
// RootedTree wrapper keeps it as an explicit case. Conventions: sharp maps
// the empty tree to the line, flat maps the line back to the empty tree.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace feyncat {

struct RootedTree {
  bool line = false;  // the vertexless tree with one through-flag
  Graph g;            // ignored when line is set
};

inline bool is_rooted_tree(const Graph& g) {
  return !g.vertices.empty() && is_connected(g) && betti1(g) == 0 &&
         g.deco.root.has_value();
}

inline RootedTree tree_empty() { return RootedTree{}; }
inline RootedTree tree_line() { return RootedTree{true, Graph{}}; }
inline RootedTree rooted(const Graph& g) {
  if (!g.vertices.empty() && !is_rooted_tree(g))
    throw std::invalid_argument("tree: not a rooted tree");
  return RootedTree{false, g};
}

inline bool tree_is_empty(const RootedTree& t) {
  return !t.line && t.g.vertices.empty();
}

// parent of every non-root vertex (edges oriented away from the root)
inline std::map<VertexId, VertexId> parent_map(const Graph& g) {
  if (!is_rooted_tree(g)) throw std::invalid_argument("tree: not a rooted tree");
  std::map<VertexId, VertexId> parent;
  std::set<VertexId> seen{*g.deco.root};
  std::vector<VertexId> frontier{*g.deco.root};
  while (!frontier.empty()) {
    VertexId v = frontier.back();
    frontier.pop_back();
    for (FlagId f : flags_at(g, v)) {
      FlagId p = g.involution.at(f);
      if (p == f) continue;
      VertexId w = g.boundary.at(p);
      if (seen.insert(w).second) {
        parent[w] = v;
        frontier.push_back(w);
      }
    }
  }
  return parent;
}

// All vertex subsets closed under taking parents (the root side of a cut).
inline std::vector<std::set<VertexId>> down_closed_subsets(const Graph& g) {
  auto parent = parent_map(g);
  std::vector<VertexId> vs = g.vertices;
  size_t n = vs.size();
  if (n > 20) throw std::invalid_argument("tree: too many vertices for cut enumeration");
  std::vector<std::set<VertexId>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::set<VertexId> d;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) d.insert(vs[i]);
    bool ok = true;
    for (VertexId v : d)
      if (parent.count(v) && !d.count(parent.at(v))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(d);
  }
  return out;
}

// sharp: to a tail-free tree, add one tail per vertex plus an extra outgoing
// root flag; flat: delete all tails. flat(sharp(t)) = t.
inline RootedTree tree_sharp(const RootedTree& t) {
  if (t.line) throw std::invalid_argument("tree: sharp of the line");
  if (tree_is_empty(t)) return tree_line();
  const Graph& g = t.g;
  if (!is_rooted_tree(g)) throw std::invalid_argument("tree: not a rooted tree");
  if (!tails(g).empty()) throw std::invalid_argument("tree: sharp needs a tail-free tree");
  Graph r = g;
  FlagId next = g.flags.empty() ? 0 : g.flags.back() + 1;
  for (VertexId v : g.vertices) {
    FlagId f = next++;
    r.flags.push_back(f);
    r.involution[f] = f;
    r.boundary[f] = v;
    if (!r.deco.planar.empty()) r.deco.planar[v].push_back(f);
  }
  FlagId rf = next++;
  r.flags.push_back(rf);
  r.involution[rf] = rf;
  r.boundary[rf] = *g.deco.root;
  r.deco.direction[rf] = FlagDir::out;
  if (!r.deco.planar.empty()) r.deco.planar[*g.deco.root].push_back(rf);
  std::sort(r.flags.begin(), r.flags.end());
  validate(r);
  return RootedTree{false, r};
}

inline RootedTree tree_flat(const RootedTree& t) {
  if (t.line) return tree_empty();
  if (tree_is_empty(t)) return tree_empty();
  if (!is_rooted_tree(t.g)) throw std::invalid_argument("tree: not a rooted tree");
  return RootedTree{false, trun(t.g)};
}

enum class SharpFlat { sharp, flat };
inline RootedTree tree_sharp_flat(const RootedTree& t, SharpFlat dir) {
  return dir == SharpFlat::sharp ? tree_sharp(t) : tree_flat(t);
}

// The outgoing root flag of a sharp'd tree (throws if absent or ambiguous).
inline FlagId root_flag(const Graph& g) {
  if (!is_rooted_tree(g)) throw std::invalid_argument("tree: not a rooted tree");
  std::vector<FlagId> found;
  for (FlagId f : flags_at(g, *g.deco.root)) {
    auto it = g.deco.direction.find(f);
    if (is_tail(g, f) && it != g.deco.direction.end() && it->second == FlagDir::out)
      found.push_back(f);
  }
  if (found.size() != 1) throw std::invalid_argument("tree: no unique root flag");
  return found[0];
}

// plant: add a new root vertex and an edge down to the old root.
inline Graph tree_plant(const Graph& g) {
  if (!is_rooted_tree(g)) throw std::invalid_argument("tree: not a rooted tree");
  Graph r = g;
  VertexId nr = g.vertices.back() + 1;
  FlagId a = g.flags.empty() ? 0 : g.flags.back() + 1, b = a + 1;
  r.vertices.push_back(nr);
  r.flags.push_back(a);
  r.flags.push_back(b);
  r.involution[a] = b;
  r.involution[b] = a;
  r.boundary[a] = nr;
  r.boundary[b] = *g.deco.root;
  if (!r.deco.planar.empty()) {
    r.deco.planar[nr] = {a};
    auto& ord = r.deco.planar[*g.deco.root];
    ord.insert(ord.begin(), b);
  }
  r.deco.root = nr;
  validate(r);
  return r;
}

// unplant: delete a valence-1 root and re-root at its unique neighbor.
inline Graph tree_unplant(const Graph& g) {
  if (!is_rooted_tree(g)) throw std::invalid_argument("tree: not a rooted tree");
  VertexId rt = *g.deco.root;
  std::vector<FlagId> fr = flags_at(g, rt);
  if (fr.size() != 1 || is_tail(g, fr[0]))
    throw std::invalid_argument("tree: unplant needs a valence-1 root with an edge");
  FlagId a = fr[0], b = g.involution.at(a);
  Graph r = g;
  r.vertices.erase(std::find(r.vertices.begin(), r.vertices.end(), rt));
  for (FlagId f : {a, b}) {
    r.flags.erase(std::find(r.flags.begin(), r.flags.end(), f));
    r.involution.erase(f);
    r.boundary.erase(f);
    r.deco.direction.erase(f);
    r.deco.color.erase(f);
    r.deco.mass.erase(f);
  }
  r.deco.planar.erase(rt);
  for (auto& [v, ord] : r.deco.planar) {
    std::vector<FlagId> o;
    for (FlagId f : ord)
      if (r.involution.count(f)) o.push_back(f);
    ord = o;
  }
  r.deco.root = g.boundary.at(b);
  validate(r);
  return r;
}

enum class PlantDir { plant, unplant };
inline Graph tree_plant_op(const Graph& g, PlantDir dir) {
  return dir == PlantDir::plant ? tree_plant(g) : tree_unplant(g);
}

namespace detail {
// relabel h's ids above g's
inline Graph freshen_above(const Graph& g, const Graph& h) {
  VertexId voff = g.vertices.empty() ? 0 : g.vertices.back() + 1;
  FlagId foff = g.flags.empty() ? 0 : g.flags.back() + 1;
  std::map<VertexId, VertexId> vmap;
  std::map<FlagId, FlagId> fmap;
  for (VertexId v : h.vertices) vmap[v] = voff + static_cast<VertexId>(vmap.size());
  for (FlagId f : h.flags) fmap[f] = foff + static_cast<FlagId>(fmap.size());
  return relabel(h, vmap, fmap);
}

inline Graph merge_raw(const Graph& a, const Graph& b) {
  Graph r = a;
  r.vertices.insert(r.vertices.end(), b.vertices.begin(), b.vertices.end());
  r.flags.insert(r.flags.end(), b.flags.begin(), b.flags.end());
  std::sort(r.vertices.begin(), r.vertices.end());
  std::sort(r.flags.begin(), r.flags.end());
  r.involution.insert(b.involution.begin(), b.involution.end());
  r.boundary.insert(b.boundary.begin(), b.boundary.end());
  auto& d = b.deco;
  r.deco.direction.insert(d.direction.begin(), d.direction.end());
  r.deco.color.insert(d.color.begin(), d.color.end());
  r.deco.mass.insert(d.mass.begin(), d.mass.end());
  r.deco.momentum.insert(d.momentum.begin(), d.momentum.end());
  r.deco.tail_label.insert(d.tail_label.begin(), d.tail_label.end());
  r.deco.planar.insert(d.planar.begin(), d.planar.end());
  return r;
}
}  // namespace detail

// Identify vertex v of t with the root of s (vertex-level grafting on
// tail-free trees); the result keeps t's root.
inline Graph tree_graft_identify(const Graph& t, VertexId v, const Graph& s) {
  if (!is_rooted_tree(t) || !is_rooted_tree(s))
    throw std::invalid_argument("tree: graft needs rooted trees");
  if (!has_vertex(t, v)) throw std::invalid_argument("tree: unknown graft vertex");
  Graph ss = detail::freshen_above(t, s);
  VertexId sroot = *ss.deco.root;
  ss.vertices.erase(std::find(ss.vertices.begin(), ss.vertices.end(), sroot));
  for (auto& [f, w] : ss.boundary)
    if (w == sroot) ss.boundary[f] = v;
  ss.deco.planar.erase(sroot);
  ss.deco.root.reset();
  Graph r = detail::merge_raw(t, ss);
  r.deco.root = t.deco.root;
  validate(r);
  return r;
}

// Join vertex v of t to the root of s by a new edge; t's root survives.
inline Graph tree_graft_edge(const Graph& t, VertexId v, const Graph& s) {
  if (!is_rooted_tree(t) || !is_rooted_tree(s))
    throw std::invalid_argument("tree: graft needs rooted trees");
  if (!has_vertex(t, v)) throw std::invalid_argument("tree: unknown graft vertex");
  Graph ss = detail::freshen_above(t, s);
  VertexId sroot = *ss.deco.root;
  ss.deco.root.reset();
  Graph r = detail::merge_raw(t, ss);
  FlagId a = r.flags.empty() ? 0 : r.flags.back() + 1, b = a + 1;
  r.flags.push_back(a);
  r.flags.push_back(b);
  r.involution[a] = b;
  r.involution[b] = a;
  r.boundary[a] = v;
  r.boundary[b] = sroot;
  if (!r.deco.planar.empty()) {
    r.deco.planar[v].push_back(a);
    r.deco.planar[sroot].insert(r.deco.planar[sroot].begin(), b);
  }
  r.deco.root = t.deco.root;
  validate(r);
  return r;
}

// Connect tail f of t to the outgoing root flag of s (grafting of trees with
// tails; both flags become the two halves of a new edge).
inline Graph tree_graft_tail(const Graph& t, FlagId f, const Graph& s) {
  if (!is_rooted_tree(t) || !is_rooted_tree(s))
    throw std::invalid_argument("tree: graft needs rooted trees");
  if (!has_flag(t, f) || !is_tail(t, f))
    throw std::invalid_argument("tree: graft site is not a tail");
  Graph ss = detail::freshen_above(t, s);
  FlagId rf = root_flag(ss);
  ss.deco.root.reset();
  Graph r = detail::merge_raw(t, ss);
  r.involution[f] = rf;
  r.involution[rf] = f;
  for (FlagId x : {f, rf}) {
    r.deco.direction.erase(x);
    r.deco.momentum.erase(x);
    r.deco.tail_label.erase(x);
  }
  r.deco.root = t.deco.root;
  validate(r);
  return r;
}

// Chain of n vertices rooted at the bottom; with_tail adds one leaf at the
// top vertex.
inline Graph ladder(int n, bool with_tail) {
  if (n < 1) throw std::invalid_argument("tree: ladder needs n >= 1");
  std::vector<std::pair<int, int>> es;
  for (int k = 0; k + 1 < n; ++k) es.push_back({k, k + 1});
  std::vector<int> ts;
  if (with_tail) ts.push_back(n - 1);
  Graph g = make_graph(n, es, ts);
  g.deco.root = 0;
  validate(g);
  return g;
}

inline Graph single_vertex_tree() {
  Graph g;
  g.vertices = {0};
  g.deco.root = 0;
  return g;
}

// All rooted trees with exactly nv vertices and exactly nt tails, one graph
// per (parent vector, tail assignment); contains isomorphic duplicates.
inline std::vector<Graph> rooted_trees_raw(int nv, int nt) {
  std::vector<Graph> out;
  if (nv < 1) return out;
  std::vector<int> parent(static_cast<size_t>(nv), 0);  // parent[v] < v, v >= 1
  std::function<void(int)> rec = [&](int v) {
    if (v == nv) {
      std::vector<std::pair<int, int>> es;
      for (int w = 1; w < nv; ++w) es.push_back({parent[static_cast<size_t>(w)], w});
      std::vector<int> assign(static_cast<size_t>(nt), 0);
      while (true) {
        std::vector<int> ts(assign.begin(), assign.end());
        Graph g = make_graph(nv, es, ts);
        g.deco.root = 0;
        out.push_back(g);
        int i = nt - 1;
        while (i >= 0 && assign[static_cast<size_t>(i)] == nv - 1)
          assign[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++assign[static_cast<size_t>(i)];
      }
      return;
    }
    for (int p = 0; p < v; ++p) {
      parent[static_cast<size_t>(v)] = p;
      rec(v + 1);
    }
  };
  rec(1);
  return out;
}

// Distinct iso classes of rooted trees with <= max_v vertices and <= max_t
// tails (one representative each, ordered by canonical key).
inline std::vector<Graph> all_rooted_trees(int max_v, int max_t) {
  std::map<std::string, Graph> reps;
  for (int nv = 1; nv <= max_v; ++nv)
    for (int nt = 0; nt <= max_t; ++nt)
      for (Graph& g : rooted_trees_raw(nv, nt)) reps.emplace(canonicalize(g).bytes, g);
  std::vector<Graph> out;
  for (auto& [k, g] : reps) out.push_back(g);
  return out;
}

// All planar structures on a rooted tree: every linear order at the root,
// every cyclic-order representative elsewhere; deduplicated by canonical key.
inline std::vector<Graph> all_planar_orders(const Graph& g) {
  if (!is_rooted_tree(g)) throw std::invalid_argument("tree: not a rooted tree");
  std::vector<VertexId> vs = g.vertices;
  std::vector<std::vector<std::vector<FlagId>>> choices;
  for (VertexId v : vs) {
    std::vector<FlagId> inc = flags_at(g, v);
    std::sort(inc.begin(), inc.end());
    std::vector<std::vector<FlagId>> opts;
    if (inc.size() <= 1) {
      opts.push_back(inc);
    } else if (v == *g.deco.root) {
      std::vector<FlagId> p = inc;
      do opts.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
    } else {
      // fix the first flag, permute the rest: one representative per cyclic order
      std::vector<FlagId> rest(inc.begin() + 1, inc.end());
      std::sort(rest.begin(), rest.end());
      do {
        std::vector<FlagId> p{inc[0]};
        p.insert(p.end(), rest.begin(), rest.end());
        opts.push_back(p);
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    choices.push_back(opts);
  }
  std::map<std::string, Graph> reps;
  std::vector<size_t> idx(vs.size(), 0);
  while (true) {
    Graph r = g;
    for (size_t i = 0; i < vs.size(); ++i) r.deco.planar[vs[i]] = choices[i][idx[i]];
    validate(r);
    reps.emplace(canonicalize(r).bytes, r);
    size_t i = 0;
    while (i < idx.size() && idx[i] + 1 == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }
  std::vector<Graph> out;
  for (auto& [k, r] : reps) out.push_back(r);
  return out;
}

}  // namespace feyncat
