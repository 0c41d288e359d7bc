#pragma once

// Exhaustive and randomized small-graph generators for property tests.

#include <random>
#include <vector>

#include <feyncat/graph.hpp>

namespace testgen {

using feyncat::Graph;

// Multisets of size k over {0..n-1} (combinations with repetition).
inline void multisets(int n, int k, std::vector<std::vector<int>>& out,
                      std::vector<int> cur = {}, int start = 0) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    multisets(n, k - 1, out, cur, i);
    cur.pop_back();
  }
}

// All undecorated graphs with exactly nv vertices, up to maxe edges (loops and
// parallel edges included) and up to maxt tails. Contains isomorphic
// duplicates by construction (useful for canonical-form testing).
inline std::vector<Graph> all_graphs(int nv, int maxe, int maxt) {
  std::vector<Graph> out;
  std::vector<std::pair<int, int>> pair_types;
  for (int u = 0; u < nv; ++u)
    for (int v = u; v < nv; ++v) pair_types.push_back({u, v});
  for (int e = 0; e <= maxe; ++e) {
    std::vector<std::vector<int>> ems;
    multisets(static_cast<int>(pair_types.size()), e, ems);
    for (auto& em : ems) {
      std::vector<std::pair<int, int>> edge_vts;
      for (int i : em) edge_vts.push_back(pair_types[static_cast<size_t>(i)]);
      for (int t = 0; t <= maxt; ++t) {
        std::vector<std::vector<int>> tms;
        multisets(nv, t, tms);
        for (auto& tm : tms) out.push_back(feyncat::make_graph(nv, edge_vts, tm));
      }
    }
  }
  return out;
}

inline Graph random_graph(std::mt19937& rng, int maxv = 4, int maxe = 5,
                          int maxt = 3, bool decorate = false) {
  std::uniform_int_distribution<int> dv(1, maxv);
  int nv = dv(rng);
  std::uniform_int_distribution<int> de(0, maxe), dt(0, maxt), dvx(0, nv - 1);
  std::vector<std::pair<int, int>> edge_vts;
  int ne = de(rng);
  for (int i = 0; i < ne; ++i) edge_vts.push_back({dvx(rng), dvx(rng)});
  std::vector<int> tail_vts;
  int nt = dt(rng);
  for (int i = 0; i < nt; ++i) tail_vts.push_back(dvx(rng));
  Graph g = feyncat::make_graph(nv, edge_vts, tail_vts);
  if (decorate) {
    std::uniform_int_distribution<int> coin(0, 1);
    auto es = feyncat::edges(g);
    for (auto& [f, p] : es) {
      if (coin(rng)) {
        g.deco.direction[f] = feyncat::FlagDir::out;
        g.deco.direction[p] = feyncat::FlagDir::in;
      }
      if (coin(rng)) {
        feyncat::Coeff m(coin(rng) ? 1 : 3, 2);
        g.deco.mass[f] = m;
        g.deco.mass[p] = m;
      }
    }
    for (auto f : feyncat::tails(g)) {
      if (coin(rng)) g.deco.momentum[f] = coin(rng);
      if (coin(rng)) g.deco.color[f] = coin(rng) ? "a" : "b";
    }
    if (coin(rng)) g.deco.root = g.vertices[static_cast<size_t>(dvx(rng))];
    feyncat::validate(g);
  }
  return g;
}

}  // namespace testgen
