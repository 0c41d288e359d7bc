#pragma once

// Graph instance: generators are canonical classes of connected graphs
// (tails allowed, loops and parallel edges allowed); the edgeless corollas
// are the identity classes and degree is the edge count. A coproduct
// channel is an edge subset E': the quotient collapses the chosen edges
// (contract), the subobject word lists the components of the spanning
// subgraph on E' (severed halves become tails). The one_pi and motic
// filters drop channels with a failing subobject component.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "../algebra.hpp"
#include "../canonical.hpp"
#include "../graph.hpp"
#include "../graph_json.hpp"

namespace feyncat {

inline ClassKey ck_graph_key(const Graph& g) { return "g:" + canonicalize(g).bytes; }

inline Graph ck_graph_graph(const ClassKey& k) {
  if (k.rfind("g:", 0) != 0) throw std::invalid_argument("ck-graph: bad key " + k);
  return graph_from_certificate(k.substr(2));
}

inline int ck_graph_degree(const ClassKey& k) {
  // count the entries of the certificate's edge section
  size_t at = k.find(";E[");
  if (k.rfind("g:", 0) != 0 || at == std::string::npos)
    throw std::invalid_argument("ck-graph: bad key " + k);
  size_t start = at + 3, end = k.find(']', start);
  if (end == std::string::npos) throw std::invalid_argument("ck-graph: bad key " + k);
  if (end == start) return 0;
  int n = 1;
  for (size_t i = start; i < end; ++i)
    if (k[i] == ';') ++n;
  return n;
}

// Severing test: every component keeps its component count when any single
// edge is severed.
inline bool one_pi_predicate(const Graph& g) {
  std::vector<Edge> es = edges(g);
  std::set<Edge> all(es.begin(), es.end());
  int base = num_components(g);
  for (const Edge& e : es) {
    std::set<Edge> keep = all;
    keep.erase(e);
    if (num_components(spanning_subgraph(g, keep)) != base) return false;
  }
  return true;
}

// Second characterization, used to cross-check the severing test: on every
// component, each proper edge subset has strictly smaller first Betti number.
inline bool one_pi_predicate_betti(const Graph& g) {
  for (const Graph& c : split_components(g)) {
    std::vector<Edge> es = edges(c);
    int b = betti1(c);
    size_t ne = es.size();
    for (std::uint32_t mask = 0; ne > 0 && mask < (1u << ne) - 1; ++mask) {
      std::set<Edge> keep;
      for (size_t i = 0; i < ne; ++i)
        if (mask & (1u << i)) keep.insert(es[i]);
      if (betti1(spanning_subgraph(c, keep)) >= b) return false;
    }
  }
  return true;
}

// Motic condition on the decorations carried by the graph itself: for every
// proper edge subset that contains all massive edges and keeps all momentum
// tails in a single component, the first Betti number must drop. Applied per
// component; with no masses and no momenta this is the Betti form of 1-PI.
inline bool motic_predicate(const Graph& g) {
  for (const Graph& c : split_components(g)) {
    std::vector<Edge> es = edges(c);
    size_t ne = es.size();
    int b = betti1(c);
    std::set<size_t> massive;
    for (size_t i = 0; i < ne; ++i)
      if (auto it = c.deco.mass.find(es[i].first);
          it != c.deco.mass.end() && it->second != 0)
        massive.insert(i);
    std::set<VertexId> momv;
    for (FlagId f : tails(c))
      if (auto it = c.deco.momentum.find(f); it != c.deco.momentum.end() && it->second)
        momv.insert(c.boundary.at(f));
    for (std::uint32_t mask = 0; ne > 0 && mask < (1u << ne) - 1; ++mask) {
      bool has_mass = true;
      for (size_t i : massive)
        if (!(mask & (1u << i))) has_mass = false;
      if (!has_mass) continue;
      std::set<Edge> keep;
      for (size_t i = 0; i < ne; ++i)
        if (mask & (1u << i)) keep.insert(es[i]);
      Graph sp = spanning_subgraph(c, keep);
      if (momv.size() > 1) {
        auto [comp, n] = components(sp);
        std::set<int> ids;
        for (VertexId v : momv) ids.insert(comp.at(v));
        if (ids.size() > 1) continue;  // not momentum spanning
      }
      if (betti1(sp) >= b) return false;
    }
  }
  return true;
}

enum class GraphFilter { core, one_pi, motic };

namespace ckgdetail {

inline std::function<bool(const Graph&)> filter_pred(GraphFilter f) {
  switch (f) {
    case GraphFilter::core: return [](const Graph&) { return true; };
    case GraphFilter::one_pi: return [](const Graph& g) { return one_pi_predicate(g); };
    default: return [](const Graph& g) { return motic_predicate(g); };
  }
}

// Channel of one edge subset; false when a subobject component fails the
// filter (channel dropped).
inline bool subset_channel(const Graph& g, const std::set<Edge>& sel,
                           const std::function<bool(const Graph&)>& pred, Channel& ch) {
  for (const Graph& c : split_components(spanning_subgraph(g, sel))) {
    if (!pred(c)) return false;
    ch.right.push_back(ck_graph_key(c));
  }
  ch.left.push_back(ck_graph_key(contract(g, sel)));
  return true;
}

// Connected multigraphs (loops/parallel edges included), exactly ne edges on
// nv vertices, tail-free, one representative per canonical class.
inline void connected_pool(int nv, int ne, std::map<std::string, Graph>& reps) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < nv; ++a)
    for (int b = a; b < nv; ++b) pairs.push_back({a, b});
  std::vector<int> pick;
  std::function<void(size_t)> rec = [&](size_t minp) {
    if (static_cast<int>(pick.size()) == ne) {
      std::vector<std::pair<int, int>> es;
      for (int i : pick) es.push_back(pairs[static_cast<size_t>(i)]);
      Graph g = make_graph(nv, es, {});
      if (!is_connected(g)) return;
      reps.emplace(canonicalize(g).bytes, g);
      return;
    }
    for (size_t i = minp; i < pairs.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      rec(i);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace ckgdetail

inline InstanceSpec ck_graph_instance(GraphFilter filter) {
  InstanceSpec s;
  s.name = filter == GraphFilter::core
               ? "ck-graph-core"
               : (filter == GraphFilter::one_pi ? "ck-graph-1pi" : "ck-graph-motic");
  s.symmetric = true;
  s.free_action = true;
  s.is_identity = [](const ClassKey& k) { return ck_graph_degree(k) == 0; };
  s.degree_of = [](const ClassKey& k) { return ck_graph_degree(k); };
  auto pred = ckgdetail::filter_pred(filter);

  s.channels = [pred](const ClassKey& k) {
    Graph g = ck_graph_graph(k);
    std::vector<Edge> es = edges(g);
    size_t ne = es.size();
    if (ne > 16) throw std::invalid_argument("ck-graph: too many edges");
    std::vector<Channel> out;
    for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
      std::set<Edge> sel;
      for (size_t i = 0; i < ne; ++i)
        if (mask & (1u << i)) sel.insert(es[i]);
      Channel ch;
      if (ckgdetail::subset_channel(g, sel, pred, ch)) out.push_back(ch);
    }
    return out;
  };

  auto cache = std::make_shared<std::map<int, std::vector<ClassKey>>>();
  s.generators = [pred, filter, cache](int maxdeg) {
    if (auto it = cache->find(maxdeg); it != cache->end()) return it->second;
    std::map<std::string, Graph> reps;
    for (int nt = 0; nt <= 2; ++nt)
      reps.emplace(canonicalize(corolla(nt)).bytes, corolla(nt));
    std::map<std::string, Graph> base;
    for (int ne = 1; ne <= maxdeg; ++ne)
      for (int nv = 1; nv <= ne + 1; ++nv) ckgdetail::connected_pool(nv, ne, base);
    for (auto& [cert, g] : base) {
      if (pred(g)) reps.emplace(cert, g);
      if (edges(g).size() > 2) continue;
      // small-graph tail variants
      int nv = static_cast<int>(g.vertices.size());
      std::vector<Edge> es;
      std::vector<std::pair<int, int>> evts;
      for (auto& [f, p] : edges(g))
        evts.push_back({static_cast<int>(g.boundary.at(f)),
                        static_cast<int>(g.boundary.at(p))});
      for (int nt = 1; nt <= 2; ++nt) {
        std::vector<int> assign(static_cast<size_t>(nt), 0);
        while (true) {
          Graph h = make_graph(nv, evts, assign);
          if (pred(h)) reps.emplace(canonicalize(h).bytes, h);
          if (filter == GraphFilter::motic) {
            // decorated variants: massive edges, momentum tails
            std::vector<Edge> hes = edges(h);
            std::vector<FlagId> hts = tails(h);
            for (std::uint32_t em = 0; em < (1u << hes.size()); ++em)
              for (std::uint32_t tm = 0; tm < (1u << hts.size()); ++tm) {
                if (em == 0 && tm == 0) continue;
                Graph d = h;
                for (size_t i = 0; i < hes.size(); ++i)
                  if (em & (1u << i)) {
                    d.deco.mass[hes[i].first] = 1;
                    d.deco.mass[hes[i].second] = 1;
                  }
                for (size_t i = 0; i < hts.size(); ++i)
                  if (tm & (1u << i)) d.deco.momentum[hts[i]] = true;
                if (pred(d)) reps.emplace(canonicalize(d).bytes, d);
              }
          }
          size_t i = 0;
          while (i < assign.size() && assign[i] + 1 == nv) assign[i++] = 0;
          if (i == assign.size()) break;
          ++assign[i];
        }
      }
    }
    std::vector<ClassKey> out;
    for (auto& [cert, g] : reps)
      if (static_cast<int>(edges(g).size()) <= maxdeg) out.push_back("g:" + cert);
    (*cache)[maxdeg] = out;
    return out;
  };

  // Independent path: one joint bitmask over the disjoint union of the
  // factors' edge sets.
  s.word_channels = [pred](const Word& w) {
    std::vector<Graph> gs;
    std::vector<std::vector<Edge>> ess;
    size_t total = 0;
    for (const ClassKey& k : w) {
      gs.push_back(ck_graph_graph(k));
      ess.push_back(edges(gs.back()));
      total += ess.back().size();
    }
    if (total > 20)
      throw std::invalid_argument("ck-graph: word too large for joint enumeration");
    std::vector<Channel> out;
    for (std::uint64_t mask = 0; mask < (1ull << total); ++mask) {
      Channel ch;
      size_t bit = 0;
      bool ok = true;
      for (size_t fi = 0; fi < gs.size() && ok; ++fi) {
        std::set<Edge> sel;
        for (const Edge& e : ess[fi])
          if (mask & (1ull << bit++)) sel.insert(e);
        ok = ckgdetail::subset_channel(gs[fi], sel, pred, ch);
      }
      if (ok) out.push_back(ch);
    }
    return out;
  };

  s.id_aut_iso = [](const ClassKey& k) {
    return Coeff(aggregate_aut_order(ck_graph_graph(k)));
  };

  s.show = [](const ClassKey& k) {
    Graph g = ck_graph_graph(k);
    std::ostringstream out;
    out << "G(" << g.vertices.size();
    for (auto& [f, p] : edges(g)) {
      out << ";" << g.boundary.at(f) << "-" << g.boundary.at(p);
      if (auto it = g.deco.mass.find(f); it != g.deco.mass.end() && it->second != 0)
        out << "m";
    }
    for (FlagId f : tails(g)) {
      out << ";t" << g.boundary.at(f);
      if (auto it = g.deco.momentum.find(f); it != g.deco.momentum.end() && it->second)
        out << "q";
    }
    out << ")";
    return out.str();
  };
  s.latex = s.show;

  s.parse = [pred](const std::string& in) {
    auto arg = [&](const std::string& head) -> std::optional<std::string> {
      if (in.rfind(head, 0) != 0 || in.back() != ')') return std::nullopt;
      return in.substr(head.size(), in.size() - head.size() - 1);
    };
    Graph g;
    if (auto a = arg("loop(")) {
      if (!a->empty()) throw std::invalid_argument("ck-graph: loop takes no argument");
      g = make_graph(1, {{0, 0}}, {});
    } else if (auto a2 = arg("banana(")) {
      int n = std::stoi(*a2);
      if (n < 1) throw std::invalid_argument("ck-graph: banana needs n >= 1");
      std::vector<std::pair<int, int>> es(static_cast<size_t>(n), {0, 1});
      g = make_graph(2, es, {});
    } else if (auto a3 = arg("cycle(")) {
      int n = std::stoi(*a3);
      if (n < 1) throw std::invalid_argument("ck-graph: cycle needs n >= 1");
      if (n == 1) {
        g = make_graph(1, {{0, 0}}, {});
      } else {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
        g = make_graph(n, es, {});
      }
    } else if (auto a4 = arg("graph(")) {
      g = graph_from_json_string(*a4);
    } else {
      throw std::invalid_argument(
          "ck-graph: expected loop(), banana(n), cycle(n) or graph(<json>)");
    }
    if (!is_connected(g)) throw std::invalid_argument("ck-graph: graph not connected");
    if (!pred(g)) throw std::invalid_argument("ck-graph: generator fails the filter");
    return ck_graph_key(g);
  };
  return s;
}

}  // namespace feyncat
