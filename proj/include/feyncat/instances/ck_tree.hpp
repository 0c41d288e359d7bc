#pragma once

// Rooted-tree instance (planar or symmetric, with tails or amputated).
// Generators are canonical classes of rooted trees; the degenerate line |
// is the identity class in the tailed modes. A coproduct channel is a
// down-closed vertex subset D: the quotient is the root part induced on D
// (severed edge halves become tails when tails are kept), the subobject
// word has one factor per tail of the root part — the hanging subtree for
// a severed half, the line for an original tail. The empty D contributes
// the trivial channel on the other side. Degree is the vertex count, which
// makes the grading additive across channels.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "../algebra.hpp"
#include "../canonical.hpp"
#include "../graph.hpp"
#include "../tree.hpp"

namespace feyncat {

inline ClassKey ck_tree_line_key() { return "t:|"; }

inline ClassKey ck_tree_key(const Graph& g) { return "t:" + canonicalize(g).bytes; }

inline Graph ck_tree_graph(const ClassKey& k) {
  if (k == ck_tree_line_key())
    throw std::invalid_argument("ck-tree: the line has no graph representative");
  if (k.rfind("t:", 0) != 0) throw std::invalid_argument("ck-tree: bad key " + k);
  Graph g = graph_from_certificate(k.substr(2));
  if (!is_rooted_tree(g)) throw std::invalid_argument("ck-tree: key is not a rooted tree");
  return g;
}

inline int ck_tree_degree(const ClassKey& k) {
  if (k == ck_tree_line_key()) return 0;
  size_t semi = k.find(';');
  if (k.rfind("t:", 0) != 0 || semi == std::string::npos)
    throw std::invalid_argument("ck-tree: bad key " + k);
  return std::stoi(k.substr(2, semi - 2));
}

namespace ckdetail {

// Incident flags of v in traversal order, skipping the incoming flag: the
// stored planar order (rotated to start after `in`), or sorted ids when no
// planar structure is present.
inline std::vector<FlagId> flag_order(const Graph& g, VertexId v,
                                      std::optional<FlagId> in) {
  std::vector<FlagId> ord;
  if (auto it = g.deco.planar.find(v); it != g.deco.planar.end()) {
    ord = it->second;
  } else {
    ord = flags_at(g, v);
    std::sort(ord.begin(), ord.end());
  }
  if (!in) return ord;
  size_t pos = 0;
  while (pos < ord.size() && ord[pos] != *in) ++pos;
  if (pos == ord.size()) throw std::invalid_argument("ck-tree: incoming flag missing");
  std::vector<FlagId> out;
  for (size_t i = 1; i < ord.size(); ++i) out.push_back(ord[(pos + i) % ord.size()]);
  return out;
}

// Root-part boundary flags (original tails at D plus severed lower halves)
// in depth-first traversal order over D.
inline std::vector<FlagId> cut_boundary_order(const Graph& g,
                                              const std::set<VertexId>& d) {
  std::vector<FlagId> out;
  std::function<void(VertexId, std::optional<FlagId>)> visit =
      [&](VertexId v, std::optional<FlagId> in) {
        for (FlagId f : flag_order(g, v, in)) {
          FlagId p = g.involution.at(f);
          if (p == f) {
            out.push_back(f);  // original tail of the root part
          } else {
            VertexId w = g.boundary.at(p);
            if (d.count(w))
              visit(w, p);
            else
              out.push_back(f);  // severed lower half
          }
        }
      };
  visit(*g.deco.root, std::nullopt);
  return out;
}

// Restriction of g to `keep`, dropping the flags in `drop` and turning the
// flags in `sever` into tails; re-rooted at `root`. When the new root was
// entered through a now-dropped flag (`root_in`), its cyclic order is
// linearized to start right after that flag.
inline Graph restrict_tree(const Graph& g, const std::set<VertexId>& keep,
                           const std::set<FlagId>& drop, const std::set<FlagId>& sever,
                           VertexId root, std::optional<FlagId> root_in = std::nullopt) {
  Graph r;
  for (VertexId v : g.vertices)
    if (keep.count(v)) r.vertices.push_back(v);
  for (FlagId f : g.flags) {
    if (!keep.count(g.boundary.at(f)) || drop.count(f)) continue;
    r.flags.push_back(f);
    r.boundary[f] = g.boundary.at(f);
    r.involution[f] = sever.count(f) ? f : g.involution.at(f);
    if (auto it = g.deco.direction.find(f); it != g.deco.direction.end())
      r.deco.direction[f] = it->second;
    if (auto it = g.deco.color.find(f); it != g.deco.color.end())
      r.deco.color[f] = it->second;
    if (auto it = g.deco.momentum.find(f); it != g.deco.momentum.end())
      r.deco.momentum[f] = it->second;
    if (auto it = g.deco.tail_label.find(f); it != g.deco.tail_label.end())
      r.deco.tail_label[f] = it->second;
    if (r.involution.at(f) != f)
      if (auto it = g.deco.mass.find(f); it != g.deco.mass.end())
        r.deco.mass[f] = it->second;
  }
  for (auto& [v, ord] : g.deco.planar) {
    if (!keep.count(v)) continue;
    std::vector<FlagId> rot = ord;
    if (v == root && root_in) {
      size_t pos = 0;
      while (pos < rot.size() && rot[pos] != *root_in) ++pos;
      if (pos < rot.size())
        std::rotate(rot.begin(), rot.begin() + static_cast<long>(pos) + 1, rot.end());
    }
    std::vector<FlagId> o;
    for (FlagId f : rot)
      if (r.involution.count(f)) o.push_back(f);
    r.deco.planar[v] = o;
  }
  r.deco.root = root;
  validate(r);
  return r;
}

// Channel of one down-closed vertex subset.
inline Channel tree_cut_channel(const Graph& g, const std::set<VertexId>& d,
                                bool amputated) {
  Channel ch;
  if (d.empty()) {
    if (!amputated) ch.left = {ck_tree_line_key()};
    ch.right = {ck_tree_key(g)};
    return ch;
  }
  std::map<FlagId, FlagId> cut;  // lower half -> upper half
  for (auto& [f, p] : edges(g)) {
    bool af = d.count(g.boundary.at(f)) != 0, ap = d.count(g.boundary.at(p)) != 0;
    if (af == ap) continue;
    if (af)
      cut[f] = p;
    else
      cut[p] = f;
  }
  std::set<FlagId> lower_halves;
  for (auto& [f, p] : cut) lower_halves.insert(f);

  Graph lower = restrict_tree(g, d, amputated ? lower_halves : std::set<FlagId>{},
                              amputated ? std::set<FlagId>{} : lower_halves,
                              *g.deco.root);
  ch.left = {ck_tree_key(lower)};

  // components of the complement
  std::map<VertexId, int> comp;
  int ncomp = 0;
  for (VertexId v : g.vertices) {
    if (d.count(v) || comp.count(v)) continue;
    int id = ncomp++;
    std::vector<VertexId> frontier{v};
    comp[v] = id;
    while (!frontier.empty()) {
      VertexId u = frontier.back();
      frontier.pop_back();
      for (FlagId f : flags_at(g, u)) {
        FlagId p = g.involution.at(f);
        if (p == f) continue;
        VertexId w = g.boundary.at(p);
        if (d.count(w) || comp.count(w)) continue;
        comp[w] = id;
        frontier.push_back(w);
      }
    }
  }
  std::map<int, ClassKey> upkey;
  for (auto& [low, up] : cut) {
    VertexId v = g.boundary.at(up);
    int id = comp.at(v);
    if (upkey.count(id)) continue;
    std::set<VertexId> keep;
    for (auto& [w, cid] : comp)
      if (cid == id) keep.insert(w);
    upkey[id] = ck_tree_key(restrict_tree(g, keep, {up}, {}, v, up));
  }

  for (FlagId f : cut_boundary_order(g, d)) {
    if (g.involution.at(f) == f) {
      if (!amputated) ch.right.push_back(ck_tree_line_key());
    } else {
      ch.right.push_back(upkey.at(comp.at(g.boundary.at(cut.at(f)))));
    }
  }
  return ch;
}

}  // namespace ckdetail

inline InstanceSpec ck_tree_instance(bool planar, bool amputated) {
  InstanceSpec s;
  s.name = std::string("ck-tree-") + (planar ? "planar" : "sym") +
           (amputated ? "-amp" : "");
  s.symmetric = !planar;
  s.is_identity = [](const ClassKey& k) { return k == ck_tree_line_key(); };
  s.degree_of = [](const ClassKey& k) { return ck_tree_degree(k); };

  s.channels = [amputated](const ClassKey& k) {
    std::vector<Channel> out;
    if (k == ck_tree_line_key()) {
      out.push_back({{k}, {k}, 1});
      return out;
    }
    Graph g = ck_tree_graph(k);
    for (auto& d : down_closed_subsets(g))
      out.push_back(ckdetail::tree_cut_channel(g, d, amputated));
    return out;
  };

  s.generators = [planar, amputated](int maxdeg) {
    std::set<ClassKey> keys;
    if (!amputated) keys.insert(ck_tree_line_key());
    for (const Graph& t : all_rooted_trees(maxdeg, amputated ? 0 : 2)) {
      if (planar)
        for (const Graph& p : all_planar_orders(t)) keys.insert(ck_tree_key(p));
      else
        keys.insert(ck_tree_key(t));
    }
    return std::vector<ClassKey>(keys.begin(), keys.end());
  };

  // Independent path: one joint bitmask over the disjoint union of the
  // factors' vertex sets, down-closed separately in each factor.
  s.word_channels = [amputated](const Word& w) {
    struct Fac {
      bool line;
      Graph g;
      std::map<VertexId, VertexId> parent;
    };
    std::vector<Fac> facs;
    size_t total = 0;
    for (const ClassKey& k : w) {
      Fac f;
      f.line = (k == ck_tree_line_key());
      if (!f.line) {
        f.g = ck_tree_graph(k);
        f.parent = parent_map(f.g);
        total += f.g.vertices.size();
      }
      facs.push_back(std::move(f));
    }
    if (total > 22)
      throw std::invalid_argument("ck-tree: word too large for joint enumeration");
    std::vector<Channel> out;
    for (std::uint64_t mask = 0; mask < (1ull << total); ++mask) {
      Channel ch;
      size_t bit = 0;
      bool ok = true;
      for (const Fac& f : facs) {
        if (f.line) {
          ch.left.push_back(ck_tree_line_key());
          ch.right.push_back(ck_tree_line_key());
          continue;
        }
        std::set<VertexId> d;
        for (VertexId v : f.g.vertices)
          if (mask & (1ull << bit++)) d.insert(v);
        for (VertexId v : d)
          if (f.parent.count(v) && !d.count(f.parent.at(v))) {
            ok = false;
            break;
          }
        if (!ok) break;
        Channel c = ckdetail::tree_cut_channel(f.g, d, amputated);
        ch.left.insert(ch.left.end(), c.left.begin(), c.left.end());
        ch.right.insert(ch.right.end(), c.right.begin(), c.right.end());
      }
      if (ok) out.push_back(ch);
    }
    return out;
  };

  s.id_aut_iso = [](const ClassKey&) { return Coeff(1); };

  auto bplus = [planar, amputated](const Word& w) {
    Graph r = single_vertex_tree();
    if (planar) r.deco.planar[0] = {};
    for (const ClassKey& k : w) {
      if (k == ck_tree_line_key()) {
        if (amputated)
          throw std::invalid_argument("ck-tree: no line class in amputated mode");
        FlagId f = r.flags.empty() ? 0 : r.flags.back() + 1;
        r.flags.push_back(f);
        r.involution[f] = f;
        r.boundary[f] = 0;
        if (!r.deco.planar.empty()) r.deco.planar[0].push_back(f);
      } else {
        r = tree_graft_edge(r, 0, ck_tree_graph(k));
      }
    }
    return ck_tree_key(r);
  };
  s.b_plus = bplus;

  s.show = [](const ClassKey& k) {
    if (k == ck_tree_line_key()) return std::string("|");
    Graph g = ck_tree_graph(k);
    std::function<std::string(VertexId, std::optional<FlagId>)> rend =
        [&](VertexId v, std::optional<FlagId> in) {
          std::vector<std::string> items;
          for (FlagId f : ckdetail::flag_order(g, v, in)) {
            FlagId p = g.involution.at(f);
            if (p == f)
              items.push_back("|");
            else
              items.push_back(rend(g.boundary.at(p), p));
          }
          std::string s = "*";
          if (!items.empty()) {
            s += "(";
            for (size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
            s += ")";
          }
          return s;
        };
    return rend(*g.deco.root, std::nullopt);
  };
  s.latex = s.show;

  s.parse = [bplus, planar, amputated](const std::string& in) {
    size_t pos = 0;
    auto skip = [&]() {
      while (pos < in.size() && in[pos] == ' ') ++pos;
    };
    auto expect = [&](char c) {
      skip();
      if (pos >= in.size() || in[pos] != c)
        throw std::invalid_argument("ck-tree: expected '" + std::string(1, c) +
                                    "' in " + in);
      ++pos;
    };
    std::function<ClassKey()> expr = [&]() -> ClassKey {
      skip();
      if (pos < in.size() && in[pos] == '|') {
        if (amputated)
          throw std::invalid_argument("ck-tree: no line class in amputated mode");
        ++pos;
        return ck_tree_line_key();
      }
      if (in.compare(pos, 7, "ladder(") == 0) {
        pos += 7;
        skip();
        size_t start = pos;
        while (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos])))
          ++pos;
        if (start == pos) throw std::invalid_argument("ck-tree: ladder needs a count");
        int n = std::stoi(in.substr(start, pos - start));
        expect(')');
        if (n == 0) {
          if (amputated)
            throw std::invalid_argument("ck-tree: ladder(0) needs the line class");
          return ck_tree_line_key();
        }
        Graph g = ladder(n, !amputated);
        if (planar)
          for (VertexId v : g.vertices) {
            std::vector<FlagId> fs = flags_at(g, v);
            std::sort(fs.begin(), fs.end());
            g.deco.planar[v] = fs;
          }
        return ck_tree_key(g);
      }
      if (in.compare(pos, 2, "B(") == 0) {
        pos += 2;
        Word w;
        skip();
        if (pos < in.size() && in[pos] == ')') {
          ++pos;
          return bplus(w);
        }
        while (true) {
          w.push_back(expr());
          skip();
          if (pos < in.size() && in[pos] == ',') {
            ++pos;
            continue;
          }
          break;
        }
        expect(')');
        return bplus(w);
      }
      throw std::invalid_argument("ck-tree: expected '|', ladder(n) or B(...) in " + in);
    };
    ClassKey k = expr();
    skip();
    if (pos != in.size()) throw std::invalid_argument("ck-tree: trailing input in " + in);
    return k;
  };
  return s;
}

// Tail amputation: delete all tails of every tree factor and land in the
// amputated instance; the line maps to the unit.
inline Elem ck_tree_amputate(const InstanceSpec& target, const Elem& x) {
  Elem r;
  for (auto& [w, c] : x.terms) {
    Word nw;
    for (const ClassKey& k : w) {
      if (k == ck_tree_line_key()) continue;
      nw.push_back(ck_tree_key(trun(ck_tree_graph(k))));
    }
    add_term(r, normalize_word(target, nw), c);
  }
  return r;
}

}  // namespace feyncat
