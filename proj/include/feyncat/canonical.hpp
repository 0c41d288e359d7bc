#pragma once

// Canonical forms for decorated graphs. The certificate is a relabeling-
// invariant string: two graphs get equal bytes iff they are isomorphic as
// decorated graphs. The string is also parseable, so it can serve as a
// self-contained class key (graph_from_certificate reconstructs a
// representative).
//
// Algorithm: iterative color refinement on (degree, tail data, decorations),
// then exhaustive search over vertex orderings within refined color classes,
// taking the lexicographically smallest serialized certificate. Graphs here
// are desk-scale (tens of flags), so the worst-case search is acceptable.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace feyncat {

struct CanonicalKey {
  std::string bytes;
  std::map<VertexId, int> order;  // witnessing relabeling vertex -> position
};

namespace detail {

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '%' || c == ';' || c == ',' || c == ':' || c == '|' || c == '(' ||
        c == ')' || c == '[' || c == ']' || c == '-' || c == '~' || c == 'D' ||
        c == 'C' || c == 'Q' || c == 'L' || c == 'M') {
      out += '%';
      out += "0123456789abcdef"[(c >> 4) & 0xf];
      out += "0123456789abcdef"[c & 0xf];
    } else {
      out += c;
    }
  }
  return out;
}

inline std::string unescape(const std::string& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size()) {
      auto hex = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        return c - 'a' + 10;
      };
      out += static_cast<char>(hex(s[i + 1]) * 16 + hex(s[i + 2]));
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

// Decoration descriptor of one flag, excluding adjacency.
inline std::string side_desc(const Graph& g, FlagId f) {
  std::string s;
  if (auto it = g.deco.direction.find(f); it != g.deco.direction.end())
    s += "D" + std::to_string(static_cast<int>(it->second));
  if (auto it = g.deco.color.find(f); it != g.deco.color.end())
    s += "C" + escape(it->second);
  return s;
}

inline std::string tail_desc(const Graph& g, FlagId f) {
  std::string s = side_desc(g, f);
  if (auto it = g.deco.momentum.find(f); it != g.deco.momentum.end())
    s += "Q" + std::to_string(it->second ? 1 : 0);
  if (auto it = g.deco.tail_label.find(f); it != g.deco.tail_label.end())
    s += "L" + escape(it->second);
  return s;
}

inline std::string mass_desc(const Graph& g, FlagId f) {
  if (auto it = g.deco.mass.find(f); it != g.deco.mass.end())
    return "M" + escape(coeff_to_string(it->second));
  return "";
}

// Oriented edge descriptor seen from flag f: this side first.
inline std::string edge_desc_from(const Graph& g, FlagId f) {
  FlagId p = g.involution.at(f);
  return side_desc(g, f) + "~" + side_desc(g, p) + mass_desc(g, f);
}

inline std::vector<std::string> sorted_tail_descs(const Graph& g,
                                                  const std::vector<FlagId>& fs) {
  std::vector<std::string> out;
  for (FlagId f : fs)
    if (g.involution.at(f) == f) out.push_back(tail_desc(g, f));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string join(const std::vector<std::string>& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

// Certificate for a fixed vertex ordering pos: V -> 0..n-1.
inline std::string certificate(const Graph& g, const std::map<VertexId, int>& pos) {
  int n = static_cast<int>(g.vertices.size());
  std::vector<std::string> vdesc(static_cast<size_t>(n));
  std::vector<std::vector<std::string>> tls(static_cast<size_t>(n));
  for (VertexId v : g.vertices) {
    size_t i = static_cast<size_t>(pos.at(v));
    if (g.deco.root && *g.deco.root == v) vdesc[i] = "r";
    tls[i] = sorted_tail_descs(g, flags_at(g, v));
  }
  std::vector<std::string> es;
  for (auto& [f, p] : edges(g)) {
    int a = pos.at(g.boundary.at(f)), b = pos.at(g.boundary.at(p));
    std::string da = side_desc(g, f), db = side_desc(g, p), m = mass_desc(g, f);
    if (a > b || (a == b && da > db)) {
      std::swap(a, b);
      std::swap(da, db);
    }
    es.push_back(std::to_string(a) + "-" + std::to_string(b) + ":" + da + "~" + db + m);
  }
  std::sort(es.begin(), es.end());

  std::ostringstream out;
  out << n << ";V[";
  for (int i = 0; i < n; ++i) out << (i ? "|" : "") << vdesc[static_cast<size_t>(i)];
  out << "];T[";
  for (int i = 0; i < n; ++i) {
    out << (i ? "|" : "");
    // each tail prefixed with 't' so a bare tail is distinguishable from none
    for (size_t k = 0; k < tls[static_cast<size_t>(i)].size(); ++k)
      out << (k ? "," : "") << "t" << tls[static_cast<size_t>(i)][k];
  }
  out << "];E[" << join(es, ';') << "]";

  if (!g.deco.planar.empty()) {
    // Planar order per vertex: flag descriptors in the stored order; cyclic
    // rotation is quotiented except at the root of a planted tree.
    for (auto& [f, p] : edges(g))
      if (g.boundary.at(f) == g.boundary.at(p))
        throw std::invalid_argument("canonical: planar graphs with loops unsupported");
    std::map<std::pair<VertexId, VertexId>, int> par;
    for (auto& [f, p] : edges(g))
      if (++par[{std::min(g.boundary.at(f), g.boundary.at(p)),
                 std::max(g.boundary.at(f), g.boundary.at(p))}] > 1)
        throw std::invalid_argument(
            "canonical: planar graphs with parallel edges unsupported");
    std::vector<std::string> pls(static_cast<size_t>(n));
    for (auto& [v, ord] : g.deco.planar) {
      std::vector<std::string> fd;
      for (FlagId f : ord) {
        if (g.involution.at(f) == f)
          fd.push_back("t" + tail_desc(g, f));
        else
          fd.push_back("e" + std::to_string(pos.at(g.boundary.at(g.involution.at(f)))) +
                       ":" + edge_desc_from(g, f));
      }
      bool linear = g.deco.root && *g.deco.root == v;
      std::string best;
      if (linear || fd.empty()) {
        best = join(fd, ',');
      } else {
        for (size_t r = 0; r < fd.size(); ++r) {
          std::vector<std::string> rot(fd.begin() + static_cast<long>(r), fd.end());
          rot.insert(rot.end(), fd.begin(), fd.begin() + static_cast<long>(r));
          std::string cand = join(rot, ',');
          if (r == 0 || cand < best) best = cand;
        }
      }
      pls[static_cast<size_t>(pos.at(v))] = best;
    }
    out << ";P[";
    for (int i = 0; i < n; ++i)
      out << (i ? "|" : "") << "(" << pls[static_cast<size_t>(i)] << ")";
    out << "]";
  }
  return out.str();
}

}  // namespace detail

inline CanonicalKey canonicalize(const Graph& g) {
  validate(g);
  // Initial colors: invariant local data.
  std::map<VertexId, std::string> color;
  for (VertexId v : g.vertices) {
    auto fs = flags_at(g, v);
    int nloop = 0, ntail = 0;
    std::vector<std::string> edesc;
    for (FlagId f : fs) {
      FlagId p = g.involution.at(f);
      if (p == f) {
        ++ntail;
      } else {
        if (g.boundary.at(p) == v) ++nloop;
        edesc.push_back(detail::edge_desc_from(g, f));
      }
    }
    std::sort(edesc.begin(), edesc.end());
    std::string c = std::to_string(fs.size()) + "/" + std::to_string(ntail) + "/" +
                    std::to_string(nloop / 2);
    if (g.deco.root && *g.deco.root == v) c += "/r";
    c += "/" + detail::join(detail::sorted_tail_descs(g, fs), ',');
    c += "/" + detail::join(edesc, ',');
    color[v] = c;
  }
  // Refinement: append the sorted multiset of (edge descriptor, neighbor
  // color) until the partition stabilizes. All data entering a color is
  // relabeling-invariant, so isomorphic graphs get matching partitions.
  for (size_t round = 0; round < g.vertices.size(); ++round) {
    std::map<VertexId, std::string> next;
    for (VertexId v : g.vertices) {
      std::vector<std::string> nb;
      for (FlagId f : flags_at(g, v)) {
        FlagId p = g.involution.at(f);
        if (p != f)
          nb.push_back(detail::edge_desc_from(g, f) + "@" + color[g.boundary.at(p)]);
      }
      std::sort(nb.begin(), nb.end());
      next[v] = color[v] + "#" + detail::join(nb, ',');
    }
    std::set<std::string> before, after;
    for (auto& [v, c] : color) before.insert(c);
    for (auto& [v, c] : next) after.insert(c);
    color = next;
    if (after.size() == before.size()) break;
  }

  // Group vertices into classes by color, ordered by color string.
  std::map<std::string, std::vector<VertexId>> classes;
  for (VertexId v : g.vertices) classes[color[v]].push_back(v);
  // Blowup guard.
  double prod = 1;
  for (auto& [c, vs] : classes)
    for (size_t i = 2; i <= vs.size(); ++i) prod *= static_cast<double>(i);
  if (prod > 5e6)
    throw std::runtime_error("canonicalize: symmetry class too large for search");

  std::vector<std::vector<VertexId>> cls;
  for (auto& [c, vs] : classes) cls.push_back(vs);

  CanonicalKey best;
  bool first = true;
  // Enumerate all orderings compatible with the class order.
  std::function<void(size_t, std::map<VertexId, int>&, int)> rec =
      [&](size_t ci, std::map<VertexId, int>& pos, int used) {
        if (ci == cls.size()) {
          std::string cert = detail::certificate(g, pos);
          if (first || cert < best.bytes) {
            best.bytes = cert;
            best.order = pos;
            first = false;
          }
          return;
        }
        std::vector<VertexId> perm = cls[ci];  // already sorted
        do {
          for (size_t i = 0; i < perm.size(); ++i)
            pos[perm[i]] = used + static_cast<int>(i);
          rec(ci + 1, pos, used + static_cast<int>(perm.size()));
        } while (std::next_permutation(perm.begin(), perm.end()));
      };
  std::map<VertexId, int> pos;
  rec(0, pos, 0);
  if (first) {  // empty graph
    best.bytes = detail::certificate(g, pos);
  }
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return canonicalize(a).bytes == canonicalize(b).bytes;
}

// Rebuilds a representative graph from certificate bytes. Vertices are
// 0..n-1; edge k of the sorted edge list gets flags (2k, 2k+1), tails follow.
inline Graph graph_from_certificate(const std::string& bytes);

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Applies a descriptor string (side/tail pieces) back onto flag f.
inline void apply_flag_desc(Graph& g, FlagId f, const std::string& d) {
  size_t i = 0;
  auto chunk = [&]() {
    size_t start = i;
    while (i < d.size() && d[i] != 'D' && d[i] != 'C' && d[i] != 'Q' && d[i] != 'L' &&
           d[i] != 'M')
      ++i;
    return d.substr(start, i - start);
  };
  while (i < d.size()) {
    char tag = d[i++];
    std::string val = chunk();
    switch (tag) {
      case 'D': g.deco.direction[f] = static_cast<FlagDir>(std::stoi(val)); break;
      case 'C': g.deco.color[f] = unescape(val); break;
      case 'Q': g.deco.momentum[f] = std::stoi(val); break;
      case 'L': g.deco.tail_label[f] = unescape(val); break;
      case 'M': g.deco.mass[f] = coeff_from_string(unescape(val)); break;
      default: throw std::invalid_argument("certificate: bad descriptor");
    }
  }
}

}  // namespace detail

inline Graph graph_from_certificate(const std::string& bytes) {
  auto bad = [&]() -> std::runtime_error {
    return std::runtime_error("certificate: malformed: " + bytes);
  };
  Graph g;
  size_t semi = bytes.find(';');
  if (semi == std::string::npos) throw bad();
  int n = std::stoi(bytes.substr(0, semi));
  for (int v = 0; v < n; ++v) g.vertices.push_back(static_cast<VertexId>(v));

  auto section = [&](const std::string& name) -> std::optional<std::string> {
    std::string key = ";" + name + "[";
    size_t at = bytes.find(key);
    if (at == std::string::npos) return std::nullopt;
    size_t start = at + key.size(), depth = 1, i = start;
    for (; i < bytes.size() && depth; ++i) {
      if (bytes[i] == '[') ++depth;
      if (bytes[i] == ']') --depth;
    }
    if (depth) throw bad();
    return bytes.substr(start, i - 1 - start);
  };

  auto vsec = section("V");
  if (vsec && !vsec->empty()) {
    auto parts = detail::split(*vsec, '|');
    if (static_cast<int>(parts.size()) != n) throw bad();
    for (int v = 0; v < n; ++v)
      if (parts[static_cast<size_t>(v)] == "r") g.deco.root = static_cast<VertexId>(v);
  }

  FlagId next = 0;
  std::map<int, std::vector<std::pair<std::string, FlagId>>> edge_flags_at;
  if (auto esec = section("E"); esec && !esec->empty()) {
    for (auto& e : detail::split(*esec, ';')) {
      size_t dash = e.find('-'), colon = e.find(':', dash);
      if (dash == std::string::npos || colon == std::string::npos) throw bad();
      int a = std::stoi(e.substr(0, dash));
      int b = std::stoi(e.substr(dash + 1, colon - dash - 1));
      std::string desc = e.substr(colon + 1);
      size_t tilde = desc.find('~');
      if (tilde == std::string::npos) throw bad();
      // Mass (if any) trails the second side descriptor; it applies to both.
      std::string da = desc.substr(0, tilde), rest = desc.substr(tilde + 1);
      std::string db = rest, m;
      if (size_t mp = rest.find('M'); mp != std::string::npos) {
        db = rest.substr(0, mp);
        m = rest.substr(mp);
      }
      FlagId fa = next++, fb = next++;
      g.flags.push_back(fa);
      g.flags.push_back(fb);
      g.involution[fa] = fb;
      g.involution[fb] = fa;
      g.boundary[fa] = static_cast<VertexId>(a);
      g.boundary[fb] = static_cast<VertexId>(b);
      detail::apply_flag_desc(g, fa, da + m);
      detail::apply_flag_desc(g, fb, db + m);
      edge_flags_at[a].push_back({"e" + std::to_string(b) + ":" + da + "~" + db + m, fa});
      edge_flags_at[b].push_back({"e" + std::to_string(a) + ":" + db + "~" + da + m, fb});
    }
  }
  std::map<int, std::vector<std::pair<std::string, FlagId>>> tail_flags_at;
  if (auto tsec = section("T"); tsec && !tsec->empty()) {
    auto per_vertex = detail::split(*tsec, '|');
    if (static_cast<int>(per_vertex.size()) != n && !(n == 0 && per_vertex.size() == 1))
      throw bad();
    for (int v = 0; v < n; ++v) {
      const std::string& ts = per_vertex[static_cast<size_t>(v)];
      if (ts.empty()) continue;
      for (auto& entry : detail::split(ts, ',')) {
        if (entry.empty() || entry[0] != 't') throw bad();
        std::string td = entry.substr(1);
        FlagId f = next++;
        g.flags.push_back(f);
        g.involution[f] = f;
        g.boundary[f] = static_cast<VertexId>(v);
        detail::apply_flag_desc(g, f, td);
        tail_flags_at[v].push_back({"t" + td, f});
      }
    }
  }
  if (auto psec = section("P"); psec) {
    auto per_vertex = detail::split(*psec, '|');
    for (int v = 0; v < n; ++v) {
      std::string s = per_vertex[static_cast<size_t>(v)];
      if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw bad();
      s = s.substr(1, s.size() - 2);
      std::vector<FlagId> order;
      auto avail_e = edge_flags_at[v];
      auto avail_t = tail_flags_at[v];
      if (!s.empty())
        for (auto& fd : detail::split(s, ',')) {
          auto& pool = (fd[0] == 't') ? avail_t : avail_e;
          bool found = false;
          for (auto& entry : pool) {
            if (entry.first == fd && entry.second != static_cast<FlagId>(-1)) {
              order.push_back(entry.second);
              entry.second = static_cast<FlagId>(-1);
              found = true;
              break;
            }
          }
          if (!found) throw bad();
        }
      g.deco.planar[static_cast<VertexId>(v)] = order;
    }
  }
  validate(g);
  return g;
}

// Automorphism group order of an edgeless aggregate: tail permutations with
// equal descriptors at each vertex, times permutations of equal corollas.
inline Int aggregate_aut_order(const Graph& g) {
  if (!is_aggregate(g))
    throw std::invalid_argument("aggregate_aut_order: graph has edges");
  if (!g.deco.planar.empty())
    throw std::invalid_argument("aggregate_aut_order: planar unsupported");
  auto fact = [](size_t k) {
    Int r = 1;
    for (size_t i = 2; i <= k; ++i) r *= static_cast<unsigned>(i);
    return r;
  };
  Int total = 1;
  std::map<std::string, size_t> corolla_classes;
  for (VertexId v : g.vertices) {
    auto descs = detail::sorted_tail_descs(g, flags_at(g, v));
    std::map<std::string, size_t> mult;
    for (auto& d : descs) ++mult[d];
    for (auto& [d, m] : mult) total *= fact(m);
    std::string key = detail::join(descs, ',');
    if (g.deco.root && *g.deco.root == v) key += "/r";
    ++corolla_classes[key];
  }
  for (auto& [c, m] : corolla_classes) total *= fact(m);
  return total;
}

}  // namespace feyncat
