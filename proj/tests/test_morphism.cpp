#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include <feyncat/canonical.hpp>
#include <feyncat/graph.hpp>
#include <feyncat/morphism.hpp>

using namespace feyncat;

namespace {

Graph random_aggregate(std::mt19937& rng, int max_v = 3, int max_tails = 3) {
  std::uniform_int_distribution<int> nvd(1, max_v);
  int nv = nvd(rng);
  std::vector<int> tail_vts;
  std::uniform_int_distribution<int> ntd(0, max_tails);
  for (int v = 0; v < nv; ++v) {
    int nt = ntd(rng);
    for (int t = 0; t < nt; ++t) tail_vts.push_back(v);
  }
  return make_graph(nv, {}, tail_vts);
}

// Builds a random morphism out of a given source aggregate: pairs up a
// random even subset of its tails as ghost edges, then groups the ghost
// components into target vertices (fibers equal components when
// fibers_are_components is set).
GraphMorphism random_morphism_from(std::mt19937& rng, const Graph& x,
                                   bool fibers_are_components = false) {
  GraphMorphism m;
  m.source = x;
  std::vector<FlagId> fl = x.flags;
  std::shuffle(fl.begin(), fl.end(), rng);
  std::uniform_int_distribution<int> kd(0, static_cast<int>(fl.size()) / 2);
  int k = kd(rng);
  for (int i = 0; i < k; ++i) {
    m.ghost_inv[fl[2 * i]] = fl[2 * i + 1];
    m.ghost_inv[fl[2 * i + 1]] = fl[2 * i];
  }
  // union-find over source vertices along ghost edges
  std::map<VertexId, VertexId> parent;
  for (VertexId v : x.vertices) parent[v] = v;
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto& [f, p] : m.ghost_inv) {
    VertexId a = find(x.boundary.at(f)), b = find(x.boundary.at(p));
    if (a != b) parent[a] = b;
  }
  std::map<VertexId, int> comp;
  for (VertexId v : x.vertices) {
    VertexId r = find(v);
    if (!comp.count(r)) comp[r] = static_cast<int>(comp.size());
  }
  int nc = static_cast<int>(comp.size());
  std::vector<int> group(nc);
  if (fibers_are_components) {
    std::iota(group.begin(), group.end(), 0);
  } else {
    std::uniform_int_distribution<int> gd(0, nc - 1);
    for (int& g : group) g = gd(rng);
    std::map<int, int> compact;
    for (int& g : group) {
      if (!compact.count(g)) compact[g] = static_cast<int>(compact.size());
      g = compact[g];
    }
  }
  int ntv = *std::max_element(group.begin(), group.end()) + 1;
  for (VertexId v : x.vertices)
    m.vertex_surj[v] = static_cast<VertexId>(group[comp[find(v)]]);
  for (int w = 0; w < ntv; ++w) m.target.vertices.push_back(static_cast<VertexId>(w));
  FlagId next = 0;
  for (FlagId f : x.flags)
    if (!m.ghost_inv.count(f)) {
      FlagId tf = next++;
      m.target.flags.push_back(tf);
      m.target.involution[tf] = tf;
      m.target.boundary[tf] = m.vertex_surj.at(x.boundary.at(f));
      m.flag_inj[tf] = f;
    }
  validate(m);
  return m;
}

bool morphism_equal(const GraphMorphism& a, const GraphMorphism& b) {
  return same_object(a.source, b.source) && same_object(a.target, b.target) &&
         a.flag_inj == b.flag_inj && a.vertex_surj == b.vertex_surj &&
         a.ghost_inv == b.ghost_inv;
}

}  // namespace

TEST_CASE("morphism validation rejects malformed data") {
  Graph x = make_graph(1, {}, {0, 0});
  GraphMorphism m = identity(x);
  SECTION("source with an edge") {
    GraphMorphism bad = m;
    bad.source = make_graph(2, {{0, 1}});
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  }
  SECTION("ghost fixed point") {
    GraphMorphism bad;
    bad.source = x;
    bad.target = make_graph(1, {}, {});
    bad.vertex_surj[0] = 0;
    bad.ghost_inv[0] = 0;
    bad.ghost_inv[1] = 1;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  }
  SECTION("ghost endpoints in different fibers") {
    Graph s = make_graph(2, {}, {0, 1});
    GraphMorphism bad;
    bad.source = s;
    bad.target = make_graph(2, {}, {});
    bad.vertex_surj[0] = 0;
    bad.vertex_surj[1] = 1;
    bad.ghost_inv[0] = 1;
    bad.ghost_inv[1] = 0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  }
  SECTION("non-injective flag map") {
    GraphMorphism bad = m;
    bad.flag_inj[0] = bad.flag_inj[1];
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  }
}

TEST_CASE("identity laws") {
  std::mt19937 rng(31);
  for (int i = 0; i < 50; ++i) {
    Graph x = random_aggregate(rng);
    GraphMorphism f = random_morphism_from(rng, x);
    CHECK(morphism_equal(compose(f, identity(f.source)), f));
    CHECK(morphism_equal(compose(identity(f.target), f), f));
  }
}

TEST_CASE("composition is associative") {
  std::mt19937 rng(47);
  for (int i = 0; i < 100; ++i) {
    Graph x = random_aggregate(rng, 4, 4);
    GraphMorphism f = random_morphism_from(rng, x);
    GraphMorphism g = random_morphism_from(rng, f.target);
    GraphMorphism h = random_morphism_from(rng, g.target);
    CHECK(morphism_equal(compose(compose(h, g), f), compose(h, compose(g, f))));
  }
}

TEST_CASE("ghost edges add up under composition") {
  std::mt19937 rng(59);
  for (int i = 0; i < 100; ++i) {
    Graph x = random_aggregate(rng, 4, 4);
    GraphMorphism f = random_morphism_from(rng, x);
    GraphMorphism g = random_morphism_from(rng, f.target);
    GraphMorphism gf = compose(g, f);
    CHECK(ghost_edge_count(gf) == ghost_edge_count(f) + ghost_edge_count(g));
    CHECK(static_cast<int>(edges(ghost(gf)).size()) == ghost_edge_count(gf));
  }
}

TEST_CASE("contracting the inner ghost edges recovers the outer ghost graph") {
  // With the inner morphism's fibers equal to its ghost components, the
  // composite's ghost graph contracted along the inner ghost edges is
  // isomorphic to the outer ghost graph.
  std::mt19937 rng(71);
  int nontrivial = 0;
  for (int i = 0; i < 100; ++i) {
    Graph x = random_aggregate(rng, 4, 4);
    GraphMorphism f = random_morphism_from(rng, x, /*fibers_are_components=*/true);
    GraphMorphism g = random_morphism_from(rng, f.target);
    GraphMorphism gf = compose(g, f);
    std::set<Edge> inner;
    for (auto& [a, b] : f.ghost_inv)
      inner.insert({std::min(a, b), std::max(a, b)});
    Graph contracted = contract(ghost(gf), inner);
    CHECK(canonicalize(contracted).bytes == canonicalize(ghost(g)).bytes);
    if (!inner.empty()) ++nontrivial;
  }
  CHECK(nontrivial > 20);
}

TEST_CASE("one-comma decomposition re-tensors to the same morphism class") {
  std::mt19937 rng(83);
  for (int i = 0; i < 60; ++i) {
    Graph x = random_aggregate(rng, 4, 4);
    GraphMorphism f = random_morphism_from(rng, x);
    auto parts = one_comma_decompose(f);
    REQUIRE(parts.size() == f.target.vertices.size());
    size_t sv = 0, ge = 0;
    for (auto& p : parts) {
      CHECK(p.target.vertices.size() == 1);
      sv += p.source.vertices.size();
      ge += p.ghost_inv.size();
    }
    CHECK(sv == f.source.vertices.size());
    CHECK(ge == f.ghost_inv.size());
    GraphMorphism whole = parts[0];
    for (size_t k = 1; k < parts.size(); ++k) whole = tensor(whole, parts[k]);
    CHECK(whole.source.vertices.size() == f.source.vertices.size());
    CHECK(whole.target.vertices.size() == f.target.vertices.size());
    CHECK(canonicalize(ghost(whole)).bytes == canonicalize(ghost(f)).bytes);
  }
}

TEST_CASE("ghost graph class is a composition invariant") {
  // Relabeling the middle object does not change the composite's ghost class.
  std::mt19937 rng(97);
  for (int i = 0; i < 40; ++i) {
    Graph x = random_aggregate(rng, 3, 3);
    GraphMorphism f = random_morphism_from(rng, x);
    GraphMorphism g = random_morphism_from(rng, f.target);
    // conjugate the middle by an automorphism-free relabel: shift all ids
    std::map<VertexId, VertexId> vmap;
    std::map<FlagId, FlagId> fmap;
    for (VertexId v : f.target.vertices) vmap[v] = v + 100;
    for (FlagId fl : f.target.flags) fmap[fl] = fl + 100;
    Graph y2 = relabel(f.target, vmap, fmap);
    GraphMorphism f2 = f;
    f2.target = y2;
    f2.flag_inj.clear();
    for (auto& [tf, sf] : f.flag_inj) f2.flag_inj[fmap.at(tf)] = sf;
    for (auto& [sv, tv] : f.vertex_surj) f2.vertex_surj[sv] = vmap.at(tv);
    validate(f2);
    GraphMorphism g2 = g;
    g2.source = y2;
    g2.flag_inj.clear();
    for (auto& [tf, sf] : g.flag_inj) g2.flag_inj[tf] = fmap.at(sf);
    g2.vertex_surj.clear();
    for (auto& [sv, tv] : g.vertex_surj) g2.vertex_surj[vmap.at(sv)] = tv;
    g2.ghost_inv.clear();
    for (auto& [a, b] : g.ghost_inv) g2.ghost_inv[fmap.at(a)] = fmap.at(b);
    validate(g2);
    CHECK(canonicalize(ghost(compose(g2, f2))).bytes ==
          canonicalize(ghost(compose(g, f))).bytes);
  }
}
