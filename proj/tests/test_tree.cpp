#include <catch2/catch_amalgamated.hpp>

#include <feyncat/canonical.hpp>
#include <feyncat/graph.hpp>
#include <feyncat/tree.hpp>

using namespace feyncat;

namespace {
std::string key(const Graph& g) { return canonicalize(g).bytes; }

// the unique per-vertex tail of a sharp'd tree at v (excluding the root flag)
FlagId vertex_tail(const Graph& sharp, VertexId v) {
  FlagId rf = root_flag(sharp);
  for (FlagId f : flags_at(sharp, v))
    if (is_tail(sharp, f) && f != rf) return f;
  throw std::runtime_error("no vertex tail");
}
}  // namespace

TEST_CASE("sharp and flat conventions") {
  CHECK(tree_sharp(tree_empty()).line);
  CHECK(tree_is_empty(tree_flat(tree_line())));
  CHECK_THROWS_AS(tree_sharp(tree_line()), std::invalid_argument);

  Graph one = single_vertex_tree();
  RootedTree s = tree_sharp(rooted(one));
  REQUIRE_FALSE(s.line);
  CHECK(s.g.vertices.size() == 1);
  CHECK(tails(s.g).size() == 2);  // one per vertex + the root flag
  CHECK(s.g.deco.direction.at(root_flag(s.g)) == FlagDir::out);
  CHECK_THROWS_AS(tree_sharp(s), std::invalid_argument);  // already has tails

  SECTION("flat after sharp is the identity on tail-free trees") {
    for (const Graph& t : all_rooted_trees(6, 0)) {
      RootedTree r = tree_sharp_flat(tree_sharp_flat(rooted(t), SharpFlat::sharp),
                                     SharpFlat::flat);
      REQUIRE_FALSE(r.line);
      CHECK(key(r.g) == key(t));
    }
  }
}

TEST_CASE("plant and unplant") {
  Graph one = single_vertex_tree();
  Graph p = tree_plant(one);
  CHECK(p.vertices.size() == 2);
  CHECK(edges(p).size() == 1);
  CHECK(flags_at(p, *p.deco.root).size() == 1);

  CHECK_THROWS_AS(tree_unplant(one), std::invalid_argument);  // valence-0 root
  Graph star = make_graph(3, {{0, 1}, {0, 2}});
  star.deco.root = 0;
  CHECK_THROWS_AS(tree_unplant(star), std::invalid_argument);  // valence-2 root

  for (const Graph& t : all_rooted_trees(6, 0))
    CHECK(key(tree_plant_op(tree_plant_op(t, PlantDir::plant), PlantDir::unplant)) ==
          key(t));
}

TEST_CASE("grafting identities") {
  auto ts = all_rooted_trees(4, 0);
  auto ss = all_rooted_trees(3, 0);
  int checked = 0;
  for (const Graph& t : ts)
    for (const Graph& s : ss)
      for (VertexId v : t.vertices) {
        Graph plus = tree_graft_edge(t, v, s);
        // joining by a new edge equals identifying with the planted root
        CHECK(key(plus) == key(tree_graft_identify(t, v, tree_plant(s))));
        // ...and equals plant-graft-unplant
        CHECK(key(plus) ==
              key(tree_unplant(tree_graft_identify(tree_plant(t), v, tree_plant(s)))));
        // ...and matches tail-grafting of the sharp'd trees after flattening
        Graph tsharp = tree_sharp(rooted(t)).g;
        Graph ssharp = tree_sharp(rooted(s)).g;
        Graph tg = tree_graft_tail(tsharp, vertex_tail(tsharp, v), ssharp);
        CHECK(key(trun(tg)) == key(plus));
        ++checked;
      }
  CHECK(checked > 50);
}

TEST_CASE("ladders and cut subsets") {
  for (int n = 1; n <= 8; ++n) {
    Graph l = ladder(n, true);
    CHECK(l.vertices.size() == static_cast<size_t>(n));
    CHECK(tails(l).size() == 1);
    CHECK(down_closed_subsets(l).size() == static_cast<size_t>(n + 1));
    CHECK(down_closed_subsets(ladder(n, false)).size() == static_cast<size_t>(n + 1));
  }
  // root with k children: the empty set, or root plus any child subset
  for (int k = 1; k <= 4; ++k) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= k; ++i) es.push_back({0, i});
    Graph star = make_graph(k + 1, es);
    star.deco.root = 0;
    CHECK(down_closed_subsets(star).size() == static_cast<size_t>(1 + (1 << k)));
  }
}

TEST_CASE("tree enumeration") {
  CHECK(rooted_trees_raw(3, 0).size() == 2);
  CHECK(rooted_trees_raw(4, 0).size() == 6);
  CHECK(all_rooted_trees(3, 0).size() == 4);  // 1 + 1 + {ladder3, cherry}
  // every enumerated tree really is a rooted tree
  for (const Graph& t : all_rooted_trees(4, 2)) CHECK(is_rooted_tree(t));
}

TEST_CASE("planar structures") {
  // root with two children, one of which has a grandchild: two planar classes
  Graph t = make_graph(4, {{0, 1}, {0, 2}, {1, 3}});
  t.deco.root = 0;
  CHECK(all_planar_orders(t).size() == 2);
  // three identical children: all linear orders at the root coincide
  Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  star.deco.root = 0;
  CHECK(all_planar_orders(star).size() == 1);
}

TEST_CASE("remove_tails") {
  Graph g = make_graph(2, {{0, 1}}, {0, 1});
  CHECK(remove_tails(g, {2}).flags.size() == 3);
  CHECK_THROWS_AS(remove_tails(g, {0}), std::invalid_argument);  // an edge flag
}
