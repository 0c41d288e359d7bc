#include <catch2/catch_amalgamated.hpp>

#include <feyncat/algebra.hpp>
#include <feyncat/instances/ck_tree.hpp>
#include <feyncat/tree.hpp>

using namespace feyncat;

namespace {

// Independent oracle for the tail-free coproduct: enumerate edge subsets,
// keep those where no severed edge sits below another (the classical
// admissible cuts), take root part (x) pruned subtrees. Trees are rebuilt
// from scratch instead of reusing the instance's restriction helper.
Graph induce_fresh(const Graph& g, const std::set<VertexId>& keep, VertexId root) {
  std::map<VertexId, int> idx;
  for (VertexId v : g.vertices)
    if (keep.count(v)) idx[v] = static_cast<int>(idx.size());
  std::vector<std::pair<int, int>> es;
  for (auto& [f, p] : edges(g)) {
    VertexId a = g.boundary.at(f), b = g.boundary.at(p);
    if (keep.count(a) && keep.count(b)) es.push_back({idx.at(a), idx.at(b)});
  }
  Graph r = make_graph(static_cast<int>(idx.size()), es, {});
  r.deco.root = static_cast<VertexId>(idx.at(root));
  validate(r);
  return r;
}

Tensor2 cut_oracle(const InstanceSpec& inst, const Graph& t) {
  auto parent = parent_map(t);
  std::vector<VertexId> child;  // lower endpoint of each edge
  for (auto& [f, p] : edges(t)) {
    VertexId a = t.boundary.at(f), b = t.boundary.at(p);
    child.push_back(parent.count(a) && parent.at(a) == b ? a : b);
  }
  auto ancestor = [&](VertexId a, VertexId b) {  // is a a strict ancestor of b?
    VertexId v = b;
    while (parent.count(v)) {
      v = parent.at(v);
      if (v == a) return true;
    }
    return false;
  };
  size_t ne = child.size();
  Tensor2 out;
  add_term(out, Word{}, {ck_tree_key(t)}, 1);  // the no-root-part channel
  for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
    std::vector<VertexId> cs;
    for (size_t i = 0; i < ne; ++i)
      if (mask & (1u << i)) cs.push_back(child[i]);
    bool ok = true;
    for (VertexId a : cs)
      for (VertexId b : cs)
        if (a != b && ancestor(a, b)) ok = false;
    if (!ok) continue;
    // root part: everything not below a severed edge
    std::set<VertexId> lower(t.vertices.begin(), t.vertices.end());
    for (VertexId c : cs)
      for (VertexId v : t.vertices)
        if (v == c || ancestor(c, v)) lower.erase(v);
    Word left{ck_tree_key(induce_fresh(t, lower, *t.deco.root))};
    Word right;
    for (VertexId c : cs) {
      std::set<VertexId> sub{c};
      for (VertexId v : t.vertices)
        if (ancestor(c, v)) sub.insert(v);
      right.push_back(ck_tree_key(induce_fresh(t, sub, c)));
    }
    add_term(out, left, normalize_word(inst, right), 1);
  }
  return out;
}

}  // namespace

TEST_CASE("ladder coproducts") {
  InstanceSpec tailed = ck_tree_instance(false, false);
  InstanceSpec amp = ck_tree_instance(false, true);
  SECTION("n+1 terms, tailed and amputated") {
    for (int n = 1; n <= 8; ++n) {
      ClassKey lt = tailed.parse("ladder(" + std::to_string(n) + ")");
      ClassKey la = amp.parse("ladder(" + std::to_string(n) + ")");
      CHECK(coproduct_iso(tailed, elem_of(tailed, Word{lt})).terms.size() ==
            static_cast<size_t>(n + 1));
      CHECK(coproduct_iso(amp, elem_of(amp, Word{la})).terms.size() ==
            static_cast<size_t>(n + 1));
    }
  }
  SECTION("tailed ladders split into pairs of ladders") {
    auto lad = [&](int n) { return tailed.parse("ladder(" + std::to_string(n) + ")"); };
    int n = 5;
    Tensor2 d = coproduct_iso(tailed, elem_of(tailed, Word{lad(n)}));
    Tensor2 expect;
    for (int a = 0; a <= n; ++a) add_term(expect, {lad(a)}, {lad(n - a)}, 1);
    CHECK(d.terms == expect.terms);
  }
  SECTION("degrees") {
    CHECK(tailed.degree_of(tailed.parse("ladder(0)")) == 0);
    CHECK(tailed.degree_of(tailed.parse("ladder(5)")) == 5);
    CHECK(tailed.is_identity(tailed.parse("|")));
    CHECK(amp.degree_of(amp.parse("B()")) == 1);
  }
}

TEST_CASE("amputated coproduct matches the admissible-cut oracle") {
  InstanceSpec amp = ck_tree_instance(false, true);
  int checked = 0;
  for (const Graph& t : all_rooted_trees(5, 0)) {
    Tensor2 d = coproduct_iso(amp, elem_of(amp, Word{ck_tree_key(t)}));
    Tensor2 oracle = cut_oracle(amp, t);
    CAPTURE(amp.show(ck_tree_key(t)));
    REQUIRE(d.terms == oracle.terms);
    ++checked;
  }
  CHECK(checked >= 15);
}

TEST_CASE("corolla coproduct") {
  InstanceSpec amp = ck_tree_instance(false, true);
  ClassKey dot = amp.parse("B()");
  ClassKey l2 = amp.parse("ladder(2)");
  ClassKey cherry = amp.parse("B(B(),B())");
  Tensor2 d = coproduct_iso(amp, elem_of(amp, Word{cherry}));
  Tensor2 expect;
  add_term(expect, Word{}, {cherry}, 1);
  add_term(expect, {cherry}, Word{}, 1);
  add_term(expect, {l2}, {dot}, 2);
  add_term(expect, {dot}, normalize_word(amp, {dot, dot}), 1);
  CHECK(d.terms == expect.terms);
}

TEST_CASE("planar versus symmetric classes") {
  InstanceSpec pl = ck_tree_instance(true, true);
  InstanceSpec sym = ck_tree_instance(false, true);
  // the two 3-leaf combs: heavy branch first or last
  std::string a = "B(B(B(),B()),B())", b = "B(B(),B(B(),B()))";
  CHECK(pl.parse(a) != pl.parse(b));
  CHECK(sym.parse(a) == sym.parse(b));
}

TEST_CASE("planar right factors keep traversal order") {
  InstanceSpec pl = ck_tree_instance(true, true);
  ClassKey chain = pl.parse("B(B())"), dot = pl.parse("B()");
  ClassKey t = pl.parse("B(B(B()),B())");
  ClassKey root_only = pl.parse("B()");
  Tensor2 d = coproduct_iso(pl, elem_of(pl, Word{t}));
  CHECK(d.terms.count({{root_only}, {chain, dot}}) == 1);
  CHECK(d.terms.count({{root_only}, {dot, chain}}) == 0);
  // the mirrored tree cuts in the mirrored order
  ClassKey tm = pl.parse("B(B(),B(B()))");
  Tensor2 dm = coproduct_iso(pl, elem_of(pl, Word{tm}));
  CHECK(dm.terms.count({{root_only}, {dot, chain}}) == 1);
  CHECK(dm.terms.count({{root_only}, {chain, dot}}) == 0);
}

TEST_CASE("grafting operator cocycle") {
  auto check_mode = [](bool planar, bool amputated) {
    InstanceSpec s = ck_tree_instance(planar, amputated);
    std::mt19937 rng(13);
    std::vector<ClassKey> gens = s.generators(3);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> len(0, 2);
    Word unit;
    if (!amputated) unit.push_back(ck_tree_line_key());
    for (int it = 0; it < 25; ++it) {
      Word w;
      int m = len(rng);
      for (int i = 0; i < m; ++i) w.push_back(gens[pick(rng)]);
      w = normalize_word(s, w);
      ClassKey bw = s.b_plus(w);
      Tensor2 lhs = coproduct_iso(s, elem_of(s, Word{bw}));
      Tensor2 rhs;
      add_term(rhs, unit, {bw}, 1);
      for (auto& [lr, c] : coproduct_iso(s, elem_of(s, w)).terms)
        add_term(rhs, Word{s.b_plus(lr.first)}, lr.second, c);
      CAPTURE(planar, amputated, it);
      REQUIRE(lhs.terms == rhs.terms);
    }
  };
  check_mode(false, false);
  check_mode(false, true);
  check_mode(true, false);
  check_mode(true, true);
}

TEST_CASE("amputation map") {
  InstanceSpec tailed = ck_tree_instance(false, false);
  InstanceSpec amp = ck_tree_instance(false, true);
  SECTION("single classes") {
    ClassKey l2t = tailed.parse("ladder(2)");
    ClassKey l2a = amp.parse("ladder(2)");
    Elem m = ck_tree_amputate(amp, elem_of(tailed, Word{l2t}));
    CHECK(elem_equal(m, elem_of(amp, Word{l2a})));
    // the line maps to the unit
    CHECK(elem_equal(ck_tree_amputate(amp, elem_of(tailed, Word{tailed.parse("|")})),
                     elem_unit()));
    // a single vertex with tails maps to the bare vertex
    CHECK(elem_equal(ck_tree_amputate(amp, elem_of(tailed, Word{tailed.parse("B(|,|)")})),
                     elem_of(amp, Word{amp.parse("B()")})));
  }
  SECTION("commutes with the product") {
    std::mt19937 rng(29);
    std::vector<ClassKey> gens = tailed.generators(4);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    for (int it = 0; it < 40; ++it) {
      Elem x = elem_of(tailed, Word{gens[pick(rng)]}, 2);
      add_term(x, normalize_word(tailed, {gens[pick(rng)], gens[pick(rng)]}), -1);
      Elem y = elem_of(tailed, Word{gens[pick(rng)]});
      Elem lhs = ck_tree_amputate(amp, product(tailed, x, y));
      Elem rhs = product(amp, ck_tree_amputate(amp, x), ck_tree_amputate(amp, y));
      REQUIRE(elem_equal(lhs, rhs));
    }
  }
}

TEST_CASE("tree axioms") {
  for (bool planar : {false, true})
    for (bool amputated : {false, true}) {
      InstanceSpec s = ck_tree_instance(planar, amputated);
      AxiomReport rep = verify_axioms(s, 4, {40, 1, 3});
      CAPTURE(s.name, rep.counterexample);
      CHECK(rep.all_pass());
    }
}

TEST_CASE("tree parser errors") {
  InstanceSpec amp = ck_tree_instance(false, true);
  CHECK_THROWS_AS(amp.parse("|"), std::invalid_argument);
  CHECK_THROWS_AS(amp.parse("ladder(0)"), std::invalid_argument);
  CHECK_THROWS_AS(amp.parse("B(B()"), std::invalid_argument);
  CHECK_THROWS_AS(amp.parse("B() junk"), std::invalid_argument);
  InstanceSpec tailed = ck_tree_instance(false, false);
  CHECK(tailed.show(tailed.parse("B(|)")) == "*(|)");
  CHECK(tailed.show(tailed.parse("|")) == "|");
}
