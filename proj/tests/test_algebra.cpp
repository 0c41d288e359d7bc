#include <catch2/catch_amalgamated.hpp>

#include <feyncat/algebra.hpp>

using namespace feyncat;

namespace {

// Toy instance: generators x:n (n >= 0), x:0 the identity, degree n,
// Delta(x:n) = sum_{i+j=n} x:i (x) x:j. Deconcatenation-style, coassociative.
int arg_of(const ClassKey& k) { return std::stoi(k.substr(2)); }
ClassKey xk(int n) { return "x:" + std::to_string(n); }

InstanceSpec toy_instance(bool symmetric = false) {
  InstanceSpec s;
  s.name = "toy";
  s.symmetric = symmetric;
  s.is_identity = [](const ClassKey& k) { return arg_of(k) == 0; };
  s.degree_of = [](const ClassKey& k) { return arg_of(k); };
  s.channels = [](const ClassKey& k) {
    int n = arg_of(k);
    std::vector<Channel> out;
    for (int i = 0; i <= n; ++i) out.push_back({Word{xk(i)}, Word{xk(n - i)}, 1});
    return out;
  };
  s.generators = [](int maxdeg) {
    std::vector<ClassKey> out;
    for (int n = 0; n <= maxdeg; ++n) out.push_back(xk(n));
    return out;
  };
  // independent word-level enumeration: split every factor separately
  s.word_channels = [symmetric](const Word& w) {
    std::vector<Channel> out;
    std::vector<Channel> acc{{Word{}, Word{}, 1}};
    for (const ClassKey& k : w) {
      int n = arg_of(k);
      std::vector<Channel> next;
      for (const Channel& c : acc)
        for (int i = 0; i <= n; ++i) {
          Channel d = c;
          d.left.push_back(xk(i));
          d.right.push_back(xk(n - i));
          next.push_back(d);
        }
      acc = std::move(next);
    }
    for (Channel& c : acc) {
      if (symmetric) {
        std::sort(c.left.begin(), c.left.end());
        std::sort(c.right.begin(), c.right.end());
      }
      out.push_back(c);
    }
    return out;
  };
  s.show = [](const ClassKey& k) { return k; };
  return s;
}

}  // namespace

TEST_CASE("product") {
  InstanceSpec s = toy_instance();
  Elem a = elem_of(s, Word{xk(2)});
  CHECK(elem_equal(product(s, a, elem_unit()), a));
  CHECK(elem_equal(product(s, elem_unit(), a), a));
  Elem b = elem_of(s, Word{xk(3)});
  CHECK_FALSE(elem_equal(product(s, a, b), product(s, b, a)));  // non-sigma order
  InstanceSpec sym = toy_instance(true);
  CHECK(elem_equal(product(sym, a, b), product(sym, b, a)));
}

TEST_CASE("coproduct and counit") {
  InstanceSpec s = toy_instance();
  Tensor2 d = coproduct_iso(s, elem_of(s, Word{xk(4)}));
  CHECK(d.terms.size() == 5);
  // unit is group-like
  Tensor2 du = coproduct_iso(s, elem_of(s, Word{xk(0)}));
  REQUIRE(du.terms.size() == 1);
  CHECK(du.terms.begin()->first == std::make_pair(Word{xk(0)}, Word{xk(0)}));
  CHECK(counit(s, elem_of(s, Word{xk(0), xk(0)})) == 1);
  CHECK(counit(s, elem_of(s, Word{xk(2)})) == 0);
  CHECK(counit(s, elem_unit()) == 1);
}

TEST_CASE("hopf projection and reduced coproduct") {
  InstanceSpec s = toy_instance();
  Elem x = elem_of(s, Word{xk(0), xk(2), xk(0)});
  CHECK(hopf_project(s, x).terms.count(Word{xk(2)}) == 1);
  Tensor2 red = reduced_coproduct(s, elem_of(s, Word{xk(2)}));
  REQUIRE(red.terms.size() == 1);
  CHECK(red.terms.at({Word{xk(1)}, Word{xk(1)}}) == 1);
  CHECK(reduced_coproduct(s, elem_of(s, Word{xk(1)})).terms.empty());  // primitive
  CHECK(reduced_coproduct(s, elem_unit()).terms.empty());              // scalar
}

TEST_CASE("antipode") {
  InstanceSpec s = toy_instance();
  HopfContext ctx;
  CHECK(elem_equal(antipode(s, elem_unit(), ctx), elem_unit()));
  Elem s1 = antipode(s, elem_of(s, Word{xk(1)}), ctx);
  CHECK(elem_equal(s1, elem_of(s, Word{xk(1)}, -1)));
  Elem s2 = antipode(s, elem_of(s, Word{xk(2)}), ctx);
  Elem expect = elem_add(elem_of(s, Word{xk(2)}, -1), elem_of(s, Word{xk(1), xk(1)}));
  CHECK(elem_equal(s2, expect));

  SECTION("Takeuchi cross-check") {
    for (int n = 0; n <= 4; ++n) {
      Elem x = elem_of(s, Word{xk(n)});
      CHECK(elem_equal(antipode(s, x, ctx), antipode_takeuchi(s, x)));
    }
    Elem w = elem_of(s, Word{xk(2), xk(1)});
    CHECK(elem_equal(antipode(s, w, ctx), antipode_takeuchi(s, w)));
  }

  SECTION("connectedness guard") {
    InstanceSpec bad = toy_instance();
    bad.generators = [](int) { return std::vector<ClassKey>{xk(0), "y:0"}; };
    bad.is_identity = [](const ClassKey& k) { return k == xk(0); };
    bad.degree_of = [](const ClassKey&) { return 0; };
    CHECK_THROWS_AS(antipode(bad, elem_of(bad, Word{"y:0"})), std::invalid_argument);
  }
}

TEST_CASE("rational variants") {
  InstanceSpec s = toy_instance();
  CHECK_THROWS_AS(counit_quot(s, elem_unit()), std::invalid_argument);  // integer mode
  InstanceSpec q = toy_instance();
  q.integer_mode = false;
  q.id_aut_iso = [](const ClassKey&) { return Coeff(2); };
  CHECK(counit_quot(q, elem_of(q, Word{xk(0)})) == Coeff(1) / 2);
  CHECK(counit_quot(q, elem_of(q, Word{xk(0), xk(0)})) == Coeff(1) / 4);
  CHECK(counit_quot(q, elem_of(q, Word{xk(3)})) == 0);
  CHECK(counit_quot(q, elem_unit()) == 1);

  CHECK_THROWS_AS(coproduct_red(q, elem_unit()), std::invalid_argument);  // not free
  q.free_action = true;
  CHECK(coproduct_red(q, elem_of(q, Word{xk(2)})).terms ==
        coproduct_iso(q, elem_of(q, Word{xk(2)})).terms);
}

TEST_CASE("verify_axioms") {
  InstanceSpec s = toy_instance();
  AxiomReport rep = verify_axioms(s, 6);
  for (auto& [name, ok] : rep.checks) {
    CAPTURE(name, rep.counterexample);
    CHECK(ok);
  }
  CHECK(rep.all_pass());

  SECTION("symmetric mode also passes") {
    CHECK(verify_axioms(toy_instance(true), 6).all_pass());
  }

  SECTION("negative control: a dropped channel is detected") {
    InstanceSpec bad = toy_instance();
    auto orig = bad.channels;
    bad.channels = [orig](const ClassKey& k) {
      std::vector<Channel> chs = orig(k);
      if (arg_of(k) == 3) chs.erase(chs.begin() + 1);  // drop one interior channel
      return chs;
    };
    AxiomReport rep2 = verify_axioms(bad, 6);
    bool bialgebra_ok = true;
    for (auto& [name, ok] : rep2.checks)
      if (name == "bialgebra") bialgebra_ok = ok;
    CHECK_FALSE(bialgebra_ok);
    CHECK_FALSE(rep2.all_pass());
    CHECK_FALSE(rep2.counterexample.empty());
  }

  SECTION("deterministic across thread counts") {
    AxiomReport a = verify_axioms(s, 6);
    setenv("FEYNCAT_THREADS", "4", 1);
    AxiomReport b = verify_axioms(s, 6);
    unsetenv("FEYNCAT_THREADS");
    CHECK(a.checks == b.checks);
  }
}

TEST_CASE("degree") {
  InstanceSpec s = toy_instance();
  CHECK(degree(s, Word{}) == 0);
  CHECK(degree(s, Word{xk(2), xk(3)}) == 5);
}
