#pragma once

// Generic bialgebra/Hopf machinery over the free module on morphism classes:
// words of class keys, deconcatenation-style coproduct driven by a pluggable
// factorization enumerator, Hopf quotient, grading, antipode, and the
// rational-coefficient variants (quotient counit, free-action reduced
// coproduct). All arithmetic is exact.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "rational.hpp"

namespace feyncat {

using ClassKey = std::string;
using Word = std::vector<ClassKey>;  // empty word = unit

struct Elem {
  std::map<Word, Coeff> terms;  // no zero coefficients stored
};

struct Tensor2 {
  std::map<std::pair<Word, Word>, Coeff> terms;
};

struct Tensor3 {
  std::map<std::tuple<Word, Word, Word>, Coeff> terms;
};

// One factorization channel of a generator (or of a whole word for the
// independent word-level enumerators): left cofactor is the quotient side
// (at most one factor; empty = unit), right is the subobject word.
struct Channel {
  Word left;
  Word right;
  Coeff mult = 1;
};

struct InstanceSpec {
  std::string name;
  bool symmetric = false;     // sorted-word (commutative) normal form
  bool integer_mode = true;   // integer coefficients for the core bialgebras
  bool free_action = false;   // middle automorphisms act freely

  std::function<bool(const ClassKey&)> is_identity;
  std::function<int(const ClassKey&)> degree_of;
  // all factorization channels of a generator, including the two trivial ones
  std::function<std::vector<Channel>(const ClassKey&)> channels;
  // distinct generator classes up to the given degree
  std::function<std::vector<ClassKey>(int)> generators;
  // independent word-level enumerator (used to verify the bialgebra law
  // against the factorwise coproduct; must not be derived from `channels`)
  std::function<std::vector<Channel>(const Word&)> word_channels;

  // |Iso(X)|*|Aut(X)| for an identity class (quotient counit data)
  std::function<Coeff(const ClassKey&)> id_aut_iso;
  // grafting operator into the one-comma submodule
  std::function<ClassKey(const Word&)> b_plus;

  std::function<std::string(const ClassKey&)> show;
  std::function<std::string(const ClassKey&)> latex;
  std::function<ClassKey(const std::string&)> parse;  // inline expression grammar
};

// ---- words and linear combinations ----------------------------------------

inline Word normalize_word(const InstanceSpec& inst, Word w) {
  if (inst.symmetric) std::sort(w.begin(), w.end());
  return w;
}

inline Word word_concat(const InstanceSpec& inst, const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normalize_word(inst, w);
}

inline void add_term(Elem& e, const Word& w, const Coeff& c) {
  if (c == 0) return;
  Coeff& v = e.terms[w];
  v += c;
  if (v == 0) e.terms.erase(w);
}

inline void add_term(Tensor2& e, const Word& l, const Word& r, const Coeff& c) {
  if (c == 0) return;
  Coeff& v = e.terms[{l, r}];
  v += c;
  if (v == 0) e.terms.erase({l, r});
}

inline void add_term(Tensor3& e, const Word& a, const Word& b, const Word& c,
                     const Coeff& x) {
  if (x == 0) return;
  Coeff& v = e.terms[{a, b, c}];
  v += x;
  if (v == 0) e.terms.erase({a, b, c});
}

inline Elem elem_unit() {
  Elem e;
  e.terms[Word{}] = 1;
  return e;
}

inline Elem elem_of(const InstanceSpec& inst, Word w, Coeff c = 1) {
  Elem e;
  add_term(e, normalize_word(inst, std::move(w)), c);
  return e;
}

inline Elem elem_add(const Elem& a, const Elem& b) {
  Elem r = a;
  for (auto& [w, c] : b.terms) add_term(r, w, c);
  return r;
}

inline Elem elem_scale(const Elem& a, const Coeff& s) {
  Elem r;
  for (auto& [w, c] : a.terms) add_term(r, w, c * s);
  return r;
}

inline bool elem_equal(const Elem& a, const Elem& b) { return a.terms == b.terms; }

inline void check_integral(const InstanceSpec& inst, const Elem& e) {
  if (!inst.integer_mode) return;
  for (auto& [w, c] : e.terms)
    if (!is_integral(c))
      throw std::invalid_argument("algebra: non-integer coefficient in integer mode");
}

// ---- algebra structure -----------------------------------------------------

inline Elem product(const InstanceSpec& inst, const Elem& a, const Elem& b) {
  Elem r;
  for (auto& [wa, ca] : a.terms)
    for (auto& [wb, cb] : b.terms) add_term(r, word_concat(inst, wa, wb), ca * cb);
  return r;
}

inline int degree(const InstanceSpec& inst, const Word& w) {
  int d = 0;
  for (const ClassKey& k : w) d += inst.degree_of(k);
  return d;
}

inline int degree_max(const InstanceSpec& inst, const Elem& e) {
  int d = 0;
  for (auto& [w, c] : e.terms) d = std::max(d, degree(inst, w));
  return d;
}

// ---- coproduct -------------------------------------------------------------

// Factorwise extension of the per-generator channels to a word (the bialgebra
// rule: the coproduct of a product is the product of the coproducts).
inline Tensor2 coproduct_iso(const InstanceSpec& inst, const Elem& x) {
  Tensor2 out;
  for (auto& [w, c] : x.terms) {
    // running product over the factors of w
    std::map<std::pair<Word, Word>, Coeff> acc{{{Word{}, Word{}}, c}};
    for (const ClassKey& g : w) {
      std::vector<Channel> chs = inst.channels(g);
      std::map<std::pair<Word, Word>, Coeff> next;
      for (auto& [lr, cc] : acc)
        for (const Channel& ch : chs) {
          auto key = std::make_pair(word_concat(inst, lr.first, ch.left),
                                    word_concat(inst, lr.second, ch.right));
          next[key] += cc * ch.mult;
        }
      acc = std::move(next);
    }
    for (auto& [lr, cc] : acc) add_term(out, lr.first, lr.second, cc);
  }
  return out;
}

inline bool word_is_identity(const InstanceSpec& inst, const Word& w) {
  for (const ClassKey& k : w)
    if (!inst.is_identity(k)) return false;
  return true;
}

inline Coeff counit(const InstanceSpec& inst, const Elem& x) {
  Coeff s = 0;
  for (auto& [w, c] : x.terms)
    if (word_is_identity(inst, w)) s += c;
  return s;
}

// Hopf quotient: delete identity factors (they become the unit class).
inline Word project_word(const InstanceSpec& inst, const Word& w) {
  Word r;
  for (const ClassKey& k : w)
    if (!inst.is_identity(k)) r.push_back(k);
  return normalize_word(inst, r);
}

inline Elem hopf_project(const InstanceSpec& inst, const Elem& x) {
  Elem r;
  for (auto& [w, c] : x.terms) add_term(r, project_word(inst, w), c);
  return r;
}

inline Tensor2 hopf_project(const InstanceSpec& inst, const Tensor2& x) {
  Tensor2 r;
  for (auto& [lr, c] : x.terms)
    add_term(r, project_word(inst, lr.first), project_word(inst, lr.second), c);
  return r;
}

// Coproduct on the Hopf quotient: project both legs.
inline Tensor2 coproduct_hopf(const InstanceSpec& inst, const Elem& x) {
  return hopf_project(inst, coproduct_iso(inst, hopf_project(inst, x)));
}

// Reduced coproduct on the Hopf quotient: Delta(x+) - x+ (x) 1 - 1 (x) x+
// where x+ is x minus its scalar part.
inline Tensor2 reduced_coproduct(const InstanceSpec& inst, const Elem& x) {
  Elem xp = hopf_project(inst, x);
  xp.terms.erase(Word{});  // drop the scalar part
  Tensor2 r = coproduct_hopf(inst, xp);
  for (auto& [w, c] : xp.terms) {
    add_term(r, w, Word{}, -c);
    add_term(r, Word{}, w, -c);
  }
  return r;
}

// ---- antipode --------------------------------------------------------------

struct HopfContext {
  std::map<ClassKey, Elem> memo;  // antipode of single projected generators
};

inline void check_connected(const InstanceSpec& inst) {
  for (const ClassKey& g : inst.generators(0))
    if (!inst.is_identity(g) && inst.degree_of(g) == 0)
      throw std::invalid_argument(
          "algebra: antipode needs a connected instance (degree-0 generator " +
          inst.show(g) + " is not an identity)");
}

inline Elem antipode(const InstanceSpec& inst, const Elem& x, HopfContext& ctx);

inline Elem antipode_generator(const InstanceSpec& inst, const ClassKey& g,
                               HopfContext& ctx) {
  auto it = ctx.memo.find(g);
  if (it != ctx.memo.end()) return it->second;
  Elem xg = elem_of(inst, Word{g});
  Tensor2 red = reduced_coproduct(inst, xg);
  Elem s = elem_scale(xg, -1);
  for (auto& [lr, c] : red.terms) {
    Elem sl = antipode(inst, elem_of(inst, lr.first, c), ctx);
    s = elem_add(s, elem_scale(product(inst, sl, elem_of(inst, lr.second)), -1));
  }
  ctx.memo.emplace(g, s);
  return s;
}

// S(1) = 1; antihomomorphism on words; connected-graded recursion on
// generators via the reduced coproduct.
inline Elem antipode(const InstanceSpec& inst, const Elem& x, HopfContext& ctx) {
  check_connected(inst);
  Elem out;
  Elem px = hopf_project(inst, x);
  for (auto& [w, c] : px.terms) {
    Elem acc = elem_unit();
    for (auto rit = w.rbegin(); rit != w.rend(); ++rit)
      acc = product(inst, acc, antipode_generator(inst, *rit, ctx));
    out = elem_add(out, elem_scale(acc, c));
  }
  return out;
}

inline Elem antipode(const InstanceSpec& inst, const Elem& x) {
  HopfContext ctx;
  return antipode(inst, x, ctx);
}

// Takeuchi's formula: S = sum_{k>=0} (-1)^k mu^{k-1} (pi tensor ... pi)
// Delta^{k-1}, with pi = id - unit*counit; used as a cross-check only.
inline Elem antipode_takeuchi(const InstanceSpec& inst, const Elem& x) {
  check_connected(inst);
  Elem px = hopf_project(inst, x);
  Coeff scalar = 0;
  if (auto it = px.terms.find(Word{}); it != px.terms.end()) {
    scalar = it->second;
    px.terms.erase(Word{});
  }
  Elem out;
  add_term(out, Word{}, scalar);  // k = 0 contribution
  // legs: k-fold tensors with every leg in the augmentation ideal
  std::map<std::vector<Word>, Coeff> legs;
  for (auto& [w, c] : px.terms) legs[{w}] = c;
  int sign = -1;
  while (!legs.empty()) {
    for (auto& [ws, c] : legs) {
      Word prod;
      for (const Word& w : ws) prod = word_concat(inst, prod, w);
      add_term(out, prod, sign * Coeff(c));
    }
    // expand the last leg with the reduced coproduct
    std::map<std::vector<Word>, Coeff> next;
    for (auto& [ws, c] : legs) {
      Tensor2 red = reduced_coproduct(inst, elem_of(inst, ws.back()));
      for (auto& [lr, cc] : red.terms) {
        std::vector<Word> nws(ws.begin(), ws.end() - 1);
        nws.push_back(lr.first);
        nws.push_back(lr.second);
        Coeff& v = next[nws];
        v += c * cc;
        if (v == 0) next.erase(nws);
      }
    }
    legs = std::move(next);
    sign = -sign;
  }
  return out;
}

// ---- rational-coefficient variants ----------------------------------------

// Quotient counit over Q: an identity class [id_X] maps to
// 1/(|Iso(X)|*|Aut(X)|), anything else to 0; multiplicative over words.
inline Coeff counit_quot(const InstanceSpec& inst, const Elem& x) {
  if (inst.integer_mode)
    throw std::invalid_argument("algebra: quotient counit needs rational mode");
  if (!inst.id_aut_iso)
    throw std::invalid_argument("algebra: instance lacks Aut/Iso data");
  Coeff s = 0;
  for (auto& [w, c] : x.terms) {
    Coeff f = c;
    bool zero = false;
    for (const ClassKey& k : w) {
      if (!inst.is_identity(k)) {
        zero = true;
        break;
      }
      f /= inst.id_aut_iso(k);
    }
    if (!zero) s += f;
  }
  return s;
}

// Free-action twisted coproduct over Q: with a free middle-automorphism
// action every orbit of decompositions has size |Aut(Z)|, so the twist
// 1/|Aut(Z)| turns the orbit sum into one term per orbit — which is exactly
// what the channel enumerator counts. Guarded by the declaration.
inline Tensor2 coproduct_red(const InstanceSpec& inst, const Elem& x) {
  if (!inst.free_action)
    throw std::invalid_argument("algebra: instance does not declare a free action");
  if (inst.integer_mode)
    throw std::invalid_argument("algebra: reduced coproduct variant needs rational mode");
  return coproduct_iso(inst, x);
}

inline Elem b_plus_apply(const InstanceSpec& inst, const Elem& x) {
  if (!inst.b_plus) throw std::invalid_argument("algebra: no B+ configured");
  Elem r;
  for (auto& [w, c] : x.terms) add_term(r, Word{inst.b_plus(w)}, c);
  return r;
}

// ---- axiom verification ----------------------------------------------------

struct AxiomReport {
  std::vector<std::pair<std::string, bool>> checks;
  std::string counterexample;

  bool all_pass() const {
    for (auto& [n, ok] : checks)
      if (!ok) return false;
    return true;
  }
};

namespace detail {
inline int thread_budget() {
  if (const char* s = std::getenv("FEYNCAT_THREADS")) {
    int n = std::atoi(s);
    if (n >= 1) return n;
  }
  return 1;
}

// deterministic parallel map-reduce over an index range: returns the first
// failure by index, if any
inline std::optional<std::string> parallel_find_failure(
    size_t n, const std::function<std::optional<std::string>(size_t)>& body) {
  int threads = thread_budget();
  if (threads <= 1 || n < 8) {
    for (size_t i = 0; i < n; ++i)
      if (auto f = body(i)) return f;
    return std::nullopt;
  }
  std::vector<std::future<std::pair<size_t, std::string>>> futs;
  size_t chunk = (n + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
  for (int t = 0; t < threads; ++t) {
    size_t lo = static_cast<size_t>(t) * chunk, hi = std::min(n, lo + chunk);
    futs.push_back(std::async(std::launch::async, [lo, hi, &body]() {
      for (size_t i = lo; i < hi; ++i)
        if (auto f = body(i)) return std::make_pair(i, *f);
      return std::make_pair(static_cast<size_t>(-1), std::string{});
    }));
  }
  std::optional<std::pair<size_t, std::string>> best;
  for (auto& fu : futs) {
    auto r = fu.get();
    if (r.first != static_cast<size_t>(-1) && (!best || r.first < best->first)) best = r;
  }
  if (best) return best->second;
  return std::nullopt;
}
}  // namespace detail

struct VerifyOptions {
  int random_pairs = 200;
  unsigned seed = 1;
  int antipode_degree = 3;  // words of at most this degree for the convolution law
};

inline AxiomReport verify_axioms(const InstanceSpec& inst, int max_degree,
                                 const VerifyOptions& opt = {}) {
  AxiomReport rep;
  std::vector<ClassKey> gens = inst.generators(max_degree);
  auto fail = [&](const std::string& name, const std::string& why) {
    rep.checks.push_back({name, false});
    if (rep.counterexample.empty()) rep.counterexample = name + ": " + why;
  };
  auto pass = [&](const std::string& name) { rep.checks.push_back({name, true}); };

  // --- coassociativity ---
  {
    auto body = [&](size_t i) -> std::optional<std::string> {
      const ClassKey& g = gens[i];
      Tensor2 d = coproduct_iso(inst, elem_of(inst, Word{g}));
      Tensor3 lhs, rhs;
      for (auto& [lr, c] : d.terms) {
        Tensor2 dl = coproduct_iso(inst, elem_of(inst, lr.first));
        for (auto& [lr2, c2] : dl.terms)
          add_term(lhs, lr2.first, lr2.second, lr.second, c * c2);
        Tensor2 dr = coproduct_iso(inst, elem_of(inst, lr.second));
        for (auto& [lr2, c2] : dr.terms)
          add_term(rhs, lr.first, lr2.first, lr2.second, c * c2);
      }
      if (!(lhs.terms == rhs.terms))
        return std::optional<std::string>("generator " + inst.show(g));
      return std::nullopt;
    };
    auto f = detail::parallel_find_failure(gens.size(), body);
    if (f)
      fail("coassociativity", *f);
    else
      pass("coassociativity");
  }

  // --- bialgebra law, against the independent word-level enumerator ---
  {
    std::mt19937 rng(opt.seed);
    bool ok = true;
    std::string why;
    if (!inst.word_channels) {
      ok = false;
      why = "instance lacks an independent word-level enumerator";
    }
    std::uniform_int_distribution<size_t> pick(0, gens.empty() ? 0 : gens.size() - 1);
    for (int it = 0; ok && it < opt.random_pairs && !gens.empty(); ++it) {
      ClassKey a = gens[pick(rng)], b = gens[pick(rng)];
      Word ab = normalize_word(inst, Word{a, b});
      Tensor2 direct;
      for (const Channel& ch : inst.word_channels(ab))
        add_term(direct, normalize_word(inst, ch.left), normalize_word(inst, ch.right),
                 ch.mult);
      Tensor2 da = coproduct_iso(inst, elem_of(inst, Word{a}));
      Tensor2 db = coproduct_iso(inst, elem_of(inst, Word{b}));
      Tensor2 prod;
      for (auto& [lra, ca] : da.terms)
        for (auto& [lrb, cb] : db.terms)
          add_term(prod, word_concat(inst, lra.first, lrb.first),
                   word_concat(inst, lra.second, lrb.second), ca * cb);
      if (!(direct.terms == prod.terms)) {
        ok = false;
        why = "pair (" + inst.show(a) + ", " + inst.show(b) + ")";
      }
    }
    if (ok)
      pass("bialgebra");
    else
      fail("bialgebra", why);
  }

  // --- counit laws ---
  {
    bool ok = true;
    std::string why;
    std::mt19937 rng(opt.seed + 1);
    std::uniform_int_distribution<size_t> pick(0, gens.empty() ? 0 : gens.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int it = 0; ok && it < 50 && !gens.empty(); ++it) {
      Elem x;
      for (int t = 0; t < 3; ++t) {
        Word w{gens[pick(rng)]};
        if (t == 2) w.push_back(gens[pick(rng)]);
        add_term(x, normalize_word(inst, w), coeff(rng));
      }
      Tensor2 d = coproduct_iso(inst, x);
      Elem left, right;
      for (auto& [lr, c] : d.terms) {
        add_term(left, lr.second, c * counit(inst, elem_of(inst, lr.first)));
        add_term(right, lr.first, c * counit(inst, elem_of(inst, lr.second)));
      }
      if (!elem_equal(left, x) || !elem_equal(right, x)) {
        ok = false;
        why = "random element, iteration " + std::to_string(it);
      }
    }
    if (ok)
      pass("counit");
    else
      fail("counit", why);
  }

  // --- group-like identities ---
  {
    bool ok = true;
    std::string why;
    for (const ClassKey& g : gens) {
      if (!inst.is_identity(g)) continue;
      Tensor2 d = coproduct_iso(inst, elem_of(inst, Word{g}));
      Tensor2 expect;
      add_term(expect, Word{g}, Word{g}, 1);
      if (!(d.terms == expect.terms)) {
        ok = false;
        why = "identity " + inst.show(g);
        break;
      }
    }
    if (ok)
      pass("group-like identities");
    else
      fail("group-like identities", why);
  }

  // --- degree additivity across channels ---
  {
    bool ok = true;
    std::string why;
    for (const ClassKey& g : gens) {
      int dg = inst.degree_of(g);
      for (const Channel& ch : inst.channels(g)) {
        int d = degree(inst, ch.left) + degree(inst, ch.right);
        if (d != dg) {
          ok = false;
          why = "generator " + inst.show(g) + " splits degree " +
                std::to_string(dg) + " as " + std::to_string(d);
          break;
        }
      }
      if (!ok) break;
    }
    if (ok)
      pass("degree additivity");
    else
      fail("degree additivity", why);
  }

  // --- antipode convolution identity on the Hopf quotient ---
  {
    bool ok = true;
    std::string why;
    HopfContext ctx;
    try {
      for (const ClassKey& g : gens) {
        if (inst.degree_of(g) > opt.antipode_degree) continue;
        Elem x = hopf_project(inst, elem_of(inst, Word{g}));
        Tensor2 d = coproduct_hopf(inst, x);
        Elem conv_l, conv_r;
        for (auto& [lr, c] : d.terms) {
          Elem sl = antipode(inst, elem_of(inst, lr.first), ctx);
          conv_l = elem_add(conv_l,
                            elem_scale(product(inst, sl, elem_of(inst, lr.second)), c));
          Elem sr = antipode(inst, elem_of(inst, lr.second), ctx);
          conv_r = elem_add(conv_r,
                            elem_scale(product(inst, elem_of(inst, lr.first), sr), c));
        }
        Elem expect = elem_scale(elem_unit(), counit(inst, x));
        if (!elem_equal(conv_l, expect) || !elem_equal(conv_r, expect)) {
          ok = false;
          why = "generator " + inst.show(g);
          break;
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    if (ok)
      pass("antipode");
    else
      fail("antipode", why);
  }

  return rep;
}

}  // namespace feyncat
