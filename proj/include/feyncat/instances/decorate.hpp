#pragma once

// Decorated instance: generators become pairs (base generator, decoration),
// and every coproduct channel transports the decoration of the source onto
// the quotient and onto each subobject factor. The functor supplies the
// decoration sets and the transport; the construction checks nothing beyond
// shape, so a non-functorial transport surfaces as a coassociativity failure.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "../algebra.hpp"
#include "surjections.hpp"

namespace feyncat {

struct DecorationFunctor {
  std::string name;
  // decorations attachable to a base generator (finite set)
  std::function<std::vector<std::string>(const ClassKey&)> decorations;
  // all consistent transports of a decoration along one base channel
  struct Transport {
    std::string left;
    std::vector<std::string> right;  // one per right factor of the channel
    Coeff mult = 1;
  };
  std::function<std::vector<Transport>(const ClassKey&, const std::string&,
                                       const Channel&)>
      transport;
};

inline ClassKey deco_key(const ClassKey& base, const std::string& dec) {
  return "d:" + dec + "@" + base;
}

inline std::pair<ClassKey, std::string> deco_split(const ClassKey& k) {
  size_t at = k.find('@');
  if (k.rfind("d:", 0) != 0 || at == std::string::npos)
    throw std::invalid_argument("decorate: bad key " + k);
  return {k.substr(at + 1), k.substr(2, at - 2)};
}

inline InstanceSpec decorate_instance(const InstanceSpec& base,
                                      const DecorationFunctor& fun) {
  InstanceSpec s;
  s.name = base.name + "+" + fun.name;
  s.symmetric = base.symmetric;
  s.integer_mode = base.integer_mode;
  s.is_identity = [base](const ClassKey& k) {
    return base.is_identity(deco_split(k).first);
  };
  s.degree_of = [base](const ClassKey& k) {
    return base.degree_of(deco_split(k).first);
  };
  auto channels = [base, fun](const ClassKey& k) {
    auto [bk, dec] = deco_split(k);
    std::vector<Channel> out;
    for (const Channel& ch : base.channels(bk)) {
      for (const auto& tr : fun.transport(bk, dec, ch)) {
        if (tr.right.size() != ch.right.size())
          throw std::invalid_argument("decorate: transport arity mismatch");
        Channel d;
        d.mult = ch.mult * tr.mult;
        for (const ClassKey& l : ch.left) d.left.push_back(deco_key(l, tr.left));
        for (size_t i = 0; i < ch.right.size(); ++i)
          d.right.push_back(deco_key(ch.right[i], tr.right[i]));
        out.push_back(d);
      }
    }
    return out;
  };
  s.channels = channels;
  s.generators = [base, fun](int maxdeg) {
    std::vector<ClassKey> out;
    for (const ClassKey& g : base.generators(maxdeg))
      for (const std::string& dec : fun.decorations(g)) out.push_back(deco_key(g, dec));
    return out;
  };
  // decorated transports are not recoverable from the base word enumerator;
  // the word-level path is the factorwise product here
  s.word_channels = [channels](const Word& w) {
    std::vector<Channel> acc{{Word{}, Word{}, 1}};
    for (const ClassKey& k : w) {
      std::vector<Channel> next;
      for (const Channel& c : acc)
        for (const Channel& ch : channels(k)) {
          Channel d = c;
          d.mult = c.mult * ch.mult;
          d.left.insert(d.left.end(), ch.left.begin(), ch.left.end());
          d.right.insert(d.right.end(), ch.right.begin(), ch.right.end());
          next.push_back(d);
        }
      acc = std::move(next);
    }
    return acc;
  };
  s.id_aut_iso = [base](const ClassKey& k) {
    return base.id_aut_iso ? base.id_aut_iso(deco_split(k).first) : Coeff(1);
  };
  s.show = [base](const ClassKey& k) {
    auto [bk, dec] = deco_split(k);
    return base.show(bk) + "[" + dec + "]";
  };
  s.latex = s.show;
  s.parse = [](const std::string&) -> ClassKey {
    throw std::invalid_argument("decorate: no inline grammar");
  };
  return s;
}

// One-point decoration: decorates every generator with "*" and transports it
// everywhere; the result is the base coalgebra with relabeled keys.
inline DecorationFunctor trivial_decoration() {
  DecorationFunctor f;
  f.name = "triv";
  f.decorations = [](const ClassKey&) { return std::vector<std::string>{"*"}; };
  f.transport = [](const ClassKey&, const std::string&, const Channel& ch) {
    DecorationFunctor::Transport t;
    t.left = "*";
    t.right.assign(ch.right.size(), "*");
    return std::vector<DecorationFunctor::Transport>{t};
  };
  return f;
}

// Angle markings over an alphabet for the ordered surjections: a generator
// of arity n carries an (n+1)-tuple of letters; a channel indexed by the
// composition (n_1..n_k) keeps the letters at the cut points on the quotient
// and the enclosed segments on the factors. Decorating with this functor
// reproduces the sequence instance.
inline DecorationFunctor angle_decoration(const std::vector<std::string>& alphabet) {
  DecorationFunctor f;
  f.name = "angles";
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
  };
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  };
  f.decorations = [alphabet, join](const ClassKey& g) {
    int n = pi_arg(g);
    std::vector<std::string> out;
    std::vector<size_t> idx(static_cast<size_t>(n + 1), 0);
    while (true) {
      std::vector<std::string> entries;
      for (size_t i : idx) entries.push_back(alphabet[i]);
      out.push_back(join(entries));
      size_t i = 0;
      while (i < idx.size() && idx[i] + 1 == alphabet.size()) idx[i++] = 0;
      if (i == idx.size()) break;
      ++idx[i];
    }
    return out;
  };
  f.transport = [join, split](const ClassKey& g, const std::string& dec,
                              const Channel& ch) {
    std::vector<std::string> a = split(dec);
    if (static_cast<int>(a.size()) != pi_arg(g) + 1)
      throw std::invalid_argument("decorate: angle tuple has wrong length");
    DecorationFunctor::Transport t;
    std::vector<std::string> outer{a.front()};
    size_t pos = 0;
    for (const ClassKey& rk : ch.right) {
      size_t len = static_cast<size_t>(pi_arg(rk));
      std::vector<std::string> seg(a.begin() + static_cast<long>(pos),
                                   a.begin() + static_cast<long>(pos + len) + 1);
      t.right.push_back(join(seg));
      pos += len;
      outer.push_back(a[pos]);
    }
    t.left = join(outer);
    return std::vector<DecorationFunctor::Transport>{t};
  };
  return f;
}

}  // namespace feyncat
