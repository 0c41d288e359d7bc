#pragma once

// Nerve instance: a finite category (objects, morphisms, composition table)
// induces a colored operad whose colors are the morphisms and whose n-ary
// operations are composable n-chains with their composite as output color.
// Generators here are the chains; 1-chains are the identities. A channel
// groups a chain into consecutive blocks: the quotient is the chain of block
// composites, the subobject word collects the blocks. For a complete
// groupoid the chains are equivalent to words of objects.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "../algebra.hpp"
#include "combinatorics.hpp"

namespace feyncat {

struct NerveCategory {
  std::vector<std::string> objects;
  std::map<std::string, std::pair<std::string, std::string>> morphisms;  // name -> (src,tgt)
  std::map<std::string, std::string> identity;  // object -> identity morphism
  std::map<std::pair<std::string, std::string>, std::string> comp;  // (f,g) -> g*f
};

inline void validate(const NerveCategory& c) {
  auto fail = [](const std::string& m) {
    throw std::invalid_argument("nerve: " + m);
  };
  for (auto& [name, st] : c.morphisms) {
    auto in = [&](const std::string& o) {
      return std::find(c.objects.begin(), c.objects.end(), o) != c.objects.end();
    };
    if (!in(st.first) || !in(st.second)) fail("morphism with unknown endpoint: " + name);
  }
  for (const std::string& o : c.objects) {
    auto it = c.identity.find(o);
    if (it == c.identity.end() || !c.morphisms.count(it->second))
      fail("missing identity for object " + o);
    auto& st = c.morphisms.at(it->second);
    if (st.first != o || st.second != o) fail("identity of " + o + " has wrong endpoints");
  }
  // totality on composable pairs, endpoints, unit laws
  for (auto& [f, fst] : c.morphisms)
    for (auto& [g, gst] : c.morphisms) {
      if (fst.second != gst.first) continue;
      auto it = c.comp.find({f, g});
      if (it == c.comp.end()) fail("missing composite " + g + " after " + f);
      auto& hst = c.morphisms.at(it->second);
      if (hst.first != fst.first || hst.second != gst.second)
        fail("composite endpoints wrong for " + g + " after " + f);
    }
  for (auto& [f, fst] : c.morphisms) {
    if (c.comp.at({c.identity.at(fst.first), f}) != f) fail("left unit law fails at " + f);
    if (c.comp.at({f, c.identity.at(fst.second)}) != f)
      fail("right unit law fails at " + f);
  }
  // associativity over all composable triples
  for (auto& [f, fst] : c.morphisms)
    for (auto& [g, gst] : c.morphisms) {
      if (fst.second != gst.first) continue;
      for (auto& [h, hst] : c.morphisms) {
        if (gst.second != hst.first) continue;
        if (c.comp.at({c.comp.at({f, g}), h}) != c.comp.at({f, c.comp.at({g, h})}))
          fail("associativity fails on " + f + "," + g + "," + h);
      }
    }
}

inline NerveCategory nerve_from_json(const nlohmann::json& j) {
  NerveCategory c;
  const nlohmann::json objs = j.value("objects", nlohmann::json::array());
  for (auto& o : objs) c.objects.push_back(o.get<std::string>());
  const nlohmann::json mors = j.value("morphisms", nlohmann::json::array());
  for (auto& m : mors)
    c.morphisms[m.at("name").get<std::string>()] = {m.at("src").get<std::string>(),
                                                    m.at("tgt").get<std::string>()};
  const nlohmann::json ids = j.value("identities", nlohmann::json::object());
  for (auto& [o, m] : ids.items()) c.identity[o] = m.get<std::string>();
  // composition: list of {first, second, result} with result = second * first
  const nlohmann::json comps = j.value("composition", nlohmann::json::array());
  for (auto& e : comps)
    c.comp[{e.at("first").get<std::string>(), e.at("second").get<std::string>()}] =
        e.at("result").get<std::string>();
  validate(c);
  return c;
}

// complete groupoid: one morphism between any ordered pair of objects
inline NerveCategory complete_groupoid(const std::vector<std::string>& objects) {
  NerveCategory c;
  c.objects = objects;
  auto name = [](const std::string& a, const std::string& b) { return a + ">" + b; };
  for (const auto& a : objects)
    for (const auto& b : objects) c.morphisms[name(a, b)] = {a, b};
  for (const auto& a : objects) c.identity[a] = name(a, a);
  for (const auto& a : objects)
    for (const auto& b : objects)
      for (const auto& d : objects) c.comp[{name(a, b), name(b, d)}] = name(a, d);
  validate(c);
  return c;
}

inline ClassKey chain_key(const std::vector<std::string>& chain) {
  std::string k = "ch:";
  for (size_t i = 0; i < chain.size(); ++i) {
    if (i) k += "|";
    k += chain[i];
  }
  return k;
}

inline std::vector<std::string> chain_of(const ClassKey& k) {
  std::vector<std::string> out;
  std::stringstream ss(k.substr(3));
  std::string item;
  while (std::getline(ss, item, '|')) out.push_back(item);
  return out;
}

inline std::string chain_composite(const NerveCategory& c,
                                   const std::vector<std::string>& chain) {
  std::string acc = chain.front();
  for (size_t i = 1; i < chain.size(); ++i) acc = c.comp.at({acc, chain[i]});
  return acc;
}

// substitute the chains ws[i] for the i-th entries of the outer chain; each
// ws[i] must compose to outer[i]
inline ClassKey chain_substitute(const NerveCategory& c,
                                 const std::vector<std::string>& outer,
                                 const std::vector<std::vector<std::string>>& ws) {
  if (outer.size() != ws.size())
    throw std::invalid_argument("nerve: substitution arity mismatch");
  std::vector<std::string> out;
  for (size_t i = 0; i < outer.size(); ++i) {
    if (chain_composite(c, ws[i]) != outer[i])
      throw std::invalid_argument("nerve: substituted chain has wrong composite");
    out.insert(out.end(), ws[i].begin(), ws[i].end());
  }
  return chain_key(out);
}

inline InstanceSpec nerve_instance(const NerveCategory& cat) {
  validate(cat);
  InstanceSpec s;
  s.name = "nerve";
  s.symmetric = false;
  s.is_identity = [](const ClassKey& k) { return chain_of(k).size() == 1; };
  s.degree_of = [](const ClassKey& k) {
    return static_cast<int>(chain_of(k).size()) - 1;
  };
  s.channels = [cat](const ClassKey& k) {
    std::vector<std::string> chain = chain_of(k);
    int n = static_cast<int>(chain.size());
    std::vector<Channel> out;
    for (const auto& parts : comb::compositions(n)) {
      Channel ch;
      std::vector<std::string> outer;
      int pos = 0;
      for (int p : parts) {
        std::vector<std::string> block(chain.begin() + pos, chain.begin() + pos + p);
        outer.push_back(chain_composite(cat, block));
        ch.right.push_back(chain_key(block));
        pos += p;
      }
      ch.left = {chain_key(outer)};
      out.push_back(ch);
    }
    return out;
  };
  s.generators = [cat](int maxdeg) {
    std::vector<ClassKey> out;
    std::vector<std::vector<std::string>> frontier;
    for (auto& [m, st] : cat.morphisms) frontier.push_back({m});
    for (int len = 1; len <= maxdeg + 1; ++len) {
      for (auto& ch : frontier) out.push_back(chain_key(ch));
      std::vector<std::vector<std::string>> next;
      for (auto& ch : frontier) {
        const std::string& tgt = cat.morphisms.at(ch.back()).second;
        for (auto& [m, st] : cat.morphisms)
          if (st.first == tgt) {
            auto e = ch;
            e.push_back(m);
            next.push_back(e);
          }
      }
      frontier = std::move(next);
    }
    return out;
  };
  s.word_channels = [cat](const Word& w) {
    std::vector<Channel> acc{{Word{}, Word{}, 1}};
    for (const ClassKey& k : w) {
      std::vector<std::string> chain = chain_of(k);
      int n = static_cast<int>(chain.size());
      std::vector<Channel> next;
      for (const Channel& c : acc)
        for (const auto& parts : comb::compositions_by_gaps(n)) {
          Channel d = c;
          std::vector<std::string> outer;
          int pos = 0;
          for (int p : parts) {
            std::vector<std::string> block(chain.begin() + pos, chain.begin() + pos + p);
            outer.push_back(chain_composite(cat, block));
            d.right.push_back(chain_key(block));
            pos += p;
          }
          d.left.push_back(chain_key(outer));
          next.push_back(d);
        }
      acc = std::move(next);
    }
    return acc;
  };
  s.id_aut_iso = [](const ClassKey&) { return Coeff(1); };
  s.show = [](const ClassKey& k) {
    std::vector<std::string> ch = chain_of(k);
    std::string out = "[";
    for (size_t i = 0; i < ch.size(); ++i) {
      if (i) out += "|";
      out += ch[i];
    }
    return out + "]";
  };
  s.latex = s.show;
  s.parse = [cat](const std::string& in) {
    if (in.rfind("ch(", 0) != 0 || in.back() != ')')
      throw std::invalid_argument("nerve: expected ch(f,g,...)");
    std::vector<std::string> chain;
    std::stringstream ss(in.substr(3, in.size() - 4));
    std::string item;
    while (std::getline(ss, item, ',')) chain.push_back(item);
    if (chain.empty()) throw std::invalid_argument("nerve: empty chain");
    for (size_t i = 0; i < chain.size(); ++i) {
      if (!cat.morphisms.count(chain[i]))
        throw std::invalid_argument("nerve: unknown morphism " + chain[i]);
      if (i && cat.morphisms.at(chain[i - 1]).second != cat.morphisms.at(chain[i]).first)
        throw std::invalid_argument("nerve: chain not composable at position " +
                                    std::to_string(i));
    }
    return chain_key(chain);
  };
  return s;
}

}  // namespace feyncat
