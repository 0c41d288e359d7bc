#pragma once

// Surjection instances: one generator pi_n per arity n >= 1 (the unique
// order class of surjections from n points onto one), pi_1 the identity.
// A factorization through k points contributes the channel
// pi_k (x) [pi_{n_1} ... pi_{n_k}]. In the ordered mode channels are indexed
// by ordered compositions of n; in the symmetric mode by set partitions, so
// repeated block-size multisets pick up multiplicities.

#include <stdexcept>
#include <string>
#include <vector>

#include "../algebra.hpp"
#include "combinatorics.hpp"

namespace feyncat {

inline ClassKey pi_key(int n) { return "pi:" + std::to_string(n); }
inline int pi_arg(const ClassKey& k) { return std::stoi(k.substr(3)); }

inline InstanceSpec surjections_instance(bool ordered) {
  InstanceSpec s;
  s.name = ordered ? "surj-ord" : "surj-sym";
  s.symmetric = !ordered;
  s.is_identity = [](const ClassKey& k) { return pi_arg(k) == 1; };
  s.degree_of = [](const ClassKey& k) { return pi_arg(k) - 1; };

  if (ordered) {
    s.channels = [](const ClassKey& k) {
      int n = pi_arg(k);
      std::vector<Channel> out;
      for (const auto& parts : comb::compositions(n)) {
        Channel ch;
        ch.left = {pi_key(static_cast<int>(parts.size()))};
        for (int p : parts) ch.right.push_back(pi_key(p));
        out.push_back(ch);
      }
      return out;
    };
  } else {
    // multiplicity per sorted block-size multiset via the closed formula;
    // the explicit set-partition enumeration lives in word_channels below
    s.channels = [](const ClassKey& k) {
      int n = pi_arg(k);
      std::map<std::vector<int>, Coeff> counts;
      std::function<void(int, int, std::vector<int>&)> rec =
          [&](int rest, int minp, std::vector<int>& cur) {
            if (rest == 0) {
              counts[cur] += comb::partition_count(cur);
              return;
            }
            for (int p = minp; p <= rest; ++p) {
              cur.push_back(p);
              rec(rest - p, p, cur);
              cur.pop_back();
            }
          };
      std::vector<int> cur;
      rec(n, 1, cur);
      std::vector<Channel> out;
      for (auto& [sizes, c] : counts) {
        Channel ch;
        ch.left = {pi_key(static_cast<int>(sizes.size()))};
        for (int p : sizes) ch.right.push_back(pi_key(p));
        ch.mult = c;
        out.push_back(ch);
      }
      return out;
    };
  }

  s.generators = [](int maxdeg) {
    std::vector<ClassKey> out;
    for (int n = 1; n <= maxdeg + 1; ++n) out.push_back(pi_key(n));
    return out;
  };

  // Independent word-level enumeration: gap bitmasks (ordered) or explicit
  // set partitions (symmetric), combined factor by factor.
  s.word_channels = [ordered](const Word& w) {
    std::vector<Channel> acc{{Word{}, Word{}, 1}};
    for (const ClassKey& k : w) {
      int n = pi_arg(k);
      std::vector<Channel> next;
      if (ordered) {
        for (const Channel& c : acc)
          for (const auto& parts : comb::compositions_by_gaps(n)) {
            Channel d = c;
            d.left.push_back(pi_key(static_cast<int>(parts.size())));
            for (int p : parts) d.right.push_back(pi_key(p));
            next.push_back(d);
          }
      } else {
        for (const Channel& c : acc)
          for (const auto& blocks : comb::set_partitions(n)) {
            Channel d = c;
            d.left.push_back(pi_key(static_cast<int>(blocks.size())));
            for (const auto& b : blocks)
              d.right.push_back(pi_key(static_cast<int>(b.size())));
            next.push_back(d);
          }
      }
      acc = std::move(next);
    }
    return acc;
  };

  s.id_aut_iso = [](const ClassKey&) { return Coeff(1); };  // skeletal
  s.show = [](const ClassKey& k) { return "pi(" + std::to_string(pi_arg(k)) + ")"; };
  s.latex = [](const ClassKey& k) {
    return "\\pi_{" + std::to_string(pi_arg(k)) + "}";
  };
  s.parse = [](const std::string& in) {
    if (in.rfind("pi(", 0) != 0 || in.back() != ')')
      throw std::invalid_argument("surjections: expected pi(n)");
    int n = std::stoi(in.substr(3, in.size() - 4));
    if (n < 1) throw std::invalid_argument("surjections: n must be >= 1");
    return pi_key(n);
  };
  return s;
}

}  // namespace feyncat
