#pragma once

// Sequence instance over a finite alphabet: a generator is a tuple
// (a_0,...,a_n) of letters, read as angle markings of an n-ary corolla.
// The coproduct runs over interior cut-point subsets: the quotient keeps the
// letters at the cut points, the subobject word collects the segments. Pairs
// (a_0,a_1) are the identity classes.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "../algebra.hpp"

namespace feyncat {

inline ClassKey seq_key(const std::vector<std::string>& entries) {
  std::string k = "seq:";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) k += ",";
    k += entries[i];
  }
  return k;
}

inline std::vector<std::string> seq_entries(const ClassKey& k) {
  std::vector<std::string> out;
  std::stringstream ss(k.substr(4));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

inline InstanceSpec sequence_instance(const std::vector<std::string>& alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("sequence: empty alphabet");
  InstanceSpec s;
  s.name = "seq:";
  for (const auto& a : alphabet) s.name += a;
  s.symmetric = false;
  s.is_identity = [](const ClassKey& k) { return seq_entries(k).size() == 2; };
  s.degree_of = [](const ClassKey& k) {
    return static_cast<int>(seq_entries(k).size()) - 2;
  };
  // channels: recursive enumeration over ascending cut-point chains
  s.channels = [](const ClassKey& k) {
    std::vector<std::string> a = seq_entries(k);
    int n = static_cast<int>(a.size()) - 1;
    std::vector<Channel> out;
    std::vector<int> cuts{0};
    std::function<void(int)> rec = [&](int last) {
      if (last == n) {
        Channel ch;
        std::vector<std::string> outer;
        for (int i : cuts) outer.push_back(a[static_cast<size_t>(i)]);
        ch.left = {seq_key(outer)};
        for (size_t j = 1; j < cuts.size(); ++j) {
          std::vector<std::string> seg(a.begin() + cuts[j - 1], a.begin() + cuts[j] + 1);
          ch.right.push_back(seq_key(seg));
        }
        out.push_back(ch);
        return;
      }
      for (int next = last + 1; next <= n; ++next) {
        cuts.push_back(next);
        rec(next);
        cuts.pop_back();
      }
    };
    rec(0);
    return out;
  };
  s.generators = [alphabet](int maxdeg) {
    std::vector<ClassKey> out;
    size_t m = alphabet.size();
    for (int n = 1; n <= maxdeg + 1; ++n) {
      std::vector<size_t> idx(static_cast<size_t>(n + 1), 0);
      while (true) {
        std::vector<std::string> entries;
        for (size_t i : idx) entries.push_back(alphabet[i]);
        out.push_back(seq_key(entries));
        size_t i = 0;
        while (i < idx.size() && idx[i] + 1 == m) idx[i++] = 0;
        if (i == idx.size()) break;
        ++idx[i];
      }
    }
    return out;
  };
  // independent path: interior subsets as bitmasks, per factor
  s.word_channels = [](const Word& w) {
    std::vector<Channel> acc{{Word{}, Word{}, 1}};
    for (const ClassKey& k : w) {
      std::vector<std::string> a = seq_entries(k);
      int n = static_cast<int>(a.size()) - 1;
      std::vector<Channel> next;
      for (const Channel& c : acc)
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
          std::vector<int> cuts{0};
          for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1))) cuts.push_back(i);
          cuts.push_back(n);
          Channel d = c;
          std::vector<std::string> outer;
          for (int i : cuts) outer.push_back(a[static_cast<size_t>(i)]);
          d.left.push_back(seq_key(outer));
          for (size_t j = 1; j < cuts.size(); ++j) {
            std::vector<std::string> seg(a.begin() + cuts[j - 1],
                                         a.begin() + cuts[j] + 1);
            d.right.push_back(seq_key(seg));
          }
          next.push_back(d);
        }
      acc = std::move(next);
    }
    return acc;
  };
  s.id_aut_iso = [](const ClassKey&) { return Coeff(1); };
  s.show = [](const ClassKey& k) {
    std::vector<std::string> a = seq_entries(k);
    std::string out = "(";
    for (size_t i = 0; i < a.size(); ++i) {
      if (i) out += ",";
      out += a[i];
    }
    return out + ")";
  };
  s.latex = s.show;
  s.parse = [alphabet](const std::string& in) {
    if (in.rfind("seq(", 0) != 0 || in.back() != ')')
      throw std::invalid_argument("sequence: expected seq(a,b,...)");
    std::vector<std::string> entries;
    std::stringstream ss(in.substr(4, in.size() - 5));
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(item);
    if (entries.size() < 2) throw std::invalid_argument("sequence: need >= 2 entries");
    for (const auto& e : entries)
      if (std::find(alphabet.begin(), alphabet.end(), e) == alphabet.end())
        throw std::invalid_argument("sequence: letter outside alphabet: " + e);
    return seq_key(entries);
  };
  return s;
}

}  // namespace feyncat
