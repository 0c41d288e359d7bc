#pragma once

// Injection instance: generators are the symbols (1;0^{n-1};1), the double
// base-point preserving injections of intervals; (1;;1) is the identity.
// Channels are indexed by ordered compositions of n, mirroring the ordered
// surjection instance under the interval duality (the coproducts have the
// same channel combinatorics with the roles of the two pictures exchanged).

#include <stdexcept>
#include <string>
#include <vector>

#include "../algebra.hpp"
#include "combinatorics.hpp"

namespace feyncat {

inline ClassKey joyal_key(int n) { return "j:" + std::to_string(n); }
inline int joyal_arg(const ClassKey& k) { return std::stoi(k.substr(2)); }

// number of 1s in the symbol (exposed as a statistic only)
inline int joyal_depth(const ClassKey&) { return 2; }

inline std::string joyal_symbol(int n) {
  std::string zeros(static_cast<size_t>(n - 1), '0');
  return "(1;" + zeros + ";1)";
}

inline InstanceSpec joyal_injection_instance() {
  InstanceSpec s;
  s.name = "joyal";
  s.symmetric = false;
  s.is_identity = [](const ClassKey& k) { return joyal_arg(k) == 1; };
  s.degree_of = [](const ClassKey& k) { return joyal_arg(k) - 1; };
  s.channels = [](const ClassKey& k) {
    int n = joyal_arg(k);
    std::vector<Channel> out;
    for (const auto& parts : comb::compositions(n)) {
      Channel ch;
      ch.left = {joyal_key(static_cast<int>(parts.size()))};
      for (int p : parts) ch.right.push_back(joyal_key(p));
      out.push_back(ch);
    }
    return out;
  };
  s.generators = [](int maxdeg) {
    std::vector<ClassKey> out;
    for (int n = 1; n <= maxdeg + 1; ++n) out.push_back(joyal_key(n));
    return out;
  };
  s.word_channels = [](const Word& w) {
    std::vector<Channel> acc{{Word{}, Word{}, 1}};
    for (const ClassKey& k : w) {
      int n = joyal_arg(k);
      std::vector<Channel> next;
      for (const Channel& c : acc)
        for (const auto& parts : comb::compositions_by_gaps(n)) {
          Channel d = c;
          d.left.push_back(joyal_key(static_cast<int>(parts.size())));
          for (int p : parts) d.right.push_back(joyal_key(p));
          next.push_back(d);
        }
      acc = std::move(next);
    }
    return acc;
  };
  s.id_aut_iso = [](const ClassKey&) { return Coeff(1); };
  s.show = [](const ClassKey& k) { return joyal_symbol(joyal_arg(k)); };
  s.latex = [](const ClassKey& k) {
    int n = joyal_arg(k);
    return "(1;0^{" + std::to_string(n - 1) + "};1)";
  };
  s.parse = [](const std::string& in) {
    if (in.rfind("j(", 0) != 0 || in.back() != ')')
      throw std::invalid_argument("joyal: expected j(n)");
    int n = std::stoi(in.substr(2, in.size() - 3));
    if (n < 1) throw std::invalid_argument("joyal: n must be >= 1");
    return joyal_key(n);
  };
  return s;
}

}  // namespace feyncat
