#pragma once

// Small combinatorial enumerators shared by the interval-style instances.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "../rational.hpp"

namespace feyncat::comb {

// ordered compositions of n into positive parts (recursive enumeration)
inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      cur.push_back(p);
      rec(rest - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

// compositions of n read off a bitmask over the n-1 interior gaps
// (independent of the recursive enumeration above)
inline std::vector<std::vector<int>> compositions_by_gaps(int n) {
  std::vector<std::vector<int>> out;
  int gaps = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << gaps); ++mask) {
    std::vector<int> parts;
    int len = 1;
    for (int i = 0; i < gaps; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(len);
        len = 1;
      } else {
        ++len;
      }
    }
    parts.push_back(len);
    out.push_back(parts);
  }
  return out;
}

// set partitions of {0..n-1} as restricted-growth strings; each partition is
// returned as the list of its blocks
inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (i == n) {
      std::vector<std::vector<int>> blocks(static_cast<size_t>(maxb));
      for (int j = 0; j < n; ++j)
        blocks[static_cast<size_t>(rgs[static_cast<size_t>(j)])].push_back(j);
      out.push_back(blocks);
      return;
    }
    for (int b = 0; b <= maxb; ++b) {
      rgs[static_cast<size_t>(i)] = b;
      rec(i + 1, std::max(maxb, b + 1));
    }
  };
  if (n == 0) {
    out.push_back({});
    return out;
  }
  rec(0, 0);
  return out;
}

inline Coeff factorial(int n) {
  Coeff f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// number of partitions of an n-set into blocks whose sorted size multiset is
// `sizes`: n! / (prod sizes! * prod multiplicity!)
inline Coeff partition_count(const std::vector<int>& sorted_sizes) {
  int n = 0;
  for (int s : sorted_sizes) n += s;
  Coeff c = factorial(n);
  for (int s : sorted_sizes) c /= factorial(s);
  int run = 1;
  for (size_t i = 1; i <= sorted_sizes.size(); ++i) {
    if (i < sorted_sizes.size() && sorted_sizes[i] == sorted_sizes[i - 1]) {
      ++run;
    } else {
      c /= factorial(run);
      run = 1;
    }
  }
  return c;
}

}  // namespace feyncat::comb
