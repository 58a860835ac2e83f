#pragma once

#include <algorithm>
#include <ostream>
#include <numeric>
#include <random>
#include <vector>

#include "compaut/compaut.hpp"

namespace compaut {

inline void PrintTo(const Graph& g, std::ostream* os) { *os << "\n" << to_edge_list(g); }
inline void PrintTo(const Permutation& p, std::ostream* os) { *os << p.to_cycle_string(); }

}  // namespace compaut

namespace compaut::testing {

inline Graph p3() { return path_graph(3); }
inline Graph p4() { return path_graph(4); }
inline Graph two_k2() { return Graph::from_edges(4, {{0, 1}, {2, 3}}); }
inline Graph k1_plus_k2() { return Graph::from_edges(3, {{1, 2}}); }

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(std::move(p));
}

inline Graph apply(const Graph& g, const Permutation& pi) { return relabel(g, pi.image()); }

/// Literal module test: every outside vertex sees all of s or none of it.
inline bool literal_module(const Graph& g, const std::vector<int>& s) {
  for (int x = 0; x < g.order(); ++x) {
    if (std::find(s.begin(), s.end(), x) != s.end()) continue;
    int seen = 0;
    for (int v : s) seen += g.adjacent(x, v);
    if (seen != 0 && seen != static_cast<int>(s.size())) return false;
  }
  return true;
}

}  // namespace compaut::testing
