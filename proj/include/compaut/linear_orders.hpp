#pragma once

#include <span>
#include <vector>

#include "compaut/errors.hpp"
#include "compaut/graph.hpp"
#include "compaut/orientation.hpp"

namespace compaut {

/// A linear order read left to right.
using Chain = std::vector<int>;

/// pos[v] = index of v in the chain; throws InputError unless the chain is a
/// permutation of 0..n-1.
inline std::vector<int> chain_positions(int n, const Chain& chain) {
  if (static_cast<int>(chain.size()) != n) throw InputError("chain does not cover the vertex set");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = chain[i];
    if (v < 0 || v >= n || pos[v] != -1) throw InputError("chain is not a permutation of the vertices");
    pos[v] = i;
  }
  return pos;
}

/// The partial order u < v iff u precedes v in every chain, as arcs.
inline Orientation chain_intersection_order(int n, std::span<const Chain> chains) {
  std::vector<std::vector<int>> pos;
  for (const auto& c : chains) pos.push_back(chain_positions(n, c));
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      bool below = true;
      for (const auto& p : pos) below = below && p[u] < p[v];
      if (below && !chains.empty()) arcs.emplace_back(u, v);
    }
  return Orientation(n, std::move(arcs));
}

/// Comparability graph of chain_intersection_order.
inline Graph chain_intersection_graph(int n, std::span<const Chain> chains) {
  Graph g(n);
  const Orientation order = chain_intersection_order(n, chains);
  for (auto [u, v] : order.arcs()) g.add_edge(u, v);
  return g;
}

}  // namespace compaut
