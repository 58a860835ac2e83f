#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "compaut/graph.hpp"
#include "compaut/oracles.hpp"

namespace compaut {

namespace detail {

inline Graph canonical_relabel(const Graph& g, const CanonicalForm& cf) {
  std::vector<int> pos(g.order());
  for (int i = 0; i < g.order(); ++i) pos[cf.order[i]] = i;
  return relabel(g, pos);
}

}  // namespace detail

/// One representative per isomorphism class of graphs on n vertices, each
/// in canonical labeling, sorted by canonical code. Built by one-vertex
/// extensions of the classes on n-1 vertices; results are memoized.
inline const std::vector<Graph>& nonisomorphic_graphs(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> memo;
  std::lock_guard lock(mu);
  if (n < 0 || n > 10) throw OracleBoundError("graph enumeration order", 10, n);
  if (memo.empty()) {
    memo.emplace(0, std::vector<Graph>{Graph(0)});
    memo.emplace(1, std::vector<Graph>{Graph(1)});
  }
  for (int k = memo.rbegin()->first + 1; k <= n; ++k) {
    std::vector<std::pair<std::string, Graph>> found;
    std::unordered_set<std::string> seen;
    for (const Graph& h : memo.at(k - 1)) {
      for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        Graph g(k);
        for (auto [u, v] : h.edges()) g.add_edge(u, v);
        for (int v = 0; v < k - 1; ++v)
          if ((mask >> v) & 1u) g.add_edge(v, k - 1);
        CanonicalForm cf = canonical_form(g);
        if (seen.insert(cf.code).second) {
          found.emplace_back(std::move(cf.code), detail::canonical_relabel(g, cf));
        }
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> classes;
    classes.reserve(found.size());
    for (auto& entry : found) classes.push_back(std::move(entry.second));
    memo.emplace(k, std::move(classes));
  }
  return memo.at(n);
}

/// Calls f on every isomorphism class with 1 <= n <= max_n, smallest n first.
template <typename F>
void for_each_graph_up_to(int max_n, F&& f) {
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : nonisomorphic_graphs(n)) f(g);
}

/// G(n, p) sample.
template <typename Rng>
Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Random connected bipartite graph: a random spanning tree between two
/// non-empty sides plus extra cross edges with probability p.
template <typename Rng>
Graph random_connected_bipartite(int n, double p, Rng& rng) {
  if (n < 2) return Graph(n);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  int a = std::uniform_int_distribution<int>(1, n - 1)(rng);
  std::vector<int> side(n);
  for (int i = 0; i < n; ++i) side[perm[i]] = i < a ? 0 : 1;
  Graph g(n);
  // Attach vertices one at a time to an earlier vertex on the other side,
  // ordering so that both sides are already present.
  std::vector<int> order{perm[0], perm[a]};
  for (int i = 1; i < n; ++i)
    if (i != a) order.push_back(perm[i]);
  g.add_edge(order[0], order[1]);
  for (std::size_t i = 2; i < order.size(); ++i) {
    int v = order[i];
    std::vector<int> options;
    for (std::size_t j = 0; j < i; ++j)
      if (side[order[j]] != side[v]) options.push_back(order[j]);
    int w = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    g.add_edge(v, w);
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (side[u] != side[v] && !g.adjacent(u, v) && coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace compaut
