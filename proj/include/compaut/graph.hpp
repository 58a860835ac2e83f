#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "compaut/errors.hpp"

namespace compaut {

using Edge = std::pair<int, int>;

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Adjacency is kept both as a dense matrix (constant-time queries) and as
/// sorted neighbor lists. Optional vertex labels ride along as a sidecar and
/// take no part in equality.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n_) * n_, 0), nbrs_(n_) {}

  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (g.adjacent_checked(u, v)) {
        throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      g.add_edge(u, v);
    }
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool adjacent(int u, int v) const noexcept {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return;
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
    nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
    ++m_;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
      for (int v : nbrs_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
      throw InputError("label count does not match vertex count");
    }
    labels_ = std::move(labels);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) {
      throw InputError("vertex id " + std::to_string(v) + " out of range [0," +
                       std::to_string(n_) + ")");
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  bool adjacent_checked(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adjacent(u, v);
  }

  static int checked_order(int n) {
    if (n < 0) throw InputError("negative vertex count");
    return n;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<std::string> labels_;
};

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  out.set_labels(g.labels());
  return out;
}

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  for (int v : vertices) g.check_vertex(v);
  Graph out(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

/// The graph pi(g): uv is an edge of g iff pi(u)pi(v) is an edge of the result.
inline Graph relabel(const Graph& g, std::span<const int> mapping) {
  const int n = g.order();
  if (static_cast<int>(mapping.size()) != n) throw InputError("relabel: mapping size mismatch");
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(mapping[u], mapping[v]);
  return out;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return out;
}

/// Replaces every vertex v of `host` by the graph parts[v]; the copies are
/// modules of the result, joined completely when their host vertices are
/// adjacent. Copies are laid out consecutively in host-vertex order.
inline Graph substitute(const Graph& host, std::span<const Graph> parts) {
  if (static_cast<int>(parts.size()) != host.order()) {
    throw InputError("substitute: need one part per host vertex");
  }
  std::vector<int> offset(host.order() + 1, 0);
  for (int v = 0; v < host.order(); ++v) offset[v + 1] = offset[v] + parts[v].order();
  Graph out(offset.back());
  for (int v = 0; v < host.order(); ++v)
    for (auto [a, b] : parts[v].edges()) out.add_edge(offset[v] + a, offset[v] + b);
  for (auto [u, v] : host.edges())
    for (int a = offset[u]; a < offset[u + 1]; ++a)
      for (int b = offset[v]; b < offset[v + 1]; ++b) out.add_edge(a, b);
  return out;
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int w : g.neighbors(members[i])) {
        if (comp[w] == -1) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline bool is_complete(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

inline bool is_edgeless(const Graph& g) { return g.size() == 0; }

/// K_n or its complement (K_1 counts).
inline bool is_degenerate(const Graph& g) { return is_complete(g) || is_edgeless(g); }

/// Whether every vertex outside `s` sees all of `s` or none of it.
inline bool is_module(const Graph& g, std::span<const int> s) {
  std::vector<char> in(g.order(), 0);
  for (int v : s) {
    g.check_vertex(v);
    in[v] = 1;
  }
  for (int x = 0; x < g.order(); ++x) {
    if (in[x]) continue;
    int seen = 0;
    for (int v : s) seen += g.adjacent(x, v) ? 1 : 0;
    if (seen != 0 && seen != static_cast<int>(s.size())) return false;
  }
  return true;
}

/// Proper 2-colouring with the part containing the lowest vertex of each
/// component coloured 0; nullopt for non-bipartite graphs.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int u = queue[i];
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

/// Connected and 2-regular with at least three vertices.
inline bool is_cycle(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

inline std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  dist[source] = 0;
  std::vector<int> queue{source};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int w : g.neighbors(queue[i])) {
      if (dist[w] == -1) {
        dist[w] = dist[queue[i]] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace compaut
