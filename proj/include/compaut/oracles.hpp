#pragma once

// Exhaustive-search oracles. Every structural module in the library is
// validated against these; none of them look at modular trees.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "compaut/errors.hpp"
#include "compaut/graph.hpp"
#include "compaut/orientation.hpp"
#include "compaut/permutation.hpp"

namespace compaut {

/// Bounds for the brute-force oracles. They are configuration, so sweeps
/// over larger gadgets raise them explicitly.
struct OracleLimits {
  int max_vertices = 10;
  int max_edges = 20;
  std::size_t max_elements = 1'000'000;
};

namespace detail {

/// Vertex-coloured (di)graph in the form the search engine wants.
struct Structure {
  int n = 0;
  bool directed = false;
  std::vector<std::uint8_t> adj;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
  std::vector<int> colors;

  bool arc(int u, int v) const { return adj[static_cast<std::size_t>(u) * n + v] != 0; }

  static Structure from_graph(const Graph& g, std::span<const int> colors = {}) {
    Structure s;
    s.n = g.order();
    s.adj.assign(static_cast<std::size_t>(s.n) * s.n, 0);
    s.out.resize(s.n);
    for (int v = 0; v < s.n; ++v) {
      s.out[v] = g.neighbors(v);
      for (int w : g.neighbors(v)) s.adj[static_cast<std::size_t>(v) * s.n + w] = 1;
    }
    s.in = s.out;
    s.set_colors(colors);
    return s;
  }

  static Structure from_arcs(int n, std::span<const Arc> arcs, std::span<const int> colors = {}) {
    Structure s;
    s.n = n;
    s.directed = true;
    s.adj.assign(static_cast<std::size_t>(n) * n, 0);
    s.out.resize(n);
    s.in.resize(n);
    for (auto [u, v] : arcs) {
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw InputError("bad arc");
      if (s.adj[static_cast<std::size_t>(u) * n + v]) continue;
      s.adj[static_cast<std::size_t>(u) * n + v] = 1;
      s.out[u].push_back(v);
      s.in[v].push_back(u);
    }
    s.set_colors(colors);
    return s;
  }

  void set_colors(std::span<const int> c) {
    if (c.empty()) {
      colors.assign(n, 0);
    } else {
      if (static_cast<int>(c.size()) != n) throw InputError("colour vector size mismatch");
      colors.assign(c.begin(), c.end());
    }
  }
};

using Cells = std::vector<std::vector<int>>;

inline Cells initial_cells(const Structure& s) {
  std::vector<int> order(s.n);
  for (int v = 0; v < s.n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return s.colors[a] < s.colors[b]; });
  Cells cells;
  for (int v : order) {
    if (cells.empty() || s.colors[cells.back().front()] != s.colors[v]) cells.emplace_back();
    cells.back().push_back(v);
  }
  return cells;
}

inline std::vector<int> signature(const Structure& s, const std::vector<int>& cell_of, int v) {
  std::vector<int> sig;
  sig.reserve(s.out[v].size() + (s.directed ? s.in[v].size() + 1 : 0));
  for (int w : s.out[v]) sig.push_back(cell_of[w]);
  std::sort(sig.begin(), sig.end());
  if (s.directed) {
    sig.push_back(-1);
    auto mid = sig.size();
    for (int w : s.in[v]) sig.push_back(cell_of[w]);
    std::sort(sig.begin() + static_cast<std::ptrdiff_t>(mid), sig.end());
  }
  return sig;
}

/// Refines an ordered partition to the coarsest equitable one below it.
/// Sub-cells are ordered by signature, so the result is label-invariant.
inline void refine(const Structure& s, Cells& cells) {
  std::vector<int> cell_of(s.n);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    Cells next;
    next.reserve(cells.size());
    for (auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(std::move(cell));
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cell.size());
      for (int v : cell) keyed.emplace_back(signature(s, cell_of, v), v);
      std::sort(keyed.begin(), keyed.end());
      std::size_t first = next.size();
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
        next.back().push_back(keyed[i].second);
      }
      if (next.size() - first > 1) changed = true;
    }
    cells = std::move(next);
  }
}

inline Cells individualize(const Cells& cells, std::size_t target, int v) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (c != target) {
      out.push_back(cells[c]);
      continue;
    }
    out.push_back({v});
    std::vector<int> rest;
    for (int w : cells[c])
      if (w != v) rest.push_back(w);
    out.push_back(std::move(rest));
  }
  return out;
}

/// Data that any isomorphism carrying one partition onto another must preserve.
inline std::vector<std::vector<int>> partition_invariant(const Structure& s, const Cells& cells) {
  std::vector<int> cell_of(s.n);
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
  std::vector<std::vector<int>> inv;
  inv.reserve(cells.size());
  for (const auto& cell : cells) {
    auto sig = signature(s, cell_of, cell.front());
    sig.insert(sig.begin(), {static_cast<int>(cell.size()), s.colors[cell.front()]});
    inv.push_back(std::move(sig));
  }
  return inv;
}

inline std::size_t first_nonsingleton(const Cells& cells) {
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (cells[c].size() > 1) return c;
  return cells.size();
}

inline bool is_isomorphism(const Structure& a, const Structure& b, const std::vector<int>& map) {
  for (int u = 0; u < a.n; ++u) {
    if (a.colors[u] != b.colors[map[u]]) return false;
    for (int v = 0; v < a.n; ++v)
      if (a.arc(u, v) != b.arc(map[u], map[v])) return false;
  }
  return true;
}

/// Enumerates colour-preserving isomorphisms a -> b. `emit` receives
/// one-line maps and returns false to stop the search.
inline void search_isomorphisms(const Structure& a, const Structure& b,
                                const std::function<bool(const std::vector<int>&)>& emit) {
  if (a.n != b.n || a.directed != b.directed) return;
  if (a.n == 0) {
    emit({});
    return;
  }
  Cells left = initial_cells(a);
  Cells right = initial_cells(b);
  refine(a, left);
  refine(b, right);
  if (partition_invariant(a, left) != partition_invariant(b, right)) return;

  bool stop = false;
  std::function<void(const Cells&, const Cells&)> recurse = [&](const Cells& l, const Cells& r) {
    if (stop) return;
    std::size_t t = first_nonsingleton(l);
    if (t == l.size()) {
      std::vector<int> map(a.n);
      for (std::size_t c = 0; c < l.size(); ++c) map[l[c].front()] = r[c].front();
      if (is_isomorphism(a, b, map) && !emit(map)) stop = true;
      return;
    }
    Cells l2 = individualize(l, t, l[t].front());
    refine(a, l2);
    auto inv = partition_invariant(a, l2);
    for (int w : r[t]) {
      Cells r2 = individualize(r, t, w);
      refine(b, r2);
      if (partition_invariant(b, r2) == inv) recurse(l2, r2);
      if (stop) return;
    }
  };
  recurse(left, right);
}

inline bool twins(const Structure& s, int u, int v) {
  for (int x = 0; x < s.n; ++x) {
    if (x == u || x == v) continue;
    if (s.arc(u, x) != s.arc(v, x) || s.arc(x, u) != s.arc(x, v)) return false;
  }
  return true;
}

inline std::string leaf_code(const Structure& s, const std::vector<int>& order) {
  std::string code;
  code.reserve(static_cast<std::size_t>(s.n) * (s.n + 1));
  for (int v : order) {
    code += std::to_string(s.colors[v]);
    code += ',';
  }
  code += '|';
  for (int i = 0; i < s.n; ++i) {
    for (int j = s.directed ? 0 : i + 1; j < s.n; ++j) code += s.arc(order[i], order[j]) ? '1' : '0';
  }
  return code;
}

}  // namespace detail

/// Canonical code (equal iff the coloured graphs are isomorphic) together
/// with a labeling achieving it: order[position] = vertex.
struct CanonicalForm {
  std::string code;
  std::vector<int> order;
};

/// Colours must mean the same thing across every graph being compared.
inline CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {}) {
  detail::Structure s = detail::Structure::from_graph(g, colors);
  CanonicalForm best;
  bool have = false;
  std::function<void(const detail::Cells&)> recurse = [&](const detail::Cells& cells) {
    std::size_t t = detail::first_nonsingleton(cells);
    if (t == cells.size()) {
      std::vector<int> order;
      order.reserve(s.n);
      for (const auto& c : cells) order.push_back(c.front());
      std::string code = detail::leaf_code(s, order);
      if (!have || code < best.code) {
        best = {std::move(code), std::move(order)};
        have = true;
      }
      return;
    }
    // Transposing two twins of the target cell is an automorphism fixing the
    // partition, so one representative per twin class suffices.
    std::vector<int> reps;
    for (int v : cells[t]) {
      bool covered = false;
      for (int r : reps) {
        if (detail::twins(s, r, v)) {
          covered = true;
          break;
        }
      }
      if (!covered) reps.push_back(v);
    }
    for (int v : reps) {
      detail::Cells next = detail::individualize(cells, t, v);
      detail::refine(s, next);
      recurse(next);
    }
  };
  detail::Cells cells = detail::initial_cells(s);
  detail::refine(s, cells);
  recurse(cells);
  if (!have) best.code = detail::leaf_code(s, {});
  return best;
}

namespace detail {

inline void check_vertex_bound(int n, const OracleLimits& limits) {
  if (n > limits.max_vertices) throw OracleBoundError("vertices", limits.max_vertices, n);
}

inline PermutationGroup all_automorphisms(const Structure& s, const OracleLimits& limits) {
  std::vector<Permutation> found;
  search_isomorphisms(s, s, [&](const std::vector<int>& map) {
    found.emplace_back(map);
    if (found.size() > limits.max_elements) {
      throw OracleBoundError("group elements", static_cast<long long>(limits.max_elements),
                             static_cast<long long>(found.size()));
    }
    return true;
  });
  return PermutationGroup::from_elements(s.n, std::move(found));
}

}  // namespace detail

/// Every adjacency-preserving bijection of g, materialized and sorted.
inline PermutationGroup brute_force_aut(const Graph& g, const OracleLimits& limits = {}) {
  detail::check_vertex_bound(g.order(), limits);
  return detail::all_automorphisms(detail::Structure::from_graph(g), limits);
}

/// Automorphisms of g that map every vertex to one of the same colour.
inline PermutationGroup colored_aut(const Graph& g, std::span<const int> colors,
                                    const OracleLimits& limits = {}) {
  detail::check_vertex_bound(g.order(), limits);
  return detail::all_automorphisms(detail::Structure::from_graph(g, colors), limits);
}

/// Automorphisms of the digraph on n vertices with the given arcs.
inline PermutationGroup brute_force_digraph_aut(int n, std::span<const Arc> arcs,
                                                const OracleLimits& limits = {},
                                                std::span<const int> colors = {}) {
  detail::check_vertex_bound(n, limits);
  return detail::all_automorphisms(detail::Structure::from_arcs(n, arcs, colors), limits);
}

/// A witness pi with relabel(a, pi) == b, or nullopt.
inline std::optional<Permutation> brute_force_iso(const Graph& a, const Graph& b,
                                                  const OracleLimits& limits = {}) {
  detail::check_vertex_bound(std::max(a.order(), b.order()), limits);
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  std::optional<Permutation> witness;
  detail::search_isomorphisms(detail::Structure::from_graph(a), detail::Structure::from_graph(b),
                              [&](const std::vector<int>& map) {
                                witness = Permutation(map);
                                return false;
                              });
  return witness;
}

/// Coloured-digraph isomorphism; colours must agree under the map.
inline std::optional<Permutation> brute_force_digraph_iso(int n, std::span<const Arc> arcs_a,
                                                          std::span<const int> colors_a,
                                                          std::span<const Arc> arcs_b,
                                                          std::span<const int> colors_b,
                                                          const OracleLimits& limits = {}) {
  detail::check_vertex_bound(n, limits);
  std::optional<Permutation> witness;
  detail::search_isomorphisms(detail::Structure::from_arcs(n, arcs_a, colors_a),
                              detail::Structure::from_arcs(n, arcs_b, colors_b),
                              [&](const std::vector<int>& map) {
                                witness = Permutation(map);
                                return false;
                              });
  return witness;
}

/// All transitive orientations, by exhausting the 2^|E| orientations in
/// bitmask order (see orientation_from_mask).
inline std::vector<Orientation> brute_force_transitive_orientations(
    const Graph& g, const OracleLimits& limits = {}) {
  if (g.size() > limits.max_edges) throw OracleBoundError("edges", limits.max_edges, g.size());
  const int n = g.order();
  const auto edges = g.edges();
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  std::vector<Orientation> out;
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(m.begin(), m.end(), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      auto [u, v] = edges[k];
      if ((mask >> k) & 1u) std::swap(u, v);
      m[static_cast<std::size_t>(u) * n + v] = 1;
    }
    bool ok = true;
    for (std::size_t k = 0; k < edges.size() && ok; ++k) {
      auto [x, y] = edges[k];
      if ((mask >> k) & 1u) std::swap(x, y);
      for (int z = 0; z < n; ++z) {
        if (m[static_cast<std::size_t>(y) * n + z] && !m[static_cast<std::size_t>(x) * n + z]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(orientation_from_mask(g, mask));
  }
  return out;
}

/// Every module of g (including the trivial ones), as sorted vertex sets
/// ordered by bitmask, found by testing all 2^n subsets.
inline std::vector<std::vector<int>> brute_force_modules(const Graph& g,
                                                         const OracleLimits& limits = {}) {
  const int n = g.order();
  if (n > 20) throw OracleBoundError("vertices for subset enumeration", 20, n);
  detail::check_vertex_bound(n, limits);
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1u) s.push_back(v);
    bool module = true;
    for (int x = 0; x < n && module; ++x) {
      if ((mask >> x) & 1u) continue;
      bool any = false, all = true;
      for (int v : s) {
        if (g.adjacent(x, v)) any = true;
        else all = false;
      }
      module = !any || all;
    }
    if (module) out.push_back(std::move(s));
  }
  return out;
}

/// Only trivial modules (V and singletons), checked over all subsets.
inline bool brute_force_is_prime(const Graph& g, const OracleLimits& limits = {}) {
  for (const auto& m : brute_force_modules(g, limits))
    if (m.size() > 1 && static_cast<int>(m.size()) < g.order()) return false;
  return true;
}

}  // namespace compaut
