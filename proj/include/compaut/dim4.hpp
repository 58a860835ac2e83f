#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "compaut/graph.hpp"
#include "compaut/linear_orders.hpp"
#include "compaut/oracles.hpp"

namespace compaut {

/// Bipartite incidence graph: vertices of x first, then one vertex per edge
/// of x in lexicographic order.
inline Graph incidence_graph(const Graph& x) {
  if (x.order() == 0 || !is_connected(x)) throw InputError("incidence_graph needs a connected graph");
  const auto edges = x.edges();
  const int n = x.order();
  Graph y(n + static_cast<int>(edges.size()));
  for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
    y.add_edge(edges[k].first, n + k);
    y.add_edge(edges[k].second, n + k);
  }
  return y;
}

/// x with every edge replaced by a path with `length` edges; new vertices
/// follow the originals, edge by edge.
inline Graph subdivide(const Graph& x, int length) {
  if (length < 1) throw InputError("subdivision length must be positive");
  const auto edges = x.edges();
  const int n = x.order();
  Graph g(n + static_cast<int>(edges.size()) * (length - 1));
  int next = n;
  for (auto [u, v] : edges) {
    int prev = u;
    for (int s = 1; s < length; ++s) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, v);
  }
  return g;
}

enum class GadgetPart { P, Q, R };

/// C_X on P u Q u R. Ids: p_i = i; for the k-th edge (u, v) of x, u < v,
/// q_{uk} = n + 2k and q_{vk} = n + 2k + 1; r_k = n + 2m + k.
struct GadgetGraph {
  Graph source;
  /// source.edges(), fixing the edge indices k.
  std::vector<Edge> edges;
  Graph graph;
  std::vector<int> p, q, r;
  /// For each q vertex (indexed by id - n): (i, k) with x_i in e_k.
  std::vector<std::pair<int, int>> incidence;

  GadgetPart part(int v) const {
    const int n = source.order();
    if (v < n) return GadgetPart::P;
    if (v < n + static_cast<int>(q.size())) return GadgetPart::Q;
    return GadgetPart::R;
  }
  int p_of(int i) const { return p.at(i); }
  int r_of(int k) const { return r.at(k); }
  /// q_{ik}.
  int q_of(int i, int k) const {
    const auto& e = edges.at(k);
    if (e.first == i) return q.at(2 * k);
    if (e.second == i) return q.at(2 * k + 1);
    throw InputError("vertex is not incident to the edge");
  }
};

inline GadgetGraph construct_cx(const Graph& x) {
  GadgetGraph c;
  c.source = x;
  c.edges = x.edges();
  const int n = x.order();
  const auto& edges = c.edges;
  const int m = static_cast<int>(edges.size());
  c.graph = Graph(n + 3 * m);
  for (int i = 0; i < n; ++i) c.p.push_back(i);
  for (int k = 0; k < m; ++k) {
    c.q.push_back(n + 2 * k);
    c.q.push_back(n + 2 * k + 1);
    c.incidence.emplace_back(edges[k].first, k);
    c.incidence.emplace_back(edges[k].second, k);
  }
  for (int k = 0; k < m; ++k) c.r.push_back(n + 2 * m + k);
  for (int k = 0; k < m; ++k) {
    const int qa = n + 2 * k, qb = qa + 1, rk = n + 2 * m + k;
    c.graph.add_edge(edges[k].first, qa);
    c.graph.add_edge(qa, rk);
    c.graph.add_edge(rk, qb);
    c.graph.add_edge(qb, edges[k].second);
  }
  return c;
}

struct ChainSet {
  std::vector<Chain> chains;
};

/// The four chains certifying dim(C_X) <= 4 for bipartite x. `side[i]` is 0
/// for A and 1 for B; by default A is the colour class holding vertex 0 of
/// each component.
inline ChainSet four_chains(const GadgetGraph& cx, std::optional<std::vector<int>> side = std::nullopt) {
  const Graph& x = cx.source;
  const int n = x.order();
  if (!side) {
    auto colouring = two_coloring(x);
    if (!colouring) throw InputError("four_chains needs a bipartite source graph");
    side = std::move(colouring);
  }
  if (static_cast<int>(side->size()) != n) throw InputError("bipartition does not cover the vertices");
  for (int s : *side)
    if (s != 0 && s != 1) throw InputError("bipartition sides must be 0 or 1");
  for (auto [u, v] : x.edges())
    if ((*side)[u] == (*side)[v]) throw InputError("not a proper bipartition");
  const int m = x.size();

  // I_i = p_i followed by its q vertices in ascending k.
  auto incidence_string = [&](int i, Chain& out) {
    out.push_back(cx.p_of(i));
    for (int k = 0; k < m; ++k) {
      auto [a, b] = cx.edges[k];
      if (a == i || b == i) out.push_back(cx.q_of(i, k));
    }
  };
  auto chain = [&](int a_side, bool up) {
    Chain out;
    for (int i = 0; i < n; ++i)
      if ((*side)[i] == a_side) out.push_back(cx.p_of(i));
    for (int t = 0; t < m; ++t) {
      const int k = up ? t : m - 1 - t;
      auto [u, v] = cx.edges[k];
      const int i = (*side)[u] == a_side ? u : v;
      out.push_back(cx.r_of(k));
      out.push_back(cx.q_of(i, k));
    }
    for (int t = 0; t < n; ++t) {
      const int i = up ? t : n - 1 - t;
      if ((*side)[i] != a_side) incidence_string(i, out);
    }
    return out;
  };
  return ChainSet{{chain(0, true), chain(0, false), chain(1, true), chain(1, false)}};
}

/// Edge categories of C_X used when reporting chain discrepancies.
enum class ClaimCategory { QR, P, PQR };

inline const char* to_string(ClaimCategory c) {
  switch (c) {
    case ClaimCategory::QR: return "Q-R";
    case ClaimCategory::P: return "P";
    case ClaimCategory::PQR: return "P-QR";
  }
  return "?";
}

struct ChainReport {
  bool ok = true;
  /// Indexed by ClaimCategory.
  std::array<std::vector<Edge>, 3> missing;
  std::array<std::vector<Edge>, 3> extra;
  int comparable_pairs = 0;
};

inline ChainReport verify_chain_intersection(const ChainSet& cs, const GadgetGraph& cx) {
  const int n = cx.graph.order();
  for (const auto& c : cs.chains) chain_positions(n, c);
  const Graph inter = chain_intersection_graph(n, cs.chains);
  auto category = [&](int u, int v) {
    const bool pu = cx.part(u) == GadgetPart::P, pv = cx.part(v) == GadgetPart::P;
    return pu && pv ? ClaimCategory::P : (!pu && !pv ? ClaimCategory::QR : ClaimCategory::PQR);
  };
  ChainReport rep;
  rep.comparable_pairs = inter.size();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool want = cx.graph.adjacent(u, v), got = inter.adjacent(u, v);
      if (want == got) continue;
      rep.ok = false;
      auto& bucket = want ? rep.missing : rep.extra;
      bucket[static_cast<int>(category(u, v))].emplace_back(u, v);
    }
  return rep;
}

struct RecoveredGadget {
  std::vector<int> p, q, r;
  /// Reconstructed X; vertex i is p[i], edges from the r vertices.
  Graph x;
  /// Isomorphism from construct_cx(x).graph onto the input.
  Permutation witness;
};

/// Splits a C_X image into P, Q, R by distance mod 4 from the lowest vertex
/// whose degree is not 2, rebuilds X and checks construct_cx(X) against g.
inline RecoveredGadget recover_pqr(const Graph& g) {
  const int n = g.order();
  int anchor = -1;
  for (int v = 0; v < n && anchor < 0; ++v)
    if (g.degree(v) != 2) anchor = v;
  if (anchor < 0) throw DomainError("every vertex has degree 2; the source would be a cycle");
  const auto dist = bfs_distances(g, anchor);
  RecoveredGadget out;
  for (int v = 0; v < n; ++v) {
    if (dist[v] < 0) throw DomainError("graph is disconnected, not a gadget");
    if (dist[v] % 4 == 0) out.p.push_back(v);
    else if (dist[v] % 2 == 1) out.q.push_back(v);
    else out.r.push_back(v);
  }
  std::vector<int> p_index(n, -1);
  for (int i = 0; i < static_cast<int>(out.p.size()); ++i) p_index[out.p[i]] = i;
  out.x = Graph(static_cast<int>(out.p.size()));
  // q -> its p neighbour.
  auto p_of_q = [&](int q) {
    if (g.degree(q) != 2) throw DomainError("q vertex without degree 2");
    int found = -1, rs = 0;
    for (int w : g.neighbors(q)) {
      if (p_index[w] >= 0) found = w;
      else if (dist[w] % 4 == 2) ++rs;
    }
    if (found < 0 || rs != 1) throw DomainError("q vertex not between P and R");
    return found;
  };
  for (int r : out.r) {
    const auto& nb = g.neighbors(r);
    if (nb.size() != 2) throw DomainError("r vertex without degree 2");
    int a = p_index[p_of_q(nb[0])], b = p_index[p_of_q(nb[1])];
    if (a == b || out.x.adjacent(a, b)) throw DomainError("r vertices do not encode a simple graph");
    out.x.add_edge(a, b);
  }
  // Explicit isomorphism: p_i -> p[i]; q and r of edge k through the r vertex
  // joining the matching pair.
  GadgetGraph rebuilt = construct_cx(out.x);
  if (rebuilt.graph.order() != n || rebuilt.graph.size() != g.size())
    throw DomainError("vertex or edge count does not match the rebuilt gadget");
  std::vector<int> map(n, -1);
  for (int i = 0; i < out.x.order(); ++i) map[rebuilt.p_of(i)] = out.p[i];
  const auto xe = out.x.edges();
  for (int r : out.r) {
    const auto& nb = g.neighbors(r);
    int qa = nb[0], qb = nb[1];
    int a = p_index[p_of_q(qa)], b = p_index[p_of_q(qb)];
    if (a > b) {
      std::swap(a, b);
      std::swap(qa, qb);
    }
    const int k = static_cast<int>(std::lower_bound(xe.begin(), xe.end(), Edge{a, b}) - xe.begin());
    map[rebuilt.r_of(k)] = r;
    map[rebuilt.q_of(a, k)] = qa;
    map[rebuilt.q_of(b, k)] = qb;
  }
  for (int v : map)
    if (v < 0) throw DomainError("gadget structure incomplete");
  if (relabel(rebuilt.graph, map) != g) throw DomainError("graph is not the gadget of its recovered source");
  out.witness = Permutation(std::move(map));
  return out;
}

/// Throws InputError unless x is connected and not a cycle.
inline void require_gadget_source(const Graph& x, bool allow_cycles) {
  if (x.order() == 0 || !is_connected(x)) throw InputError("source graph must be connected");
  if (!allow_cycles && is_cycle(x)) throw InputError("source graph must not be a cycle");
}

struct AutPreservation {
  bool ok = false;
  std::size_t aut_x = 0;
  std::size_t aut_cx = 0;
  /// Every automorphism of C_X maps P onto P.
  bool preserves_p = false;
  /// Restriction to P is an injective map into Aut(X) that hits all of it.
  bool restriction_bijective = false;
};

/// Compares Aut(C_X) restricted to P with Aut(X) under p_i -> x_i.
inline AutPreservation aut_preservation_check(const Graph& x, const OracleLimits& limits = {},
                                              bool allow_cycles = false) {
  require_gadget_source(x, allow_cycles);
  const GadgetGraph cx = construct_cx(x);
  const PermutationGroup ax = brute_force_aut(x, limits);
  const PermutationGroup ac = brute_force_aut(cx.graph, limits);
  AutPreservation res;
  res.aut_x = ax.order();
  res.aut_cx = ac.order();
  res.preserves_p = true;
  std::vector<Permutation> restricted;
  const int n = x.order();
  for (const auto& pi : ac.elements()) {
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) {
      const int w = pi(cx.p_of(i));
      if (w >= n) res.preserves_p = false;
      image[i] = w < n ? w : 0;
    }
    if (!res.preserves_p) break;
    restricted.emplace_back(std::move(image));
  }
  if (res.preserves_p) {
    std::vector<Permutation> sorted = restricted;
    std::sort(sorted.begin(), sorted.end());
    const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    res.restriction_bijective = injective && sorted == ax.elements();
  }
  res.ok = res.preserves_p && res.restriction_bijective && res.aut_x == res.aut_cx;
  return res;
}

struct Reduction {
  GadgetGraph first;
  GadgetGraph second;
};

/// X_i -> C_{Y_i} with Y_i the incidence graph of X_i.
inline Reduction gi_reduction(const Graph& x1, const Graph& x2, bool allow_cycles = false) {
  require_gadget_source(x1, allow_cycles);
  require_gadget_source(x2, allow_cycles);
  return {construct_cx(incidence_graph(x1)), construct_cx(incidence_graph(x2))};
}

}  // namespace compaut
