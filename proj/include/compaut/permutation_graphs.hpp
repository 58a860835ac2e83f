#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "compaut/enumerate.hpp"
#include "compaut/linear_orders.hpp"
#include "compaut/modular_decomposition.hpp"
#include "compaut/oracles.hpp"
#include "compaut/orientations.hpp"

namespace compaut {

/// Comparability graph whose complement is a comparability graph too.
inline bool is_permutation_graph(const Graph& g, const OracleLimits& limits = {}) {
  return is_comparability(g, limits) && is_comparability(complement(g), limits);
}

struct OrientationPair {
  Orientation o;      // transitive orientation of X
  Orientation o_bar;  // transitive orientation of the complement

  friend auto operator<=>(const OrientationPair&, const OrientationPair&) = default;
  friend bool operator==(const OrientationPair&, const OrientationPair&) = default;
};

struct LinearOrderPair {
  Chain l1;
  Chain l2;

  friend bool operator==(const LinearOrderPair&, const LinearOrderPair&) = default;
};

namespace detail {

/// Topological order of a tournament; empty if it has a cycle.
inline Chain tournament_order(int n, const std::vector<Arc>& arcs) {
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (auto [u, v] : arcs) {
    out[u].push_back(v);
    ++indeg[v];
  }
  Chain order;
  std::vector<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<>());
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (static_cast<int>(order.size()) != n) return {};
  return order;
}

inline void check_pair(const Graph& g, const OrientationPair& p) {
  if (!is_transitive(g, p.o)) throw InputError("O is not a transitive orientation of the graph");
  if (!is_transitive(complement(g), p.o_bar))
    throw InputError("O-bar is not a transitive orientation of the complement");
}

}  // namespace detail

/// L1 = O u O-bar and L2 = O u reversed(O-bar).
inline LinearOrderPair build_representation(const Graph& g, const OrientationPair& p) {
  detail::check_pair(g, p);
  const int n = g.order();
  std::vector<Arc> a1 = p.o.arcs(), a2 = p.o.arcs();
  for (auto [u, v] : p.o_bar.arcs()) {
    a1.emplace_back(u, v);
    a2.emplace_back(v, u);
  }
  LinearOrderPair out{detail::tournament_order(n, a1), detail::tournament_order(n, a2)};
  if (n > 0 && (out.l1.empty() || out.l2.empty()))
    throw std::logic_error("union of transitive orientations is cyclic");
  return out;
}

/// Pairs u, v ordered the same way in both chains.
inline Graph double_comparability_graph(const LinearOrderPair& lp) {
  std::array<Chain, 2> chains{lp.l1, lp.l2};
  return chain_intersection_graph(static_cast<int>(lp.l1.size()), chains);
}

/// Every pair (O, O-bar), O-pairs outer in enumeration order.
inline std::vector<OrientationPair> all_orientation_pairs(const Graph& g, std::size_t max_pairs,
                                                          const OracleLimits& limits = {}) {
  auto os = all_transitive_orientations(g, max_pairs, limits);
  auto obs = all_transitive_orientations(complement(g), max_pairs, limits);
  if (os.size() * obs.size() > max_pairs)
    throw OracleBoundError("orientation pairs", static_cast<long long>(max_pairs),
                           static_cast<long long>(os.size() * obs.size()));
  std::vector<OrientationPair> out;
  for (const auto& o : os)
    for (const auto& ob : obs) out.push_back({o, ob});
  return out;
}

struct PairOrbits {
  std::vector<OrientationPair> pairs;
  /// Orbits as sorted index lists into `pairs`, ordered by smallest index.
  std::vector<std::vector<int>> orbits;
  std::size_t aut_order = 0;
  /// No nonidentity automorphism fixes a pair.
  bool semiregular = true;
};

namespace detail {

/// Orientations of a fixed graph as bitmasks over g.edges() (bit set: v -> u).
struct EdgeCoder {
  std::vector<Edge> edges;
  std::map<Edge, int> index;

  explicit EdgeCoder(const Graph& g) : edges(g.edges()) {
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) index[edges[k]] = k;
  }
  std::uint64_t encode(const Orientation& o) const {
    std::uint64_t m = 0;
    for (auto [u, v] : o.arcs())
      if (u > v) m |= std::uint64_t{1} << index.at({v, u});
    return m;
  }
  /// For pi: target edge index and whether the direction flips.
  std::vector<std::pair<int, bool>> action(const Permutation& pi) const {
    std::vector<std::pair<int, bool>> a;
    for (auto [u, v] : edges) {
      int x = pi(u), y = pi(v);
      a.emplace_back(index.at({std::min(x, y), std::max(x, y)}), x > y);
    }
    return a;
  }
  static std::uint64_t apply(const std::vector<std::pair<int, bool>>& a, std::uint64_t m) {
    std::uint64_t r = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      bool bit = ((m >> k) & 1u) != a[k].second;
      if (bit) r |= std::uint64_t{1} << a[k].first;
    }
    return r;
  }
};

}  // namespace detail

/// Orbits of Aut(X) acting simultaneously on (O, O-bar).
inline PairOrbits pair_action_orbits(const Graph& g, std::size_t max_pairs = 100'000,
                                     const OracleLimits& limits = {}) {
  PairOrbits res;
  res.pairs = all_orientation_pairs(g, max_pairs, limits);
  const Graph gc = complement(g);
  if (g.size() > 63 || gc.size() > 63) throw OracleBoundError("edges", 63, std::max(g.size(), gc.size()));
  detail::EdgeCoder ce(g), cc(gc);
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> id;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> code;
  for (int i = 0; i < static_cast<int>(res.pairs.size()); ++i) {
    code.emplace_back(ce.encode(res.pairs[i].o), cc.encode(res.pairs[i].o_bar));
    id[code.back()] = i;
  }
  const PermutationGroup aut = brute_force_aut(g, limits);
  res.aut_order = aut.order();
  std::vector<int> rep(res.pairs.size());
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  for (const auto& pi : aut.elements()) {
    const auto ae = ce.action(pi), ac = cc.action(pi);
    const bool identity = pi.is_identity();
    for (int i = 0; i < static_cast<int>(code.size()); ++i) {
      auto image = std::make_pair(detail::EdgeCoder::apply(ae, code[i].first),
                                  detail::EdgeCoder::apply(ac, code[i].second));
      int j = id.at(image);
      if (j == i && !identity) res.semiregular = false;
      rep[find(i)] = find(j);
    }
  }
  std::map<int, int> slot;
  for (int i = 0; i < static_cast<int>(code.size()); ++i) {
    int r = find(i);
    auto [it, fresh] = slot.emplace(r, static_cast<int>(res.orbits.size()));
    if (fresh) res.orbits.emplace_back();
    res.orbits[it->second].push_back(i);
  }
  return res;
}

/// Geometric type of an involution of a prime permutation graph, read off
/// the canonical representation (L1, L2) drawn on two horizontal lines.
enum class Involution {
  Rotation,    // r: reverses O only
  Horizontal,  // f': reverses O-bar only (swaps the two lines)
  Vertical,    // f: reverses both (mirrors each line)
};

enum class SymmetrySubgroup { Trivial, Z2Horizontal, Z2Vertical, Z2Rotation, Z2xZ2 };

inline const char* to_string(Involution i) {
  switch (i) {
    case Involution::Rotation: return "rotation";
    case Involution::Horizontal: return "horizontal";
    case Involution::Vertical: return "vertical";
  }
  return "?";
}

inline const char* to_string(SymmetrySubgroup s) {
  switch (s) {
    case SymmetrySubgroup::Trivial: return "1";
    case SymmetrySubgroup::Z2Horizontal: return "Z2-horizontal";
    case SymmetrySubgroup::Z2Vertical: return "Z2-vertical";
    case SymmetrySubgroup::Z2Rotation: return "Z2-rotation";
    case SymmetrySubgroup::Z2xZ2: return "Z2xZ2";
  }
  return "?";
}

struct PrimeSymmetryClass {
  SymmetrySubgroup subgroup = SymmetrySubgroup::Trivial;
  std::size_t aut_order = 1;
  std::vector<std::pair<Permutation, Involution>> involutions;
  int orbits4 = 0;
  /// Size-2 orbits by the involution fixing them pointwise (indexed by
  /// Involution), and size-2 orbits with trivial stabilizer.
  std::array<int, 3> orbits2_by_stabilizer{0, 0, 0};
  int orbits2_free = 0;
  int orbits1 = 0;
  /// Canonical pair the labels refer to.
  OrientationPair canonical;
};

/// Aut of a prime permutation graph as a subgroup of the symmetries of its
/// representation.
inline PrimeSymmetryClass prime_symmetry_class(const Graph& g, const OracleLimits& limits = {}) {
  if (g.order() == 0 || !is_prime(g)) throw InputError("graph is not prime");
  if (!is_permutation_graph(g, limits)) throw InputError("graph is not a permutation graph");
  PrimeSymmetryClass c;
  const Graph gc = complement(g);
  auto first = [&](const Graph& h) {
    return h.size() == 0 ? Orientation(h.order(), {}) : prime_orientations(h, limits).first;
  };
  c.canonical = {first(g), first(gc)};
  const PermutationGroup aut = brute_force_aut(g, limits);
  c.aut_order = aut.order();
  std::vector<Permutation> nonid;
  for (const auto& pi : aut.elements()) {
    if (pi.is_identity()) continue;
    if (pi.element_order() != 2) throw std::logic_error("prime permutation graph with an element of order > 2");
    const bool rev_o = act(g, pi, c.canonical.o) == c.canonical.o.reversed();
    const bool rev_ob = act(gc, pi, c.canonical.o_bar) == c.canonical.o_bar.reversed();
    if (!rev_o && !rev_ob) throw std::logic_error("automorphism fixes an orientation pair");
    Involution kind = rev_o && rev_ob ? Involution::Vertical
                      : rev_o         ? Involution::Rotation
                                      : Involution::Horizontal;
    c.involutions.emplace_back(pi, kind);
    nonid.push_back(pi);
  }
  if (c.aut_order == 1) c.subgroup = SymmetrySubgroup::Trivial;
  else if (c.aut_order == 4) c.subgroup = SymmetrySubgroup::Z2xZ2;
  else if (c.aut_order == 2) {
    switch (c.involutions.front().second) {
      case Involution::Rotation: c.subgroup = SymmetrySubgroup::Z2Rotation; break;
      case Involution::Horizontal: c.subgroup = SymmetrySubgroup::Z2Horizontal; break;
      case Involution::Vertical: c.subgroup = SymmetrySubgroup::Z2Vertical; break;
    }
  } else {
    throw std::logic_error("prime permutation graph with Aut of order other than 1, 2, 4");
  }
  for (const auto& orbit : aut.orbits()) {
    if (orbit.size() == 1) ++c.orbits1;
    else if (orbit.size() == 4) ++c.orbits4;
    else if (orbit.size() == 2) {
      int stab = -1;
      for (const auto& [pi, kind] : c.involutions)
        if (pi(orbit.front()) == orbit.front()) stab = static_cast<int>(kind);
      if (stab < 0) ++c.orbits2_free;
      else ++c.orbits2_by_stabilizer[stab];
    } else {
      throw std::logic_error("orbit of size other than 1, 2, 4");
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Closure gadgets.

/// Smallest asymmetric prime permutation graph, first in canonical order.
inline Graph asymmetric_spine() {
  return Graph::from_edges(6, {{0, 5}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

/// Smallest prime permutation graph with Aut = Z2^2 acting with an orbit of
/// size 4 and size-2 orbits of two different stabilizer types.
inline Graph rectangle_spine_graph() {
  return Graph::from_edges(8, {{0, 4}, {0, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 6},
                               {3, 5}, {3, 7}, {4, 5}, {4, 7}, {5, 6}, {6, 7}});
}

struct RectangleSpine {
  Graph graph;
  std::array<int, 4> corners{};  // the orbit of size 4
  std::array<int, 2> side_a{};   // size-2 orbit with the smaller stabilizer type
  std::array<int, 2> side_b{};   // size-2 orbit with the other stabilizer type
};

inline bool is_rectangle_spine(const PrimeSymmetryClass& c) {
  int types = 0;
  for (int k : c.orbits2_by_stabilizer) types += k > 0;
  return c.subgroup == SymmetrySubgroup::Z2xZ2 && c.orbits4 >= 1 && types >= 2;
}

/// Orbit roles of a rectangle spine graph.
inline RectangleSpine rectangle_roles(const Graph& g, const OracleLimits& limits = {}) {
  PrimeSymmetryClass c = prime_symmetry_class(g, limits);
  if (!is_rectangle_spine(c)) throw InputError("not a rectangle spine");
  RectangleSpine s;
  s.graph = g;
  const PermutationGroup aut = brute_force_aut(g, limits);
  std::vector<std::pair<int, std::vector<int>>> sides;
  bool corners_set = false;
  for (const auto& orbit : aut.orbits()) {
    if (orbit.size() == 4 && !corners_set) {
      std::copy(orbit.begin(), orbit.end(), s.corners.begin());
      corners_set = true;
    } else if (orbit.size() == 2) {
      for (const auto& [pi, kind] : c.involutions)
        if (pi(orbit.front()) == orbit.front()) sides.emplace_back(static_cast<int>(kind), orbit);
    }
  }
  std::stable_sort(sides.begin(), sides.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  s.side_a = {sides.front().second[0], sides.front().second[1]};
  for (const auto& [kind, orbit] : sides)
    if (kind != sides.front().first) {
      s.side_b = {orbit[0], orbit[1]};
      break;
    }
  return s;
}

inline RectangleSpine rectangle_spine() { return rectangle_roles(rectangle_spine_graph()); }

/// First graph in nonisomorphic_graphs order (n ascending) that is prime,
/// a permutation graph and satisfies `pred` on its symmetry class.
template <typename Pred>
std::optional<Graph> find_prime_permutation_graph(int max_n, Pred pred) {
  for (int n = 4; n <= max_n; ++n)
    for (const Graph& g : nonisomorphic_graphs(n)) {
      if (!is_connected(g) || !is_connected(complement(g)) || !is_prime(g)) continue;
      if (!is_permutation_graph(g)) continue;
      if (pred(prime_symmetry_class(g))) return g;
    }
  return std::nullopt;
}

inline std::optional<Graph> find_asymmetric_spine(int max_n) {
  return find_prime_permutation_graph(max_n, [](const PrimeSymmetryClass& c) { return c.aut_order == 1; });
}

inline std::optional<Graph> find_rectangle_spine(int max_n) {
  return find_prime_permutation_graph(max_n, is_rectangle_spine);
}

namespace detail {

inline void require_permutation_input(const Graph& g) {
  if (g.order() == 0) throw InputError("gadget input must be non-empty");
  if (!is_permutation_graph(g)) throw InputError("gadget input is not a permutation graph");
}

}  // namespace detail

/// Aut = Aut(x1) x Aut(x2): x1 and x2 substituted into two vertices of the
/// asymmetric spine.
inline Graph gadget_product(const Graph& x1, const Graph& x2) {
  detail::require_permutation_input(x1);
  detail::require_permutation_input(x2);
  const Graph spine = asymmetric_spine();
  std::vector<Graph> parts(spine.order(), Graph(1));
  parts[0] = x1;
  parts[1] = x2;
  return substitute(spine, parts);
}

/// Aut = Aut(y) wr S_k: k disjoint copies of a connected y.
inline Graph gadget_wreath(const Graph& y, int k) {
  detail::require_permutation_input(y);
  if (!is_connected(y)) throw InputError("wreath gadget needs a connected graph");
  if (k < 1) throw InputError("wreath gadget needs k >= 1");
  Graph out(0);
  for (int i = 0; i < k; ++i) out = disjoint_union(out, y);
  return out;
}

/// Aut = (Aut(x1)^4 x Aut(x2)^2 x Aut(x3)^2) x| Z2^2: x1 substituted into the
/// spine's 4-orbit, x2 and x3 into its two 2-orbits.
inline Graph gadget_rectangle(const Graph& x1, const Graph& x2, const Graph& x3) {
  detail::require_permutation_input(x1);
  detail::require_permutation_input(x2);
  detail::require_permutation_input(x3);
  const RectangleSpine s = rectangle_spine();
  std::vector<Graph> parts(s.graph.order(), Graph(1));
  for (int v : s.corners) parts[v] = x1;
  for (int v : s.side_a) parts[v] = x2;
  for (int v : s.side_b) parts[v] = x3;
  return substitute(s.graph, parts);
}

}  // namespace compaut
