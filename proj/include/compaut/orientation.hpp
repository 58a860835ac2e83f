#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "compaut/graph.hpp"

namespace compaut {

using Arc = std::pair<int, int>;

/// A direction for every edge of some graph, stored as sorted arcs (u -> v).
class Orientation {
 public:
  Orientation() = default;
  Orientation(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    std::sort(arcs_.begin(), arcs_.end());
  }

  int vertex_count() const noexcept { return n_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  bool has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
  }

  Orientation reversed() const {
    std::vector<Arc> rev;
    rev.reserve(arcs_.size());
    for (auto [u, v] : arcs_) rev.emplace_back(v, u);
    return Orientation(n_, std::move(rev));
  }

  /// Dense 0/1 matrix with entry [u*n+v] set for every arc u -> v.
  std::vector<std::uint8_t> matrix() const {
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n_) * n_, 0);
    for (auto [u, v] : arcs_) m[static_cast<std::size_t>(u) * n_ + v] = 1;
    return m;
  }

  friend auto operator<=>(const Orientation&, const Orientation&) = default;
  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
};

/// Throws InputError unless `o` gives each edge of `g` exactly one direction
/// and has no arcs on non-edges.
inline void check_covers(const Graph& g, const Orientation& o) {
  if (o.vertex_count() != g.order()) throw InputError("orientation vertex count mismatch");
  if (static_cast<int>(o.arcs().size()) != g.size()) {
    throw InputError("orientation does not cover the edge set exactly once");
  }
  std::vector<char> used(static_cast<std::size_t>(g.order()) * g.order(), 0);
  for (auto [u, v] : o.arcs()) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
      throw InputError("orientation has an arc on a non-edge");
    }
    int a = std::min(u, v), b = std::max(u, v);
    if (used[static_cast<std::size_t>(a) * g.order() + b]) {
      throw InputError("orientation directs an edge twice");
    }
    used[static_cast<std::size_t>(a) * g.order() + b] = 1;
  }
}

/// x -> y and y -> z force x -> z. Assumes the arcs come from a simple graph.
inline bool is_transitive_relation(const Orientation& o) {
  const int n = o.vertex_count();
  const auto m = o.matrix();
  for (auto [x, y] : o.arcs())
    for (int z = 0; z < n; ++z)
      if (m[static_cast<std::size_t>(y) * n + z] && !m[static_cast<std::size_t>(x) * n + z])
        return false;
  return true;
}

inline bool is_transitive(const Graph& g, const Orientation& o) {
  check_covers(g, o);
  return is_transitive_relation(o);
}

/// Orientation of `g` encoded by a bitmask over g.edges(): bit k clear
/// directs the k-th edge (u, v), u < v, as u -> v.
inline Orientation orientation_from_mask(const Graph& g, std::uint64_t mask) {
  std::vector<Arc> arcs;
  int k = 0;
  for (auto [u, v] : g.edges()) {
    if ((mask >> k) & 1u) arcs.emplace_back(v, u);
    else arcs.emplace_back(u, v);
    ++k;
  }
  return Orientation(g.order(), std::move(arcs));
}

}  // namespace compaut
