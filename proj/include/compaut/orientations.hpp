#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "compaut/group_expr.hpp"
#include "compaut/modular_decomposition.hpp"
#include "compaut/oracles.hpp"
#include "compaut/orientation.hpp"

namespace compaut {

namespace detail {

/// Implication class of the arc u0 -> v0 under Gamma: ab forces ac when
/// b, c are non-adjacent, and ab forces cb when a, c are non-adjacent.
inline std::vector<Arc> forcing_class(const Graph& g, int u0, int v0) {
  const int n = g.order();
  std::vector<char> in(static_cast<std::size_t>(n) * n, 0);
  std::deque<Arc> queue{{u0, v0}};
  in[static_cast<std::size_t>(u0) * n + v0] = 1;
  std::vector<Arc> out;
  auto push = [&](int a, int b) {
    auto& slot = in[static_cast<std::size_t>(a) * n + b];
    if (!slot) {
      slot = 1;
      queue.emplace_back(a, b);
    }
  };
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    out.emplace_back(a, b);
    for (int c : g.neighbors(a))
      if (c != b && !g.adjacent(b, c)) push(a, c);
    for (int c : g.neighbors(b))
      if (c != a && !g.adjacent(a, c)) push(c, b);
  }
  return out;
}

}  // namespace detail

/// The two transitive orientations of a prime comparability graph; the first
/// directs the lexicographically smallest edge (u, v) as u -> v.
inline std::pair<Orientation, Orientation> prime_orientations(const Graph& g,
                                                              const OracleLimits& limits = {}) {
  if (g.size() == 0 || !is_prime(g)) throw InputError("prime_orientations needs a prime graph with an edge");
  auto [u0, v0] = g.edges().front();
  auto arcs = detail::forcing_class(g, u0, v0);
  bool clash = false;
  std::sort(arcs.begin(), arcs.end());
  for (auto [a, b] : arcs)
    if (std::binary_search(arcs.begin(), arcs.end(), Arc{b, a})) clash = true;
  if (clash) throw DomainError("not a comparability graph");
  if (static_cast<int>(arcs.size()) == g.size()) {
    Orientation o(g.order(), std::move(arcs));
    if (is_transitive_relation(o)) return {o, o.reversed()};
    throw DomainError("not a comparability graph");
  }
  // A prime graph has a single implication class; fall back to the oracle.
  auto all = brute_force_transitive_orientations(g, limits);
  if (all.empty()) throw DomainError("not a comparability graph");
  if (all.size() != 2) throw std::logic_error("prime graph with other than two transitive orientations");
  const Orientation& first = all[0].has_arc(u0, v0) ? all[0] : all[1];
  return {first, first.reversed()};
}

/// Per-node choices: prime[j] picks the orientation of the j-th prime node
/// (in node order), complete[j] is a linear order of the local slots of the
/// j-th complete node.
struct OrientationChoice {
  std::vector<int> prime;
  std::vector<std::vector<int>> complete;

  friend bool operator==(const OrientationChoice&, const OrientationChoice&) = default;
};

/// Transitive orientations of a graph through its modular tree.
class TreeOrientations {
 public:
  explicit TreeOrientations(ModularTree t, const OracleLimits& limits = {}) : t_(std::move(t)) {
    for (int id = 0; id < static_cast<int>(t_.nodes().size()); ++id) {
      const TreeNode& node = t_.node(id);
      if (node.kind == NodeKind::Prime) {
        prime_nodes_.push_back(id);
        try {
          orient_.push_back(prime_orientations(node.graph, limits));
        } catch (const DomainError&) {
          comparability_ = false;
          orient_.emplace_back();
        }
      } else if (node.kind == NodeKind::Complete) {
        complete_nodes_.push_back(id);
      }
    }
  }

  const ModularTree& tree() const noexcept { return t_; }
  const std::vector<int>& prime_nodes() const noexcept { return prime_nodes_; }
  const std::vector<int>& complete_nodes() const noexcept { return complete_nodes_; }
  bool comparability() const noexcept { return comparability_; }

  /// Both orientations of the j-th prime node's graph.
  const std::pair<Orientation, Orientation>& prime_pair(std::size_t j) const {
    require_comparability();
    return orient_.at(j);
  }

  /// prime nodes contribute 2, K_k nodes k!, independent nodes 1.
  BigInt count() const {
    require_comparability();
    BigInt r = 1;
    for (std::size_t j = 0; j < prime_nodes_.size(); ++j) r *= 2;
    for (int id : complete_nodes_) r *= factorial(t_.node(id).graph.order());
    return r;
  }

  OrientationChoice first_choice() const {
    OrientationChoice c;
    c.prime.assign(prime_nodes_.size(), 0);
    for (int id : complete_nodes_) {
      std::vector<int> order(t_.node(id).graph.order());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      c.complete.push_back(std::move(order));
    }
    return c;
  }

  /// Odometer step with prime bits most significant and complete-node
  /// permutations least significant; false after the last choice.
  bool next_choice(OrientationChoice& c) const {
    for (std::size_t j = c.complete.size(); j-- > 0;)
      if (std::next_permutation(c.complete[j].begin(), c.complete[j].end())) return true;
    for (std::size_t j = c.prime.size(); j-- > 0;) {
      if (c.prime[j] == 0) {
        c.prime[j] = 1;
        return true;
      }
      c.prime[j] = 0;
    }
    return false;
  }

  /// Orients every edge xy by the node where the root paths of x and y split.
  Orientation compose(const OrientationChoice& c) const {
    require_comparability();
    validate(c);
    const int n = t_.original_order();
    std::vector<int> prime_index(t_.nodes().size(), -1), complete_index(t_.nodes().size(), -1);
    for (std::size_t j = 0; j < prime_nodes_.size(); ++j) prime_index[prime_nodes_[j]] = static_cast<int>(j);
    std::vector<std::vector<int>> pos(complete_nodes_.size());
    for (std::size_t j = 0; j < complete_nodes_.size(); ++j) {
      complete_index[complete_nodes_[j]] = static_cast<int>(j);
      pos[j].resize(c.complete[j].size());
      for (std::size_t p = 0; p < c.complete[j].size(); ++p) pos[j][c.complete[j][p]] = static_cast<int>(p);
    }
    std::vector<Arc> arcs;
    for (int x = 0; x < n; ++x) {
      const auto& px = t_.path(x);
      for (int y = x + 1; y < n; ++y) {
        const auto& py = t_.path(y);
        std::size_t d = 0;
        while (px[d] == py[d]) ++d;
        const int id = px[d].first;
        const int sx = px[d].second, sy = py[d].second;
        bool forward = false;
        if (prime_index[id] >= 0) {
          const auto& pair = orient_[prime_index[id]];
          const Orientation& o = c.prime[prime_index[id]] == 0 ? pair.first : pair.second;
          if (!o.has_arc(sx, sy) && !o.has_arc(sy, sx)) continue;
          forward = o.has_arc(sx, sy);
        } else if (complete_index[id] >= 0) {
          const auto& p = pos[complete_index[id]];
          forward = p[sx] < p[sy];
        } else {
          continue;
        }
        if (forward) arcs.emplace_back(x, y);
        else arcs.emplace_back(y, x);
      }
    }
    return Orientation(n, std::move(arcs));
  }

  /// Lazy stream over all transitive orientations in choice order.
  class Stream {
   public:
    explicit Stream(const TreeOrientations& owner) : owner_(&owner), choice_(owner.first_choice()) {
      owner.require_comparability();
    }
    std::optional<Orientation> next() {
      if (done_) return std::nullopt;
      Orientation o = owner_->compose(choice_);
      done_ = !owner_->next_choice(choice_);
      return o;
    }

   private:
    const TreeOrientations* owner_;
    OrientationChoice choice_;
    bool done_ = false;
  };

  Stream stream() const { return Stream(*this); }

 private:
  void require_comparability() const {
    if (!comparability_) throw DomainError("not a comparability graph");
  }

  void validate(const OrientationChoice& c) const {
    if (c.prime.size() != prime_nodes_.size()) throw InputError("wrong number of prime-node choices");
    for (int b : c.prime)
      if (b != 0 && b != 1) throw InputError("prime-node choice must be 0 or 1");
    if (c.complete.size() != complete_nodes_.size()) throw InputError("wrong number of complete-node choices");
    for (std::size_t j = 0; j < complete_nodes_.size(); ++j) {
      std::vector<int> sorted = c.complete[j];
      std::sort(sorted.begin(), sorted.end());
      const int k = t_.node(complete_nodes_[j]).graph.order();
      bool ok = static_cast<int>(sorted.size()) == k;
      for (int i = 0; ok && i < k; ++i) ok = sorted[i] == i;
      if (!ok) throw InputError("complete-node choice is not a permutation of its slots");
    }
  }

  ModularTree t_;
  std::vector<int> prime_nodes_;
  std::vector<int> complete_nodes_;
  std::vector<std::pair<Orientation, Orientation>> orient_;
  bool comparability_ = true;
};

inline bool is_comparability(const Graph& g, const OracleLimits& limits = {}) {
  if (g.order() == 0) return true;
  return TreeOrientations(build_modular_tree(g), limits).comparability();
}

inline Orientation compose_orientation(const ModularTree& t, const OrientationChoice& c,
                                       const OracleLimits& limits = {}) {
  return TreeOrientations(t, limits).compose(c);
}

inline BigInt count_orientations(const ModularTree& t, const OracleLimits& limits = {}) {
  return TreeOrientations(t, limits).count();
}

/// Every transitive orientation, materialized; refuses above `max_count`.
inline std::vector<Orientation> all_transitive_orientations(const Graph& g, std::size_t max_count,
                                                            const OracleLimits& limits = {}) {
  if (g.order() == 0) return {Orientation()};
  TreeOrientations to(build_modular_tree(g), limits);
  const BigInt total = to.count();
  if (total > max_count)
    throw OracleBoundError("orientations", static_cast<long long>(max_count),
                           total > 1'000'000'000'000LL ? -1 : total.convert_to<long long>());
  std::vector<Orientation> out;
  auto s = to.stream();
  while (auto o = s.next()) out.push_back(std::move(*o));
  return out;
}

inline void check_automorphism(const Graph& g, const Permutation& pi) {
  if (pi.degree() != g.order()) throw InputError("permutation degree does not match the graph");
  for (auto [u, v] : g.edges())
    if (!g.adjacent(pi(u), pi(v))) throw InputError("permutation is not an automorphism");
}

/// pi(O): x O y iff pi(x) pi(O) pi(y).
inline Orientation act(const Graph& g, const Permutation& pi, const Orientation& o) {
  check_automorphism(g, pi);
  check_covers(g, o);
  std::vector<Arc> arcs;
  arcs.reserve(o.arcs().size());
  for (auto [u, v] : o.arcs()) arcs.emplace_back(pi(u), pi(v));
  return Orientation(g.order(), std::move(arcs));
}

/// Automorphisms of g that fix o.
inline PermutationGroup orientation_stabilizer(const Graph& g, const Orientation& o,
                                               const OracleLimits& limits = {}) {
  check_covers(g, o);
  std::vector<Permutation> keep;
  const PermutationGroup aut = brute_force_aut(g, limits);
  for (const auto& pi : aut.elements())
    if (act(g, pi, o) == o) keep.push_back(pi);
  return PermutationGroup::from_elements(g.order(), std::move(keep));
}

/// Automorphisms of the poset (V, o), computed directly on the digraph.
inline PermutationGroup poset_automorphisms(const Orientation& o, const OracleLimits& limits = {}) {
  return brute_force_digraph_aut(o.vertex_count(), o.arcs(), limits);
}

}  // namespace compaut
