#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "compaut/errors.hpp"
#include "compaut/graph.hpp"
#include "compaut/oracles.hpp"
#include "compaut/orientation.hpp"

namespace compaut {

enum class PartitionKind { MaximalModules, Components, CoComponents, Stop };

inline const char* to_string(PartitionKind k) {
  switch (k) {
    case PartitionKind::MaximalModules: return "maximal-modules";
    case PartitionKind::Components: return "components";
    case PartitionKind::CoComponents: return "co-components";
    case PartitionKind::Stop: return "stop";
  }
  return "?";
}

/// Blocks are sorted and ordered by smallest member.
struct ModularPartition {
  std::vector<std::vector<int>> blocks;
  PartitionKind kind = PartitionKind::Stop;
};

/// Smallest module of g containing `seed`: keep absorbing any outside vertex
/// that sees some but not all of the current set.
inline std::vector<int> module_closure(const Graph& g, std::span<const int> seed) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<int> hits(n, 0);
  std::vector<int> members;
  auto absorb = [&](int x) {
    in[x] = 1;
    members.push_back(x);
    for (int y : g.neighbors(x)) ++hits[y];
  };
  for (int v : seed) {
    g.check_vertex(v);
    if (!in[v]) absorb(v);
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (int y = 0; y < n; ++y) {
      if (in[y]) continue;
      if (hits[y] != 0 && hits[y] != static_cast<int>(members.size())) {
        absorb(y);
        grew = true;
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

/// Only trivial modules. Every graph on at most two vertices qualifies.
inline bool is_prime(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int pair[] = {u, v};
      if (static_cast<int>(module_closure(g, pair).size()) < n) return false;
    }
  return true;
}

/// Inclusion-maximal proper modules, for g with g and its complement both
/// connected. The maximal module through v is the union of all proper
/// closures of pairs {v, w}.
inline std::vector<std::vector<int>> maximal_modules(const Graph& g) {
  const int n = g.order();
  std::vector<int> block(n, -1);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < n; ++v) {
    if (block[v] != -1) continue;
    std::vector<char> in(n, 0);
    in[v] = 1;
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      const int pair[] = {v, w};
      auto c = module_closure(g, pair);
      if (static_cast<int>(c.size()) == n) continue;
      for (int x : c) in[x] = 1;
    }
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if (in[x]) members.push_back(x);
    for (int x : members) block[x] = static_cast<int>(out.size());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// One step of Gallai's decomposition: the modular partition chosen for g.
inline ModularPartition decomposition_step(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw InputError("decomposition of the empty graph");
  auto singletons = [&] {
    std::vector<std::vector<int>> b;
    for (int v = 0; v < n; ++v) b.push_back({v});
    return b;
  };
  if (n == 1 || is_degenerate(g)) return {singletons(), PartitionKind::Stop};
  if (auto comps = connected_components(g); comps.size() > 1) {
    return {std::move(comps), PartitionKind::Components};
  }
  if (auto co = connected_components(complement(g)); co.size() > 1) {
    return {std::move(co), PartitionKind::CoComponents};
  }
  auto blocks = maximal_modules(g);
  if (static_cast<int>(blocks.size()) == n) return {std::move(blocks), PartitionKind::Stop};
  return {std::move(blocks), PartitionKind::MaximalModules};
}

/// Contracts every block of a modular partition; vertex i is block i.
inline Graph quotient(const Graph& g, const ModularPartition& p) {
  std::vector<int> owner(g.order(), -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].empty()) throw InputError("empty block in modular partition");
    for (int v : p.blocks[b]) {
      g.check_vertex(v);
      if (owner[v] != -1) throw InputError("blocks overlap at vertex " + std::to_string(v));
      owner[v] = static_cast<int>(b);
    }
    if (!is_module(g, p.blocks[b])) {
      throw InputError("block " + std::to_string(b) + " is not a module");
    }
  }
  for (int v = 0; v < g.order(); ++v)
    if (owner[v] == -1) throw InputError("blocks do not cover vertex " + std::to_string(v));
  const int k = static_cast<int>(p.blocks.size());
  Graph q(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(p.blocks[i].front(), p.blocks[j].front())) q.add_edge(i, j);
  return q;
}

enum class NodeKind { Prime, Complete, Independent, Leaf };

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Prime: return "prime";
    case NodeKind::Complete: return "complete";
    case NodeKind::Independent: return "independent";
    case NodeKind::Leaf: return "leaf";
  }
  return "?";
}

enum class VertexRole { Original, QuotientMarker, AttachmentMarker };

/// A prime or degenerate graph of the decomposition.
struct TreeNode {
  NodeKind kind = NodeKind::Leaf;
  /// Tree vertex ids; node-graph vertex i is members[i].
  std::vector<int> members;
  Graph graph;
  /// For inner nodes: children[i] is the subtree contracted into members[i],
  /// attachments[i] the marker m'_i adjacent to that subtree's root node.
  std::vector<int> children;
  std::vector<int> attachments;
  int parent = -1;
  int parent_slot = -1;
  /// Original vertices of the subtree, sorted.
  std::vector<int> leaves;
  /// Typed-tree canonical code: equal iff the subtrees are isomorphic.
  std::string code;
  /// Leaves listed in a canonical order; for subtrees with equal codes,
  /// position-wise matching of these lists is an isomorphism.
  std::vector<int> canonical_leaves;

  bool inner() const noexcept { return !children.empty(); }
};

struct TreeVertex {
  VertexRole role = VertexRole::Original;
  /// Node the vertex belongs to; for attachment markers, the child node they attach.
  int node = -1;
  int slot = -1;
  /// Other end of the tree edge, -1 for original vertices.
  int tree_partner = -1;
};

/// The modular tree: original vertices 0..n-1 followed by marker vertices,
/// normal edges inside nodes and from each m'_i to its child's root node,
/// and directed tree edges m_i -> m'_i. Node 0 is the root node.
class ModularTree {
 public:
  int original_order() const noexcept { return n_; }
  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  const TreeNode& node(int id) const { return nodes_.at(id); }
  const TreeNode& root() const { return nodes_.front(); }
  const TreeVertex& vertex(int v) const { return vertices_.at(v); }
  bool is_marker(int v) const { return vertices_.at(v).role != VertexRole::Original; }
  const Graph& normal_graph() const noexcept { return normal_; }
  const std::vector<Arc>& tree_edges() const noexcept { return tree_edges_; }

  /// (node, slot) pairs from the root down to the leaf node holding x.
  const std::vector<std::pair<int, int>>& path(int x) const { return paths_.at(x); }

 private:
  friend ModularTree build_modular_tree(const Graph& g);

  int n_ = 0;
  std::vector<TreeNode> nodes_;
  std::vector<TreeVertex> vertices_;
  Graph normal_;
  std::vector<Arc> tree_edges_;
  std::vector<std::vector<std::pair<int, int>>> paths_;
};

namespace detail {

struct ProtoNode {
  NodeKind kind = NodeKind::Leaf;
  std::vector<int> leaves;  // original ids; for leaf nodes, in node-graph order
  Graph graph;
  std::vector<ProtoNode> children;
  std::string code;
  std::vector<int> canonical_leaves;
};

inline std::string join_codes(const std::vector<std::string>& codes) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out += ',';
    out += codes[i];
  }
  return out;
}

inline ProtoNode build_proto(const Graph& g, const std::vector<int>& subset) {
  Graph h = induced_subgraph(g, subset);
  ModularPartition step = decomposition_step(h);
  ProtoNode node;
  if (step.kind == PartitionKind::Stop) {
    node.leaves = subset;
    node.graph = std::move(h);
    const int k = node.graph.order();
    if (k == 1) {
      node.kind = NodeKind::Leaf;
      node.code = "v";
      node.canonical_leaves = subset;
    } else if (is_complete(node.graph)) {
      node.kind = NodeKind::Complete;
      node.code = "K" + std::to_string(k);
      node.canonical_leaves = subset;
    } else if (is_edgeless(node.graph)) {
      node.kind = NodeKind::Independent;
      node.code = "I" + std::to_string(k);
      node.canonical_leaves = subset;
    } else {
      node.kind = NodeKind::Prime;
      CanonicalForm cf = canonical_form(node.graph);
      node.code = "P{" + cf.code + "}";
      for (int pos : cf.order) node.canonical_leaves.push_back(subset[pos]);
    }
    return node;
  }

  for (const auto& block : step.blocks) {
    std::vector<int> members;
    for (int b : block) members.push_back(subset[b]);
    node.children.push_back(build_proto(g, members));
  }
  std::sort(node.children.begin(), node.children.end(),
            [](const ProtoNode& a, const ProtoNode& b) {
              return std::forward_as_tuple(a.leaves.size(), a.code, a.leaves) <
                     std::forward_as_tuple(b.leaves.size(), b.code, b.leaves);
            });
  const int k = static_cast<int>(node.children.size());
  node.graph = Graph(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(node.children[i].leaves.front(), node.children[j].leaves.front()))
        node.graph.add_edge(i, j);
  for (const auto& c : node.children)
    node.leaves.insert(node.leaves.end(), c.leaves.begin(), c.leaves.end());
  std::sort(node.leaves.begin(), node.leaves.end());

  std::vector<std::string> child_codes;
  for (const auto& c : node.children)
    child_codes.push_back(std::to_string(c.leaves.size()) + ":" + c.code);

  if (step.kind == PartitionKind::MaximalModules) {
    node.kind = NodeKind::Prime;
    std::vector<std::string> distinct = child_codes;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> colors;
    for (const auto& c : child_codes)
      colors.push_back(static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin()));
    CanonicalForm cf = canonical_form(node.graph, colors);
    std::vector<std::string> ordered;
    for (int pos : cf.order) {
      ordered.push_back(child_codes[pos]);
      const auto& cl = node.children[pos].canonical_leaves;
      node.canonical_leaves.insert(node.canonical_leaves.end(), cl.begin(), cl.end());
    }
    node.code = "P{" + cf.code + ";" + join_codes(ordered) + "}";
  } else {
    node.kind = step.kind == PartitionKind::Components ? NodeKind::Independent
                                                       : NodeKind::Complete;
    // Children are sorted by (size, code), which is already canonical.
    for (const auto& c : node.children)
      node.canonical_leaves.insert(node.canonical_leaves.end(), c.canonical_leaves.begin(),
                                   c.canonical_leaves.end());
    node.code = std::string(node.kind == NodeKind::Complete ? "C(" : "I(") +
                join_codes(child_codes) + ")";
  }
  return node;
}

}  // namespace detail

/// Gallai's modular decomposition encoded as a modular tree.
inline ModularTree build_modular_tree(const Graph& g) {
  if (g.order() == 0) throw InputError("modular tree of the empty graph");
  std::vector<int> all(g.order());
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  detail::ProtoNode proto = detail::build_proto(g, all);

  ModularTree t;
  t.n_ = g.order();
  t.vertices_.resize(g.order());
  t.paths_.resize(g.order());
  std::vector<Edge> normal;

  // Preorder flattening: quotient markers of a node, then its attachment
  // markers, then the children.
  std::vector<std::pair<int, int>> trail;
  auto flatten = [&](auto&& self, detail::ProtoNode& p, int parent, int parent_slot) -> int {
    const int id = static_cast<int>(t.nodes_.size());
    t.nodes_.emplace_back();
    {
      TreeNode& node = t.nodes_.back();
      node.kind = p.kind;
      node.graph = std::move(p.graph);
      node.parent = parent;
      node.parent_slot = parent_slot;
      node.leaves = p.leaves;
      node.code = std::move(p.code);
      node.canonical_leaves = std::move(p.canonical_leaves);
    }
    if (p.children.empty()) {
      t.nodes_[id].members = p.leaves;
      for (int slot = 0; slot < static_cast<int>(p.leaves.size()); ++slot) {
        int x = p.leaves[slot];
        t.vertices_[x] = {VertexRole::Original, id, slot, -1};
        t.paths_[x] = trail;
        t.paths_[x].emplace_back(id, slot);
      }
    } else {
      const int k = static_cast<int>(p.children.size());
      std::vector<int> markers(k), attach(k);
      for (int i = 0; i < k; ++i) {
        markers[i] = static_cast<int>(t.vertices_.size());
        t.vertices_.push_back({VertexRole::QuotientMarker, id, i, -1});
      }
      for (int i = 0; i < k; ++i) {
        attach[i] = static_cast<int>(t.vertices_.size());
        t.vertices_.push_back({VertexRole::AttachmentMarker, -1, -1, markers[i]});
        t.vertices_[markers[i]].tree_partner = attach[i];
        t.tree_edges_.emplace_back(markers[i], attach[i]);
      }
      t.nodes_[id].members = markers;
      t.nodes_[id].attachments = attach;
      for (int i = 0; i < k; ++i) {
        trail.emplace_back(id, i);
        int child = self(self, p.children[i], id, i);
        trail.pop_back();
        t.nodes_[id].children.push_back(child);
        t.vertices_[attach[i]].node = child;
        for (int r : t.nodes_[child].members) normal.emplace_back(attach[i], r);
      }
    }
    const TreeNode& node = t.nodes_[id];
    for (auto [a, b] : node.graph.edges()) normal.emplace_back(node.members[a], node.members[b]);
    return id;
  };
  flatten(flatten, proto, -1, -1);

  t.normal_ = Graph(static_cast<int>(t.vertices_.size()));
  for (auto [a, b] : normal) t.normal_.add_edge(a, b);
  return t;
}

/// An alternating path x m_1 ... m_k y: interior vertices are markers, the
/// first and last edges are normal, and edges alternate normal/tree.
inline std::optional<std::vector<int>> alternating_path(const ModularTree& t, int x, int y) {
  if (x < 0 || y < 0 || x >= t.vertex_count() || y >= t.vertex_count()) {
    throw InputError("vertex out of range");
  }
  if (t.is_marker(x) || t.is_marker(y)) throw InputError("endpoints must be non-marker vertices");
  if (x == y) throw InputError("endpoints must differ");
  // State: (vertex, whether the next edge must be a tree edge).
  const int nv = t.vertex_count();
  std::vector<int> parent(2 * nv, -2);
  auto key = [&](int v, bool tree_next) { return 2 * v + (tree_next ? 1 : 0); };
  std::deque<int> queue{key(x, false)};
  parent[key(x, false)] = -1;
  while (!queue.empty()) {
    int state = queue.front();
    queue.pop_front();
    int v = state / 2;
    bool tree_next = state % 2;
    if (!tree_next) {
      for (int w : t.normal_graph().neighbors(v)) {
        if (w == y) {
          std::vector<int> path{y};
          for (int s = state; s != -1; s = parent[s]) path.push_back(s / 2);
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (!t.is_marker(w) || parent[key(w, true)] != -2) continue;
        parent[key(w, true)] = state;
        queue.push_back(key(w, true));
      }
    } else {
      int w = t.vertex(v).tree_partner;
      if (w >= 0 && parent[key(w, false)] == -2) {
        parent[key(w, false)] = state;
        queue.push_back(key(w, false));
      }
    }
  }
  return std::nullopt;
}

inline bool alternating_path_adjacent(const ModularTree& t, int x, int y) {
  return alternating_path(t, x, y).has_value();
}

/// The tree as a coloured digraph for oracle isomorphism tests: normal edges
/// become arc pairs, every tree edge m -> m' is subdivided by a vertex of its
/// own colour. Colours: 0 original, 1 quotient marker, 2 attachment marker,
/// 3 tree-edge midpoint.
struct TypedTreeDigraph {
  int n = 0;
  std::vector<Arc> arcs;
  std::vector<int> colors;
};

inline TypedTreeDigraph typed_tree_digraph(const ModularTree& t) {
  TypedTreeDigraph d;
  d.n = t.vertex_count() + static_cast<int>(t.tree_edges().size());
  for (int v = 0; v < t.vertex_count(); ++v) d.colors.push_back(static_cast<int>(t.vertex(v).role));
  for (auto [a, b] : t.normal_graph().edges()) {
    d.arcs.emplace_back(a, b);
    d.arcs.emplace_back(b, a);
  }
  int mid = t.vertex_count();
  for (auto [m, mp] : t.tree_edges()) {
    d.colors.push_back(3);
    d.arcs.emplace_back(m, mid);
    d.arcs.emplace_back(mid, mp);
    ++mid;
  }
  return d;
}

}  // namespace compaut
