#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "compaut/group_expr.hpp"
#include "compaut/modular_decomposition.hpp"
#include "compaut/oracles.hpp"

namespace compaut {

struct ColoredGraph {
  Graph graph;
  std::vector<int> colors;
};

/// Node graph of `node_id` with each marker coloured by the isomorphism class
/// of its child subtree (colour ids are ranks of the subtree codes). Leaf
/// nodes come back with a single colour.
inline ColoredGraph subtree_isomorphism_classes(const ModularTree& t, int node_id = 0) {
  const TreeNode& node = t.node(node_id);
  ColoredGraph out{node.graph, std::vector<int>(node.graph.order(), 0)};
  if (!node.inner()) return out;
  std::vector<std::string> codes;
  for (int c : node.children)
    codes.push_back(std::to_string(t.node(c).leaves.size()) + ":" + t.node(c).code);
  std::vector<std::string> distinct = codes;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t i = 0; i < codes.size(); ++i)
    out.colors[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), codes[i]) -
                                     distinct.begin());
  return out;
}

inline PermutationGroup color_preserving_aut(const ColoredGraph& r, const OracleLimits& limits = {}) {
  if (r.colors.size() != static_cast<std::size_t>(r.graph.order()))
    throw InputError("colouring does not cover the vertex set");
  return colored_aut(r.graph, r.colors, limits);
}

/// Which assembly rule produced a node's group.
enum class AssemblyCase {
  Point,             // single vertex
  DegenerateLeaf,    // K_k or its complement: S_k
  DegenerateInner,   // degenerate root: product of wreath products per colour class
  PrimeTrivial,      // Aut_c(R) = 1: direct product of the children
  PrimeZ2,           // |Aut_c(R)| = 2
  PrimeZ22,          // Aut_c(R) = Z2^2 with at most two stabilizer types on 2-orbits
  PrimeOpaque,       // outside the grammar
};

inline const char* to_string(AssemblyCase c) {
  switch (c) {
    case AssemblyCase::Point: return "point";
    case AssemblyCase::DegenerateLeaf: return "degenerate-leaf";
    case AssemblyCase::DegenerateInner: return "degenerate-inner";
    case AssemblyCase::PrimeTrivial: return "prime-trivial";
    case AssemblyCase::PrimeZ2: return "prime-z2";
    case AssemblyCase::PrimeZ22: return "prime-z2xz2";
    case AssemblyCase::PrimeOpaque: return "prime-opaque";
  }
  return "?";
}

struct AssemblyRecord {
  int node = -1;
  AssemblyCase rule = AssemblyCase::Point;
};

struct AutTreeResult {
  GroupExpr expr = GroupExpr::trivial();
  /// Acts on the original vertices 0..n-1; generators only.
  PermutationGroup group;
  BigInt order = 1;
  /// One record per node, in node order.
  std::vector<AssemblyRecord> assembly;
};

namespace detail {

/// Group of a node graph on its k member slots, given per-slot expressions.
/// `elements` is the full (colour-preserving) automorphism group of the node
/// graph, as permutations of slots.
inline std::pair<GroupExpr, AssemblyCase> classify_prime(const std::vector<Permutation>& elements,
                                                         const std::vector<GroupExpr>& slot_expr,
                                                         const BigInt& node_order) {
  const int k = static_cast<int>(slot_expr.size());
  auto product_of = [&](const std::vector<int>& slots) {
    std::vector<GroupExpr> fs;
    for (int s : slots) fs.push_back(slot_expr[s]);
    return GroupExpr::direct_product(std::move(fs)).normalized();
  };
  std::vector<Permutation> nonid;
  for (const auto& e : elements)
    if (!e.is_identity()) nonid.push_back(e);
  if (nonid.empty()) {
    std::vector<int> all(k);
    for (int i = 0; i < k; ++i) all[i] = i;
    return {product_of(all), AssemblyCase::PrimeTrivial};
  }
  for (const auto& e : nonid)
    if (e.element_order() != 2) return {GroupExpr::opaque(node_order), AssemblyCase::PrimeOpaque};

  if (nonid.size() == 1) {
    const Permutation& tau = nonid.front();
    std::vector<int> moved, fixed;
    for (int i = 0; i < k; ++i) {
      if (tau(i) == i) fixed.push_back(i);
      else if (i < tau(i)) moved.push_back(i);
    }
    std::vector<GroupExpr> fs{GroupExpr::wreath(product_of(moved), 2), product_of(fixed)};
    return {GroupExpr::direct_product(std::move(fs)).normalized(), AssemblyCase::PrimeZ2};
  }
  if (nonid.size() != 3) return {GroupExpr::opaque(node_order), AssemblyCase::PrimeOpaque};

  // Z2^2. Orbits and, for each orbit of size 2, the involution fixing it pointwise.
  std::vector<int> orbit4, fixed;
  std::vector<std::pair<int, int>> orbit2;  // (smallest slot, index in nonid of its stabilizer)
  std::vector<char> seen(k, 0);
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    std::set<int> orb{i};
    for (const auto& e : nonid) orb.insert(e(i));
    for (int j : orb) seen[j] = 1;
    if (orb.size() == 1) fixed.push_back(i);
    else if (orb.size() == 4) orbit4.push_back(i);
    else {
      int stab = -1;
      for (int s = 0; s < 3; ++s)
        if (nonid[s](i) == i) stab = s;
      orbit2.emplace_back(i, stab);
    }
  }
  std::set<int> types;
  for (auto [slot, s] : orbit2) types.insert(s);
  if (types.size() == 3) return {GroupExpr::opaque(node_order), AssemblyCase::PrimeOpaque};
  // The involution b stabilizes the G2 orbits; the other type goes to G3.
  const int b = types.empty() ? 0 : *types.begin();
  std::vector<int> g2, g3;
  for (auto [slot, s] : orbit2) (s == b ? g2 : g3).push_back(slot);
  return {GroupExpr::semidirect_z22(product_of(orbit4), product_of(g2), product_of(g3),
                                    product_of(fixed))
              .normalized(),
          AssemblyCase::PrimeZ22};
}

struct NodeGroup {
  GroupExpr expr = GroupExpr::trivial();
  std::vector<Permutation> generators;
  BigInt order = 1;
};

inline NodeGroup node_group(const ModularTree& t, int id, const OracleLimits& limits,
                            std::vector<AssemblyRecord>& records) {
  const TreeNode& node = t.node(id);
  const int n = t.original_order();
  const int k = node.graph.order();
  NodeGroup out;
  if (!node.inner()) {
    if (k == 1) {
      records[id] = {id, AssemblyCase::Point};
      return out;
    }
    if (node.kind != NodeKind::Prime) {
      records[id] = {id, AssemblyCase::DegenerateLeaf};
      out.expr = GroupExpr::sym(k);
      out.order = factorial(k);
      for (int i = 0; i + 1 < k; ++i)
        out.generators.push_back(Permutation::transposition(n, node.members[i], node.members[i + 1]));
      return out;
    }
    PermutationGroup aut = brute_force_aut(node.graph, limits);
    out.order = aut.order();
    for (const auto& g : aut.generators()) {
      std::vector<int> image(n);
      for (int v = 0; v < n; ++v) image[v] = v;
      for (int i = 0; i < k; ++i) image[node.members[i]] = node.members[g(i)];
      out.generators.emplace_back(std::move(image));
    }
    auto [expr, rule] = classify_prime(aut.elements(), std::vector<GroupExpr>(k, GroupExpr::trivial()),
                                       out.order);
    out.expr = std::move(expr);
    records[id] = {id, rule};
    return out;
  }

  std::vector<NodeGroup> kids;
  for (int c : node.children) kids.push_back(node_group(t, c, limits, records));
  ColoredGraph r = subtree_isomorphism_classes(t, id);

  // Lift of a slot permutation tau: child i's canonical leaves go position-wise
  // to child tau(i)'s canonical leaves.
  auto lift = [&](const Permutation& tau) {
    std::vector<int> image(n);
    for (int v = 0; v < n; ++v) image[v] = v;
    for (int i = 0; i < k; ++i) {
      const auto& from = t.node(node.children[i]).canonical_leaves;
      const auto& to = t.node(node.children[tau(i)]).canonical_leaves;
      for (std::size_t j = 0; j < from.size(); ++j) image[from[j]] = to[j];
    }
    return Permutation(std::move(image));
  };

  for (const auto& kg : kids) {
    out.generators.insert(out.generators.end(), kg.generators.begin(), kg.generators.end());
    out.order *= kg.order;
  }
  std::vector<GroupExpr> slot_expr;
  for (const auto& kg : kids) slot_expr.push_back(kg.expr);

  if (node.kind != NodeKind::Prime) {
    // Colour classes are contiguous: children are sorted by (size, code).
    std::vector<GroupExpr> factors;
    for (int i = 0; i < k;) {
      int j = i;
      while (j < k && r.colors[j] == r.colors[i]) ++j;
      const int len = j - i;
      factors.push_back(GroupExpr::wreath(slot_expr[i], len));
      out.order *= factorial(len);
      for (int s = i; s + 1 < j; ++s) out.generators.push_back(lift(Permutation::transposition(k, s, s + 1)));
      i = j;
    }
    out.expr = GroupExpr::direct_product(std::move(factors)).normalized();
    records[id] = {id, AssemblyCase::DegenerateInner};
    return out;
  }

  PermutationGroup autc = color_preserving_aut(r, limits);
  out.order *= autc.order();
  for (const auto& g : autc.generators()) out.generators.push_back(lift(g));
  auto [expr, rule] = classify_prime(autc.elements(), slot_expr, out.order);
  out.expr = std::move(expr);
  records[id] = {id, rule};
  return out;
}

}  // namespace detail

/// Aut(X) assembled bottom-up over the modular tree: children's groups
/// combined with the colour-preserving automorphisms of each node graph,
/// lifted to the original vertices through canonical subtree isomorphisms.
inline AutTreeResult aut_tree(const ModularTree& t, const OracleLimits& limits = {}) {
  AutTreeResult res;
  res.assembly.resize(t.nodes().size());
  detail::NodeGroup g = detail::node_group(t, 0, limits, res.assembly);
  res.expr = g.expr.normalized();
  res.group = PermutationGroup(t.original_order(), std::move(g.generators));
  res.order = g.order;
  return res;
}

}  // namespace compaut
