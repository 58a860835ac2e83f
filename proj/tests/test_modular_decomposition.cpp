#include <gtest/gtest.h>

#include "support.hpp"

using namespace compaut;
using namespace compaut::testing;

using Blocks = std::vector<std::vector<int>>;

TEST(DecompositionStep, Examples) {
  auto p = decomposition_step(p3());
  EXPECT_EQ(p.kind, PartitionKind::CoComponents);
  EXPECT_EQ(p.blocks, (Blocks{{0, 2}, {1}}));

  p = decomposition_step(two_k2());
  EXPECT_EQ(p.kind, PartitionKind::Components);
  EXPECT_EQ(p.blocks, (Blocks{{0, 1}, {2, 3}}));

  p = decomposition_step(p4());
  EXPECT_EQ(p.kind, PartitionKind::Stop);
  EXPECT_EQ(p.blocks.size(), 4u);

  EXPECT_EQ(decomposition_step(Graph(1)).kind, PartitionKind::Stop);
  EXPECT_EQ(decomposition_step(complete_graph(4)).kind, PartitionKind::Stop);
  EXPECT_THROW(decomposition_step(Graph(0)), InputError);
}

TEST(DecompositionStep, MaximalModulesOfBullLikeGraph) {
  // P4 with vertex 1 blown up into the twins {1, 4}.
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 2}});
  auto p = decomposition_step(g);
  EXPECT_EQ(p.kind, PartitionKind::MaximalModules);
  EXPECT_EQ(p.blocks, (Blocks{{0}, {1, 4}, {2}, {3}}));
  EXPECT_TRUE(brute_force_is_prime(quotient(g, p)));
}

TEST(DecompositionStep, BlocksAreModulesAndMaximal) {
  for_each_graph_up_to(7, [](const Graph& g) {
    auto p = decomposition_step(g);
    std::vector<int> seen(g.order(), 0);
    for (const auto& b : p.blocks) {
      ASSERT_FALSE(b.empty());
      ASSERT_TRUE(literal_module(g, b));
      for (int v : b) ++seen[v];
    }
    for (int c : seen) ASSERT_EQ(c, 1);
    if (p.kind == PartitionKind::MaximalModules) {
      ASSERT_TRUE(brute_force_is_prime(quotient(g, p)));
      for (const auto& m : brute_force_modules(g)) {
        if (static_cast<int>(m.size()) == g.order()) continue;
        bool inside = false;
        for (const auto& b : p.blocks) inside = inside || std::includes(b.begin(), b.end(), m.begin(), m.end());
        ASSERT_TRUE(inside);
      }
    }
  });
}

TEST(Quotient, Examples) {
  EXPECT_EQ(quotient(p3(), {{{0, 2}, {1}}, PartitionKind::CoComponents}), complete_graph(2));
  EXPECT_EQ(quotient(two_k2(), {{{0, 1}, {2, 3}}, PartitionKind::Components}), Graph(2));
  EXPECT_EQ(quotient(complete_graph(4), {{{0, 1}, {2}, {3}}, PartitionKind::MaximalModules}), complete_graph(3));
}

TEST(Quotient, RejectsInvalidPartitions) {
  EXPECT_THROW(quotient(p4(), {{{0, 1}, {2}, {3}}, PartitionKind::MaximalModules}), InputError);
  EXPECT_THROW(quotient(p3(), {{{0, 2}, {1, 2}}, PartitionKind::MaximalModules}), InputError);
  EXPECT_THROW(quotient(p3(), {{{0, 2}}, PartitionKind::MaximalModules}), InputError);
}

TEST(ModularTree, PrimeGraphIsItsOwnTree) {
  auto t = build_modular_tree(p4());
  ASSERT_EQ(t.nodes().size(), 1u);
  EXPECT_EQ(t.root().kind, NodeKind::Prime);
  EXPECT_EQ(t.root().graph, p4());
  EXPECT_EQ(t.vertex_count(), 4);
  EXPECT_TRUE(t.tree_edges().empty());
}

TEST(ModularTree, P3) {
  auto t = build_modular_tree(p3());
  ASSERT_EQ(t.nodes().size(), 3u);
  EXPECT_EQ(t.root().kind, NodeKind::Complete);
  EXPECT_EQ(t.root().graph, complete_graph(2));
  ASSERT_EQ(t.root().children.size(), 2u);
  std::vector<std::vector<int>> leaves;
  for (int c : t.root().children) leaves.push_back(t.node(c).leaves);
  std::sort(leaves.begin(), leaves.end());
  EXPECT_EQ(leaves, (Blocks{{0, 2}, {1}}));
  for (int c : t.root().children) {
    const auto& node = t.node(c);
    EXPECT_EQ(node.kind, node.leaves.size() == 1 ? NodeKind::Leaf : NodeKind::Independent);
  }
  EXPECT_EQ(t.tree_edges().size(), 2u);
}

TEST(ModularTree, RootIsPrimeForSubstitutedPrime) {
  // C5 with two vertices replaced by modules.
  Graph g = substitute(cycle_graph(5), std::vector<Graph>{complete_graph(2), Graph(1), two_k2(), Graph(1), Graph(1)});
  auto t = build_modular_tree(g);
  EXPECT_EQ(t.root().kind, NodeKind::Prime);
  EXPECT_EQ(t.root().children.size(), 5u);
}

TEST(ModularTree, RejectsEmpty) { EXPECT_THROW(build_modular_tree(Graph(0)), InputError); }

TEST(ModularTree, Invariants) {
  for_each_graph_up_to(7, [](const Graph& g) {
    auto t = build_modular_tree(g);
    const Graph& normal = t.normal_graph();
    std::vector<int> originals;
    for (int id = 0; id < static_cast<int>(t.nodes().size()); ++id) {
      const TreeNode& node = t.node(id);
      int markers = 0;
      for (int v : node.members) markers += t.is_marker(v);
      ASSERT_TRUE(markers == 0 || markers == static_cast<int>(node.members.size()));
      ASSERT_EQ(node.inner(), markers > 0);
      if (!node.inner()) originals.insert(originals.end(), node.members.begin(), node.members.end());
      ASSERT_EQ(node.children.size(), node.inner() ? node.members.size() : 0u);
      ASSERT_EQ(node.graph, induced_subgraph(normal, node.members));
      switch (node.kind) {
        case NodeKind::Prime: ASSERT_TRUE(brute_force_is_prime(node.graph)); break;
        case NodeKind::Complete: ASSERT_TRUE(is_complete(node.graph)); break;
        case NodeKind::Independent: ASSERT_TRUE(is_edgeless(node.graph)); break;
        case NodeKind::Leaf: ASSERT_EQ(node.members.size(), 1u); break;
      }
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        const int m = node.members[i], mp = node.attachments[i];
        ASSERT_EQ(t.vertex(m).tree_partner, mp);
        std::vector<int> nb = normal.neighbors(mp);
        std::vector<int> child_root = t.node(node.children[i]).members;
        std::sort(child_root.begin(), child_root.end());
        ASSERT_EQ(nb, child_root);
        ASSERT_NE(std::find(t.tree_edges().begin(), t.tree_edges().end(), Arc{m, mp}), t.tree_edges().end());
      }
    }
    std::sort(originals.begin(), originals.end());
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    ASSERT_EQ(originals, all);
  });
}

TEST(AlternatingPath, Examples) {
  auto t4 = build_modular_tree(p4());
  auto direct = alternating_path(t4, 0, 1);
  ASSERT_TRUE(direct.has_value());
  EXPECT_EQ(direct->size(), 2u);
  EXPECT_FALSE(alternating_path_adjacent(t4, 0, 2));

  auto t3 = build_modular_tree(p3());
  auto path = alternating_path(t3, 0, 1);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->size(), 6u);
  for (std::size_t i = 1; i + 1 < path->size(); ++i) EXPECT_TRUE(t3.is_marker((*path)[i]));
  EXPECT_FALSE(alternating_path_adjacent(t3, 0, 2));
  EXPECT_THROW(alternating_path(t3, 0, 3), InputError);
  EXPECT_THROW(alternating_path(t3, 1, 1), InputError);
}

TEST(AlternatingPath, ReconstructsAdjacencyUpToSeven) {
  for_each_graph_up_to(7, [](const Graph& g) {
    auto t = build_modular_tree(g);
    for (int x = 0; x < g.order(); ++x)
      for (int y = x + 1; y < g.order(); ++y) ASSERT_EQ(alternating_path_adjacent(t, x, y), g.adjacent(x, y));
  });
}

TEST(AlternatingPath, PathsAlternate) {
  for_each_graph_up_to(6, [](const Graph& g) {
    auto t = build_modular_tree(g);
    for (auto [x, y] : g.edges()) {
      auto p = alternating_path(t, x, y);
      ASSERT_TRUE(p.has_value());
      ASSERT_EQ(p->size() % 2, 0u);
      for (std::size_t i = 0; i + 1 < p->size(); ++i) {
        int a = (*p)[i], b = (*p)[i + 1];
        if (i % 2 == 0) ASSERT_TRUE(t.normal_graph().adjacent(a, b));
        else ASSERT_TRUE(t.vertex(a).tree_partner == b);
      }
    }
  });
}

TEST(ModularTree, IsomorphicInputsGiveIsomorphicTrees) {
  const OracleLimits limits{64, 200, 10'000'000};
  std::mt19937_64 rng(13);
  for_each_graph_up_to(7, [&](const Graph& g) {
    Graph h = apply(g, random_permutation(g.order(), rng));
    auto a = typed_tree_digraph(build_modular_tree(g));
    auto b = typed_tree_digraph(build_modular_tree(h));
    ASSERT_EQ(a.n, b.n);
    ASSERT_TRUE(brute_force_digraph_iso(a.n, a.arcs, a.colors, b.arcs, b.colors, limits).has_value());
    ASSERT_EQ(build_modular_tree(g).root().code, build_modular_tree(h).root().code);
  });
}

TEST(ModularTree, Deterministic) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(8, 0.5, rng);
    auto a = build_modular_tree(g), b = build_modular_tree(g);
    EXPECT_EQ(a.normal_graph(), b.normal_graph());
    EXPECT_EQ(a.tree_edges(), b.tree_edges());
  }
}

TEST(IsPrime, MatchesSubsetOracle) {
  for_each_graph_up_to(7, [](const Graph& g) { ASSERT_EQ(is_prime(g), brute_force_is_prime(g)); });
}
