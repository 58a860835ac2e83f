#include <gtest/gtest.h>

#include "support.hpp"

using namespace compaut;
using namespace compaut::testing;

namespace {

const OracleLimits kLarge{128, 200, 10'000'000};

Graph star(int leaves) { return complete_bipartite(1, leaves); }

}  // namespace

TEST(IncidenceGraph, Examples) {
  EXPECT_EQ(incidence_graph(complete_graph(2)), Graph::from_edges(3, {{0, 2}, {1, 2}}));
  EXPECT_TRUE(brute_force_iso(incidence_graph(complete_graph(3)), cycle_graph(6)).has_value());
  Graph y = incidence_graph(complete_bipartite(2, 3));
  EXPECT_EQ(y.order(), 11);
  EXPECT_EQ(y.size(), 12);
  EXPECT_TRUE(is_bipartite(y));
  EXPECT_THROW(incidence_graph(two_k2()), InputError);
  EXPECT_THROW(incidence_graph(Graph(0)), InputError);
}

TEST(IncidenceGraph, PreservesAutomorphismOrder) {
  for_each_graph_up_to(6, [](const Graph& x) {
    if (!is_connected(x) || is_cycle(x)) return;
    Graph y = incidence_graph(x);
    ASSERT_TRUE(is_connected(y));
    ASSERT_TRUE(is_bipartite(y));
    if (y.order() > 16) return;
    ASSERT_EQ(brute_force_aut(y, {16, 40, 10'000'000}).order(), brute_force_aut(x).order());
  });
}

TEST(ConstructCx, Examples) {
  auto k2 = construct_cx(complete_graph(2));
  EXPECT_EQ(k2.graph.order(), 5);
  EXPECT_EQ(k2.graph.size(), 4);
  EXPECT_TRUE(brute_force_iso(k2.graph, path_graph(5)).has_value());

  EXPECT_EQ(construct_cx(complete_bipartite(2, 3)).graph.order(), 23);

  auto c4 = construct_cx(cycle_graph(4));
  EXPECT_EQ(c4.graph.order(), 16);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(c4.graph.degree(c4.p_of(i)), 2);
}

TEST(ConstructCx, StructureUpToSeven) {
  for_each_graph_up_to(7, [](const Graph& x) {
    auto cx = construct_cx(x);
    const int n = x.order(), m = x.size();
    ASSERT_EQ(cx.graph.order(), n + 3 * m);
    ASSERT_EQ(cx.p.size(), static_cast<std::size_t>(n));
    ASSERT_EQ(cx.q.size(), static_cast<std::size_t>(2 * m));
    ASSERT_EQ(cx.r.size(), static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) ASSERT_EQ(cx.graph.degree(cx.p_of(i)), x.degree(i));
    for (int q : cx.q) ASSERT_EQ(cx.graph.degree(q), 2);
    for (int r : cx.r) ASSERT_EQ(cx.graph.degree(r), 2);
    // E = {p_i q_ik, q_ik r_k : x_i in e_k}.
    Graph expected(n + 3 * m);
    for (int k = 0; k < m; ++k)
      for (int i : {cx.edges[k].first, cx.edges[k].second}) {
        expected.add_edge(cx.p_of(i), cx.q_of(i, k));
        expected.add_edge(cx.q_of(i, k), cx.r_of(k));
      }
    ASSERT_EQ(cx.graph, expected);
  });
}

TEST(ConstructCx, IsTheFourSubdivision) {
  for_each_graph_up_to(5, [](const Graph& x) {
    ASSERT_TRUE(brute_force_iso(construct_cx(x).graph, subdivide(x, 4), kLarge).has_value());
  });
}

TEST(ConstructCx, IncidenceRouteGivesLengthEightPaths) {
  for_each_graph_up_to(5, [](const Graph& x) {
    if (!is_connected(x) || x.order() < 2) return;
    Graph via_y = construct_cx(incidence_graph(x)).graph;
    ASSERT_TRUE(brute_force_iso(via_y, subdivide(x, 8), kLarge).has_value());
  });
}

TEST(FourChains, K2ByHand) {
  auto cx = construct_cx(complete_graph(2));
  auto cs = four_chains(cx);
  // p_u = 0, p_v = 1, q_u = 2, q_v = 3, r = 4.
  EXPECT_EQ(cs.chains, (std::vector<Chain>{{0, 4, 2, 1, 3}, {0, 4, 2, 1, 3}, {1, 4, 3, 0, 2}, {1, 4, 3, 0, 2}}));
  auto rep = verify_chain_intersection(cs, cx);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.comparable_pairs, 4);
}

TEST(FourChains, Examples) {
  for (const Graph& x : {path_graph(3), complete_bipartite(2, 3)}) {
    auto cx = construct_cx(x);
    auto rep = verify_chain_intersection(four_chains(cx), cx);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.comparable_pairs, cx.graph.size());
  }
  EXPECT_EQ(construct_cx(path_graph(3)).graph.order(), 9);
}

TEST(FourChains, Rejects) {
  EXPECT_THROW(four_chains(construct_cx(complete_graph(3))), InputError);
  auto cx = construct_cx(path_graph(3));
  EXPECT_THROW(four_chains(cx, std::vector<int>{0, 0, 1}), InputError);
  EXPECT_THROW(four_chains(cx, std::vector<int>{0, 1}), InputError);
}

TEST(FourChains, ReversedChainIsReported) {
  auto cx = construct_cx(complete_bipartite(2, 3));
  auto cs = four_chains(cx);
  std::reverse(cs.chains[0].begin(), cs.chains[0].end());
  auto rep = verify_chain_intersection(cs, cx);
  EXPECT_FALSE(rep.ok);
  std::size_t missing = 0;
  for (const auto& m : rep.missing) missing += m.size();
  EXPECT_GT(missing, 0u);
}

TEST(FourChains, CoverageMismatch) {
  auto cx = construct_cx(path_graph(3));
  auto cs = four_chains(cx);
  cs.chains[2].pop_back();
  EXPECT_THROW(verify_chain_intersection(cs, cx), InputError);
}

TEST(FourChains, AllConnectedBipartiteUpToEight) {
  for_each_graph_up_to(8, [](const Graph& x) {
    if (!is_connected(x) || !is_bipartite(x)) return;
    auto cx = construct_cx(x);
    auto cs = four_chains(cx);
    auto rep = verify_chain_intersection(cs, cx);
    ASSERT_TRUE(rep.ok);
    // Each chain extends the intersection order, a transitive orientation of C_X.
    Orientation order = chain_intersection_order(cx.graph.order(), cs.chains);
    ASSERT_TRUE(is_transitive(cx.graph, order));
    for (const auto& c : cs.chains) {
      auto pos = chain_positions(cx.graph.order(), c);
      for (auto [u, v] : order.arcs()) ASSERT_LT(pos[u], pos[v]);
    }
  });
}

TEST(FourChains, EitherBipartitionWorks) {
  for_each_graph_up_to(7, [](const Graph& x) {
    if (!is_connected(x) || !is_bipartite(x)) return;
    auto side = *two_coloring(x);
    for (int& s : side) s = 1 - s;
    auto cx = construct_cx(x);
    ASSERT_TRUE(verify_chain_intersection(four_chains(cx, side), cx).ok);
  });
}

TEST(RecoverPqr, Examples) {
  auto rec = recover_pqr(construct_cx(star(3)).graph);
  EXPECT_EQ(rec.p.size(), 4u);
  EXPECT_EQ(rec.q.size(), 6u);
  EXPECT_EQ(rec.r.size(), 3u);
  EXPECT_TRUE(brute_force_iso(rec.x, star(3)).has_value());
  EXPECT_THROW(recover_pqr(construct_cx(cycle_graph(4)).graph), DomainError);
  EXPECT_THROW(recover_pqr(star(3)), DomainError);
}

TEST(RecoverPqr, RoundTripUnderRelabeling) {
  std::mt19937_64 rng(31);
  for_each_graph_up_to(6, [&](const Graph& x) {
    if (!is_connected(x) || is_cycle(x) || x.order() < 2) return;
    Graph g = construct_cx(x).graph;
    Graph h = apply(g, random_permutation(g.order(), rng));
    auto rec = recover_pqr(h);
    ASSERT_EQ(relabel(construct_cx(rec.x).graph, rec.witness.image()), h);
    ASSERT_TRUE(brute_force_iso(rec.x, x).has_value());
  });
}

TEST(AutPreservation, Examples) {
  auto s = aut_preservation_check(star(3), kLarge);
  EXPECT_TRUE(s.ok);
  EXPECT_EQ(s.aut_x, 6u);
  EXPECT_EQ(s.aut_cx, 6u);

  auto p = aut_preservation_check(p4(), kLarge);
  EXPECT_TRUE(p.ok);
  EXPECT_EQ(p.aut_x, 2u);

  EXPECT_THROW(aut_preservation_check(complete_graph(3), kLarge), InputError);
  auto k3 = aut_preservation_check(complete_graph(3), kLarge, true);
  EXPECT_EQ(k3.aut_x, 6u);
  EXPECT_EQ(k3.aut_cx, 24u);
  EXPECT_FALSE(k3.ok);
  EXPECT_THROW(aut_preservation_check(two_k2(), kLarge), InputError);
}

TEST(AutPreservation, ConnectedNonCyclesUpToSix) {
  for_each_graph_up_to(6, [](const Graph& x) {
    if (!is_connected(x) || is_cycle(x)) return;
    auto r = aut_preservation_check(x, kLarge);
    ASSERT_TRUE(r.ok) << to_edge_list(x);
  });
}

TEST(GiReduction, Examples) {
  std::mt19937_64 rng(37);
  Graph s = star(3);
  Graph s2 = apply(s, random_permutation(4, rng));
  auto same = gi_reduction(s, s2);
  EXPECT_TRUE(brute_force_iso(same.first.graph, same.second.graph, kLarge).has_value());
  auto diff = gi_reduction(s, p4());
  EXPECT_FALSE(brute_force_iso(diff.first.graph, diff.second.graph, kLarge).has_value());
  for (const auto* c : {&diff.first, &diff.second}) EXPECT_TRUE(verify_chain_intersection(four_chains(*c), *c).ok);
  EXPECT_THROW(gi_reduction(complete_graph(3), complete_graph(3)), InputError);
  auto k3 = gi_reduction(complete_graph(3), complete_graph(3), true);
  EXPECT_TRUE(brute_force_iso(k3.first.graph, k3.second.graph, kLarge).has_value());
}

TEST(GiReduction, CycleIncidenceOrders) {
  // Y(C_n) = C_2n, so Aut(C_Y) is dihedral of order 2 * 8n rather than 2n.
  for (int n = 3; n <= 5; ++n) {
    auto red = gi_reduction(cycle_graph(n), cycle_graph(n), true);
    EXPECT_EQ(brute_force_aut(red.first.graph, kLarge).order(), static_cast<std::size_t>(16 * n));
  }
}
