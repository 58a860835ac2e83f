#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace compaut;
using namespace compaut::testing;

using Model = SemidirectZ22Model;

TEST(GroupExpr, Orders) {
  EXPECT_EQ(realize(GroupExpr::wreath(GroupExpr::sym(2), 3)), 48);
  EXPECT_EQ(realize(GroupExpr::semidirect_z22(GroupExpr::trivial(), GroupExpr::trivial(), GroupExpr::trivial(),
                                              GroupExpr::trivial())),
            4);
  EXPECT_EQ(realize(GroupExpr::direct_product({GroupExpr::sym(3), GroupExpr::sym(2)})), 12);
  EXPECT_EQ(realize(GroupExpr::semidirect_z22(GroupExpr::sym(2), GroupExpr::sym(3), GroupExpr::trivial(),
                                              GroupExpr::sym(2))),
            16 * 36 * 2 * 4);
  EXPECT_EQ(GroupExpr::sym(30).order().str(), "265252859812191058636308480000000");
  EXPECT_THROW(GroupExpr::sym(0), InputError);
  EXPECT_THROW(GroupExpr::wreath(GroupExpr::sym(2), 0), InputError);
  EXPECT_THROW(GroupExpr::opaque(0), InputError);
}

TEST(GroupExpr, Strings) {
  EXPECT_EQ(GroupExpr::wreath(GroupExpr::sym(2), 2).to_string(), "S2 wr S2");
  EXPECT_EQ(GroupExpr::wreath(GroupExpr::wreath(GroupExpr::sym(3), 2), 2).to_string(), "(S3 wr S2) wr S2");
  EXPECT_EQ(GroupExpr::opaque(6).to_string(), "Opaque(6)");
  EXPECT_EQ(GroupExpr::trivial().to_string(), "1");
}

TEST(GroupExpr, Normalization) {
  auto e = GroupExpr::direct_product({GroupExpr::sym(3), GroupExpr::trivial(),
                                      GroupExpr::direct_product({GroupExpr::sym(2), GroupExpr::sym(1)})});
  auto n = e.normalized();
  EXPECT_EQ(n.to_string(), "S2 x S3");
  EXPECT_EQ(n.order(), e.order());
  EXPECT_EQ(GroupExpr::wreath(GroupExpr::trivial(), 4).normalized(), GroupExpr::sym(4));
  EXPECT_EQ(GroupExpr::wreath(GroupExpr::sym(3), 1).normalized(), GroupExpr::sym(3));
  EXPECT_EQ(GroupExpr::direct_product({}).normalized(), GroupExpr::trivial());
  EXPECT_EQ(n.normalized(), n);
}

TEST(GroupExpr, RealizedGroupHasStructuralOrder) {
  const std::vector<GroupExpr> cases{
      GroupExpr::sym(4),
      GroupExpr::wreath(GroupExpr::sym(2), 3),
      GroupExpr::direct_product({GroupExpr::sym(3), GroupExpr::wreath(GroupExpr::sym(2), 2)}),
      GroupExpr::semidirect_z22(GroupExpr::trivial(), GroupExpr::trivial(), GroupExpr::trivial(), GroupExpr::trivial()),
      GroupExpr::semidirect_z22(GroupExpr::sym(2), GroupExpr::trivial(), GroupExpr::sym(2), GroupExpr::trivial()),
      GroupExpr::semidirect_z22(GroupExpr::trivial(), GroupExpr::sym(2), GroupExpr::sym(2), GroupExpr::sym(3)),
  };
  for (const auto& e : cases) {
    auto g = realize_permutation_group(e).materialize(1'000'000);
    EXPECT_EQ(BigInt(g.order()), realize(e)) << e.to_string();
  }
}

namespace {

Model::Vector random_vector(const std::array<std::vector<Permutation>, 4>& groups, std::mt19937_64& rng) {
  Model::Vector v;
  for (int c = 0; c < Model::kComponents; ++c) {
    const auto& g = groups[Model::factor_of(c)];
    v[c] = g[std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng)];
  }
  return v;
}

}  // namespace

TEST(SemidirectZ22, PhiMovesComponents) {
  // a = (1,0): G1 0<->1, 2<->3, swaps G2, fixes G3 and G4.
  // b = (0,1): G1 0<->2, 1<->3, fixes G2, swaps G3 and fixes G4.
  const std::array<int, 9> a{1, 0, 3, 2, 5, 4, 6, 7, 8}, b{2, 3, 0, 1, 4, 5, 7, 6, 8};
  for (int c = 0; c < 9; ++c) {
    EXPECT_EQ(Model::move(0, c), c);
    EXPECT_EQ(Model::move(1, c), a[c]);
    EXPECT_EQ(Model::move(2, c), b[c]);
    EXPECT_EQ(Model::move(3, c), b[a[c]]);
  }
}

TEST(SemidirectZ22, PhiOnMaterializedElements) {
  auto e = GroupExpr::semidirect_z22(GroupExpr::sym(3), GroupExpr::sym(2), GroupExpr::sym(2), GroupExpr::sym(2));
  std::array<std::vector<Permutation>, 4> groups;
  for (int f = 0; f < 4; ++f) groups[f] = realize_permutation_group(e.operands()[f]).materialize(100).elements();
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    auto n = random_vector(groups, rng);
    auto pa = Model::phi(1, n), pb = Model::phi(2, n);
    EXPECT_EQ(pa[0], n[1]);
    EXPECT_EQ(pa[1], n[0]);
    EXPECT_EQ(pa[4], n[5]);
    EXPECT_EQ(pa[6], n[6]);
    EXPECT_EQ(pa[7], n[7]);
    EXPECT_EQ(pb[0], n[2]);
    EXPECT_EQ(pb[4], n[4]);
    EXPECT_EQ(pb[6], n[7]);
    EXPECT_EQ(pa[8], n[8]);
    EXPECT_EQ(pb[8], n[8]);
    // phi is a homomorphism from Z2^2.
    EXPECT_EQ(Model::phi(1, Model::phi(2, n)), Model::phi(3, n));
    EXPECT_EQ(Model::phi(1, pa), n);
  }
}

TEST(SemidirectZ22, CompositionLawOnAllPairs) {
  auto e = GroupExpr::semidirect_z22(GroupExpr::sym(2), GroupExpr::sym(2), GroupExpr::trivial(), GroupExpr::trivial());
  Model model(e);
  auto elements = model.elements(100000);
  ASSERT_EQ(BigInt(elements.size()), e.order());
  std::set<Permutation> embedded;
  for (const auto& x : elements) embedded.insert(model.embed(x));
  ASSERT_EQ(embedded.size(), elements.size());
  for (const auto& x : elements)
    for (const auto& y : elements) {
      auto z = Model::multiply(x, y);
      ASSERT_EQ(z.h, x.h ^ y.h);
      auto moved = Model::phi(x.h, y.n);
      for (int c = 0; c < Model::kComponents; ++c) ASSERT_EQ(z.n[c], x.n[c] * moved[c]);
      ASSERT_EQ(model.embed(z), model.embed(x) * model.embed(y));
    }
  auto realized = realize_permutation_group(e).materialize(100000);
  EXPECT_EQ(std::vector<Permutation>(embedded.begin(), embedded.end()), realized.elements());
}

TEST(SemidirectZ22, CompositionLawSampled) {
  auto e = GroupExpr::semidirect_z22(GroupExpr::sym(3), GroupExpr::sym(2), GroupExpr::sym(2), GroupExpr::sym(2));
  Model model(e);
  std::array<std::vector<Permutation>, 4> groups;
  for (int f = 0; f < 4; ++f) groups[f] = realize_permutation_group(e.operands()[f]).materialize(100).elements();
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    Model::Element x{random_vector(groups, rng), static_cast<int>(rng() % 4)};
    Model::Element y{random_vector(groups, rng), static_cast<int>(rng() % 4)};
    Model::Element w{random_vector(groups, rng), static_cast<int>(rng() % 4)};
    ASSERT_EQ(Model::multiply(Model::multiply(x, y), w), Model::multiply(x, Model::multiply(y, w)));
    ASSERT_EQ(model.embed(Model::multiply(x, y)), model.embed(x) * model.embed(y));
  }
  EXPECT_THROW(model.elements(1000), OracleBoundError);
}

TEST(SubtreeClasses, Examples) {
  auto c = subtree_isomorphism_classes(build_modular_tree(two_k2()));
  ASSERT_EQ(c.colors.size(), 2u);
  EXPECT_EQ(c.colors[0], c.colors[1]);

  c = subtree_isomorphism_classes(build_modular_tree(k1_plus_k2()));
  ASSERT_EQ(c.colors.size(), 2u);
  EXPECT_NE(c.colors[0], c.colors[1]);

  c = subtree_isomorphism_classes(build_modular_tree(p3()));
  EXPECT_EQ(c.graph, complete_graph(2));
  EXPECT_NE(c.colors[0], c.colors[1]);
}

TEST(SubtreeClasses, ColoursMatchOracleIsomorphism) {
  for_each_graph_up_to(7, [](const Graph& g) {
    auto t = build_modular_tree(g);
    if (!t.root().inner()) return;
    auto c = subtree_isomorphism_classes(t);
    const auto& kids = t.root().children;
    for (std::size_t i = 0; i < kids.size(); ++i)
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        const auto& li = t.node(kids[i]).leaves;
        const auto& lj = t.node(kids[j]).leaves;
        bool iso = brute_force_iso(induced_subgraph(g, li), induced_subgraph(g, lj)).has_value();
        ASSERT_EQ(c.colors[i] == c.colors[j], iso);
      }
  });
}

TEST(ColorPreservingAut, Examples) {
  EXPECT_EQ(color_preserving_aut({complete_graph(2), {0, 1}}).materialize(10).order(), 1u);
  EXPECT_EQ(color_preserving_aut({complete_graph(2), {0, 0}}).materialize(10).order(), 2u);
  auto c4 = color_preserving_aut({cycle_graph(4), {0, 1, 0, 1}}).materialize(100);
  EXPECT_EQ(c4.order(), 4u);
  auto full = brute_force_aut(cycle_graph(4));
  for (const auto& p : c4.elements()) EXPECT_TRUE(full.contains(p));
}

TEST(AutTree, Examples) {
  auto k3 = aut_tree(build_modular_tree(complete_graph(3)));
  EXPECT_EQ(k3.expr.to_string(), "S3");
  EXPECT_EQ(k3.order, 6);

  auto m = aut_tree(build_modular_tree(two_k2()));
  EXPECT_EQ(m.expr, GroupExpr::wreath(GroupExpr::sym(2), 2));
  EXPECT_EQ(m.group.materialize(100).order(), 8u);

  auto p = aut_tree(build_modular_tree(p4()));
  EXPECT_EQ(p.order, 2);
  EXPECT_EQ(p.expr.order(), 2);
  EXPECT_EQ(p.group.materialize(100).order(), 2u);

  EXPECT_EQ(aut_tree(build_modular_tree(complete_bipartite(2, 3))).order, 12);
  EXPECT_EQ(aut_tree(build_modular_tree(Graph(1))).order, 1);
}

TEST(AutTree, LargeDegenerateOrdersAreExact) {
  // K_{3,3,3}: S3 wr S3.
  Graph g = complement(disjoint_union(disjoint_union(complete_graph(3), complete_graph(3)), complete_graph(3)));
  auto r = aut_tree(build_modular_tree(g));
  EXPECT_EQ(r.expr, GroupExpr::wreath(GroupExpr::sym(3), 3));
  EXPECT_EQ(r.order, 1296);
  EXPECT_EQ(aut_tree(build_modular_tree(empty_graph(25))).order, factorial(25));
}

TEST(AutTree, EqualsBruteForceUpToSeven) {
  for_each_graph_up_to(7, [](const Graph& g) {
    auto r = aut_tree(build_modular_tree(g));
    auto concrete = r.group.materialize(1'000'000);
    ASSERT_EQ(concrete.elements(), brute_force_aut(g).elements());
    ASSERT_EQ(r.expr.order(), BigInt(concrete.order()));
    ASSERT_EQ(r.order, r.expr.order());
    ASSERT_EQ(r.assembly.size(), build_modular_tree(g).nodes().size());
  });
}

TEST(AutTree, RandomGraphsOfEightAndNine) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(8 + trial % 2, 0.5, rng);
    auto r = aut_tree(build_modular_tree(g));
    ASSERT_EQ(r.group.materialize(1'000'000).elements(), brute_force_aut(g).elements());
  }
}
