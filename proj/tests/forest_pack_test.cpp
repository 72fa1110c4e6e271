#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "packcert/forest_pack.hpp"
#include "packcert/testkit/enumerate.hpp"
#include "packcert/testkit/oracles.hpp"

namespace packcert {
namespace {

using fixtures::k4;
using fixtures::triangle;

const std::vector<Graph>& small_graphs() {
  static const std::vector<Graph> graphs = [] {
    auto simple = testkit::connected_graphs(6, 9);
    auto multi = testkit::connected_graphs(4, 7, 3);
    simple.insert(simple.end(), multi.begin(), multi.end());
    return simple;
  }();
  return graphs;
}

TEST(PackSpanningTrees, TriangleIsDeficientForTwo) {
  const PackOutcome out = pack_spanning_trees(triangle(), 2);
  const auto* d = std::get_if<DeficientPartition>(&out);
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->partition, Partition::singletons(3));
  EXPECT_EQ(d->deficit, 1);
}

TEST(PackSpanningTrees, SingleNodeGivesEmptyTrees) {
  const PackOutcome out = pack_spanning_trees(Graph(1), 5);
  const auto* p = std::get_if<TreePacking>(&out);
  ASSERT_NE(p, nullptr);
  ASSERT_EQ(p->trees.size(), 5u);
  for (const auto& t : p->trees) EXPECT_TRUE(t.empty());
}

TEST(PackSpanningTrees, ZeroTrees) {
  const PackOutcome out = pack_spanning_trees(triangle(), 0);
  ASSERT_TRUE(std::holds_alternative<TreePacking>(out));
  EXPECT_TRUE(std::get<TreePacking>(out).trees.empty());
}

TEST(PackSpanningTrees, K4TwoTrees) {
  const PackOutcome out = pack_spanning_trees(k4(), 2);
  const auto* p = std::get_if<TreePacking>(&out);
  ASSERT_NE(p, nullptr);
  EXPECT_TRUE(verify_tree_packing(k4(), 2, *p));
}

TEST(PackSpanningTrees, DisconnectedGraphIsDeficient) {
  const PackOutcome out = pack_spanning_trees(Graph(2), 1);
  ASSERT_TRUE(std::holds_alternative<DeficientPartition>(out));
}

TEST(MinCostSpanningTrees, AvoidsExpensiveEdge) {
  Graph g = triangle();
  g.add_edge(0, 1);
  const double cost[] = {1, 1, 1, 10};
  const PackOutcome out = min_cost_spanning_trees(g, 1, cost);
  const auto* p = std::get_if<TreePacking>(&out);
  ASSERT_NE(p, nullptr);
  ASSERT_EQ(p->trees.size(), 1u);
  EXPECT_EQ(std::count(p->trees[0].begin(), p->trees[0].end(), 3), 0);
}

TEST(TutteCondition, Examples) {
  EXPECT_TRUE(verify_tutte_condition(triangle(), std::vector<EdgeId>{}, 5));
  EXPECT_FALSE(verify_tutte_condition(triangle(), std::vector<EdgeId>{0, 1, 2}, 2));
  const Graph g = k4();
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<EdgeId> f;
    for (int e = 0; e < 6; ++e) {
      if (mask >> e & 1u) f.push_back(e);
    }
    EXPECT_TRUE(verify_tutte_condition(g, f, 2));
  }
}

TEST(DecomposeForests, Examples) {
  const auto two = decompose_forests(triangle(), 2);
  const auto* d = std::get_if<ForestDecomposition>(&two);
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->forests.size(), 2u);

  const auto one = decompose_forests(triangle(), 1);
  const auto* x = std::get_if<DenseSet>(&one);
  ASSERT_NE(x, nullptr);
  EXPECT_EQ(x->nodes, (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(x->induced, 3);
  EXPECT_EQ(x->bound, 2);

  const int caps[] = {3, 3};
  const auto capped = decompose_forests(k4(), 2, caps);
  const auto* c = std::get_if<ForestDecomposition>(&capped);
  ASSERT_NE(c, nullptr);
  for (const auto& f : c->forests) EXPECT_TRUE(is_spanning_tree(k4(), f));
}

TEST(DecomposeForests, CapsTooSmall) {
  const int caps[] = {2, 2};
  const auto out = decompose_forests(k4(), 2, caps);
  const auto* v = std::get_if<CappedViolation>(&out);
  ASSERT_NE(v, nullptr);
  EXPECT_FALSE(v->edges.empty());
}

TEST(Arboricity, Examples) {
  EXPECT_EQ(arboricity(Graph(3)).value, 0);
  EXPECT_EQ(arboricity(triangle()).value, 2);
  EXPECT_EQ(arboricity(k4()).value, 2);
}

TEST(PartitionDeficiency, Examples) {
  const Deficiency k4d = partition_deficiency(k4(), 2);
  EXPECT_EQ(k4d.value, 0);
  EXPECT_EQ(k4d.witness, Partition::trivial(4));
  const Deficiency tri = partition_deficiency(triangle(), 2);
  EXPECT_EQ(tri.value, 1);
  EXPECT_EQ(tri.witness, Partition::singletons(3));
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const Deficiency d = partition_deficiency(fixtures::path(n), k);
      EXPECT_EQ(d.value, static_cast<long>((k - 1) * (n - 1)));
      if (k > 1) {
        EXPECT_EQ(d.witness, Partition::singletons(n));
      }
    }
  }
}

TEST(Augment, Examples) {
  const auto tri = augment_to_k_tree_connected(triangle(), 2, AugmentMode::kParallel);
  const auto* a = std::get_if<Augmentation>(&tri);
  ASSERT_NE(a, nullptr);
  ASSERT_EQ(a->new_edges.size(), 1u);
  Graph g = triangle();
  g.add_edge(a->new_edges[0].u, a->new_edges[0].v);
  EXPECT_TRUE(std::holds_alternative<TreePacking>(pack_spanning_trees(g, 2)));

  const auto none = augment_to_k_tree_connected(k4(), 2, AugmentMode::kStar, 0);
  ASSERT_TRUE(std::holds_alternative<Augmentation>(none));
  EXPECT_TRUE(std::get<Augmentation>(none).new_edges.empty());

  const auto short_budget = augment_to_k_tree_connected(triangle(), 2, AugmentMode::kStar, 0);
  const auto* inf = std::get_if<AugmentInfeasible>(&short_budget);
  ASSERT_NE(inf, nullptr);
  EXPECT_EQ(inf->required, 1);
  EXPECT_EQ(inf->witness, Partition::singletons(3));
}

TEST(Augment, StarEdgesTouchNodeZero) {
  const auto out = augment_to_k_tree_connected(fixtures::path(5), 3, AugmentMode::kStar);
  const auto* a = std::get_if<Augmentation>(&out);
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->new_edges.size(), 8u);
  for (const Edge& e : a->new_edges) EXPECT_TRUE(e.u == 0 || e.v == 0);
}

TEST(ExtendForests, EmptySeedsReduceToPacking) {
  const auto out = extend_forests(k4(), {{}, {}}, {}, ExtensionMode::kPack);
  ASSERT_TRUE(std::holds_alternative<ForestDecomposition>(out));
  const auto cover = extend_forests(triangle(), {{}}, {}, ExtensionMode::kCover);
  ASSERT_TRUE(std::holds_alternative<ExtensionCertificate>(cover));
}

TEST(ExtendForests, K4WithFixedPerfectMatching) {
  const Graph g = k4();
  // F_1 = {01, 23}.
  const auto out = extend_forests(g, {{0, 2}, {}}, {}, ExtensionMode::kPack);
  const auto* d = std::get_if<ForestDecomposition>(&out);
  ASSERT_NE(d, nullptr);
  ASSERT_EQ(d->forests.size(), 2u);
  EXPECT_TRUE(is_spanning_tree(g, d->forests[0]));
  EXPECT_TRUE(is_spanning_tree(g, d->forests[1]));
  EXPECT_TRUE(std::count(d->forests[0].begin(), d->forests[0].end(), 0));
  EXPECT_TRUE(std::count(d->forests[0].begin(), d->forests[0].end(), 2));
}

TEST(ExtendForests, AllowedSetCannotSpan) {
  const auto out = extend_forests(triangle(), {{}, {}}, {{0}, {0, 1, 2}}, ExtensionMode::kPack);
  const auto* c = std::get_if<ExtensionCertificate>(&out);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->part, 0);
}

TEST(ExtendForests, RejectsBadSeeds) {
  EXPECT_THROW(extend_forests(triangle(), {{0, 1, 2}}, {}, ExtensionMode::kCover), InputError);
  EXPECT_THROW(extend_forests(triangle(), {{0}}, {{1}}, ExtensionMode::kCover), InputError);
  EXPECT_THROW(extend_forests(triangle(), {{0}, {0}}, {}, ExtensionMode::kCover), InputError);
}

TEST(PartitionConnected, Examples) {
  const Graph c4x2 = fixtures::repeated(fixtures::cycle(4), 2);
  EXPECT_TRUE(check_partition_connected(c4x2, 1, 1).holds);
  const PartitionConnectivity k4c = check_partition_connected(k4(), 2, 1);
  EXPECT_FALSE(k4c.holds);
  ASSERT_TRUE(k4c.witness.has_value());
  EXPECT_GT(partition_deficit(k4(), *k4c.witness, 2, 1), 0);
  EXPECT_TRUE(check_partition_connected(triangle(), 1, 0).holds);
}

TEST(Sparsity, Examples) {
  const SparsityResult k4t = check_forest_tight(k4(), 2, 1);
  EXPECT_FALSE(k4t.holds);
  const Graph pendant(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_FALSE(check_laman(pendant).holds);
  EXPECT_TRUE(check_forest_sparse(pendant, 2, 1).holds);
  EXPECT_TRUE(std::holds_alternative<TreePacking>(check_body_bar(triangle(), 1)));
  EXPECT_TRUE(std::holds_alternative<DeficientPartition>(check_body_bar(Graph(2), 1)));
  EXPECT_THROW(check_forest_sparse(triangle(), 1, 1), InputError);
}

TEST(Sparsity, LamanTriangleAndK4MinusEdge) {
  EXPECT_TRUE(check_laman(triangle()).holds);
  const Graph k4e(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {0, 3}});
  EXPECT_TRUE(check_laman(k4e).holds);
  const SparsityResult k4 = check_forest_sparse(fixtures::k4(), 2, 1);
  EXPECT_FALSE(k4.holds);
  EXPECT_GT(induced_count(fixtures::k4(), k4.violating), 2 * (static_cast<int>(k4.violating.size()) - 1) - 1);
}

TEST(BrickPartition, TriangleWithPendantPair) {
  // Doubled triangle hanging off a path: bricks are the triangle and the
  // path nodes.
  Graph g = fixtures::repeated(triangle(), 2);
  g = Graph(5, std::vector<Edge>(g.edges().begin(), g.edges().end()));
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  const Partition p = brick_partition(g, 2);
  EXPECT_EQ(p, Partition(5, {{0, 1, 2}, {3}, {4}}));
}

// Properties over every small connected graph.

TEST(ForestPackProperty, PackingDichotomyMatchesOracles) {
  for (const Graph& g : small_graphs()) {
    for (int k = 1; k <= 3; ++k) {
      const auto oracle = testkit::oracle_partitions(g, k);
      const PackOutcome out = pack_spanning_trees(g, k);
      if (const auto* p = std::get_if<TreePacking>(&out)) {
        EXPECT_TRUE(verify_tree_packing(g, k, *p));
        EXPECT_EQ(oracle.deficit, 0);
      } else {
        const auto& d = std::get<DeficientPartition>(out);
        EXPECT_EQ(d.deficit, partition_deficit(g, d.partition, k));
        EXPECT_EQ(d.deficit, oracle.deficit);
        EXPECT_GT(d.deficit, 0);
      }
    }
  }
}

TEST(ForestPackProperty, TreeSearchAgreesOnSmallGraphs) {
  for (const Graph& g : testkit::connected_graphs(5, 8)) {
    for (int k = 1; k <= 2; ++k) {
      const bool packs = std::holds_alternative<TreePacking>(pack_spanning_trees(g, k));
      EXPECT_EQ(packs, testkit::oracle_trees(g, k).has_value());
    }
  }
}

TEST(ForestPackProperty, DeficiencyAndAugmentation) {
  for (const Graph& g : small_graphs()) {
    for (int k = 1; k <= 3; ++k) {
      const Deficiency d = partition_deficiency(g, k);
      EXPECT_EQ(d.value, testkit::oracle_partitions(g, k).deficit);
      EXPECT_EQ(std::max(0L, partition_deficit(g, d.witness, k)), d.value);
      for (const AugmentMode mode : {AugmentMode::kStar, AugmentMode::kParallel}) {
        const auto out = augment_to_k_tree_connected(g, k, mode);
        const auto& a = std::get<Augmentation>(out);
        EXPECT_EQ(static_cast<long>(a.new_edges.size()), d.value);
        Graph h = g;
        for (const Edge& e : a.new_edges) h.add_edge(e.u, e.v);
        EXPECT_TRUE(std::holds_alternative<TreePacking>(pack_spanning_trees(h, k)));
      }
    }
  }
}

TEST(ForestPackProperty, BrickPartitionIsSmallestMaximiser) {
  for (const Graph& g : small_graphs()) {
    for (int k = 1; k <= 3; ++k) {
      const auto oracle = testkit::oracle_partitions(g, k);
      if (oracle.deficit == 0) continue;
      const Partition p = brick_partition(g, k);
      EXPECT_EQ(partition_deficit(g, p, k), oracle.deficit);
      EXPECT_EQ(p.size(), oracle.min_blocks_at_max);
    }
  }
}

TEST(ForestPackProperty, CoveringAndArboricity) {
  for (const Graph& g : small_graphs()) {
    const int arb = arboricity(g).value;
    EXPECT_EQ(arb, testkit::oracle_arboricity(g));
    for (int k = 1; k <= 3; ++k) {
      const bool sparse = testkit::oracle_max_density_excess(g, k) <= 0;
      const auto out = decompose_forests(g, k);
      EXPECT_EQ(std::holds_alternative<ForestDecomposition>(out), sparse);
      if (const auto* x = std::get_if<DenseSet>(&out)) {
        EXPECT_EQ(x->induced, induced_count(g, x->nodes));
        EXPECT_GT(x->induced, x->bound);
      }
    }
  }
}

TEST(ForestPackProperty, PartitionConnectivityMatchesEnumeration) {
  for (const Graph& g : small_graphs()) {
    for (int k = 1; k <= 2; ++k) {
      for (int l = 0; l <= 2; ++l) {
        const PartitionConnectivity pc = check_partition_connected(g, k, l);
        EXPECT_EQ(pc.holds, testkit::oracle_partition_connected(g, k, l));
        if (!pc.holds && g.num_nodes() > 1) {
          ASSERT_TRUE(pc.witness.has_value());
          EXPECT_GT(partition_deficit(g, *pc.witness, k, l), 0);
        }
      }
    }
  }
}

TEST(ForestPackProperty, TutteAndNashWilliamsAgree) {
  for (const Graph& g : testkit::connected_graphs(5, 7)) {
    for (int k = 1; k <= 2; ++k) {
      bool tutte = true;
      const int m = g.num_edges();
      for (unsigned mask = 0; mask < (1u << m) && tutte; ++mask) {
        std::vector<EdgeId> f;
        for (int e = 0; e < m; ++e) {
          if (mask >> e & 1u) f.push_back(e);
        }
        tutte = verify_tutte_condition(g, f, k);
      }
      EXPECT_EQ(tutte, testkit::oracle_partitions(g, k).deficit == 0);
    }
  }
}

TEST(ForestPackProperty, SparsityMatchesSubsetCounts) {
  for (const Graph& g : small_graphs()) {
    for (int k = 1; k <= 2; ++k) {
      for (int l = 0; l < k; ++l) {
        const SparsityResult s = check_forest_sparse(g, k, l);
        EXPECT_EQ(s.holds, testkit::oracle_max_density_excess(g, k, l) <= 0);
        if (!s.holds) {
          const long bound = static_cast<long>(k) * (static_cast<long>(s.violating.size()) - 1) - l;
          EXPECT_GT(induced_count(g, s.violating), bound);
        }
      }
    }
  }
}

TEST(ForestPackProperty, BoundedForestsMatchSearch) {
  for (const Graph& g : testkit::connected_graphs(4, 6, 2)) {
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= a; ++b) {
        const std::vector<int> lower{a, b};
        const std::vector<int> upper{a + 1, 3};
        const auto out = bounded_forests(g, lower, upper);
        EXPECT_EQ(out.feasible, testkit::oracle_bounded_forests(g, lower, upper));
        if (!out.feasible) continue;
        ASSERT_EQ(out.forests.size(), 2u);
        for (int i = 0; i < 2; ++i) {
          const auto& f = out.forests[static_cast<std::size_t>(i)];
          EXPECT_TRUE(is_forest(g, f));
          EXPECT_GE(static_cast<int>(f.size()), lower[static_cast<std::size_t>(i)]);
          EXPECT_LE(static_cast<int>(f.size()), upper[static_cast<std::size_t>(i)]);
        }
      }
    }
  }
}

}  // namespace
}  // namespace packcert
