#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "packcert/arborescence.hpp"
#include "packcert/orientation.hpp"
#include "packcert/testkit/enumerate.hpp"
#include "packcert/testkit/oracles.hpp"

namespace packcert {
namespace {

using fixtures::k4;
using fixtures::triangle;

// Arc i must join the endpoints of edge i.
void expect_orients(const Graph& g, const Digraph& d) {
  ASSERT_EQ(d.num_arcs(), g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const Arc& a = d.arc(e);
    EXPECT_TRUE((a.tail == ed.u && a.head == ed.v) || (a.tail == ed.v && a.head == ed.u));
  }
}

TEST(OrientRootedK, TreeBecomesOutArborescence) {
  const Graph g(4, {{1, 0}, {1, 2}, {3, 1}});
  const OrientOutcome out = orient_rooted_k(g, 2, 1);
  const auto* d = std::get_if<Digraph>(&out);
  ASSERT_NE(d, nullptr);
  expect_orients(g, *d);
  EXPECT_TRUE(is_spanning_arborescence(*d, 2, std::vector<EdgeId>{0, 1, 2}));
}

TEST(OrientRootedK, TriangleCannotBeTwoConnected) {
  const OrientOutcome out = orient_rooted_k(triangle(), 0, 2);
  const auto* p = std::get_if<DeficientPartition>(&out);
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->partition, Partition::singletons(3));
}

TEST(OrientRootedK, K4TwoConnected) {
  const OrientOutcome out = orient_rooted_k(k4(), 0, 2);
  const auto* d = std::get_if<Digraph>(&out);
  ASSERT_NE(d, nullptr);
  expect_orients(k4(), *d);
  EXPECT_GE(rooted_connectivity(*d, 0).value, 2);
}

TEST(OrientationKl, Examples) {
  const Graph c4x2 = fixtures::repeated(fixtures::cycle(4), 2);
  const KlOrientation c = check_orientation_kl(c4x2, 0, 1, 1);
  EXPECT_TRUE(c.holds);
  ASSERT_TRUE(c.orientation.has_value());
  EXPECT_TRUE(is_rooted_kl_connected(*c.orientation, 0, 1, 1));

  const KlOrientation k = check_orientation_kl(k4(), 0, 2, 1);
  EXPECT_FALSE(k.holds);
  ASSERT_TRUE(k.witness.has_value());
  EXPECT_GT(partition_deficit(k4(), *k.witness, 2, 1), 0);

  const KlOrientation zero = check_orientation_kl(k4(), 0, 2, 0);
  EXPECT_TRUE(zero.holds);
  ASSERT_TRUE(zero.orientation.has_value());
  EXPECT_TRUE(is_rooted_kl_connected(*zero.orientation, 0, 2, 0));
}

TEST(OrientHypergraph, Examples) {
  const Hypergraph single(3, {{0, 1, 2}});
  const HyperOrientOutcome bad = orient_hypergraph_rooted_k(single, 0, 1);
  EXPECT_TRUE(std::holds_alternative<DeficientPartition>(bad));

  const Hypergraph twice(3, {{0, 1, 2}, {0, 1, 2}});
  const HyperOrientOutcome good = orient_hypergraph_rooted_k(twice, 0, 1);
  const auto* d = std::get_if<Dypergraph>(&good);
  ASSERT_NE(d, nullptr);
  EXPECT_TRUE(is_rooted_kl_connected(*d, 0, 1, 0));
  EXPECT_TRUE(testkit::oracle_is_rooted_kl(*d, 0, 1, 0));
}

TEST(OrientHypergraph, GraphCaseMatchesGraphOrientation) {
  for (const Graph& g : testkit::connected_graphs(5, 7)) {
    const auto hyper = orient_hypergraph_rooted_k(Hypergraph::from_graph(g), 0, 2);
    const auto plain = orient_rooted_k(g, 0, 2);
    EXPECT_EQ(hyper.index(), plain.index());
  }
}

TEST(HyperOrientationCheck, SingleHyperedgeOnThreeNodes) {
  const Hypergraph h(3, {{0, 1, 2}});
  EXPECT_TRUE(check_hyper_orientation(h, 0, 0, 1).holds);
  const HyperOrientationCheck c = check_hyper_orientation(h, 0, 1, 0);
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.violated, 'A');
  EXPECT_TRUE(is_weakly_partition_connected(h, 1));
}

TEST(HyperOrientationCheck, GraphCaseEqualParameters) {
  // For k = l on graphs the condition reads e(P) >= k|P|.
  for (const Graph& g : testkit::connected_graphs(5, 8)) {
    const Hypergraph h = Hypergraph::from_graph(g);
    for (int k = 1; k <= 2; ++k) {
      bool expected = true;
      for_each_partition(g.num_nodes(), [&](const std::vector<int>& labels, int blocks) {
        if (blocks < 2) return false;
        const Partition p = Partition::from_labels(labels);
        if (cross_count(g, p) < k * blocks) expected = false;
        return !expected;
      });
      EXPECT_EQ(check_hyper_orientation(h, 0, k, k).holds, expected);
    }
  }
}

TEST(BlocksMet, CountsDistinctBlocks) {
  const Partition p(4, {{0, 1}, {2}, {3}});
  EXPECT_EQ(blocks_met(p, {0, 1}), 1);
  EXPECT_EQ(blocks_met(p, {0, 2, 3}), 3);
}

// Properties.

TEST(OrientationProperty, ProducedOrientationsPassCutChecks) {
  for (const Graph& g : testkit::connected_graphs(6, 9)) {
    for (int k = 1; k <= 2; ++k) {
      const OrientOutcome out = orient_rooted_k(g, 0, k);
      const bool packs = std::holds_alternative<TreePacking>(pack_spanning_trees(g, k));
      EXPECT_EQ(std::holds_alternative<Digraph>(out), packs);
      if (const auto* d = std::get_if<Digraph>(&out)) {
        expect_orients(g, *d);
        EXPECT_TRUE(testkit::oracle_is_rooted_kl(Dypergraph::from_digraph(*d), 0, k, 0));
      }
    }
  }
}

TEST(OrientationProperty, KlDecisionMatchesOrientationSearch) {
  auto graphs = testkit::connected_graphs(5, 7);
  const auto multi = testkit::connected_graphs(4, 7, 3);
  graphs.insert(graphs.end(), multi.begin(), multi.end());
  for (const Graph& g : graphs) {
    for (int k = 1; k <= 2; ++k) {
      for (int l = 0; l <= k; ++l) {
        const KlOrientation c = check_orientation_kl(g, 0, k, l);
        EXPECT_EQ(c.holds, testkit::oracle_orientation(g, 0, k, l));
        if (c.orientation) {
          expect_orients(g, *c.orientation);
          EXPECT_TRUE(testkit::oracle_is_rooted_kl(Dypergraph::from_digraph(*c.orientation), 0, k, l));
        }
      }
    }
  }
}

TEST(OrientationProperty, HyperCheckerMatchesHeadSearch) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    Hypergraph h(n);
    const int m = 1 + static_cast<int>(rng() % 5);
    while (h.num_hyperedges() < m) {
      std::vector<NodeId> z;
      for (int v = 0; v < n; ++v) {
        if (rng() % 2) z.push_back(v);
      }
      if (z.size() >= 2) h.add_hyperedge(z);
    }
    for (int k = 0; k <= 2; ++k) {
      for (int l = 0; l <= 2; ++l) {
        EXPECT_EQ(check_hyper_orientation(h, 0, k, l).holds, testkit::oracle_hyper_orientation(h, 0, k, l))
            << trial << " k=" << k << " l=" << l;
      }
    }
    const auto out = orient_hypergraph_rooted_k(h, 0, 1);
    if (const auto* d = std::get_if<Dypergraph>(&out)) {
      EXPECT_TRUE(testkit::oracle_is_rooted_kl(*d, 0, 1, 0));
    } else {
      EXPECT_FALSE(testkit::oracle_hyper_partition_connected(h, 1));
    }
  }
}

}  // namespace
}  // namespace packcert
