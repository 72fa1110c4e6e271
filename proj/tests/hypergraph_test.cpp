#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "packcert/hypergraph.hpp"
#include "packcert/testkit/enumerate.hpp"
#include "packcert/testkit/oracles.hpp"

namespace packcert {
namespace {

std::vector<EdgeId> all_of(const Hypergraph& h) {
  std::vector<EdgeId> out(static_cast<std::size_t>(h.num_hyperedges()));
  for (EdgeId e = 0; e < h.num_hyperedges(); ++e) out[static_cast<std::size_t>(e)] = e;
  return out;
}

// Pairs come from their hyperedges and form a forest.
void expect_valid_trimming(const Hypergraph& h, const Trimming& t) {
  ASSERT_EQ(t.hyperedges.size(), t.pairs.size());
  for (std::size_t i = 0; i < t.pairs.size(); ++i) {
    const auto& z = h.hyperedge(t.hyperedges[i]);
    EXPECT_TRUE(std::count(z.begin(), z.end(), t.pairs[i].u));
    EXPECT_TRUE(std::count(z.begin(), z.end(), t.pairs[i].v));
  }
  const Graph g = trimmed_graph(h.num_nodes(), t);
  std::vector<EdgeId> edges(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) edges[static_cast<std::size_t>(e)] = e;
  EXPECT_TRUE(is_forest(g, edges));
}

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int m) {
  Hypergraph h(n);
  while (h.num_hyperedges() < m) {
    std::vector<NodeId> z;
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) z.push_back(v);
    }
    if (z.size() >= 2) h.add_hyperedge(z);
  }
  return h;
}

TEST(Hypergraph, RejectsSmallHyperedges) {
  Hypergraph h(3);
  EXPECT_THROW(h.add_hyperedge({1}), InputError);
  EXPECT_THROW(h.add_hyperedge({1, 1}), InputError);
  Dypergraph d(3);
  EXPECT_THROW(d.add_dyperedge({0, 1}, 2), InputError);
}

TEST(IsHyperforest, SingleHyperedge) {
  const Hypergraph h(3, {{0, 1, 2}});
  const auto out = is_hyperforest(h, all_of(h));
  const auto* t = std::get_if<Trimming>(&out);
  ASSERT_NE(t, nullptr);
  expect_valid_trimming(h, *t);
}

TEST(IsHyperforest, ParallelPairs) {
  const Hypergraph h(2, {{0, 1}, {0, 1}});
  const auto out = is_hyperforest(h, all_of(h));
  const auto* v = std::get_if<HyperforestViolation>(&out);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->family, (std::vector<EdgeId>{0, 1}));
  EXPECT_EQ(v->union_size, 2);
}

TEST(IsHyperforest, TwoCopiesOfTriple) {
  const Hypergraph h(3, {{0, 1, 2}, {0, 1, 2}});
  const auto out = is_hyperforest(h, all_of(h));
  const auto* t = std::get_if<Trimming>(&out);
  ASSERT_NE(t, nullptr);
  expect_valid_trimming(h, *t);
  EXPECT_EQ(t->pairs.size(), 2u);
}

TEST(HypergraphicRank, Examples) {
  const HypergraphicRank one = hypergraphic_rank(Hypergraph(3, {{0, 1, 2}}));
  EXPECT_EQ(one.rank, 1);
  EXPECT_EQ(one.partition, Partition::singletons(3));
  const HypergraphicRank two = hypergraphic_rank(Hypergraph(3, {{0, 1, 2}, {0, 1, 2}}));
  EXPECT_EQ(two.rank, 2);
  const Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  EXPECT_EQ(hypergraphic_rank(Hypergraph::from_graph(g)).rank, 3);
}

TEST(PackHypertrees, Examples) {
  const auto bad = pack_hypertrees(Hypergraph(3, {{0, 1, 2}}), 1);
  const auto* p = std::get_if<DeficientPartition>(&bad);
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->partition, Partition::singletons(3));
  EXPECT_EQ(p->deficit, 1);

  const Hypergraph twice(3, {{0, 1, 2}, {0, 1, 2}});
  const auto good = pack_hypertrees(twice, 1);
  const auto* t = std::get_if<HypertreePacking>(&good);
  ASSERT_NE(t, nullptr);
  ASSERT_EQ(t->trees.size(), 1u);
  expect_valid_trimming(twice, t->trees[0]);
  EXPECT_EQ(t->trees[0].hyperedges.size(), 2u);
}

TEST(CoverByHyperforests, HyperforestCoversItself) {
  const Hypergraph h(4, {{0, 1, 2}, {2, 3}});
  const auto out = cover_by_hyperforests(h, 1);
  const auto* c = std::get_if<HyperforestCover>(&out);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->forests[0].hyperedges, (std::vector<EdgeId>{0, 1}));
  const auto dense = cover_by_hyperforests(Hypergraph(2, {{0, 1}, {0, 1}}), 1);
  ASSERT_TRUE(std::holds_alternative<DenseSet>(dense));
}

TEST(HypergraphCounts, CrossAndInduced) {
  const Hypergraph h(4, {{0, 1, 2}, {2, 3}, {0, 1}});
  const Partition p(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(cross_count(h, p), 1);
  EXPECT_EQ(induced_count(h, std::vector<NodeId>{0, 1, 2}), 2);
  EXPECT_EQ(components(h, std::vector<EdgeId>{0}), Partition(4, {{0, 1, 2}, {3}}));
}

// Properties.

TEST(HypergraphProperty, HyperforestMatchesEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Hypergraph h = random_hypergraph(rng, n, 1 + static_cast<int>(rng() % 8));
    const auto family = all_of(h);
    const bool expected = testkit::oracle_hyperforest(h, family);
    EXPECT_EQ(hyperforest_condition(h, family), expected);
    const auto out = is_hyperforest(h, family);
    EXPECT_EQ(std::holds_alternative<Trimming>(out), expected);
    if (const auto* t = std::get_if<Trimming>(&out)) {
      expect_valid_trimming(h, *t);
    } else {
      const auto& v = std::get<HyperforestViolation>(out);
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      int covered = 0;
      for (EdgeId e : v.family) {
        for (NodeId x : h.hyperedge(e)) {
          if (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            ++covered;
          }
        }
      }
      EXPECT_EQ(covered, v.union_size);
      EXPECT_LE(v.union_size, static_cast<int>(v.family.size()));
    }
  }
}

TEST(HypergraphProperty, RankMatchesWhiteleyAndSearch) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 2 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 6));
    const HypergraphicRank r = hypergraphic_rank(h);
    EXPECT_EQ(r.rank, testkit::oracle_hypergraphic_rank(h));
    EXPECT_EQ(r.rank, testkit::oracle_whiteley(h));
    EXPECT_EQ(h.num_nodes() - r.partition.size() + cross_count(h, r.partition), r.rank);
  }
}

TEST(HypergraphProperty, PackingAndCoveringMatchEnumeration) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 150; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 2 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 7));
    for (int k = 1; k <= 2; ++k) {
      const auto pack = pack_hypertrees(h, k);
      EXPECT_EQ(std::holds_alternative<HypertreePacking>(pack), testkit::oracle_hyper_partition_connected(h, k));
      if (const auto* p = std::get_if<HypertreePacking>(&pack)) {
        for (const auto& t : p->trees) {
          expect_valid_trimming(h, t);
          EXPECT_EQ(static_cast<int>(t.hyperedges.size()), h.num_nodes() - 1);
        }
      } else {
        const auto& d = std::get<DeficientPartition>(pack);
        EXPECT_LT(cross_count(h, d.partition), k * (d.partition.size() - 1));
      }
      const auto cover = cover_by_hyperforests(h, k);
      EXPECT_EQ(std::holds_alternative<HyperforestCover>(cover), testkit::oracle_hyper_sparse(h, k));
      EXPECT_EQ(testkit::oracle_hyper_sparse(h, k), testkit::oracle_hyperforest_cover(h, k));
      if (const auto* x = std::get_if<DenseSet>(&cover)) {
        EXPECT_GT(induced_count(h, x->nodes), k * (static_cast<int>(x->nodes.size()) - 1));
      }
    }
  }
}

TEST(HypergraphProperty, GraphDegeneracy) {
  for (const Graph& g : testkit::connected_graphs(5, 7)) {
    const Hypergraph h = Hypergraph::from_graph(g);
    EXPECT_EQ(hypergraphic_rank(h).rank, g.num_nodes() - 1);
    for (int k = 1; k <= 2; ++k) {
      EXPECT_EQ(std::holds_alternative<HypertreePacking>(pack_hypertrees(h, k)),
                std::holds_alternative<TreePacking>(pack_spanning_trees(g, k)));
    }
  }
}

}  // namespace
}  // namespace packcert
