#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "packcert/hypergraph.hpp"
#include "packcert/matroid.hpp"
#include "packcert/testkit/oracles.hpp"

namespace packcert {
namespace {

using fixtures::k4;
using fixtures::triangle;

std::vector<ElementId> members(unsigned mask, int size) {
  std::vector<ElementId> out;
  for (int i = 0; i < size; ++i) {
    if (mask >> i & 1u) out.push_back(i);
  }
  return out;
}

// min over X of |S - X| + sum_i r_i(X).
int union_rank_formula(std::span<const MatroidOracle* const> ms) {
  const int n = ms[0]->ground_size();
  int best = 1 << 30;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const auto x = members(mask, n);
    int value = n - static_cast<int>(x.size());
    for (const auto* m : ms) value += m->rank(x);
    best = std::min(best, value);
  }
  return best;
}

// Every labeling with parts 0..k-1 or unused; returns the best labeled count
// plus whether a full basis packing / total cover exists.
struct LabelSearch {
  int max_labeled = 0;
  bool packs = false;
  bool covers = false;
};

LabelSearch search_labelings(std::span<const MatroidOracle* const> ms) {
  const int n = ms[0]->ground_size();
  const int k = static_cast<int>(ms.size());
  LabelSearch out;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= k + 1;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < n; ++i) {
      label[static_cast<std::size_t>(i)] = static_cast<int>(c % (k + 1)) - 1;
      c /= k + 1;
    }
    bool ok = true;
    bool bases = true;
    int labeled = 0;
    for (int p = 0; p < k && ok; ++p) {
      std::vector<ElementId> cls;
      for (int i = 0; i < n; ++i) {
        if (label[static_cast<std::size_t>(i)] == p) cls.push_back(i);
      }
      ok = ms[static_cast<std::size_t>(p)]->is_independent(cls);
      bases = bases && static_cast<int>(cls.size()) == ms[static_cast<std::size_t>(p)]->full_rank();
      labeled += static_cast<int>(cls.size());
    }
    if (!ok) continue;
    out.max_labeled = std::max(out.max_labeled, labeled);
    out.packs = out.packs || bases;
    out.covers = out.covers || labeled == n;
  }
  return out;
}

TEST(MatroidUnion, FreeMatroidLabelsEverything) {
  const UniformMatroid m = UniformMatroid::free(5);
  const MatroidOracle* ms[] = {&m};
  const UnionResult r = matroid_union_max(ms);
  EXPECT_EQ(r.rank, 5);
  EXPECT_TRUE(r.certificate.empty());
  EXPECT_TRUE(r.labeling.unused().empty());
}

TEST(MatroidUnion, TriangleSplitsIntoTwoForests) {
  const GraphicMatroid m(triangle());
  const auto ms = copies(m, 2);
  const UnionResult r = matroid_union_max(ms);
  EXPECT_EQ(r.rank, 3);
  EXPECT_EQ(r.labeling.labeled_count(), 3);
  EXPECT_TRUE(verify_labeling(ms, r.labeling));
}

TEST(MatroidUnion, CertificateAttainsFormula) {
  const GraphicMatroid m(Graph(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}}));
  const auto ms = copies(m, 2);
  const UnionResult r = matroid_union_max(ms);
  EXPECT_EQ(r.rank, 3);
  int value = m.ground_size() - static_cast<int>(r.certificate.size());
  for (const auto* mi : ms) value += mi->rank(r.certificate);
  EXPECT_EQ(value, r.rank);
}

TEST(MatroidUnion, WeightsPreferHeavyElements) {
  const UniformMatroid m(3, 1);
  const MatroidOracle* ms[] = {&m};
  const double w[] = {1.0, 5.0, 2.0};
  const UnionResult r = matroid_union_max(ms, w);
  EXPECT_EQ(r.labeling.labeled(), (std::vector<ElementId>{1}));
}

TEST(PackBases, RankZeroCopiesPackTrivially) {
  const UniformMatroid m(3, 0);
  const auto ms = copies(m, 3);
  const BasisPacking p = pack_bases(ms);
  EXPECT_TRUE(p.packed);
  EXPECT_EQ(p.labeling.labeled_count(), 0);
}

TEST(PackBases, K4HoldsTwoSpanningTrees) {
  const GraphicMatroid m(k4());
  const auto ms = copies(m, 2);
  const BasisPacking p = pack_bases(ms);
  ASSERT_TRUE(p.packed);
  for (const auto& cls : p.labeling.classes()) EXPECT_TRUE(is_spanning_tree(k4(), cls));
}

TEST(PackBases, TriangleCertificate) {
  const GraphicMatroid m(triangle());
  const auto ms = copies(m, 2);
  const BasisPacking p = pack_bases(ms);
  ASSERT_FALSE(p.packed);
  int corank_sum = 0;
  for (const auto* mi : ms) corank_sum += corank(*mi, p.deficient_set);
  EXPECT_LT(static_cast<int>(p.deficient_set.size()), corank_sum);
}

TEST(CoverByIndependent, Examples) {
  const UniformMatroid free4 = UniformMatroid::free(4);
  const MatroidOracle* one[] = {&free4};
  EXPECT_TRUE(cover_by_independent(one).covered);

  const GraphicMatroid m(triangle());
  const auto two = copies(m, 2);
  EXPECT_TRUE(cover_by_independent(two).covered);

  const auto single = copies(m, 1);
  const IndependentCover c = cover_by_independent(single);
  ASSERT_FALSE(c.covered);
  EXPECT_EQ(c.violating_set, (std::vector<ElementId>{0, 1, 2}));
  EXPECT_GT(static_cast<int>(c.violating_set.size()), m.rank(c.violating_set));
}

TEST(Corank, Examples) {
  const GraphicMatroid tri(triangle());
  EXPECT_EQ(corank(tri, std::vector<ElementId>{}), 0);
  EXPECT_EQ(corank(tri, std::vector<ElementId>{0}), 0);
  const GraphicMatroid p3(fixtures::path(3));
  EXPECT_EQ(corank(p3, std::vector<ElementId>{0}), 1);
}

TEST(MatroidWrappers, TruncationRestrictionContraction) {
  const GraphicMatroid tri(triangle());
  const TruncatedMatroid t(tri, 1);
  EXPECT_EQ(t.full_rank(), 1);
  const RestrictedMatroid r = deletion(tri, std::vector<ElementId>{0});
  EXPECT_FALSE(r.is_independent(std::vector<ElementId>{0}));
  EXPECT_EQ(r.full_rank(), 2);
  const ContractedMatroid c(tri, {0});
  EXPECT_TRUE(c.is_independent(std::vector<ElementId>{1}));
  EXPECT_FALSE(c.is_independent(std::vector<ElementId>{1, 2}));
  EXPECT_FALSE(c.is_independent(std::vector<ElementId>{0}));
}

TEST(MatroidWrappers, CircuitOfGraphicMatroid) {
  const GraphicMatroid tri(triangle());
  EXPECT_EQ(tri.circuit(std::vector<ElementId>{0, 1}, 2), (std::vector<ElementId>{0, 1}));
  EXPECT_TRUE(tri.circuit(std::vector<ElementId>{0}, 2).empty());
}

TEST(MatroidAudit, ShippedOraclesPass) {
  const GraphicMatroid g(k4());
  const PartitionMatroid p({0, 0, 1, 1, 1, -1}, {1, 2});
  const UniformMatroid u(7, 3);
  const TruncatedMatroid t(g, 2);
  const HypergraphicMatroid h(Hypergraph(4, {{0, 1, 2}, {1, 2, 3}, {0, 3}, {0, 1, 2, 3}, {2, 3}}));
  const ContractedMatroid c(g, {0, 2});
  const MatroidOracle* all[] = {&g, &p, &u, &t, &h, &c};
  for (const auto* m : all) {
    const auto problem = testkit::audit_matroid(*m, 7, 300);
    EXPECT_FALSE(problem.has_value()) << *problem;
  }
}

// Graph on random multi-edges over n nodes.
Graph random_graph(std::mt19937_64& rng, int n, int m) {
  Graph g(n);
  while (g.num_edges() < m) {
    const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
    const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

TEST(MatroidUnionProperty, RankMatchesFormulaAndLabelSearch) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const int m = 3 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(rng, n, m);
    const GraphicMatroid gm(g);
    const TruncatedMatroid tm(gm, 1 + static_cast<int>(rng() % 2));
    std::vector<int> cls(static_cast<std::size_t>(m));
    for (auto& c : cls) c = static_cast<int>(rng() % 3);
    const PartitionMatroid pm(cls, {1, 1, 2});
    const std::vector<std::vector<const MatroidOracle*>> families = {
        {&gm, &gm}, {&gm, &tm}, {&pm, &gm}, {&tm, &pm, &gm}};
    for (const auto& fam : families) {
      const UnionResult r = matroid_union_max(fam);
      EXPECT_TRUE(verify_labeling(fam, r.labeling));
      EXPECT_EQ(r.rank, r.labeling.labeled_count());
      EXPECT_EQ(r.rank, union_rank_formula(fam));
      const LabelSearch s = search_labelings(fam);
      EXPECT_EQ(r.rank, s.max_labeled);
      EXPECT_EQ(pack_bases(fam).packed, s.packs);
      EXPECT_EQ(cover_by_independent(fam).covered, s.covers);
    }
  }
}

TEST(MatroidUnion, NonMatroidOracleIsReported) {
  // {0,1} and {2} independent, but {0,1} cannot be reached from {2}: no
  // augmentation axiom.
  class Broken : public MatroidOracle {
   public:
    int ground_size() const override { return 3; }
    bool is_independent(std::span<const ElementId> s) const override {
      if (s.size() <= 1) return true;
      return s.size() == 2 && s[0] + s[1] == 1;
    }
  };
  const Broken b;
  EXPECT_TRUE(testkit::audit_matroid(b, 1, 200).has_value());
}

}  // namespace
}  // namespace packcert
