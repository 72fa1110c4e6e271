#include "packcert/forest_pack.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace packcert {

namespace {

std::vector<EdgeId> all_edges(const Graph& g) {
  std::vector<EdgeId> e(g.num_edges());
  std::iota(e.begin(), e.end(), 0);
  return e;
}

void require_k(int k, const char* what) {
  if (k < 0) throw InputError(std::string(what) + ": k must be non-negative");
}

long full_target(const Graph& g, int k) { return static_cast<long>(k) * std::max(0, g.num_nodes() - 1); }

// Components of the certificate span realise the rank-formula minimum, hence
// a maximum-deficit partition.
DeficientPartition deficient_from_certificate(const Graph& g, int k, const UnionResult& u) {
  DeficientPartition d{components(g, u.certificate), 0};
  d.deficit = partition_deficit(g, d.partition, k);
  if (d.deficit != full_target(g, k) - u.rank) {
    throw std::logic_error("pack_spanning_trees: certificate partition does not realise the deficiency");
  }
  return d;
}

PackOutcome pack_with_order(const Graph& g, int k, std::span<const double> weights) {
  require_k(k, "pack_spanning_trees");
  if (k == 0) return TreePacking{};
  const GraphicMatroid m(g);
  const auto ms = copies(m, k);
  const UnionResult u = matroid_union_max(ms, weights);
  if (u.rank == full_target(g, k)) return TreePacking{u.labeling.classes()};
  return deficient_from_certificate(g, k, u);
}

Graph without_edges(const Graph& g, std::span<const EdgeId> removed) {
  std::vector<bool> drop(g.num_edges(), false);
  for (EdgeId e : removed) drop.at(e) = true;
  Graph h(g.num_nodes());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!drop[e]) h.add_edge(g.edge(e).u, g.edge(e).v);
  }
  return h;
}

// Enumerate l-subsets of `pool` in lexicographic order until `visit` returns
// true. Returns whether it did.
template <class Visit>
bool for_each_subset(std::span<const EdgeId> pool, int l, Visit&& visit) {
  const int size = static_cast<int>(pool.size());
  if (l > size) return false;
  std::vector<int> idx(l);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<EdgeId> chosen(l);
  while (true) {
    for (int i = 0; i < l; ++i) chosen[i] = pool[idx[i]];
    if (visit(std::span<const EdgeId>(chosen))) return true;
    int i = l - 1;
    while (i >= 0 && idx[i] == size - l + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PackOutcome pack_spanning_trees(const Graph& g, int k) { return pack_with_order(g, k, {}); }

PackOutcome min_cost_spanning_trees(const Graph& g, int k, std::span<const double> cost) {
  if (static_cast<int>(cost.size()) != g.num_edges()) throw InputError("min_cost_spanning_trees: cost vector size");
  std::vector<double> weight(cost.begin(), cost.end());
  for (double& w : weight) w = -w;
  return pack_with_order(g, k, weight);
}

bool verify_tree_packing(const Graph& g, int k, const TreePacking& packing) {
  if (static_cast<int>(packing.trees.size()) != k) return false;
  std::vector<bool> used(g.num_edges(), false);
  for (const auto& tree : packing.trees) {
    if (!is_spanning_tree(g, tree)) return false;
    for (EdgeId e : tree) {
      if (used[e]) return false;
      used[e] = true;
    }
  }
  return true;
}

int components_after_removal(const Graph& g, std::span<const EdgeId> removed) {
  std::vector<bool> drop(g.num_edges(), false);
  for (EdgeId e : removed) drop.at(e) = true;
  UnionFind uf(g.num_nodes());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!drop[e]) uf.unite(g.edge(e).u, g.edge(e).v);
  }
  return uf.num_sets();
}

bool verify_tutte_condition(const Graph& g, std::span<const EdgeId> removed, int k) {
  std::set<EdgeId> distinct(removed.begin(), removed.end());
  const long q = components_after_removal(g, removed);
  return static_cast<long>(distinct.size()) >= static_cast<long>(k) * (q - 1);
}

DecomposeOutcome decompose_forests(const Graph& g, int k, std::span<const int> caps) {
  require_k(k, "decompose_forests");
  if (!caps.empty() && static_cast<int>(caps.size()) != k) throw InputError("decompose_forests: need one cap per forest");
  for (int c : caps) {
    if (c < 0) throw InputError("decompose_forests: negative cap");
  }
  const GraphicMatroid m(g);
  std::vector<TruncatedMatroid> truncated;
  std::vector<const MatroidOracle*> ms;
  if (caps.empty()) {
    ms = copies(m, k);
  } else {
    truncated.reserve(caps.size());
    for (int c : caps) truncated.emplace_back(m, c);
    for (const auto& t : truncated) ms.push_back(&t);
  }
  if (k == 0) {
    if (g.num_edges() == 0) return ForestDecomposition{};
    if (!caps.empty()) return CappedViolation{all_edges(g)};
    // Every single edge is dense for k = 0.
    const Edge& e = g.edge(0);
    return DenseSet{{std::min(e.u, e.v), std::max(e.u, e.v)}, induced_count(g, std::vector<NodeId>{e.u, e.v}), 0};
  }
  IndependentCover cover = cover_by_independent(ms);
  if (cover.covered) return ForestDecomposition{cover.labeling.classes()};
  if (!caps.empty()) return CappedViolation{std::move(cover.violating_set)};

  // |Y| > k r(Y) splits over the components of (V, Y); one of them is dense.
  const Partition comp = components(g, cover.violating_set);
  std::vector<int> inside(comp.size(), 0);
  for (EdgeId e : cover.violating_set) ++inside[comp.block_of(g.edge(e).u)];
  for (int b = 0; b < comp.size(); ++b) {
    const auto& nodes = comp.block(b);
    const long bound = static_cast<long>(k) * (static_cast<long>(nodes.size()) - 1);
    if (inside[b] > bound) return DenseSet{nodes, induced_count(g, nodes), bound};
  }
  throw std::logic_error("decompose_forests: covering certificate has no dense component");
}

BoundedForestOutcome bounded_forests(const Graph& g, std::span<const int> lower, std::span<const int> upper) {
  if (lower.size() != upper.size()) throw InputError("bounded_forests: bound vectors differ in length");
  BoundedForestOutcome out;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] < 0 || upper[i] < 0) throw InputError("bounded_forests: negative bound");
    if (lower[i] > upper[i]) return out;
  }
  const GraphicMatroid m(g);
  std::vector<TruncatedMatroid> truncated;
  truncated.reserve(lower.size());
  for (int f : lower) truncated.emplace_back(m, f);
  std::vector<const MatroidOracle*> ms;
  for (const auto& t : truncated) ms.push_back(&t);
  UnionResult u = matroid_union_max(ms);
  const long need = std::accumulate(lower.begin(), lower.end(), 0L);
  if (u.rank < need) {
    out.certificate = std::move(u.certificate);
    return out;
  }
  out.feasible = true;
  out.forests = u.labeling.classes();
  std::vector<bool> used(g.num_edges(), false);
  for (EdgeId e : u.labeling.labeled()) used[e] = true;
  for (std::size_t i = 0; i < out.forests.size(); ++i) {
    auto& forest = out.forests[i];
    for (EdgeId e = 0; e < g.num_edges() && static_cast<int>(forest.size()) < upper[i]; ++e) {
      if (used[e]) continue;
      forest.push_back(e);
      if (is_forest(g, forest)) {
        used[e] = true;
      } else {
        forest.pop_back();
      }
    }
    std::sort(forest.begin(), forest.end());
  }
  return out;
}

ForestDecomposition max_weight_forests(const Graph& g, int k, std::span<const double> weight) {
  require_k(k, "max_weight_forests");
  if (static_cast<int>(weight.size()) != g.num_edges()) throw InputError("max_weight_forests: weight vector size");
  for (double w : weight) {
    if (w < 0) throw InputError("max_weight_forests: negative weight");
  }
  const GraphicMatroid m(g);
  const auto ms = copies(m, k);
  const UnionResult u = matroid_union_max(ms, weight);
  return ForestDecomposition{u.labeling.classes()};
}

Arboricity arboricity(const Graph& g) {
  if (g.num_edges() == 0) return {};
  const int n = g.num_nodes();
  int k = std::max(1, (g.num_edges() + n - 2) / (n - 1));
  while (true) {
    auto outcome = decompose_forests(g, k);
    if (auto* d = std::get_if<ForestDecomposition>(&outcome)) return {k, std::move(d->forests)};
    ++k;
  }
}

Deficiency partition_deficiency(const Graph& g, int k) {
  require_k(k, "partition_deficiency");
  if (k == 0) return {0, Partition::trivial(g.num_nodes())};
  const GraphicMatroid m(g);
  const auto ms = copies(m, k);
  const UnionResult u = matroid_union_max(ms);
  const long value = full_target(g, k) - u.rank;
  if (value == 0) return {0, Partition::trivial(g.num_nodes())};
  return {value, deficient_from_certificate(g, k, u).partition};
}

Partition brick_partition(const Graph& g, int k) {
  Deficiency d = partition_deficiency(g, k);
  if (d.value == 0) return d.witness;
  // The contracted graph is k-forest-sparse; blocks a, b lie in a common
  // tight set exactly when one extra edge ab breaks the k-forest cover.
  const Contraction c = contract(g, d.witness);
  const int q = c.graph.num_nodes();
  UnionFind merged(q);
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) {
      if (merged.find(a) == merged.find(b)) continue;
      Graph probe = c.graph;
      probe.add_edge(a, b);
      if (!std::holds_alternative<ForestDecomposition>(decompose_forests(probe, k))) merged.unite(a, b);
    }
  }
  std::vector<int> labels(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) labels[v] = merged.find(d.witness.block_of(v));
  Partition brick = Partition::from_labels(labels);
  if (partition_deficit(g, brick, k) != d.value) throw std::logic_error("brick_partition: merge lost deficit");
  return brick;
}

AugmentOutcome augment_to_k_tree_connected(const Graph& g, int k, AugmentMode mode, std::optional<long> budget) {
  require_k(k, "augment_to_k_tree_connected");
  const int n = g.num_nodes();
  if (n < 1) throw InputError("augment_to_k_tree_connected: empty graph");
  Deficiency d = partition_deficiency(g, k);
  if (budget && *budget < d.value) return AugmentInfeasible{d.value, std::move(d.witness)};
  if (d.value == 0) return Augmentation{};

  std::vector<Edge> skeleton;
  if (mode == AugmentMode::kStar) {
    for (NodeId v = 1; v < n; ++v) skeleton.push_back({0, v});
  } else {
    UnionFind uf(n);
    for (const Edge& e : g.edges()) {
      if (uf.unite(e.u, e.v)) skeleton.push_back(e);
    }
    for (NodeId v = 1; v < n; ++v) {
      if (uf.unite(0, v)) skeleton.push_back({0, v});
    }
  }
  Graph extended = g;
  for (const Edge& e : skeleton) {
    for (int c = 0; c < k; ++c) extended.add_edge(e.u, e.v);
  }
  const GraphicMatroid m(extended);
  const auto ms = copies(m, k);
  // Original edges first: the greedy union basis keeps a maximum union of k
  // forests of G and completes it with exactly Pi_k skeleton copies.
  const UnionResult u = matroid_union_max(ms);
  Augmentation out;
  for (EdgeId e = g.num_edges(); e < extended.num_edges(); ++e) {
    if (u.labeling.part_of[e] != kUnused) out.new_edges.push_back(extended.edge(e));
  }
  if (static_cast<long>(out.new_edges.size()) != d.value) {
    throw std::logic_error("augment_to_k_tree_connected: added edge count differs from the deficiency");
  }
  return out;
}

ExtensionOutcome extend_forests(const Graph& g, const std::vector<std::vector<EdgeId>>& forests,
                                const std::vector<std::vector<EdgeId>>& allowed, ExtensionMode mode) {
  const int k = static_cast<int>(forests.size());
  const int m = g.num_edges();
  if (!allowed.empty() && static_cast<int>(allowed.size()) != k) {
    throw InputError("extend_forests: need one allowed set per forest");
  }
  std::vector<bool> fixed(m, false);
  std::vector<std::vector<bool>> allowed_mask(k, std::vector<bool>(m, allowed.empty()));
  for (int i = 0; i < k; ++i) {
    if (!allowed.empty()) {
      for (EdgeId e : allowed[i]) {
        if (e < 0 || e >= m) throw InputError("extend_forests: allowed edge out of range");
        allowed_mask[i][e] = true;
      }
    }
    if (!is_forest(g, forests[i])) throw InputError("extend_forests: F_" + std::to_string(i) + " is not a forest");
    for (EdgeId e : forests[i]) {
      if (!allowed_mask[i][e]) throw InputError("extend_forests: F_" + std::to_string(i) + " not inside E_i");
      if (fixed[e]) throw InputError("extend_forests: given forests are not disjoint");
      fixed[e] = true;
    }
  }

  const GraphicMatroid base(g);
  std::vector<ContractedMatroid> contracted;
  contracted.reserve(k);
  for (int i = 0; i < k; ++i) contracted.emplace_back(base, forests[i]);
  std::vector<RestrictedMatroid> restricted;
  restricted.reserve(k);
  for (int i = 0; i < k; ++i) {
    std::vector<bool> mask(m);
    for (EdgeId e = 0; e < m; ++e) mask[e] = allowed_mask[i][e] && !fixed[e];
    restricted.emplace_back(contracted[i], std::move(mask));
  }
  std::vector<const MatroidOracle*> ms;
  for (const auto& r : restricted) ms.push_back(&r);

  std::vector<EdgeId> free_edges;
  for (EdgeId e = 0; e < m; ++e) {
    if (!fixed[e]) free_edges.push_back(e);
  }
  auto assemble = [&](const Labeling& labeling) {
    ForestDecomposition out{forests};
    for (EdgeId e : free_edges) {
      if (labeling.part_of[e] != kUnused) out.forests[labeling.part_of[e]].push_back(e);
    }
    for (auto& f : out.forests) std::sort(f.begin(), f.end());
    return out;
  };

  if (mode == ExtensionMode::kPack) {
    for (int i = 0; i < k; ++i) {
      std::vector<EdgeId> reach = forests[i];
      for (EdgeId e = 0; e < m; ++e) {
        if (allowed_mask[i][e] && !fixed[e]) reach.push_back(e);
      }
      const Partition comp = components(g, reach);
      if (comp.size() > 1) return ExtensionCertificate{i, comp, {}};
    }
    BasisPacking packing = pack_bases(ms);
    if (packing.packed) return assemble(packing.labeling);
    return ExtensionCertificate{-1, std::nullopt, std::move(packing.deficient_set)};
  }
  UnionResult u = matroid_union_max_on(ms, free_edges);
  if (u.rank == static_cast<int>(free_edges.size())) return assemble(u.labeling);
  return ExtensionCertificate{-1, std::nullopt, std::move(u.certificate)};
}

PartitionConnectivity check_partition_connected(const Graph& g, int k, int l) {
  if (k < 1) throw InputError("check_partition_connected: k must be at least 1");
  if (l < 0) throw InputError("check_partition_connected: l must be non-negative");
  PartitionConnectivity out;
  if (g.num_nodes() <= 1) {
    out.holds = true;
    return out;
  }
  if (g.num_edges() < l) {
    out.witness = Partition::singletons(g.num_nodes());
    out.removed = all_edges(g);
    return out;
  }
  auto first = pack_spanning_trees(g, k);
  if (auto* d = std::get_if<DeficientPartition>(&first)) {
    out.witness = d->partition;
    return out;
  }
  if (l == 0) {
    out.holds = true;
    return out;
  }
  auto probe = [&](std::span<const EdgeId> removed) {
    auto outcome = pack_spanning_trees(without_edges(g, removed), k);
    if (auto* d = std::get_if<DeficientPartition>(&outcome)) {
      out.witness = d->partition;
      out.removed.assign(removed.begin(), removed.end());
      return true;
    }
    return false;
  };
  std::vector<EdgeId> tree_edges;
  for (const auto& t : std::get<TreePacking>(first).trees) tree_edges.insert(tree_edges.end(), t.begin(), t.end());
  std::sort(tree_edges.begin(), tree_edges.end());
  if (for_each_subset(tree_edges, l, probe)) return out;
  // For l <= k any violating partition has at least l cross edges inside the
  // packing, so the packing-restricted search is already conclusive.
  if (l <= k) {
    out.holds = true;
    return out;
  }
  const auto every = all_edges(g);
  if (for_each_subset(every, l, probe)) return out;
  out.holds = true;
  return out;
}

SparsityResult check_forest_sparse(const Graph& g, int k, int l) {
  if (l < 0 || l >= k) throw InputError("check_forest_sparse: need 0 <= l < k");
  SparsityResult out;
  if (l == 0) {
    auto outcome = decompose_forests(g, k);
    if (auto* dense = std::get_if<DenseSet>(&outcome)) {
      out.violating = dense->nodes;
      return out;
    }
    out.holds = true;
    return out;
  }
  std::set<std::pair<NodeId, NodeId>> tested;
  for (const Edge& e : g.edges()) {
    const auto key = std::minmax(e.u, e.v);
    if (!tested.insert(key).second) continue;
    Graph probe = g;
    for (int c = 0; c < l; ++c) probe.add_edge(e.u, e.v);
    auto outcome = decompose_forests(probe, k);
    if (auto* dense = std::get_if<DenseSet>(&outcome)) {
      out.violating = dense->nodes;
      return out;
    }
  }
  out.holds = true;
  return out;
}

SparsityResult check_forest_tight(const Graph& g, int k, int l) {
  SparsityResult out = check_forest_sparse(g, k, l);
  out.count_matches = static_cast<long>(g.num_edges()) == full_target(g, k) - l;
  out.holds = out.holds && out.count_matches;
  return out;
}

SparsityResult check_laman(const Graph& g) { return check_forest_tight(g, 2, 1); }

PackOutcome check_body_bar(const Graph& g, int d) {
  if (d < 1) throw InputError("check_body_bar: dimension must be at least 1");
  return pack_spanning_trees(g, d * (d + 1) / 2);
}

PartitionConnectivity check_highly_tree_connected(const Graph& g, int k) {
  return check_partition_connected(g, k, 1);
}

}  // namespace packcert
