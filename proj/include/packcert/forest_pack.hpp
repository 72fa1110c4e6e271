// Spanning-tree packing, forest covering, partition deficiency, augmentation,
// forest extension, partition-connectivity and sparsity counts. Every routine
// is a thin certified layer over the matroid union in matroid.hpp.
#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "packcert/graph.hpp"
#include "packcert/matroid.hpp"

namespace packcert {

struct TreePacking {
  std::vector<std::vector<EdgeId>> trees;
};

/// A partition with e_G(P) < k(|P|-1) (+ l where relevant).
struct DeficientPartition {
  Partition partition;
  long deficit = 0;
};

using PackOutcome = std::variant<TreePacking, DeficientPartition>;

/// k edge-disjoint spanning trees or a partition with e_G(P) < k(|P|-1).
/// The partition realises the maximum k-deficit.
PackOutcome pack_spanning_trees(const Graph& g, int k);

/// Same as pack_spanning_trees but picks the trees of minimum total cost
/// (greedy over the union matroid in increasing cost order).
PackOutcome min_cost_spanning_trees(const Graph& g, int k, std::span<const double> cost);

bool verify_tree_packing(const Graph& g, int k, const TreePacking& packing);

/// q(G,F): number of components of (V, E - F).
int components_after_removal(const Graph& g, std::span<const EdgeId> removed);

/// |F| >= k (q(G,F) - 1).
bool verify_tutte_condition(const Graph& g, std::span<const EdgeId> removed, int k);

struct ForestDecomposition {
  std::vector<std::vector<EdgeId>> forests;
};

/// Node set with i_G(X) > k(|X| - 1).
struct DenseSet {
  std::vector<NodeId> nodes;
  int induced = 0;
  long bound = 0;  // k(|X|-1)
};

/// Edge set Y with |Y| > sum_i min(cap_i, r(Y)); certifies that no capped
/// decomposition exists.
struct CappedViolation {
  std::vector<EdgeId> edges;
};

using DecomposeOutcome = std::variant<ForestDecomposition, DenseSet, CappedViolation>;

/// Partition E into k forests, forest i of size at most caps[i] when caps are
/// given.
DecomposeOutcome decompose_forests(const Graph& g, int k, std::span<const int> caps = {});

/// k disjoint forests (not necessarily covering E) with
/// lower[i] <= |F_i| <= upper[i]. Feasible exactly when forests of sizes
/// lower[i] exist, i.e. when the union of the graphic matroid truncated at
/// each lower[i] has rank sum_i lower[i].
struct BoundedForestOutcome {
  bool feasible = false;
  std::vector<std::vector<EdgeId>> forests;
  /// When infeasible because of the graph: X with
  /// |E - X| + sum_i min(lower_i, r(X)) < sum_i lower_i.
  std::vector<EdgeId> certificate;
};
BoundedForestOutcome bounded_forests(const Graph& g, std::span<const int> lower, std::span<const int> upper);

/// Maximum total weight of the union of k forests (weights non-negative).
ForestDecomposition max_weight_forests(const Graph& g, int k, std::span<const double> weight);

struct Arboricity {
  int value = 0;
  std::vector<std::vector<EdgeId>> forests;
};
Arboricity arboricity(const Graph& g);

/// Largest k-deficit over all partitions, with a partition realising it
/// (the trivial partition when the deficiency is zero).
struct Deficiency {
  long value = 0;
  Partition witness;
};
Deficiency partition_deficiency(const Graph& g, int k);

/// The minimum-size partition of maximum k-deficit: a maximum-deficit
/// partition whose blocks are merged along the tight sets of the contracted
/// graph.
Partition brick_partition(const Graph& g, int k);

enum class AugmentMode { kStar, kParallel };

struct Augmentation {
  std::vector<Edge> new_edges;
};

struct AugmentInfeasible {
  long required = 0;
  Partition witness;
};

using AugmentOutcome = std::variant<Augmentation, AugmentInfeasible>;

/// Exactly Pi_k(G) new edges making G k-tree-connected. Star mode attaches
/// every new edge to node 0; parallel mode duplicates edges of a spanning
/// forest of G (joined across components through node 0).
AugmentOutcome augment_to_k_tree_connected(const Graph& g, int k, AugmentMode mode,
                                           std::optional<long> budget = std::nullopt);

enum class ExtensionMode { kPack, kCover };

/// Either class `part` cannot span at all (its allowed edges leave
/// `partition` disconnected), or the free-edge set `edges` violates the
/// packing (|X| < sum t_i(X)) or covering (|X| > sum r_i(X)) condition.
struct ExtensionCertificate {
  int part = -1;
  std::optional<Partition> partition;
  std::vector<EdgeId> edges;
};

using ExtensionOutcome = std::variant<ForestDecomposition, ExtensionCertificate>;

/// Extend given disjoint forests F_i inside allowed sets E_i to disjoint
/// spanning trees (pack) or to a decomposition of E into forests (cover).
/// An empty `allowed` means E_i = E for every i.
ExtensionOutcome extend_forests(const Graph& g, const std::vector<std::vector<EdgeId>>& forests,
                                const std::vector<std::vector<EdgeId>>& allowed, ExtensionMode mode);

struct PartitionConnectivity {
  bool holds = false;
  /// On failure: partition with e_G(P) < k(|P|-1) + l.
  std::optional<Partition> witness;
  /// The l edges whose removal destroyed k-tree-connectivity, if any.
  std::vector<EdgeId> removed;
};

/// e_G(P) >= k(|P|-1) + l for every partition with at least two blocks.
PartitionConnectivity check_partition_connected(const Graph& g, int k, int l);

struct SparsityResult {
  bool holds = false;
  /// i_G(X) > k(|X|-1) - l on failure.
  std::vector<NodeId> violating;
  bool count_matches = true;  // tightness only: |E| = k(n-1) - l
};

SparsityResult check_forest_sparse(const Graph& g, int k, int l);
SparsityResult check_forest_tight(const Graph& g, int k, int l);
SparsityResult check_laman(const Graph& g);

/// d(d+1)/2 edge-disjoint spanning trees.
PackOutcome check_body_bar(const Graph& g, int d);

/// e_G(P) >= k(|P|-1) + 1 for every partition.
PartitionConnectivity check_highly_tree_connected(const Graph& g, int k);

}  // namespace packcert
