// Exhaustive ground truth for small instances. Nothing here calls the
// polynomial algorithms of the library; every answer comes from direct
// enumeration of partitions, subsets, labelings or game positions.
#pragma once

#include <optional>
#include <vector>

#include "packcert/game.hpp"
#include "packcert/graph.hpp"
#include "packcert/hypergraph.hpp"
#include "packcert/matroid.hpp"

namespace packcert::testkit {

inline constexpr int kPartitionNodeCap = 10;
inline constexpr int kEdgeSearchCap = 16;
inline constexpr int kSubsetNodeCap = 16;
inline constexpr int kMinimaxEdgeCap = 12;

/// max over partitions of k(|P|-1) - e(P), with a first maximiser in
/// restricted-growth order. Zero (trivial partition) when nothing is
/// positive.
struct PartitionOracle {
  long deficit = 0;
  Partition argmax;
  /// Fewest blocks among maximisers.
  int min_blocks_at_max = 1;
};
PartitionOracle oracle_partitions(const Graph& g, int k);

/// e(P) >= k(|P|-1) + l for every partition with at least two blocks.
bool oracle_partition_connected(const Graph& g, int k, int l);

/// k edge-disjoint spanning trees by search over the list of spanning trees.
std::optional<std::vector<std::vector<EdgeId>>> oracle_trees(const Graph& g, int k);

/// Edge partition into k forests by backtracking.
bool oracle_forest_cover(const Graph& g, int k);
/// Forests in k classes with lower[i] <= |F_i| <= upper[i].
bool oracle_bounded_forests(const Graph& g, const std::vector<int>& lower, const std::vector<int>& upper);
/// max over node sets X with |X| >= 1 of i(X) - k(|X|-1).
long oracle_max_density_excess(const Graph& g, int k, int l = 0);
int oracle_arboricity(const Graph& g);

/// min d_G(X) over proper nonempty X.
int oracle_edge_connectivity(const Graph& g);
/// min rho_D(X) over nonempty X inside V - root.
int oracle_rooted_connectivity(const Digraph& d, NodeId root);
/// min dyperedge in-degree over nonempty X inside V - root.
int oracle_dyper_rooted_connectivity(const Dypergraph& d, NodeId root);

/// k arc-disjoint spanning arborescences containing the seeds, by choosing
/// an entering arc per node and tree.
bool oracle_arborescence_packing(const Digraph& d, NodeId root, int k,
                                 const std::vector<std::vector<EdgeId>>& seeds = {});
/// Every arc in at least one of k spanning root-arborescences.
bool oracle_arborescence_cover(const Digraph& d, NodeId root, int k);
/// Arcs split into k branchings.
bool oracle_branching_cover(const Digraph& d, int k);
/// k edge-disjoint spanning mixed arborescences: some orientation of the
/// edges makes the digraph rooted k-arc-connected.
bool oracle_mixed_packing(const MixedGraph& m, NodeId root, int k);

/// Some orientation with rho(X) >= k and rho(V-X) >= l for X inside V-root.
bool oracle_orientation(const Graph& g, NodeId root, int k, int l);
bool oracle_hyper_orientation(const Hypergraph& h, NodeId root, int k, int l);
/// rho(X) >= k and rho(V - X) >= l by subset enumeration.
bool oracle_is_rooted_kl(const Dypergraph& d, NodeId root, int k, int l);

/// Every nonempty sub-family J spans at least |J|+1 nodes.
bool oracle_hyperforest(const Hypergraph& h, const std::vector<EdgeId>& family);
/// Largest hyperforest sub-family.
int oracle_hypergraphic_rank(const Hypergraph& h);
/// min over partitions of n - |P| + e_H(P).
int oracle_whiteley(const Hypergraph& h);
/// e_H(P) >= k(|P|-1) for every partition.
bool oracle_hyper_partition_connected(const Hypergraph& h, int k);
/// i_H(X) <= k(|X|-1) for every nonempty X.
bool oracle_hyper_sparse(const Hypergraph& h, int k);
/// Hyperedges split into k hyperforests.
bool oracle_hyperforest_cover(const Hypergraph& h, int k);

/// Some node set U containing s and t with G|U holding two disjoint
/// spanning trees.
bool oracle_st_region(const Graph& g, NodeId s, NodeId t);

/// Winner under optimal play from the position, by memoised full search.
Side oracle_minimax(const GameState& state);

/// Random hereditary and augmentation probes; a description of the first
/// violation, or nothing.
std::optional<std::string> audit_matroid(const MatroidOracle& m, unsigned long long seed, int trials);

}  // namespace packcert::testkit
