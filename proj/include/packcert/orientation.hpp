// Orientations of graphs and hypergraphs with rooted connectivity
// requirements. Arc (dyperedge) i of a produced orientation is edge
// (hyperedge) i of the input.
#pragma once

#include <optional>
#include <variant>

#include "packcert/forest_pack.hpp"
#include "packcert/graph.hpp"
#include "packcert/hypergraph.hpp"

namespace packcert {

using OrientOutcome = std::variant<Digraph, DeficientPartition>;

/// Rooted k-arc-connected orientation: k packed spanning trees directed away
/// from the root, every other edge from its lower to its higher end.
OrientOutcome orient_rooted_k(const Graph& g, NodeId root, int k);

/// rho(X) >= k and rho(V - X) >= l for every nonempty X inside V - root.
bool is_rooted_kl_connected(const Digraph& d, NodeId root, int k, int l);
bool is_rooted_kl_connected(const Dypergraph& d, NodeId root, int k, int l);

inline constexpr int kOrientationSearchNodeCap = 10;
inline constexpr long kOrientationSearchEffort = 2'000'000;

struct KlOrientation {
  bool holds = false;
  std::optional<Partition> witness;  // e_G(P) < k(|P|-1) + l
  std::optional<Digraph> orientation;
  /// Set when holds but no orientation was built: more than 10 nodes, or
  /// the search budget ran out.
  bool construction_skipped = false;
};

/// Decides (k,l)-partition-connectivity exactly; for small graphs also
/// searches for a rooted (k,l)-arc-connected orientation.
KlOrientation check_orientation_kl(const Graph& g, NodeId root, int k, int l);

using HyperOrientOutcome = std::variant<Dypergraph, DeficientPartition>;

/// Out-rooted k-arc-connected orientation from k packed spanning hypertrees;
/// a hyperedge outside the packing gets its lowest member as head.
HyperOrientOutcome orient_hypergraph_rooted_k(const Hypergraph& h, NodeId root, int k);

/// d_P(Z): number of blocks meeting Z.
int blocks_met(const Partition& p, const std::vector<NodeId>& z);

struct HyperOrientationCheck {
  bool holds = false;
  std::optional<Partition> witness;
  /// 'A' for e_H(P) >= k(|P|-1) + l, 'B' for
  /// sum_Z (d_P(Z) - 1) >= l(|P|-1) + k (checked only when l > k).
  char violated = 0;
};

/// Partition conditions for a (k,l)-arc-connected orientation of H, over
/// partitions with at least two blocks. n <= 12.
HyperOrientationCheck check_hyper_orientation(const Hypergraph& h, NodeId root, int k, int l);

/// sum_Z (d_P(Z) - 1) >= h(|P| - 1) for every partition.
bool is_weakly_partition_connected(const Hypergraph& hg, int h);

inline constexpr int kHyperOrientationNodeCap = 12;

}  // namespace packcert
