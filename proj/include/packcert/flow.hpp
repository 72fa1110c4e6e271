// Small integer max-flow used for Menger-type probes. Augmenting paths are
// found by BFS scanning arcs in insertion order, so residual cuts are
// reproducible.
#pragma once

#include <limits>
#include <vector>

#include "packcert/graph.hpp"

namespace packcert {

class FlowNetwork {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

  explicit FlowNetwork(int n);

  int add_node();
  /// Returns the arc index; its reverse residual arc is index ^ 1.
  int add_arc(int from, int to, int capacity);

  /// Maximum flow from s to t, stopping early once `limit` units are routed.
  int max_flow(int s, int t, int limit = kInfinite);

  /// Nodes reachable from s in the residual network after max_flow.
  std::vector<bool> source_side(int s) const;

  int num_nodes() const { return static_cast<int>(adj_.size()); }
  int flow_on(int arc) const { return arcs_[arc ^ 1].residual; }

 private:
  struct ResidualArc {
    int to;
    int residual;
  };
  std::vector<ResidualArc> arcs_;
  std::vector<std::vector<int>> adj_;
};

struct InCut {
  int value = 0;
  std::vector<NodeId> sink_side;  // X with t in X, root not in X, rho_D(X) = value
};

/// Maximum number of arc-disjoint root->t dipaths together with a set X
/// (t in X, root outside) entered by exactly that many arcs.
InCut min_in_cut(const Digraph& d, NodeId root, NodeId t);

}  // namespace packcert
