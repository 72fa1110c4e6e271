// Rooted connectivity, arc-disjoint arborescence packing (with fixed partial
// arborescences), and checkers for the directed covering and mixed packing
// conditions.
#pragma once

#include <limits>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "packcert/graph.hpp"
#include "packcert/hypergraph.hpp"

namespace packcert {

struct RootedConnectivity {
  /// min rho_D(X) over nonempty X inside V - root; int max when n = 1.
  int value = std::numeric_limits<int>::max();
  std::vector<NodeId> minimizer;
};

RootedConnectivity rooted_connectivity(const Digraph& d, NodeId root);

struct ArborescencePacking {
  std::vector<std::vector<EdgeId>> arborescences;  // arc ids, sorted
};

/// X inside V - root entered by fewer than `required` arcs (counting each
/// partial arborescence that reaches X as one).
struct DeficientSet {
  std::vector<NodeId> nodes;
  int value = 0;
  int required = 0;
};

using ArborescenceOutcome = std::variant<ArborescencePacking, DeficientSet>;

/// k arc-disjoint spanning root-arborescences, arborescence i containing
/// seeds[i] when seeds are given.
ArborescenceOutcome pack_arborescences(const Digraph& d, NodeId root, int k,
                                       const std::vector<std::vector<EdgeId>>& seeds = {});

/// Arcs form an arborescence rooted at root (not necessarily spanning).
bool is_arborescence(const Digraph& d, NodeId root, std::span<const EdgeId> arcs);
bool is_spanning_arborescence(const Digraph& d, NodeId root, std::span<const EdgeId> arcs);
bool verify_arborescence_packing(const Digraph& d, NodeId root, int k, const ArborescencePacking& packing,
                                 const std::vector<std::vector<EdgeId>>& seeds = {});

struct EdgeConnectivityCertificate {
  Digraph doubled;  // arc 2e = u->v and 2e+1 = v->u for edge e = uv
  std::optional<ArborescencePacking> packing;
  std::optional<CutCertificate> cut;  // d_G(X) < k
};

/// k arc-disjoint spanning arborescences of the doubled graph exist iff G is
/// k-edge-connected.
EdgeConnectivityCertificate certify_k_edge_connectivity(const Graph& g, int k, NodeId root);

struct CoverCheck {
  bool holds = false;
  /// Node with in-degree above k.
  std::optional<NodeId> node;
  /// Set violating the set condition.
  std::vector<NodeId> nodes;
};

/// Arc set coverable by k spanning root-arborescences: rho(v) <= k and
/// k - rho(X) <= sum over heads v of arcs entering X of (k - rho(v)).
/// Subset enumeration, n <= 16.
CoverCheck check_arborescence_cover(const Digraph& d, NodeId root, int k);

/// Arc set coverable by k branchings: rho(v) <= k and i_D(X) <= k(|X|-1).
CoverCheck check_branching_cover(const Digraph& d, int k);

struct MixedPackingCheck {
  bool holds = false;
  std::optional<Partition> witness;
};

/// e_E(P) >= sum over non-root blocks of (k - rho_A(V_i)) for every
/// partition. Partition enumeration, n <= 12.
MixedPackingCheck check_mixed_arborescence_packing(const MixedGraph& m, NodeId root, int k);

struct DypergraphCheck {
  bool holds = false;
  std::vector<NodeId> deficient;  // rho(X) < k when the check fails
  int value = 0;                  // rho of the deficient set
};

/// Every nonempty X inside V - root entered by at least k dyperedges.
DypergraphCheck check_dypergraph_decomposition(const Dypergraph& d, NodeId root, int k);

inline constexpr int kVidyasankarNodeCap = 16;
inline constexpr int kMixedNodeCap = 12;

}  // namespace packcert
