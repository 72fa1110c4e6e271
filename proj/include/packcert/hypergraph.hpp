// Hypergraphs, dypergraphs, hyperforests and the hypergraphic matroid.
#pragma once

#include <span>
#include <variant>
#include <vector>

#include "packcert/forest_pack.hpp"
#include "packcert/graph.hpp"
#include "packcert/matroid.hpp"

namespace packcert {

/// Family of node sets of size >= 2 on nodes 0..n-1. Members of a hyperedge
/// are kept sorted; the same node set may occur several times.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int n);
  Hypergraph(int n, std::vector<std::vector<NodeId>> hyperedges);

  static Hypergraph from_graph(const Graph& g);

  EdgeId add_hyperedge(std::vector<NodeId> nodes);

  int num_nodes() const { return n_; }
  int num_hyperedges() const { return static_cast<int>(hyperedges_.size()); }
  const std::vector<NodeId>& hyperedge(EdgeId e) const { return hyperedges_.at(static_cast<std::size_t>(e)); }
  const std::vector<std::vector<NodeId>>& hyperedges() const { return hyperedges_; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<NodeId>> hyperedges_;
};

struct Dyperedge {
  std::vector<NodeId> nodes;  // sorted, contains head
  NodeId head = 0;
  friend bool operator==(const Dyperedge&, const Dyperedge&) = default;
};

/// Hyperedges with a designated head; the other members are tails.
class Dypergraph {
 public:
  Dypergraph() = default;
  explicit Dypergraph(int n);

  static Dypergraph from_digraph(const Digraph& d);

  EdgeId add_dyperedge(std::vector<NodeId> nodes, NodeId head);

  int num_nodes() const { return n_; }
  int num_dyperedges() const { return static_cast<int>(dyperedges_.size()); }
  const Dyperedge& dyperedge(EdgeId e) const { return dyperedges_.at(static_cast<std::size_t>(e)); }
  const std::vector<Dyperedge>& dyperedges() const { return dyperedges_; }

  friend bool operator==(const Dypergraph&, const Dypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<Dyperedge> dyperedges_;
};

/// Number of hyperedges meeting at least two blocks.
int cross_count(const Hypergraph& h, const Partition& p);
/// Hyperedges contained in the node set.
int induced_count(const Hypergraph& h, std::span<const NodeId> nodes);
/// Dyperedges with head in X and some member outside X.
int in_degree(const Dypergraph& d, std::span<const NodeId> nodes);

/// Components of (V, family), each hyperedge joining all of its members.
Partition components(const Hypergraph& h, std::span<const EdgeId> family);
Partition components(const Hypergraph& h);

/// Each listed hyperedge replaced by the chosen pair of its members.
struct Trimming {
  std::vector<EdgeId> hyperedges;
  std::vector<Edge> pairs;
};

/// A sub-family J with |union J| <= |J|.
struct HyperforestViolation {
  std::vector<EdgeId> family;
  int union_size = 0;
};

using HyperforestOutcome = std::variant<Trimming, HyperforestViolation>;

/// Flow test of: every j > 0 members of the family span at least j+1 nodes.
bool hyperforest_condition(const Hypergraph& h, std::span<const EdgeId> family);

/// A trimming to a forest, or a violating sub-family.
HyperforestOutcome is_hyperforest(const Hypergraph& h, std::span<const EdgeId> family);

/// Forest graph of a trimming, edges in the order of t.hyperedges.
Graph trimmed_graph(int n, const Trimming& t);

/// Independent sets are hyperforests; elements are hyperedge ids.
class HypergraphicMatroid : public MatroidOracle {
 public:
  explicit HypergraphicMatroid(Hypergraph h) : h_(std::move(h)) {}

  int ground_size() const override { return h_.num_hyperedges(); }
  bool is_independent(std::span<const ElementId> elements) const override;

  const Hypergraph& hypergraph() const { return h_; }

 private:
  Hypergraph h_;
};

struct HypergraphicRank {
  int rank = 0;
  /// Minimises n - |P| + e_H(P).
  Partition partition;
};

HypergraphicRank hypergraphic_rank(const Hypergraph& h);

struct HypertreePacking {
  std::vector<Trimming> trees;
};

using HyperPackOutcome = std::variant<HypertreePacking, DeficientPartition>;

/// k disjoint spanning hypertrees, or a partition with e_H(P) < k(|P|-1).
HyperPackOutcome pack_hypertrees(const Hypergraph& h, int k);

struct HyperforestCover {
  std::vector<Trimming> forests;
};

using HyperCoverOutcome = std::variant<HyperforestCover, DenseSet>;

/// Decomposition into k hyperforests, or X with i_H(X) > k(|X|-1).
HyperCoverOutcome cover_by_hyperforests(const Hypergraph& h, int k);

}  // namespace packcert
