// Incidence structures, partitions and counting functions shared by every
// packing, covering and orientation routine in the library.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace packcert {

using NodeId = int;
using EdgeId = int;

/// Raised for malformed inputs: loops, out-of-range ids, overlapping blocks.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by exponential checkers when the instance exceeds their hard cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  NodeId u;
  NodeId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  NodeId tail;
  NodeId head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Loopless undirected multigraph on nodes 0..n-1. Edge ids are the
/// positions in the edge list.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);

  EdgeId add_edge(NodeId u, NodeId v);

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Loopless directed multigraph.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::vector<Arc> arcs);

  EdgeId add_arc(NodeId tail, NodeId head);

  int num_nodes() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(EdgeId a) const { return arcs_.at(static_cast<std::size_t>(a)); }
  std::span<const Arc> arcs() const { return arcs_; }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
};

/// Directed part and undirected part over a common node set.
struct MixedGraph {
  Digraph arcs;
  Graph edges;

  MixedGraph() = default;
  MixedGraph(Digraph a, Graph e);
  int num_nodes() const { return arcs.num_nodes(); }
};

/// Ordered family of disjoint nonempty blocks covering 0..n-1. Stored in
/// canonical form: every block sorted, blocks ordered by smallest element.
class Partition {
 public:
  Partition() = default;
  Partition(int n, std::vector<std::vector<NodeId>> blocks);

  static Partition singletons(int n);
  static Partition trivial(int n);
  /// Blocks given by a label per node; labels may be arbitrary integers.
  static Partition from_labels(std::span<const int> labels);

  int num_nodes() const { return static_cast<int>(block_of_.size()); }
  int size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<NodeId>& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::vector<NodeId>>& blocks() const { return blocks_; }
  int block_of(NodeId v) const { return block_of_.at(static_cast<std::size_t>(v)); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<NodeId>> blocks_;
  std::vector<int> block_of_;
};

/// A node set whose boundary count falls short of a required bound.
struct CutCertificate {
  std::vector<NodeId> nodes;
  long required = 0;
  long actual = 0;
};

struct PartitionStats {
  int cross = 0;
  std::vector<int> induced;  // i_G(V_i) per block
};

PartitionStats partition_stats(const Graph& g, const Partition& p);
int cross_count(const Graph& g, const Partition& p);

/// k(|P|-1) + l - e_G(P); positive means the partition violates
/// (k,l)-partition-connectivity.
long partition_deficit(const Graph& g, const Partition& p, int k, int l = 0);

/// Graph with one node per block; surviving cross edges remember their id in
/// the source graph.
struct Contraction {
  Graph graph;
  std::vector<EdgeId> original_edge;
};
Contraction contract(const Graph& g, const Partition& p);

/// Subgraph induced by a node set; nodes renumbered in the order given.
struct InducedSubgraph {
  Graph graph;
  std::vector<NodeId> original_node;
  std::vector<EdgeId> original_edge;
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Components of (V, edges); all edges when the span is omitted.
Partition components(const Graph& g);
Partition components(const Graph& g, std::span<const EdgeId> edges);
bool is_connected(const Graph& g);

int induced_count(const Graph& g, std::span<const NodeId> nodes);
int boundary_count(const Graph& g, std::span<const NodeId> nodes);  // d_G(X)
int in_degree(const Digraph& d, std::span<const NodeId> nodes);      // rho_D(X)
int out_degree(const Digraph& d, std::span<const NodeId> nodes);     // delta_D(X)
int induced_count(const Digraph& d, std::span<const NodeId> nodes);  // i_D(X)

bool is_forest(const Graph& g, std::span<const EdgeId> edges);
bool is_spanning_tree(const Graph& g, std::span<const EdgeId> edges);

/// Underlying undirected graph; edge ids equal arc ids.
Graph underlying_graph(const Digraph& d);

/// Each edge e becomes arcs 2e (u->v) and 2e+1 (v->u).
Digraph doubled_digraph(const Graph& g);

std::vector<NodeId> complement(int n, std::span<const NodeId> nodes);
std::vector<bool> membership(int n, std::span<const NodeId> nodes);

/// Calls visit(labels, blocks) for every set partition of 0..n-1 given as a
/// restricted growth string (labels[0] = 0, labels[i] <= max(prefix) + 1).
/// Stops and returns true as soon as visit returns true.
bool for_each_partition(int n, const std::function<bool(const std::vector<int>&, int)>& visit);

/// Disjoint-set forest over 0..n-1.
class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  bool unite(int a, int b);
  int num_sets() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int sets_;
};

}  // namespace packcert
