#include "packcert/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace packcert {

namespace {

void check_node(int n, NodeId v, const char* what) {
  if (v < 0 || v >= n) {
    throw InputError(std::string(what) + ": node " + std::to_string(v) + " out of range [0," +
                     std::to_string(n) + ")");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InputError("graph: negative node count");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

EdgeId Graph::add_edge(NodeId u, NodeId v) {
  check_node(n_, u, "graph");
  check_node(n_, v, "graph");
  if (u == v) throw InputError("graph: loop at node " + std::to_string(u));
  edges_.push_back({u, v});
  return num_edges() - 1;
}

Digraph::Digraph(int n) : n_(n) {
  if (n < 0) throw InputError("digraph: negative node count");
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : Digraph(n) {
  arcs_.reserve(arcs.size());
  for (const Arc& a : arcs) add_arc(a.tail, a.head);
}

EdgeId Digraph::add_arc(NodeId tail, NodeId head) {
  check_node(n_, tail, "digraph");
  check_node(n_, head, "digraph");
  if (tail == head) throw InputError("digraph: loop at node " + std::to_string(tail));
  arcs_.push_back({tail, head});
  return num_arcs() - 1;
}

MixedGraph::MixedGraph(Digraph a, Graph e) : arcs(std::move(a)), edges(std::move(e)) {
  if (arcs.num_nodes() != edges.num_nodes()) {
    throw InputError("mixed graph: directed and undirected parts disagree on node count");
  }
}

Partition::Partition(int n, std::vector<std::vector<NodeId>> blocks) {
  if (n < 0) throw InputError("partition: negative node count");
  block_of_.assign(static_cast<std::size_t>(n), -1);
  for (auto& b : blocks) {
    if (b.empty()) throw InputError("partition: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (NodeId v : blocks[i]) {
      check_node(n, v, "partition");
      if (block_of_[static_cast<std::size_t>(v)] != -1) {
        throw InputError("partition: node " + std::to_string(v) + " in two blocks");
      }
      block_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (block_of_[static_cast<std::size_t>(v)] == -1) {
      throw InputError("partition: node " + std::to_string(v) + " uncovered");
    }
  }
  if (n > 0 && blocks.empty()) throw InputError("partition: no blocks");
  blocks_ = std::move(blocks);
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<NodeId>> blocks;
  for (NodeId v = 0; v < n; ++v) blocks.push_back({v});
  return Partition(n, std::move(blocks));
}

Partition Partition::trivial(int n) {
  if (n == 0) return Partition(0, {});
  std::vector<NodeId> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return Partition(n, {all});
}

Partition Partition::from_labels(std::span<const int> labels) {
  std::map<int, std::vector<NodeId>> groups;
  for (std::size_t v = 0; v < labels.size(); ++v) groups[labels[v]].push_back(static_cast<NodeId>(v));
  std::vector<std::vector<NodeId>> blocks;
  for (auto& [label, nodes] : groups) blocks.push_back(std::move(nodes));
  return Partition(static_cast<int>(labels.size()), std::move(blocks));
}

PartitionStats partition_stats(const Graph& g, const Partition& p) {
  if (p.num_nodes() != g.num_nodes()) throw InputError("partition does not match graph");
  PartitionStats stats;
  stats.induced.assign(static_cast<std::size_t>(p.size()), 0);
  for (const Edge& e : g.edges()) {
    const int bu = p.block_of(e.u);
    if (bu == p.block_of(e.v)) {
      ++stats.induced[static_cast<std::size_t>(bu)];
    } else {
      ++stats.cross;
    }
  }
  return stats;
}

int cross_count(const Graph& g, const Partition& p) { return partition_stats(g, p).cross; }

long partition_deficit(const Graph& g, const Partition& p, int k, int l) {
  return static_cast<long>(k) * (p.size() - 1) + l - cross_count(g, p);
}

Contraction contract(const Graph& g, const Partition& p) {
  if (p.num_nodes() != g.num_nodes()) throw InputError("partition does not match graph");
  Contraction c{Graph(p.size()), {}};
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int bu = p.block_of(g.edge(e).u);
    const int bv = p.block_of(g.edge(e).v);
    if (bu != bv) {
      c.graph.add_edge(bu, bv);
      c.original_edge.push_back(e);
    }
  }
  return c;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<int> local(static_cast<std::size_t>(g.num_nodes()), -1);
  InducedSubgraph sub{Graph(static_cast<int>(nodes.size())), {nodes.begin(), nodes.end()}, {}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    check_node(g.num_nodes(), nodes[i], "induced subgraph");
    if (local[static_cast<std::size_t>(nodes[i])] != -1) throw InputError("induced subgraph: repeated node");
    local[static_cast<std::size_t>(nodes[i])] = static_cast<int>(i);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int a = local[static_cast<std::size_t>(g.edge(e).u)];
    const int b = local[static_cast<std::size_t>(g.edge(e).v)];
    if (a != -1 && b != -1) {
      sub.graph.add_edge(a, b);
      sub.original_edge.push_back(e);
    }
  }
  return sub;
}

Partition components(const Graph& g, std::span<const EdgeId> edges) {
  UnionFind uf(g.num_nodes());
  for (EdgeId e : edges) uf.unite(g.edge(e).u, g.edge(e).v);
  std::vector<int> labels(static_cast<std::size_t>(g.num_nodes()));
  for (NodeId v = 0; v < g.num_nodes(); ++v) labels[static_cast<std::size_t>(v)] = uf.find(v);
  return Partition::from_labels(labels);
}

Partition components(const Graph& g) {
  std::vector<EdgeId> all(static_cast<std::size_t>(g.num_edges()));
  std::iota(all.begin(), all.end(), 0);
  return components(g, all);
}

bool is_connected(const Graph& g) { return g.num_nodes() <= 1 || components(g).size() == 1; }

std::vector<bool> membership(int n, std::span<const NodeId> nodes) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (NodeId v : nodes) {
    check_node(n, v, "node set");
    in[static_cast<std::size_t>(v)] = true;
  }
  return in;
}

std::vector<NodeId> complement(int n, std::span<const NodeId> nodes) {
  const auto in = membership(n, nodes);
  std::vector<NodeId> out;
  for (NodeId v = 0; v < n; ++v) {
    if (!in[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

int induced_count(const Graph& g, std::span<const NodeId> nodes) {
  const auto in = membership(g.num_nodes(), nodes);
  int count = 0;
  for (const Edge& e : g.edges()) count += in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)];
  return count;
}

int boundary_count(const Graph& g, std::span<const NodeId> nodes) {
  const auto in = membership(g.num_nodes(), nodes);
  int count = 0;
  for (const Edge& e : g.edges()) count += in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)];
  return count;
}

int in_degree(const Digraph& d, std::span<const NodeId> nodes) {
  const auto in = membership(d.num_nodes(), nodes);
  int count = 0;
  for (const Arc& a : d.arcs()) count += !in[static_cast<std::size_t>(a.tail)] && in[static_cast<std::size_t>(a.head)];
  return count;
}

int out_degree(const Digraph& d, std::span<const NodeId> nodes) {
  const auto in = membership(d.num_nodes(), nodes);
  int count = 0;
  for (const Arc& a : d.arcs()) count += in[static_cast<std::size_t>(a.tail)] && !in[static_cast<std::size_t>(a.head)];
  return count;
}

int induced_count(const Digraph& d, std::span<const NodeId> nodes) {
  const auto in = membership(d.num_nodes(), nodes);
  int count = 0;
  for (const Arc& a : d.arcs()) count += in[static_cast<std::size_t>(a.tail)] && in[static_cast<std::size_t>(a.head)];
  return count;
}

bool is_forest(const Graph& g, std::span<const EdgeId> edges) {
  UnionFind uf(g.num_nodes());
  std::vector<bool> seen(static_cast<std::size_t>(g.num_edges()), false);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.num_edges() || seen[static_cast<std::size_t>(e)]) return false;
    seen[static_cast<std::size_t>(e)] = true;
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) return false;
  }
  return true;
}

bool is_spanning_tree(const Graph& g, std::span<const EdgeId> edges) {
  return static_cast<int>(edges.size()) == std::max(0, g.num_nodes() - 1) && is_forest(g, edges);
}

Graph underlying_graph(const Digraph& d) {
  Graph g(d.num_nodes());
  for (const Arc& a : d.arcs()) g.add_edge(a.tail, a.head);
  return g;
}

Digraph doubled_digraph(const Graph& g) {
  Digraph d(g.num_nodes());
  for (const Edge& e : g.edges()) {
    d.add_arc(e.u, e.v);
    d.add_arc(e.v, e.u);
  }
  return d;
}

UnionFind::UnionFind(int n)
    : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  auto i = static_cast<std::size_t>(x);
  while (parent_[i] != static_cast<int>(i)) {
    parent_[i] = parent_[static_cast<std::size_t>(parent_[i])];
    i = static_cast<std::size_t>(parent_[i]);
  }
  return static_cast<int>(i);
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  auto ia = static_cast<std::size_t>(a);
  auto ib = static_cast<std::size_t>(b);
  if (rank_[ia] < rank_[ib]) std::swap(ia, ib);
  parent_[ib] = static_cast<int>(ia);
  if (rank_[ia] == rank_[ib]) ++rank_[ia];
  --sets_;
  return true;
}

}  // namespace packcert

namespace packcert {

bool for_each_partition(int n, const std::function<bool(const std::vector<int>&, int)>& visit) {
  if (n <= 0) return visit({}, 0);
  std::vector<int> labels(n, 0);
  std::vector<int> prefix_max(n, 0);  // max label among labels[0..i]
  while (true) {
    if (visit(labels, prefix_max[n - 1] + 1)) return true;
    int i = n - 1;
    while (i > 0 && labels[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return false;
    ++labels[i];
    prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
    for (int j = i + 1; j < n; ++j) {
      labels[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

}  // namespace packcert
