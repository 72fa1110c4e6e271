#include "packcert/orientation.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "packcert/arborescence.hpp"
#include "packcert/flow.hpp"

namespace packcert {

namespace {

void require_root(int n, NodeId root, const char* what) {
  if (root < 0 || root >= n) throw InputError(std::string(what) + ": root out of range");
}

void require_nonnegative(int k, const char* what) {
  if (k < 0) throw InputError(std::string(what) + ": requirements must be non-negative");
}

// Minimum over sets Y with s outside and t inside of the number of
// dyperedges with head in Y and a member outside Y.
int dyper_min_cut(const Dypergraph& d, NodeId s, NodeId t, int limit) {
  FlowNetwork net(d.num_nodes());
  for (const Dyperedge& e : d.dyperedges()) {
    const int hub = net.add_node();
    for (NodeId v : e.nodes) {
      if (v != e.head) net.add_arc(v, hub, FlowNetwork::kInfinite);
    }
    net.add_arc(hub, e.head, 1);
  }
  return net.max_flow(s, t, limit);
}

// Direction of every edge of g when the given spanning trees are directed
// away from the root: true means u -> v. Edges outside the trees keep the
// lower-to-higher convention.
std::vector<bool> tree_directions(const Graph& g, NodeId root, const std::vector<std::vector<EdgeId>>& trees) {
  std::vector<bool> forward(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) forward[e] = g.edge(e).u < g.edge(e).v;
  const int n = g.num_nodes();
  for (const auto& tree : trees) {
    std::vector<std::vector<EdgeId>> incident(n);
    for (EdgeId e : tree) {
      incident[g.edge(e).u].push_back(e);
      incident[g.edge(e).v].push_back(e);
    }
    std::vector<bool> seen(n, false);
    std::queue<NodeId> queue;
    queue.push(root);
    seen[root] = true;
    while (!queue.empty()) {
      const NodeId x = queue.front();
      queue.pop();
      for (EdgeId e : incident[x]) {
        const NodeId y = g.edge(e).u == x ? g.edge(e).v : g.edge(e).u;
        if (seen[y]) continue;
        seen[y] = true;
        forward[e] = g.edge(e).u == x;
        queue.push(y);
      }
    }
  }
  return forward;
}

Digraph oriented(const Graph& g, const std::vector<bool>& forward) {
  Digraph d(g.num_nodes());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& x = g.edge(e);
    if (forward[e]) {
      d.add_arc(x.u, x.v);
    } else {
      d.add_arc(x.v, x.u);
    }
  }
  return d;
}

Digraph reversed(const Digraph& d) {
  Digraph r(d.num_nodes());
  for (const Arc& a : d.arcs()) r.add_arc(a.head, a.tail);
  return r;
}

// Depth-first search over edge directions with forward checking on every
// set X inside V - root: arcs already entering (leaving) X plus undecided
// edges crossing X must still reach k (l).
class OrientationSearch {
 public:
  OrientationSearch(const Graph& g, NodeId root, int k, int l, std::vector<bool> preferred)
      : g_(g), k_(k), l_(l), preferred_(std::move(preferred)) {
    const int n = g.num_nodes();
    for (NodeId v = 0; v < n; ++v) {
      if (v != root) others_.push_back(v);
    }
    const int sets = 1 << others_.size();
    bit_.assign(n, 0);
    for (std::size_t i = 0; i < others_.size(); ++i) bit_[others_[i]] = 1 << i;
    entering_.assign(sets, 0);
    leaving_.assign(sets, 0);
    open_.assign(sets, 0);
    for (const Edge& e : g.edges()) {
      for (int x = 1; x < sets; ++x) {
        if (crosses(e, x)) ++open_[x];
      }
    }
    forward_.assign(g.num_edges(), true);
  }

  std::optional<Digraph> run() {
    for (int x = 1; x < static_cast<int>(open_.size()); ++x) {
      if (open_[x] < k_ || open_[x] < l_) return std::nullopt;
    }
    if (!descend(0)) return std::nullopt;
    return oriented(g_, forward_);
  }

  bool exhausted() const { return effort_ > kOrientationSearchEffort; }

 private:
  bool crosses(const Edge& e, int x) const { return ((bit_[e.u] & x) != 0) != ((bit_[e.v] & x) != 0); }

  // Applies (sign = +1) or undoes (sign = -1) the chosen direction; returns
  // whether every touched set stays satisfiable.
  bool apply(const Edge& e, bool forward, int sign) {
    const NodeId head = forward ? e.v : e.u;
    bool ok = true;
    for (int x = 1; x < static_cast<int>(open_.size()); ++x) {
      if (!crosses(e, x)) continue;
      open_[x] -= sign;
      if (bit_[head] & x) {
        entering_[x] += sign;
      } else {
        leaving_[x] += sign;
      }
      if (entering_[x] + open_[x] < k_ || leaving_[x] + open_[x] < l_) ok = false;
    }
    return ok;
  }

  bool descend(EdgeId e) {
    if (e == g_.num_edges()) return true;
    if (++effort_ > kOrientationSearchEffort) return false;
    for (bool forward : {static_cast<bool>(preferred_[e]), !preferred_[e]}) {
      forward_[e] = forward;
      const bool ok = apply(g_.edge(e), forward, +1);
      if (ok && descend(e + 1)) return true;
      apply(g_.edge(e), forward, -1);
      if (exhausted()) return false;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  int l_;
  std::vector<bool> preferred_;
  std::vector<NodeId> others_;
  std::vector<int> bit_;
  std::vector<int> entering_;
  std::vector<int> leaving_;
  std::vector<int> open_;
  std::vector<bool> forward_;
  long effort_ = 0;
};

}  // namespace

OrientOutcome orient_rooted_k(const Graph& g, NodeId root, int k) {
  require_root(g.num_nodes(), root, "orient_rooted_k");
  require_nonnegative(k, "orient_rooted_k");
  auto packing = pack_spanning_trees(g, k);
  if (auto* d = std::get_if<DeficientPartition>(&packing)) return std::move(*d);
  Digraph out = oriented(g, tree_directions(g, root, std::get<TreePacking>(packing).trees));
  if (!is_rooted_kl_connected(out, root, k, 0)) throw std::logic_error("orient_rooted_k: orientation fails verification");
  return out;
}

bool is_rooted_kl_connected(const Digraph& d, NodeId root, int k, int l) {
  return is_rooted_kl_connected(Dypergraph::from_digraph(d), root, k, l);
}

bool is_rooted_kl_connected(const Dypergraph& d, NodeId root, int k, int l) {
  require_root(d.num_nodes(), root, "is_rooted_kl_connected");
  for (NodeId t = 0; t < d.num_nodes(); ++t) {
    if (t == root) continue;
    if (k > 0 && dyper_min_cut(d, root, t, k) < k) return false;
    if (l > 0 && dyper_min_cut(d, t, root, l) < l) return false;
  }
  return true;
}

KlOrientation check_orientation_kl(const Graph& g, NodeId root, int k, int l) {
  const int n = g.num_nodes();
  require_root(n, root, "check_orientation_kl");
  require_nonnegative(k, "check_orientation_kl");
  require_nonnegative(l, "check_orientation_kl");
  // Reversing every arc swaps the roles of k and l, so decide with the
  // larger requirement first.
  const bool swap = l > k;
  const int big = std::max(k, l);
  const int small = std::min(k, l);
  KlOrientation out;
  std::vector<bool> preferred(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) preferred[e] = g.edge(e).u < g.edge(e).v;
  if (big == 0) {
    out.holds = true;
  } else {
    PartitionConnectivity pc = check_partition_connected(g, big, small);
    out.holds = pc.holds;
    out.witness = std::move(pc.witness);
    if (!out.holds) return out;
    auto packing = pack_spanning_trees(g, big);
    preferred = tree_directions(g, root, std::get<TreePacking>(packing).trees);
  }
  if (n > kOrientationSearchNodeCap) {
    out.construction_skipped = true;
    return out;
  }
  OrientationSearch search(g, root, big, small, preferred);
  auto found = search.run();
  if (!found) {
    if (!search.exhausted()) throw std::logic_error("check_orientation_kl: partition condition holds but no orientation exists");
    out.construction_skipped = true;
    return out;
  }
  out.orientation = swap ? reversed(*found) : std::move(*found);
  if (!is_rooted_kl_connected(*out.orientation, root, k, l)) {
    throw std::logic_error("check_orientation_kl: orientation fails verification");
  }
  return out;
}

HyperOrientOutcome orient_hypergraph_rooted_k(const Hypergraph& h, NodeId root, int k) {
  const int n = h.num_nodes();
  require_root(n, root, "orient_hypergraph_rooted_k");
  if (k < 1) throw InputError("orient_hypergraph_rooted_k: k must be at least 1");
  auto packing = pack_hypertrees(h, k);
  if (auto* d = std::get_if<DeficientPartition>(&packing)) return std::move(*d);
  std::vector<NodeId> head(h.num_hyperedges(), -1);
  for (const Trimming& tree : std::get<HypertreePacking>(packing).trees) {
    // Distances from the root in the trimmed tree; the head of each
    // hyperedge is the farther end of its pair.
    const Graph t = trimmed_graph(n, tree);
    std::vector<std::vector<NodeId>> adjacent(n);
    for (const Edge& e : t.edges()) {
      adjacent[e.u].push_back(e.v);
      adjacent[e.v].push_back(e.u);
    }
    std::vector<int> depth(n, -1);
    std::queue<NodeId> queue;
    queue.push(root);
    depth[root] = 0;
    while (!queue.empty()) {
      const NodeId x = queue.front();
      queue.pop();
      for (NodeId y : adjacent[x]) {
        if (depth[y] < 0) {
          depth[y] = depth[x] + 1;
          queue.push(y);
        }
      }
    }
    for (std::size_t i = 0; i < tree.hyperedges.size(); ++i) {
      const Edge& pair = tree.pairs[i];
      head[tree.hyperedges[i]] = depth[pair.u] > depth[pair.v] ? pair.u : pair.v;
    }
  }
  Dypergraph out(n);
  for (EdgeId e = 0; e < h.num_hyperedges(); ++e) {
    const auto& members = h.hyperedge(e);
    out.add_dyperedge(members, head[e] >= 0 ? head[e] : members.front());
  }
  if (!is_rooted_kl_connected(out, root, k, 0)) {
    throw std::logic_error("orient_hypergraph_rooted_k: orientation fails verification");
  }
  return out;
}

int blocks_met(const Partition& p, const std::vector<NodeId>& z) {
  std::vector<int> blocks;
  for (NodeId v : z) blocks.push_back(p.block_of(v));
  std::sort(blocks.begin(), blocks.end());
  return static_cast<int>(std::unique(blocks.begin(), blocks.end()) - blocks.begin());
}

HyperOrientationCheck check_hyper_orientation(const Hypergraph& h, NodeId root, int k, int l) {
  const int n = h.num_nodes();
  require_root(n, root, "check_hyper_orientation");
  require_nonnegative(k, "check_hyper_orientation");
  require_nonnegative(l, "check_hyper_orientation");
  if (n > kHyperOrientationNodeCap) throw InstanceTooLarge("check_hyper_orientation: more than 12 nodes");
  HyperOrientationCheck out;
  std::vector<bool> seen;
  const bool found = for_each_partition(n, [&](const std::vector<int>& label, int blocks) {
    if (blocks < 2) return false;
    long crossing = 0;
    long excess = 0;
    for (const auto& z : h.hyperedges()) {
      seen.assign(blocks, false);
      int met = 0;
      for (NodeId v : z) {
        if (!seen[label[v]]) {
          seen[label[v]] = true;
          ++met;
        }
      }
      if (met > 1) ++crossing;
      excess += met - 1;
    }
    if (crossing < static_cast<long>(k) * (blocks - 1) + l) {
      out.violated = 'A';
    } else if (l > k && excess < static_cast<long>(l) * (blocks - 1) + k) {
      out.violated = 'B';
    } else {
      return false;
    }
    out.witness = Partition::from_labels(label);
    return true;
  });
  out.holds = !found;
  return out;
}

bool is_weakly_partition_connected(const Hypergraph& hg, int h) {
  if (h == 0 || hg.num_nodes() <= 1) return true;
  return check_hyper_orientation(hg, 0, 0, h).holds;
}

}  // namespace packcert
