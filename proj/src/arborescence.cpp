#include "packcert/arborescence.hpp"

#include <algorithm>
#include <stdexcept>

#include "packcert/flow.hpp"
#include "packcert/forest_pack.hpp"

namespace packcert {

namespace {

void require_root(int n, NodeId root, const char* what) {
  if (root < 0 || root >= n) throw InputError(std::string(what) + ": root out of range");
}

void require_nonnegative(int k, const char* what) {
  if (k < 0) throw InputError(std::string(what) + ": k must be non-negative");
}

// Growth state: free arcs A_0 and the node sets covered by each partial
// arborescence.
struct GrowthState {
  std::vector<bool> free_arc;
  std::vector<std::vector<bool>> covered;
};

// min over t of (rho_{A_0}(X) + #{i : S_i meets X}) for X containing t and
// not the root. Each partial arborescence is a gadget node fed by one unit
// from the root and reaching every node it covers.
struct ProbeResult {
  int value;
  std::vector<NodeId> sink_side;
};

ProbeResult weakest_set(const Digraph& d, NodeId root, const GrowthState& s, int need) {
  const int n = d.num_nodes();
  const int k = static_cast<int>(s.covered.size());
  ProbeResult best{std::numeric_limits<int>::max(), {}};
  for (NodeId t = 0; t < n; ++t) {
    if (t == root) continue;
    FlowNetwork net(n + k);
    for (EdgeId a = 0; a < d.num_arcs(); ++a) {
      if (s.free_arc[a]) net.add_arc(d.arc(a).tail, d.arc(a).head, 1);
    }
    for (int j = 0; j < k; ++j) {
      net.add_arc(root, n + j, 1);
      for (NodeId v = 0; v < n; ++v) {
        if (s.covered[j][v] && v != root) net.add_arc(n + j, v, FlowNetwork::kInfinite);
      }
    }
    const int value = net.max_flow(root, t, need);
    if (value < best.value) {
      const auto reach = net.source_side(root);
      best.value = value;
      best.sink_side.clear();
      for (NodeId v = 0; v < n; ++v) {
        if (!reach[v]) best.sink_side.push_back(v);
      }
      if (value < need) return best;
    }
  }
  return best;
}

void validate_seeds(const Digraph& d, NodeId root, int k, const std::vector<std::vector<EdgeId>>& seeds) {
  if (seeds.empty()) return;
  std::vector<bool> used(d.num_arcs(), false);
  if (static_cast<int>(seeds.size()) != k) throw InputError("pack_arborescences: need exactly k seeds");
  for (const auto& seed : seeds) {
    for (EdgeId a : seed) {
      if (a < 0 || a >= d.num_arcs()) throw InputError("pack_arborescences: seed arc out of range");
      if (used[a]) throw InputError("pack_arborescences: seeds share an arc");
      used[a] = true;
    }
    if (!is_arborescence(d, root, seed)) throw InputError("pack_arborescences: seed is not a root-arborescence");
  }
}

}  // namespace

RootedConnectivity rooted_connectivity(const Digraph& d, NodeId root) {
  require_root(d.num_nodes(), root, "rooted_connectivity");
  RootedConnectivity out;
  for (NodeId t = 0; t < d.num_nodes(); ++t) {
    if (t == root) continue;
    InCut cut = min_in_cut(d, root, t);
    if (cut.value < out.value) {
      out.value = cut.value;
      out.minimizer = std::move(cut.sink_side);
    }
  }
  return out;
}

bool is_arborescence(const Digraph& d, NodeId root, std::span<const EdgeId> arcs) {
  const int n = d.num_nodes();
  std::vector<int> parent_arc(n, -1);
  for (EdgeId a : arcs) {
    if (a < 0 || a >= d.num_arcs()) return false;
    const NodeId h = d.arc(a).head;
    if (h == root || parent_arc[h] != -1) return false;
    parent_arc[h] = a;
  }
  // Every head must reach the root by following parent arcs.
  std::vector<int> state(n, 0);  // 0 unknown, 1 on stack, 2 reaches root
  state[root] = 2;
  for (EdgeId a : arcs) {
    std::vector<NodeId> path;
    NodeId v = d.arc(a).head;
    while (state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      if (parent_arc[v] == -1) return false;
      v = d.arc(parent_arc[v]).tail;
    }
    if (state[v] == 1) return false;
    for (NodeId w : path) state[w] = 2;
  }
  return true;
}

bool is_spanning_arborescence(const Digraph& d, NodeId root, std::span<const EdgeId> arcs) {
  return static_cast<int>(arcs.size()) == d.num_nodes() - 1 && is_arborescence(d, root, arcs);
}

bool verify_arborescence_packing(const Digraph& d, NodeId root, int k, const ArborescencePacking& packing,
                                 const std::vector<std::vector<EdgeId>>& seeds) {
  if (static_cast<int>(packing.arborescences.size()) != k) return false;
  std::vector<bool> used(d.num_arcs(), false);
  for (int i = 0; i < k; ++i) {
    const auto& arcs = packing.arborescences[i];
    if (!is_spanning_arborescence(d, root, arcs)) return false;
    for (EdgeId a : arcs) {
      if (used[a]) return false;
      used[a] = true;
    }
    if (!seeds.empty()) {
      for (EdgeId a : seeds[i]) {
        if (std::find(arcs.begin(), arcs.end(), a) == arcs.end()) return false;
      }
    }
  }
  return true;
}

ArborescenceOutcome pack_arborescences(const Digraph& d, NodeId root, int k,
                                       const std::vector<std::vector<EdgeId>>& seeds) {
  const int n = d.num_nodes();
  require_root(n, root, "pack_arborescences");
  require_nonnegative(k, "pack_arborescences");
  validate_seeds(d, root, k, seeds);

  GrowthState s;
  s.free_arc.assign(d.num_arcs(), true);
  s.covered.assign(k, std::vector<bool>(n, false));
  std::vector<std::vector<EdgeId>> trees(k);
  std::vector<int> size(k, 1);
  for (int j = 0; j < k; ++j) {
    s.covered[j][root] = true;
    if (seeds.empty()) continue;
    trees[j] = seeds[j];
    for (EdgeId a : seeds[j]) {
      s.free_arc[a] = false;
      s.covered[j][d.arc(a).head] = true;
      ++size[j];
    }
  }

  ProbeResult start = weakest_set(d, root, s, k);
  if (start.value < k) return DeficientSet{std::move(start.sink_side), start.value, k};

  // Round-robin: each tree in turn takes its lowest-id free arc leaving it
  // that keeps every set sufficiently entered.
  bool progress = true;
  while (progress) {
    progress = false;
    for (int j = 0; j < k; ++j) {
      if (size[j] == n) continue;
      bool grew = false;
      for (EdgeId a = 0; a < d.num_arcs() && !grew; ++a) {
        const Arc& arc = d.arc(a);
        if (!s.free_arc[a] || !s.covered[j][arc.tail] || s.covered[j][arc.head]) continue;
        s.free_arc[a] = false;
        s.covered[j][arc.head] = true;
        if (weakest_set(d, root, s, k).value >= k) {
          trees[j].push_back(a);
          ++size[j];
          grew = true;
        } else {
          s.free_arc[a] = true;
          s.covered[j][arc.head] = false;
        }
      }
      if (!grew) throw std::logic_error("pack_arborescences: no admissible arc although the cut condition holds");
      progress = true;
    }
  }
  ArborescencePacking out{std::move(trees)};
  for (auto& t : out.arborescences) std::sort(t.begin(), t.end());
  return out;
}

EdgeConnectivityCertificate certify_k_edge_connectivity(const Graph& g, int k, NodeId root) {
  require_root(g.num_nodes(), root, "certify_k_edge_connectivity");
  EdgeConnectivityCertificate out;
  out.doubled = doubled_digraph(g);
  auto outcome = pack_arborescences(out.doubled, root, k);
  if (auto* p = std::get_if<ArborescencePacking>(&outcome)) {
    out.packing = std::move(*p);
  } else {
    auto& x = std::get<DeficientSet>(outcome);
    out.cut = CutCertificate{x.nodes, k, boundary_count(g, x.nodes)};
  }
  return out;
}

CoverCheck check_arborescence_cover(const Digraph& d, NodeId root, int k) {
  const int n = d.num_nodes();
  require_root(n, root, "check_arborescence_cover");
  require_nonnegative(k, "check_arborescence_cover");
  std::vector<int> indeg(n, 0);
  for (const Arc& a : d.arcs()) {
    if (a.head == root) throw InputError("check_arborescence_cover: an arc enters the root");
    ++indeg[a.head];
  }
  CoverCheck out;
  for (NodeId v = 0; v < n; ++v) {
    if (v != root && indeg[v] > k) {
      out.node = v;
      return out;
    }
  }
  if (n > kVidyasankarNodeCap) throw InstanceTooLarge("check_arborescence_cover: more than 16 nodes");
  std::vector<NodeId> others;
  for (NodeId v = 0; v < n; ++v) {
    if (v != root) others.push_back(v);
  }
  const int r = static_cast<int>(others.size());
  for (unsigned long mask = 1; mask < (1UL << r); ++mask) {
    std::vector<bool> in(n, false);
    for (int i = 0; i < r; ++i) {
      if (mask >> i & 1) in[others[i]] = true;
    }
    int entering = 0;
    std::vector<bool> head(n, false);
    for (const Arc& a : d.arcs()) {
      if (in[a.head] && !in[a.tail]) {
        ++entering;
        head[a.head] = true;
      }
    }
    long slack = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (head[v]) slack += k - indeg[v];
    }
    if (k - entering > slack) {
      for (NodeId v = 0; v < n; ++v) {
        if (in[v]) out.nodes.push_back(v);
      }
      return out;
    }
  }
  out.holds = true;
  return out;
}

CoverCheck check_branching_cover(const Digraph& d, int k) {
  require_nonnegative(k, "check_branching_cover");
  const int n = d.num_nodes();
  std::vector<int> indeg(n, 0);
  for (const Arc& a : d.arcs()) ++indeg[a.head];
  CoverCheck out;
  for (NodeId v = 0; v < n; ++v) {
    if (indeg[v] > k) {
      out.node = v;
      return out;
    }
  }
  auto outcome = decompose_forests(underlying_graph(d), k);
  if (auto* dense = std::get_if<DenseSet>(&outcome)) {
    out.nodes = dense->nodes;
    return out;
  }
  out.holds = true;
  return out;
}

MixedPackingCheck check_mixed_arborescence_packing(const MixedGraph& m, NodeId root, int k) {
  const int n = m.num_nodes();
  require_root(n, root, "check_mixed_arborescence_packing");
  require_nonnegative(k, "check_mixed_arborescence_packing");
  if (n > kMixedNodeCap) throw InstanceTooLarge("check_mixed_arborescence_packing: more than 12 nodes");
  MixedPackingCheck out;
  std::vector<long> entering;
  const bool found = for_each_partition(n, [&](const std::vector<int>& label, int blocks) {
    entering.assign(blocks, 0);
    for (const Arc& a : m.arcs.arcs()) {
      if (label[a.tail] != label[a.head]) ++entering[label[a.head]];
    }
    long cross = 0;
    for (const Edge& e : m.edges.edges()) {
      if (label[e.u] != label[e.v]) ++cross;
    }
    long need = 0;
    for (int b = 0; b < blocks; ++b) {
      if (b != label[root]) need += k - entering[b];
    }
    if (cross >= need) return false;
    out.witness = Partition::from_labels(label);
    return true;
  });
  out.holds = !found;
  return out;
}

DypergraphCheck check_dypergraph_decomposition(const Dypergraph& d, NodeId root, int k) {
  const int n = d.num_nodes();
  require_root(n, root, "check_dypergraph_decomposition");
  require_nonnegative(k, "check_dypergraph_decomposition");
  // Each dyperedge is a hub fed from its tails and feeding its head with one
  // unit; a minimum root-t cut counts exactly the dyperedges entering the
  // sink side.
  DypergraphCheck out;
  for (NodeId t = 0; t < n; ++t) {
    if (t == root) continue;
    FlowNetwork net(n);
    for (const Dyperedge& e : d.dyperedges()) {
      const int hub = net.add_node();
      for (NodeId v : e.nodes) {
        if (v != e.head) net.add_arc(v, hub, FlowNetwork::kInfinite);
      }
      net.add_arc(hub, e.head, 1);
    }
    const int value = net.max_flow(root, t, k);
    if (value < k) {
      const auto reach = net.source_side(root);
      for (NodeId v = 0; v < n; ++v) {
        if (!reach[v]) out.deficient.push_back(v);
      }
      out.value = in_degree(d, out.deficient);
      if (out.value != value) throw std::logic_error("check_dypergraph_decomposition: cut value mismatch");
      return out;
    }
  }
  out.holds = true;
  out.value = 0;
  return out;
}

}  // namespace packcert
