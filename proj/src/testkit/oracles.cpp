#include "packcert/testkit/oracles.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <random>
#include <unordered_map>

namespace packcert::testkit {

namespace {

void cap(bool too_large, const char* what) {
  if (too_large) throw InstanceTooLarge(std::string("oracle: instance too large for ") + what);
}

bool in_mask(unsigned long mask, NodeId v) { return (mask >> v & 1UL) != 0; }

int cross_edges(const Graph& g, const std::vector<int>& label) {
  int cross = 0;
  for (const Edge& e : g.edges()) {
    if (label[e.u] != label[e.v]) ++cross;
  }
  return cross;
}

int hyper_cross(const Hypergraph& h, const std::vector<int>& label) {
  int cross = 0;
  for (const auto& z : h.hyperedges()) {
    for (NodeId v : z) {
      if (label[v] != label[z.front()]) {
        ++cross;
        break;
      }
    }
  }
  return cross;
}

// Parent-pointer check: every node reaches `root` without revisiting.
bool reaches_root(const std::vector<NodeId>& parent, NodeId root) {
  const int n = static_cast<int>(parent.size());
  for (NodeId v = 0; v < n; ++v) {
    NodeId x = v;
    int steps = 0;
    while (x != root) {
      if (parent[x] < 0 || ++steps > n) return false;
      x = parent[x];
    }
  }
  return true;
}

bool forest_with(const Graph& g, const std::vector<EdgeId>& edges) {
  UnionFind uf(g.num_nodes());
  for (EdgeId e : edges) {
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) return false;
  }
  return true;
}

int digraph_in_degree(const Digraph& d, unsigned long mask) {
  int count = 0;
  for (const Arc& a : d.arcs()) {
    if (in_mask(mask, a.head) && !in_mask(mask, a.tail)) ++count;
  }
  return count;
}

// Dyperedges with head inside `mask` and some member outside.
int dyper_in_degree(const Dypergraph& d, unsigned long mask) {
  int count = 0;
  for (const auto& e : d.dyperedges()) {
    if (!in_mask(mask, e.head)) continue;
    for (NodeId v : e.nodes) {
      if (!in_mask(mask, v)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

unsigned long full_mask(int n) { return n >= 64 ? ~0UL : (1UL << n) - 1; }

}  // namespace

PartitionOracle oracle_partitions(const Graph& g, int k) {
  const int n = g.num_nodes();
  cap(n > kPartitionNodeCap, "partition enumeration");
  PartitionOracle out;
  out.argmax = Partition::trivial(n);
  bool first = true;
  for_each_partition(n, [&](const std::vector<int>& label, int blocks) {
    const long deficit = static_cast<long>(k) * (blocks - 1) - cross_edges(g, label);
    if (first || deficit > out.deficit) {
      out.deficit = deficit;
      out.argmax = Partition::from_labels(label);
      out.min_blocks_at_max = blocks;
      first = false;
    } else if (deficit == out.deficit) {
      out.min_blocks_at_max = std::min(out.min_blocks_at_max, blocks);
    }
    return false;
  });
  return out;
}

bool oracle_partition_connected(const Graph& g, int k, int l) {
  cap(g.num_nodes() > kPartitionNodeCap, "partition enumeration");
  return !for_each_partition(g.num_nodes(), [&](const std::vector<int>& label, int blocks) {
    return blocks >= 2 && cross_edges(g, label) < static_cast<long>(k) * (blocks - 1) + l;
  });
}

std::optional<std::vector<std::vector<EdgeId>>> oracle_trees(const Graph& g, int k) {
  const int n = g.num_nodes();
  const int m = g.num_edges();
  cap(m > kEdgeSearchCap + 4, "tree enumeration");
  std::vector<std::vector<EdgeId>> trees;
  std::vector<EdgeId> chosen;
  std::function<void(EdgeId)> grow = [&](EdgeId from) {
    if (static_cast<int>(chosen.size()) == n - 1) {
      if (forest_with(g, chosen)) trees.push_back(chosen);
      return;
    }
    for (EdgeId e = from; e < m; ++e) {
      chosen.push_back(e);
      if (forest_with(g, chosen)) grow(e + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  std::vector<std::vector<EdgeId>> picked;
  std::vector<bool> used(m, false);
  std::function<bool(std::size_t)> pick = [&](std::size_t from) {
    if (static_cast<int>(picked.size()) == k) return true;
    for (std::size_t i = from; i < trees.size(); ++i) {
      if (std::any_of(trees[i].begin(), trees[i].end(), [&](EdgeId e) { return used[e]; })) continue;
      for (EdgeId e : trees[i]) used[e] = true;
      picked.push_back(trees[i]);
      if (pick(trees[i].empty() ? i : i + 1)) return true;  // the empty tree may repeat
      picked.pop_back();
      for (EdgeId e : trees[i]) used[e] = false;
    }
    return false;
  };
  if (pick(0)) return picked;
  return std::nullopt;
}

bool oracle_forest_cover(const Graph& g, int k) {
  const int m = g.num_edges();
  cap(m > kEdgeSearchCap, "forest cover search");
  std::vector<std::vector<EdgeId>> classes(std::max(k, 0));
  std::function<bool(EdgeId, int)> place = [&](EdgeId e, int used) {
    if (e == m) return true;
    for (int c = 0; c < k && c <= used; ++c) {
      classes[c].push_back(e);
      if (forest_with(g, classes[c]) && place(e + 1, std::max(used, c + 1))) return true;
      classes[c].pop_back();
    }
    return false;
  };
  return place(0, 0);
}

bool oracle_bounded_forests(const Graph& g, const std::vector<int>& lower, const std::vector<int>& upper) {
  const int m = g.num_edges();
  const int k = static_cast<int>(lower.size());
  cap(m > 12, "bounded forest search");
  std::vector<std::vector<EdgeId>> classes(k);
  std::function<bool(EdgeId)> place = [&](EdgeId e) {
    long missing = 0;
    for (int c = 0; c < k; ++c) missing += std::max(0, lower[c] - static_cast<int>(classes[c].size()));
    if (missing > m - e) return false;
    if (e == m) return true;
    if (place(e + 1)) return true;
    for (int c = 0; c < k; ++c) {
      if (static_cast<int>(classes[c].size()) >= upper[c]) continue;
      classes[c].push_back(e);
      if (forest_with(g, classes[c]) && place(e + 1)) return true;
      classes[c].pop_back();
    }
    return false;
  };
  for (int c = 0; c < k; ++c) {
    if (lower[c] > upper[c]) return false;
  }
  return place(0);
}

long oracle_max_density_excess(const Graph& g, int k, int l) {
  const int n = g.num_nodes();
  cap(n > kSubsetNodeCap, "subset enumeration");
  long best = LONG_MIN;
  for (unsigned long mask = 1; mask <= full_mask(n); ++mask) {
    const int size = __builtin_popcountl(mask);
    if (size < 2) continue;
    long induced = 0;
    for (const Edge& e : g.edges()) {
      if (in_mask(mask, e.u) && in_mask(mask, e.v)) ++induced;
    }
    best = std::max(best, induced - (static_cast<long>(k) * (size - 1) - l));
  }
  return best;
}

int oracle_arboricity(const Graph& g) {
  int k = 0;
  while (!oracle_forest_cover(g, k)) ++k;
  return k;
}

int oracle_edge_connectivity(const Graph& g) {
  const int n = g.num_nodes();
  cap(n > kSubsetNodeCap, "subset enumeration");
  int best = INT_MAX;
  for (unsigned long mask = 1; mask < full_mask(n); mask += 2) {  // node 0 always inside
    int cut = 0;
    for (const Edge& e : g.edges()) {
      if (in_mask(mask, e.u) != in_mask(mask, e.v)) ++cut;
    }
    best = std::min(best, cut);
  }
  return best;
}

int oracle_rooted_connectivity(const Digraph& d, NodeId root) {
  const int n = d.num_nodes();
  cap(n > kSubsetNodeCap, "subset enumeration");
  int best = INT_MAX;
  for (unsigned long mask = 1; mask <= full_mask(n); ++mask) {
    if (in_mask(mask, root)) continue;
    best = std::min(best, digraph_in_degree(d, mask));
  }
  return best;
}

int oracle_dyper_rooted_connectivity(const Dypergraph& d, NodeId root) {
  const int n = d.num_nodes();
  cap(n > kSubsetNodeCap, "subset enumeration");
  int best = INT_MAX;
  for (unsigned long mask = 1; mask <= full_mask(n); ++mask) {
    if (in_mask(mask, root)) continue;
    best = std::min(best, dyper_in_degree(d, mask));
  }
  return best;
}

bool oracle_is_rooted_kl(const Dypergraph& d, NodeId root, int k, int l) {
  const int n = d.num_nodes();
  cap(n > kSubsetNodeCap, "subset enumeration");
  for (unsigned long mask = 1; mask <= full_mask(n); ++mask) {
    if (in_mask(mask, root)) continue;
    if (dyper_in_degree(d, mask) < k) return false;
    if (dyper_in_degree(d, full_mask(n) & ~mask) < l) return false;
  }
  return true;
}

bool oracle_arborescence_packing(const Digraph& d, NodeId root, int k, const std::vector<std::vector<EdgeId>>& seeds) {
  const int n = d.num_nodes();
  cap(n > 8, "arborescence search");
  std::vector<std::vector<EdgeId>> entering(n);
  for (EdgeId a = 0; a < d.num_arcs(); ++a) entering[d.arc(a).head].push_back(a);
  // parent_arc[i][v]: arc entering v in tree i, fixed by the seeds if given.
  std::vector<std::vector<EdgeId>> parent_arc(k, std::vector<EdgeId>(n, -1));
  std::vector<bool> used(d.num_arcs(), false);
  for (int i = 0; i < static_cast<int>(seeds.size()); ++i) {
    for (EdgeId a : seeds[i]) {
      parent_arc[i][d.arc(a).head] = a;
      used[a] = true;
    }
  }
  auto acyclic_from = [&](int i, NodeId v) {
    NodeId x = v;
    for (int steps = 0; steps <= n; ++steps) {
      if (x == root || parent_arc[i][x] < 0) return true;
      x = d.arc(parent_arc[i][x]).tail;
      if (x == v) return false;
    }
    return false;
  };
  std::function<bool(int, NodeId)> choose = [&](int i, NodeId v) {
    if (i == k) return true;
    if (v == n) {
      std::vector<NodeId> parent(n, -1);
      for (NodeId x = 0; x < n; ++x) {
        if (x != root) parent[x] = d.arc(parent_arc[i][x]).tail;
      }
      return reaches_root(parent, root) && choose(i + 1, 0);
    }
    if (v == root || parent_arc[i][v] >= 0) return choose(i, v + 1);
    for (EdgeId a : entering[v]) {
      if (used[a]) continue;
      used[a] = true;
      parent_arc[i][v] = a;
      if (acyclic_from(i, v) && choose(i, v + 1)) return true;
      parent_arc[i][v] = -1;
      used[a] = false;
    }
    return false;
  };
  return choose(0, 0);
}

bool oracle_arborescence_cover(const Digraph& d, NodeId root, int k) {
  const int n = d.num_nodes();
  cap(n > 7, "arborescence cover search");
  std::vector<std::vector<EdgeId>> entering(n);
  for (EdgeId a = 0; a < d.num_arcs(); ++a) entering[d.arc(a).head].push_back(a);
  if (!entering[root].empty()) return false;
  if (k == 0) return d.num_arcs() == 0;
  if (n == 1) return true;
  std::vector<std::vector<NodeId>> parent(k, std::vector<NodeId>(n, -1));
  std::vector<EdgeId> tuple(k);
  // For node v, every k-tuple of entering arcs that uses each entering arc.
  std::function<bool(NodeId)> node = [&](NodeId v) {
    if (v == n) {
      for (int i = 0; i < k; ++i) {
        if (!reaches_root(parent[i], root)) return false;
      }
      return true;
    }
    if (v == root) return node(v + 1);
    const auto& in = entering[v];
    if (in.empty() || static_cast<int>(in.size()) > k) return false;
    std::function<bool(int)> fill = [&](int i) {
      if (i == k) {
        for (EdgeId a : in) {
          if (std::find(tuple.begin(), tuple.end(), a) == tuple.end()) return false;
        }
        for (int j = 0; j < k; ++j) parent[j][v] = d.arc(tuple[j]).tail;
        return node(v + 1);
      }
      for (EdgeId a : in) {
        tuple[i] = a;
        if (fill(i + 1)) return true;
      }
      return false;
    };
    return fill(0);
  };
  return node(0);
}

bool oracle_branching_cover(const Digraph& d, int k) {
  const int m = d.num_arcs();
  cap(m > kEdgeSearchCap, "branching cover search");
  const Graph under = underlying_graph(d);
  std::vector<std::vector<EdgeId>> classes(std::max(k, 0));
  std::vector<std::vector<int>> indeg(std::max(k, 0), std::vector<int>(d.num_nodes(), 0));
  std::function<bool(EdgeId, int)> place = [&](EdgeId a, int used) {
    if (a == m) return true;
    for (int c = 0; c < k && c <= used; ++c) {
      const NodeId h = d.arc(a).head;
      if (indeg[c][h] > 0) continue;
      classes[c].push_back(a);
      ++indeg[c][h];
      if (forest_with(under, classes[c]) && place(a + 1, std::max(used, c + 1))) return true;
      --indeg[c][h];
      classes[c].pop_back();
    }
    return false;
  };
  return place(0, 0);
}

bool oracle_mixed_packing(const MixedGraph& m, NodeId root, int k) {
  const int q = m.edges.num_edges();
  cap(q > 14, "mixed orientation enumeration");
  for (unsigned long mask = 0; mask < (1UL << q); ++mask) {
    Digraph d = m.arcs;
    for (EdgeId e = 0; e < q; ++e) {
      const Edge& x = m.edges.edge(e);
      if (mask >> e & 1UL) {
        d.add_arc(x.v, x.u);
      } else {
        d.add_arc(x.u, x.v);
      }
    }
    if (m.num_nodes() == 1 || oracle_rooted_connectivity(d, root) >= k) return true;
  }
  return false;
}

bool oracle_orientation(const Graph& g, NodeId root, int k, int l) {
  const int q = g.num_edges();
  cap(q > kEdgeSearchCap, "orientation enumeration");
  for (unsigned long mask = 0; mask < (1UL << q); ++mask) {
    Dypergraph d(g.num_nodes());
    for (EdgeId e = 0; e < q; ++e) {
      const Edge& x = g.edge(e);
      d.add_dyperedge({x.u, x.v}, (mask >> e & 1UL) ? x.u : x.v);
    }
    if (oracle_is_rooted_kl(d, root, k, l)) return true;
  }
  return false;
}

bool oracle_hyper_orientation(const Hypergraph& h, NodeId root, int k, int l) {
  const int q = h.num_hyperedges();
  std::vector<int> choice(q, 0);
  long total = 1;
  for (const auto& z : h.hyperedges()) {
    total *= static_cast<long>(z.size());
    cap(total > 200'000, "hyper orientation enumeration");
  }
  while (true) {
    Dypergraph d(h.num_nodes());
    for (EdgeId e = 0; e < q; ++e) d.add_dyperedge(h.hyperedge(e), h.hyperedge(e)[choice[e]]);
    if (oracle_is_rooted_kl(d, root, k, l)) return true;
    int i = 0;
    while (i < q && ++choice[i] == static_cast<int>(h.hyperedge(i).size())) choice[i++] = 0;
    if (i == q) return false;
  }
}

bool oracle_hyperforest(const Hypergraph& h, const std::vector<EdgeId>& family) {
  const int f = static_cast<int>(family.size());
  cap(f > kEdgeSearchCap, "hyperforest enumeration");
  for (unsigned long mask = 1; mask < (1UL << f); ++mask) {
    std::vector<bool> seen(h.num_nodes(), false);
    int covered = 0;
    for (int j = 0; j < f; ++j) {
      if (!(mask >> j & 1UL)) continue;
      for (NodeId v : h.hyperedge(family[j])) {
        if (!seen[v]) {
          seen[v] = true;
          ++covered;
        }
      }
    }
    if (covered < __builtin_popcountl(mask) + 1) return false;
  }
  return true;
}

int oracle_hypergraphic_rank(const Hypergraph& h) {
  const int m = h.num_hyperedges();
  cap(m > 12, "hyperforest enumeration");
  int best = 0;
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    const int size = __builtin_popcountl(mask);
    if (size <= best) continue;
    std::vector<EdgeId> family;
    for (EdgeId e = 0; e < m; ++e) {
      if (mask >> e & 1UL) family.push_back(e);
    }
    if (oracle_hyperforest(h, family)) best = size;
  }
  return best;
}

int oracle_whiteley(const Hypergraph& h) {
  const int n = h.num_nodes();
  cap(n > kPartitionNodeCap, "partition enumeration");
  int best = INT_MAX;
  for_each_partition(n, [&](const std::vector<int>& label, int blocks) {
    best = std::min(best, n - blocks + hyper_cross(h, label));
    return false;
  });
  return best;
}

bool oracle_hyper_partition_connected(const Hypergraph& h, int k) {
  cap(h.num_nodes() > kPartitionNodeCap, "partition enumeration");
  return !for_each_partition(h.num_nodes(), [&](const std::vector<int>& label, int blocks) {
    return hyper_cross(h, label) < static_cast<long>(k) * (blocks - 1);
  });
}

bool oracle_hyper_sparse(const Hypergraph& h, int k) {
  const int n = h.num_nodes();
  cap(n > kSubsetNodeCap, "subset enumeration");
  for (unsigned long mask = 1; mask <= full_mask(n); ++mask) {
    long induced = 0;
    for (const auto& z : h.hyperedges()) {
      if (std::all_of(z.begin(), z.end(), [&](NodeId v) { return in_mask(mask, v); })) ++induced;
    }
    if (induced > static_cast<long>(k) * (__builtin_popcountl(mask) - 1)) return false;
  }
  return true;
}

bool oracle_hyperforest_cover(const Hypergraph& h, int k) {
  const int m = h.num_hyperedges();
  cap(m > 12, "hyperforest cover search");
  std::vector<std::vector<EdgeId>> classes(std::max(k, 0));
  std::function<bool(EdgeId, int)> place = [&](EdgeId e, int used) {
    if (e == m) return true;
    for (int c = 0; c < k && c <= used; ++c) {
      classes[c].push_back(e);
      if (oracle_hyperforest(h, classes[c]) && place(e + 1, std::max(used, c + 1))) return true;
      classes[c].pop_back();
    }
    return false;
  };
  return place(0, 0);
}

bool oracle_st_region(const Graph& g, NodeId s, NodeId t) {
  const int n = g.num_nodes();
  cap(n > kPartitionNodeCap, "region enumeration");
  for (unsigned long mask = 0; mask <= full_mask(n); ++mask) {
    if (!in_mask(mask, s) || !in_mask(mask, t)) continue;
    std::vector<NodeId> nodes;
    for (NodeId v = 0; v < n; ++v) {
      if (in_mask(mask, v)) nodes.push_back(v);
    }
    if (oracle_partitions(induced_subgraph(g, nodes).graph, 2).deficit == 0) return true;
  }
  return false;
}

Side oracle_minimax(const GameState& state) {
  const auto& cfg = state.config();
  const Graph& g = cfg.graph;
  const int m = g.num_edges();
  const int n = g.num_nodes();
  cap(m > kMinimaxEdgeCap, "game search");
  std::vector<Tag> tags = state.tags();
  // Winner straight from the definitions: Short edges connect everything
  // (or s to t); non-Cut edges leave the graph (or s and t) disconnected.
  auto decided = [&]() -> std::optional<Side> {
    UnionFind mine(n);
    UnionFind open(n);
    for (EdgeId e = 0; e < m; ++e) {
      if (tags[e] == Tag::kShort) mine.unite(g.edge(e).u, g.edge(e).v);
      if (tags[e] != Tag::kCut) open.unite(g.edge(e).u, g.edge(e).v);
    }
    if (cfg.variant == Variant::kGlobal) {
      if (mine.num_sets() == 1) return Side::kShort;
      if (open.num_sets() > 1) return Side::kCut;
    } else {
      if (mine.find(cfg.s) == mine.find(cfg.t)) return Side::kShort;
      if (open.find(cfg.s) != open.find(cfg.t)) return Side::kCut;
    }
    return std::nullopt;
  };
  std::unordered_map<long, bool> short_wins;
  std::function<bool(Side)> solve = [&](Side mover) {
    if (auto w = decided()) return *w == Side::kShort;
    long code = 0;
    for (EdgeId e = m - 1; e >= 0; --e) code = code * 3 + static_cast<long>(tags[e]);
    if (auto it = short_wins.find(code); it != short_wins.end()) return it->second;
    bool result = mover == Side::kCut;
    for (EdgeId e = 0; e < m; ++e) {
      if (tags[e] != Tag::kNone) continue;
      tags[e] = mover == Side::kShort ? Tag::kShort : Tag::kCut;
      const bool value = solve(other(mover));
      tags[e] = Tag::kNone;
      if (mover == Side::kShort && value) {
        result = true;
        break;
      }
      if (mover == Side::kCut && !value) {
        result = false;
        break;
      }
    }
    short_wins[code] = result;
    return result;
  };
  return solve(state.to_move()) ? Side::kShort : Side::kCut;
}

std::optional<std::string> audit_matroid(const MatroidOracle& m, unsigned long long seed, int trials) {
  std::mt19937_64 rng(seed);
  const int size = m.ground_size();
  auto random_independent = [&](int target) {
    std::vector<ElementId> order(size);
    for (int i = 0; i < size; ++i) order[i] = i;
    for (int i = size - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
    std::vector<ElementId> set;
    for (ElementId x : order) {
      if (static_cast<int>(set.size()) >= target) break;
      set.push_back(x);
      if (!m.is_independent(set)) set.pop_back();
    }
    std::sort(set.begin(), set.end());
    return set;
  };
  if (!m.is_independent(std::vector<ElementId>{})) return "empty set is dependent";
  for (int trial = 0; trial < trials; ++trial) {
    const int cap_size = size == 0 ? 0 : static_cast<int>(rng() % (size + 1));
    const auto i = random_independent(cap_size);
    const auto j = random_independent(size);
    if (m.rank(i) != static_cast<int>(i.size())) return "rank of an independent set differs from its size";
    if (!i.empty()) {
      auto smaller = i;
      smaller.erase(smaller.begin() + static_cast<long>(rng() % smaller.size()));
      if (!m.is_independent(smaller)) return "hereditary property violated";
    }
    if (i.size() < j.size()) {
      bool extended = false;
      for (ElementId x : j) {
        if (std::binary_search(i.begin(), i.end(), x)) continue;
        auto bigger = i;
        bigger.push_back(x);
        if (m.is_independent(bigger)) {
          extended = true;
          break;
        }
      }
      if (!extended) return "augmentation property violated";
    }
  }
  return std::nullopt;
}

}  // namespace packcert::testkit
