// Rechecks emitted documents with counting functions only: spanning-tree and
// forest tests, cross and induced counts, in-degrees. No packing, flow or
// matroid routine is called here.
#include <algorithm>
#include <climits>
#include <set>

#include "packcert/io/commands.hpp"
#include "packcert/io/formats.hpp"

namespace packcert::io {

namespace {

struct Failure {
  std::string message;
};

void check(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

constexpr int kRecheckNodeCap = 16;

std::vector<int> ints(const Json& j) {
  check(j.is_array(), "expected an array of ids");
  std::vector<int> out;
  for (const auto& x : j) {
    check(x.is_number_integer(), "expected integer ids");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> int_lists(const Json& j) {
  check(j.is_array(), "expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& x : j) out.push_back(ints(x));
  return out;
}

void ascending(const std::vector<int>& ids, int bound, const std::string& what) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    check(ids[i] >= 0 && ids[i] < bound, what + ": id out of range");
    check(i == 0 || ids[i - 1] < ids[i], what + ": ids must be strictly ascending");
  }
}

Partition partition_of(const Json& j, int n) {
  try {
    return Partition(n, int_lists(j));
  } catch (const InputError& e) {
    throw Failure{std::string("partition: ") + e.what()};
  }
}

void disjoint(const std::vector<std::vector<int>>& lists, const std::string& what) {
  std::set<int> seen;
  for (const auto& l : lists) {
    for (int x : l) check(seen.insert(x).second, what + ": element " + std::to_string(x) + " used twice");
  }
}

void spanning_trees(const Graph& g, int k, const Json& j) {
  const auto trees = int_lists(j);
  check(static_cast<int>(trees.size()) == k, "expected " + std::to_string(k) + " trees");
  for (const auto& t : trees) {
    ascending(t, g.num_edges(), "tree");
    check(is_spanning_tree(g, t), "a tree is not a spanning tree");
  }
  disjoint(trees, "trees");
}

void deficient_partition(const Graph& g, int k, int l, const Json& doc) {
  const Partition p = partition_of(doc.at("partition"), g.num_nodes());
  const long deficit = partition_deficit(g, p, k, l);
  check(p.size() >= 2 || l > 0, "a deficient partition needs two blocks");
  check(deficit > 0, "partition has enough cross edges");
  if (doc.contains("deficit")) check(doc["deficit"].get<long>() == deficit, "deficit does not match the partition");
}

void dense_set(long induced, const std::vector<int>& nodes, long bound, const Json& doc) {
  check(doc.at("induced").get<long>() == induced, "induced count does not match");
  check(doc.at("bound").get<long>() == bound, "bound does not match");
  check(induced > bound, "set is not too dense");
  check(!nodes.empty(), "empty set");
}

// Spanning root-arborescence: no arc enters the root, one arc enters every
// other node, following entering arcs always leads to the root.
void arborescence(const Digraph& d, NodeId root, const std::vector<int>& arcs) {
  const int n = d.num_nodes();
  std::vector<NodeId> parent(n, -1);
  for (int a : arcs) {
    const Arc& arc = d.arc(a);
    check(arc.head != root, "an arc enters the root");
    check(parent[arc.head] < 0, "a node is entered twice");
    parent[arc.head] = arc.tail;
  }
  for (NodeId v = 0; v < n; ++v) {
    NodeId x = v;
    for (int steps = 0; x != root; ++steps) {
      check(parent[x] >= 0 && steps <= n, "arcs do not form a spanning arborescence");
      x = parent[x];
    }
  }
}

void arborescences(const Digraph& d, NodeId root, int k, const Json& j, const Json& seeds) {
  const auto lists = int_lists(j);
  check(static_cast<int>(lists.size()) == k, "expected " + std::to_string(k) + " arborescences");
  for (const auto& l : lists) {
    ascending(l, d.num_arcs(), "arborescence");
    arborescence(d, root, l);
  }
  disjoint(lists, "arborescences");
  if (!seeds.is_null()) {
    const auto s = int_lists(seeds);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (int a : s[i]) {
        check(std::binary_search(lists[i].begin(), lists[i].end(), a), "a seed arc is missing");
      }
    }
  }
}

// rho(X) >= k and rho(V - X) >= l for every nonempty X avoiding the root.
template <class Entering>
void rooted_kl(int n, NodeId root, int k, int l, Entering entering) {
  check(n <= kRecheckNodeCap, "too large to recheck");
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    if (mask >> root & 1UL) continue;
    std::vector<NodeId> x;
    std::vector<NodeId> rest;
    for (NodeId v = 0; v < n; ++v) (mask >> v & 1UL ? x : rest).push_back(v);
    check(entering(x) >= k, "a set avoiding the root is entered too rarely");
    check(entering(rest) >= l, "a set containing the root is entered too rarely");
  }
}

void trimming(const Hypergraph& h, const Json& j, std::vector<int>& used, bool spanning) {
  const auto hyperedges = ints(j.at("hyperedges"));
  const auto pairs = int_lists(j.at("pairs"));
  check(hyperedges.size() == pairs.size(), "one pair per hyperedge expected");
  ascending(hyperedges, h.num_hyperedges(), "hyperforest");
  Graph trimmed(h.num_nodes());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    check(pairs[i].size() == 2 && pairs[i][0] != pairs[i][1], "pairs must have two distinct nodes");
    const auto& z = h.hyperedge(hyperedges[i]);
    for (int v : pairs[i]) check(std::binary_search(z.begin(), z.end(), v), "pair leaves its hyperedge");
    trimmed.add_edge(pairs[i][0], pairs[i][1]);
    used.push_back(hyperedges[i]);
  }
  std::vector<EdgeId> all(trimmed.num_edges());
  for (EdgeId e = 0; e < trimmed.num_edges(); ++e) all[e] = e;
  check(spanning ? is_spanning_tree(trimmed, all) : is_forest(trimmed, all), "trimmed pairs do not form a forest");
}

long hyper_induced(const Hypergraph& h, const std::vector<int>& nodes) { return induced_count(h, nodes); }

Verdict unwitnessed(const std::string& what) { return {true, false, what + " claimed without a witness"}; }

Verdict check_graph_doc(const Json& doc, const std::string& command, const Graph& g) {
  const std::string result = doc.value("result", "");
  const int k = doc.value("k", 0);
  const int l = doc.value("l", 0);
  const int n = g.num_nodes();
  if (command == "pack-trees" || (command == "check-sparse" && doc.value("mode", "") == "body-bar")) {
    if (result == "packed") {
      spanning_trees(g, k, doc.at("trees"));
    } else {
      check(result == "deficient", "unexpected result");
      deficient_partition(g, k, 0, doc);
    }
  } else if (command == "decompose-forests") {
    if (result == "covered") {
      const auto forests = int_lists(doc.at("forests"));
      check(static_cast<int>(forests.size()) == k, "expected " + std::to_string(k) + " forests");
      std::size_t total = 0;
      for (std::size_t i = 0; i < forests.size(); ++i) {
        ascending(forests[i], g.num_edges(), "forest");
        check(is_forest(g, forests[i]), "a class is not a forest");
        if (doc.contains("caps")) check(static_cast<int>(forests[i].size()) <= doc["caps"][i].get<int>(), "cap exceeded");
        total += forests[i].size();
      }
      disjoint(forests, "forests");
      check(static_cast<int>(total) == g.num_edges(), "forests miss some edges");
    } else if (result == "dense") {
      const auto nodes = ints(doc.at("nodes"));
      ascending(nodes, n, "nodes");
      dense_set(induced_count(g, nodes), nodes, static_cast<long>(k) * (static_cast<long>(nodes.size()) - 1), doc);
    } else {
      check(result == "infeasible", "unexpected result");
      const auto edges = ints(doc.at("edges"));
      ascending(edges, g.num_edges(), "edges");
      const long rank = n - components(g, edges).size();
      long room = 0;
      for (const auto& c : doc.at("caps")) room += std::min<long>(c.get<long>(), rank);
      check(static_cast<long>(edges.size()) > room, "edge set fits under the caps");
    }
  } else if (command == "arboricity") {
    const int a = doc.at("arboricity").get<int>();
    const auto forests = int_lists(doc.at("forests"));
    check(static_cast<int>(forests.size()) == a, "forest count differs from the arboricity");
    std::size_t total = 0;
    for (const auto& f : forests) {
      ascending(f, g.num_edges(), "forest");
      check(is_forest(g, f), "a class is not a forest");
      total += f.size();
    }
    disjoint(forests, "forests");
    check(static_cast<int>(total) == g.num_edges(), "forests miss some edges");
    if (a >= 1) {
      check(doc.contains("dense"), "lower bound witness missing");
      const auto nodes = ints(doc["dense"].at("nodes"));
      const long induced = induced_count(g, nodes);
      check(doc["dense"].at("induced").get<long>() == induced, "induced count does not match");
      check(induced > static_cast<long>(a - 1) * (static_cast<long>(nodes.size()) - 1), "lower bound witness too sparse");
    }
  } else if (command == "deficiency") {
    const long deficit = doc.at("deficit").get<long>();
    const Partition p = partition_of(doc.at("partition"), n);
    check(std::max(0L, partition_deficit(g, p, k)) == deficit, "deficit does not match the partition");
    const Partition bricks = partition_of(doc.at("bricks"), n);
    check(std::max(0L, partition_deficit(g, bricks, k)) == deficit, "brick partition is not a maximiser");
    return {true, false, "deficit attained; maximality not rechecked"};
  } else if (command == "augment") {
    if (result == "infeasible") {
      const Partition p = partition_of(doc.at("partition"), n);
      check(partition_deficit(g, p, k) == doc.at("required").get<long>(), "required count does not match");
      check(doc.at("required").get<long>() > doc.at("budget").get<long>(), "budget suffices");
    } else {
      Graph bigger = g;
      for (const auto& e : int_lists(doc.at("new_edges"))) {
        check(e.size() == 2, "new edges are node pairs");
        bigger.add_edge(e[0], e[1]);
      }
      const Partition p = partition_of(doc.at("partition"), n);
      check(std::max(0L, partition_deficit(g, p, k)) == static_cast<long>(doc["new_edges"].size()),
            "edge count differs from the partition's deficit");
      spanning_trees(bigger, k, doc.at("trees"));
    }
  } else if (command == "check-pc") {
    if (result == "packed") return unwitnessed("partition-connectivity");
    deficient_partition(g, k, l, doc);
  } else if (command == "check-sparse") {
    if (result == "covered") return unwitnessed("sparsity");
    if (result == "infeasible") {
      check(doc.at("edges").get<long>() == g.num_edges(), "edge count does not match");
      check(g.num_edges() != static_cast<long>(k) * (n - 1) - l, "edge count is right");
    } else {
      const auto nodes = ints(doc.at("nodes"));
      ascending(nodes, n, "nodes");
      check(nodes.size() >= 2, "dense set needs two nodes");
      dense_set(induced_count(g, nodes), nodes, static_cast<long>(k) * (static_cast<long>(nodes.size()) - 1) - l, doc);
    }
  } else if (command == "certify-kec") {
    const Digraph doubled = doubled_digraph(g);
    if (result == "packed") {
      arborescences(doubled, doc.at("root").get<int>(), k, doc.at("arborescences"), Json());
    } else {
      const auto nodes = ints(doc.at("nodes"));
      ascending(nodes, n, "nodes");
      check(!nodes.empty() && static_cast<int>(nodes.size()) < n, "cut side must be proper and nonempty");
      check(boundary_count(g, nodes) == doc.at("value").get<int>(), "cut value does not match");
      check(doc["value"].get<int>() < k, "cut is large enough");
    }
  } else if (command == "orient") {
    const NodeId root = doc.at("root").get<int>();
    if (result == "packed") {
      if (!doc.contains("arcs")) return unwitnessed("orientation");
      const auto arcs = int_lists(doc["arcs"]);
      check(static_cast<int>(arcs.size()) == g.num_edges(), "one arc per edge expected");
      Digraph d(n);
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& x = g.edge(e);
        check(arcs[e].size() == 2 && ((arcs[e][0] == x.u && arcs[e][1] == x.v) || (arcs[e][0] == x.v && arcs[e][1] == x.u)),
              "arc " + std::to_string(e) + " is not an orientation of its edge");
        d.add_arc(arcs[e][0], arcs[e][1]);
      }
      rooted_kl(n, root, k, l, [&](const std::vector<NodeId>& x) { return in_degree(d, x); });
    } else {
      deficient_partition(g, std::max(k, l), std::min(k, l), doc);
    }
  } else if (command == "game-analyze") {
    return {true, true, ""};
  } else {
    check(false, "unknown command '" + command + "'");
  }
  return {true, true, ""};
}

Verdict check_game_doc(const Json& doc, const Graph& g) {
  const auto& a = doc.at("analysis");
  const auto& cert = a.at("certificate");
  const bool st = doc.at("variant").get<std::string>() == "st";
  const bool short_first = doc.at("first").get<std::string>() == "short";
  const int n = g.num_nodes();
  if (a.at("winner").get<std::string>() == "short") {
    const auto region = ints(cert.at("region"));
    ascending(region, n, "region");
    if (st) {
      check(std::binary_search(region.begin(), region.end(), doc.at("s").get<int>()) &&
                std::binary_search(region.begin(), region.end(), doc.at("t").get<int>()),
            "region misses a terminal");
    } else {
      check(static_cast<int>(region.size()) == n, "global region must be V");
    }
    const InducedSubgraph sub = induced_subgraph(g, region);
    std::vector<EdgeId> local_of(g.num_edges(), -1);
    for (EdgeId e = 0; e < sub.graph.num_edges(); ++e) local_of[sub.original_edge[e]] = e;
    const auto trees = int_lists(cert.at("trees"));
    check(trees.size() == 2, "two trees expected");
    std::vector<std::vector<EdgeId>> local(2);
    for (int i = 0; i < 2; ++i) {
      ascending(trees[i], g.num_edges(), "tree");
      for (int e : trees[i]) {
        check(local_of[e] >= 0, "tree edge leaves the region");
        local[i].push_back(local_of[e]);
      }
      check(is_spanning_tree(sub.graph, local[i]), "a tree does not span the region");
    }
    std::vector<int> shared;
    std::set_intersection(trees[0].begin(), trees[0].end(), trees[1].begin(), trees[1].end(), std::back_inserter(shared));
    if (short_first) {
      check(shared.size() <= 1, "trees share more than one edge");
      if (!shared.empty()) check(cert.at("first_move").get<int>() == shared[0], "first move is not the shared edge");
    } else {
      check(shared.empty(), "trees are not disjoint");
    }
    return {true, true, ""};
  }
  if (!cert.value("closed_form", true)) return unwitnessed("cut win");
  const auto region = ints(cert.at("region"));
  ascending(region, n, "region");
  const InducedSubgraph sub = induced_subgraph(g, region);
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < region.size(); ++i) position[region[i]] = static_cast<int>(i);
  std::vector<std::vector<NodeId>> blocks;
  for (const auto& b : int_lists(cert.at("blocks"))) {
    std::vector<NodeId> local;
    for (int v : b) {
      check(v >= 0 && v < n && position[v] >= 0, "block leaves the region");
      local.push_back(position[v]);
    }
    blocks.push_back(local);
  }
  Partition p;
  try {
    p = Partition(static_cast<int>(region.size()), blocks);
  } catch (const InputError& e) {
    throw Failure{std::string("blocks: ") + e.what()};
  }
  const long deficit = partition_deficit(sub.graph, p, 2);
  check(deficit == cert.at("deficit").get<long>(), "deficit does not match the blocks");
  if (st) {
    check(p.block_of(position[doc.at("s").get<int>()]) != p.block_of(position[doc.at("t").get<int>()]),
          "blocks do not separate s and t");
    check(deficit >= 1, "blocks are not deficient");
  } else {
    check(deficit >= (short_first ? 2 : 1), "blocks are not deficient enough");
  }
  return {true, true, ""};
}

Verdict check_digraph_doc(const Json& doc, const std::string& command, const Digraph& d) {
  const std::string result = doc.value("result", "");
  const int k = doc.value("k", 0);
  const int n = d.num_nodes();
  if (command == "pack-arbs") {
    const NodeId root = doc.at("root").get<int>();
    if (result == "packed") {
      arborescences(d, root, k, doc.at("arborescences"), doc.contains("seeds") ? doc["seeds"] : Json());
    } else {
      const auto nodes = ints(doc.at("nodes"));
      ascending(nodes, n, "nodes");
      check(!nodes.empty() && !std::binary_search(nodes.begin(), nodes.end(), root), "set must avoid the root");
      const int value = doc.at("value").get<int>();
      if (!doc.contains("seeds")) {
        check(in_degree(d, nodes) == value, "in-degree does not match");
        check(value < doc.at("required").get<int>() && doc["required"].get<int>() == k, "set is entered often enough");
      } else {
        return unwitnessed("seeded infeasibility");
      }
    }
  } else if (command == "cover-arbs") {
    if (result == "covered") return unwitnessed("arborescence cover");
    std::vector<int> indeg(n, 0);
    for (const Arc& a : d.arcs()) ++indeg[a.head];
    if (doc.contains("node")) {
      check(indeg[doc["node"].get<int>()] > k, "node in-degree is within bounds");
    } else {
      const auto nodes = ints(doc.at("nodes"));
      ascending(nodes, n, "nodes");
      const auto inside = membership(n, nodes);
      std::vector<bool> head(n, false);
      long entering = 0;
      for (const Arc& a : d.arcs()) {
        if (inside[a.head] && !inside[a.tail]) {
          ++entering;
          head[a.head] = true;
        }
      }
      long slack = 0;
      for (NodeId v = 0; v < n; ++v) {
        if (head[v]) slack += k - indeg[v];
      }
      check(k - entering > slack, "set condition holds on the given set");
    }
  } else if (command == "cover-branchings") {
    if (result == "covered") return unwitnessed("branching cover");
    if (doc.contains("node")) {
      check(in_degree(d, std::vector<NodeId>{doc["node"].get<int>()}) > k, "node in-degree is within bounds");
    } else {
      const auto nodes = ints(doc.at("nodes"));
      ascending(nodes, n, "nodes");
      dense_set(induced_count(d, nodes), nodes, static_cast<long>(k) * (static_cast<long>(nodes.size()) - 1), doc);
    }
  } else {
    check(false, "unknown command '" + command + "'");
  }
  return {true, true, ""};
}

Verdict check_mixed_doc(const Json& doc, const MixedGraph& m) {
  if (doc.value("result", "") == "packed") return unwitnessed("mixed packing");
  const int k = doc.at("k").get<int>();
  const NodeId root = doc.at("root").get<int>();
  const Partition p = partition_of(doc.at("partition"), m.num_nodes());
  long need = 0;
  for (int b = 0; b < p.size(); ++b) {
    if (b != p.block_of(root)) need += k - in_degree(m.arcs, p.block(b));
  }
  check(cross_count(m.edges, p) < need, "partition satisfies the condition");
  return {true, true, ""};
}

Verdict check_hyper_doc(const Json& doc, const std::string& command, const Hypergraph& h) {
  const std::string result = doc.value("result", "");
  const int k = doc.value("k", 0);
  const int n = h.num_nodes();
  if (command == "hyper-rank") {
    const int rank = doc.at("rank").get<int>();
    const Partition p = partition_of(doc.at("partition"), n);
    check(n - p.size() + cross_count(h, p) == rank, "partition bound differs from the rank");
    std::vector<int> used;
    trimming(h, doc.at("forest"), used, false);
    check(static_cast<int>(used.size()) == rank, "hyperforest size differs from the rank");
  } else if (command == "hyper-pack") {
    if (result == "packed") {
      std::vector<int> used;
      check(static_cast<int>(doc.at("trees").size()) == k, "expected " + std::to_string(k) + " hypertrees");
      for (const auto& t : doc["trees"]) trimming(h, t, used, true);
      disjoint({used}, "hypertrees");
    } else {
      const Partition p = partition_of(doc.at("partition"), n);
      const long deficit = static_cast<long>(k) * (p.size() - 1) - cross_count(h, p);
      check(deficit > 0, "partition is crossed often enough");
      check(doc.at("deficit").get<long>() == deficit, "deficit does not match");
    }
  } else if (command == "hyper-cover") {
    if (result == "covered") {
      std::vector<int> used;
      check(static_cast<int>(doc.at("forests").size()) == k, "expected " + std::to_string(k) + " hyperforests");
      for (const auto& t : doc["forests"]) trimming(h, t, used, false);
      disjoint({used}, "hyperforests");
      check(static_cast<int>(used.size()) == h.num_hyperedges(), "hyperforests miss some hyperedges");
    } else {
      const auto nodes = ints(doc.at("nodes"));
      ascending(nodes, n, "nodes");
      dense_set(hyper_induced(h, nodes), nodes, static_cast<long>(k) * (static_cast<long>(nodes.size()) - 1), doc);
    }
  } else if (command == "hyper-orient") {
    const int l = doc.value("l", 0);
    const NodeId root = doc.at("root").get<int>();
    if (result == "packed") {
      if (!doc.contains("heads")) return unwitnessed("hypergraph orientation");
      const auto heads = ints(doc["heads"]);
      check(static_cast<int>(heads.size()) == h.num_hyperedges(), "one head per hyperedge expected");
      Dypergraph d(n);
      for (EdgeId e = 0; e < h.num_hyperedges(); ++e) {
        const auto& z = h.hyperedge(e);
        check(std::binary_search(z.begin(), z.end(), heads[e]), "head outside its hyperedge");
        d.add_dyperedge(z, heads[e]);
      }
      rooted_kl(n, root, k, l, [&](const std::vector<NodeId>& x) { return in_degree(d, x); });
    } else {
      const Partition p = partition_of(doc.at("partition"), n);
      check(p.size() >= 2, "partition needs two blocks");
      long crossing = cross_count(h, p);
      long excess = 0;
      for (const auto& z : h.hyperedges()) {
        std::set<int> met;
        for (NodeId v : z) met.insert(p.block_of(v));
        excess += static_cast<long>(met.size()) - 1;
      }
      const long blocks = p.size();
      const bool a = crossing < k * (blocks - 1) + l;
      const bool b = l > k && excess < l * (blocks - 1) + k;
      check(a || b, "partition satisfies both conditions");
    }
  } else {
    check(false, "unknown command '" + command + "'");
  }
  return {true, true, ""};
}

Verdict check_dyper_doc(const Json& doc, const Dypergraph& d) {
  if (doc.value("result", "") == "packed") return unwitnessed("rooted connectivity");
  const auto nodes = ints(doc.at("nodes"));
  ascending(nodes, d.num_nodes(), "nodes");
  const NodeId root = doc.at("root").get<int>();
  check(!nodes.empty() && !std::binary_search(nodes.begin(), nodes.end(), root), "set must avoid the root");
  check(in_degree(d, nodes) == doc.at("value").get<int>(), "in-degree does not match");
  check(doc["value"].get<int>() < doc.at("k").get<int>(), "set is entered often enough");
  return {true, true, ""};
}

}  // namespace

Verdict verify(const Json& doc) {
  try {
    check(doc.is_object() && doc.contains("command") && doc.contains("instance"), "missing command or instance");
    const std::string command = doc["command"].get<std::string>();
    const Instance instance = parse_instance(doc["instance"].get<std::string>());
    if (command == "game-analyze") {
      check(std::holds_alternative<Graph>(instance), "game needs a graph");
      return check_game_doc(doc, std::get<Graph>(instance));
    }
    if (const auto* g = std::get_if<Graph>(&instance)) return check_graph_doc(doc, command, *g);
    if (const auto* d = std::get_if<Digraph>(&instance)) return check_digraph_doc(doc, command, *d);
    if (const auto* m = std::get_if<MixedGraph>(&instance)) return check_mixed_doc(doc, *m);
    if (const auto* h = std::get_if<Hypergraph>(&instance)) return check_hyper_doc(doc, command, *h);
    return check_dyper_doc(doc, std::get<Dypergraph>(instance));
  } catch (const Failure& f) {
    return {false, true, f.message};
  } catch (const std::exception& e) {
    return {false, true, std::string("malformed document: ") + e.what()};
  }
}

}  // namespace packcert::io
