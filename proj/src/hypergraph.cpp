#include "packcert/hypergraph.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "packcert/flow.hpp"

namespace packcert {

namespace {

std::vector<NodeId> normalized_members(int n, std::vector<NodeId> nodes, const char* what) {
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw InputError(std::string(what) + ": repeated member");
  }
  if (nodes.size() < 2) throw InputError(std::string(what) + ": needs at least two members");
  if (nodes.front() < 0 || nodes.back() >= n) throw InputError(std::string(what) + ": node out of range");
  return nodes;
}

// Positions (into `family`) of a sub-family with |union J| <= |J|, or nothing
// when the family is a hyperforest. One flow per member: the member may send
// two units, every other member one, each node absorbs one.
std::optional<std::vector<int>> surplus_violation(const Hypergraph& h, std::span<const EdgeId> family) {
  const int f = static_cast<int>(family.size());
  const int n = h.num_nodes();
  for (int forced = 0; forced < f; ++forced) {
    FlowNetwork net(f + n + 2);
    const int source = f + n;
    const int sink = source + 1;
    for (int j = 0; j < f; ++j) {
      net.add_arc(source, j, j == forced ? 2 : 1);
      for (NodeId v : h.hyperedge(family[j])) net.add_arc(j, f + v, FlowNetwork::kInfinite);
    }
    for (NodeId v = 0; v < n; ++v) net.add_arc(f + v, sink, 1);
    if (net.max_flow(source, sink, f + 1) == f + 1) continue;
    const auto reach = net.source_side(source);
    std::vector<int> violating;
    for (int j = 0; j < f; ++j) {
      if (reach[j]) violating.push_back(j);
    }
    return violating;
  }
  return std::nullopt;
}

int union_size(const Hypergraph& h, std::span<const EdgeId> family) {
  std::vector<bool> seen(h.num_nodes(), false);
  int count = 0;
  for (EdgeId e : family) {
    for (NodeId v : h.hyperedge(e)) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
      }
    }
  }
  return count;
}

Hypergraph sub_hypergraph(const Hypergraph& h, std::span<const EdgeId> family) {
  Hypergraph sub(h.num_nodes());
  for (EdgeId e : family) sub.add_hyperedge(h.hyperedge(e));
  return sub;
}

Trimming trim_or_throw(const Hypergraph& h, std::span<const EdgeId> family) {
  auto outcome = is_hyperforest(h, family);
  if (auto* t = std::get_if<Trimming>(&outcome)) return std::move(*t);
  throw std::logic_error("hypergraph: class of the union is not a hyperforest");
}

void require_positive(int k, const char* what) {
  if (k < 1) throw InputError(std::string(what) + ": k must be at least 1");
}

}  // namespace

Hypergraph::Hypergraph(int n) : n_(n) {
  if (n < 0) throw InputError("Hypergraph: negative node count");
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<NodeId>> hyperedges) : Hypergraph(n) {
  for (auto& e : hyperedges) add_hyperedge(std::move(e));
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
  Hypergraph h(g.num_nodes());
  for (const Edge& e : g.edges()) h.add_hyperedge({e.u, e.v});
  return h;
}

EdgeId Hypergraph::add_hyperedge(std::vector<NodeId> nodes) {
  hyperedges_.push_back(normalized_members(n_, std::move(nodes), "Hypergraph"));
  return num_hyperedges() - 1;
}

Dypergraph::Dypergraph(int n) : n_(n) {
  if (n < 0) throw InputError("Dypergraph: negative node count");
}

Dypergraph Dypergraph::from_digraph(const Digraph& d) {
  Dypergraph out(d.num_nodes());
  for (const Arc& a : d.arcs()) out.add_dyperedge({a.tail, a.head}, a.head);
  return out;
}

EdgeId Dypergraph::add_dyperedge(std::vector<NodeId> nodes, NodeId head) {
  auto members = normalized_members(n_, std::move(nodes), "Dypergraph");
  if (!std::binary_search(members.begin(), members.end(), head)) {
    throw InputError("Dypergraph: head is not a member");
  }
  dyperedges_.push_back({std::move(members), head});
  return num_dyperedges() - 1;
}

int cross_count(const Hypergraph& h, const Partition& p) {
  int count = 0;
  for (const auto& e : h.hyperedges()) {
    const int b = p.block_of(e.front());
    if (std::any_of(e.begin(), e.end(), [&](NodeId v) { return p.block_of(v) != b; })) ++count;
  }
  return count;
}

int induced_count(const Hypergraph& h, std::span<const NodeId> nodes) {
  const auto in = membership(h.num_nodes(), nodes);
  int count = 0;
  for (const auto& e : h.hyperedges()) {
    if (std::all_of(e.begin(), e.end(), [&](NodeId v) { return in[v]; })) ++count;
  }
  return count;
}

int in_degree(const Dypergraph& d, std::span<const NodeId> nodes) {
  const auto in = membership(d.num_nodes(), nodes);
  int count = 0;
  for (const auto& e : d.dyperedges()) {
    if (in[e.head] && std::any_of(e.nodes.begin(), e.nodes.end(), [&](NodeId v) { return !in[v]; })) ++count;
  }
  return count;
}

Partition components(const Hypergraph& h, std::span<const EdgeId> family) {
  UnionFind uf(h.num_nodes());
  for (EdgeId e : family) {
    const auto& members = h.hyperedge(e);
    for (NodeId v : members) uf.unite(members.front(), v);
  }
  std::vector<int> labels(h.num_nodes());
  for (NodeId v = 0; v < h.num_nodes(); ++v) labels[v] = uf.find(v);
  return Partition::from_labels(labels);
}

Partition components(const Hypergraph& h) {
  std::vector<EdgeId> all(h.num_hyperedges());
  for (EdgeId e = 0; e < h.num_hyperedges(); ++e) all[e] = e;
  return components(h, all);
}

bool hyperforest_condition(const Hypergraph& h, std::span<const EdgeId> family) {
  return !surplus_violation(h, family).has_value();
}

HyperforestOutcome is_hyperforest(const Hypergraph& h, std::span<const EdgeId> family) {
  for (EdgeId e : family) {
    if (e < 0 || e >= h.num_hyperedges()) throw InputError("is_hyperforest: hyperedge out of range");
  }
  if (auto bad = surplus_violation(h, family)) {
    HyperforestViolation v;
    for (int j : *bad) v.family.push_back(family[j]);
    v.union_size = union_size(h, v.family);
    return v;
  }
  // Shrink one hyperedge at a time to the first pair of its members that
  // keeps the family a hyperforest; such a pair always exists.
  Hypergraph work(h.num_nodes());
  std::vector<EdgeId> positions;
  for (EdgeId e : family) positions.push_back(work.add_hyperedge(h.hyperedge(e)));
  Trimming t;
  t.hyperedges.assign(family.begin(), family.end());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto members = h.hyperedge(family[i]);
    bool placed = false;
    for (std::size_t a = 0; a < members.size() && !placed; ++a) {
      for (std::size_t b = a + 1; b < members.size() && !placed; ++b) {
        std::vector<std::vector<NodeId>> sets = work.hyperedges();
        sets[i] = {members[a], members[b]};
        Hypergraph trial(h.num_nodes(), sets);
        if (hyperforest_condition(trial, positions)) {
          work = std::move(trial);
          t.pairs.push_back({members[a], members[b]});
          placed = true;
        }
      }
    }
    if (!placed) throw std::logic_error("is_hyperforest: no trimming pair keeps the family a hyperforest");
  }
  const Graph forest = trimmed_graph(h.num_nodes(), t);
  std::vector<EdgeId> all(forest.num_edges());
  for (EdgeId e = 0; e < forest.num_edges(); ++e) all[e] = e;
  if (!is_forest(forest, all)) throw std::logic_error("is_hyperforest: trimming is not a forest");
  return t;
}

Graph trimmed_graph(int n, const Trimming& t) {
  Graph g(n);
  for (const Edge& e : t.pairs) g.add_edge(e.u, e.v);
  return g;
}

bool HypergraphicMatroid::is_independent(std::span<const ElementId> elements) const {
  return hyperforest_condition(h_, elements);
}

HypergraphicRank hypergraphic_rank(const Hypergraph& h) {
  const HypergraphicMatroid m(h);
  const MatroidOracle* one[] = {&m};
  const UnionResult u = matroid_union_max(one);
  HypergraphicRank out{u.rank, components(h, u.certificate)};
  if (h.num_nodes() - out.partition.size() + cross_count(h, out.partition) != out.rank) {
    throw std::logic_error("hypergraphic_rank: certificate partition does not attain the rank");
  }
  return out;
}

HyperPackOutcome pack_hypertrees(const Hypergraph& h, int k) {
  require_positive(k, "pack_hypertrees");
  const HypergraphicMatroid m(h);
  const auto ms = copies(m, k);
  const UnionResult u = matroid_union_max(ms);
  const long target = static_cast<long>(k) * std::max(0, h.num_nodes() - 1);
  if (u.rank == target) {
    HypertreePacking out;
    for (const auto& cls : u.labeling.classes()) out.trees.push_back(trim_or_throw(h, cls));
    return out;
  }
  DeficientPartition d{components(h, u.certificate), 0};
  d.deficit = static_cast<long>(k) * (d.partition.size() - 1) - cross_count(h, d.partition);
  if (d.deficit != target - u.rank) {
    throw std::logic_error("pack_hypertrees: certificate partition does not realise the deficiency");
  }
  return d;
}

HyperCoverOutcome cover_by_hyperforests(const Hypergraph& h, int k) {
  require_positive(k, "cover_by_hyperforests");
  const HypergraphicMatroid m(h);
  const auto ms = copies(m, k);
  const IndependentCover cover = cover_by_independent(ms);
  if (cover.covered) {
    HyperforestCover out;
    for (const auto& cls : cover.labeling.classes()) out.forests.push_back(trim_or_throw(h, cls));
    return out;
  }
  // |Y| > k r(Y); split r(Y) over a minimising partition of the sub-family and
  // one block must carry more than k(|B|-1) of its members.
  const Hypergraph sub = sub_hypergraph(h, cover.violating_set);
  const Partition p = hypergraphic_rank(sub).partition;
  for (const auto& block : p.blocks()) {
    const long bound = static_cast<long>(k) * (static_cast<long>(block.size()) - 1);
    if (induced_count(sub, block) > bound) return DenseSet{block, induced_count(h, block), bound};
  }
  throw std::logic_error("cover_by_hyperforests: covering certificate has no dense block");
}

}  // namespace packcert
