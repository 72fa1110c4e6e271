#include "packcert/io/commands.hpp"

#include <algorithm>
#include <sstream>

#include "packcert/arborescence.hpp"
#include "packcert/io/formats.hpp"
#include "packcert/io/game_json.hpp"
#include "packcert/matroid.hpp"
#include "packcert/orientation.hpp"

namespace packcert::io {

namespace {

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Json edge_lists(const std::vector<std::vector<EdgeId>>& lists) {
  Json out = Json::array();
  for (const auto& l : lists) out.push_back(sorted(l));
  return out;
}

Json blocks_json(const Partition& p) { return p.blocks(); }

Json trimming_json(const Trimming& t) {
  // Pairs follow their hyperedges; sort both by hyperedge id together.
  std::vector<std::pair<EdgeId, Edge>> items;
  for (std::size_t i = 0; i < t.hyperedges.size(); ++i) items.emplace_back(t.hyperedges[i], t.pairs[i]);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json hyperedges = Json::array();
  Json pairs = Json::array();
  for (const auto& [e, p] : items) {
    hyperedges.push_back(e);
    pairs.push_back({std::min(p.u, p.v), std::max(p.u, p.v)});
  }
  return {{"hyperedges", hyperedges}, {"pairs", pairs}};
}

Json dense_json(Json doc, const std::vector<NodeId>& nodes, long induced, long bound) {
  doc["result"] = "dense";
  doc["nodes"] = sorted(nodes);
  doc["induced"] = induced;
  doc["bound"] = bound;
  return doc;
}

Report finish(Report r, const std::string& command, const std::string& instance, const Json& params) {
  r.doc["command"] = command;
  for (const auto& [key, value] : params.items()) r.doc[key] = value;
  r.doc["instance"] = instance;
  return r;
}

std::string plural(long n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

Report pack_outcome(const Graph& g, int k, const PackOutcome& out) {
  Report r;
  if (const auto* p = std::get_if<TreePacking>(&out)) {
    r.doc["result"] = "packed";
    r.doc["trees"] = edge_lists(p->trees);
    r.summary = plural(k, "edge-disjoint spanning tree") + " found";
  } else {
    const auto& d = std::get<DeficientPartition>(out);
    r.doc["result"] = "deficient";
    r.doc["partition"] = blocks_json(d.partition);
    r.doc["deficit"] = d.deficit;
    r.exit_code = kExitFails;
    r.summary = "no " + plural(k, "disjoint spanning tree") + ": partition into " +
                std::to_string(d.partition.size()) + " blocks has " + std::to_string(cross_count(g, d.partition)) +
                " cross edges, deficit " + std::to_string(d.deficit);
  }
  return r;
}

}  // namespace

Report pack_trees_report(const Graph& g, int k) {
  return finish(pack_outcome(g, k, pack_spanning_trees(g, k)), "pack-trees", format(g), {{"k", k}});
}

Report decompose_forests_report(const Graph& g, int k, const std::vector<int>& caps) {
  Report r;
  const auto out = decompose_forests(g, k, caps);
  if (const auto* f = std::get_if<ForestDecomposition>(&out)) {
    r.doc["result"] = "covered";
    r.doc["forests"] = edge_lists(f->forests);
    r.summary = "edges split into " + plural(k, "forest");
  } else if (const auto* d = std::get_if<DenseSet>(&out)) {
    r.doc = dense_json(std::move(r.doc), d->nodes, d->induced, d->bound);
    r.exit_code = kExitFails;
    r.summary = "node set of size " + std::to_string(d->nodes.size()) + " induces " + std::to_string(d->induced) +
                " > " + std::to_string(d->bound) + " edges";
  } else {
    const auto& c = std::get<CappedViolation>(out);
    r.doc["result"] = "infeasible";
    r.doc["edges"] = sorted(c.edges);
    r.exit_code = kExitFails;
    r.summary = "forest sizes cannot respect the caps";
  }
  Json params = {{"k", k}};
  if (!caps.empty()) params["caps"] = caps;
  return finish(std::move(r), "decompose-forests", format(g), params);
}

Report arboricity_report(const Graph& g) {
  Report r;
  const Arboricity a = arboricity(g);
  r.doc["arboricity"] = a.value;
  r.doc["forests"] = edge_lists(a.forests);
  if (a.value >= 1) {
    const auto below = decompose_forests(g, a.value - 1);
    if (const auto* d = std::get_if<DenseSet>(&below)) {
      r.doc["dense"] = {{"nodes", sorted(d->nodes)}, {"induced", d->induced}};
    }
  }
  r.summary = "arboricity " + std::to_string(a.value);
  return finish(std::move(r), "arboricity", format(g), Json::object());
}

Report deficiency_report(const Graph& g, int k) {
  Report r;
  const Deficiency d = partition_deficiency(g, k);
  r.doc["result"] = d.value > 0 ? "deficient" : "packed";
  r.doc["deficit"] = d.value;
  r.doc["partition"] = blocks_json(d.witness);
  r.doc["bricks"] = blocks_json(brick_partition(g, k));
  r.summary = std::to_string(d.value) + " edges missing for " + std::to_string(k) + "-tree-connectivity";
  return finish(std::move(r), "deficiency", format(g), {{"k", k}});
}

Report augment_report(const Graph& g, int k, AugmentMode mode, std::optional<long> budget) {
  Report r;
  const auto out = augment_to_k_tree_connected(g, k, mode, budget);
  if (const auto* a = std::get_if<Augmentation>(&out)) {
    Graph bigger = g;
    Json added = Json::array();
    for (const Edge& e : a->new_edges) {
      bigger.add_edge(e.u, e.v);
      added.push_back({e.u, e.v});
    }
    const Deficiency d = partition_deficiency(g, k);
    r.doc["result"] = "packed";
    r.doc["new_edges"] = added;
    r.doc["partition"] = blocks_json(d.witness);
    r.doc["deficit"] = d.value;
    const auto packed = pack_spanning_trees(bigger, k);
    if (const auto* p = std::get_if<TreePacking>(&packed)) r.doc["trees"] = edge_lists(p->trees);
    r.summary = "added " + plural(static_cast<long>(a->new_edges.size()), "edge");
  } else {
    const auto& inf = std::get<AugmentInfeasible>(out);
    r.doc["result"] = "infeasible";
    r.doc["required"] = inf.required;
    r.doc["partition"] = blocks_json(inf.witness);
    r.exit_code = kExitFails;
    r.summary = "needs " + plural(inf.required, "edge") + ", over budget";
  }
  Json params = {{"k", k}, {"mode", mode == AugmentMode::kStar ? "star" : "parallel"}};
  if (budget) params["budget"] = *budget;
  return finish(std::move(r), "augment", format(g), params);
}

Report check_pc_report(const Graph& g, int k, int l) {
  Report r;
  const PartitionConnectivity pc = check_partition_connected(g, k, l);
  if (pc.holds) {
    r.doc["result"] = "packed";
    r.summary = "(" + std::to_string(k) + "," + std::to_string(l) + ")-partition-connected";
  } else {
    r.doc["result"] = "deficient";
    r.doc["partition"] = blocks_json(*pc.witness);
    r.doc["deficit"] = partition_deficit(g, *pc.witness, k, l);
    r.doc["removed"] = sorted(pc.removed);
    r.exit_code = kExitFails;
    r.summary = "partition into " + std::to_string(pc.witness->size()) + " blocks has too few cross edges";
  }
  return finish(std::move(r), "check-pc", format(g), {{"k", k}, {"l", l}});
}

Report check_sparse_report(const Graph& g, int k, int l, SparseMode mode, int dimension) {
  Report r;
  Json params;
  std::string name = "check-sparse";
  if (mode == SparseMode::kBodyBar) {
    const int trees = dimension * (dimension + 1) / 2;
    r = pack_outcome(g, trees, check_body_bar(g, dimension));
    params = {{"mode", "body-bar"}, {"d", dimension}, {"k", trees}};
    return finish(std::move(r), name, format(g), params);
  }
  SparsityResult s;
  if (mode == SparseMode::kLaman) {
    k = 2;
    l = 1;
    s = check_laman(g);
    params = {{"mode", "laman"}};
  } else if (mode == SparseMode::kTight) {
    s = check_forest_tight(g, k, l);
    params = {{"mode", "tight"}};
  } else {
    s = check_forest_sparse(g, k, l);
    params = {{"mode", "sparse"}};
  }
  params["k"] = k;
  params["l"] = l;
  if (!s.violating.empty()) {
    const long induced = induced_count(g, s.violating);
    const long bound = static_cast<long>(k) * (static_cast<long>(s.violating.size()) - 1) - l;
    r.doc = dense_json(std::move(r.doc), s.violating, induced, bound);
    r.exit_code = kExitFails;
    r.summary = "node set of size " + std::to_string(s.violating.size()) + " is too dense";
  } else if (!s.holds) {
    r.doc["result"] = "infeasible";
    r.doc["edges"] = g.num_edges();
    r.doc["required"] = static_cast<long>(k) * (g.num_nodes() - 1) - l;
    r.exit_code = kExitFails;
    r.summary = "edge count differs from k(n-1)-l";
  } else {
    r.doc["result"] = "covered";
    r.summary = "sparsity holds";
  }
  return finish(std::move(r), name, format(g), params);
}

Report pack_arbs_report(const Digraph& d, NodeId root, int k, const std::vector<std::vector<EdgeId>>& seeds) {
  Report r;
  const auto out = pack_arborescences(d, root, k, seeds);
  if (const auto* p = std::get_if<ArborescencePacking>(&out)) {
    r.doc["result"] = "packed";
    r.doc["arborescences"] = edge_lists(p->arborescences);
    r.summary = plural(k, "arc-disjoint spanning arborescence") + " found";
  } else {
    const auto& s = std::get<DeficientSet>(out);
    r.doc["result"] = "cut";
    r.doc["nodes"] = sorted(s.nodes);
    r.doc["value"] = s.value;
    r.doc["required"] = s.required;
    r.exit_code = kExitFails;
    r.summary = "node set entered by " + plural(s.value, "arc") + ", fewer than " + std::to_string(s.required);
  }
  Json params = {{"k", k}, {"root", root}};
  if (!seeds.empty()) params["seeds"] = seeds;
  return finish(std::move(r), "pack-arbs", format(d), params);
}

Report certify_kec_report(const Graph& g, int k, NodeId root) {
  Report r;
  const EdgeConnectivityCertificate c = certify_k_edge_connectivity(g, k, root);
  if (c.packing) {
    r.doc["result"] = "packed";
    r.doc["arborescences"] = edge_lists(c.packing->arborescences);
    r.summary = std::to_string(k) + "-edge-connected; arcs 2e and 2e+1 are the two directions of edge e";
  } else {
    r.doc["result"] = "cut";
    r.doc["nodes"] = sorted(c.cut->nodes);
    r.doc["value"] = c.cut->actual;
    r.doc["required"] = c.cut->required;
    r.exit_code = kExitFails;
    r.summary = "cut of size " + std::to_string(c.cut->actual);
  }
  return finish(std::move(r), "certify-kec", format(g), {{"k", k}, {"root", root}});
}

Report cover_arbs_report(const Digraph& d, NodeId root, int k) {
  Report r;
  const CoverCheck c = check_arborescence_cover(d, root, k);
  if (c.holds) {
    r.doc["result"] = "covered";
    r.summary = "arcs coverable by " + plural(k, "spanning arborescence");
  } else {
    r.doc["result"] = "infeasible";
    if (c.node) {
      r.doc["node"] = *c.node;
      r.summary = "node " + std::to_string(*c.node) + " has in-degree above " + std::to_string(k);
    } else {
      r.doc["nodes"] = sorted(c.nodes);
      r.summary = "set condition fails on a set of size " + std::to_string(c.nodes.size());
    }
    r.exit_code = kExitFails;
  }
  return finish(std::move(r), "cover-arbs", format(d), {{"k", k}, {"root", root}});
}

Report cover_branchings_report(const Digraph& d, int k) {
  Report r;
  const CoverCheck c = check_branching_cover(d, k);
  if (c.holds) {
    r.doc["result"] = "covered";
    r.summary = "arcs coverable by " + plural(k, "branching");
  } else if (c.node) {
    r.doc["result"] = "infeasible";
    r.doc["node"] = *c.node;
    r.exit_code = kExitFails;
    r.summary = "node " + std::to_string(*c.node) + " has in-degree above " + std::to_string(k);
  } else {
    const long induced = induced_count(d, c.nodes);
    r.doc = dense_json(std::move(r.doc), c.nodes, induced, static_cast<long>(k) * (static_cast<long>(c.nodes.size()) - 1));
    r.exit_code = kExitFails;
    r.summary = "node set spans too many arcs";
  }
  return finish(std::move(r), "cover-branchings", format(d), {{"k", k}});
}

Report check_mixed_report(const MixedGraph& m, NodeId root, int k) {
  Report r;
  const MixedPackingCheck c = check_mixed_arborescence_packing(m, root, k);
  if (c.holds) {
    r.doc["result"] = "packed";
    r.summary = plural(k, "mixed arborescence") + " can be packed";
  } else {
    r.doc["result"] = "deficient";
    r.doc["partition"] = blocks_json(*c.witness);
    r.exit_code = kExitFails;
    r.summary = "partition into " + std::to_string(c.witness->size()) + " blocks violates the condition";
  }
  return finish(std::move(r), "check-mixed", format(m), {{"k", k}, {"root", root}});
}

Report orient_report(const Graph& g, NodeId root, int k, int l) {
  Report r;
  auto arcs_json = [](const Digraph& d) {
    Json a = Json::array();
    for (const Arc& arc : d.arcs()) a.push_back({arc.tail, arc.head});
    return a;
  };
  if (l == 0) {
    const auto out = orient_rooted_k(g, root, k);
    if (const auto* d = std::get_if<Digraph>(&out)) {
      r.doc["result"] = "packed";
      r.doc["arcs"] = arcs_json(*d);
      r.summary = "rooted " + std::to_string(k) + "-arc-connected orientation found";
    } else {
      const auto& p = std::get<DeficientPartition>(out);
      r.doc["result"] = "deficient";
      r.doc["partition"] = blocks_json(p.partition);
      r.doc["deficit"] = p.deficit;
      r.exit_code = kExitFails;
      r.summary = "not " + std::to_string(k) + "-partition-connected";
    }
  } else {
    const KlOrientation o = check_orientation_kl(g, root, k, l);
    if (o.holds) {
      r.doc["result"] = "packed";
      if (o.orientation) r.doc["arcs"] = arcs_json(*o.orientation);
      r.summary = o.orientation ? "orientation found" : "orientation exists; construction skipped (instance too large)";
    } else {
      r.doc["result"] = "deficient";
      r.doc["partition"] = blocks_json(*o.witness);
      r.exit_code = kExitFails;
      r.summary = "partition into " + std::to_string(o.witness->size()) + " blocks has too few cross edges";
    }
  }
  return finish(std::move(r), "orient", format(g), {{"k", k}, {"l", l}, {"root", root}});
}

Report hyper_rank_report(const Hypergraph& h) {
  Report r;
  const HypergraphicRank hr = hypergraphic_rank(h);
  const HypergraphicMatroid m(h);
  std::vector<EdgeId> family;
  for (EdgeId e = 0; e < h.num_hyperedges(); ++e) {
    family.push_back(e);
    if (!m.is_independent(family)) family.pop_back();
  }
  r.doc["rank"] = hr.rank;
  r.doc["partition"] = blocks_json(hr.partition);
  const HyperforestOutcome forest = is_hyperforest(h, family);
  if (const auto* t = std::get_if<Trimming>(&forest)) {
    r.doc["forest"] = trimming_json(*t);
  }
  r.summary = "hypergraphic rank " + std::to_string(hr.rank);
  return finish(std::move(r), "hyper-rank", format(h), Json::object());
}

Report hyper_pack_report(const Hypergraph& h, int k) {
  Report r;
  const auto out = pack_hypertrees(h, k);
  if (const auto* p = std::get_if<HypertreePacking>(&out)) {
    r.doc["result"] = "packed";
    Json trees = Json::array();
    for (const auto& t : p->trees) trees.push_back(trimming_json(t));
    r.doc["trees"] = trees;
    r.summary = plural(k, "disjoint hypertree") + " found";
  } else {
    const auto& d = std::get<DeficientPartition>(out);
    r.doc["result"] = "deficient";
    r.doc["partition"] = blocks_json(d.partition);
    r.doc["deficit"] = d.deficit;
    r.exit_code = kExitFails;
    r.summary = "partition into " + std::to_string(d.partition.size()) + " blocks is crossed too rarely";
  }
  return finish(std::move(r), "hyper-pack", format(h), {{"k", k}});
}

Report hyper_cover_report(const Hypergraph& h, int k) {
  Report r;
  const auto out = cover_by_hyperforests(h, k);
  if (const auto* c = std::get_if<HyperforestCover>(&out)) {
    r.doc["result"] = "covered";
    Json forests = Json::array();
    for (const auto& t : c->forests) forests.push_back(trimming_json(t));
    r.doc["forests"] = forests;
    r.summary = "hyperedges split into " + plural(k, "hyperforest");
  } else {
    const auto& d = std::get<DenseSet>(out);
    r.doc = dense_json(std::move(r.doc), d.nodes, d.induced, d.bound);
    r.exit_code = kExitFails;
    r.summary = "node set spans too many hyperedges";
  }
  return finish(std::move(r), "hyper-cover", format(h), {{"k", k}});
}

Report hyper_orient_report(const Hypergraph& h, NodeId root, int k, int l) {
  Report r;
  if (l == 0) {
    const auto out = orient_hypergraph_rooted_k(h, root, k);
    if (const auto* d = std::get_if<Dypergraph>(&out)) {
      r.doc["result"] = "packed";
      Json heads = Json::array();
      for (const auto& e : d->dyperedges()) heads.push_back(e.head);
      r.doc["heads"] = heads;
      r.summary = "rooted " + std::to_string(k) + "-connected orientation found";
    } else {
      const auto& p = std::get<DeficientPartition>(out);
      r.doc["result"] = "deficient";
      r.doc["partition"] = blocks_json(p.partition);
      r.doc["deficit"] = p.deficit;
      r.exit_code = kExitFails;
      r.summary = "not " + std::to_string(k) + "-partition-connected";
    }
  } else {
    const HyperOrientationCheck c = check_hyper_orientation(h, root, k, l);
    if (c.holds) {
      r.doc["result"] = "packed";
      r.summary = "a suitable orientation exists";
    } else {
      r.doc["result"] = "deficient";
      r.doc["partition"] = blocks_json(*c.witness);
      r.doc["violated"] = std::string(1, c.violated);
      r.exit_code = kExitFails;
      r.summary = std::string("partition condition ") + c.violated + " fails";
    }
  }
  return finish(std::move(r), "hyper-orient", format(h), {{"k", k}, {"l", l}, {"root", root}});
}

Report check_dyper_report(const Dypergraph& d, NodeId root, int k) {
  Report r;
  const DypergraphCheck c = check_dypergraph_decomposition(d, root, k);
  if (c.holds) {
    r.doc["result"] = "packed";
    r.summary = "every set avoiding the root is entered at least " + plural(k, "time");
  } else {
    r.doc["result"] = "cut";
    r.doc["nodes"] = sorted(c.deficient);
    r.doc["value"] = c.value;
    r.doc["required"] = k;
    r.exit_code = kExitFails;
    r.summary = "node set entered by " + plural(c.value, "dyperedge");
  }
  return finish(std::move(r), "check-dyper", format(d), {{"k", k}, {"root", root}});
}

Report game_analyze_report(const GameConfig& config) {
  Report r;
  const GameAnalysis a = analyze(config);
  r.doc["analysis"] = to_json(a);
  r.summary = std::string(packcert::to_string(a.winner)) + " wins with optimal play";
  Json params = {{"variant", packcert::to_string(config.variant)}, {"first", packcert::to_string(config.first)}};
  if (config.variant == Variant::kSt) {
    params["s"] = config.s;
    params["t"] = config.t;
  }
  return finish(std::move(r), "game-analyze", format(config.graph), params);
}

}  // namespace packcert::io
