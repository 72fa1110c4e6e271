// One function per CLI subcommand. Each returns the JSON document printed on
// stdout, the exit status and a one-line human summary. Every document
// embeds its input instance so `verify` can recheck it later.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "packcert/forest_pack.hpp"
#include "packcert/game.hpp"
#include "packcert/graph.hpp"
#include "packcert/hypergraph.hpp"

namespace packcert::io {

using Json = nlohmann::ordered_json;

inline constexpr int kExitHolds = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFails = 2;
inline constexpr int kExitTooLarge = 3;

struct Report {
  Json doc;
  int exit_code = kExitHolds;
  std::string summary;
};

Report pack_trees_report(const Graph& g, int k);
Report decompose_forests_report(const Graph& g, int k, const std::vector<int>& caps = {});
Report arboricity_report(const Graph& g);
Report deficiency_report(const Graph& g, int k);
Report augment_report(const Graph& g, int k, AugmentMode mode, std::optional<long> budget = std::nullopt);
Report check_pc_report(const Graph& g, int k, int l);

enum class SparseMode { kSparse, kTight, kLaman, kBodyBar };
Report check_sparse_report(const Graph& g, int k, int l, SparseMode mode, int dimension = 0);

Report pack_arbs_report(const Digraph& d, NodeId root, int k, const std::vector<std::vector<EdgeId>>& seeds = {});
Report certify_kec_report(const Graph& g, int k, NodeId root);
Report cover_arbs_report(const Digraph& d, NodeId root, int k);
Report cover_branchings_report(const Digraph& d, int k);
Report check_mixed_report(const MixedGraph& m, NodeId root, int k);
Report orient_report(const Graph& g, NodeId root, int k, int l);

Report hyper_rank_report(const Hypergraph& h);
Report hyper_pack_report(const Hypergraph& h, int k);
Report hyper_cover_report(const Hypergraph& h, int k);
Report hyper_orient_report(const Hypergraph& h, NodeId root, int k, int l);
Report check_dyper_report(const Dypergraph& d, NodeId root, int k);

Report game_analyze_report(const GameConfig& config);

/// Outcome of rechecking a document with counting functions only.
struct Verdict {
  bool ok = false;
  /// False when the document makes a claim that carries no witness.
  bool witnessed = true;
  std::string message;
};
Verdict verify(const Json& doc);

}  // namespace packcert::io
