// Shannon switching game on the edges of a graph. Short tags edges to build
// a spanning tree (global) or an s-t path (st); Cut tags edges to destroy
// every such structure. A tagged position is analysed through its derived
// graph: Short edges contracted, Cut edges deleted.
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "packcert/graph.hpp"

namespace packcert {

enum class Side { kShort, kCut };
enum class Variant { kGlobal, kSt };
enum class Tag { kNone, kShort, kCut };

Side other(Side s);
std::string_view to_string(Side s);
std::string_view to_string(Variant v);

struct GameConfig {
  Graph graph;
  Variant variant = Variant::kGlobal;
  Side first = Side::kCut;
  NodeId s = -1;
  NodeId t = -1;
};

/// Throws InputError unless the graph is connected with at least three nodes
/// and, for the st variant, s and t are distinct valid nodes.
void validate(const GameConfig& config);

struct Move {
  Side side;
  EdgeId edge;
};

class GameState {
 public:
  explicit GameState(GameConfig config);

  const GameConfig& config() const { return config_; }
  const Graph& graph() const { return config_.graph; }
  Side to_move() const { return to_move_; }
  Tag tag(EdgeId e) const { return tags_.at(static_cast<std::size_t>(e)); }
  const std::vector<Tag>& tags() const { return tags_; }
  const std::vector<Move>& history() const { return history_; }

  std::vector<EdgeId> untagged() const;
  /// Untagged edges while the game is undecided, else nothing.
  std::vector<EdgeId> legal_moves() const;
  std::optional<Side> winner() const;
  bool finished() const { return winner().has_value(); }

  /// Tags the edge for the side to move. Throws std::logic_error when the
  /// game is over or the edge is already tagged.
  void play(EdgeId e);

 private:
  GameConfig config_;
  std::vector<Tag> tags_;
  Side to_move_;
  std::vector<Move> history_;
};

/// Short edges contracted, Cut edges deleted, loops dropped.
struct DerivedGraph {
  Graph graph;
  std::vector<NodeId> node_of;       // original node -> derived node
  std::vector<EdgeId> original_edge;  // derived edge -> original edge
};
DerivedGraph derive(const GameState& state);

struct GameAnalysis {
  Side winner = Side::kCut;
  /// Short: spanning trees of the derived graph (of its part induced by
  /// `region` in the st variant), as original edge ids. When Short moves
  /// they may share `first_move`.
  std::array<std::vector<EdgeId>, 2> trees;
  std::vector<NodeId> region;
  std::optional<EdgeId> first_move;
  /// Cut: a partition of `region` (of V in the global variant) into
  /// original node blocks with too few untagged crossing edges.
  std::vector<std::vector<NodeId>> blocks;
  long deficit = 0;
  /// False when the winner is known but no partition certificate is
  /// produced (st variant, Short to move, Cut winning).
  bool closed_form = true;
};

/// Winner with optimal play from the given position, with a certificate.
GameAnalysis analyze_state(const GameState& state);
GameAnalysis analyze(const GameConfig& config);

/// Certificate the engine acts on. `guaranteed` is false when the engine's
/// side is predicted to lose and it plays heuristically.
struct StrategyCore {
  Side side = Side::kShort;
  bool guaranteed = false;
  std::array<std::vector<EdgeId>, 2> trees;
  std::vector<NodeId> region;
  std::vector<std::vector<NodeId>> blocks;
  std::vector<Tag> seen;  // tags when the core was last brought up to date
  bool valid = false;
};

/// Deterministic strategy for one side. Copyable, so searches can branch on
/// engine state.
class Engine {
 public:
  explicit Engine(Side side) { core_.side = side; }

  Side side() const { return core_.side; }
  const StrategyCore& core() const { return core_; }

  /// Edge to tag; the caller plays it. Requires the engine's side to move.
  EdgeId choose(const GameState& state);

 private:
  EdgeId choose_short(const GameState& state);
  EdgeId choose_cut(const GameState& state);
  void rebuild(const GameState& state);

  StrategyCore core_;
};

using Policy = std::function<EdgeId(const GameState&)>;

Policy engine_policy(Side side);

struct Transcript {
  std::vector<Move> moves;
  Side winner = Side::kCut;
};

Transcript play_out(const GameConfig& config, const Policy& short_policy, const Policy& cut_policy);

}  // namespace packcert
