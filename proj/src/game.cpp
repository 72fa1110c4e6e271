#include "packcert/game.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <queue>
#include <stdexcept>

#include "packcert/forest_pack.hpp"

namespace packcert {

namespace {

DerivedGraph derive_from(const Graph& g, const std::vector<Tag>& tags) {
  const int n = g.num_nodes();
  UnionFind uf(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (tags[e] == Tag::kShort) uf.unite(g.edge(e).u, g.edge(e).v);
  }
  DerivedGraph d;
  d.node_of.assign(n, -1);
  std::vector<int> label(n, -1);
  int count = 0;
  for (NodeId v = 0; v < n; ++v) {
    const int r = uf.find(v);
    if (label[r] < 0) label[r] = count++;
    d.node_of[v] = label[r];
  }
  d.graph = Graph(count);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (tags[e] != Tag::kNone) continue;
    const NodeId a = d.node_of[g.edge(e).u];
    const NodeId b = d.node_of[g.edge(e).v];
    if (a == b) continue;
    d.graph.add_edge(a, b);
    d.original_edge.push_back(e);
  }
  return d;
}

std::vector<NodeId> lift(const DerivedGraph& d, std::span<const NodeId> derived_nodes) {
  std::vector<bool> in(d.graph.num_nodes(), false);
  for (NodeId x : derived_nodes) in[x] = true;
  std::vector<NodeId> out;
  for (NodeId v = 0; v < static_cast<int>(d.node_of.size()); ++v) {
    if (in[d.node_of[v]]) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<NodeId>> lift_blocks(const DerivedGraph& d, const Partition& p,
                                             std::span<const NodeId> to_derived = {}) {
  std::vector<std::vector<NodeId>> out;
  for (const auto& block : p.blocks()) {
    std::vector<NodeId> nodes;
    for (NodeId x : block) nodes.push_back(to_derived.empty() ? x : to_derived[x]);
    out.push_back(lift(d, nodes));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> to_original(const DerivedGraph& d, std::span<const EdgeId> derived_edges,
                                std::span<const EdgeId> to_derived = {}) {
  std::vector<EdgeId> out;
  for (EdgeId e : derived_edges) out.push_back(d.original_edge[to_derived.empty() ? e : to_derived[e]]);
  std::sort(out.begin(), out.end());
  return out;
}

long untagged_deficit(const Graph& g, const std::vector<Tag>& tags, const std::vector<std::vector<NodeId>>& blocks) {
  std::vector<int> block_of(g.num_nodes(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (NodeId v : blocks[b]) block_of[v] = static_cast<int>(b);
  }
  long cross = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int a = block_of[g.edge(e).u];
    const int b = block_of[g.edge(e).v];
    if (tags[e] == Tag::kNone && a >= 0 && b >= 0 && a != b) ++cross;
  }
  return 2L * (static_cast<long>(blocks.size()) - 1) - cross;
}

GameAnalysis short_already_won(const DerivedGraph& d, NodeId anchor) {
  GameAnalysis a;
  a.winner = Side::kShort;
  const NodeId x = d.node_of[anchor];
  a.region = lift(d, std::vector<NodeId>{x});
  return a;
}

GameAnalysis cut_already_won(const DerivedGraph& d) {
  GameAnalysis a;
  a.winner = Side::kCut;
  const Partition comp = components(d.graph);
  a.blocks = lift_blocks(d, comp);
  a.deficit = partition_deficit(d.graph, comp, 2);
  for (NodeId v = 0; v < static_cast<int>(d.node_of.size()); ++v) a.region.push_back(v);
  return a;
}

bool connected_in(const Graph& g, NodeId a, NodeId b) {
  UnionFind uf(g.num_nodes());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  return uf.find(a) == uf.find(b);
}

// Cut to move. Global: Short wins iff the derived graph holds two disjoint
// spanning trees. st: shrink to the brick block containing s until the
// current region is 2-tree-connected; Short wins iff t survives.
GameAnalysis analyze_cut_to_move(const GameState& state) {
  const DerivedGraph d = derive(state);
  const auto& cfg = state.config();
  if (cfg.variant == Variant::kGlobal) {
    if (d.graph.num_nodes() == 1) return short_already_won(d, 0);
    if (!is_connected(d.graph)) return cut_already_won(d);
    auto outcome = pack_spanning_trees(d.graph, 2);
    GameAnalysis a;
    for (NodeId v = 0; v < cfg.graph.num_nodes(); ++v) a.region.push_back(v);
    if (auto* p = std::get_if<TreePacking>(&outcome)) {
      a.winner = Side::kShort;
      for (int i = 0; i < 2; ++i) a.trees[i] = to_original(d, p->trees[i]);
    } else {
      auto& def = std::get<DeficientPartition>(outcome);
      a.winner = Side::kCut;
      a.blocks = lift_blocks(d, def.partition);
      a.deficit = def.deficit;
    }
    return a;
  }

  const NodeId ds = d.node_of[cfg.s];
  const NodeId dt = d.node_of[cfg.t];
  if (ds == dt) return short_already_won(d, cfg.s);
  if (!connected_in(d.graph, ds, dt)) return cut_already_won(d);
  std::vector<NodeId> region(d.graph.num_nodes());
  for (NodeId x = 0; x < d.graph.num_nodes(); ++x) region[x] = x;
  while (true) {
    const InducedSubgraph sub = induced_subgraph(d.graph, region);
    const auto local = [&](NodeId x) {
      return static_cast<NodeId>(std::find(sub.original_node.begin(), sub.original_node.end(), x) -
                                 sub.original_node.begin());
    };
    auto outcome = pack_spanning_trees(sub.graph, 2);
    if (auto* p = std::get_if<TreePacking>(&outcome)) {
      GameAnalysis a;
      a.winner = Side::kShort;
      a.region = lift(d, region);
      for (int i = 0; i < 2; ++i) a.trees[i] = to_original(d, p->trees[i], sub.original_edge);
      return a;
    }
    const Partition brick = brick_partition(sub.graph, 2);
    const auto& home = brick.block(brick.block_of(local(ds)));
    std::vector<NodeId> next;
    for (NodeId x : home) next.push_back(sub.original_node[x]);
    if (std::find(next.begin(), next.end(), dt) == next.end()) {
      GameAnalysis a;
      a.winner = Side::kCut;
      a.region = lift(d, region);
      a.blocks = lift_blocks(d, brick, sub.original_node);
      a.deficit = partition_deficit(sub.graph, brick, 2);
      return a;
    }
    region = std::move(next);
  }
}

// Short to move. Global: Short wins iff two spanning trees share at most one
// edge, i.e. the 2-deficiency is at most one. st: Short wins iff some move
// leads to a Short win with Cut to move.
GameAnalysis analyze_short_to_move(const GameState& state) {
  const DerivedGraph d = derive(state);
  const auto& cfg = state.config();
  if (cfg.variant == Variant::kGlobal) {
    if (d.graph.num_nodes() == 1) return short_already_won(d, 0);
    if (!is_connected(d.graph)) return cut_already_won(d);
    const int n = d.graph.num_nodes();
    const GraphicMatroid m(d.graph);
    const auto ms = copies(m, 2);
    const UnionResult u = matroid_union_max(ms);
    const long deficiency = 2L * (n - 1) - u.rank;
    GameAnalysis a;
    for (NodeId v = 0; v < cfg.graph.num_nodes(); ++v) a.region.push_back(v);
    if (deficiency >= 2) {
      const Deficiency def = partition_deficiency(d.graph, 2);
      a.winner = Side::kCut;
      a.blocks = lift_blocks(d, def.witness);
      a.deficit = def.value;
      return a;
    }
    a.winner = Side::kShort;
    auto classes = u.labeling.classes();
    if (deficiency == 1) {
      // One class is a spanning tree, the other a two-component forest that
      // some edge of the tree reconnects.
      const int full = static_cast<int>(classes[0].size()) == n - 1 ? 0 : 1;
      auto& forest = classes[1 - full];
      UnionFind uf(n);
      for (EdgeId e : forest) uf.unite(d.graph.edge(e).u, d.graph.edge(e).v);
      for (EdgeId e : classes[full]) {
        if (uf.find(d.graph.edge(e).u) != uf.find(d.graph.edge(e).v)) {
          forest.push_back(e);
          a.first_move = d.original_edge[e];
          break;
        }
      }
      if (!a.first_move) throw std::logic_error("analyze: no shared edge completes the second tree");
    }
    for (int i = 0; i < 2; ++i) a.trees[i] = to_original(d, classes[i]);
    return a;
  }

  const NodeId ds = d.node_of[cfg.s];
  const NodeId dt = d.node_of[cfg.t];
  if (ds == dt) return short_already_won(d, cfg.s);
  if (!connected_in(d.graph, ds, dt)) return cut_already_won(d);
  for (EdgeId f : state.untagged()) {
    GameState next = state;
    next.play(f);
    GameAnalysis after = analyze_cut_to_move(next);
    if (after.winner != Side::kShort) continue;
    after.first_move = f;
    for (auto& tree : after.trees) {
      tree.push_back(f);
      std::sort(tree.begin(), tree.end());
    }
    return after;
  }
  GameAnalysis a;
  a.winner = Side::kCut;
  a.closed_form = false;
  return a;
}

// Drops tagged and looping edges from each tree and keeps an acyclic prefix;
// returns whether both trees still span the region and are disjoint.
bool repair_trees(const Graph& g, const std::vector<Tag>& tags, StrategyCore& core) {
  const DerivedGraph d = derive_from(g, tags);
  std::vector<bool> in_region(d.graph.num_nodes(), false);
  int region_size = 0;
  for (NodeId v : core.region) {
    if (!in_region[d.node_of[v]]) {
      in_region[d.node_of[v]] = true;
      ++region_size;
    }
  }
  std::vector<int> owner(g.num_edges(), -1);
  bool ok = true;
  for (int i = 0; i < 2; ++i) {
    UnionFind uf(d.graph.num_nodes());
    std::vector<EdgeId> kept;
    for (EdgeId e : core.trees[i]) {
      if (tags[e] != Tag::kNone) continue;
      const NodeId a = d.node_of[g.edge(e).u];
      const NodeId b = d.node_of[g.edge(e).v];
      if (!in_region[a] || !in_region[b]) continue;
      if (uf.unite(a, b)) kept.push_back(e);
    }
    for (EdgeId e : kept) {
      if (owner[e] >= 0) ok = false;
      owner[e] = i;
    }
    if (static_cast<int>(kept.size()) != region_size - 1) ok = false;
    core.trees[i] = std::move(kept);
  }
  return ok;
}

std::vector<int> bfs_distances(const Graph& g, NodeId from) {
  std::vector<std::vector<NodeId>> adjacent(g.num_nodes());
  for (const Edge& e : g.edges()) {
    adjacent[e.u].push_back(e.v);
    adjacent[e.v].push_back(e.u);
  }
  std::vector<int> dist(g.num_nodes(), -1);
  std::queue<NodeId> queue;
  queue.push(from);
  dist[from] = 0;
  while (!queue.empty()) {
    const NodeId x = queue.front();
    queue.pop();
    for (NodeId y : adjacent[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

// Fallback for a side predicted to lose. st: lowest-id edge on a shortest
// s-t path of the derived graph. Global: lowest-id edge giving the best
// 2-deficiency after the move (smallest for Short, largest for Cut).
EdgeId heuristic_move(const GameState& state, Side side) {
  const auto& cfg = state.config();
  const DerivedGraph d = derive(state);
  const auto moves = state.legal_moves();
  if (moves.empty()) throw std::logic_error("engine: no untagged edge");
  if (cfg.variant == Variant::kSt) {
    const auto from_s = bfs_distances(d.graph, d.node_of[cfg.s]);
    const auto from_t = bfs_distances(d.graph, d.node_of[cfg.t]);
    const int dist = from_s[d.node_of[cfg.t]];
    if (dist > 0) {
      for (EdgeId de = 0; de < d.graph.num_edges(); ++de) {
        const Edge& e = d.graph.edge(de);
        const bool on_path = (from_s[e.u] >= 0 && from_t[e.v] >= 0 && from_s[e.u] + 1 + from_t[e.v] == dist) ||
                             (from_s[e.v] >= 0 && from_t[e.u] >= 0 && from_s[e.v] + 1 + from_t[e.u] == dist);
        if (on_path) {
          // derived edges are listed in increasing original id
          return d.original_edge[de];
        }
      }
    }
    return moves.front();
  }
  EdgeId best = moves.front();
  long best_score = std::numeric_limits<long>::min();
  for (EdgeId e : moves) {
    GameState next = state;
    next.play(e);
    const DerivedGraph nd = derive(next);
    long value = is_connected(nd.graph) ? partition_deficiency(nd.graph, 2).value : 1'000'000L;
    const long score = side == Side::kCut ? value : -value;
    if (score > best_score) {
      best_score = score;
      best = e;
    }
  }
  return best;
}

}  // namespace

Side other(Side s) { return s == Side::kShort ? Side::kCut : Side::kShort; }

std::string_view to_string(Side s) { return s == Side::kShort ? "short" : "cut"; }

std::string_view to_string(Variant v) { return v == Variant::kGlobal ? "global" : "st"; }

void validate(const GameConfig& config) {
  const int n = config.graph.num_nodes();
  if (n < 3) throw InputError("game: the graph needs at least three nodes");
  if (!is_connected(config.graph)) throw InputError("game: the graph must be connected");
  if (config.variant == Variant::kSt) {
    if (config.s < 0 || config.s >= n || config.t < 0 || config.t >= n) {
      throw InputError("game: st variant needs terminals s and t");
    }
    if (config.s == config.t) throw InputError("game: terminals must differ");
  }
}

GameState::GameState(GameConfig config) : config_(std::move(config)) {
  validate(config_);
  tags_.assign(config_.graph.num_edges(), Tag::kNone);
  to_move_ = config_.first;
}

std::vector<EdgeId> GameState::untagged() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<int>(tags_.size()); ++e) {
    if (tags_[e] == Tag::kNone) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> GameState::legal_moves() const {
  if (finished()) return {};
  return untagged();
}

std::optional<Side> GameState::winner() const {
  const Graph& g = config_.graph;
  const int n = g.num_nodes();
  UnionFind short_uf(n);
  UnionFind open_uf(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (tags_[e] == Tag::kShort) short_uf.unite(g.edge(e).u, g.edge(e).v);
    if (tags_[e] != Tag::kCut) open_uf.unite(g.edge(e).u, g.edge(e).v);
  }
  if (config_.variant == Variant::kGlobal) {
    if (short_uf.num_sets() == 1) return Side::kShort;
    if (open_uf.num_sets() > 1) return Side::kCut;
    return std::nullopt;
  }
  if (short_uf.find(config_.s) == short_uf.find(config_.t)) return Side::kShort;
  if (open_uf.find(config_.s) != open_uf.find(config_.t)) return Side::kCut;
  return std::nullopt;
}

void GameState::play(EdgeId e) {
  if (e < 0 || e >= static_cast<int>(tags_.size())) throw std::out_of_range("game: edge out of range");
  if (finished()) throw std::logic_error("game: the game is over");
  if (tags_[e] != Tag::kNone) throw std::logic_error("game: edge already tagged");
  tags_[e] = to_move_ == Side::kShort ? Tag::kShort : Tag::kCut;
  history_.push_back({to_move_, e});
  to_move_ = other(to_move_);
}

DerivedGraph derive(const GameState& state) { return derive_from(state.graph(), state.tags()); }

GameAnalysis analyze_state(const GameState& state) {
  return state.to_move() == Side::kCut ? analyze_cut_to_move(state) : analyze_short_to_move(state);
}

GameAnalysis analyze(const GameConfig& config) { return analyze_state(GameState(config)); }

void Engine::rebuild(const GameState& state) {
  const GameAnalysis a = analyze_state(state);
  const Side side = core_.side;
  core_ = StrategyCore{};
  core_.side = side;
  core_.guaranteed = a.winner == side;
  core_.trees = a.trees;
  core_.region = a.region;
  core_.blocks = a.blocks;
  core_.seen = state.tags();
  core_.valid = true;
}

EdgeId Engine::choose(const GameState& state) {
  if (state.finished()) throw std::logic_error("engine: the game is over");
  if (state.to_move() != core_.side) throw std::logic_error("engine: not the engine's turn");
  return core_.side == Side::kShort ? choose_short(state) : choose_cut(state);
}

EdgeId Engine::choose_short(const GameState& state) {
  const Graph& g = state.graph();
  const auto& tags = state.tags();
  std::optional<EdgeId> cut_move;
  bool in_sync = core_.valid && core_.guaranteed && core_.seen.size() == tags.size();
  if (in_sync) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (core_.seen[e] == tags[e]) continue;
      if (core_.seen[e] != Tag::kNone || tags[e] != Tag::kCut || cut_move) {
        in_sync = false;
        break;
      }
      cut_move = e;
    }
  }
  if (!in_sync) {
    rebuild(state);
    cut_move.reset();
  }
  if (!core_.guaranteed) return heuristic_move(state, Side::kShort);

  auto& [a, b] = core_.trees;
  std::optional<EdgeId> reply;
  // A shared edge is played first; contracting it leaves two disjoint trees.
  for (EdgeId e : a) {
    if (tags[e] == Tag::kNone && std::find(b.begin(), b.end(), e) != b.end()) {
      reply = e;
      break;
    }
  }
  if (!reply && cut_move) {
    const EdgeId cut = *cut_move;
    for (int i = 0; i < 2 && !reply; ++i) {
      const auto& hit = core_.trees[i];
      const auto& spare = core_.trees[1 - i];
      if (std::find(hit.begin(), hit.end(), cut) == hit.end()) continue;
      // Reconnect the two components of hit - e with an edge of the other
      // tree.
      const DerivedGraph d = derive(state);
      UnionFind uf(d.graph.num_nodes());
      for (EdgeId e : hit) {
        if (e != cut && tags[e] == Tag::kNone) uf.unite(d.node_of[g.edge(e).u], d.node_of[g.edge(e).v]);
      }
      for (EdgeId f : spare) {
        if (tags[f] == Tag::kNone && uf.find(d.node_of[g.edge(f).u]) != uf.find(d.node_of[g.edge(f).v])) {
          reply = f;
          break;
        }
      }
      if (!reply) {
        rebuild(state);
        if (!core_.guaranteed) return heuristic_move(state, Side::kShort);
        return choose_short(state);
      }
    }
  }
  if (!reply) {
    // Any edge will do; prefer one inside the region.
    const DerivedGraph d = derive(state);
    std::vector<bool> in_region(d.graph.num_nodes(), false);
    for (NodeId v : core_.region) in_region[d.node_of[v]] = true;
    const auto moves = state.legal_moves();
    for (EdgeId e : moves) {
      if (in_region[d.node_of[g.edge(e).u]] && in_region[d.node_of[g.edge(e).v]]) {
        reply = e;
        break;
      }
    }
    if (!reply) reply = moves.front();
  }
  core_.seen = tags;
  core_.seen[*reply] = Tag::kShort;
  core_.valid = repair_trees(g, core_.seen, core_);
  return *reply;
}

EdgeId Engine::choose_cut(const GameState& state) {
  const Graph& g = state.graph();
  const auto& tags = state.tags();
  if (state.config().variant == Variant::kSt) {
    rebuild(state);
    if (!core_.guaranteed) return heuristic_move(state, Side::kCut);
    // Prefer cross edges of the current certificate, then every other edge;
    // take the first move after which Cut still wins.
    std::vector<EdgeId> order;
    std::vector<bool> listed(g.num_edges(), false);
    std::vector<int> block_of(g.num_nodes(), -1);
    for (std::size_t i = 0; i < core_.blocks.size(); ++i) {
      for (NodeId v : core_.blocks[i]) block_of[v] = static_cast<int>(i);
    }
    for (EdgeId e : state.legal_moves()) {
      const int x = block_of[g.edge(e).u];
      const int y = block_of[g.edge(e).v];
      if (x >= 0 && y >= 0 && x != y) {
        order.push_back(e);
        listed[e] = true;
      }
    }
    for (EdgeId e : state.legal_moves()) {
      if (!listed[e]) order.push_back(e);
    }
    for (EdgeId e : order) {
      GameState next = state;
      next.play(e);
      if (next.winner() == Side::kCut || (!next.finished() && analyze_state(next).winner == Side::kCut)) {
        core_.seen = next.tags();
        return e;
      }
    }
    core_.guaranteed = false;
    return heuristic_move(state, Side::kCut);
  }

  bool in_sync = core_.valid && core_.guaranteed && core_.seen.size() == tags.size();
  if (in_sync) {
    for (EdgeId e = 0; e < g.num_edges() && in_sync; ++e) {
      if (core_.seen[e] == tags[e]) continue;
      if (core_.seen[e] != Tag::kNone || tags[e] != Tag::kShort) {
        in_sync = false;
        break;
      }
      // Short joined two blocks: merge them.
      auto& blocks = core_.blocks;
      auto find = [&](NodeId v) {
        return std::find_if(blocks.begin(), blocks.end(),
                            [&](const auto& b) { return std::binary_search(b.begin(), b.end(), v); });
      };
      auto x = find(g.edge(e).u);
      auto y = find(g.edge(e).v);
      if (x != y) {
        x->insert(x->end(), y->begin(), y->end());
        std::sort(x->begin(), x->end());
        blocks.erase(y);
      }
    }
    if (in_sync && untagged_deficit(g, tags, core_.blocks) < 1) in_sync = false;
  }
  if (!in_sync) rebuild(state);
  if (!core_.guaranteed) return heuristic_move(state, Side::kCut);

  std::vector<int> block_of(g.num_nodes(), -1);
  for (std::size_t i = 0; i < core_.blocks.size(); ++i) {
    for (NodeId v : core_.blocks[i]) block_of[v] = static_cast<int>(i);
  }
  for (EdgeId e : state.legal_moves()) {
    if (block_of[g.edge(e).u] != block_of[g.edge(e).v]) {
      core_.seen = tags;
      core_.seen[e] = Tag::kCut;
      return e;
    }
  }
  throw std::logic_error("engine: deficient partition has no untagged cross edge");
}

Policy engine_policy(Side side) {
  auto engine = std::make_shared<Engine>(side);
  return [engine](const GameState& state) { return engine->choose(state); };
}

Transcript play_out(const GameConfig& config, const Policy& short_policy, const Policy& cut_policy) {
  GameState state(config);
  while (!state.finished()) {
    const Policy& policy = state.to_move() == Side::kShort ? short_policy : cut_policy;
    state.play(policy(state));
  }
  return {state.history(), *state.winner()};
}

}  // namespace packcert
