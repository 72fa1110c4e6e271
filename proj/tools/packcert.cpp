// Command-line front end. Machine output (one JSON document, or an instance
// file for `gen`) goes to stdout, a one-line summary to stderr.
//
// Exit status: 0 holds / constructed, 2 fails with certificate, 1 usage or
// input error, 3 instance above an exponential checker's cap.
#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "packcert/io/commands.hpp"
#include "packcert/io/formats.hpp"
#include "packcert/io/game_json.hpp"
#include "packcert/server/game_server.hpp"
#include "packcert/testkit/generators.hpp"
#include "selftest.hpp"

using namespace packcert;

namespace {

int emit(const io::Report& r) {
  std::cout << r.doc.dump() << '\n';
  if (!r.summary.empty()) std::cerr << r.summary << '\n';
  return r.exit_code;
}

std::vector<std::vector<EdgeId>> read_seeds(const std::string& path) {
  // One line per arborescence: arc ids, or "-" for none.
  std::istringstream in(io::read_text(path));
  std::vector<std::vector<EdgeId>> seeds;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<EdgeId> arcs;
    std::string word;
    bool any = false;
    while (words >> word) {
      any = true;
      if (word == "-") continue;
      try {
        arcs.push_back(std::stoi(word));
      } catch (const std::exception&) {
        throw io::ParseError("seeds: bad arc id '" + word + "'");
      }
    }
    if (any) seeds.push_back(std::move(arcs));
  }
  return seeds;
}

GameConfig game_config(const std::string& file, const std::string& variant, const std::string& first, int s, int t) {
  GameConfig c;
  c.graph = io::parse_graph(io::read_text(file));
  c.variant = io::variant_from_string(variant);
  c.first = io::side_from_string(first);
  c.s = s;
  c.t = t;
  validate(c);
  return c;
}

Policy named_policy(const std::string& name, Side side, std::uint64_t seed) {
  if (name == "engine") return engine_policy(side);
  if (name == "lowest") return [](const GameState& s) { return s.legal_moves().front(); };
  if (name == "random") {
    auto rng = std::make_shared<std::mt19937_64>(seed + (side == Side::kShort ? 0 : 1));
    return [rng](const GameState& s) {
      const auto moves = s.legal_moves();
      return moves[(*rng)() % moves.size()];
    };
  }
  throw InputError("unknown policy '" + name + "' (engine|lowest|random)");
}

std::string header(std::uint64_t seed, const std::string& what, const std::string& script) {
  std::ostringstream out;
  out << "# seed: " << seed << "\n# prng: " << testkit::kPrngName << "\n# generator: " << what << "\n# script: "
      << (script.empty() ? "-" : script) << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified packing, covering, orientation and switching-game tools"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string file;
  int k = 0;
  int l = 0;
  int root = 0;

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", file, "instance file, - for stdin")->required(); };
  auto graph = [&] { return io::parse_graph(io::read_text(file)); };
  auto digraph = [&] { return io::parse_digraph(io::read_text(file)); };

  auto* pack = app.add_subcommand("pack-trees", "k edge-disjoint spanning trees or a deficient partition");
  with_file(pack);
  pack->add_option("-k", k)->required();
  pack->callback([&] { run = [&] { return emit(io::pack_trees_report(graph(), k)); }; });

  std::vector<int> caps;
  auto* decompose = app.add_subcommand("decompose-forests", "split the edges into k forests");
  with_file(decompose);
  decompose->add_option("-k", k)->required();
  decompose->add_option("--caps", caps, "upper bounds on forest sizes")->delimiter(',');
  decompose->callback([&] { run = [&] { return emit(io::decompose_forests_report(graph(), k, caps)); }; });

  auto* arb = app.add_subcommand("arboricity", "minimum number of covering forests");
  with_file(arb);
  arb->callback([&] { run = [&] { return emit(io::arboricity_report(graph())); }; });

  auto* deficiency = app.add_subcommand("deficiency", "edges missing for k-tree-connectivity");
  with_file(deficiency);
  deficiency->add_option("-k", k)->required();
  deficiency->callback([&] { run = [&] { return emit(io::deficiency_report(graph(), k)); }; });

  std::optional<long> budget;
  std::string mode = "star";
  auto* augment = app.add_subcommand("augment", "add fewest edges for k-tree-connectivity");
  with_file(augment);
  augment->add_option("-k", k)->required();
  augment->add_option("--budget", budget);
  augment->add_option("--mode", mode)->check(CLI::IsMember({"star", "parallel"}));
  augment->callback([&] {
    run = [&] {
      const AugmentMode m = mode == "star" ? AugmentMode::kStar : AugmentMode::kParallel;
      return emit(io::augment_report(graph(), k, m, budget));
    };
  });

  auto* pc = app.add_subcommand("check-pc", "(k,l)-partition-connectivity");
  with_file(pc);
  pc->add_option("-k", k)->required();
  pc->add_option("-l", l)->required();
  pc->callback([&] { run = [&] { return emit(io::check_pc_report(graph(), k, l)); }; });

  bool tight = false;
  bool laman = false;
  int body_bar = 0;
  auto* sparse = app.add_subcommand("check-sparse", "(k,l)-sparsity and its special cases");
  with_file(sparse);
  sparse->add_option("-k", k);
  sparse->add_option("-l", l);
  auto* tight_flag = sparse->add_flag("--tight", tight);
  auto* laman_flag = sparse->add_flag("--laman", laman);
  auto* body_opt = sparse->add_option("--body-bar", body_bar, "dimension d");
  tight_flag->excludes(laman_flag)->excludes(body_opt);
  laman_flag->excludes(body_opt);
  sparse->callback([&] {
    run = [&] {
      io::SparseMode m = io::SparseMode::kSparse;
      if (tight) m = io::SparseMode::kTight;
      if (laman) m = io::SparseMode::kLaman;
      if (body_bar > 0) m = io::SparseMode::kBodyBar;
      return emit(io::check_sparse_report(graph(), k, l, m, body_bar));
    };
  });

  std::string seeds_file;
  auto* arbs = app.add_subcommand("pack-arbs", "k arc-disjoint spanning arborescences or a deficient set");
  with_file(arbs);
  arbs->add_option("-k", k)->required();
  arbs->add_option("--root", root)->required();
  arbs->add_option("--seeds", seeds_file, "one line of arc ids per arborescence, - for none");
  arbs->callback([&] {
    run = [&] {
      const auto seeds = seeds_file.empty() ? std::vector<std::vector<EdgeId>>{} : read_seeds(seeds_file);
      return emit(io::pack_arbs_report(digraph(), root, k, seeds));
    };
  });

  auto* kec = app.add_subcommand("certify-kec", "k-edge-connectivity via arborescences of the doubled graph");
  with_file(kec);
  kec->add_option("-k", k)->required();
  kec->add_option("--root", root)->required();
  kec->callback([&] { run = [&] { return emit(io::certify_kec_report(graph(), k, root)); }; });

  auto* cover_arbs = app.add_subcommand("cover-arbs", "arcs coverable by k spanning arborescences");
  with_file(cover_arbs);
  cover_arbs->add_option("-k", k)->required();
  cover_arbs->add_option("--root", root)->required();
  cover_arbs->callback([&] { run = [&] { return emit(io::cover_arbs_report(digraph(), root, k)); }; });

  auto* cover_br = app.add_subcommand("cover-branchings", "arcs coverable by k branchings");
  with_file(cover_br);
  cover_br->add_option("-k", k)->required();
  cover_br->callback([&] { run = [&] { return emit(io::cover_branchings_report(digraph(), k)); }; });

  auto* mixed = app.add_subcommand("check-mixed", "k disjoint spanning mixed arborescences");
  with_file(mixed);
  mixed->add_option("-k", k)->required();
  mixed->add_option("--root", root)->required();
  mixed->callback([&] {
    run = [&] { return emit(io::check_mixed_report(io::parse_mixed(io::read_text(file)), root, k)); };
  });

  auto* orient = app.add_subcommand("orient", "rooted (k,l)-connected orientation");
  with_file(orient);
  orient->add_option("-k", k)->required();
  orient->add_option("-l", l);
  orient->add_option("--root", root)->required();
  orient->callback([&] { run = [&] { return emit(io::orient_report(graph(), root, k, l)); }; });

  auto* hyper = app.add_subcommand("hyper", "hypergraph rank, packing, covering and orientation");
  hyper->require_subcommand(1);
  auto hypergraph = [&] { return io::parse_hypergraph(io::read_text(file)); };
  auto* hrank = hyper->add_subcommand("rank", "hypergraphic matroid rank");
  with_file(hrank);
  hrank->callback([&] { run = [&] { return emit(io::hyper_rank_report(hypergraph())); }; });
  auto* hpack = hyper->add_subcommand("pack", "k disjoint hypertrees");
  with_file(hpack);
  hpack->add_option("-k", k)->required();
  hpack->callback([&] { run = [&] { return emit(io::hyper_pack_report(hypergraph(), k)); }; });
  auto* hcover = hyper->add_subcommand("cover", "k covering hyperforests");
  with_file(hcover);
  hcover->add_option("-k", k)->required();
  hcover->callback([&] { run = [&] { return emit(io::hyper_cover_report(hypergraph(), k)); }; });
  auto* horient = hyper->add_subcommand("orient", "rooted (k,l)-connected orientation");
  with_file(horient);
  horient->add_option("-k", k)->required();
  horient->add_option("-l", l);
  horient->add_option("--root", root)->required();
  horient->callback([&] { run = [&] { return emit(io::hyper_orient_report(hypergraph(), root, k, l)); }; });

  auto* dyper = app.add_subcommand("check-dyper", "every set avoiding the root entered k times");
  with_file(dyper);
  dyper->add_option("-k", k)->required();
  dyper->add_option("--root", root)->required();
  dyper->callback([&] {
    run = [&] { return emit(io::check_dyper_report(io::parse_dypergraph(io::read_text(file)), root, k)); };
  });

  auto* game = app.add_subcommand("game", "Shannon switching game");
  game->require_subcommand(1);
  std::string variant = "global";
  std::string first = "cut";
  int s = -1;
  int t = -1;
  auto game_options = [&](CLI::App* sub) {
    with_file(sub);
    sub->add_option("--variant", variant)->check(CLI::IsMember({"global", "st"}));
    sub->add_option("--first", first)->check(CLI::IsMember({"cut", "short"}));
    sub->add_option("-s", s);
    sub->add_option("-t", t);
  };
  auto* analyze_cmd = game->add_subcommand("analyze", "winner under optimal play with a certificate");
  game_options(analyze_cmd);
  analyze_cmd->callback([&] {
    run = [&] { return emit(io::game_analyze_report(game_config(file, variant, first, s, t))); };
  });
  std::string short_policy = "engine";
  std::string cut_policy = "engine";
  std::uint64_t seed = 1;
  auto* play = game->add_subcommand("play", "play a full game between two policies");
  game_options(play);
  play->add_option("--short", short_policy, "engine|lowest|random");
  play->add_option("--cut", cut_policy, "engine|lowest|random");
  play->add_option("--seed", seed);
  play->callback([&] {
    run = [&] {
      const GameConfig c = game_config(file, variant, first, s, t);
      const Transcript tr = play_out(c, named_policy(short_policy, Side::kShort, seed),
                                     named_policy(cut_policy, Side::kCut, seed));
      io::Json moves = io::Json::array();
      for (const Move& m : tr.moves) moves.push_back(io::to_json(m));
      io::Json doc = {{"winner", to_string(tr.winner)},
                      {"predicted", to_string(analyze(c).winner)},
                      {"moves", moves},
                      {"instance", io::format(c.graph)}};
      std::cout << doc.dump() << '\n';
      std::cerr << to_string(tr.winner) << " wins after " << tr.moves.size() << " moves\n";
      return io::kExitHolds;
    };
  });
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string static_dir;
  auto* serve = game->add_subcommand("serve", "HTTP session server");
  serve->add_option("--port", port);
  serve->add_option("--host", host);
  serve->add_option("--static", static_dir, "directory of UI assets");
  serve->callback([&] {
    run = [&] {
      server::GameServer srv(static_dir);
      std::cerr << "listening on http://" << host << ':' << port << '\n';
      return srv.listen(host, port) ? io::kExitHolds : io::kExitUsage;
    };
  });

  auto* gen = app.add_subcommand("gen", "random instances from constructive characterizations");
  gen->require_subcommand(1);
  int steps = 10;
  auto gen_options = [&](CLI::App* sub, bool with_l) {
    sub->add_option("--seed", seed);
    sub->add_option("--steps", steps);
    sub->add_option("-k", k)->required();
    if (with_l) sub->add_option("-l", l);
  };
  auto* gpinch = gen->add_subcommand("pinch", "2k-edge-connected graph");
  gen_options(gpinch, false);
  gpinch->callback([&] {
    run = [&] {
      const auto g = testkit::gen_pinch_2k(seed, steps, k);
      std::cout << header(seed, "pinch k=" + std::to_string(k), g.script) << io::format(g.graph);
      return io::kExitHolds;
    };
  });
  auto* gmader = gen->add_subcommand("mader", "rooted k-arc-connected digraph, root 0");
  gen_options(gmader, false);
  gmader->callback([&] {
    run = [&] {
      const auto d = testkit::gen_mader(seed, steps, k);
      std::cout << header(seed, "mader k=" + std::to_string(k), d.script) << "# root: " << d.root << '\n'
                << io::format(d.digraph);
      return io::kExitHolds;
    };
  });
  auto* gkl = gen->add_subcommand("kl-pinch", "(k,l)-partition-connected graph");
  gen_options(gkl, true);
  gkl->callback([&] {
    run = [&] {
      const auto g = testkit::gen_kl_pinch(seed, steps, k, l);
      std::cout << header(seed, "kl-pinch k=" + std::to_string(k) + " l=" + std::to_string(l), g.script)
                << io::format(g.graph);
      return io::kExitHolds;
    };
  });
  auto* gkv = gen->add_subcommand("kv", "rooted (k,l)-arc-connected digraph, root 0");
  gen_options(gkv, true);
  gkv->callback([&] {
    run = [&] {
      const auto d = testkit::gen_kv(seed, steps, k, l);
      std::cout << header(seed, "kv k=" + std::to_string(k) + " l=" + std::to_string(l), d.script)
                << "# root: " << d.root << '\n'
                << io::format(d.digraph);
      return io::kExitHolds;
    };
  });

  std::string verify_file;
  auto* selftest = app.add_subcommand("selftest", "run built-in examples, or recheck a certificate");
  selftest->add_option("--verify", verify_file, "JSON document to recheck, - for stdin");
  selftest->callback([&] {
    run = [&] {
      if (verify_file.empty()) return tools::run_selftest(std::cout, std::cerr);
      const auto doc = io::Json::parse(io::read_text(verify_file));
      const io::Verdict v = io::verify(doc);
      std::cout << io::Json{{"verified", v.ok}, {"witnessed", v.witnessed}, {"message", v.message}}.dump() << '\n';
      std::cerr << (v.ok ? "certificate verified" : "certificate rejected: " + v.message) << '\n';
      return v.ok ? io::kExitHolds : io::kExitFails;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : io::kExitUsage;
  }
  try {
    return run ? run() : io::kExitUsage;
  } catch (const InstanceTooLarge& e) {
    std::cerr << "instance too large: " << e.what() << '\n';
    return io::kExitTooLarge;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io::kExitUsage;
  } catch (const io::Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io::kExitUsage;
  }
}
