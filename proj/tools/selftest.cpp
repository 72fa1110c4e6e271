#include "selftest.hpp"

#include <functional>
#include <string>
#include <vector>

#include "packcert/io/commands.hpp"
#include "packcert/io/formats.hpp"

namespace packcert::tools {

namespace {

struct Example {
  std::string name;
  std::function<io::Report()> run;
  int exit_code;
  std::function<bool(const io::Json&)> expect;
};

Graph triangle() { return io::parse_graph("graph 3 3\n0 1\n1 2\n0 2\n"); }
Graph k4() { return io::parse_graph("graph 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"); }
Graph c4() { return io::parse_graph("graph 4 4\n0 1\n1 2\n2 3\n0 3\n"); }

}  // namespace

int run_selftest(std::ostream& out, std::ostream& log) {
  const std::vector<Example> examples = {
      {"triangle has no two disjoint spanning trees", [] { return io::pack_trees_report(triangle(), 2); }, 2,
       [](const io::Json& d) {
         return d["result"] == "deficient" && d["deficit"] == 1 && d["partition"] == io::Json::parse("[[0],[1],[2]]");
       }},
      {"K4 packs two spanning trees", [] { return io::pack_trees_report(k4(), 2); }, 0,
       [](const io::Json& d) { return d["result"] == "packed"; }},
      {"zero trees always pack", [] { return io::pack_trees_report(triangle(), 0); }, 0,
       [](const io::Json& d) { return d["trees"].empty(); }},
      {"arboricity of K4 is 2", [] { return io::arboricity_report(k4()); }, 0,
       [](const io::Json& d) { return d["arboricity"] == 2; }},
      {"K4 splits into two forests", [] { return io::decompose_forests_report(k4(), 2); }, 0,
       [](const io::Json& d) { return d["result"] == "covered"; }},
      {"triangle is Laman-sparse", [] { return io::check_sparse_report(triangle(), 2, 1, io::SparseMode::kSparse); },
       0, [](const io::Json& d) { return d["result"] == "covered"; }},
      {"directed triangle is not rooted 2-connected",
       [] { return io::pack_arbs_report(io::parse_digraph("digraph 3 3\n0 1\n1 2\n2 0\n"), 0, 2); }, 2,
       [](const io::Json& d) { return d["result"] == "cut"; }},
      {"C4 is 2-edge-connected", [] { return io::certify_kec_report(c4(), 2, 0); }, 0,
       [](const io::Json& d) { return d["result"] == "packed"; }},
      {"single hyperedge on three nodes is not partition-connected",
       [] { return io::hyper_pack_report(io::parse_hypergraph("hypergraph 3 1\n3 0 1 2\n"), 1); }, 2,
       [](const io::Json& d) { return d["result"] == "deficient"; }},
      {"two copies of a 3-hyperedge pack a hypertree",
       [] { return io::hyper_pack_report(io::parse_hypergraph("hypergraph 3 2\n3 0 1 2\n3 0 1 2\n"), 1); }, 0,
       [](const io::Json& d) { return d["result"] == "packed"; }},
      {"triangle, Cut first: Cut wins",
       [] { return io::game_analyze_report(GameConfig{triangle(), Variant::kGlobal, Side::kCut}); }, 0,
       [](const io::Json& d) { return d["analysis"]["winner"] == "cut"; }},
      {"triangle, Short first: Short wins",
       [] { return io::game_analyze_report(GameConfig{triangle(), Variant::kGlobal, Side::kShort}); }, 0,
       [](const io::Json& d) { return d["analysis"]["winner"] == "short"; }},
      {"K4, Cut first: Short wins",
       [] { return io::game_analyze_report(GameConfig{k4(), Variant::kGlobal, Side::kCut}); }, 0,
       [](const io::Json& d) { return d["analysis"]["winner"] == "short"; }},
  };
  io::Json failed = io::Json::array();
  for (const auto& ex : examples) {
    std::string problem;
    try {
      const io::Report r = ex.run();
      const io::Verdict v = io::verify(r.doc);
      if (r.exit_code != ex.exit_code) {
        problem = "exit code " + std::to_string(r.exit_code);
      } else if (!ex.expect(r.doc)) {
        problem = "unexpected document";
      } else if (!v.ok) {
        problem = "verification failed: " + v.message;
      }
    } catch (const std::exception& e) {
      problem = e.what();
    }
    log << (problem.empty() ? "ok    " : "FAIL  ") << ex.name << (problem.empty() ? "" : ": " + problem) << '\n';
    if (!problem.empty()) failed.push_back({{"example", ex.name}, {"problem", problem}});
  }
  out << io::Json{{"examples", examples.size()}, {"failed", failed}}.dump() << '\n';
  return failed.empty() ? io::kExitHolds : io::kExitFails;
}

}  // namespace packcert::tools
