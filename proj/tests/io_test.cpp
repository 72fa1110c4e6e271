#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "packcert/io/commands.hpp"
#include "packcert/io/formats.hpp"
#include "packcert/io/game_json.hpp"
#include "packcert/testkit/enumerate.hpp"

namespace packcert::io {
namespace {

using fixtures::k4;
using fixtures::triangle;

TEST(Formats, GraphRoundTrip) {
  const std::string text = "graph 3 3\n0 1\n1 2\n0 2\n";
  EXPECT_EQ(format(parse_graph(text)), text);
  EXPECT_EQ(parse_graph(format(k4())), k4());
}

TEST(Formats, EveryKindRoundTrips) {
  const std::vector<std::string> texts = {
      "digraph 3 2\n0 1\n2 1\n",
      "hypergraph 4 2\n3 0 1 2\n2 2 3\n",
      "dypergraph 3 2\n3 2 0 1\n2 0 1\n",
      "mixed 3 1 2\n0 1\n1 2\n0 2\n",
  };
  for (const auto& t : texts) EXPECT_EQ(format(parse_instance(t)), t) << t;
}

TEST(Formats, CommentsAndWhitespace) {
  const Graph g = parse_graph("# triangle\ngraph 3 3  # header\n0 1\n\n1 2\n0   2\n");
  EXPECT_EQ(g, triangle());
}

TEST(Formats, ParseErrors) {
  EXPECT_THROW(parse_graph("graph 2 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("graph 2 1\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_graph("graph 2 1\n0 0\n"), ParseError);
  EXPECT_THROW(parse_graph("graph 2 1\n0 x\n"), ParseError);
  EXPECT_THROW(parse_graph("digraph 2 1\n0 1\n"), ParseError);
  EXPECT_THROW(parse_hypergraph("hypergraph 3 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_dypergraph("dypergraph 3 1\n2 0 0\n"), ParseError);
  EXPECT_THROW(parse_instance("forest 1 0\n"), ParseError);
}

TEST(Formats, EnumeratedGraphsRoundTrip) {
  for (const Graph& g : testkit::connected_graphs(5, 6, 2)) EXPECT_EQ(parse_graph(format(g)), g);
}

TEST(Reports, SpecExamples) {
  const Report tri = pack_trees_report(triangle(), 2);
  EXPECT_EQ(tri.exit_code, kExitFails);
  EXPECT_EQ(tri.doc["result"], "deficient");
  EXPECT_EQ(tri.doc["partition"], Json::parse("[[0],[1],[2]]"));
  EXPECT_EQ(tri.doc["deficit"], 1);

  const Report arb = arboricity_report(k4());
  EXPECT_EQ(arb.exit_code, kExitHolds);
  EXPECT_EQ(arb.doc["arboricity"], 2);

  const Report zero = pack_trees_report(triangle(), 0);
  EXPECT_EQ(zero.exit_code, kExitHolds);
  EXPECT_TRUE(zero.doc["trees"].empty());
}

TEST(Reports, KeysComeResultFirst) {
  const Report r = pack_trees_report(k4(), 2);
  EXPECT_EQ(r.doc.begin().key(), "result");
  EXPECT_EQ(r.doc["instance"], format(k4()));
}

TEST(Reports, TooLargeForExponentialChecker) {
  Digraph d(20);
  for (int v = 1; v < 20; ++v) d.add_arc(0, v);
  EXPECT_THROW(cover_arbs_report(d, 0, 1), InstanceTooLarge);
}

// Every report re-verifies; the verifier only counts.
std::vector<Report> sample_reports() {
  const Graph tri = triangle();
  const Graph g = k4();
  const Graph path = fixtures::path(4);
  const Digraph dt(3, {{0, 1}, {1, 2}, {2, 0}});
  const Digraph two(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 1}});
  const Hypergraph h1(3, {{0, 1, 2}});
  const Hypergraph h2(3, {{0, 1, 2}, {0, 1, 2}});
  Dypergraph dy(3);
  dy.add_dyperedge({0, 1, 2}, 1);
  return {
      pack_trees_report(g, 2),
      pack_trees_report(tri, 2),
      decompose_forests_report(tri, 1),
      decompose_forests_report(g, 2, {3, 3}),
      decompose_forests_report(g, 2, {2, 2}),
      arboricity_report(g),
      deficiency_report(path, 2),
      augment_report(tri, 2, AugmentMode::kStar),
      augment_report(tri, 2, AugmentMode::kParallel, 0),
      check_pc_report(g, 2, 1),
      check_pc_report(fixtures::repeated(fixtures::cycle(4), 2), 1, 1),
      check_sparse_report(tri, 2, 1, SparseMode::kLaman),
      check_sparse_report(g, 2, 1, SparseMode::kSparse),
      check_sparse_report(g, 2, 1, SparseMode::kTight),
      check_sparse_report(g, 0, 0, SparseMode::kBodyBar, 1),
      pack_arbs_report(dt, 0, 1),
      pack_arbs_report(dt, 0, 2),
      pack_arbs_report(two, 0, 2),
      certify_kec_report(fixtures::cycle(4), 2, 0),
      certify_kec_report(path, 2, 0),
      cover_arbs_report(Digraph(3, {{0, 1}, {0, 1}, {0, 1}}), 0, 2),
      cover_branchings_report(Digraph(2, {{0, 1}, {1, 0}}), 1),
      check_mixed_report(MixedGraph(Digraph(3, {{0, 1}}), Graph(3, {{1, 2}, {2, 0}})), 0, 1),
      check_mixed_report(MixedGraph(Digraph(3), tri), 0, 2),
      orient_report(g, 0, 2, 0),
      orient_report(g, 0, 2, 1),
      orient_report(tri, 0, 2, 0),
      hyper_rank_report(h1),
      hyper_pack_report(h1, 1),
      hyper_pack_report(h2, 1),
      hyper_cover_report(h2, 1),
      hyper_cover_report(Hypergraph(2, {{0, 1}, {0, 1}}), 1),
      hyper_orient_report(h2, 0, 1, 0),
      hyper_orient_report(h1, 0, 1, 0),
      check_dyper_report(dy, 0, 1),
      game_analyze_report(GameConfig{tri, Variant::kGlobal, Side::kCut}),
      game_analyze_report(GameConfig{g, Variant::kGlobal, Side::kCut}),
      game_analyze_report(GameConfig{tri, Variant::kGlobal, Side::kShort}),
      game_analyze_report(GameConfig{Graph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}}), Variant::kSt, Side::kCut, 0, 3}),
  };
}

TEST(Verify, EveryReportRechecks) {
  for (const Report& r : sample_reports()) {
    const Verdict v = verify(r.doc);
    EXPECT_TRUE(v.ok) << r.doc.dump() << "\n" << v.message;
  }
}

TEST(Verify, SurvivesSerialisation) {
  for (const Report& r : sample_reports()) EXPECT_TRUE(verify(Json::parse(r.doc.dump())).ok);
}

TEST(Verify, RejectsTamperedTrees) {
  Json doc = pack_trees_report(k4(), 2).doc;
  doc["trees"][1] = doc["trees"][0];
  EXPECT_FALSE(verify(doc).ok);
}

TEST(Verify, RejectsTamperedPartition) {
  Json doc = pack_trees_report(triangle(), 2).doc;
  doc["partition"] = Json::parse("[[0,1],[2]]");
  EXPECT_FALSE(verify(doc).ok);
  doc = pack_trees_report(triangle(), 2).doc;
  doc["deficit"] = 2;
  EXPECT_FALSE(verify(doc).ok);
}

TEST(Verify, RejectsWrongInstance) {
  Json doc = pack_trees_report(triangle(), 2).doc;
  doc["instance"] = format(k4());
  EXPECT_FALSE(verify(doc).ok);
}

TEST(Verify, RejectsBadArborescence) {
  Json doc = pack_arbs_report(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), 0, 1).doc;
  doc["arborescences"][0] = Json::parse("[0, 2]");
  EXPECT_FALSE(verify(doc).ok);
}

TEST(Verify, RejectsBadOrientation) {
  Json doc = orient_report(k4(), 0, 2, 0).doc;
  doc["arcs"][0] = Json::parse("[1, 0]");
  EXPECT_FALSE(verify(doc).ok);
}

TEST(Verify, RejectsBadGameCertificate) {
  Json doc = game_analyze_report(GameConfig{k4(), Variant::kGlobal, Side::kCut}).doc;
  doc["analysis"]["certificate"]["trees"][1] = doc["analysis"]["certificate"]["trees"][0];
  EXPECT_FALSE(verify(doc).ok);
}

TEST(Verify, RejectsUnknownCommand) { EXPECT_FALSE(verify(Json{{"command", "nope"}}).ok); }

TEST(GameJson, GraphConversion) {
  EXPECT_EQ(graph_from_json(to_json(k4())), k4());
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 0]]})")), InputError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"edges": []})")), InputError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0]]})")), InputError);
}

TEST(GameJson, StateView) {
  GameState s(GameConfig{triangle(), Variant::kGlobal, Side::kCut});
  s.play(0);
  const Json j = to_json(s);
  EXPECT_EQ(j["to_move"], "short");
  EXPECT_EQ(j["tags"], Json::parse(R"(["cut", "none", "none"])"));
  EXPECT_EQ(j["legal_moves"], Json::parse("[1, 2]"));
  EXPECT_TRUE(j["winner"].is_null());
  EXPECT_THROW(side_from_string("both"), InputError);
  EXPECT_THROW(variant_from_string("local"), InputError);
}

}  // namespace
}  // namespace packcert::io
