#include <gtest/gtest.h>
#include <httplib.h>

#include <thread>

#include "packcert/io/game_json.hpp"
#include "packcert/server/game_server.hpp"

namespace packcert::server {
namespace {

using io::Json;

class ServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    port_ = server_.bind_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }

  void TearDown() override {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  httplib::Result post(const std::string& path, const std::string& body) {
    return client_->Post(path, body, "application/json");
  }

  // Creates a game and returns the 201 response body.
  Json create(const Json& body) {
    auto r = post("/api/games", body.dump());
    EXPECT_TRUE(r);
    EXPECT_EQ(r->status, 201) << r->body;
    return Json::parse(r->body);
  }

  static Json triangle() { return Json::parse(R"({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]})"); }
  static Json k4() {
    return Json::parse(R"({"n": 4, "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]})");
  }

  GameServer server_;
  int port_ = -1;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

TEST_F(ServerTest, CreateReturnsAnalysis) {
  const Json j = create({{"graph", triangle()}, {"variant", "global"}, {"first", "cut"}});
  EXPECT_EQ(j["id"], "g1");
  EXPECT_EQ(j["analysis"]["winner"], "cut");
  EXPECT_EQ(j["state"]["to_move"], "cut");
  EXPECT_FALSE(j.contains("engine_move"));
}

TEST_F(ServerTest, EngineMovesFirstWhenItStarts) {
  const Json j = create({{"graph", triangle()}, {"first", "cut"}, {"engine_side", "cut"}});
  ASSERT_TRUE(j.contains("engine_move"));
  EXPECT_EQ(j["engine_move"]["side"], "cut");
  EXPECT_EQ(j["state"]["to_move"], "short");
}

TEST_F(ServerTest, GetStateAndUnknownGame) {
  const Json j = create({{"graph", k4()}});
  auto r = client_->Get("/api/games/" + j["id"].get<std::string>());
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 200);
  const Json state = Json::parse(r->body);
  EXPECT_EQ(state["legal_moves"].size(), 6u);
  EXPECT_TRUE(state["engine_side"].is_null());
  auto missing = client_->Get("/api/games/g999");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  auto missing_move = post("/api/games/g999/moves", R"({"edge_id": 0})");
  ASSERT_TRUE(missing_move);
  EXPECT_EQ(missing_move->status, 404);
}

TEST_F(ServerTest, MovesAndEngineReplies) {
  const Json j = create({{"graph", k4()}, {"first", "cut"}, {"engine_side", "short"}});
  const std::string moves = "/api/games/" + j["id"].get<std::string>() + "/moves";
  auto r = post(moves, R"({"edge_id": 0})");
  ASSERT_TRUE(r);
  ASSERT_EQ(r->status, 200) << r->body;
  const Json body = Json::parse(r->body);
  EXPECT_EQ(body["move"]["edge"], 0);
  ASSERT_TRUE(body.contains("engine_move"));
  EXPECT_EQ(body["engine_move"]["side"], "short");
  EXPECT_EQ(body["state"]["to_move"], "cut");

  auto again = post(moves, R"({"edge_id": 0})");
  ASSERT_TRUE(again);
  EXPECT_EQ(again->status, 409);
}

TEST_F(ServerTest, MoveAfterGameOverIsConflict) {
  const Json j = create({{"graph", triangle()}, {"first", "cut"}});
  const std::string moves = "/api/games/" + j["id"].get<std::string>() + "/moves";
  ASSERT_EQ(post(moves, R"({"edge_id": 0})")->status, 200);
  ASSERT_EQ(post(moves, R"({"edge_id": 1})")->status, 200);
  ASSERT_EQ(post(moves, R"({"edge_id": 2})")->status, 200);
  auto over = client_->Get("/api/games/" + j["id"].get<std::string>());
  EXPECT_EQ(Json::parse(over->body)["winner"], "cut");
  auto r = post(moves, R"({"edge_id": 1})");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 409);
}

TEST_F(ServerTest, MalformedRequests) {
  EXPECT_EQ(post("/api/games", "{not json")->status, 422);
  EXPECT_EQ(post("/api/games", R"({"graph": {"n": 2, "edges": [[0, 1]]}})")->status, 422);
  EXPECT_EQ(post("/api/games", R"({"graph": {"n": 3, "edges": [[0, 0]]}})")->status, 422);
  EXPECT_EQ(post("/api/games", Json{{"graph", triangle()}, {"variant", "st"}}.dump())->status, 422);
  EXPECT_EQ(post("/api/games", Json{{"graph", triangle()}, {"engine_side", "both"}}.dump())->status, 422);
  const Json j = create({{"graph", triangle()}});
  const std::string moves = "/api/games/" + j["id"].get<std::string>() + "/moves";
  EXPECT_EQ(post(moves, R"({"edge": 0})")->status, 422);
  EXPECT_EQ(post(moves, R"({"edge_id": 7})")->status, 422);
}

TEST_F(ServerTest, CertificateEndpoint) {
  const Json j = create({{"graph", k4()}, {"engine_side", "short"}});
  const std::string id = j["id"].get<std::string>();
  ASSERT_EQ(post("/api/games/" + id + "/moves", R"({"edge_id": 3})")->status, 200);
  auto r = client_->Get("/api/games/" + id + "/certificate");
  ASSERT_TRUE(r);
  ASSERT_EQ(r->status, 200);
  const Json c = Json::parse(r->body);
  EXPECT_EQ(c["analysis"]["winner"], "short");
  EXPECT_EQ(c["core"]["side"], "short");
}

TEST_F(ServerTest, StVariantGame) {
  const Json j = create({{"graph", triangle()}, {"variant", "st"}, {"s", 0}, {"t", 2}, {"first", "short"}});
  EXPECT_EQ(j["analysis"]["winner"], "short");
  EXPECT_EQ(j["state"]["s"], 0);
}

}  // namespace
}  // namespace packcert::server
