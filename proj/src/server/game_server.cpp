#include "packcert/server/game_server.hpp"

#include <httplib.h>

#include <map>
#include <mutex>
#include <optional>

#include "packcert/game.hpp"
#include "packcert/io/game_json.hpp"

namespace packcert::server {

using io::Json;

namespace {

struct Session {
  std::mutex mutex;
  GameState state;
  std::optional<Engine> engine;

  explicit Session(GameConfig config) : state(std::move(config)) {}
};

struct HttpError {
  int status;
  std::string message;
};

void send(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

Json parse_body(const httplib::Request& req) {
  try {
    return Json::parse(req.body);
  } catch (const Json::parse_error& e) {
    throw HttpError{422, std::string("malformed JSON: ") + e.what()};
  }
}

GameConfig config_from(const Json& body) {
  if (!body.is_object()) throw HttpError{422, "request body must be an object"};
  try {
    GameConfig c;
    if (!body.contains("graph")) throw InputError("missing 'graph'");
    c.graph = io::graph_from_json(body["graph"]);
    c.variant = io::variant_from_string(body.value("variant", "global"));
    c.first = io::side_from_string(body.value("first", "cut"));
    if (c.variant == Variant::kSt) {
      if (!body.contains("s") || !body.contains("t") || !body["s"].is_number_integer() ||
          !body["t"].is_number_integer()) {
        throw InputError("st variant needs integer 's' and 't'");
      }
      c.s = body["s"].get<int>();
      c.t = body["t"].get<int>();
    }
    validate(c);
    return c;
  } catch (const InputError& e) {
    throw HttpError{422, e.what()};
  } catch (const Json::exception& e) {
    throw HttpError{422, e.what()};
  }
}

// Lets the engine move while it is its turn.
std::optional<Move> engine_reply(Session& s) {
  if (!s.engine || s.state.finished() || s.state.to_move() != s.engine->side()) return std::nullopt;
  const EdgeId e = s.engine->choose(s.state);
  s.state.play(e);
  return Move{s.engine->side(), e};
}

Json state_json(const std::string& id, const Session& s) {
  Json j = io::to_json(s.state);
  Json out = {{"id", id}};
  for (const auto& [key, value] : j.items()) out[key] = value;
  out["engine_side"] = s.engine ? Json(packcert::to_string(s.engine->side())) : Json(nullptr);
  return out;
}

}  // namespace

struct GameServer::Impl {
  httplib::Server http;
  std::mutex registry_mutex;
  std::map<std::string, std::shared_ptr<Session>> sessions;
  long next_id = 1;

  std::shared_ptr<Session> find(const std::string& id) {
    std::lock_guard lock(registry_mutex);
    auto it = sessions.find(id);
    if (it == sessions.end()) throw HttpError{404, "unknown game '" + id + "'"};
    return it->second;
  }

  template <class Handler>
  httplib::Server::Handler wrap(Handler handler) {
    return [handler](const httplib::Request& req, httplib::Response& res) {
      try {
        handler(req, res);
      } catch (const HttpError& e) {
        send(res, e.status, {{"error", e.message}});
      } catch (const std::exception& e) {
        send(res, 500, {{"error", e.what()}});
      }
    };
  }

  void routes() {
    http.Post("/api/games", wrap([this](const httplib::Request& req, httplib::Response& res) {
      const Json body = parse_body(req);
      GameConfig config = config_from(body);
      auto session = std::make_shared<Session>(config);
      if (body.contains("engine_side") && !body["engine_side"].is_null()) {
        try {
          session->engine.emplace(io::side_from_string(body["engine_side"].get<std::string>()));
        } catch (const std::exception& e) {
          throw HttpError{422, e.what()};
        }
      }
      std::string id;
      {
        std::lock_guard lock(registry_mutex);
        id = "g" + std::to_string(next_id++);
        sessions[id] = session;
      }
      std::lock_guard lock(session->mutex);
      const GameAnalysis analysis = analyze(config);
      Json out = {{"id", id}, {"analysis", io::to_json(analysis)}};
      if (auto m = engine_reply(*session)) out["engine_move"] = io::to_json(*m);
      out["state"] = state_json(id, *session);
      send(res, 201, out);
    }));

    http.Get(R"(/api/games/([^/]+))", wrap([this](const httplib::Request& req, httplib::Response& res) {
      const std::string id = req.matches[1];
      auto session = find(id);
      std::lock_guard lock(session->mutex);
      send(res, 200, state_json(id, *session));
    }));

    http.Post(R"(/api/games/([^/]+)/moves)", wrap([this](const httplib::Request& req, httplib::Response& res) {
      const std::string id = req.matches[1];
      auto session = find(id);
      const Json body = parse_body(req);
      if (!body.is_object() || !body.contains("edge_id") || !body["edge_id"].is_number_integer()) {
        throw HttpError{422, "expected {\"edge_id\": <int>}"};
      }
      const int edge = body["edge_id"].get<int>();
      std::lock_guard lock(session->mutex);
      GameState& state = session->state;
      if (edge < 0 || edge >= state.graph().num_edges()) throw HttpError{422, "edge id out of range"};
      if (state.finished()) throw HttpError{409, "the game is over"};
      if (session->engine && state.to_move() == session->engine->side()) throw HttpError{409, "not your turn"};
      if (state.tag(edge) != Tag::kNone) throw HttpError{409, "edge already tagged"};
      const Move played{state.to_move(), edge};
      state.play(edge);
      Json out = {{"move", io::to_json(played)}};
      if (auto m = engine_reply(*session)) out["engine_move"] = io::to_json(*m);
      out["state"] = state_json(id, *session);
      send(res, 200, out);
    }));

    http.Get(R"(/api/games/([^/]+)/certificate)", wrap([this](const httplib::Request& req, httplib::Response& res) {
      const std::string id = req.matches[1];
      auto session = find(id);
      std::lock_guard lock(session->mutex);
      Json out = {{"id", id}, {"analysis", io::to_json(analyze_state(session->state))}};
      out["core"] = session->engine ? io::to_json(session->engine->core()) : Json(nullptr);
      send(res, 200, out);
    }));
  }
};

GameServer::GameServer(const std::string& static_dir) : impl_(std::make_unique<Impl>()) {
  impl_->routes();
  if (!static_dir.empty()) impl_->http.set_mount_point("/", static_dir);
}

GameServer::~GameServer() { stop(); }

bool GameServer::listen(const std::string& host, int port) { return impl_->http.listen(host, port); }

int GameServer::bind_any_port(const std::string& host) { return impl_->http.bind_to_any_port(host); }

bool GameServer::listen_after_bind() { return impl_->http.listen_after_bind(); }

void GameServer::stop() {
  if (impl_) impl_->http.stop();
}

bool GameServer::is_running() const { return impl_->http.is_running(); }

}  // namespace packcert::server
