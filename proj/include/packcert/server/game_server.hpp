// HTTP session server for the switching game.
//
//   POST /api/games                 {graph, variant, first, engine_side, s?, t?}
//   GET  /api/games/{id}            state and legal moves
//   POST /api/games/{id}/moves      {edge_id}; the engine replies when it is its turn
//   GET  /api/games/{id}/certificate
//
// 404 unknown id, 409 wrong turn or tagged edge, 422 malformed request.
#pragma once

#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace packcert::server {

class GameServer {
 public:
  /// Serves files from `static_dir` under / when it is not empty.
  explicit GameServer(const std::string& static_dir = "");
  ~GameServer();
  GameServer(const GameServer&) = delete;
  GameServer& operator=(const GameServer&) = delete;

  /// Blocks until stop(). Returns false when the address cannot be bound.
  bool listen(const std::string& host, int port);
  /// Binds an ephemeral port and returns it, or -1; then call listen_after_bind.
  int bind_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  bool is_running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace packcert::server
