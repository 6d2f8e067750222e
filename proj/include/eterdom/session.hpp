#pragma once

// Interactive play over HTTP+JSON:
//
//   POST /session               {"dims": [n, m] | "NxM", "strategy": id}
//                               -> 201 {"session_id", "state"}
//   POST /session/{id}/attack   {"vertex": [x, y]}
//                               -> 200 {"response", "state", "verdict", "step"}
//   GET  /session/{id}          -> 200 {"session_id", "state", "steps"}
//
// Errors come back as {"error": message} with 400 (bad request or
// precondition), 404 (unknown session) or 409 (strategy failure).
// Attacks on one session are processed one at a time.

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "eterdom/json_io.hpp"
#include "eterdom/referee.hpp"

namespace httplib {
class Server;
}

namespace eterdom {

struct HttpReply {
  int status = 200;
  Json body;
};

class SessionManager {
 public:
  HttpReply create(const std::string& request_body);
  HttpReply attack(const std::string& session_id, const std::string& request_body);
  HttpReply get(const std::string& session_id) const;
  std::size_t session_count() const;

 private:
  struct Session {
    std::mutex mutex;
    std::unique_ptr<Strategy> strategy;
    Configuration guards;
    int steps = 0;
  };
  std::shared_ptr<Session> find(const std::string& id) const;

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 1;
};

/// Binds the session routes onto a server.
void register_session_routes(httplib::Server& server, SessionManager& sessions);

/// Owns a listening server on a background thread.
class SessionServer {
 public:
  SessionServer();
  ~SessionServer();
  SessionServer(const SessionServer&) = delete;
  SessionServer& operator=(const SessionServer&) = delete;

  /// Binds host:port (port 0 picks a free one) and starts serving. Returns
  /// the bound port. Throws DomainError if binding fails.
  int start(const std::string& host, int port);
  /// Serves on the calling thread until stop() is called elsewhere.
  void run(const std::string& host, int port);
  void stop();

 private:
  SessionManager sessions_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace eterdom
