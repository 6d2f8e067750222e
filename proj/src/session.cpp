#include "eterdom/session.hpp"

#include <httplib.h>

#include "eterdom/errors.hpp"

namespace eterdom {

namespace {

HttpReply error_reply(int status, const std::string& message) {
  return {status, Json{{"error", message}}};
}

Json parse_body(const std::string& body) {
  try {
    return Json::parse(body.empty() ? std::string("{}") : body);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("request body is not JSON: ") + e.what());
  }
}

}  // namespace

HttpReply SessionManager::create(const std::string& request_body) {
  try {
    const Json request = parse_body(request_body);
    const GridDims dims = request.at("dims").get<GridDims>();
    const std::string id = request.value("strategy", std::string("border"));
    auto session = std::make_shared<Session>();
    session->strategy = make_strategy(id, dims);
    session->guards = session->strategy->guards();
    const Json state = session->strategy->snapshot();
    std::string session_id;
    {
      std::lock_guard lock(mutex_);
      session_id = "s" + std::to_string(next_id_++);
      sessions_.emplace(session_id, std::move(session));
    }
    return {201, Json{{"session_id", session_id}, {"state", state}}};
  } catch (const DomainError& e) {
    return error_reply(400, e.what());
  } catch (const Json::exception& e) {
    return error_reply(400, e.what());
  }
}

std::shared_ptr<SessionManager::Session> SessionManager::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

HttpReply SessionManager::attack(const std::string& session_id, const std::string& request_body) {
  const auto session = find(session_id);
  if (!session) return error_reply(404, "no session '" + session_id + "'");
  Vertex target;
  try {
    target = parse_body(request_body).at("vertex").get<Vertex>();
  } catch (const DomainError& e) {
    return error_reply(400, e.what());
  } catch (const Json::exception& e) {
    return error_reply(400, e.what());
  }

  std::lock_guard lock(session->mutex);
  const GridDims dims = session->strategy->dims();
  if (!dims.contains(target))
    return error_reply(400, "attack " + to_string(target) + " outside " + to_string(dims));
  AttackResponse response;
  try {
    response = session->strategy->respond(target);
  } catch (const std::exception& e) {
    return error_reply(409, e.what());
  }
  MoveListCheck moved = apply_reported(session->guards, response);
  TransitionVerdict verdict = validate_transition(session->guards, moved.after, target, dims);
  verdict.violations.insert(verdict.violations.begin(), moved.violations.begin(), moved.violations.end());
  session->guards = session->strategy->guards();
  const int step = ++session->steps;
  return {200, Json{{"response", response},
                    {"state", session->strategy->snapshot()},
                    {"verdict", to_json_value(verdict)},
                    {"step", step}}};
}

HttpReply SessionManager::get(const std::string& session_id) const {
  const auto session = find(session_id);
  if (!session) return error_reply(404, "no session '" + session_id + "'");
  std::lock_guard lock(session->mutex);
  return {200, Json{{"session_id", session_id},
                    {"state", session->strategy->snapshot()},
                    {"steps", session->steps}}};
}

std::size_t SessionManager::session_count() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

void register_session_routes(httplib::Server& server, SessionManager& sessions) {
  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body.dump(), "application/json");
  };
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.Post("/session", [&sessions, send](const httplib::Request& req, httplib::Response& res) {
    send(res, sessions.create(req.body));
  });
  server.Post(R"(/session/([A-Za-z0-9]+)/attack)",
              [&sessions, send](const httplib::Request& req, httplib::Response& res) {
                send(res, sessions.attack(req.matches[1], req.body));
              });
  server.Get(R"(/session/([A-Za-z0-9]+))",
             [&sessions, send](const httplib::Request& req, httplib::Response& res) {
               send(res, sessions.get(req.matches[1]));
             });
}

SessionServer::SessionServer() : server_(std::make_unique<httplib::Server>()) {
  register_session_routes(*server_, sessions_);
}

SessionServer::~SessionServer() { stop(); }

int SessionServer::start(const std::string& host, int port) {
  const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw DomainError("cannot bind " + host + ":" + std::to_string(port));
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

void SessionServer::run(const std::string& host, int port) {
  if (!server_->listen(host, port)) throw DomainError("cannot listen on " + host + ":" + std::to_string(port));
}

void SessionServer::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace eterdom
