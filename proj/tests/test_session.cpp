#include <doctest.h>

#include <httplib.h>

#include "eterdom/session.hpp"

using namespace eterdom;

TEST_SUITE("session") {
  TEST_CASE("session lifecycle") {
    SessionManager sessions;
    const HttpReply created = sessions.create(R"({"dims": [9, 9], "strategy": "border"})");
    REQUIRE(created.status == 201);
    const std::string id = created.body["session_id"];
    const Json& state = created.body["state"];
    CHECK(state["guards"].size() == 31);
    CHECK(state["roles"].size() == 31);
    int corners = 0;
    for (const auto& role : state["roles"]) corners += role == "corner";
    CHECK(corners == 4);

    const HttpReply leaf = sessions.attack(id, R"({"vertex": [1, 0]})");
    REQUIRE(leaf.status == 200);
    CHECK(leaf.body["response"]["moves"].size() == 1);
    CHECK(leaf.body["verdict"]["legal"] == true);
    CHECK(leaf.body["step"] == 1);
    CHECK(leaf.body["state"]["formations"]["bottom"] == "LowLeaf");

    const HttpReply got = sessions.get(id);
    CHECK(got.status == 200);
    CHECK(got.body["steps"] == 1);
    CHECK(got.body["state"] == leaf.body["state"]);
  }

  TEST_CASE("error replies") {
    SessionManager sessions;
    CHECK(sessions.create(R"({"dims": [8, 8], "strategy": "border"})").status == 400);
    CHECK(sessions.create(R"({"dims": "10x10", "strategy": "border"})").status == 400);
    CHECK(sessions.create("not json").status == 400);
    CHECK(sessions.attack("s99", R"({"vertex": [0, 0]})").status == 404);
    CHECK(sessions.get("s99").status == 404);
    const std::string id = sessions.create(R"({"dims": "12x10", "strategy": "composite"})").body["session_id"];
    CHECK(sessions.attack(id, R"({"vertex": [40, 0]})").status == 400);
    CHECK(sessions.attack(id, R"({"oops": 1})").status == 400);
    CHECK(sessions.session_count() == 1);
  }

  TEST_CASE("idle sessions report violations") {
    SessionManager sessions;
    const std::string id = sessions.create(R"({"dims": [9, 9], "strategy": "idle"})").body["session_id"];
    const HttpReply r = sessions.attack(id, R"({"vertex": [4, 4]})");
    REQUIRE(r.status == 200);
    CHECK(r.body["verdict"]["legal"] == false);
    CHECK(r.body["verdict"]["violations"][0]["code"] == "ATTACK_UNSERVED");
  }

  TEST_CASE("http round trip") {
    SessionServer server;
    const int port = server.start("127.0.0.1", 0);
    REQUIRE(port > 0);
    httplib::Client client("127.0.0.1", port);
    auto created = client.Post("/session", R"({"dims": [16, 9], "strategy": "border"})", "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    CHECK(created->get_header_value("Access-Control-Allow-Origin") == "*");
    const Json body = Json::parse(created->body);
    const std::string id = body["session_id"];
    auto attacked = client.Post("/session/" + id + "/attack", R"({"vertex": [5, 5]})", "application/json");
    REQUIRE(attacked);
    CHECK(attacked->status == 200);
    CHECK(Json::parse(attacked->body)["verdict"]["legal"] == true);
    auto fetched = client.Get("/session/" + id);
    REQUIRE(fetched);
    CHECK(Json::parse(fetched->body)["steps"] == 1);
    auto missing = client.Get("/session/nope");
    REQUIRE(missing);
    CHECK(missing->status == 404);
    server.stop();
  }
}
