#include <doctest.h>

#include <sstream>

#include "eterdom/errors.hpp"
#include "eterdom/referee.hpp"

using namespace eterdom;

TEST_SUITE("referee") {
  TEST_CASE("legal and illegal transitions") {
    const GridDims d{3, 3};
    const Configuration before({{1, 1}});
    CHECK(validate_transition(before, Configuration({{1, 1}}), {0, 0}, d).has(ViolationCode::AttackUnserved));
    CHECK(validate_transition(before, Configuration({{0, 0}}), {0, 0}, d).has(ViolationCode::DominationLost));
    CHECK(validate_transition(before, Configuration({{1, 1}}), {1, 1}, d).legal());

    const GridDims wide{5, 1};
    const Configuration two({{1, 0}, {3, 0}});
    CHECK(validate_transition(two, Configuration({{0, 0}, {3, 0}}), {0, 0}, wide).legal());
    const auto far = validate_transition(two, Configuration({{1, 0}, {4, 0}}), {4, 0}, Rect{0, 0, 5, 1});
    CHECK(far.legal());
    const auto jump = validate_transition(Configuration({{0, 0}, {1, 0}}), Configuration({{1, 0}, {3, 0}}), {3, 0}, wide);
    CHECK(jump.has(ViolationCode::NotAdjacentMove));
    const auto lost = validate_transition(two, Configuration({{1, 0}}), {1, 0}, wide);
    CHECK(lost.has(ViolationCode::GuardCountChanged));
    CHECK_THROWS_AS(validate_transition(two, two, {5, 0}, wide), DomainError);
  }

  TEST_CASE("reported move lists") {
    const Configuration c({{0, 0}, {2, 0}});
    const auto ok = apply_reported(c, AttackResponse{{1, 0}, {}, {{{0, 0}, {1, 0}}}});
    CHECK(ok.violations.empty());
    CHECK(ok.after == Configuration({{1, 0}, {2, 0}}));
    const auto missing = apply_reported(c, AttackResponse{{1, 0}, {}, {{{5, 5}, {1, 0}}}});
    CHECK(std::any_of(missing.violations.begin(), missing.violations.end(),
                      [](const Violation& v) { return v.code == ViolationCode::SourceMissing; }));
    const auto collide = apply_reported(c, AttackResponse{{1, 0}, {}, {{{0, 0}, {1, 0}}, {{2, 0}, {1, 0}}}});
    CHECK(std::any_of(collide.violations.begin(), collide.violations.end(),
                      [](const Violation& v) { return v.code == ViolationCode::VertexCollision; }));
    for (auto code : {ViolationCode::NotAdjacentMove, ViolationCode::VertexCollision,
                      ViolationCode::AttackUnserved, ViolationCode::DominationLost,
                      ViolationCode::GuardCountChanged, ViolationCode::SourceMissing})
      CHECK(parse_violation_code(to_string(code)) == code);
  }

  TEST_CASE("greedy attacker") {
    CHECK(greedy_attack(Configuration({{0, 0}}), {9, 9}) == Vertex{0, 8});
    CHECK(greedy_attack(Configuration({{0, 0}, {8, 8}, {0, 8}, {8, 0}}), {9, 9}) == Vertex{0, 4});
    std::vector<Vertex> all;
    for (int y = 0; y < 3; ++y)
      for (int x = 0; x < 3; ++x) all.push_back({x, y});
    CHECK(greedy_attack(Configuration(all), {3, 3}) == Vertex{0, 0});
  }

  TEST_CASE("strategies") {
    for (const std::string& id : strategy_ids()) {
      auto s = make_strategy(id, {9, 9});
      CHECK(s->id() == id);
      CHECK(s->guards().size() == 31);
      const Json snap = s->snapshot();
      CHECK(snap["guards"].size() == snap["roles"].size());
    }
    CHECK_THROWS_AS(make_strategy("border", {10, 10}), DomainError);
    CHECK_THROWS_AS(make_strategy("nope", {9, 9}), DomainError);
    CHECK(make_strategy("composite", {10, 12})->guards().size() ==
          static_cast<std::size_t>(make_strategy("composite", {10, 12})->snapshot()["guards"].size()));
  }

  TEST_CASE("idle strategy is caught") {
    const auto t = simulate({9, 9}, "idle", AttackerSpec{AttackerKind::Scripted, 0, {{4, 4}, {1, 1}}}, 5);
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].verdict.has(ViolationCode::AttackUnserved));
    CHECK_FALSE(t.clean());
    CHECK(t.violation_count() >= 1);
  }

  TEST_CASE("transcripts round trip and replay") {
    for (AttackerKind kind : {AttackerKind::Random, AttackerKind::Greedy}) {
      const auto t = simulate({12, 10}, "composite", AttackerSpec{kind, 99, {}}, 150);
      CHECK(t.clean());
      CHECK(t.steps.size() == 150);
      const std::string text = transcript_jsonl(t);
      std::istringstream in(text);
      const GameTranscript back = read_transcript(in);
      CHECK(transcript_jsonl(back) == text);
      const ReplayReport r = replay(back);
      CHECK(r.identical);
      CHECK(r.steps_checked == 150);
      CHECK(transcript_jsonl(simulate({12, 10}, "composite", AttackerSpec{kind, 99, {}}, 150)) == text);
    }
  }

  TEST_CASE("tampered transcripts are noticed") {
    auto t = simulate({9, 9}, "border", AttackerSpec{AttackerKind::Random, 3, {}}, 20);
    t.steps[10].hash ^= 1;
    CHECK_FALSE(replay(t).identical);
  }

  TEST_CASE("scripted attacker stops when the script ends") {
    const auto t = simulate({9, 9}, "border", AttackerSpec{AttackerKind::Scripted, 0, {{1, 0}, {4, 4}}}, 10);
    CHECK(t.steps.size() == 2);
    CHECK(t.clean());
  }

  TEST_CASE("verdict json") {
    TransitionVerdict v{{{ViolationCode::DominationLost, "cell (0,0)"}}};
    CHECK(verdict_from_json(to_json_value(v)) == v);
    CHECK(to_json_value(TransitionVerdict{})["legal"] == true);
  }
}
