#include <doctest.h>

#include <random>
#include <set>

#include "eterdom/errors.hpp"
#include "eterdom/responder.hpp"

using namespace eterdom;

namespace {

struct Row {
  Vertex offset;
  std::vector<Vertex> anchors;
  std::vector<GuardMove> moves;
};

// D -> D' answers around a member at (0, 0), copied from the movement table.
const std::vector<Row> kTable = {
    {{0, -1},
     {{-1, 3}, {-1, -4}, {6, 3}, {6, -4}},
     {{{0, 0}, {0, -1}}, {{1, -3}, {2, -2}}, {{3, -2}, {4, -3}},
      {{5, -1}, {5, 0}}, {{4, 2}, {3, 1}}, {{2, 1}, {1, 2}}}},
    {{1, -1},
     {{-4, 5}, {-4, -2}, {3, 5}, {3, -2}},
     {{{0, 0}, {1, -1}}, {{2, 1}, {2, 2}}, {{1, 4}, {0, 3}},
      {{-1, 3}, {-2, 4}}, {{-3, 2}, {-3, 1}}, {{-2, -1}, {-1, 0}}}},
    {{1, 0},
     {{-3, 2}, {-3, -5}, {4, 2}, {4, -5}},
     {{{0, 0}, {-1, 1}}, {{2, 1}, {1, 0}}, {{3, -2}, {3, -1}},
      {{1, -3}, {2, -4}}, {{-1, -4}, {0, -3}}, {{-2, -1}, {-2, -2}}}},
    {{1, 1},
     {{-2, -1}, {-2, 6}, {5, -1}, {5, 6}},
     {{{0, 0}, {1, 1}}, {{2, 1}, {3, 0}}, {{4, 2}, {4, 3}},
      {{3, 5}, {2, 4}}, {{1, 4}, {0, 5}}, {{-1, 3}, {-1, 2}}}},
};

template <typename T>
std::set<T> as_set(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

std::set<GuardMove> shifted(const std::vector<GuardMove>& moves, Vertex by) {
  std::set<GuardMove> out;
  for (const auto& mv : moves) out.insert({mv.from + by, mv.to + by});
  return out;
}

std::set<Vertex> shifted(const std::vector<Vertex>& cells, Vertex by) {
  std::set<Vertex> out;
  for (Vertex v : cells) out.insert(v + by);
  return out;
}

}  // namespace

TEST_SUITE("responder") {
  TEST_CASE("tabulated answers reproduce the movement table") {
    const PatternSpec d{Phase::D, {0, 0}};
    for (const Row& row : kTable) {
      const AttackResponse r = respond_tabulated(d, row.offset);
      CHECK(r.attacked == row.offset);
      CHECK(as_set(r.anchors) == as_set(row.anchors));
      CHECK(as_set(r.moves) == as_set(row.moves));
    }
  }

  TEST_CASE("tabulated answers are translation invariant") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> coord(-200, 200);
    for (int trial = 0; trial < 50; ++trial) {
      const Vertex member = window(PatternSpec{Phase::D, {coord(rng), coord(rng)}},
                                   Rect{0, 0, 7, 7}).guards()[0];
      const PatternSpec spec{Phase::D, member};
      for (const Row& row : kTable) {
        const AttackResponse r = respond_tabulated(spec, member + row.offset);
        CHECK(as_set(r.moves) == shifted(row.moves, member));
        CHECK(as_set(r.anchors) == shifted(row.anchors, member));
      }
    }
  }

  TEST_CASE("embedded rows cover both phases") {
    CHECK(golden_tables_version() >= 1);
    const auto& rows = golden_rows();
    CHECK(rows.size() == 16);
    int from_table = 0;
    for (const auto& row : rows) {
      CHECK(row.anchors.size() == 4);
      CHECK(row.moves.size() == 6);
      from_table += row.origin == "table";
    }
    CHECK(from_table == 4);
  }

  TEST_CASE("matching responder agrees with the tables") {
    for (Phase phase : {Phase::D, Phase::Dprime}) {
      for (const PatternSpec& spec : all_specs(phase)) {
        for (int y = 0; y < 7; ++y) {
          for (int x = 0; x < 7; ++x) {
            const Vertex a{x, y};
            if (contains(spec, a)) continue;
            const AttackResponse t = respond_tabulated(spec, a);
            const AttackResponse m = respond_matching_block(spec, a);
            CHECK(as_set(t.moves) == as_set(m.moves));
            CHECK(as_set(t.anchors) == as_set(m.anchors));
          }
        }
      }
    }
  }

  TEST_CASE("answers land exactly on the opposite pattern") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> coord(-30, 30);
    for (Phase phase : {Phase::D, Phase::Dprime}) {
      for (int trial = 0; trial < 40; ++trial) {
        const PatternSpec spec{phase, {coord(rng), coord(rng)}};
        Vertex attack{coord(rng), coord(rng)};
        if (contains(spec, attack)) attack.x += 1;
        const AttackResponse block = respond_tabulated(spec, attack);
        const Rect scope = aligned_scope(block, 2);
        const Configuration after = apply(window(spec, scope), tile_response(block, scope));
        const PatternSpec target = response_target(spec, attack);
        CHECK(target.phase == opposite(phase));
        CHECK(contains(target, attack));
        CHECK(after == window(target, scope));
        CHECK(identify(after, scope) == target);
        for (const auto& mv : block.moves) CHECK(chebyshev_distance(mv.from, mv.to) <= 1);
      }
    }
  }

  TEST_CASE("horizontal attacks are defended diagonally") {
    for (Phase phase : {Phase::D, Phase::Dprime}) {
      const PatternSpec spec = spec_containing(phase, {0, 0});
      for (Vertex a : {Vertex{1, 0}, Vertex{-1, 0}}) {
        const AttackResponse r = respond_tabulated(spec, a);
        int defenders = 0;
        for (const auto& mv : r.moves) {
          if (mv.to != a) continue;
          ++defenders;
          CHECK(std::abs(mv.from.x - a.x) == 1);
          CHECK(std::abs(mv.from.y - a.y) == 1);
        }
        CHECK(defenders == 1);
      }
    }
  }

  TEST_CASE("occupied attacks need no moves") {
    const PatternSpec d{Phase::D, {0, 0}};
    const AttackResponse r = respond_tabulated(d, {2, 1});
    CHECK(r.no_moves());
    const Configuration c = window(d, Rect{0, 0, 10, 10});
    CHECK(apply(c, r) == c);
  }

  TEST_CASE("apply rejects malformed move lists") {
    const Configuration c({{0, 0}, {2, 0}});
    AttackResponse missing{{5, 5}, {}, {{{4, 4}, {5, 5}}}};
    CHECK_THROWS_AS(apply(c, missing), TransitionError);
    AttackResponse twice{{1, 1}, {}, {{{0, 0}, {1, 1}}, {{0, 0}, {1, 0}}}};
    CHECK_THROWS_AS(apply(c, twice), TransitionError);
    AttackResponse collide{{1, 1}, {}, {{{0, 0}, {1, 1}}, {{2, 0}, {1, 1}}}};
    CHECK_THROWS_AS(apply(c, collide), TransitionError);
    CHECK_THROWS_AS(apply(c, AttackResponse{{2, 0}, {}, {{{0, 0}, {2, 0}}}}), TransitionError);
    AttackResponse swap{{1, 0}, {}, {{{0, 0}, {1, 0}}}};
    CHECK(apply(c, swap) == Configuration({{1, 0}, {2, 0}}));
  }

  TEST_CASE("alternation returns to D after two attacks") {
    PatternSpec spec{Phase::D, {0, 0}};
    const Vertex first{0, -1};
    spec = response_target(spec, first);
    CHECK(spec.phase == Phase::Dprime);
    Vertex second{3, 3};
    if (contains(spec, second)) second.x += 1;
    spec = response_target(spec, second);
    CHECK(spec.phase == Phase::D);
    CHECK(contains(spec, second));
  }
}
