#include <doctest.h>

#include <random>

#include "eterdom/border.hpp"
#include "eterdom/errors.hpp"
#include "eterdom/referee.hpp"
#include "fixtures.hpp"

using namespace eterdom;

namespace {

const SideFormations kAllCenter{Formation::Center, Formation::Center, Formation::Center,
                                Formation::Center};

BorderStep checked_step(const FiniteStrategyState& s, Vertex attack) {
  BorderStep step = respond(s, attack);
  const TransitionVerdict v = validate_transition(s.guards(), step.state.guards(), attack, s.dims);
  for (const auto& viol : v.violations) INFO(to_string(viol.code) << ": " << viol.detail);
  CHECK(v.legal());
  CHECK(apply(s.guards(), step.response) == step.state.guards());
  CHECK(check_state(step.state).empty());
  CHECK(border_safe_table().contains(step.state));
  return step;
}

}  // namespace

TEST_SUITE("border") {
  TEST_CASE("guard counts") {
    CHECK(guard_count({9, 9}) == 31);
    CHECK(guard_count({16, 16}) == 72);
    CHECK(guard_count({23, 23}) == 127);
    CHECK(guard_count({9, 16}) == 48);
    for (GridDims d : {GridDims{9, 9}, GridDims{16, 16}, GridDims{23, 23}, GridDims{9, 16}, GridDims{30, 9}}) {
      const FiniteStrategyState s = init_state(d);
      CHECK(static_cast<int>(s.guards().size()) == guard_count(d));
      CHECK(check_state(s).empty());
      CHECK(is_dominating(s.guards(), d));
    }
  }

  TEST_CASE("initial interior is the drawn one moved down a row") {
    const FiniteStrategyState s = init_state({9, 9});
    std::vector<Vertex> expected;
    for (Vertex v : fixtures::kNineByNineInterior) expected.push_back({v.x, v.y == 1 ? 7 : v.y - 1});
    CHECK(s.interior() == Configuration(expected));
    CHECK(s.interior_spec.phase == Phase::D);
    CHECK(s.interior_spec.residue() == 6);
    CHECK(s.formations == kAllCenter);
  }

  TEST_CASE("the drawn start loses") {
    FiniteStrategyState drawn = init_state({9, 9});
    drawn.interior_spec = spec_with_residue(Phase::D, 0);
    CHECK(drawn.interior() == Configuration(fixtures::kNineByNineInterior));
    CHECK(check_state(drawn).empty());
    CHECK_FALSE(border_safe_table().contains(drawn));
    CHECK_THROWS_AS(respond(drawn, {1, 1}), StrategyError);
  }

  TEST_CASE("safe table") {
    const SafeTable& t = border_safe_table();
    CHECK(t.count() == 594);
    CHECK(t.contains(init_state({9, 9})));
    CHECK(compute_safe_table({16, 16}) == t);
    CHECK(compute_safe_table({9, 16}) == t);
  }

  TEST_CASE("leaf attacks shift one guard") {
    const FiniteStrategyState s = init_state({9, 9});
    const Vertex leaf{1, 0};
    const auto loc = locate_on_border(s.dims, leaf);
    REQUIRE(loc);
    CHECK(loc->side == Side::Bottom);
    CHECK(loc->offset == 0);
    const BorderStep step = checked_step(s, leaf);
    CHECK(step.response.moves.size() == 1);
    CHECK(step.state.formations[static_cast<int>(Side::Bottom)] == Formation::LowLeaf);
    CHECK(step.state.interior_spec == s.interior_spec);

    const BorderStep high = checked_step(s, {7, 0});
    CHECK(high.state.formations[static_cast<int>(Side::Bottom)] == Formation::HighLeaf);

    const BorderStep back = checked_step(step.state, {6, 0});
    CHECK(back.state.formations[static_cast<int>(Side::Bottom)] == Formation::Center);
  }

  TEST_CASE("occupied attacks") {
    const FiniteStrategyState s = init_state({9, 9});
    CHECK(respond(s, {4, 0}).response.no_moves());
    CHECK(respond(s, {0, 0}).response.no_moves());
    CHECK(respond(s, {4, 1}).response.no_moves());
    const BorderStep low = checked_step(s, {1, 0});
    checked_step(low.state, {3, 0});
  }

  TEST_CASE("interior attacks switch phase") {
    const FiniteStrategyState s = init_state({9, 9});
    const BorderStep step = checked_step(s, {4, 4});
    CHECK(step.state.interior_spec.phase == Phase::Dprime);
    CHECK(contains(step.state.interior_spec, {4, 4}));
    const BorderStep again = checked_step(step.state, {2, 2});
    CHECK(again.state.interior_spec.phase == Phase::D);
  }

  TEST_CASE("random play stays safe") {
    for (GridDims d : {GridDims{9, 9}, GridDims{16, 9}}) {
      std::mt19937 rng(7);
      FiniteStrategyState s = init_state(d);
      for (int i = 0; i < 400; ++i) {
        const Vertex a{static_cast<int>(rng() % d.n), static_cast<int>(rng() % d.m)};
        s = checked_step(s, a).state;
      }
    }
  }

  TEST_CASE("every state answers every attack") {
    const GridDims d{9, 9};
    const SafeTable& t = border_safe_table();
    for (Phase phase : {Phase::D, Phase::Dprime}) {
      for (int r = 0; r < 7; ++r) {
        for (int f = 0; f < 81; ++f) {
          const SideFormations forms = formations_from_index(f);
          if (!t.contains(phase, r, forms)) continue;
          const FiniteStrategyState s{d, spec_with_residue(phase, r), forms};
          for (int y = 0; y < d.m; ++y)
            for (int x = 0; x < d.n; ++x) {
              const BorderStep step = respond(s, {x, y});
              CHECK(step.state.guards().contains({x, y}));
              CHECK(t.contains(step.state));
            }
        }
      }
    }
  }

  TEST_CASE("formation index round trip") {
    for (int i = 0; i < 81; ++i) CHECK(formation_index(formations_from_index(i)) == i);
    CHECK(formation_offsets(Formation::Center) == std::array<int, 5>{1, 2, 3, 4, 5});
  }

  TEST_CASE("unsupported inputs") {
    CHECK_THROWS_AS(init_state({10, 9}), DomainError);
    CHECK_THROWS_AS(init_state({2, 2}), DomainError);
    CHECK_THROWS_AS(respond(init_state({9, 9}), {9, 0}), DomainError);
  }
}
