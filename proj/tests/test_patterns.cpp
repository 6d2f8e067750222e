#include <doctest.h>

#include <random>

#include "eterdom/patterns.hpp"
#include "fixtures.hpp"

using namespace eterdom;

namespace {

// Membership from the short generators of each family plus the full
// period lattice 7Z^2: D steps by (2,1) and (1,-3), D' by (1,3) and (2,-1).
bool member_by_enumeration(Phase phase, Vertex base, Vertex v, int range) {
  const Vertex u1 = phase == Phase::D ? Vertex{2, 1} : Vertex{1, 3};
  const Vertex u2 = phase == Phase::D ? Vertex{1, -3} : Vertex{2, -1};
  auto periodic = [](Vertex d) { return d.x % 7 == 0 && d.y % 7 == 0; };
  for (int k = -range; k <= range; ++k) {
    const Vertex d = v - base;
    if (periodic(d - Vertex{k * u1.x, k * u1.y}) || periodic(d - Vertex{k * u2.x, k * u2.y})) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("patterns") {
  TEST_CASE("membership examples") {
    const PatternSpec d{Phase::D, {0, 0}};
    CHECK(contains(d, {2, 1}));
    CHECK(contains(d, {-1, 3}));
    CHECK_FALSE(contains(d, {1, 0}));
    CHECK(contains(d, {7, 0}));
    CHECK_FALSE(member_by_enumeration(Phase::D, {0, 0}, {1, 0}, 10));
  }

  TEST_CASE("lattice membership matches the two-parameter families") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (Phase phase : {Phase::D, Phase::Dprime}) {
      for (int trial = 0; trial < 20; ++trial) {
        const Vertex base{coord(rng), coord(rng)};
        const PatternSpec spec{phase, base};
        for (int y = -6; y <= 6; ++y)
          for (int x = -6; x <= 6; ++x)
            CHECK(contains(spec, {x, y}) == member_by_enumeration(phase, base, {x, y}, 30));
      }
    }
  }

  TEST_CASE("drawn snapshots") {
    const Configuration d = window(PatternSpec{Phase::D, {0, 0}}, Rect{0, 0, 10, 10});
    CHECK(d.size() == 15);
    CHECK(d == Configuration(fixtures::kSnapshotD));
    const Configuration dp = window(PatternSpec{Phase::Dprime, {0, 0}}, Rect{0, 0, 10, 10});
    CHECK(dp.size() == 14);
    CHECK(dp == Configuration(fixtures::kSnapshotDprime));
    CHECK(window(PatternSpec{Phase::D, {3, 4}}, Rect{3, 4, 1, 1}) == Configuration({{3, 4}}));
  }

  TEST_CASE("density and domination") {
    for (Phase phase : {Phase::D, Phase::Dprime}) {
      for (const PatternSpec& spec : all_specs(phase)) {
        for (int y = 0; y < 7; ++y)
          for (int x = 0; x < 7; ++x) CHECK(window(spec, Rect{x, y, 7, 7}).size() == 7);
        CHECK(dominates_region(window(spec, Rect{-1, -1, 42, 42}).guards(), Rect{0, 0, 40, 40}));
      }
    }
  }

  TEST_CASE("shift invariance") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coord(-100, 100);
    for (Phase phase : {Phase::D, Phase::Dprime}) {
      const auto basis = lattice_basis(phase);
      for (int trial = 0; trial < 200; ++trial) {
        const Vertex base{coord(rng), coord(rng)}, v{coord(rng), coord(rng)}, delta{coord(rng), coord(rng)};
        const PatternSpec spec{phase, base};
        CHECK(contains(spec, v) == contains(PatternSpec{phase, base + delta}, v + delta));
        CHECK(contains(spec, v) == contains(spec, v + basis[0]));
        CHECK(contains(spec, v) == contains(spec, v + basis[1]));
      }
    }
  }

  TEST_CASE("horizontal neighbours of a member are covered twice") {
    for (Phase phase : {Phase::D, Phase::Dprime}) {
      const PatternSpec spec = spec_containing(phase, {0, 0});
      for (Vertex side : {Vertex{-1, 0}, Vertex{1, 0}}) {
        int cover = 0;
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx) cover += contains(spec, side + Vertex{dx, dy});
        CHECK(cover == 2);
      }
    }
  }

  TEST_CASE("identify round trips") {
    const Rect r{0, 0, 20, 20};
    const auto d = identify(window(PatternSpec{Phase::D, {0, 0}}, r), r);
    REQUIRE(d);
    CHECK(d->phase == Phase::D);
    CHECK(d->base == PatternSpec{Phase::D, {0, 0}}.canonical().base);

    std::mt19937 rng(29);
    std::uniform_int_distribution<int> coord(-30, 30);
    for (int trial = 0; trial < 100; ++trial) {
      const PatternSpec spec{trial % 2 ? Phase::D : Phase::Dprime, {coord(rng), coord(rng)}};
      const Rect w{coord(rng), coord(rng), 7 + static_cast<int>(rng() % 10), 7 + static_cast<int>(rng() % 10)};
      const auto got = identify(window(spec, w), w);
      REQUIRE(got);
      CHECK(*got == spec);
      CHECK(contains(*got, spec.base));
    }

    Configuration full = window(PatternSpec{Phase::Dprime, {3, 2}}, r);
    std::vector<Vertex> fewer(full.begin() + 1, full.end());
    CHECK_FALSE(identify(Configuration(fewer), r));
  }

  TEST_CASE("canonical base") {
    for (Phase phase : {Phase::D, Phase::Dprime}) {
      for (int r = 0; r < 7; ++r) {
        const PatternSpec s = spec_with_residue(phase, r);
        CHECK(s.base.y == 0);
        CHECK(s.base.x >= 0);
        CHECK(s.base.x < 7);
        CHECK(s.residue() == r);
      }
    }
    CHECK(to_string(Phase::Dprime) == "Dprime");
    CHECK(parse_phase("D") == Phase::D);
  }
}
