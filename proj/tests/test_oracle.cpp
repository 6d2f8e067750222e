#include <doctest.h>

#include <bit>
#include <functional>
#include <random>
#include <sstream>

#include "eterdom/errors.hpp"
#include "eterdom/oracle.hpp"

using namespace eterdom;

namespace {

// Every configuration reachable from `from` by moving each guard along at
// most one edge, built by explicit product over guard choices.
std::vector<Mask> successors_by_enumeration(const SmallGraph& g, Mask from) {
  std::vector<int> guards;
  for (int v = 0; v < g.size(); ++v)
    if (from >> v & 1U) guards.push_back(v);
  std::vector<Mask> out;
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t i, Mask acc) {
    if (i == guards.size()) {
      out.push_back(acc);
      return;
    }
    for (int w = 0; w < g.size(); ++w) {
      if (!(g.closed_neighborhood(guards[i]) >> w & 1U)) continue;
      if (acc >> w & 1U) continue;
      rec(i + 1, acc | Mask{1} << w);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SmallGraph random_graph(std::mt19937& rng, int n, double p) {
  SmallGraph g(n, "random");
  std::bernoulli_distribution edge(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("paths") {
    for (int n = 2; n <= 8; ++n) CHECK(eternal_domination_number(SmallGraph::path(n)) == (n + 1) / 2);
  }

  TEST_CASE("small known values") {
    CHECK(eternal_domination_number(SmallGraph::cycle(6)) == 2);
    CHECK(eternal_domination_number(SmallGraph::strong_grid(2, 2)) == 1);
    CHECK(domination_number(SmallGraph::path(7)) == 3);
  }

  TEST_CASE("successors agree with matching moves and defends") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
      const SmallGraph g = random_graph(rng, 7, 0.35);
      for (int k = 1; k <= 4; ++k) {
        const SafeSet safe = safe_set(g, k);
        for (Mask c : k_subsets(g.size(), k)) {
          const auto succ = successors_by_enumeration(g, c);
          for (Mask d : k_subsets(g.size(), k))
            CHECK(can_move(g, c, d) == std::binary_search(succ.begin(), succ.end(), d));
          for (int v = 0; v < g.size(); ++v) {
            bool expected = false;
            for (Mask d : succ) expected |= (d >> v & 1U) && safe.contains(d);
            CHECK(defends(g, c, v, safe) == expected);
          }
        }
      }
    }
  }

  TEST_CASE("elimination orders agree") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
      const SmallGraph g = random_graph(rng, 8, 0.3);
      for (int k = 1; k <= 5; ++k) {
        const SafeSet a = safe_set(g, k, EliminationOrder::BulkSynchronous);
        const SafeSet b = safe_set(g, k, EliminationOrder::SequentialReverse);
        CHECK(a.configurations == b.configurations);
        for (Mask c : a.configurations) CHECK(dominates(g, c));
      }
    }
  }

  TEST_CASE("bounded below by domination and monotone under edges") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 3 + trial % 8;
      SmallGraph g = random_graph(rng, n, 0.3);
      const auto value = eternal_domination_number(g, n);
      REQUIRE(value);
      CHECK(*value >= domination_number(g));
      CHECK(*value <= n);
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u == v) v = (v + 1) % n;
      g.add_edge(u, v);
      CHECK(*eternal_domination_number(g, n) <= *value);
    }
  }

  TEST_CASE("vertex cap") {
    CHECK_THROWS_AS(safe_set(SmallGraph::strong_grid(5, 4), 5), ResourceError);
  }

  TEST_CASE("graph parsing") {
    std::istringstream in("# triangle plus tail\nvertices 4\n0 1\n1 2\n2 0\n2 3\n");
    const SmallGraph g = SmallGraph::from_edge_list(in);
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.adjacent(2, 3));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK(SmallGraph::parse("path:5").edge_count() == 4);
    CHECK(SmallGraph::parse("cycle:5").edge_count() == 5);
    CHECK(SmallGraph::parse("grid:3x2").edge_count() == 11);
    CHECK_THROWS_AS(SmallGraph::parse("tree:4"), DomainError);
    CHECK(k_subsets(5, 2).size() == 10);
    for (Mask m : k_subsets(6, 3)) CHECK(std::popcount(m) == 3);
  }
}
