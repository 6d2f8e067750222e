#include <doctest.h>

#include <random>

#include "eterdom/matching.hpp"

using namespace eterdom;

namespace {

// Maximum matching size by DP over subsets of the right side.
int brute_matching(int left, int right, const std::vector<std::vector<int>>& adj) {
  std::vector<int> best(1 << right, -1);
  best[0] = 0;
  int answer = 0;
  for (int i = 0; i < left; ++i) {
    std::vector<int> next = best;
    for (int used = 0; used < (1 << right); ++used) {
      if (best[used] < 0) continue;
      for (int j : adj[i]) {
        if (used >> j & 1) continue;
        next[used | 1 << j] = std::max(next[used | 1 << j], best[used] + 1);
      }
    }
    best.swap(next);
  }
  for (int v : best) answer = std::max(answer, v);
  return answer;
}

}  // namespace

TEST_SUITE("matching") {
  TEST_CASE("Hopcroft-Karp agrees with exhaustive search") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
      const int left = 1 + static_cast<int>(rng() % 8);
      const int right = 1 + static_cast<int>(rng() % 8);
      std::vector<std::vector<int>> adj(left);
      BipartiteMatcher m(left, right);
      for (int i = 0; i < left; ++i)
        for (int j = 0; j < right; ++j)
          if (rng() % 3 == 0) {
            adj[i].push_back(j);
            m.add_edge(i, j);
          }
      const int size = m.solve();
      CHECK(size == brute_matching(left, right, adj));
      int paired = 0;
      for (int i = 0; i < left; ++i) {
        const int j = m.mate_of_left(i);
        if (j < 0) continue;
        ++paired;
        CHECK(m.mate_of_right(j) == i);
        CHECK(std::find(adj[i].begin(), adj[i].end(), j) != adj[i].end());
      }
      CHECK(paired == size);
    }
  }

  TEST_CASE("king matching pairs are one step apart") {
    const std::vector<Vertex> before{{0, 0}, {2, 0}, {4, 0}};
    const std::vector<Vertex> after{{1, 1}, {3, 1}, {4, 0}};
    const auto m = king_matching(before, after);
    REQUIRE(m);
    CHECK(m->size() == 3);
    for (const auto& [from, to] : *m) CHECK(chebyshev_distance(from, to) <= 1);
    CHECK_FALSE(king_matching_exists(before, std::vector<Vertex>{{1, 1}, {3, 1}, {6, 0}}));
  }

  TEST_CASE("preferred pairs are kept when possible") {
    const std::vector<Vertex> before{{0, 0}, {1, 0}};
    const std::vector<Vertex> after{{0, 0}, {1, 0}};
    const std::vector<VertexPair> swap{{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}};
    const auto m = king_matching(before, after, swap);
    REQUIRE(m);
    for (const auto& [from, to] : *m) CHECK(from != to);
  }
}
