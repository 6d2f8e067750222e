#pragma once

// Maximum bipartite matching for the small compatibility graphs that show
// up everywhere in this project: guards before a move on the left, cells
// after the move on the right, an edge whenever a king step (or staying
// put) connects them.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eterdom/grid.hpp"

namespace eterdom {

/// Hopcroft-Karp. Left and right vertices are dense indices.
class BipartiteMatcher {
 public:
  BipartiteMatcher(int left_count, int right_count);

  void add_edge(int left, int right);
  /// Pre-assigns a pair before solving; ignored if either side is taken.
  /// Augmentation may still reroute seeded pairs.
  void seed(int left, int right);
  /// Returns the size of a maximum matching.
  int solve();

  int mate_of_left(int left) const { return mate_left_[left]; }
  int mate_of_right(int right) const { return mate_right_[right]; }
  int left_count() const { return static_cast<int>(adjacency_.size()); }

 private:
  bool bfs();
  bool dfs(int left);

  std::vector<std::vector<int>> adjacency_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<int> layer_;
};

using VertexPair = std::pair<Vertex, Vertex>;

/// A perfect matching from `before` onto `after` in which every pair is at
/// Chebyshev distance <= 1, or nullopt if none exists. `preferred` pairs are
/// seeded first so that, where possible, the result keeps them.
std::optional<std::vector<VertexPair>> king_matching(std::span<const Vertex> before,
                                                     std::span<const Vertex> after,
                                                     std::span<const VertexPair> preferred = {});

/// Existence-only variant of king_matching.
bool king_matching_exists(std::span<const Vertex> before, std::span<const Vertex> after);

}  // namespace eterdom
