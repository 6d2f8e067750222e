#include "eterdom/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace eterdom {

namespace {
constexpr int kFree = -1;
constexpr int kInf = std::numeric_limits<int>::max();
}  // namespace

BipartiteMatcher::BipartiteMatcher(int left_count, int right_count)
    : adjacency_(left_count),
      mate_left_(left_count, kFree),
      mate_right_(right_count, kFree),
      layer_(left_count, 0) {}

void BipartiteMatcher::add_edge(int left, int right) { adjacency_[left].push_back(right); }

void BipartiteMatcher::seed(int left, int right) {
  if (mate_left_[left] != kFree || mate_right_[right] != kFree) return;
  mate_left_[left] = right;
  mate_right_[right] = left;
}

bool BipartiteMatcher::bfs() {
  std::queue<int> queue;
  bool found_free = false;
  for (int l = 0; l < left_count(); ++l) {
    if (mate_left_[l] == kFree) {
      layer_[l] = 0;
      queue.push(l);
    } else {
      layer_[l] = kInf;
    }
  }
  while (!queue.empty()) {
    const int l = queue.front();
    queue.pop();
    for (int r : adjacency_[l]) {
      const int next = mate_right_[r];
      if (next == kFree) {
        found_free = true;
      } else if (layer_[next] == kInf) {
        layer_[next] = layer_[l] + 1;
        queue.push(next);
      }
    }
  }
  return found_free;
}

bool BipartiteMatcher::dfs(int left) {
  for (int r : adjacency_[left]) {
    const int next = mate_right_[r];
    if (next == kFree || (layer_[next] == layer_[left] + 1 && dfs(next))) {
      mate_left_[left] = r;
      mate_right_[r] = left;
      return true;
    }
  }
  layer_[left] = kInf;
  return false;
}

int BipartiteMatcher::solve() {
  while (bfs()) {
    for (int l = 0; l < left_count(); ++l) {
      if (mate_left_[l] == kFree) dfs(l);
    }
  }
  return static_cast<int>(
      std::count_if(mate_left_.begin(), mate_left_.end(), [](int r) { return r != kFree; }));
}

namespace {

struct KingGraph {
  std::vector<Vertex> sorted_after;
  std::vector<int> after_index;  // position in the caller's `after` span
};

int find_index(const std::vector<Vertex>& sorted, Vertex v) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) return -1;
  return static_cast<int>(it - sorted.begin());
}

BipartiteMatcher build(std::span<const Vertex> before, std::span<const Vertex> after,
                       std::vector<Vertex>& sorted_after, std::vector<int>& original) {
  std::vector<int> order(after.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return after[a] < after[b]; });
  sorted_after.resize(after.size());
  original = order;
  for (std::size_t i = 0; i < order.size(); ++i) sorted_after[i] = after[order[i]];

  BipartiteMatcher matcher(static_cast<int>(before.size()), static_cast<int>(after.size()));
  for (std::size_t l = 0; l < before.size(); ++l) {
    const Vertex s = before[l];
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        const int r = find_index(sorted_after, {s.x + dx, s.y + dy});
        if (r >= 0) matcher.add_edge(static_cast<int>(l), r);
      }
    }
  }
  return matcher;
}

}  // namespace

std::optional<std::vector<VertexPair>> king_matching(std::span<const Vertex> before,
                                                     std::span<const Vertex> after,
                                                     std::span<const VertexPair> preferred) {
  if (before.size() != after.size()) return std::nullopt;
  std::vector<Vertex> sorted_after;
  std::vector<int> original;
  BipartiteMatcher matcher = build(before, after, sorted_after, original);

  if (!preferred.empty()) {
    std::vector<Vertex> sorted_before(before.begin(), before.end());
    std::vector<int> before_order(before.size());
    for (std::size_t i = 0; i < before.size(); ++i) before_order[i] = static_cast<int>(i);
    std::sort(before_order.begin(), before_order.end(),
              [&](int a, int b) { return before[a] < before[b]; });
    for (std::size_t i = 0; i < before_order.size(); ++i) sorted_before[i] = before[before_order[i]];
    for (const auto& [from, to] : preferred) {
      if (chebyshev_distance(from, to) > 1) continue;
      const int l = find_index(sorted_before, from);
      const int r = find_index(sorted_after, to);
      if (l >= 0 && r >= 0) matcher.seed(before_order[l], r);
    }
  }

  if (matcher.solve() != static_cast<int>(before.size())) return std::nullopt;
  std::vector<VertexPair> pairs;
  pairs.reserve(before.size());
  for (std::size_t l = 0; l < before.size(); ++l) {
    pairs.emplace_back(before[l], sorted_after[matcher.mate_of_left(static_cast<int>(l))]);
  }
  return pairs;
}

bool king_matching_exists(std::span<const Vertex> before, std::span<const Vertex> after) {
  if (before.size() != after.size()) return false;
  std::vector<Vertex> sorted_after;
  std::vector<int> original;
  BipartiteMatcher matcher = build(before, after, sorted_after, original);
  return matcher.solve() == static_cast<int>(before.size());
}

}  // namespace eterdom
