#pragma once

// Exact eternal domination numbers (all-guards-move model) of small graphs.
//
// Configurations are bitmasks of occupied vertices. For a guard count k the
// safe set is the greatest set S of dominating k-configurations such that
// from every c in S each attacked vertex can be answered by a legal move
// into some member of S. The number is the least k with S non-empty.

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace eterdom {

using Mask = std::uint32_t;

class SmallGraph {
 public:
  static constexpr int kMaxVertices = 32;

  explicit SmallGraph(int vertices, std::string name = {});

  static SmallGraph path(int n);
  static SmallGraph cycle(int n);
  static SmallGraph strong_grid(int n, int m);
  /// "u v" per line, '#' comments, optional "vertices N" line; otherwise the
  /// vertex count is one more than the largest index.
  static SmallGraph from_edge_list(std::istream& in, std::string name = "edges");
  /// "path:N", "cycle:N", "grid:NxM", or "file:PATH".
  static SmallGraph parse(const std::string& spec);

  void add_edge(int u, int v);
  int size() const { return static_cast<int>(closed_.size()); }
  bool adjacent(int u, int v) const { return u != v && (closed_[u] >> v & 1U); }
  /// The vertex and its neighbours.
  Mask closed_neighborhood(int v) const { return closed_[v]; }
  Mask closed_neighborhood_of_set(Mask s) const;
  const std::string& name() const { return name_; }
  int edge_count() const;

 private:
  std::vector<Mask> closed_;
  std::string name_;
};

enum class EliminationOrder {
  BulkSynchronous,    // each round judges every configuration against the previous round
  SequentialReverse,  // one pass at a time, deleting immediately, highest mask first
};

struct SafeSet {
  int k = 0;
  std::vector<Mask> configurations;  // sorted
  bool contains(Mask c) const;
  bool empty() const { return configurations.empty(); }
};

struct OracleLimits {
  int vertex_cap = 16;
};

/// Every vertex of the graph in `c` or adjacent to it.
bool dominates(const SmallGraph& g, Mask c);

/// Guards on `from` can reach `to` with each guard moving at most one edge.
bool can_move(const SmallGraph& g, Mask from, Mask to);

/// All k-subsets of {0..n-1}, ascending.
std::vector<Mask> k_subsets(int n, int k);

/// Throws ResourceError above the vertex cap.
SafeSet safe_set(const SmallGraph& g, int k, EliminationOrder order = EliminationOrder::BulkSynchronous,
                 OracleLimits limits = {});

/// Some member of safe contains v and is reachable from c in one move.
bool defends(const SmallGraph& g, Mask c, int v, const SafeSet& safe);

/// Least k <= k_max with a non-empty safe set; nullopt when none exists up
/// to k_max. k_max defaults to ceil(|V|/2) + 1.
std::optional<int> eternal_domination_number(const SmallGraph& g, std::optional<int> k_max = {},
                                             OracleLimits limits = {});

/// Exhaustive minimum dominating set size.
int domination_number(const SmallGraph& g, OracleLimits limits = {});

}  // namespace eterdom
