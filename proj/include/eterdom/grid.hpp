#pragma once

// Strong grid (king graph) topology: coordinates, Chebyshev adjacency,
// rectangular windows, guard configurations and domination predicates.
//
// Coordinates are (x, y) with x the column index along the first path
// factor P_n and y the row index along P_m. Infinite-grid code uses the
// same type with unbounded signed coordinates.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace eterdom {

struct Vertex {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;

  Vertex operator+(Vertex o) const { return {x + o.x, y + o.y}; }
  Vertex operator-(Vertex o) const { return {x - o.x, y - o.y}; }
};

std::string to_string(Vertex v);

struct GridDims {
  int n = 0;  // columns
  int m = 0;  // rows

  friend bool operator==(const GridDims&, const GridDims&) = default;

  bool contains(Vertex v) const { return v.x >= 0 && v.y >= 0 && v.x < n && v.y < m; }
  std::int64_t cell_count() const { return std::int64_t{n} * m; }
};

/// Parses "NxM" (n first). Throws DomainError on malformed input.
GridDims parse_dims(const std::string& text);
std::string to_string(GridDims d);

struct Rect {
  int x0 = 0;
  int y0 = 0;
  int w = 1;
  int h = 1;

  friend bool operator==(const Rect&, const Rect&) = default;

  static Rect of(GridDims d) { return {0, 0, d.n, d.m}; }
  int x1() const { return x0 + w; }  // exclusive
  int y1() const { return y0 + h; }  // exclusive
  bool contains(Vertex v) const { return v.x >= x0 && v.y >= y0 && v.x < x1() && v.y < y1(); }
  /// Shrinks by `pad` cells on every side; throws DomainError if nothing remains.
  Rect inset(int pad) const;
};

int chebyshev_distance(Vertex u, Vertex v);
inline bool adjacent_or_equal(Vertex u, Vertex v) { return chebyshev_distance(u, v) <= 1; }

/// The eight king-move neighbours of v on the infinite grid.
std::vector<Vertex> neighbors(Vertex v);
/// Neighbours clipped to dims. Throws DomainError if v lies outside dims.
std::vector<Vertex> neighbors(Vertex v, GridDims dims);

/// A set of distinct guard positions, kept sorted.
class Configuration {
 public:
  Configuration() = default;
  /// Throws std::invalid_argument if two guards share a vertex.
  explicit Configuration(std::vector<Vertex> guards);

  std::span<const Vertex> guards() const { return guards_; }
  std::size_t size() const { return guards_.size(); }
  bool empty() const { return guards_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return guards_.begin(); }
  auto end() const { return guards_.end(); }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Vertex> guards_;
};

/// Dense occupancy lookup over a rectangle; cells outside read as empty.
class OccupancyMap {
 public:
  OccupancyMap(Rect area, std::span<const Vertex> guards);
  bool occupied(Vertex v) const;
  const Rect& area() const { return area_; }

 private:
  Rect area_;
  std::vector<std::uint8_t> cells_;
};

/// True iff every cell of `region` is within Chebyshev distance 1 of a guard.
bool dominates_region(std::span<const Vertex> guards, Rect region);
bool is_dominating(const Configuration& c, GridDims dims);

/// Chebyshev distance from every cell of dims to its nearest guard
/// (row-major by y, then x). Cells are unreachable (-1) only when c is empty.
std::vector<int> distance_field(const Configuration& c, GridDims dims);

/// 64-bit FNV-1a over the sorted guard coordinates.
std::uint64_t configuration_hash(const Configuration& c);
std::string hash_hex(std::uint64_t h);

}  // namespace eterdom
