#include "eterdom/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "eterdom/errors.hpp"

namespace eterdom {

std::string to_string(Vertex v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

GridDims parse_dims(const std::string& text) {
  const auto sep = text.find_first_of("xX");
  if (sep == std::string::npos || sep == 0 || sep + 1 == text.size()) {
    throw DomainError("dims must look like NxM, got '" + text + "'");
  }
  GridDims d;
  try {
    std::size_t used = 0;
    d.n = std::stoi(text.substr(0, sep), &used);
    if (used != sep) throw std::invalid_argument("n");
    const std::string rest = text.substr(sep + 1);
    d.m = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("m");
  } catch (const std::exception&) {
    throw DomainError("dims must look like NxM, got '" + text + "'");
  }
  if (d.n < 1 || d.m < 1) throw DomainError("grid dimensions must be positive");
  return d;
}

std::string to_string(GridDims d) { return std::to_string(d.n) + "x" + std::to_string(d.m); }

Rect Rect::inset(int pad) const {
  Rect r{x0 + pad, y0 + pad, w - 2 * pad, h - 2 * pad};
  if (r.w < 1 || r.h < 1) throw DomainError("rectangle too small to inset");
  return r;
}

int chebyshev_distance(Vertex u, Vertex v) {
  return std::max(std::abs(u.x - v.x), std::abs(u.y - v.y));
}

std::vector<Vertex> neighbors(Vertex v) {
  std::vector<Vertex> out;
  out.reserve(8);
  for (int dx = -1; dx <= 1; ++dx) {
    for (int dy = -1; dy <= 1; ++dy) {
      if (dx != 0 || dy != 0) out.push_back({v.x + dx, v.y + dy});
    }
  }
  return out;
}

std::vector<Vertex> neighbors(Vertex v, GridDims dims) {
  if (!dims.contains(v)) throw DomainError("vertex " + to_string(v) + " outside " + to_string(dims));
  auto all = neighbors(v);
  std::erase_if(all, [&](Vertex u) { return !dims.contains(u); });
  return all;
}

Configuration::Configuration(std::vector<Vertex> guards) : guards_(std::move(guards)) {
  std::sort(guards_.begin(), guards_.end());
  if (std::adjacent_find(guards_.begin(), guards_.end()) != guards_.end()) {
    throw std::invalid_argument("two guards occupy the same vertex");
  }
}

bool Configuration::contains(Vertex v) const {
  return std::binary_search(guards_.begin(), guards_.end(), v);
}

OccupancyMap::OccupancyMap(Rect area, std::span<const Vertex> guards)
    : area_(area), cells_(static_cast<std::size_t>(area.w) * area.h, 0) {
  for (Vertex g : guards) {
    if (area_.contains(g)) {
      cells_[static_cast<std::size_t>(g.y - area_.y0) * area_.w + (g.x - area_.x0)] = 1;
    }
  }
}

bool OccupancyMap::occupied(Vertex v) const {
  if (!area_.contains(v)) return false;
  return cells_[static_cast<std::size_t>(v.y - area_.y0) * area_.w + (v.x - area_.x0)] != 0;
}

bool dominates_region(std::span<const Vertex> guards, Rect region) {
  // Mark the closed neighbourhood of every guard, clipped to the region.
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(region.w) * region.h, 0);
  for (Vertex g : guards) {
    for (int y = std::max(region.y0, g.y - 1); y <= std::min(region.y1() - 1, g.y + 1); ++y) {
      for (int x = std::max(region.x0, g.x - 1); x <= std::min(region.x1() - 1, g.x + 1); ++x) {
        covered[static_cast<std::size_t>(y - region.y0) * region.w + (x - region.x0)] = 1;
      }
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](std::uint8_t c) { return c != 0; });
}

bool is_dominating(const Configuration& c, GridDims dims) {
  return dominates_region(c.guards(), Rect::of(dims));
}

std::vector<int> distance_field(const Configuration& c, GridDims dims) {
  std::vector<int> dist(static_cast<std::size_t>(dims.cell_count()), -1);
  std::deque<Vertex> queue;
  for (Vertex g : c) {
    if (!dims.contains(g)) continue;
    auto& d = dist[static_cast<std::size_t>(g.y) * dims.n + g.x];
    if (d != 0) {
      d = 0;
      queue.push_back(g);
    }
  }
  // Breadth-first search over king moves yields the Chebyshev distance.
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    const int dv = dist[static_cast<std::size_t>(v.y) * dims.n + v.x];
    for (Vertex u : neighbors(v)) {
      if (!dims.contains(u)) continue;
      auto& du = dist[static_cast<std::size_t>(u.y) * dims.n + u.x];
      if (du < 0) {
        du = dv + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::uint64_t configuration_hash(const Configuration& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::int32_t value) {
    auto u = static_cast<std::uint32_t>(value);
    for (int i = 0; i < 4; ++i) {
      h ^= (u >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  for (Vertex g : c) {
    mix(g.x);
    mix(g.y);
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace eterdom
