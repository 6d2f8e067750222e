#include "eterdom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "eterdom/errors.hpp"
#include "eterdom/grid.hpp"

namespace eterdom {

SmallGraph::SmallGraph(int vertices, std::string name) : name_(std::move(name)) {
  if (vertices < 1 || vertices > kMaxVertices)
    throw DomainError("graph needs 1.." + std::to_string(kMaxVertices) + " vertices, got " +
                      std::to_string(vertices));
  closed_.resize(static_cast<std::size_t>(vertices));
  for (int v = 0; v < vertices; ++v) closed_[v] = Mask{1} << v;
}

void SmallGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= size() || v >= size())
    throw DomainError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
  if (u == v) throw DomainError("self-loop at " + std::to_string(u));
  closed_[u] |= Mask{1} << v;
  closed_[v] |= Mask{1} << u;
}

Mask SmallGraph::closed_neighborhood_of_set(Mask s) const {
  Mask out = 0;
  for (; s; s &= s - 1) out |= closed_[std::countr_zero(s)];
  return out;
}

int SmallGraph::edge_count() const {
  int twice = 0;
  for (Mask m : closed_) twice += std::popcount(m) - 1;
  return twice / 2;
}

SmallGraph SmallGraph::path(int n) {
  SmallGraph g(n, "path:" + std::to_string(n));
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SmallGraph SmallGraph::cycle(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  SmallGraph g(n, "cycle:" + std::to_string(n));
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SmallGraph SmallGraph::strong_grid(int n, int m) {
  if (n < 1 || m < 1) throw DomainError("grid dimensions must be positive");
  SmallGraph g(n * m, "grid:" + std::to_string(n) + "x" + std::to_string(m));
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < n; ++x)
      for (int dy = 0; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          if (dy == 0 && dx <= 0) continue;
          const int u = x + dx, w = y + dy;
          if (u >= 0 && u < n && w < m) g.add_edge(y * n + x, w * n + u);
        }
  return g;
}

SmallGraph SmallGraph::from_edge_list(std::istream& in, std::string name) {
  std::vector<std::pair<int, int>> edges;
  int declared = -1;
  int largest = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string first;
    if (!(words >> first)) continue;
    if (first == "vertices") {
      if (!(words >> declared)) throw DomainError("malformed 'vertices' line");
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw DomainError("malformed edge line '" + line + "'");
    }
    if (!(words >> v)) throw DomainError("malformed edge line '" + line + "'");
    edges.push_back({u, v});
    largest = std::max({largest, u, v});
  }
  const int n = declared > 0 ? declared : largest + 1;
  if (n < 1) throw DomainError("edge list defines no vertices");
  SmallGraph g(n, std::move(name));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SmallGraph SmallGraph::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw DomainError("graph spec must look like kind:arg, got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw DomainError("bad number in graph spec '" + spec + "'");
  };
  if (kind == "path") return path(number(arg));
  if (kind == "cycle") return cycle(number(arg));
  if (kind == "grid") {
    const GridDims d = parse_dims(arg);
    return strong_grid(d.n, d.m);
  }
  if (kind == "file") {
    std::ifstream in(arg);
    if (!in) throw DomainError("cannot open graph file '" + arg + "'");
    return from_edge_list(in, spec);
  }
  throw DomainError("unknown graph kind '" + kind + "'");
}

bool SafeSet::contains(Mask c) const {
  return std::binary_search(configurations.begin(), configurations.end(), c);
}

bool dominates(const SmallGraph& g, Mask c) {
  const Mask all = g.size() == 32 ? ~Mask{0} : (Mask{1} << g.size()) - 1;
  return g.closed_neighborhood_of_set(c) == all;
}

bool can_move(const SmallGraph& g, Mask from, Mask to) {
  if (std::popcount(from) != std::popcount(to)) return false;
  int sources[SmallGraph::kMaxVertices];
  int count = 0;
  for (Mask s = from; s; s &= s - 1) sources[count++] = std::countr_zero(s);
  int mate[SmallGraph::kMaxVertices];
  std::fill(mate, mate + SmallGraph::kMaxVertices, -1);
  Mask seen = 0;
  auto augment = [&](auto&& self, int i) -> bool {
    for (Mask opts = g.closed_neighborhood(sources[i]) & to & ~seen; opts; opts &= opts - 1) {
      const int t = std::countr_zero(opts);
      seen |= Mask{1} << t;
      if (mate[t] < 0 || self(self, mate[t])) {
        mate[t] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < count; ++i) {
    seen = 0;
    if (!augment(augment, i)) return false;
  }
  return true;
}

std::vector<Mask> k_subsets(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {0};
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
    out.push_back(static_cast<Mask>(s));
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t ripple = s + low;
    s = (((ripple ^ s) >> 2) / low) | ripple;
  }
  return out;
}

namespace {

void check_cap(const SmallGraph& g, OracleLimits limits) {
  if (g.size() > limits.vertex_cap)
    throw ResourceError(g.name() + " has " + std::to_string(g.size()) + " vertices, cap is " +
                        std::to_string(limits.vertex_cap));
}

}  // namespace

SafeSet safe_set(const SmallGraph& g, int k, EliminationOrder order, OracleLimits limits) {
  check_cap(g, limits);
  SafeSet out;
  out.k = k;
  std::vector<Mask> nodes;
  for (Mask c : k_subsets(g.size(), k))
    if (dominates(g, c)) nodes.push_back(c);
  const std::size_t count = nodes.size();
  const Mask all = (g.size() == 32) ? ~Mask{0} : (Mask{1} << g.size()) - 1;

  // Legal successors of every candidate, by index into nodes.
  std::vector<std::vector<std::uint32_t>> successors(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Mask reach = g.closed_neighborhood_of_set(nodes[i]);
    for (std::size_t j = 0; j < count; ++j)
      if ((nodes[j] & ~reach) == 0 && can_move(g, nodes[i], nodes[j]))
        successors[i].push_back(static_cast<std::uint32_t>(j));
  }

  std::vector<std::uint8_t> alive(count, 1);
  auto survives = [&](std::size_t i, const std::vector<std::uint8_t>& live) {
    Mask answered = 0;
    for (std::uint32_t j : successors[i])
      if (live[j]) answered |= nodes[j];
    return answered == all;
  };

  if (order == EliminationOrder::BulkSynchronous) {
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<std::uint8_t> next = alive;
      for (std::size_t i = 0; i < count; ++i) {
        if (alive[i] && !survives(i, alive)) {
          next[i] = 0;
          changed = true;
        }
      }
      alive.swap(next);
    }
  } else {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = count; i-- > 0;) {
        if (alive[i] && !survives(i, alive)) {
          alive[i] = 0;
          changed = true;
        }
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i)
    if (alive[i]) out.configurations.push_back(nodes[i]);
  return out;
}

bool defends(const SmallGraph& g, Mask c, int v, const SafeSet& safe) {
  const Mask bit = Mask{1} << v;
  for (Mask next : safe.configurations)
    if ((next & bit) && can_move(g, c, next)) return true;
  return false;
}

std::optional<int> eternal_domination_number(const SmallGraph& g, std::optional<int> k_max,
                                             OracleLimits limits) {
  check_cap(g, limits);
  const int limit = std::min(g.size(), k_max.value_or((g.size() + 1) / 2 + 1));
  for (int k = 1; k <= limit; ++k)
    if (!safe_set(g, k, EliminationOrder::BulkSynchronous, limits).empty()) return k;
  return std::nullopt;
}

int domination_number(const SmallGraph& g, OracleLimits limits) {
  check_cap(g, limits);
  for (int k = 1; k <= g.size(); ++k)
    for (Mask c : k_subsets(g.size(), k))
      if (dominates(g, c)) return k;
  return g.size();
}

}  // namespace eterdom
