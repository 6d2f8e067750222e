#include "eterdom/border.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "eterdom/errors.hpp"
#include "eterdom/matching.hpp"

namespace eterdom {

namespace {

constexpr std::array<Formation, 3> kFormations{Formation::Center, Formation::LowLeaf,
                                               Formation::HighLeaf};
constexpr std::array<Side, 4> kSides{Side::Bottom, Side::Top, Side::Left, Side::Right};

int sides_changed(const SideFormations& a, const SideFormations& b) {
  int n = 0;
  for (int i = 0; i < 4; ++i) n += a[i] != b[i];
  return n;
}

}  // namespace

std::string to_string(Formation f) {
  switch (f) {
    case Formation::Center: return "Center";
    case Formation::LowLeaf: return "LowLeaf";
    case Formation::HighLeaf: return "HighLeaf";
  }
  return "?";
}

Formation parse_formation(const std::string& text) {
  for (Formation f : kFormations)
    if (to_string(f) == text) return f;
  throw DomainError("unknown formation '" + text + "'");
}

std::string to_string(Side s) {
  switch (s) {
    case Side::Bottom: return "bottom";
    case Side::Top: return "top";
    case Side::Left: return "left";
    case Side::Right: return "right";
  }
  return "?";
}

const std::array<int, 5>& formation_offsets(Formation f) {
  static const std::array<int, 5> center{1, 2, 3, 4, 5};
  static const std::array<int, 5> low{0, 2, 3, 4, 5};
  static const std::array<int, 5> high{1, 2, 3, 4, 6};
  switch (f) {
    case Formation::LowLeaf: return low;
    case Formation::HighLeaf: return high;
    default: return center;
  }
}

int formation_index(const SideFormations& f) {
  int index = 0;
  for (int i = 3; i >= 0; --i) index = index * 3 + static_cast<int>(f[i]);
  return index;
}

SideFormations formations_from_index(int index) {
  SideFormations f{};
  for (int i = 0; i < 4; ++i) {
    f[i] = static_cast<Formation>(index % 3);
    index /= 3;
  }
  return f;
}

Vertex BorderPathState::cell(int offset) const {
  return axis == Axis::Horizontal ? Vertex{origin.x + offset, origin.y}
                                  : Vertex{origin.x, origin.y + offset};
}

std::array<Vertex, 5> BorderPathState::guards() const {
  std::array<Vertex, 5> out;
  const auto& offsets = formation_offsets(formation);
  for (int i = 0; i < 5; ++i) out[i] = cell(offsets[i]);
  return out;
}

void require_border_dims(GridDims dims) {
  if (dims.n < 9 || dims.m < 9 || dims.n % 7 != 2 || dims.m % 7 != 2)
    throw DomainError("border strategy needs n, m >= 9 with n == m == 2 (mod 7), got " +
                      to_string(dims));
}

std::optional<BorderLocation> locate_on_border(GridDims dims, Vertex v) {
  if (!dims.contains(v)) return std::nullopt;
  const bool x_edge = v.x == 0 || v.x == dims.n - 1;
  const bool y_edge = v.y == 0 || v.y == dims.m - 1;
  if (x_edge == y_edge) return std::nullopt;  // corner or interior
  if (y_edge) {
    const Side side = v.y == 0 ? Side::Bottom : Side::Top;
    return BorderLocation{side, (v.x - 1) / 7, (v.x - 1) % 7};
  }
  const Side side = v.x == 0 ? Side::Left : Side::Right;
  return BorderLocation{side, (v.y - 1) / 7, (v.y - 1) % 7};
}

std::vector<BorderPathState> FiniteStrategyState::border_paths() const {
  std::vector<BorderPathState> out;
  const auto f = [&](Side s) { return formations[static_cast<int>(s)]; };
  for (int a = 0; a < (dims.n - 2) / 7; ++a) {
    out.push_back({Side::Bottom, {1 + 7 * a, 0}, Axis::Horizontal, f(Side::Bottom)});
    out.push_back({Side::Top, {1 + 7 * a, dims.m - 1}, Axis::Horizontal, f(Side::Top)});
  }
  for (int b = 0; b < (dims.m - 2) / 7; ++b) {
    out.push_back({Side::Left, {0, 1 + 7 * b}, Axis::Vertical, f(Side::Left)});
    out.push_back({Side::Right, {dims.n - 1, 1 + 7 * b}, Axis::Vertical, f(Side::Right)});
  }
  return out;
}

std::array<Vertex, 4> FiniteStrategyState::corner_guards() const {
  return {Vertex{0, 0}, Vertex{dims.n - 1, 0}, Vertex{0, dims.m - 1},
          Vertex{dims.n - 1, dims.m - 1}};
}

Configuration FiniteStrategyState::interior() const { return window(interior_spec, interior_rect()); }

Configuration FiniteStrategyState::guards() const {
  const Configuration inner = interior();
  std::vector<Vertex> all(inner.begin(), inner.end());
  for (Vertex c : corner_guards()) all.push_back(c);
  for (const BorderPathState& p : border_paths())
    for (Vertex g : p.guards()) all.push_back(g);
  return Configuration(std::move(all));
}

int guard_count(GridDims dims) {
  require_border_dims(dims);
  return (dims.n * dims.m + 8 * (dims.m + dims.n - 1)) / 7;
}

FiniteStrategyState init_state(GridDims dims) {
  require_border_dims(dims);
  FiniteStrategyState s{dims, spec_with_residue(Phase::D, 6), {}};
  s.formations.fill(Formation::Center);
  return s;
}

SafeTable::SafeTable(std::vector<std::uint8_t> flags)
    : flags_(std::move(flags)), count_(static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), 1))) {
  if (flags_.size() != static_cast<std::size_t>(kStates)) throw DomainError("safe table has wrong size");
}

int SafeTable::index(Phase phase, int residue, int formation_index) {
  return ((phase == Phase::D ? 0 : 1) * 7 + residue) * 81 + formation_index;
}

bool SafeTable::contains(Phase phase, int residue, const SideFormations& f) const {
  return flags_[index(phase, residue, formation_index(f))] != 0;
}

bool SafeTable::contains(const FiniteStrategyState& s) const {
  return contains(s.interior_spec.phase, s.interior_spec.residue(), s.formations);
}

namespace {

// Every state of one grid size, with cached pairwise legality.
class StateSpace {
 public:
  explicit StateSpace(GridDims dims) : dims_(dims), cells_(static_cast<std::size_t>(dims.n * dims.m)) {
    guards_.resize(SafeTable::kStates);
    slot_.resize(SafeTable::kStates);
    for (Phase phase : {Phase::D, Phase::Dprime}) {
      for (int r = 0; r < 7; ++r) {
        for (int f = 0; f < 81; ++f) {
          const int s = SafeTable::index(phase, r, f);
          const FiniteStrategyState st{dims, spec_with_residue(phase, r), formations_from_index(f)};
          const Configuration c = st.guards();
          guards_[s].assign(c.begin(), c.end());
          slot_[s].assign(cells_, -1);
          for (std::size_t i = 0; i < guards_[s].size(); ++i) slot_[s][cell(guards_[s][i])] = static_cast<std::int16_t>(i);
        }
      }
    }
    legal_.assign(static_cast<std::size_t>(SafeTable::kStates) * SafeTable::kStates, -1);
  }

  bool occupied(int s, Vertex v) const { return slot_[s][cell(v)] >= 0; }

  bool legal(int s, int t) {
    std::int8_t& memo = legal_[static_cast<std::size_t>(s) * SafeTable::kStates + t];
    if (memo < 0) memo = compute_legal(s, t) ? 1 : 0;
    return memo == 1;
  }

 private:
  std::size_t cell(Vertex v) const { return static_cast<std::size_t>(v.y * dims_.n + v.x); }

  // Kuhn's augmenting paths; the graphs here have under ten edges per guard.
  bool compute_legal(int s, int t) {
    const auto& from = guards_[s];
    const auto& to_slot = slot_[t];
    const std::size_t k = from.size();
    adjacency_.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const Vertex v{from[i].x + dx, from[i].y + dy};
          if (!dims_.contains(v)) continue;
          const int j = to_slot[cell(v)];
          if (j >= 0) adjacency_[i].push_back(j);
        }
      }
      if (adjacency_[i].empty()) return false;
    }
    mate_.assign(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
      seen_.assign(k, 0);
      if (!augment(static_cast<int>(i))) return false;
    }
    return true;
  }

  bool augment(int i) {
    for (int j : adjacency_[i]) {
      if (seen_[j]) continue;
      seen_[j] = 1;
      if (mate_[j] < 0 || augment(mate_[j])) {
        mate_[j] = i;
        return true;
      }
    }
    return false;
  }

  GridDims dims_;
  std::size_t cells_;
  std::vector<std::vector<Vertex>> guards_;
  std::vector<std::vector<std::int16_t>> slot_;
  std::vector<std::int8_t> legal_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> mate_;
  std::vector<std::uint8_t> seen_;
};

}  // namespace

SafeTable compute_safe_table(GridDims dims) {
  require_border_dims(dims);
  StateSpace space(dims);

  std::vector<Vertex> border_cells;
  std::vector<Vertex> interior_cells;
  for (int y = 0; y < dims.m; ++y) {
    for (int x = 0; x < dims.n; ++x) {
      const Vertex v{x, y};
      if (locate_on_border(dims, v)) border_cells.push_back(v);
      else if (x > 0 && y > 0 && x < dims.n - 1 && y < dims.m - 1) interior_cells.push_back(v);
    }
  }

  std::vector<std::uint8_t> safe(SafeTable::kStates, 1);
  auto survives = [&](Phase phase, int r, int f) {
    const int s = SafeTable::index(phase, r, f);
    for (Vertex a : border_cells) {
      if (space.occupied(s, a)) continue;
      bool answered = false;
      for (int g = 0; g < 81 && !answered; ++g) {
        const int t = SafeTable::index(phase, r, g);
        answered = safe[t] && space.occupied(t, a) && space.legal(s, t);
      }
      if (!answered) return false;
    }
    const Phase next = opposite(phase);
    std::array<bool, 7> needed{};
    for (Vertex a : interior_cells)
      if (!space.occupied(s, a)) needed[residue(next, a)] = true;
    for (int nr = 0; nr < 7; ++nr) {
      if (!needed[nr]) continue;
      bool answered = false;
      for (int g = 0; g < 81 && !answered; ++g) {
        const int t = SafeTable::index(next, nr, g);
        answered = safe[t] && space.legal(s, t);
      }
      if (!answered) return false;
    }
    return true;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (Phase phase : {Phase::D, Phase::Dprime}) {
      for (int r = 0; r < 7; ++r) {
        for (int f = 0; f < 81; ++f) {
          const int s = SafeTable::index(phase, r, f);
          if (safe[s] && !survives(phase, r, f)) {
            safe[s] = 0;
            changed = true;
          }
        }
      }
    }
  }
  return SafeTable(std::move(safe));
}

const SafeTable& border_safe_table() {
  static const SafeTable table = compute_safe_table(GridDims{9, 9});
  return table;
}

namespace {

std::vector<VertexPair> preferred_pairs(const Configuration& before, const Configuration& after,
                                        const AttackResponse& periodic) {
  std::vector<VertexPair> out;
  for (const GuardMove& mv : periodic.moves)
    if (before.contains(mv.from) && after.contains(mv.to)) out.push_back({mv.from, mv.to});
  for (Vertex g : before)
    if (after.contains(g)) out.push_back({g, g});
  return out;
}

// Moves of a legal transition, the guard reaching the attack first.
std::optional<AttackResponse> transition(const Configuration& before, const Configuration& after,
                                         Vertex attack, const AttackResponse& periodic) {
  const auto pairs = preferred_pairs(before, after, periodic);
  const auto matching = king_matching(before.guards(), after.guards(), pairs);
  if (!matching) return std::nullopt;
  AttackResponse r{attack, {}, {}};
  for (const auto& [from, to] : *matching)
    if (from != to) r.moves.push_back({from, to});
  std::sort(r.moves.begin(), r.moves.end(), [&](const GuardMove& a, const GuardMove& b) {
    return std::make_tuple(a.to != attack, a.from) < std::make_tuple(b.to != attack, b.from);
  });
  for (Vertex a : periodic.anchors)
    if (before.contains(a) && after.contains(a)) r.anchors.push_back(a);
  return r;
}

}  // namespace

BorderStep respond(const FiniteStrategyState& state, Vertex attack) {
  const GridDims dims = state.dims;
  if (!dims.contains(attack))
    throw DomainError("attack " + to_string(attack) + " outside " + to_string(dims));
  const Configuration before = state.guards();
  const SafeTable& safe = border_safe_table();
  const auto border = locate_on_border(dims, attack);
  const bool occupied = before.contains(attack);

  if (!border && occupied) return {AttackResponse{attack, {}, {}}, state};

  FiniteStrategyState next = state;
  AttackResponse periodic{attack, {}, {}};
  std::optional<Formation> desired;
  if (border) {
    desired = border->offset == 0 ? Formation::LowLeaf
              : border->offset == 6 ? Formation::HighLeaf
                                    : Formation::Center;
    if (occupied && desired != Formation::Center) return {AttackResponse{attack, {}, {}}, state};
  } else {
    next.interior_spec = response_target(state.interior_spec, attack);
    periodic = tile_response(respond_matching_block(state.interior_spec, attack), state.interior_rect());
  }

  std::vector<int> order(81);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int f) {
    const SideFormations cand = formations_from_index(f);
    const int miss = desired && cand[static_cast<int>(border->side)] != *desired ? 1 : 0;
    return std::make_tuple(miss, sides_changed(cand, state.formations), f);
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });

  for (int f : order) {
    next.formations = formations_from_index(f);
    if (!safe.contains(next)) continue;
    const Configuration after = next.guards();
    if (!after.contains(attack)) continue;
    auto response = transition(before, after, attack, periodic);
    if (!response) continue;
#ifndef NDEBUG
    if (const std::string problem = check_state(next); !problem.empty())
      throw StrategyError("border strategy reached an inconsistent state: " + problem);
#endif
    return {std::move(*response), next};
  }
  throw StrategyError("no safe answer to attack " + to_string(attack) + " on " + to_string(dims));
}

std::string check_state(const FiniteStrategyState& s) {
  const Configuration g = s.guards();
  if (static_cast<int>(g.size()) != guard_count(s.dims))
    return "guard count " + std::to_string(g.size()) + " != " + std::to_string(guard_count(s.dims));
  for (Vertex c : s.corner_guards())
    if (!g.contains(c)) return "corner " + to_string(c) + " unguarded";
  // Every 7x7 interior tile must carry exactly the translated pattern.
  const Rect inner = s.interior_rect();
  for (int y = inner.y0; y + 7 <= inner.y1(); y += 7) {
    for (int x = inner.x0; x + 7 <= inner.x1(); x += 7) {
      const Rect tile{x, y, 7, 7};
      std::vector<Vertex> seen;
      for (Vertex v : g)
        if (tile.contains(v)) seen.push_back(v);
      if (Configuration(seen) != window(s.interior_spec, tile))
        return "interior tile at " + to_string(Vertex{x, y}) + " is not a pattern window";
    }
  }
  if (!is_dominating(g, s.dims)) return "guards do not dominate";
  return {};
}

}  // namespace eterdom
