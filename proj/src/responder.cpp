#include "eterdom/responder.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>
#include <string_view>
#include <tuple>

#include "eterdom/errors.hpp"
#include "eterdom/json_io.hpp"

namespace eterdom {

namespace detail {
extern const std::string_view kResponseTablesJson;
}

namespace {

int mod7(int v) {
  const int r = v % 7;
  return r < 0 ? r + 7 : r;
}

// Signed torus displacement in {-3..3} per axis.
Vertex torus_delta(Vertex from, Vertex to) {
  auto wrap = [](int d) {
    d = mod7(d);
    return d > 3 ? d - 7 : d;
  };
  return {wrap(to.x - from.x), wrap(to.y - from.y)};
}

bool king_step(Vertex d) { return d.x >= -1 && d.x <= 1 && d.y >= -1 && d.y <= 1; }

// Members of spec inside the fundamental tile [0,7)^2, one per row.
std::array<Vertex, 7> torus_members(const PatternSpec& spec) {
  const Configuration tile = window(spec, Rect{0, 0, 7, 7});
  std::array<Vertex, 7> out;
  std::copy(tile.begin(), tile.end(), out.begin());
  return out;
}

struct TorusMatching {
  std::array<Vertex, 7> sources;
  std::array<Vertex, 7> deltas;
};

// Best perfect matching of the 7 torus members of `from` onto those of `to`.
TorusMatching best_torus_matching(const PatternSpec& from, const PatternSpec& to, Vertex attacked) {
  const auto sources = torus_members(from);
  const auto targets = torus_members(to);
  const Vertex attacked_cell{mod7(attacked.x), mod7(attacked.y)};

  using Score = std::tuple<int, int, std::array<Vertex, 7>>;
  std::optional<Score> best;
  std::array<Vertex, 7> best_deltas{};

  std::array<Vertex, 7> chosen{};
  std::array<bool, 7> used{};
  auto search = [&](auto&& self, int i) -> void {
    if (i == 7) {
      int moved = 0;
      int penalty = 0;
      std::array<Vertex, 7> deltas{};
      for (int s = 0; s < 7; ++s) {
        deltas[s] = torus_delta(sources[s], chosen[s]);
        if (deltas[s] != Vertex{0, 0}) ++moved;
        // a doubly covered attack is answered diagonally when possible
        if (chosen[s] == attacked_cell && (deltas[s].x == 0) != (deltas[s].y == 0)) penalty = 1;
      }
      Score score{moved, penalty, chosen};
      if (!best || score < *best) {
        best = score;
        best_deltas = deltas;
      }
      return;
    }
    for (int t = 0; t < 7; ++t) {
      if (used[t] || !king_step(torus_delta(sources[i], targets[t]))) continue;
      used[t] = true;
      chosen[i] = targets[t];
      self(self, i + 1);
      used[t] = false;
    }
  };
  search(search, 0);
  if (!best) throw InfeasibleError("no king matching between " + to_string(from.phase) + " and " +
                                   to_string(to.phase) + " translates on the torus");
  return {sources, best_deltas};
}

Vertex translate(Vertex v, int i, int j) { return {v.x + 7 * i, v.y + 7 * j}; }

int floor_div7(int v) { return (v - mod7(v)) / 7; }

}  // namespace

const std::array<Vertex, 8>& canonical_attack_offsets() {
  static const std::array<Vertex, 8> offsets{{{0, -1}, {1, -1}, {1, 0}, {1, 1},
                                              {-1, 1}, {0, 1}, {-1, 0}, {-1, -1}}};
  return offsets;
}

PatternSpec response_target(const PatternSpec& spec, Vertex attack) {
  return spec_containing(opposite(spec.phase), attack);
}

AttackResponse respond_matching_block(const PatternSpec& spec, Vertex attack) {
  AttackResponse out{attack, {}, {}};
  if (contains(spec, attack)) return out;

  const PatternSpec target = response_target(spec, attack);
  const TorusMatching tm = best_torus_matching(spec, target, attack);

  // The anchor class is the one member shared by both patterns per tile.
  std::optional<Vertex> anchor;
  for (int s = 0; s < 7; ++s)
    if (tm.deltas[s] == Vertex{0, 0}) anchor = tm.sources[s];
  if (!anchor) throw InfeasibleError("torus matching has no fixed member");

  // Block corner: anchor translate with corner.x < attack.x < corner.x + 7.
  // attack never shares a row or column class with the anchor because
  // both lie in the target pattern, which meets every row and column once.
  const Vertex corner{attack.x - mod7(attack.x - anchor->x), attack.y - mod7(attack.y - anchor->y)};
  for (int dy : {0, 7})
    for (int dx : {0, 7}) out.anchors.push_back({corner.x + dx, corner.y + dy});
  std::sort(out.anchors.begin(), out.anchors.end());

  for (int s = 0; s < 7; ++s) {
    if (tm.deltas[s] == Vertex{0, 0}) continue;
    const int ox = mod7(tm.sources[s].x - corner.x);
    const int oy = mod7(tm.sources[s].y - corner.y);
    if (ox == 0 || oy == 0) throw InfeasibleError("moving guard on a block boundary");
    const Vertex from{corner.x + ox, corner.y + oy};
    out.moves.push_back({from, from + tm.deltas[s]});
  }
  std::sort(out.moves.begin(), out.moves.end(), [&](const GuardMove& a, const GuardMove& b) {
    return std::make_tuple(a.to != attack, a.from) < std::make_tuple(b.to != attack, b.from);
  });
  if (out.moves.empty() || out.moves.front().to != attack)
    throw InfeasibleError("block response does not reach the attacked vertex");
  return out;
}

AttackResponse tile_response(const AttackResponse& block, Rect scope) {
  AttackResponse out{block.attacked, {}, {}};
  if (block.moves.empty() && block.anchors.empty()) return out;

  int min_x = block.attacked.x, max_x = block.attacked.x;
  int min_y = block.attacked.y, max_y = block.attacked.y;
  auto widen = [&](Vertex v) {
    min_x = std::min(min_x, v.x), max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y), max_y = std::max(max_y, v.y);
  };
  for (Vertex a : block.anchors) widen(a);
  for (const GuardMove& mv : block.moves) widen(mv.from);

  const int i0 = floor_div7(scope.x0 - max_x) - 1, i1 = floor_div7(scope.x1() - min_x) + 1;
  const int j0 = floor_div7(scope.y0 - max_y) - 1, j1 = floor_div7(scope.y1() - min_y) + 1;
  std::set<Vertex> anchors;
  std::vector<GuardMove> moves;
  for (int j = j0; j <= j1; ++j) {
    for (int i = i0; i <= i1; ++i) {
      for (Vertex a : block.anchors)
        if (scope.contains(translate(a, i, j))) anchors.insert(translate(a, i, j));
      for (const GuardMove& mv : block.moves) {
        const Vertex from = translate(mv.from, i, j);
        if (scope.contains(from)) moves.push_back({from, translate(mv.to, i, j)});
      }
    }
  }
  // The block containing the attack keeps its moves at the front.
  std::stable_partition(moves.begin(), moves.end(),
                        [&](const GuardMove& mv) { return mv.to == block.attacked; });
  out.anchors.assign(anchors.begin(), anchors.end());
  out.moves = std::move(moves);
  return out;
}

AttackResponse respond_matching(const PatternSpec& spec, Vertex attack, Rect scope) {
  return tile_response(respond_matching_block(spec, attack), scope);
}

Rect aligned_scope(const AttackResponse& block, int tiles) {
  if (block.anchors.empty()) throw DomainError("aligned_scope needs a block with anchors");
  const Vertex corner = block.anchors.front();
  return Rect{corner.x - 7 * tiles, corner.y - 7 * tiles, 7 * (2 * tiles + 1) + 1,
              7 * (2 * tiles + 1) + 1};
}

Configuration apply(const Configuration& c, const AttackResponse& r) {
  if (r.moves.empty()) return c;
  std::set<Vertex> sources;
  std::set<Vertex> targets;
  for (const GuardMove& mv : r.moves) {
    if (!c.contains(mv.from)) throw TransitionError("no guard at move source " + to_string(mv.from));
    if (!sources.insert(mv.from).second)
      throw TransitionError("guard at " + to_string(mv.from) + " moved twice");
    if (!targets.insert(mv.to).second)
      throw TransitionError("two guards moved onto " + to_string(mv.to));
  }
  std::vector<Vertex> out;
  out.reserve(c.size());
  for (Vertex g : c) {
    if (sources.count(g)) continue;
    if (targets.count(g)) throw TransitionError("move onto guard that stays at " + to_string(g));
    out.push_back(g);
  }
  out.insert(out.end(), targets.begin(), targets.end());
  return Configuration(std::move(out));
}

namespace {

struct GoldenTables {
  int version = 0;
  std::vector<ResponseRow> rows;
  std::map<std::pair<Phase, Vertex>, std::size_t> index;
};

const GoldenTables& golden() {
  static const GoldenTables tables = [] {
    GoldenTables t;
    const Json doc = Json::parse(detail::kResponseTablesJson);
    t.version = doc.at("version").get<int>();
    t.rows = doc.at("rows").get<std::vector<ResponseRow>>();
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      t.index.emplace(std::make_pair(t.rows[i].phase, t.rows[i].offset), i);
    return t;
  }();
  return tables;
}

}  // namespace

const std::vector<ResponseRow>& golden_rows() { return golden().rows; }
int golden_tables_version() { return golden().version; }

AttackResponse respond_tabulated(const PatternSpec& spec, Vertex attack) {
  AttackResponse out{attack, {}, {}};
  if (contains(spec, attack)) return out;
  for (Vertex offset : canonical_attack_offsets()) {
    const Vertex member = attack - offset;
    if (!contains(spec, member)) continue;
    const auto& tables = golden();
    const auto it = tables.index.find({spec.phase, offset});
    if (it == tables.index.end())
      throw StrategyError("response tables have no row for " + to_string(spec.phase) + " offset " +
                          to_string(offset));
    const ResponseRow& row = tables.rows[it->second];
    for (Vertex a : row.anchors) out.anchors.push_back(a + member);
    for (const GuardMove& mv : row.moves) out.moves.push_back({mv.from + member, mv.to + member});
    return out;
  }
  throw StrategyError("attack at " + to_string(attack) + " is not dominated by the " +
                      to_string(spec.phase) + " pattern");
}

std::vector<ResponseRow> generate_response_rows() {
  std::vector<ResponseRow> rows;
  for (Phase phase : {Phase::D, Phase::Dprime}) {
    const PatternSpec spec = spec_containing(phase, Vertex{0, 0});
    for (Vertex offset : canonical_attack_offsets()) {
      const AttackResponse block = respond_matching_block(spec, offset);
      rows.push_back({phase, offset, "matching", block.anchors, block.moves});
    }
  }
  return rows;
}

}  // namespace eterdom
