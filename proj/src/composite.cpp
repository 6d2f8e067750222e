#include "eterdom/composite.hpp"

#include <algorithm>

#include "eterdom/errors.hpp"

namespace eterdom {

namespace {

int ceil_half(int v) { return (v + 1) / 2; }

int largest_admissible(int v) { return v - ((v - 2) % 7 + 7) % 7; }

// Cuts [x0,x1) x [y0,y1) into 2x2 squares, clipped at the far edges.
void tile_pairs(std::vector<std::vector<Vertex>>& out, int x0, int x1, int y0, int y1) {
  for (int y = y0; y < y1; y += 2) {
    for (int x = x0; x < x1; x += 2) {
      std::vector<Vertex> cells;
      for (int dy = 0; dy < 2 && y + dy < y1; ++dy)
        for (int dx = 0; dx < 2 && x + dx < x1; ++dx) cells.push_back({x + dx, y + dy});
      out.push_back(std::move(cells));
    }
  }
}

}  // namespace

int strip_multiplier(int residue_mod7) {
  switch (((residue_mod7 % 7) + 7) % 7) {
    case 2: return 0;
    case 3:
    case 4: return 1;
    case 5:
    case 6: return 2;
    default: return 3;
  }
}

Decomposition decompose(GridDims dims) {
  if (dims.n < 9 || dims.m < 9)
    throw DomainError("composite strategy needs n, m >= 9, got " + to_string(dims));
  Decomposition d;
  d.dims = dims;
  d.a = largest_admissible(dims.n);
  d.b = largest_admissible(dims.m);
  d.alpha = strip_multiplier(dims.m % 7);
  d.beta = strip_multiplier(dims.n % 7);
  d.subgrid = Rect{dims.n - d.a, dims.m - d.b, d.a, d.b};
  d.strip_rows = Rect{0, 0, dims.n, dims.m - d.b};
  d.strip_cols = Rect{0, 0, dims.n - d.a, dims.m};
  return d;
}

int composite_guard_count(GridDims dims, AlphaBetaKeying keying) {
  const Decomposition d = decompose(dims);
  int alpha = d.alpha, beta = d.beta;
  if (keying == AlphaBetaKeying::Swapped) {
    alpha = strip_multiplier(dims.n % 7);
    beta = strip_multiplier(dims.m % 7);
  }
  return guard_count(GridDims{d.a, d.b}) + alpha * ceil_half(dims.n) + beta * ceil_half(dims.m) -
         alpha * beta;
}

std::vector<StripBlock> strip_blocks(const Decomposition& d) {
  // Built with the subgrid at [0,a) x [0,b) and strips on the high sides,
  // then mirrored through the centre.
  const int n = d.dims.n, m = d.dims.m, a = d.a, b = d.b;
  const int c = n - a, r = m - b;
  std::vector<std::vector<Vertex>> groups;
  if (!(b % 2 == 1 && r % 2 == 1)) {
    tile_pairs(groups, 0, n, b, m);
    tile_pairs(groups, a, n, 0, b);
  } else if (!(a % 2 == 1 && c % 2 == 1)) {
    tile_pairs(groups, a, n, 0, m);
    tile_pairs(groups, 0, a, b, m);
  } else {
    // a, b, c, r all odd: the inner corner takes three cells, the inner
    // column and row pair up along the subgrid, the rest is even-sized.
    groups.push_back({{a - 1, b}, {a, b}, {a, b - 1}});
    tile_pairs(groups, a, a + 1, 0, b - 1);
    tile_pairs(groups, 0, a - 1, b, b + 1);
    tile_pairs(groups, a + 1, n, 0, m);
    tile_pairs(groups, 0, a + 1, b + 1, m);
  }

  std::vector<StripBlock> out;
  out.reserve(groups.size());
  for (auto& cells : groups) {
    if (cells.empty()) continue;
    for (Vertex& v : cells) v = {n - 1 - v.x, m - 1 - v.y};
    std::sort(cells.begin(), cells.end());
    for (Vertex u : cells)
      for (Vertex v : cells)
        if (chebyshev_distance(u, v) > 1) throw StrategyError("strip block is not a clique");
    out.push_back({cells, cells.front()});
  }
  std::sort(out.begin(), out.end(),
            [](const StripBlock& x, const StripBlock& y) { return x.cells.front() < y.cells.front(); });
  const int expected = d.alpha * ceil_half(n) + d.beta * ceil_half(m) - d.alpha * d.beta;
  if (static_cast<int>(out.size()) != expected)
    throw StrategyError("strip partition of " + to_string(d.dims) + " uses " +
                        std::to_string(out.size()) + " blocks, expected " + std::to_string(expected));
  return out;
}

Configuration CompositeState::subgrid_guards() const {
  const Vertex origin{decomposition.subgrid.x0, decomposition.subgrid.y0};
  std::vector<Vertex> out;
  for (Vertex g : subgrid.guards()) out.push_back(g + origin);
  return Configuration(std::move(out));
}

Configuration CompositeState::strip_guards() const {
  std::vector<Vertex> out;
  for (const StripBlock& blk : blocks) out.push_back(blk.guard);
  return Configuration(std::move(out));
}

Configuration CompositeState::guards() const {
  const Configuration inner = subgrid_guards();
  std::vector<Vertex> out(inner.begin(), inner.end());
  for (const StripBlock& blk : blocks) out.push_back(blk.guard);
  return Configuration(std::move(out));
}

int CompositeState::block_of(Vertex v) const {
  if (decomposition.subgrid.contains(v)) return -1;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (std::find(blocks[i].cells.begin(), blocks[i].cells.end(), v) != blocks[i].cells.end())
      return static_cast<int>(i);
  return -1;
}

bool operator==(const CompositeState& a, const CompositeState& b) {
  if (!(a.subgrid == b.subgrid) || a.blocks.size() != b.blocks.size()) return false;
  for (std::size_t i = 0; i < a.blocks.size(); ++i)
    if (a.blocks[i].guard != b.blocks[i].guard || a.blocks[i].cells != b.blocks[i].cells) return false;
  return a.decomposition.dims == b.decomposition.dims;
}

CompositeState composite_init(GridDims dims) {
  CompositeState s;
  s.decomposition = decompose(dims);
  s.subgrid = init_state(GridDims{s.decomposition.a, s.decomposition.b});
  s.blocks = strip_blocks(s.decomposition);
  return s;
}

CompositeStep composite_respond(const CompositeState& state, Vertex attack) {
  const Decomposition& d = state.decomposition;
  if (!d.dims.contains(attack))
    throw DomainError("attack " + to_string(attack) + " outside " + to_string(d.dims));

  CompositeStep step{AttackResponse{attack, {}, {}}, state};
  if (d.subgrid.contains(attack)) {
    const Vertex origin{d.subgrid.x0, d.subgrid.y0};
    BorderStep inner = respond(state.subgrid, attack - origin);
    for (Vertex a : inner.response.anchors) step.response.anchors.push_back(a + origin);
    for (const GuardMove& mv : inner.response.moves)
      step.response.moves.push_back({mv.from + origin, mv.to + origin});
    step.state.subgrid = std::move(inner.state);
    return step;
  }
  const int k = state.block_of(attack);
  if (k < 0) throw StrategyError("no strip block owns " + to_string(attack));
  StripBlock& blk = step.state.blocks[static_cast<std::size_t>(k)];
  if (blk.guard != attack) {
    step.response.moves.push_back({blk.guard, attack});
    blk.guard = attack;
  }
  return step;
}

}  // namespace eterdom
