#pragma once

// Strategy for any n, m >= 9: the largest a x b subgrid with
// a == b == 2 (mod 7) runs the border strategy, and the leftover
// n - a columns and m - b rows are split into cliques (cells inside one
// 2x2 square), each watched by its own guard. The subgrid sits in the
// top-right corner; the strips run along the bottom and left sides.

#include <string>
#include <vector>

#include "eterdom/border.hpp"
#include "eterdom/grid.hpp"
#include "eterdom/responder.hpp"

namespace eterdom {

/// Which residue keys which strip multiplier in the guard count.
enum class AlphaBetaKeying {
  Printed,  // alpha from m mod 7 times ceil(n/2), beta from n mod 7 times ceil(m/2)
  Swapped,  // alpha from n mod 7 times ceil(n/2), beta from m mod 7 times ceil(m/2)
};

/// 0 for residue 2, 1 for {3,4}, 2 for {5,6}, 3 for {0,1}.
int strip_multiplier(int residue_mod7);

struct Decomposition {
  GridDims dims;
  int a = 0;  // subgrid columns
  int b = 0;  // subgrid rows
  int alpha = 0;  // from m mod 7: pairs of leftover rows
  int beta = 0;   // from n mod 7: pairs of leftover columns
  Rect subgrid;     // [n-a, n) x [m-b, m)
  Rect strip_rows;  // the m-b leftover rows, full width (may be empty)
  Rect strip_cols;  // the n-a leftover columns, full height (may be empty)
};

/// Throws DomainError if n or m < 9.
Decomposition decompose(GridDims dims);

/// ab/7 + 8(a+b-1)/7 + alpha ceil(n/2) + beta ceil(m/2) - alpha beta.
int composite_guard_count(GridDims dims, AlphaBetaKeying keying = AlphaBetaKeying::Printed);

/// A clique of strip cells and the cell its guard currently holds.
struct StripBlock {
  std::vector<Vertex> cells;
  Vertex guard;
};

/// Partition of both strips into cliques, each starting with its guard on
/// its first cell. Count equals alpha ceil(n/2) + beta ceil(m/2) - alpha beta.
std::vector<StripBlock> strip_blocks(const Decomposition& d);

struct CompositeState {
  Decomposition decomposition;
  FiniteStrategyState subgrid;  // in subgrid-local coordinates
  std::vector<StripBlock> blocks;

  Configuration subgrid_guards() const;  // global coordinates
  Configuration strip_guards() const;
  Configuration guards() const;
  /// Index of the strip block owning v, or -1 when v is in the subgrid.
  int block_of(Vertex v) const;

  friend bool operator==(const CompositeState& a, const CompositeState& b);
};

CompositeState composite_init(GridDims dims);

struct CompositeStep {
  AttackResponse response;
  CompositeState state;
};

/// Subgrid attacks go to the border strategy (translated); strip attacks
/// move the owning block's guard onto the attacked cell.
CompositeStep composite_respond(const CompositeState& state, Vertex attack);

}  // namespace eterdom
