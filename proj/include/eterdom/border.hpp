#pragma once

// Finite strategy for n x m grids with n == m == 2 (mod 7), n, m >= 9.
//
// Layout: four corner guards that never move; each side split into 7-cell
// paths between the corners, every path holding 5 guards in one of three
// formations; the (n-2) x (m-2) interior holding a window of a D or D'
// pattern. All paths on one side share a formation.
//
// The strategy only visits states of a precomputed safe set: states from
// which every attack has a legal answer that lands in the set again. The
// safe set depends on positions mod 7 only, so it is computed once on the
// 9x9 grid and reused for every admissible size.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "eterdom/grid.hpp"
#include "eterdom/patterns.hpp"
#include "eterdom/responder.hpp"

namespace eterdom {

enum class Formation : std::uint8_t { Center, LowLeaf, HighLeaf };

std::string to_string(Formation f);
Formation parse_formation(const std::string& text);

/// Guarded offsets along a 7-cell path: Center {1..5}, LowLeaf {0,2,3,4,5},
/// HighLeaf {1,2,3,4,6}.
const std::array<int, 5>& formation_offsets(Formation f);

enum class Side : std::uint8_t { Bottom, Top, Left, Right };  // y = 0, y = m-1, x = 0, x = n-1
enum class Axis : std::uint8_t { Horizontal, Vertical };

std::string to_string(Side s);

using SideFormations = std::array<Formation, 4>;  // indexed by Side

/// Base-3 index of a formation assignment, in [0, 81).
int formation_index(const SideFormations& f);
SideFormations formations_from_index(int index);

struct BorderPathState {
  Side side = Side::Bottom;
  Vertex origin;  // path cell with offset 0
  Axis axis = Axis::Horizontal;
  Formation formation = Formation::Center;

  Vertex cell(int offset) const;
  std::array<Vertex, 5> guards() const;
};

/// Where a border vertex sits: its side, path index and offset along the path.
struct BorderLocation {
  Side side;
  int path;
  int offset;
};

struct FiniteStrategyState {
  GridDims dims;
  PatternSpec interior_spec;
  SideFormations formations{};

  Rect interior_rect() const { return Rect{1, 1, dims.n - 2, dims.m - 2}; }
  std::vector<BorderPathState> border_paths() const;
  std::array<Vertex, 4> corner_guards() const;
  Configuration interior() const;
  Configuration guards() const;

  friend bool operator==(const FiniteStrategyState& a, const FiniteStrategyState& b) {
    return a.dims == b.dims && a.interior_spec == b.interior_spec && a.formations == b.formations;
  }
};

/// Throws DomainError unless n == m == 2 (mod 7) and n, m >= 9.
void require_border_dims(GridDims dims);

/// Border vertex location, or nullopt for corners and interior vertices.
std::optional<BorderLocation> locate_on_border(GridDims dims, Vertex v);

/// nm/7 + 8(m+n-1)/7.
int guard_count(GridDims dims);

/// Corners, Center formations everywhere, and the interior holding the D
/// translate with residue 6 (members (x, y) with 3x + y == 6 mod 7).
FiniteStrategyState init_state(GridDims dims);

struct BorderStep {
  AttackResponse response;
  FiniteStrategyState state;
};

/// Answers one attack. Border attacks keep the interior still: a leaf at
/// offset 0 (6) puts its side in LowLeaf (HighLeaf), any other border
/// vertex puts it back to Center; other sides keep their formation when
/// the safe set allows it. Interior attacks switch the interior to the
/// opposite-phase translate containing the attack, formations changing
/// only as far as needed to stay safe. Throws DomainError for attacks
/// outside the grid and StrategyError if no safe legal successor exists.
BorderStep respond(const FiniteStrategyState& state, Vertex attack);

/// Safe states over (phase, interior residue, formations).
class SafeTable {
 public:
  SafeTable() = default;
  explicit SafeTable(std::vector<std::uint8_t> flags);

  bool contains(Phase phase, int residue, const SideFormations& f) const;
  bool contains(const FiniteStrategyState& s) const;
  std::size_t count() const { return count_; }
  const std::vector<std::uint8_t>& flags() const { return flags_; }

  static constexpr int kStates = 2 * 7 * 81;
  static int index(Phase phase, int residue, int formation_index);

  friend bool operator==(const SafeTable& a, const SafeTable& b) { return a.flags_ == b.flags_; }

 private:
  std::vector<std::uint8_t> flags_;
  std::size_t count_ = 0;
};

/// Greatest fixed point of "every attack has a legal answer inside the set"
/// over all 1134 states of dims.
SafeTable compute_safe_table(GridDims dims);

/// The table of the 9x9 grid, computed on first use.
const SafeTable& border_safe_table();

/// Empty when the state is consistent: guard count, corners, interior equal
/// to the pattern window, and domination. Otherwise a description.
std::string check_state(const FiniteStrategyState& s);

}  // namespace eterdom
