#pragma once

// Answers to a single attack in the Alternating strategy on the infinite
// strong grid.
//
// Every answer is periodic under translation by 7Z^2: inside each 8x8 block
// whose corners are the anchors (the members shared by the old and the new
// pattern) six guards step to their new positions. A "block response" lists
// the four anchors and six moves of the block around the attacked vertex;
// tile_response() replicates it over a scope.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "eterdom/grid.hpp"
#include "eterdom/patterns.hpp"

namespace eterdom {

struct GuardMove {
  Vertex from;
  Vertex to;
  friend auto operator<=>(const GuardMove&, const GuardMove&) = default;
};

struct AttackResponse {
  Vertex attacked;
  std::vector<Vertex> anchors;
  std::vector<GuardMove> moves;

  bool no_moves() const { return moves.empty(); }
  friend bool operator==(const AttackResponse&, const AttackResponse&) = default;
};

/// The eight neighbour offsets of a member (i,j), in lookup order: the four
/// rows printed in the movement table first, then their symmetric partners.
const std::array<Vertex, 8>& canonical_attack_offsets();

/// One row of the response tables, expressed relative to a member at (0,0).
struct ResponseRow {
  Phase phase = Phase::D;
  Vertex offset;                  // attacked vertex minus the member
  std::string origin;             // "table" (transcribed) or "matching" (generated)
  std::vector<Vertex> anchors;    // four block corners
  std::vector<GuardMove> moves;   // six moves, the defender first
};

/// Rows parsed from the embedded response-tables asset.
const std::vector<ResponseRow>& golden_rows();
int golden_tables_version();

/// Looks the attack up in the response tables and returns the block answer
/// around it. Occupied attack -> response without moves. Throws
/// StrategyError if no member of spec is adjacent to the attack.
AttackResponse respond_tabulated(const PatternSpec& spec, Vertex attack);

/// Computes the block answer from scratch: the unique opposite-phase spec
/// containing the attack, and a perfect matching between the two patterns
/// on the 7x7 torus (distance <= 1 under wrap-around), preferring fewest
/// moved guards, then a diagonal defender for doubly covered attacks, then
/// lexicographically smallest assignment. Throws InfeasibleError if no
/// matching exists.
AttackResponse respond_matching_block(const PatternSpec& spec, Vertex attack);

/// respond_matching_block() replicated over every block whose guards lie
/// in scope (see tile_response()).
AttackResponse respond_matching(const PatternSpec& spec, Vertex attack, Rect scope);

/// Replicates a block response by all translations in 7Z^2, keeping moves
/// whose source lies in scope and anchors inside scope.
AttackResponse tile_response(const AttackResponse& block, Rect scope);

/// The target pattern a response moves into: opposite phase, containing
/// the attacked vertex.
PatternSpec response_target(const PatternSpec& spec, Vertex attack);

/// Scope made of whole 8x8 blocks of `block` (shared corners), `tiles` blocks
/// in each direction around it. Windows over such a scope map exactly onto
/// windows of the target pattern.
Rect aligned_scope(const AttackResponse& block, int tiles);

/// Applies all moves simultaneously. Throws TransitionError on a missing
/// source, a repeated source or target, or a target held by a guard that
/// does not move.
Configuration apply(const Configuration& c, const AttackResponse& r);

/// Rows regenerated by the matching responder for every phase and offset.
std::vector<ResponseRow> generate_response_rows();

}  // namespace eterdom
