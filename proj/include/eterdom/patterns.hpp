#pragma once

// The two periodic dominating families D and D'. Both are cosets of
// index-7 sublattices of Z^2:
//
//   D  : generated by (2,1) and (7,7)  (equivalently (2,1), (-1,3))
//   D' : generated by (1,3) and (7,7)  (equivalently (1,3), (2,-1))
//
// Each lattice is the kernel of a linear form mod 7 (3x + y for D,
// x + 2y for D'), so membership is a single residue comparison.

#include <array>
#include <optional>
#include <string>

#include "eterdom/grid.hpp"

namespace eterdom {

enum class Phase { D, Dprime };

inline Phase opposite(Phase p) { return p == Phase::D ? Phase::Dprime : Phase::D; }
std::string to_string(Phase p);
/// Accepts "D" and "Dprime" (also "D'"). Throws DomainError otherwise.
Phase parse_phase(const std::string& text);

/// Residue of v under the phase's defining linear form, in [0, 7).
int residue(Phase phase, Vertex v);

/// One translate of D or D'. Any member may serve as base; equality
/// compares member sets.
struct PatternSpec {
  Phase phase = Phase::D;
  Vertex base{};

  /// Same member set with base moved to the member of minimal (y, x) in
  /// the 7x7 tile [0,7)^2, i.e. the unique member on row 0 of that tile.
  PatternSpec canonical() const;
  int residue() const { return eterdom::residue(phase, base); }

  friend bool operator==(const PatternSpec& a, const PatternSpec& b) {
    return a.phase == b.phase && a.residue() == b.residue();
  }
};

/// The canonical spec of `phase` whose residue is r.
PatternSpec spec_with_residue(Phase phase, int r);
/// The unique spec of `phase` that contains v.
PatternSpec spec_containing(Phase phase, Vertex v);
/// All seven translates of a phase, ordered by residue.
std::array<PatternSpec, 7> all_specs(Phase phase);

bool contains(const PatternSpec& spec, Vertex v);

/// All members inside r.
Configuration window(const PatternSpec& spec, Rect r);

/// The pattern whose window over r is exactly c, if any.
std::optional<PatternSpec> identify(const Configuration& c, Rect r);

/// Generators of the phase lattice (a short vector and the (7,7) period).
std::array<Vertex, 2> lattice_basis(Phase phase);

}  // namespace eterdom
