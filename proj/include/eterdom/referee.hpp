#pragma once

// Game loop and legality checks for the all-guards-move model: after an
// attack every guard may step to a neighbour or stay, no two guards may
// share a vertex, the attacked vertex must end up guarded and the guards
// must still dominate.
//
// Legality of a transition is decided from the two configurations alone
// (a perfect king-step matching must exist), so a strategy cannot pass by
// mislabelling its moves. Reported move lists are checked separately.

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "eterdom/grid.hpp"
#include "eterdom/json_io.hpp"
#include "eterdom/responder.hpp"

namespace eterdom {

enum class ViolationCode {
  NotAdjacentMove,
  VertexCollision,
  AttackUnserved,
  DominationLost,
  GuardCountChanged,
  SourceMissing,
};

/// "NOT_ADJACENT_MOVE", "VERTEX_COLLISION", ...
std::string to_string(ViolationCode code);
ViolationCode parse_violation_code(const std::string& text);

struct Violation {
  ViolationCode code;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct TransitionVerdict {
  std::vector<Violation> violations;
  bool legal() const { return violations.empty(); }
  bool has(ViolationCode code) const;
  friend bool operator==(const TransitionVerdict&, const TransitionVerdict&) = default;
};

/// Legal iff |after| = |before|, a perfect matching of king steps takes
/// before onto after, the attack is in after and after dominates dims.
/// Throws DomainError if a guard or the attack lies outside dims.
TransitionVerdict validate_transition(const Configuration& before, const Configuration& after,
                                      Vertex attack, GridDims dims);

/// Same rules on the infinite grid, with domination checked over
/// `domination_scope` only (windows of periodic patterns).
TransitionVerdict validate_transition(const Configuration& before, const Configuration& after,
                                      Vertex attack, Rect domination_scope);

/// Applies a reported move list without throwing. Missing or repeated
/// sources, moves longer than one step and collisions are reported; guards
/// that collide merge, which the count check then also catches.
struct MoveListCheck {
  Configuration after;
  std::vector<Violation> violations;
};
MoveListCheck apply_reported(const Configuration& before, const AttackResponse& r);

/// A defending strategy on a finite grid. respond() advances the state.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string id() const = 0;
  virtual GridDims dims() const = 0;
  virtual Configuration guards() const = 0;
  virtual AttackResponse respond(Vertex attack) = 0;
  /// {"dims", "strategy", "guards", "roles", "phase", "formations", ...}
  virtual Json snapshot() const = 0;
};

/// "border" (n == m == 2 mod 7), "composite" (any n, m >= 9) or "idle"
/// (border layout whose guards never move; a deliberately losing fixture).
/// Throws DomainError for unknown ids or unsupported dims.
std::unique_ptr<Strategy> make_strategy(const std::string& id, GridDims dims);
const std::vector<std::string>& strategy_ids();

/// Farthest vertex from the guards (Chebyshev), smallest (x, y) on ties.
Vertex greedy_attack(const Configuration& c, GridDims dims);

enum class AttackerKind { Random, Greedy, Scripted };
std::string to_string(AttackerKind k);
AttackerKind parse_attacker_kind(const std::string& text);

struct AttackerSpec {
  AttackerKind kind = AttackerKind::Random;
  std::uint64_t seed = 0;
  std::vector<Vertex> script;
};

class Attacker {
 public:
  virtual ~Attacker() = default;
  /// Next attack, or nullopt when a script is exhausted.
  virtual std::optional<Vertex> next(const Configuration& guards, GridDims dims) = 0;
};

/// Random draws x = r mod n then y = r mod m from mt19937_64(seed).
std::unique_ptr<Attacker> make_attacker(const AttackerSpec& spec);

struct TranscriptStep {
  int index = 0;
  Vertex attack;
  AttackResponse response;
  TransitionVerdict verdict;
  std::uint64_t hash = 0;  // of the configuration after the step
};

struct GameTranscript {
  GridDims dims;
  std::string strategy;
  AttackerSpec attacker;
  int requested_steps = 0;
  Configuration initial;
  std::vector<TranscriptStep> steps;
  std::string error;  // strategy failure that ended the game early

  bool clean() const;  // every verdict legal and no error
  int violation_count() const;
};

/// attack -> respond -> validate, halting on the first violation or
/// strategy error. Strategy construction errors propagate.
GameTranscript simulate(GridDims dims, const std::string& strategy, const AttackerSpec& attacker,
                        int steps);

/// JSON Lines: a header line, then one line per step, then an error line
/// if the game ended on a strategy failure.
void write_transcript(std::ostream& out, const GameTranscript& t);
std::string transcript_jsonl(const GameTranscript& t);
GameTranscript read_transcript(std::istream& in);

struct ReplayReport {
  bool identical = false;
  int steps_checked = 0;
  std::string difference;
};

/// Plays the recorded attacks against a fresh strategy and compares every
/// response, verdict and hash.
ReplayReport replay(const GameTranscript& recorded);

Json to_json_value(const TransitionVerdict& v);
TransitionVerdict verdict_from_json(const Json& j);

}  // namespace eterdom
