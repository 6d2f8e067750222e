#include "eterdom/referee.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "eterdom/border.hpp"
#include "eterdom/composite.hpp"
#include "eterdom/errors.hpp"
#include "eterdom/matching.hpp"

namespace eterdom {

namespace {

const std::array<std::pair<ViolationCode, const char*>, 6> kCodeNames{{
    {ViolationCode::NotAdjacentMove, "NOT_ADJACENT_MOVE"},
    {ViolationCode::VertexCollision, "VERTEX_COLLISION"},
    {ViolationCode::AttackUnserved, "ATTACK_UNSERVED"},
    {ViolationCode::DominationLost, "DOMINATION_LOST"},
    {ViolationCode::GuardCountChanged, "GUARD_COUNT_CHANGED"},
    {ViolationCode::SourceMissing, "SOURCE_MISSING"},
}};

int matched_guards(const Configuration& before, const Configuration& after) {
  const auto b = before.guards();
  const auto a = after.guards();
  BipartiteMatcher matcher(static_cast<int>(b.size()), static_cast<int>(a.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (adjacent_or_equal(b[i], a[j])) matcher.add_edge(static_cast<int>(i), static_cast<int>(j));
  return matcher.solve();
}

TransitionVerdict judge(const Configuration& before, const Configuration& after, Vertex attack,
                        bool dominates, const std::string& undominated) {
  TransitionVerdict v;
  if (before.size() != after.size()) {
    v.violations.push_back({ViolationCode::GuardCountChanged,
                            std::to_string(before.size()) + " guards before, " +
                                std::to_string(after.size()) + " after"});
  } else if (!king_matching_exists(before.guards(), after.guards())) {
    v.violations.push_back({ViolationCode::NotAdjacentMove,
                            "only " + std::to_string(matched_guards(before, after)) + " of " +
                                std::to_string(before.size()) +
                                " guards can reach the new positions in one step"});
  }
  if (!after.contains(attack))
    v.violations.push_back({ViolationCode::AttackUnserved, "no guard on " + to_string(attack)});
  if (!dominates) v.violations.push_back({ViolationCode::DominationLost, undominated});
  return v;
}

}  // namespace

std::string to_string(ViolationCode code) {
  for (const auto& [c, name] : kCodeNames)
    if (c == code) return name;
  return "?";
}

ViolationCode parse_violation_code(const std::string& text) {
  for (const auto& [c, name] : kCodeNames)
    if (text == name) return c;
  throw DomainError("unknown violation code '" + text + "'");
}

bool TransitionVerdict::has(ViolationCode code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

TransitionVerdict validate_transition(const Configuration& before, const Configuration& after,
                                      Vertex attack, GridDims dims) {
  if (!dims.contains(attack))
    throw DomainError("attack " + to_string(attack) + " outside " + to_string(dims));
  for (Vertex g : before)
    if (!dims.contains(g)) throw DomainError("guard " + to_string(g) + " outside " + to_string(dims));
  std::vector<Violation> off_grid;
  for (Vertex g : after)
    if (!dims.contains(g))
      off_grid.push_back({ViolationCode::NotAdjacentMove, "guard moved off the grid to " + to_string(g)});

  std::string undominated;
  const auto dist = distance_field(after, dims);
  for (std::size_t i = 0; i < dist.size() && undominated.empty(); ++i)
    if (dist[i] != 0 && dist[i] != 1)
      undominated = to_string(Vertex{static_cast<int>(i) % dims.n, static_cast<int>(i) / dims.n}) +
                    " is not dominated";
  TransitionVerdict v = judge(before, after, attack, undominated.empty(), undominated);
  v.violations.insert(v.violations.begin(), off_grid.begin(), off_grid.end());
  return v;
}

TransitionVerdict validate_transition(const Configuration& before, const Configuration& after,
                                      Vertex attack, Rect domination_scope) {
  const bool dominates = dominates_region(after.guards(), domination_scope);
  return judge(before, after, attack, dominates,
               dominates ? std::string{} : "window is not dominated");
}

MoveListCheck apply_reported(const Configuration& before, const AttackResponse& r) {
  MoveListCheck out;
  std::set<Vertex> sources;
  std::map<Vertex, int> arrivals;
  for (const GuardMove& mv : r.moves) {
    if (!before.contains(mv.from) || !sources.insert(mv.from).second) {
      out.violations.push_back({ViolationCode::SourceMissing, "no guard available at " + to_string(mv.from)});
      continue;
    }
    if (chebyshev_distance(mv.from, mv.to) > 1)
      out.violations.push_back({ViolationCode::NotAdjacentMove,
                                to_string(mv.from) + " -> " + to_string(mv.to)});
    ++arrivals[mv.to];
  }
  for (Vertex g : before)
    if (!sources.count(g)) ++arrivals[g];
  std::vector<Vertex> after;
  for (const auto& [v, count] : arrivals) {
    if (count > 1)
      out.violations.push_back({ViolationCode::VertexCollision,
                                std::to_string(count) + " guards on " + to_string(v)});
    after.push_back(v);
  }
  out.after = Configuration(std::move(after));
  return out;
}

namespace {

Json roles_json(const std::vector<std::pair<Vertex, std::string>>& roles) {
  Json guards = Json::array();
  Json names = Json::array();
  for (const auto& [v, role] : roles) {
    guards.push_back(v);
    names.push_back(role);
  }
  return Json{{"guards", guards}, {"roles", names}};
}

void add_border_roles(std::vector<std::pair<Vertex, std::string>>& roles,
                      const FiniteStrategyState& s, Vertex origin) {
  for (Vertex c : s.corner_guards()) roles.push_back({c + origin, "corner"});
  for (const BorderPathState& p : s.border_paths())
    for (Vertex g : p.guards()) roles.push_back({g + origin, "border"});
  for (Vertex g : s.interior()) roles.push_back({g + origin, "interior"});
}

Json formations_json(const SideFormations& f) {
  Json out = Json::object();
  for (int i = 0; i < 4; ++i) out[to_string(static_cast<Side>(i))] = to_string(f[i]);
  return out;
}

Json border_snapshot(const std::string& id, GridDims dims, const FiniteStrategyState& s) {
  std::vector<std::pair<Vertex, std::string>> roles;
  add_border_roles(roles, s, Vertex{0, 0});
  std::sort(roles.begin(), roles.end());
  Json j = roles_json(roles);
  j["strategy"] = id;
  j["dims"] = dims;
  j["phase"] = s.interior_spec.phase;
  j["interior_spec"] = s.interior_spec.canonical();
  j["formations"] = formations_json(s.formations);
  return j;
}

class BorderStrategy : public Strategy {
 public:
  explicit BorderStrategy(GridDims dims) : state_(init_state(dims)) {}
  std::string id() const override { return "border"; }
  GridDims dims() const override { return state_.dims; }
  Configuration guards() const override { return state_.guards(); }
  AttackResponse respond(Vertex attack) override {
    BorderStep step = eterdom::respond(state_, attack);
    state_ = std::move(step.state);
    return std::move(step.response);
  }
  Json snapshot() const override { return border_snapshot(id(), state_.dims, state_); }

 private:
  FiniteStrategyState state_;
};

class IdleStrategy : public Strategy {
 public:
  explicit IdleStrategy(GridDims dims) : state_(init_state(dims)) {}
  std::string id() const override { return "idle"; }
  GridDims dims() const override { return state_.dims; }
  Configuration guards() const override { return state_.guards(); }
  AttackResponse respond(Vertex attack) override {
    if (!state_.dims.contains(attack))
      throw DomainError("attack " + to_string(attack) + " outside " + to_string(state_.dims));
    return AttackResponse{attack, {}, {}};
  }
  Json snapshot() const override { return border_snapshot(id(), state_.dims, state_); }

 private:
  FiniteStrategyState state_;
};

class CompositeStrategy : public Strategy {
 public:
  explicit CompositeStrategy(GridDims dims) : state_(composite_init(dims)) {}
  std::string id() const override { return "composite"; }
  GridDims dims() const override { return state_.decomposition.dims; }
  Configuration guards() const override { return state_.guards(); }
  AttackResponse respond(Vertex attack) override {
    CompositeStep step = composite_respond(state_, attack);
    state_ = std::move(step.state);
    return std::move(step.response);
  }
  Json snapshot() const override {
    const Decomposition& d = state_.decomposition;
    std::vector<std::pair<Vertex, std::string>> roles;
    add_border_roles(roles, state_.subgrid, Vertex{d.subgrid.x0, d.subgrid.y0});
    for (const StripBlock& blk : state_.blocks) roles.push_back({blk.guard, "strip"});
    std::sort(roles.begin(), roles.end());
    Json j = roles_json(roles);
    j["strategy"] = id();
    j["dims"] = d.dims;
    j["phase"] = state_.subgrid.interior_spec.phase;
    j["interior_spec"] = state_.subgrid.interior_spec.canonical();
    j["formations"] = formations_json(state_.subgrid.formations);
    j["subgrid"] = Json{{"origin", Vertex{d.subgrid.x0, d.subgrid.y0}}, {"dims", GridDims{d.a, d.b}}};
    j["alpha"] = d.alpha;
    j["beta"] = d.beta;
    Json strips = Json::array();
    for (const StripBlock& blk : state_.blocks)
      strips.push_back(Json{{"cells", blk.cells}, {"guard", blk.guard}});
    j["strips"] = strips;
    return j;
  }

 private:
  CompositeState state_;
};

class RandomAttacker : public Attacker {
 public:
  explicit RandomAttacker(std::uint64_t seed) : rng_(seed) {}
  std::optional<Vertex> next(const Configuration&, GridDims dims) override {
    const int x = static_cast<int>(rng_() % static_cast<std::uint64_t>(dims.n));
    const int y = static_cast<int>(rng_() % static_cast<std::uint64_t>(dims.m));
    return Vertex{x, y};
  }

 private:
  std::mt19937_64 rng_;
};

class GreedyAttacker : public Attacker {
 public:
  std::optional<Vertex> next(const Configuration& guards, GridDims dims) override {
    return greedy_attack(guards, dims);
  }
};

class ScriptedAttacker : public Attacker {
 public:
  explicit ScriptedAttacker(std::vector<Vertex> script) : script_(std::move(script)) {}
  std::optional<Vertex> next(const Configuration&, GridDims) override {
    if (pos_ >= script_.size()) return std::nullopt;
    return script_[pos_++];
  }

 private:
  std::vector<Vertex> script_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Strategy> make_strategy(const std::string& id, GridDims dims) {
  if (id == "border") return std::make_unique<BorderStrategy>(dims);
  if (id == "composite") return std::make_unique<CompositeStrategy>(dims);
  if (id == "idle") return std::make_unique<IdleStrategy>(dims);
  throw DomainError("unknown strategy '" + id + "'");
}

const std::vector<std::string>& strategy_ids() {
  static const std::vector<std::string> ids{"border", "composite", "idle"};
  return ids;
}

Vertex greedy_attack(const Configuration& c, GridDims dims) {
  const auto dist = distance_field(c, dims);
  Vertex best{0, 0};
  int best_d = -2;
  for (int x = 0; x < dims.n; ++x) {
    for (int y = 0; y < dims.m; ++y) {
      int d = dist[static_cast<std::size_t>(y) * dims.n + x];
      if (d < 0) d = dims.n + dims.m;  // no guards at all
      if (d > best_d) {
        best_d = d;
        best = {x, y};
      }
    }
  }
  return best;
}

std::string to_string(AttackerKind k) {
  switch (k) {
    case AttackerKind::Random: return "random";
    case AttackerKind::Greedy: return "greedy";
    case AttackerKind::Scripted: return "scripted";
  }
  return "?";
}

AttackerKind parse_attacker_kind(const std::string& text) {
  for (AttackerKind k : {AttackerKind::Random, AttackerKind::Greedy, AttackerKind::Scripted})
    if (to_string(k) == text) return k;
  throw DomainError("unknown attacker '" + text + "'");
}

std::unique_ptr<Attacker> make_attacker(const AttackerSpec& spec) {
  switch (spec.kind) {
    case AttackerKind::Random: return std::make_unique<RandomAttacker>(spec.seed);
    case AttackerKind::Greedy: return std::make_unique<GreedyAttacker>();
    case AttackerKind::Scripted: return std::make_unique<ScriptedAttacker>(spec.script);
  }
  throw DomainError("unknown attacker kind");
}

bool GameTranscript::clean() const { return error.empty() && violation_count() == 0; }

int GameTranscript::violation_count() const {
  int n = 0;
  for (const TranscriptStep& s : steps) n += static_cast<int>(s.verdict.violations.size());
  return n;
}

GameTranscript simulate(GridDims dims, const std::string& strategy, const AttackerSpec& attacker,
                        int steps) {
  if (steps < 0) throw DomainError("step count must be non-negative");
  GameTranscript t;
  t.dims = dims;
  t.strategy = strategy;
  t.attacker = attacker;
  t.requested_steps = steps;
  auto defender = make_strategy(strategy, dims);
  auto attacks = make_attacker(attacker);
  t.initial = defender->guards();
  Configuration current = t.initial;

  for (int i = 0; i < steps; ++i) {
    const auto attack = attacks->next(current, dims);
    if (!attack) break;
    if (!dims.contains(*attack))
      throw DomainError("attack " + to_string(*attack) + " outside " + to_string(dims));
    AttackResponse response;
    try {
      response = defender->respond(*attack);
    } catch (const std::exception& e) {
      t.error = "step " + std::to_string(i) + ": " + e.what();
      break;
    }
    MoveListCheck moved = apply_reported(current, response);
    TranscriptStep step{i, *attack, response, validate_transition(current, moved.after, *attack, dims),
                        configuration_hash(moved.after)};
    step.verdict.violations.insert(step.verdict.violations.begin(), moved.violations.begin(),
                                   moved.violations.end());
    const bool legal = step.verdict.legal();
    t.steps.push_back(std::move(step));
    if (!legal) break;
    if (defender->guards() != moved.after) {
      t.error = "step " + std::to_string(i) + ": strategy state differs from its reported moves";
      break;
    }
    current = std::move(moved.after);
  }
  return t;
}

Json to_json_value(const TransitionVerdict& v) {
  Json violations = Json::array();
  for (const Violation& x : v.violations)
    violations.push_back(Json{{"code", to_string(x.code)}, {"detail", x.detail}});
  return Json{{"legal", v.legal()}, {"violations", violations}};
}

TransitionVerdict verdict_from_json(const Json& j) {
  TransitionVerdict v;
  for (const Json& x : j.at("violations"))
    v.violations.push_back({parse_violation_code(x.at("code").get<std::string>()),
                            x.at("detail").get<std::string>()});
  return v;
}

namespace {

Json attacker_json(const AttackerSpec& a) {
  Json j{{"kind", to_string(a.kind)}, {"seed", a.seed}};
  if (a.kind == AttackerKind::Scripted) j["script"] = a.script;
  return j;
}

std::uint64_t parse_hash(const std::string& hex) { return std::stoull(hex, nullptr, 16); }

}  // namespace

void write_transcript(std::ostream& out, const GameTranscript& t) {
  const Json header{{"type", "header"},
                    {"dims", t.dims},
                    {"strategy", t.strategy},
                    {"attacker", attacker_json(t.attacker)},
                    {"steps", t.requested_steps},
                    {"initial", t.initial},
                    {"initial_hash", hash_hex(configuration_hash(t.initial))}};
  out << header.dump() << '\n';
  for (const TranscriptStep& s : t.steps) {
    const Json line{{"type", "step"},
                    {"index", s.index},
                    {"attack", s.attack},
                    {"response", s.response},
                    {"verdict", to_json_value(s.verdict)},
                    {"hash", hash_hex(s.hash)}};
    out << line.dump() << '\n';
  }
  if (!t.error.empty()) out << Json{{"type", "error"}, {"message", t.error}}.dump() << '\n';
}

std::string transcript_jsonl(const GameTranscript& t) {
  std::ostringstream out;
  write_transcript(out, t);
  return out.str();
}

GameTranscript read_transcript(std::istream& in) {
  GameTranscript t;
  std::string line;
  bool have_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw DomainError("transcript line " + std::to_string(line_no) + ": " + e.what());
    }
    const std::string type = j.at("type").get<std::string>();
    if (type == "header") {
      t.dims = j.at("dims").get<GridDims>();
      t.strategy = j.at("strategy").get<std::string>();
      const Json& a = j.at("attacker");
      t.attacker.kind = parse_attacker_kind(a.at("kind").get<std::string>());
      t.attacker.seed = a.at("seed").get<std::uint64_t>();
      if (a.contains("script")) t.attacker.script = a.at("script").get<std::vector<Vertex>>();
      t.requested_steps = j.at("steps").get<int>();
      t.initial = j.at("initial").get<Configuration>();
      have_header = true;
    } else if (type == "step") {
      if (!have_header) throw DomainError("transcript step before header");
      t.steps.push_back({j.at("index").get<int>(), j.at("attack").get<Vertex>(),
                         j.at("response").get<AttackResponse>(), verdict_from_json(j.at("verdict")),
                         parse_hash(j.at("hash").get<std::string>())});
    } else if (type == "error") {
      t.error = j.at("message").get<std::string>();
    } else {
      throw DomainError("unknown transcript line type '" + type + "'");
    }
  }
  if (!have_header) throw DomainError("transcript has no header");
  return t;
}

ReplayReport replay(const GameTranscript& recorded) {
  AttackerSpec script{AttackerKind::Scripted, 0, {}};
  for (const TranscriptStep& s : recorded.steps) script.script.push_back(s.attack);
  const GameTranscript again =
      simulate(recorded.dims, recorded.strategy, script, static_cast<int>(script.script.size()));

  ReplayReport report;
  if (again.initial != recorded.initial) {
    report.difference = "initial configuration differs";
    return report;
  }
  for (std::size_t i = 0; i < recorded.steps.size(); ++i) {
    if (i >= again.steps.size()) {
      report.difference = "replay stopped before step " + std::to_string(i);
      return report;
    }
    const TranscriptStep& a = recorded.steps[i];
    const TranscriptStep& b = again.steps[i];
    if (!(a.response == b.response) || !(a.verdict == b.verdict) || a.hash != b.hash) {
      report.difference = "step " + std::to_string(i) + " differs";
      return report;
    }
    ++report.steps_checked;
  }
  if (again.steps.size() != recorded.steps.size() || again.error.empty() != recorded.error.empty()) {
    report.difference = "game length or outcome differs";
    return report;
  }
  report.identical = true;
  return report;
}

}  // namespace eterdom
