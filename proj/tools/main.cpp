// Command-line entry point: simulate, verify, oracle, bounds, replay, serve.
//
// Exit codes: 0 success, 2 usage or precondition failure, 3 referee
// violation (or a failed check), 4 resource cap exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "eterdom/border.hpp"
#include "eterdom/bounds.hpp"
#include "eterdom/composite.hpp"
#include "eterdom/errors.hpp"
#include "eterdom/oracle.hpp"
#include "eterdom/patterns.hpp"
#include "eterdom/referee.hpp"
#include "eterdom/responder.hpp"
#include "eterdom/session.hpp"

using namespace eterdom;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;
constexpr int kExitResource = 4;

struct SimulateOptions {
  std::string dims = "9x9";
  std::string strategy = "border";
  std::string attacker = "random";
  std::uint64_t seed = 1;
  int steps = 1000;
  std::string script;
  std::string out = "transcript.jsonl";
};

std::vector<Vertex> parse_script(const std::string& text) {
  // "x,y;x,y;..."
  std::vector<Vertex> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    Vertex v;
    char comma = 0;
    std::istringstream cell(item);
    if (!(cell >> v.x >> comma >> v.y) || comma != ',') throw DomainError("bad script entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int run_simulate(const SimulateOptions& o) {
  AttackerSpec attacker{parse_attacker_kind(o.attacker), o.seed, {}};
  if (attacker.kind == AttackerKind::Scripted) attacker.script = parse_script(o.script);
  const GridDims dims = parse_dims(o.dims);
  for (Vertex v : attacker.script)
    if (!dims.contains(v)) throw DomainError("scripted attack " + to_string(v) + " outside " + to_string(dims));
  const GameTranscript t = simulate(dims, o.strategy, attacker, o.steps);
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw DomainError("cannot write " + o.out);
  write_transcript(out, t);
  std::cout << "strategy " << t.strategy << " on " << to_string(dims) << ", " << t.initial.size()
            << " guards, " << t.steps.size() << " steps, " << t.violation_count() << " violations\n";
  if (!t.error.empty()) std::cout << "strategy error: " << t.error << "\n";
  for (const TranscriptStep& s : t.steps)
    for (const Violation& v : s.verdict.violations)
      std::cout << "step " << s.index << ": " << to_string(v.code) << " " << v.detail << "\n";
  std::cout << "transcript written to " << o.out << "\n";
  return t.clean() ? 0 : kExitViolation;
}

struct CheckRow {
  std::string name;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

CheckRow timed(const std::string& name, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckRow row{name, false, {}, 0};
  try {
    row.detail = body();
    row.ok = row.detail.rfind("FAIL", 0) != 0;
  } catch (const std::exception& e) {
    row.detail = std::string("FAIL exception: ") + e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string check_patterns() {
  int windows = 0;
  for (Phase phase : {Phase::D, Phase::Dprime}) {
    for (const PatternSpec& spec : all_specs(phase)) {
      for (int y = 0; y < 7; ++y)
        for (int x = 0; x < 7; ++x, ++windows)
          if (window(spec, Rect{x, y, 7, 7}).size() != 7) return "FAIL density at " + to_string(Vertex{x, y});
      if (!dominates_region(window(spec, Rect{-1, -1, 32, 32}).guards(), Rect{0, 0, 30, 30}))
        return "FAIL domination for " + to_string(phase);
    }
  }
  return std::to_string(windows) + " windows of 7, all translates dominate";
}

std::string check_tables() {
  int rows = 0;
  for (const ResponseRow& row : golden_rows()) {
    const PatternSpec spec = spec_containing(row.phase, Vertex{0, 0});
    const AttackResponse tab = respond_tabulated(spec, row.offset);
    const AttackResponse gen = respond_matching_block(spec, row.offset);
    const Rect scope = aligned_scope(gen, 1);
    const Configuration before = window(spec, scope);
    if (apply(before, tile_response(tab, scope)) != apply(before, tile_response(gen, scope)))
      return "FAIL row " + to_string(row.phase) + " " + to_string(row.offset);
    ++rows;
  }
  if (rows != 16) return "FAIL expected 16 rows, found " + std::to_string(rows);
  return std::to_string(rows) + " rows agree with the matching responder (asset v" +
         std::to_string(golden_tables_version()) + ")";
}

std::string check_alternation() {
  int cases = 0;
  for (Phase phase : {Phase::D, Phase::Dprime}) {
    const PatternSpec spec = spec_containing(phase, Vertex{0, 0});
    for (Vertex attack : {Vertex{0, 0}, Vertex{0, -1}, Vertex{1, -1}, Vertex{1, 0}, Vertex{1, 1},
                          Vertex{-1, 1}, Vertex{0, 1}, Vertex{-1, 0}, Vertex{-1, -1}}) {
      const AttackResponse block = respond_matching_block(spec, attack);
      const Rect scope = block.anchors.empty() ? Rect{-21, -21, 43, 43} : aligned_scope(block, 3);
      const Configuration before = window(spec, scope);
      const Configuration after = apply(before, tile_response(block, scope));
      if (!validate_transition(before, after, attack, scope.inset(1)).legal())
        return "FAIL illegal transition for " + to_string(attack);
      const auto id = identify(after, scope);
      const Phase expect = contains(spec, attack) ? phase : opposite(phase);
      if (!id || id->phase != expect || !contains(*id, attack))
        return "FAIL phase not recovered for " + to_string(attack);
      ++cases;
    }
  }
  return std::to_string(cases) + " attacks answered legally with the phase switching";
}

std::string check_simulation(const std::string& strategy, GridDims dims, AttackerKind kind, int steps) {
  const GameTranscript t = simulate(dims, strategy, AttackerSpec{kind, 7, {}}, steps);
  if (!t.clean())
    return "FAIL " + std::to_string(t.violation_count()) + " violations" + (t.error.empty() ? "" : ", " + t.error);
  return std::to_string(t.steps.size()) + " steps, " + std::to_string(t.initial.size()) + " guards";
}

int run_verify(int steps) {
  std::vector<CheckRow> rows;
  rows.push_back(timed("pattern density/domination", check_patterns));
  rows.push_back(timed("response tables", check_tables));
  rows.push_back(timed("infinite-grid alternation", check_alternation));
  for (auto [strategy, dims] : {std::pair{"border", GridDims{9, 9}}, std::pair{"border", GridDims{16, 16}},
                                std::pair{"border", GridDims{9, 16}}, std::pair{"composite", GridDims{13, 20}}}) {
    for (AttackerKind kind : {AttackerKind::Random, AttackerKind::Greedy}) {
      const std::string name = std::string(strategy) + " " + to_string(dims) + " " + to_string(kind);
      rows.push_back(timed(name, [&, s = std::string(strategy), d = dims] {
        return check_simulation(s, d, kind, steps);
      }));
    }
  }
  bool all = true;
  for (const CheckRow& r : rows) {
    std::cout << std::left << std::setw(30) << r.name << (r.ok ? " ok    " : " FAIL  ") << std::right
              << std::fixed << std::setprecision(2) << std::setw(7) << r.seconds << "s  " << r.detail << "\n";
    all = all && r.ok;
  }
  std::cout << (all ? "all checks passed\n" : "some checks failed\n");
  return all ? 0 : kExitViolation;
}

int run_oracle(const std::string& graph, int k_max, int cap, bool verbose) {
  const SmallGraph g = SmallGraph::parse(graph);
  const OracleLimits limits{cap};
  const auto value = eternal_domination_number(g, k_max > 0 ? std::optional<int>(k_max) : std::nullopt, limits);
  if (verbose)
    std::cerr << g.name() << ": " << g.size() << " vertices, " << g.edge_count()
              << " edges, domination number " << domination_number(g, limits) << "\n";
  if (value) std::cout << *value << "\n";
  else std::cout << "exceeds k_max\n";
  return 0;
}

struct BoundsOptions {
  bool threshold = false;
  long long exact_scan = 0;
  std::string n_range;
  std::string m_range;
  std::string mode = "real";
  std::string out;
};

int run_bounds(const BoundsOptions& o) {
  if (o.threshold) {
    std::cout << asymptotic_threshold() << "\n";
    return 0;
  }
  if (o.exact_scan > 0) {
    const ExactThresholdScan s = exact_threshold_scan(o.exact_scan);
    std::cout << "last_win " << s.last_win << "\nfirst_loss " << s.first_loss << "\nlimit " << s.limit << "\n";
    return 0;
  }
  if (o.n_range.empty() || o.m_range.empty())
    throw DomainError("bounds needs --threshold, --exact-scan, or both --n-range and --m-range");
  const auto cells = scan_region(parse_range(o.n_range), parse_range(o.m_range), parse_ceiling_mode(o.mode));
  if (o.out.empty() || o.out == "-") {
    write_csv(std::cout, cells);
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw DomainError("cannot write " + o.out);
    write_csv(out, cells);
  }
  return 0;
}

int run_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  const GameTranscript t = read_transcript(in);
  const ReplayReport report = replay(t);
  if (!report.identical) {
    std::cout << "replay differs: " << report.difference << "\n";
    return kExitViolation;
  }
  std::cout << "replay identical over " << report.steps_checked << " steps\n";
  return t.clean() ? 0 : kExitViolation;
}

int run_serve(const std::string& host, int port) {
  SessionServer server;
  std::cout << "serving sessions on " << host << ":" << port << std::endl;
  server.run(host, port);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eternal domination strategies on strong grids"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "play a strategy against an attacker and write a transcript");
  simulate_cmd->add_option("--dims", sim.dims, "grid size NxM")->capture_default_str();
  simulate_cmd->add_option("--strategy", sim.strategy, "border | composite | idle")->capture_default_str();
  simulate_cmd->add_option("--attacker", sim.attacker, "random | greedy | scripted")->capture_default_str();
  simulate_cmd->add_option("--seed", sim.seed, "random attacker seed")->capture_default_str();
  simulate_cmd->add_option("--steps", sim.steps, "number of attacks")->capture_default_str()->check(CLI::NonNegativeNumber);
  simulate_cmd->add_option("--script", sim.script, "scripted attacks as x,y;x,y;...");
  simulate_cmd->add_option("--out", sim.out, "transcript path (JSON Lines)")->capture_default_str();

  int verify_steps = 500;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant battery and print a summary");
  verify_cmd->add_option("--steps", verify_steps, "attacks per simulation")->capture_default_str();

  std::string graph;
  int k_max = 0;
  int cap = 16;
  bool verbose = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact eternal domination number of a small graph");
  oracle_cmd->add_option("--graph", graph, "path:N | cycle:N | grid:NxM | file:PATH")->required();
  oracle_cmd->add_option("--k-max", k_max, "largest guard count to try (default ceil(|V|/2)+1)");
  oracle_cmd->add_option("--cap", cap, "vertex cap")->capture_default_str();
  oracle_cmd->add_flag("-v,--verbose", verbose, "also report graph size and domination number");

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "bound comparison scans and the asymptotic crossover");
  bounds_cmd->add_flag("--threshold", bounds.threshold, "print the largest n where ours has the smaller slope");
  bounds_cmd->add_option("--exact-scan", bounds.exact_scan, "slope comparison with integer k up to this n");
  bounds_cmd->add_option("--n-range", bounds.n_range, "lo:hi[:step]");
  bounds_cmd->add_option("--m-range", bounds.m_range, "lo:hi[:step]");
  bounds_cmd->add_option("--ceiling-mode", bounds.mode, "exact | real")->capture_default_str();
  bounds_cmd->add_option("--out", bounds.out, "CSV path (default stdout)");

  std::string replay_path;
  auto* replay_cmd = app.add_subcommand("replay", "re-run a transcript and compare it step by step");
  replay_cmd->add_option("transcript", replay_path, "JSON Lines transcript")->required();

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve_cmd = app.add_subcommand("serve", "HTTP session backend for interactive play");
  serve_cmd->add_option("--host", host, "bind address")->capture_default_str();
  serve_cmd->add_option("--port", port, "bind port")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*simulate_cmd) return run_simulate(sim);
    if (*verify_cmd) return run_verify(verify_steps);
    if (*oracle_cmd) return run_oracle(graph, k_max, cap, verbose);
    if (*bounds_cmd) return run_bounds(bounds);
    if (*replay_cmd) return run_replay(replay_path);
    if (*serve_cmd) return run_serve(host, port);
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
