#include "eterdom/patterns.hpp"

#include <vector>

#include "eterdom/errors.hpp"

namespace eterdom {

namespace {

int mod7(long long v) {
  const int r = static_cast<int>(v % 7);
  return r < 0 ? r + 7 : r;
}

// x-coordinate in [0,7) of the member on row y of the coset with residue r.
int column_on_row(Phase phase, int r, int y) {
  // D : 3x + y == r  ->  x == 5 (r - y)   (5 = 3^-1 mod 7)
  // D': x + 2y == r  ->  x == r - 2y
  if (phase == Phase::D) return mod7(5LL * (r - y));
  return mod7(static_cast<long long>(r) - 2LL * y);
}

}  // namespace

std::string to_string(Phase p) { return p == Phase::D ? "D" : "Dprime"; }

Phase parse_phase(const std::string& text) {
  if (text == "D") return Phase::D;
  if (text == "Dprime" || text == "D'") return Phase::Dprime;
  throw DomainError("unknown phase '" + text + "'");
}

int residue(Phase phase, Vertex v) {
  if (phase == Phase::D) return mod7(3LL * v.x + v.y);
  return mod7(static_cast<long long>(v.x) + 2LL * v.y);
}

PatternSpec PatternSpec::canonical() const { return spec_with_residue(phase, residue()); }

PatternSpec spec_with_residue(Phase phase, int r) {
  return PatternSpec{phase, Vertex{column_on_row(phase, mod7(r), 0), 0}};
}

PatternSpec spec_containing(Phase phase, Vertex v) {
  return spec_with_residue(phase, residue(phase, v));
}

std::array<PatternSpec, 7> all_specs(Phase phase) {
  std::array<PatternSpec, 7> out;
  for (int r = 0; r < 7; ++r) out[r] = spec_with_residue(phase, r);
  return out;
}

bool contains(const PatternSpec& spec, Vertex v) {
  return residue(spec.phase, v) == spec.residue();
}

Configuration window(const PatternSpec& spec, Rect r) {
  std::vector<Vertex> members;
  members.reserve(static_cast<std::size_t>(r.w) * r.h / 7 + 2 * r.h);
  const int res = spec.residue();
  for (int y = r.y0; y < r.y1(); ++y) {
    const int first = r.x0 + mod7(static_cast<long long>(column_on_row(spec.phase, res, y)) - r.x0);
    for (int x = first; x < r.x1(); x += 7) members.push_back({x, y});
  }
  return Configuration(std::move(members));
}

std::optional<PatternSpec> identify(const Configuration& c, Rect r) {
  std::optional<PatternSpec> found;
  for (Phase phase : {Phase::D, Phase::Dprime}) {
    for (const PatternSpec& spec : all_specs(phase)) {
      if (window(spec, r) != c) continue;
      if (found) return std::nullopt;  // window too small to tell translates apart
      found = spec;
    }
  }
  return found;
}

std::array<Vertex, 2> lattice_basis(Phase phase) {
  if (phase == Phase::D) return {Vertex{2, 1}, Vertex{7, 7}};
  return {Vertex{1, 3}, Vertex{7, 7}};
}

}  // namespace eterdom
