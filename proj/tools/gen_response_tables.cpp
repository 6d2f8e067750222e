// Writes the response tables asset. The four D -> D' rows that were worked
// out by hand are transcribed below and must agree, as sets, with what the
// matching responder computes; every other row comes from the responder.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>

#include "eterdom/json_io.hpp"
#include "eterdom/responder.hpp"

using namespace eterdom;

namespace {

struct HandRow {
  Vertex offset;
  std::vector<Vertex> anchors;
  std::vector<GuardMove> moves;
};

// Relative to a D member at (0, 0).
const std::vector<HandRow> kHandRows = {
    {{0, -1},
     {{-1, 3}, {-1, -4}, {6, 3}, {6, -4}},
     {{{0, 0}, {0, -1}}, {{1, -3}, {2, -2}}, {{3, -2}, {4, -3}},
      {{5, -1}, {5, 0}}, {{4, 2}, {3, 1}}, {{2, 1}, {1, 2}}}},
    {{1, -1},
     {{-4, 5}, {-4, -2}, {3, 5}, {3, -2}},
     {{{0, 0}, {1, -1}}, {{2, 1}, {2, 2}}, {{1, 4}, {0, 3}},
      {{-1, 3}, {-2, 4}}, {{-3, 2}, {-3, 1}}, {{-2, -1}, {-1, 0}}}},
    {{1, 0},
     {{-3, 2}, {-3, -5}, {4, 2}, {4, -5}},
     {{{0, 0}, {-1, 1}}, {{2, 1}, {1, 0}}, {{3, -2}, {3, -1}},
      {{1, -3}, {2, -4}}, {{-1, -4}, {0, -3}}, {{-2, -1}, {-2, -2}}}},
    {{1, 1},
     {{-2, -1}, {-2, 6}, {5, -1}, {5, 6}},
     {{{0, 0}, {1, 1}}, {{2, 1}, {3, 0}}, {{4, 2}, {4, 3}},
      {{3, 5}, {2, 4}}, {{1, 4}, {0, 5}}, {{-1, 3}, {-1, 2}}}},
};

template <typename T>
std::set<T> as_set(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_response_tables OUTPUT.json\n";
    return 2;
  }
  std::vector<ResponseRow> rows = generate_response_rows();
  int mismatches = 0;
  for (const HandRow& hand : kHandRows) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const ResponseRow& r) {
      return r.phase == Phase::D && r.offset == hand.offset;
    });
    if (it == rows.end()) {
      std::cerr << "no generated row for offset " << to_string(hand.offset) << "\n";
      return 1;
    }
    if (as_set(it->anchors) != as_set(hand.anchors) || as_set(it->moves) != as_set(hand.moves)) {
      std::cerr << "hand row for offset " << to_string(hand.offset)
                << " disagrees with the matching responder\n";
      ++mismatches;
      continue;
    }
    it->origin = "table";
    it->anchors = hand.anchors;
    it->moves = hand.moves;
  }
  if (mismatches) return 1;

  std::ofstream out(argv[1]);
  if (!out) {
    std::cerr << "cannot write " << argv[1] << "\n";
    return 1;
  }
  // One row per line keeps diffs readable.
  out << "{\n \"version\": 1,\n \"frame\": \"offsets and coordinates relative to a pattern member at (0,0)\",\n"
      << " \"rows\": [\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    out << "  " << Json(rows[i]).dump() << (i + 1 < rows.size() ? ",\n" : "\n");
  out << " ]\n}\n";
  std::cout << "wrote " << rows.size() << " rows to " << argv[1] << "\n";
  return 0;
}
