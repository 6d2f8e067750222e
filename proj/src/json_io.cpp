#include "eterdom/json_io.hpp"

#include "eterdom/errors.hpp"

namespace eterdom {

void to_json(Json& j, const Vertex& v) { j = Json::array({v.x, v.y}); }

void from_json(const Json& j, Vertex& v) {
  if (!j.is_array() || j.size() != 2) throw DomainError("vertex must be [x, y], got " + j.dump());
  v = {j[0].get<int>(), j[1].get<int>()};
}

void to_json(Json& j, const GridDims& d) { j = Json::array({d.n, d.m}); }

void from_json(const Json& j, GridDims& d) {
  if (j.is_string()) {
    d = parse_dims(j.get<std::string>());
    return;
  }
  if (!j.is_array() || j.size() != 2) throw DomainError("dims must be [n, m] or \"NxM\"");
  d = {j[0].get<int>(), j[1].get<int>()};
  if (d.n < 1 || d.m < 1) throw DomainError("dims must be positive");
}

void to_json(Json& j, const Configuration& c) {
  j = Json::array();
  for (Vertex v : c) j.push_back(v);
}

void from_json(const Json& j, Configuration& c) {
  try {
    c = Configuration(j.get<std::vector<Vertex>>());
  } catch (const std::invalid_argument& e) {
    throw DomainError(e.what());
  }
}

void to_json(Json& j, const Phase& p) { j = to_string(p); }
void from_json(const Json& j, Phase& p) { p = parse_phase(j.get<std::string>()); }

void to_json(Json& j, const PatternSpec& s) { j = Json{{"phase", s.phase}, {"base", s.base}}; }

void from_json(const Json& j, PatternSpec& s) {
  s.phase = j.at("phase").get<Phase>();
  s.base = j.at("base").get<Vertex>();
}

void to_json(Json& j, const GuardMove& m) { j = Json{{"from", m.from}, {"to", m.to}}; }

void from_json(const Json& j, GuardMove& m) {
  m.from = j.at("from").get<Vertex>();
  m.to = j.at("to").get<Vertex>();
}

void to_json(Json& j, const AttackResponse& r) {
  j = Json{{"attacked", r.attacked}, {"anchors", r.anchors}, {"moves", r.moves}};
}

void from_json(const Json& j, AttackResponse& r) {
  r.attacked = j.at("attacked").get<Vertex>();
  r.anchors = j.at("anchors").get<std::vector<Vertex>>();
  r.moves = j.at("moves").get<std::vector<GuardMove>>();
}

void to_json(Json& j, const ResponseRow& row) {
  j = Json{{"phase", row.phase},     {"offset", row.offset}, {"origin", row.origin},
           {"anchors", row.anchors}, {"moves", row.moves}};
}

void from_json(const Json& j, ResponseRow& row) {
  row.phase = j.at("phase").get<Phase>();
  row.offset = j.at("offset").get<Vertex>();
  row.origin = j.at("origin").get<std::string>();
  row.anchors = j.at("anchors").get<std::vector<Vertex>>();
  row.moves = j.at("moves").get<std::vector<GuardMove>>();
}

}  // namespace eterdom
