#pragma once

// JSON encodings shared by transcripts, the response tables asset and the
// session protocol. Vertices are [x, y] arrays throughout.

#include <json.hpp>

#include "eterdom/grid.hpp"
#include "eterdom/patterns.hpp"
#include "eterdom/responder.hpp"

namespace eterdom {

using Json = nlohmann::json;

void to_json(Json& j, const Vertex& v);
void from_json(const Json& j, Vertex& v);

void to_json(Json& j, const GridDims& d);
void from_json(const Json& j, GridDims& d);

void to_json(Json& j, const Configuration& c);
void from_json(const Json& j, Configuration& c);

void to_json(Json& j, const Phase& p);
void from_json(const Json& j, Phase& p);

void to_json(Json& j, const PatternSpec& s);
void from_json(const Json& j, PatternSpec& s);

void to_json(Json& j, const GuardMove& m);
void from_json(const Json& j, GuardMove& m);

void to_json(Json& j, const AttackResponse& r);
void from_json(const Json& j, AttackResponse& r);

void to_json(Json& j, const ResponseRow& row);
void from_json(const Json& j, ResponseRow& row);

}  // namespace eterdom
