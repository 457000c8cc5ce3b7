#pragma once

#include <json.hpp>

#include "hypsurf/diagram.hpp"
#include "hypsurf/involution.hpp"
#include "hypsurf/surface.hpp"

namespace hypsurf {

// Exact serialization: coordinates as {"a": "p/q", "b": "r/s", "d": n},
// surfaces as {"d", "polygons", "gluings", "marks"} with each glued edge
// pair listed once as [poly_i, edge_i, poly_j, edge_j], plus
// "certificates" when present.  Parsing rejects malformed structure and
// non-square-free d with ParseError; round-trips are identities.

nlohmann::json quad_to_json(const QuadExt& q);
QuadExt quad_from_json(const nlohmann::json& j);

nlohmann::json vec2_to_json(const Vec2& v);
Vec2 vec2_from_json(const nlohmann::json& j);

nlohmann::json surface_to_json(const Surface& s);
Surface surface_from_json(const nlohmann::json& j);

nlohmann::json involution_to_json(const Involution& inv);
Involution involution_from_json(const nlohmann::json& j);

nlohmann::json diagram_to_json(const Diagram& dg);
Diagram diagram_from_json(const nlohmann::json& j);

}  // namespace hypsurf
