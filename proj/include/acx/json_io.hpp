#pragma once

#include <string>

#include <json.hpp>

#include "acx/classify.hpp"
#include "acx/error.hpp"
#include "acx/intersect.hpp"
#include "acx/quasi.hpp"
#include "acx/registry.hpp"

namespace acx {

using json = nlohmann::json;

json to_json(Surface s);
Surface surface_from_json(const json& j);

/// { corners, sigma, iota, punctures, edges }
json to_json(const IdealTriangulation& t);
/// Throws Error(InvalidInput) when the arrays do not form a triangulation.
IdealTriangulation triangulation_from_json(const json& j);

/// { kind, coords, endpoints }. Arcs also carry their anchor (flips from
/// the base and the edge) and the boundary multicurve, which is enough to
/// rebuild them.
json to_json(const VertexClass& v);
/// Throws Error(InvalidInput) or Error(InvalidCoordinates).
VertexClass class_from_json(const SurfaceContext& ctx, const json& j);

/// { surface, kind, vertices, edges, bounds, complete, closed }
json to_json(const SimplicialBall& b);
SimplicialBall ball_from_json(const json& j);
/// Graphviz; fill color by type, shape by arc or curve.
std::string to_dot(const SimplicialBall& b);

/// Arcs and triangulations of a flip ball, with a content hash over the
/// rest of the document.
json to_json(const FlipRegistry& r);
std::string content_hash(const json& j);

json to_json(const Path& p);
Path path_from_json(const json& j);

json to_json(const CombinatorialResult& r, const SimplicialBall& b);
json to_json(const RewriteResult& r);
json to_json(const InequalityReport& r);
json to_json(const AutomorphismGroup& g);
json to_json(const Intersection& i);

json error_json(ErrorCode code, const std::string& message);

}  // namespace acx
