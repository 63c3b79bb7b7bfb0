#include <doctest.h>

#include "acx/json_io.hpp"

using namespace acx;

namespace {

BallBounds bounds(int r, std::int64_t w) {
  BallBounds b;
  b.radius = r;
  b.weight = w;
  return b;
}

}  // namespace

TEST_CASE("triangulation round trip") {
  for (Surface s : {Surface{0, 3}, Surface{1, 1}, Surface{1, 2}, Surface{2, 1}, Surface{0, 6}}) {
    const auto t = base_triangulation(s);
    const json j = to_json(t);
    CHECK(j["corners"] == t.corner_count());
    CHECK(j["edges"].size() == static_cast<std::size_t>(triangulation_edge_count(s)));
    CHECK(triangulation_from_json(json::parse(j.dump())) == t);
  }
  json j = to_json(base_triangulation({1, 1}));
  j["iota"][0] = 0;
  CHECK_THROWS_AS(triangulation_from_json(j), Error);
  j = to_json(base_triangulation({1, 1}));
  j.erase("sigma");
  CHECK_THROWS_AS(triangulation_from_json(j), Error);
}

TEST_CASE("class round trip") {
  const auto b = build_ball({1, 2}, ComplexKind::AC, bounds(2, 8));
  const SurfaceContext& ctx = *b.context;
  for (const auto& v : b.vertices) {
    const json j = to_json(v);
    CHECK(j["kind"] == (is_arc(v) ? "arc" : "curve"));
    const VertexClass back = class_from_json(ctx, json::parse(j.dump()));
    CHECK(class_equal(back, v));
    CHECK(class_key(back) == class_key(v));
  }
  json bad = {{"kind", "curve"}, {"coords", {1, 2, 3}}};
  CHECK_THROWS_AS(class_from_json(ctx, bad), Error);
  bad = {{"kind", "blob"}};
  CHECK_THROWS_AS(class_from_json(ctx, bad), Error);
}

TEST_CASE("ball round trip") {
  for (Surface s : {Surface{0, 2}, Surface{0, 3}, Surface{0, 4}}) {
    const auto b = build_ball(s, ComplexKind::AC, bounds(2, 8));
    const auto c = ball_from_json(json::parse(to_json(b).dump()));
    REQUIRE(c.size() == b.size());
    CHECK(c.adjacency == b.adjacency);
    CHECK(c.types == b.types);
    CHECK(c.complete == b.complete);
    CHECK(c.closed == b.closed);
    for (int v = 0; v < b.size(); ++v) CHECK(class_key(c.vertices[v]) == class_key(b.vertices[v]));
  }
  const auto b = build_ball({0, 3}, ComplexKind::AC, bounds(2, 2));
  const std::string dot = to_dot(b);
  CHECK(dot.find("graph ball") == 0);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find(" -- ") != std::string::npos);
}

TEST_CASE("path round trip") {
  const auto b = build_ball({0, 5}, ComplexKind::AC, bounds(2, 8));
  Path p{b.surface, PathKind::AC, {}};
  int x = 0;
  while (!is_curve(b.vertices[x])) ++x;
  p.vertices = {b.vertices[x], b.vertices[b.adjacency[x].front()]};
  const Path q = path_from_json(json::parse(to_json(p).dump()));
  CHECK(q.kind == PathKind::AC);
  REQUIRE(q.vertices.size() == 2);
  CHECK(class_equal(q.vertices[1], p.vertices[1]));
}

TEST_CASE("registry hash") {
  const SurfaceContext ctx({1, 1});
  const json a = to_json(flip_ball(ctx, 2));
  const json b = to_json(flip_ball(ctx, 2));
  CHECK(a == b);
  CHECK(a["hash"] == content_hash(a["registry"]));
  json c = a;
  c["registry"]["radius"] = 3;
  CHECK(content_hash(c["registry"]) != a["hash"]);
}

TEST_CASE("error json") {
  const json e = error_json(ErrorCode::UnknownVertex, "vertex 7");
  CHECK(e["error"]["code"] == "UnknownVertex");
  CHECK(e["error"]["message"] == "vertex 7");
}
