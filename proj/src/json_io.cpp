#include "acx/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace acx {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad(std::string("field '") + key + "' has the wrong type");
  }
}

std::string_view kind_name(PathKind k) { return k == PathKind::AC ? "AC" : "C"; }

}  // namespace

json to_json(Surface s) { return {{"genus", s.genus}, {"punctures", s.punctures}}; }

Surface surface_from_json(const json& j) {
  const Surface s{get<int>(j, "genus"), get<int>(j, "punctures")};
  if (s.genus < 0 || s.punctures < 1) bad("surface needs genus >= 0 and at least one puncture");
  return s;
}

json to_json(const IdealTriangulation& t) {
  json sigma = json::array(), edges = json::array();
  for (HalfEdge h = 0; h < t.corner_count(); ++h) sigma.push_back(IdealTriangulation::sigma(h));
  for (const auto& e : t.edges()) edges.push_back({e[0], e[1]});
  return {{"corners", t.corner_count()}, {"sigma", sigma}, {"iota", t.iota_array()},
          {"punctures", t.tails()},      {"edges", edges}};
}

IdealTriangulation triangulation_from_json(const json& j) {
  const int corners = get<int>(j, "corners");
  const auto sigma = get<std::vector<HalfEdge>>(j, "sigma");
  const auto iota = get<std::vector<HalfEdge>>(j, "iota");
  const auto tails = get<std::vector<Puncture>>(j, "punctures");
  const auto edges = get<std::vector<std::array<HalfEdge, 2>>>(j, "edges");
  if (corners <= 0 || corners % 3 != 0) bad("corner count must be a positive multiple of 3");
  if (static_cast<int>(sigma.size()) != corners || static_cast<int>(iota.size()) != corners ||
      static_cast<int>(tails.size()) != corners) {
    bad("sigma, iota and punctures need one entry per corner");
  }
  for (HalfEdge h = 0; h < corners; ++h) {
    if (sigma[h] != IdealTriangulation::sigma(h)) bad("sigma must rotate corners 3k, 3k+1, 3k+2");
  }
  try {
    IdealTriangulation t(iota, tails, edges);
    t.check_invariants();
    return t;
  } catch (const Error& e) {
    bad(std::string("not a triangulation: ") + e.what());
  } catch (const std::exception& e) {
    bad(std::string("not a triangulation: ") + e.what());
  }
}

json to_json(const VertexClass& v) {
  if (const auto* c = std::get_if<CurveClass>(&v)) {
    return {{"kind", "curve"}, {"coords", c->coords}, {"endpoints", nullptr}};
  }
  const auto& a = std::get<ArcClass>(v);
  json j = {{"kind", "arc"}, {"coords", a.base}, {"endpoints", a.endpoints}, {"boundary", a.boundary}};
  if (a.chain) {
    j["flips"] = a.chain->flips();
    j["edge"] = a.edge;
  } else {
    j["flips"] = nullptr;
    j["edge"] = nullptr;
  }
  return j;
}

VertexClass class_from_json(const SurfaceContext& ctx, const json& j) {
  const auto kind = get<std::string>(j, "kind");
  if (kind == "curve") return make_curve(ctx, get<Coords>(j, "coords"));
  if (kind != "arc") bad("class kind must be 'curve' or 'arc'");
  if (!j.contains("flips") || !j.contains("edge") || j["edge"].is_null()) bad("arc needs 'flips' and 'edge'");
  ChainPtr chain = ctx.root;
  const auto edge = get<EdgeId>(j, "edge");
  for (EdgeId e : get<std::vector<EdgeId>>(j, "flips")) {
    if (e < 0 || e >= chain->tip().edge_count()) bad("flip edge out of range");
    chain = FlipChain::extend(chain, e);
  }
  if (edge < 0 || edge >= chain->tip().edge_count()) bad("arc edge out of range");
  ArcClass a = make_arc(ctx, chain, edge);
  if (j.contains("endpoints") && !j["endpoints"].is_null()) {
    auto ends = get<std::array<Puncture, 2>>(j, "endpoints");
    auto mine = a.endpoints;
    std::sort(ends.begin(), ends.end());
    std::sort(mine.begin(), mine.end());
    if (ends != mine) throw Error(ErrorCode::InvalidCoordinates, "arc endpoints disagree with its anchor");
  }
  if (j.contains("coords") && !j["coords"].is_null() && get<Coords>(j, "coords") != a.base) {
    throw Error(ErrorCode::InvalidCoordinates, "arc coordinates disagree with its anchor");
  }
  if (j.contains("boundary") && !j["boundary"].is_null() && get<Coords>(j, "boundary") != a.boundary) {
    throw Error(ErrorCode::InvalidCoordinates, "arc boundary disagrees with its anchor");
  }
  return a;
}

json to_json(const SimplicialBall& b) {
  json vertices = json::array(), edges = json::array(), complete = json::array();
  for (int v = 0; v < b.size(); ++v) {
    json x = to_json(b.vertices[v]);
    x["id"] = v;
    x["key"] = class_key(b.vertices[v]);
    x["type"] = to_string(b.types[v]);
    x["depth"] = b.depths[v];
    vertices.push_back(std::move(x));
    complete.push_back(static_cast<bool>(b.complete[v]));
  }
  for (const auto& [u, v] : b.edges()) edges.push_back({u, v});
  return {{"surface", to_json(b.surface)},
          {"kind", to_string(b.kind)},
          {"vertices", vertices},
          {"edges", edges},
          {"bounds",
           {{"radius", b.bounds.radius},
            {"weight", b.bounds.weight},
            {"radius_margin", b.bounds.radius_margin},
            {"weight_margin", b.bounds.weight_margin}}},
          {"complete", complete},
          {"closed", b.closed}};
}

SimplicialBall ball_from_json(const json& j) {
  SimplicialBall b;
  b.surface = surface_from_json(get<json>(j, "surface"));
  const auto kind = parse_complex_kind(get<std::string>(j, "kind"));
  if (!kind) bad("unknown complex kind");
  b.kind = *kind;
  const json bounds = get<json>(j, "bounds");
  b.bounds.radius = get<int>(bounds, "radius");
  b.bounds.weight = get<std::int64_t>(bounds, "weight");
  if (bounds.contains("radius_margin")) b.bounds.radius_margin = get<int>(bounds, "radius_margin");
  if (bounds.contains("weight_margin")) b.bounds.weight_margin = get<std::int64_t>(bounds, "weight_margin");
  b.closed = j.value("closed", false);
  if (triangulable(b.surface)) b.context = std::make_shared<const SurfaceContext>(b.surface);

  const auto vertices = get<json>(j, "vertices");
  const auto complete = get<std::vector<bool>>(j, "complete");
  if (!vertices.is_array() || complete.size() != vertices.size()) bad("need one completeness flag per vertex");
  for (const json& x : vertices) {
    if (b.context) {
      b.vertices.push_back(class_from_json(*b.context, x));
    } else {
      if (get<std::string>(x, "kind") != "arc") bad("only the arc between two punctures exists here");
      ArcClass a;
      a.endpoints = get<std::array<Puncture, 2>>(x, "endpoints");
      b.vertices.push_back(a);
    }
    const auto type = parse_type_label(get<std::string>(x, "type"));
    if (!type) bad("unknown type label");
    b.types.push_back(*type);
    b.depths.push_back(x.value("depth", -1));
  }
  for (bool c : complete) b.complete.push_back(c);
  b.adjacency.assign(b.vertices.size(), {});
  for (const auto& e : get<std::vector<std::array<int, 2>>>(j, "edges")) {
    if (e[0] < 0 || e[1] < 0 || e[0] >= b.size() || e[1] >= b.size() || e[0] == e[1]) bad("edge out of range");
    b.adjacency[e[0]].push_back(e[1]);
    b.adjacency[e[1]].push_back(e[0]);
  }
  for (auto& n : b.adjacency) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
  return b;
}

std::string to_dot(const SimplicialBall& b) {
  auto color = [](TypeLabel t) {
    switch (t) {
      case TypeLabel::SepCurve: return "tomato";
      case TypeLabel::SepLoopArc: return "orange";
      case TypeLabel::NonsepCurve: return "steelblue";
      case TypeLabel::NonsepLoopArc: return "lightblue";
      case TypeLabel::InterPunctureArc: return "palegreen";
    }
    return "white";
  };
  std::ostringstream out;
  out << "graph ball {\n  node [style=filled];\n";
  for (int v = 0; v < b.size(); ++v) {
    out << "  " << v << " [label=\"" << v << "\", shape=" << (is_arc(b.vertices[v]) ? "box" : "ellipse")
        << ", fillcolor=" << color(b.types[v]) << (b.complete[v] ? "" : ", peripheries=2") << "];\n";
  }
  for (const auto& [u, v] : b.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string content_hash(const json& j) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const FlipRegistry& r) {
  json entries = json::array(), arcs = json::array();
  for (const auto& e : r.entries()) {
    entries.push_back({{"flips", e.chain->flips()}, {"key", e.key}, {"edge_arcs", e.edge_arcs}});
  }
  for (const auto& a : r.arcs()) arcs.push_back(to_json(VertexClass(a)));
  json body = {{"surface", to_json(r.context().surface)},
               {"base", to_json(r.context().base())},
               {"radius", r.radius()},
               {"closed", r.closed()},
               {"triangulations", entries},
               {"arcs", arcs},
               {"arc_depths", r.arc_depths()}};
  return {{"hash", content_hash(body)}, {"registry", body}};
}

json to_json(const Path& p) {
  json vertices = json::array();
  for (const auto& v : p.vertices) vertices.push_back(to_json(v));
  return {{"surface", to_json(p.surface)}, {"kind", kind_name(p.kind)}, {"vertices", vertices}};
}

Path path_from_json(const json& j) {
  Path p;
  p.surface = surface_from_json(get<json>(j, "surface"));
  const auto kind = j.value("kind", std::string("AC"));
  if (kind != "AC" && kind != "C") bad("path kind must be 'AC' or 'C'");
  p.kind = kind == "AC" ? PathKind::AC : PathKind::C;
  if (!triangulable(p.surface)) throw Error(ErrorCode::UnsupportedSurface, "surface has no ideal triangulation");
  const SurfaceContext ctx(p.surface);
  const auto vertices = get<json>(j, "vertices");
  if (!vertices.is_array() || vertices.empty()) bad("path needs at least one vertex");
  for (const json& x : vertices) p.vertices.push_back(class_from_json(ctx, x));
  return p;
}

json to_json(const CombinatorialResult& r, const SimplicialBall& b) {
  json j = {{"label", r.label ? json(to_string(*r.label)) : json(nullptr)},
            {"conclusive", r.conclusive()},
            {"reason", r.reason},
            {"link_size", r.link_size},
            {"dual_link_components", r.dual_link_components},
            {"dual_link_disconnected", r.dual_link_disconnected},
            {"max_dim", r.dim.dim},
            {"max_dim_confident", r.dim.confident},
            {"candidates_checked", r.candidates_checked}};
  if (r.witness) j["witness"] = {{"id", *r.witness}, {"key", class_key(b.vertices[*r.witness])}};
  else j["witness"] = nullptr;
  return j;
}

json to_json(const RewriteResult& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    json inserted = json::array();
    for (const auto& v : s.inserted) inserted.push_back(class_key(v));
    steps.push_back({{"position", s.position}, {"rule", s.rule}, {"inserted", inserted}});
  }
  return {{"path", to_json(r.path)},
          {"length", r.path.length()},
          {"steps", steps},
          {"warning", r.warning ? json(*r.warning) : json(nullptr)}};
}

json to_json(const InequalityReport& r) {
  json samples = json::array(), failures = json::array();
  for (const auto& s : r.samples) {
    json x = {{"id", s.id}, {"x", s.x}, {"y", s.y}, {"d_c", s.d_c}, {"d_ac", s.d_ac}, {"exact", s.exact},
              {"pass", s.pass}, {"check", s.check}};
    if (s.rewritten_length >= 0) x["rewritten_length"] = s.rewritten_length;
    if (!s.pass) {
      x["witness"] = s.witness;
      failures.push_back(x);
    }
    samples.push_back(std::move(x));
  }
  return {{"surface", to_json(r.surface)}, {"mode", r.mode},       {"samples", samples},
          {"passes", r.passes},            {"skips", r.skips},     {"failures", failures}};
}

json to_json(const AutomorphismGroup& g) {
  return {{"order", g.order}, {"generators", g.generators}};
}

json to_json(const Intersection& i) { return {{"value", i.value}, {"method", to_string(i.method)}}; }

json error_json(ErrorCode code, const std::string& message) {
  return {{"error", {{"code", to_string(code)}, {"message", message}}}};
}

}  // namespace acx
