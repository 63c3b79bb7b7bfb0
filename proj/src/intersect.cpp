#include "acx/intersect.hpp"

#include <algorithm>

#include "acx/error.hpp"

namespace acx {

std::string_view to_string(IntersectionMethod m) {
  switch (m) {
    case IntersectionMethod::Identity: return "identity";
    case IntersectionMethod::FastPath: return "fast-path";
    case IntersectionMethod::Oracle: return "oracle";
    case IntersectionMethod::CoOccurrence: return "co-occurrence";
  }
  return "unknown";
}

namespace {

std::vector<HalfEdge> reversed(const IdealTriangulation& t, const std::vector<HalfEdge>& exits) {
  std::vector<HalfEdge> out(exits.size());
  for (std::size_t m = 0; m < exits.size(); ++m) out[m] = t.iota(exits[exits.size() - 1 - m]);
  return out;
}

std::int64_t oriented_crossings(const IdealTriangulation& t, const std::vector<HalfEdge>& a,
                                const std::vector<HalfEdge>& b) {
  using T = IdealTriangulation;
  const std::size_t m = a.size(), k = b.size();
  auto at = [](const std::vector<HalfEdge>& s, std::size_t i) { return s[i % s.size()]; };
  std::int64_t count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i] != b[j]) continue;
      if (at(a, i + m - 1) == at(b, j + k - 1)) continue;  // not the start of a run
      std::size_t run = 1;
      while (run < m + k && at(a, i + run) == at(b, j + run)) ++run;
      if (run >= m + k) continue;  // parallel copies

      const HalfEdge entered = t.iota(at(a, i + run - 1));
      const bool a_head_side_at_end = at(a, i + run) == T::sigma2(entered);
      const HalfEdge first = a[i];
      const bool a_head_side_at_start = t.iota(at(a, i + m - 1)) == T::sigma(first);
      if (a_head_side_at_end != a_head_side_at_start) ++count;
    }
  }
  return count;
}

}  // namespace

std::int64_t strand_crossings(const IdealTriangulation& t, const Strand& a, const Strand& b) {
  return oriented_crossings(t, a.exits, b.exits) + oriented_crossings(t, a.exits, reversed(t, b.exits));
}

std::int64_t multicurve_intersection(const IdealTriangulation& t, const Coords& a, const Coords& b,
                                     const OracleOptions& options) {
  for (const Coords* v : {&a, &b}) {
    for (std::int64_t x : *v) {
      if (x > options.max_strands_per_edge) {
        throw Error(ErrorCode::ResourceLimit, "strand count " + std::to_string(x) + " exceeds oracle budget");
      }
    }
  }
  const auto sa = strands(t, a);
  const auto sb = strands(t, b);
  std::int64_t total = 0;
  for (const auto& x : sa) {
    for (const auto& y : sb) total += strand_crossings(t, x, y);
  }
  return total;
}

std::int64_t overlay_oracle(const SurfaceContext& ctx, const VertexClass& x, const VertexClass& y,
                            const OracleOptions& options) {
  const auto* cx = std::get_if<CurveClass>(&x);
  const auto* cy = std::get_if<CurveClass>(&y);
  if (cx && cy) return multicurve_intersection(ctx.base(), cx->coords, cy->coords, options);

  // Place the arc as an edge by a fresh search from the base, independent of
  // its anchor, and measure the other class there.
  const ArcClass& arc = cx ? std::get<ArcClass>(y) : std::get<ArcClass>(x);
  const VertexClass& other = cx ? x : y;
  const auto [chain, edge] = place_arc(ctx.root, arc, {}, options.realize);
  const IdealTriangulation& tip = chain->tip();
  if (const auto* c = std::get_if<CurveClass>(&other)) return chain->to_tip(c->coords)[edge];
  const auto& b = std::get<ArcClass>(other);
  return arc_edge_intersections(tip, chain->to_tip(b.boundary), b.endpoints)[edge];
}

Intersection intersection_number(const SurfaceContext& ctx, const VertexClass& x, const VertexClass& y) {
  if (class_equal(x, y)) return {0, IntersectionMethod::Identity};
  const auto* ax = std::get_if<ArcClass>(&x);
  const auto* ay = std::get_if<ArcClass>(&y);
  if (!ax && !ay) return {overlay_oracle(ctx, x, y), IntersectionMethod::Oracle};

  // Read at the anchor of an arc; prefer y's anchor so that (x, y) and
  // (y, x) go through different anchors when both are arcs.
  const ArcClass& anchor = ay ? *ay : *ax;
  const VertexClass& other = ay ? x : y;
  if (!anchor.chain) throw Error(ErrorCode::RegistryMiss, "arc has no anchor");
  if (const auto* c = std::get_if<CurveClass>(&other)) {
    return {anchor.chain->to_tip(c->coords)[anchor.edge], IntersectionMethod::FastPath};
  }
  const auto& b = std::get<ArcClass>(other);
  const Coords crossings = arc_edge_intersections(anchor.chain->tip(), anchor.chain->to_tip(b.boundary), b.endpoints);
  return {crossings[anchor.edge], IntersectionMethod::FastPath};
}

bool disjoint(const SurfaceContext& ctx, const VertexClass& x, const VertexClass& y) {
  return intersection_number(ctx, x, y).value == 0;
}

}  // namespace acx
