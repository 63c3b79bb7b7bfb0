#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "acx/classes.hpp"

namespace acx {

enum class IntersectionMethod {
  Identity,      // the two classes are equal
  FastPath,      // coordinates read at an anchor edge
  Oracle,        // strand overlay
  CoOccurrence,  // both arcs are edges of one triangulation
};

std::string_view to_string(IntersectionMethod m);

struct Intersection {
  std::int64_t value = 0;
  IntersectionMethod method = IntersectionMethod::Identity;
};

struct RealizeOptions {
  std::size_t max_nodes = 20000;
};

struct OracleOptions {
  /// Largest coordinate allowed on any edge before giving up.
  std::int64_t max_strands_per_edge = 256;
  RealizeOptions realize;
};

/// Minimal crossing count of two connected normal curves on `t`.
///
/// The two strand families are laid out edge by edge in the order that
/// never creates a bigon: wherever the strands run parallel through a
/// sequence of triangles, they are ordered by the side on which they
/// eventually separate. A crossing is forced exactly when the two ends of a
/// maximal parallel run separate on opposite sides.
std::int64_t strand_crossings(const IdealTriangulation& t, const Strand& a, const Strand& b);

/// Minimal crossing count of two normal multicurves, summed over components.
std::int64_t multicurve_intersection(const IdealTriangulation& t, const Coords& a, const Coords& b,
                                     const OracleOptions& options = {});

/// Independent intersection number. Two curves are overlaid as strands in
/// the base triangulation. An arc is first realized as an edge by a fresh
/// flip search from the base (ignoring its anchor) and the other class is
/// measured against that edge. Throws Error(ResourceLimit).
std::int64_t overlay_oracle(const SurfaceContext& ctx, const VertexClass& x, const VertexClass& y,
                            const OracleOptions& options = {});

/// Geometric intersection number, counting interior points only. Uses the
/// anchored fast path when one class is an arc, the oracle for two curves.
Intersection intersection_number(const SurfaceContext& ctx, const VertexClass& x, const VertexClass& y);

bool disjoint(const SurfaceContext& ctx, const VertexClass& x, const VertexClass& y);

/// A triangulation that contains a given family of disjoint arcs as edges.
struct Realization {
  ChainPtr chain;
  std::vector<EdgeId> edges;  // edges[i] is isotopic to the i-th arc
};

/// Edge of `t` isotopic to the arc, or -1.
EdgeId find_arc_edge(const IdealTriangulation& t, const Coords& boundary_on_t,
                     const std::array<Puncture, 2>& endpoints);

/// Extends `start` by flips, never flipping an edge in `fixed`, until the
/// arc is an edge. Returns the chain and that edge.
std::pair<ChainPtr, EdgeId> place_arc(const ChainPtr& start, const ArcClass& arc, std::span<const EdgeId> fixed,
                                      const RealizeOptions& options = {});

/// Flips toward a triangulation containing every arc, never flipping an arc
/// already placed. Throws Error(InvalidInput) when two arcs intersect and
/// Error(ResourceLimit) when the search budget is exhausted.
Realization realize_arcs(const SurfaceContext& ctx, std::span<const ArcClass> arcs,
                         const RealizeOptions& options = {});

/// Essential boundary components of a regular neighborhood of the arc and
/// its endpoints, deduplicated, in base coordinates.
std::vector<CurveClass> neighborhood_boundary(const SurfaceContext& ctx, const ArcClass& a);

/// Essential boundary components of a regular neighborhood of the union of
/// two disjoint arcs. Throws as realize_arcs.
std::vector<CurveClass> union_boundary(const SurfaceContext& ctx, const ArcClass& a, const ArcClass& b);

/// Essential components of a multicurve given in base coordinates.
std::vector<CurveClass> essential_components(const SurfaceContext& ctx, const Coords& multicurve);

}  // namespace acx
