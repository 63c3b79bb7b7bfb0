#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "acx/triangulation.hpp"

namespace acx {

/// Normal coordinates: one intersection count per edge of a triangulation.
using Coords = std::vector<std::int64_t>;

/// Per-triangle conditions for a normal multicurve: the three side values
/// satisfy the triangle inequalities and have even sum.
bool satisfies_triangle_conditions(const IdealTriangulation& t, std::span<const std::int64_t> v);

/// Number of normal arcs of `v` that turn around the corner at head(h),
/// i.e. run between side h and side sigma(h).
std::int64_t corner_count(const IdealTriangulation& t, std::span<const std::int64_t> v, HalfEdge h);

/// Coordinates of the same multicurve relative to t.flipped(e), by the
/// tropical Ptolemy rule. Throws Error(InvalidCoordinates) or
/// Error(SelfFoldedEdge).
Coords transport(const Coords& v, const IdealTriangulation& t, EdgeId e);

/// Normal coordinates of a small loop around puncture p.
Coords puncture_link(const IdealTriangulation& t, Puncture p);
/// True when v equals the link vector of some puncture.
bool is_peripheral(const IdealTriangulation& t, const Coords& v);

/// Boundary of a regular neighborhood of the union of the edges in `edges`
/// together with their endpoints, as a normal multicurve (peripheral
/// components included). Triangles bounded by two chosen sides are absorbed
/// into the neighborhood first.
Coords neighborhood_multicurve(const IdealTriangulation& t, std::span<const EdgeId> edges);

/// One connected component of a normal multicurve, as the cyclic sequence of
/// sides it leaves triangles through.
struct Strand {
  std::vector<HalfEdge> exits;
  Coords coords;  // coordinates of this component alone
};

/// Decomposes a normal multicurve into its connected components, in a
/// deterministic order. Throws Error(InvalidCoordinates).
std::vector<Strand> strands(const IdealTriangulation& t, const Coords& v);

struct LabeledStrands {
  std::vector<Strand> strands;
  /// labels[e][j]: strand through the j-th point of edge e, counted from the
  /// tail of sides(e)[0].
  std::vector<std::vector<int>> labels;
};

LabeledStrands labeled_strands(const IdealTriangulation& t, const Coords& v);

/// Essential simple closed curve test: valid, nonzero, connected and not
/// peripheral.
bool is_essential_curve(const IdealTriangulation& t, const Coords& v);

std::int64_t weight(const Coords& v);

}  // namespace acx
