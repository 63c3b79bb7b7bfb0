#pragma once

#include <span>
#include <vector>

#include "acx/coords.hpp"

namespace acx {

/// A boundary circle of a region obtained by cutting along curves and arcs.
/// Curve circles are made of curve pieces; arc circles of arc sides, which
/// meet at punctures.
struct BoundaryCycle {
  enum class Kind { Curve, Arc };
  Kind kind;
  int length;  // number of sides; for arc circles, the number of arc sides
};

/// One connected component of the surface cut along a multicurve and a set
/// of triangulation edges. Punctures not lying on a cut edge are filled in
/// and reported as interior punctures.
struct CutRegion {
  int euler_characteristic = 0;  // of the compact region, punctures filled
  int genus = 0;
  std::vector<BoundaryCycle> boundary;
  std::vector<Puncture> interior_punctures;

  bool is_triangle() const;
  /// Annulus between one curve and one arc joining a puncture to itself.
  bool is_arc_annulus() const;
  /// Pair of pants bounded by three curves.
  bool is_curve_pants() const;
};

/// Cuts the surface of `t` along the normal multicurve `curves` and the edges
/// `cut_edges`. The multicurve must have zero coordinate on every cut edge.
std::vector<CutRegion> cut_surface(const IdealTriangulation& t, const Coords& curves,
                                   std::span<const EdgeId> cut_edges);

}  // namespace acx
