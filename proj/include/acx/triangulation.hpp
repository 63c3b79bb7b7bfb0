#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "acx/surface.hpp"

namespace acx {

/// Index of a corner of a triangle. Corner `h` also names the side of its
/// triangle that starts at that corner (counter-clockwise), so corners and
/// oriented sides are the same thing.
using HalfEdge = int;
using EdgeId = int;
/// Puncture labels run 1..n.
using Puncture = int;

/// Ideal triangulation stored as a combinatorial map.
///
/// Triangle `t` owns corners 3t, 3t+1, 3t+2 in counter-clockwise order, so the
/// rotation `sigma` is implicit. `iota` pairs the two sides of each edge with
/// opposite orientation. `tail(h)` is the puncture the side `h` starts at.
class IdealTriangulation {
 public:
  IdealTriangulation() = default;

  /// Builds a map from explicit arrays. `tails[h]` is the puncture label at
  /// the start of side h. Edge ids are assigned in order of the lowest corner
  /// of each edge unless `edges` is given.
  IdealTriangulation(std::vector<HalfEdge> iota, std::vector<Puncture> tails,
                     std::vector<std::array<HalfEdge, 2>> edges = {});

  int corner_count() const { return static_cast<int>(iota_.size()); }
  int triangle_count() const { return corner_count() / 3; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int puncture_count() const { return puncture_count_; }
  /// Number of rotation orbits around vertices (should equal puncture_count).
  int vertex_orbit_count() const;

  static HalfEdge sigma(HalfEdge h) { return 3 * (h / 3) + (h % 3 + 1) % 3; }
  static HalfEdge sigma2(HalfEdge h) { return 3 * (h / 3) + (h % 3 + 2) % 3; }
  static int triangle_of(HalfEdge h) { return h / 3; }

  HalfEdge iota(HalfEdge h) const { return iota_[h]; }
  /// Next side around the tail vertex of h.
  HalfEdge rho(HalfEdge h) const { return iota_[sigma2(h)]; }
  EdgeId edge_of(HalfEdge h) const { return edge_of_[h]; }
  const std::array<HalfEdge, 2>& sides(EdgeId e) const { return edges_[e]; }
  Puncture tail(HalfEdge h) const { return tails_[h]; }
  Puncture head(HalfEdge h) const { return tails_[sigma(h)]; }

  /// Unordered endpoint pair of an edge, smaller label first.
  std::array<Puncture, 2> endpoints(EdgeId e) const;
  /// How many ends of edge e sit at puncture p (0, 1 or 2).
  int ends_at(EdgeId e, Puncture p) const;

  /// An edge is self-folded when both of its sides lie in one triangle.
  bool is_self_folded(EdgeId e) const;

  /// Diagonal exchange. The new diagonal keeps the edge id of `e`.
  /// Throws Error(SelfFoldedEdge).
  IdealTriangulation flipped(EdgeId e) const;

  /// Throws Error(InvalidInput) describing the first violated invariant.
  void check_invariants() const;

  const std::vector<HalfEdge>& iota_array() const { return iota_; }
  const std::vector<Puncture>& tails() const { return tails_; }
  const std::vector<std::array<HalfEdge, 2>>& edges() const { return edges_; }

  friend bool operator==(const IdealTriangulation& a, const IdealTriangulation& b) {
    return a.iota_ == b.iota_ && a.tails_ == b.tails_ && a.edges_ == b.edges_;
  }

 private:
  void rebuild_edge_index();

  std::vector<HalfEdge> iota_;
  std::vector<Puncture> tails_;
  std::vector<std::array<HalfEdge, 2>> edges_;
  std::vector<EdgeId> edge_of_;
  int puncture_count_ = 0;
};

/// Deterministic ideal triangulation of S_{g,n}: a fan-triangulated 4g-gon
/// (or two triangles for g = 0) with further punctures inserted by
/// subdividing triangles. Throws Error(UnsupportedSurface).
IdealTriangulation base_triangulation(Surface s);

/// Canonical byte string: minimum over all starting corners of the
/// breadth-first relabeling. Equal codes iff the maps are isomorphic
/// (respecting puncture labels when `labeled`).
std::string canonical_code(const IdealTriangulation& t, bool labeled = true);

/// Surface (genus, punctures) read off a map via Euler characteristic.
Surface surface_of(const IdealTriangulation& t);

}  // namespace acx
