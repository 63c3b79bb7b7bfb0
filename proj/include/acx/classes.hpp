#pragma once

#include <array>
#include <memory>
#include <string>
#include <variant>

#include "acx/coords.hpp"

namespace acx {

/// A triangulation reached from the base triangulation by a sequence of
/// flips, stored as a persistent linked list so anchors can share prefixes.
class FlipChain {
 public:
  static std::shared_ptr<const FlipChain> root(IdealTriangulation base);

  /// The chain extended by one flip. Throws Error(SelfFoldedEdge).
  static std::shared_ptr<const FlipChain> extend(const std::shared_ptr<const FlipChain>& chain,
                                                 EdgeId e);

  const IdealTriangulation& tip() const { return tip_; }
  const IdealTriangulation& base() const;
  int depth() const { return depth_; }
  /// Flip sequence from the base, in order.
  std::vector<EdgeId> flips() const;

  /// Coordinates relative to the base, carried forward to the tip.
  Coords to_tip(Coords base_coords) const;
  /// Coordinates relative to the tip, carried back to the base.
  Coords to_base(Coords tip_coords) const;

 private:
  FlipChain(std::shared_ptr<const FlipChain> parent, EdgeId via, IdealTriangulation tip, int depth)
      : parent_(std::move(parent)), via_(via), tip_(std::move(tip)), depth_(depth) {}

  std::shared_ptr<const FlipChain> parent_;
  EdgeId via_ = -1;
  IdealTriangulation tip_;
  int depth_ = 0;
};

using ChainPtr = std::shared_ptr<const FlipChain>;

/// Surface together with its fixed base triangulation; every class carries
/// coordinates relative to this base.
struct SurfaceContext {
  explicit SurfaceContext(Surface s);

  Surface surface;
  ChainPtr root;
  const IdealTriangulation& base() const { return root->tip(); }
};

/// Isotopy class of an essential simple closed curve, by its normal
/// coordinates relative to the base triangulation.
struct CurveClass {
  Coords coords;
};

/// Isotopy class of an essential arc. The anchor (a triangulation and one of
/// its edges) is the source of truth; the vectors are derived keys.
struct ArcClass {
  ChainPtr chain;
  EdgeId edge = -1;
  std::array<Puncture, 2> endpoints{};
  /// Boundary multicurve of a regular neighborhood, relative to the base.
  Coords boundary;
  /// Interior intersection numbers with base edges; -1 at a base edge the
  /// arc is isotopic to.
  Coords base;

  bool is_loop() const { return endpoints[0] == endpoints[1]; }
};

using VertexClass = std::variant<CurveClass, ArcClass>;

/// Validates and wraps curve coordinates. Throws Error(InvalidCoordinates).
CurveClass make_curve(const SurfaceContext& ctx, Coords coords);
/// Builds the class of edge `edge` of the chain's tip.
ArcClass make_arc(const SurfaceContext& ctx, ChainPtr chain, EdgeId edge);

/// Intersection numbers of an arc with every edge of `t`, from the arc's
/// boundary multicurve carried to `t`. An edge isotopic to the arc reads 0.
/// Throws Error(InvalidCoordinates).
Coords arc_edge_intersections(const IdealTriangulation& t, const Coords& boundary_on_t,
                              const std::array<Puncture, 2>& endpoints);

inline bool is_arc(const VertexClass& v) { return std::holds_alternative<ArcClass>(v); }
inline bool is_curve(const VertexClass& v) { return std::holds_alternative<CurveClass>(v); }

bool class_equal(const VertexClass& x, const VertexClass& y);

/// Stable text key used for deduplication and caches.
std::string class_key(const VertexClass& v);
std::string arc_key(const ArcClass& a);

/// Number of ends of edge f (of t) at the distinct endpoints of `endpoints`.
int ends_at_any(const IdealTriangulation& t, EdgeId f, const std::array<Puncture, 2>& endpoints);

}  // namespace acx
