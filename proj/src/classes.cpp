#include "acx/classes.hpp"

#include <algorithm>

#include "acx/error.hpp"

namespace acx {

std::shared_ptr<const FlipChain> FlipChain::root(IdealTriangulation base) {
  return std::shared_ptr<const FlipChain>(new FlipChain(nullptr, -1, std::move(base), 0));
}

std::shared_ptr<const FlipChain> FlipChain::extend(const std::shared_ptr<const FlipChain>& chain,
                                                   EdgeId e) {
  IdealTriangulation next = chain->tip().flipped(e);
  return std::shared_ptr<const FlipChain>(new FlipChain(chain, e, std::move(next), chain->depth() + 1));
}

const IdealTriangulation& FlipChain::base() const {
  const FlipChain* node = this;
  while (node->parent_) node = node->parent_.get();
  return node->tip_;
}

std::vector<EdgeId> FlipChain::flips() const {
  std::vector<EdgeId> out;
  for (const FlipChain* node = this; node->parent_; node = node->parent_.get()) out.push_back(node->via_);
  std::reverse(out.begin(), out.end());
  return out;
}

Coords FlipChain::to_tip(Coords v) const {
  std::vector<const FlipChain*> path;
  for (const FlipChain* node = this; node->parent_; node = node->parent_.get()) path.push_back(node);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    v = transport(v, (*it)->parent_->tip_, (*it)->via_);
  }
  return v;
}

Coords FlipChain::to_base(Coords v) const {
  // Flipping the tip at the same edge restores the parent exactly.
  for (const FlipChain* node = this; node->parent_; node = node->parent_.get()) {
    v = transport(v, node->tip_, node->via_);
  }
  return v;
}

SurfaceContext::SurfaceContext(Surface s) : surface(s), root(FlipChain::root(base_triangulation(s))) {}

CurveClass make_curve(const SurfaceContext& ctx, Coords coords) {
  if (!is_essential_curve(ctx.base(), coords)) {
    throw Error(ErrorCode::InvalidCoordinates, "coordinates do not describe an essential simple closed curve");
  }
  return CurveClass{std::move(coords)};
}

int ends_at_any(const IdealTriangulation& t, EdgeId f, const std::array<Puncture, 2>& endpoints) {
  int n = t.ends_at(f, endpoints[0]);
  if (endpoints[1] != endpoints[0]) n += t.ends_at(f, endpoints[1]);
  return n;
}

Coords arc_edge_intersections(const IdealTriangulation& t, const Coords& boundary_on_t,
                              const std::array<Puncture, 2>& endpoints) {
  // Walk each edge through the neighborhood N of the arc. A stretch inside N
  // between two boundary points separates the arc's ends once, or winds
  // around a loop's base puncture and meets the loop twice when it returns
  // to the boundary component it entered by. Stretches ending at a puncture
  // miss the arc.
  const auto labels = labeled_strands(t, boundary_on_t).labels;
  const bool loop = endpoints[0] == endpoints[1];
  auto is_end = [&](Puncture p) { return p == endpoints[0] || p == endpoints[1]; };
  Coords out(t.edge_count(), 0);
  for (EdgeId f = 0; f < t.edge_count(); ++f) {
    const HalfEdge side = t.sides(f)[0];
    const auto& points = labels[f];
    bool inside = is_end(t.tail(side));
    std::int64_t count = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (inside && j > 0) count += (loop && points[j - 1] == points[j]) ? 2 : 1;
      inside = !inside;
    }
    if (inside != is_end(t.head(side))) {
      throw Error(ErrorCode::InvalidCoordinates, "edge leaves the arc neighborhood an inconsistent number of times");
    }
    out[f] = count;
  }
  return out;
}

ArcClass make_arc(const SurfaceContext& ctx, ChainPtr chain, EdgeId edge) {
  const IdealTriangulation& tip = chain->tip();
  if (edge < 0 || edge >= tip.edge_count()) throw Error(ErrorCode::RegistryMiss, "anchor edge out of range");
  ArcClass a;
  a.chain = std::move(chain);
  a.edge = edge;
  a.endpoints = tip.endpoints(edge);
  const EdgeId edges[] = {edge};
  a.boundary = a.chain->to_base(neighborhood_multicurve(tip, edges));

  const IdealTriangulation& base = ctx.base();
  a.base = arc_edge_intersections(base, a.boundary, a.endpoints);
  if (std::all_of(a.base.begin(), a.base.end(), [](std::int64_t x) { return x == 0; })) {
    bool found = false;
    for (EdgeId f = 0; f < base.edge_count() && !found; ++f) {
      if (base.endpoints(f) != a.endpoints) continue;
      const EdgeId single[] = {f};
      if (neighborhood_multicurve(base, single) == a.boundary) {
        a.base[f] = -1;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::RegistryMiss, "arc disjoint from the base triangulation but not one of its edges");
  }
  return a;
}

bool class_equal(const VertexClass& x, const VertexClass& y) {
  if (x.index() != y.index()) return false;
  if (const auto* cx = std::get_if<CurveClass>(&x)) return cx->coords == std::get<CurveClass>(y).coords;
  const auto& ax = std::get<ArcClass>(x);
  const auto& ay = std::get<ArcClass>(y);
  return ax.endpoints == ay.endpoints && ax.base == ay.base && ax.boundary == ay.boundary;
}

namespace {

std::string coords_text(const Coords& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string arc_key(const ArcClass& a) {
  return "a" + std::to_string(a.endpoints[0]) + "-" + std::to_string(a.endpoints[1]) + ":" + coords_text(a.boundary);
}

std::string class_key(const VertexClass& v) {
  if (const auto* c = std::get_if<CurveClass>(&v)) return "c:" + coords_text(c->coords);
  return arc_key(std::get<ArcClass>(v));
}

}  // namespace acx
