#include "acx/classify.hpp"

#include <algorithm>

#include "acx/cut_surface.hpp"
#include "acx/error.hpp"

namespace acx {

std::string_view to_string(TypeLabel t) {
  switch (t) {
    case TypeLabel::SepCurve: return "SepCurve";
    case TypeLabel::SepLoopArc: return "SepLoopArc";
    case TypeLabel::NonsepCurve: return "NonsepCurve";
    case TypeLabel::NonsepLoopArc: return "NonsepLoopArc";
    case TypeLabel::InterPunctureArc: return "InterPunctureArc";
  }
  return "?";
}

std::optional<TypeLabel> parse_type_label(std::string_view s) {
  for (auto t : {TypeLabel::SepCurve, TypeLabel::SepLoopArc, TypeLabel::NonsepCurve, TypeLabel::NonsepLoopArc,
                 TypeLabel::InterPunctureArc}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

bool separating(const SurfaceContext& ctx, const VertexClass& x) {
  if (const auto* c = std::get_if<CurveClass>(&x)) return cut_surface(ctx.base(), c->coords, {}).size() == 2;
  const auto& a = std::get<ArcClass>(x);
  if (!a.chain) return false;
  const IdealTriangulation& t = a.chain->tip();
  const EdgeId cut[] = {a.edge};
  return cut_surface(t, Coords(t.edge_count(), 0), cut).size() == 2;
}

TypeLabel classify_topological(const SurfaceContext& ctx, const VertexClass& x) {
  const bool sep = separating(ctx, x);
  if (is_curve(x)) return sep ? TypeLabel::SepCurve : TypeLabel::NonsepCurve;
  if (!std::get<ArcClass>(x).is_loop()) return TypeLabel::InterPunctureArc;
  return sep ? TypeLabel::SepLoopArc : TypeLabel::NonsepLoopArc;
}

Classifier::Classifier(const SimplicialBall& b) : ball_(&b), cliques_(maximal_cliques(b)), best_(b.size(), 0) {
  for (const auto& c : cliques_) {
    if (!c.confident) continue;
    for (int m : c.members) best_[m] = std::max(best_[m], static_cast<int>(c.members.size()));
  }
}

DimThrough Classifier::max_dim_through(int v) const {
  const SimplicialBall& b = *ball_;
  b.check_vertex(v);
  DimThrough d;
  d.dim = best_[v] - 1;
  if (b.closed) {
    d.confident = true;
  } else if (b.context) {
    // Top simplices are triangulations, so curves stop one short.
    const int ceiling = max_simplex_dim(b.surface) - (is_curve(b.vertices[v]) ? 1 : 0);
    d.confident = d.dim == ceiling;
  }
  return d;
}

CombinatorialResult Classifier::steps_ab(int v) const {
  const SimplicialBall& b = *ball_;
  CombinatorialResult r;
  const Subgraph dual = dual_link(b, v);
  r.link_size = dual.size();
  r.dual_link_components = static_cast<int>(dual.components().size());
  r.dual_link_disconnected = r.dual_link_components > 1;
  r.dim = max_dim_through(v);
  if (!b.complete[v]) {
    r.reason = "vertex is not complete";
    return r;
  }
  if (!r.dim.confident) {
    r.reason = "dimension through the vertex is not confident";
    return r;
  }
  const int top = max_simplex_dim(b.surface);
  if (r.dim.dim != top && r.dim.dim != top - 1) {
    r.reason = "dimension through the vertex matches no type";
    return r;
  }
  const bool high = r.dim.dim == top;
  if (r.dual_link_disconnected) {
    r.label = high ? TypeLabel::SepLoopArc : TypeLabel::SepCurve;
  } else if (!high) {
    r.label = TypeLabel::NonsepCurve;
  }
  return r;
}

CombinatorialResult Classifier::classify(int v) const {
  const SimplicialBall& b = *ball_;
  b.check_vertex(v);
  CombinatorialResult r = steps_ab(v);
  if (r.label || !r.reason.empty()) return r;

  // Step (c): a complete separating curve z in Lk(v) with St(z) in St(v).
  const Surface sf = b.surface;
  if (3 * sf.genus + sf.punctures - 3 < 1) {
    r.reason = "no essential curves, so no witness can exist";
    return r;
  }
  bool unsure = false;
  for (int z : b.adjacency[v]) {
    const auto& nz = b.adjacency[z];
    const bool contained = std::all_of(nz.begin(), nz.end(), [&](int w) { return w == v || b.adjacent(v, w); });
    if (!contained) continue;
    ++r.candidates_checked;
    const CombinatorialResult rz = steps_ab(z);
    if (!rz.label) {
      unsure = true;
      continue;
    }
    if (*rz.label == TypeLabel::SepCurve) {
      r.witness = z;
      r.label = TypeLabel::InterPunctureArc;
      return r;
    }
  }
  if (unsure) {
    r.reason = "a possible witness could not be classified";
    return r;
  }
  r.label = TypeLabel::NonsepLoopArc;
  return r;
}

DimThrough max_dim_through(const SimplicialBall& b, int v) { return Classifier(b).max_dim_through(v); }

CombinatorialResult classify_combinatorial(const SimplicialBall& b, int v) { return Classifier(b).classify(v); }

Stabilization stabilization(Surface s, const VertexClass& x, const BallBounds& start, int steps,
                            const BallOptions& options) {
  Stabilization out;
  BallBounds bounds = start;
  for (int k = 0; k < steps; ++k) {
    const SimplicialBall b = build_ball(s, ComplexKind::AC, bounds, options);
    const int v = b.find(x);
    std::optional<TypeLabel> label;
    if (v >= 0) label = classify_combinatorial(b, v).label;
    out.radii.push_back(bounds.radius);
    out.labels.push_back(label);
    ++bounds.radius;
    bounds.weight += 2;
  }
  for (std::size_t k = out.labels.size(); k-- > 0;) {
    if (out.labels[k] != out.labels.back()) break;
    out.stable_from = out.radii[k];
  }
  if (!out.labels.empty() && !out.labels.back()) out.stable_from.reset();
  return out;
}

}  // namespace acx
