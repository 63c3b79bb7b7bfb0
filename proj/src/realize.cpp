#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "acx/error.hpp"
#include "acx/intersect.hpp"

namespace acx {

EdgeId find_arc_edge(const IdealTriangulation& t, const Coords& boundary_on_t,
                     const std::array<Puncture, 2>& endpoints) {
  const auto crossings = arc_edge_intersections(t, boundary_on_t, endpoints);
  if (std::any_of(crossings.begin(), crossings.end(), [](std::int64_t x) { return x != 0; })) return -1;
  for (EdgeId f = 0; f < t.edge_count(); ++f) {
    if (t.endpoints(f) != endpoints) continue;
    const EdgeId one[] = {f};
    if (neighborhood_multicurve(t, one) == boundary_on_t) return f;
  }
  return -1;
}

namespace {

struct Node {
  ChainPtr chain;
  Coords boundary;  // target arc's boundary, relative to chain->tip()
  std::int64_t score = 0;
  std::size_t seq = 0;
};

struct Worse {
  bool operator()(const Node& a, const Node& b) const {
    if (a.score != b.score) return a.score > b.score;
    if (a.chain->depth() != b.chain->depth()) return a.chain->depth() > b.chain->depth();
    return a.seq > b.seq;
  }
};

// The bare map can repeat at a different point of the mapping class group,
// so the target's coordinates are part of the state.
std::string state_key(const IdealTriangulation& t, const Coords& boundary) {
  std::string key;
  for (auto x : boundary) key += std::to_string(x) + ",";
  key += "|";
  for (HalfEdge h : t.iota_array()) key += std::to_string(h) + ",";
  key += "|";
  for (const auto& e : t.edges()) key += std::to_string(e[0]) + ",";
  return key;
}

std::int64_t total(const Coords& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace

std::pair<ChainPtr, EdgeId> place_arc(const ChainPtr& start, const ArcClass& arc, std::span<const EdgeId> fixed,
                                      const RealizeOptions& options) {
  std::priority_queue<Node, std::vector<Node>, Worse> open;
  std::set<std::string> seen;
  std::size_t seq = 0;

  auto push = [&](ChainPtr chain, Coords boundary) {
    const IdealTriangulation& t = chain->tip();
    if (!seen.insert(state_key(t, boundary)).second) return;
    const auto n = arc_edge_intersections(t, boundary, arc.endpoints);
    for (EdgeId f : fixed) {
      if (n[f] != 0) throw Error(ErrorCode::InvalidInput, "arcs to realize are not pairwise disjoint");
    }
    open.push(Node{std::move(chain), std::move(boundary), total(n), seq++});
  };

  push(start, start->to_tip(arc.boundary));
  std::size_t expanded = 0;
  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    const IdealTriangulation& t = node.chain->tip();
    if (node.score == 0) {
      const EdgeId e = find_arc_edge(t, node.boundary, arc.endpoints);
      if (e >= 0) return {node.chain, e};
    }
    if (++expanded > options.max_nodes) break;
    for (EdgeId f = 0; f < t.edge_count(); ++f) {
      if (t.is_self_folded(f) || std::find(fixed.begin(), fixed.end(), f) != fixed.end()) continue;
      push(FlipChain::extend(node.chain, f), transport(node.boundary, t, f));
    }
  }
  throw Error(ErrorCode::ResourceLimit, "no common triangulation found within the search budget");
}

Realization realize_arcs(const SurfaceContext& ctx, std::span<const ArcClass> arcs, const RealizeOptions& options) {
  Realization r;
  r.chain = ctx.root;
  if (arcs.empty()) return r;
  r.chain = arcs[0].chain;
  r.edges.push_back(arcs[0].edge);
  for (std::size_t i = 1; i < arcs.size(); ++i) {
    auto [chain, e] = place_arc(r.chain, arcs[i], r.edges, options);
    if (std::find(r.edges.begin(), r.edges.end(), e) != r.edges.end()) {
      throw Error(ErrorCode::InvalidInput, "repeated arc in realization");
    }
    r.chain = std::move(chain);
    r.edges.push_back(e);
  }
  return r;
}

std::vector<CurveClass> essential_components(const SurfaceContext& ctx, const Coords& multicurve) {
  const IdealTriangulation& base = ctx.base();
  std::vector<CurveClass> out;
  std::set<Coords> seen;
  for (const Strand& s : strands(base, multicurve)) {
    if (!is_essential_curve(base, s.coords)) continue;
    if (seen.insert(s.coords).second) out.push_back(CurveClass{s.coords});
  }
  return out;
}

std::vector<CurveClass> neighborhood_boundary(const SurfaceContext& ctx, const ArcClass& a) {
  return essential_components(ctx, a.boundary);
}

std::vector<CurveClass> union_boundary(const SurfaceContext& ctx, const ArcClass& a, const ArcClass& b) {
  const ArcClass pair[] = {a, b};
  const Realization r = realize_arcs(ctx, pair);
  const Coords on_tip = neighborhood_multicurve(r.chain->tip(), r.edges);
  return essential_components(ctx, r.chain->to_base(on_tip));
}

}  // namespace acx
