#include "acx/cut_surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "acx/error.hpp"

namespace acx {

bool CutRegion::is_triangle() const {
  return genus == 0 && interior_punctures.empty() && boundary.size() == 1 &&
         boundary[0].kind == BoundaryCycle::Kind::Arc && boundary[0].length == 3;
}

bool CutRegion::is_arc_annulus() const {
  if (genus != 0 || !interior_punctures.empty() || boundary.size() != 2) return false;
  int curves = 0, loops = 0;
  for (const auto& c : boundary) {
    if (c.kind == BoundaryCycle::Kind::Curve) ++curves;
    else if (c.length == 1) ++loops;
  }
  return curves == 1 && loops == 1;
}

bool CutRegion::is_curve_pants() const {
  return genus == 0 && interior_punctures.empty() && boundary.size() == 3 &&
         std::all_of(boundary.begin(), boundary.end(),
                     [](const BoundaryCycle& c) { return c.kind == BoundaryCycle::Kind::Curve; });
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

struct Side {
  enum class Kind { Segment, Chord } kind;
  HalfEdge half_edge = -1;  // segments only
  std::int64_t index = 0;   // segment index along the half-edge
};

struct Piece {
  std::vector<Side> sides;
  // Puncture sitting at the corner after side i, or 0.
  std::vector<Puncture> corner_puncture;
};

}  // namespace

std::vector<CutRegion> cut_surface(const IdealTriangulation& t, const Coords& curves,
                                   std::span<const EdgeId> cut_edges) {
  using T = IdealTriangulation;
  if (!satisfies_triangle_conditions(t, curves)) {
    throw Error(ErrorCode::InvalidCoordinates, "cut multicurve violates the triangle conditions");
  }
  std::vector<char> is_cut(t.edge_count(), 0);
  for (EdgeId e : cut_edges) {
    if (curves.at(e) != 0) throw Error(ErrorCode::InvalidCoordinates, "cut curve crosses a cut edge");
    is_cut[e] = 1;
  }
  auto x = [&](HalfEdge h) { return curves[t.edge_of(h)]; };

  std::vector<Piece> pieces;
  auto add_piece = [&](std::vector<Side> sides, std::vector<Puncture> corners) {
    pieces.push_back(Piece{std::move(sides), std::move(corners)});
  };
  auto seg = [](HalfEdge h, std::int64_t s) { return Side{Side::Kind::Segment, h, s}; };
  const Side chord{Side::Kind::Chord};

  for (int tri = 0; tri < t.triangle_count(); ++tri) {
    std::array<HalfEdge, 3> h = {3 * tri, 3 * tri + 1, 3 * tri + 2};
    std::array<std::int64_t, 3> around{};  // arcs at the corner after side i
    for (int i = 0; i < 3; ++i) around[i] = corner_count(t, curves, h[i]);

    for (int i = 0; i < 3; ++i) {
      const HalfEdge hi = h[i];
      const HalfEdge hn = T::sigma(hi);
      const std::int64_t xi = x(hi);
      if (around[i] >= 1) {
        add_piece({seg(hi, xi), seg(hn, 0), chord}, {t.head(hi), 0, 0});
      }
      for (std::int64_t k = 1; k < around[i]; ++k) {
        add_piece({seg(hi, xi - k), chord, seg(hn, k), chord}, {0, 0, 0, 0});
      }
    }
    std::vector<Side> central;
    std::vector<Puncture> corners;
    for (int i = 0; i < 3; ++i) {
      const std::int64_t tail_arcs = around[(i + 2) % 3];
      central.push_back(seg(h[i], tail_arcs));
      if (around[i] >= 1) {
        corners.push_back(0);
        central.push_back(chord);
        corners.push_back(0);
      } else {
        corners.push_back(t.head(h[i]));
      }
    }
    add_piece(std::move(central), std::move(corners));
  }

  // Slots: corner after side i of piece p.
  std::vector<int> slot_base(pieces.size() + 1, 0);
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    slot_base[p + 1] = slot_base[p] + static_cast<int>(pieces[p].sides.size());
  }
  auto slot = [&](std::size_t p, std::size_t i) {
    const std::size_t n = pieces[p].sides.size();
    return slot_base[p] + static_cast<int>(i % n);
  };
  auto start_slot = [&](std::size_t p, std::size_t i) {
    const std::size_t n = pieces[p].sides.size();
    return slot(p, (i + n - 1) % n);
  };

  std::map<std::pair<HalfEdge, std::int64_t>, std::pair<std::size_t, std::size_t>> segment_owner;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    for (std::size_t i = 0; i < pieces[p].sides.size(); ++i) {
      const Side& s = pieces[p].sides[i];
      if (s.kind == Side::Kind::Segment) segment_owner[{s.half_edge, s.index}] = {p, i};
    }
  }

  UnionFind vertex_classes(slot_base.back());
  UnionFind components(static_cast<int>(pieces.size()));
  int glued = 0;
  struct FreeSide {
    int from, to;
    BoundaryCycle::Kind kind;
    std::size_t piece;
  };
  std::vector<FreeSide> free_sides;

  for (std::size_t p = 0; p < pieces.size(); ++p) {
    for (std::size_t i = 0; i < pieces[p].sides.size(); ++i) {
      const Side& s = pieces[p].sides[i];
      const bool is_free = s.kind == Side::Kind::Chord || is_cut[t.edge_of(s.half_edge)];
      if (is_free) {
        free_sides.push_back({start_slot(p, i), slot(p, i),
                              s.kind == Side::Kind::Chord ? BoundaryCycle::Kind::Curve
                                                          : BoundaryCycle::Kind::Arc,
                              p});
        continue;
      }
      const HalfEdge partner = t.iota(s.half_edge);
      const auto [q, j] = segment_owner.at({partner, x(s.half_edge) - s.index});
      if (q < p || (q == p && j < i)) continue;  // glue each pair once
      ++glued;
      vertex_classes.unite(start_slot(p, i), slot(q, j));
      vertex_classes.unite(slot(p, i), start_slot(q, j));
      components.unite(static_cast<int>(p), static_cast<int>(q));
    }
  }

  // Collect per-component data.
  std::map<int, int> component_index;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const int root = components.find(static_cast<int>(p));
    component_index.try_emplace(root, static_cast<int>(component_index.size()));
  }
  const int count = static_cast<int>(component_index.size());
  std::vector<CutRegion> regions(count);
  std::vector<int> faces(count, 0), edges(count, 0), vertices(count, 0);
  auto component_of_piece = [&](std::size_t p) { return component_index.at(components.find(static_cast<int>(p))); };
  std::vector<int> slot_piece(slot_base.back());
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    ++faces[component_of_piece(p)];
    for (int s = slot_base[p]; s < slot_base[p + 1]; ++s) slot_piece[s] = static_cast<int>(p);
  }
  edges.assign(count, 0);
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    // Every glued side is counted twice across the two pieces.
    for (std::size_t i = 0; i < pieces[p].sides.size(); ++i) {
      const Side& s = pieces[p].sides[i];
      const bool is_free = s.kind == Side::Kind::Chord || is_cut[t.edge_of(s.half_edge)];
      edges[component_of_piece(p)] += is_free ? 2 : 1;
    }
  }
  for (int& e : edges) e /= 2;
  (void)glued;

  std::vector<char> boundary_class(slot_base.back(), 0);
  for (const auto& f : free_sides) {
    boundary_class[vertex_classes.find(f.from)] = 1;
    boundary_class[vertex_classes.find(f.to)] = 1;
  }
  std::vector<char> class_seen(slot_base.back(), 0);
  for (int s = 0; s < slot_base.back(); ++s) {
    const int root = vertex_classes.find(s);
    if (class_seen[root]) continue;
    class_seen[root] = 1;
    const int comp = component_of_piece(slot_piece[s]);
    ++vertices[comp];
  }
  // Interior punctures: puncture corners whose class touches no free side.
  std::vector<char> reported(slot_base.back(), 0);
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    for (std::size_t i = 0; i < pieces[p].sides.size(); ++i) {
      const Puncture label = pieces[p].corner_puncture[i];
      if (label == 0) continue;
      const int root = vertex_classes.find(slot(p, i));
      if (boundary_class[root] || reported[root]) continue;
      reported[root] = 1;
      regions[component_of_piece(p)].interior_punctures.push_back(label);
    }
  }

  // Boundary circles: follow free sides head to tail through vertex classes.
  std::map<int, std::size_t> free_from;
  for (std::size_t k = 0; k < free_sides.size(); ++k) {
    const auto [it, inserted] = free_from.emplace(vertex_classes.find(free_sides[k].from), k);
    if (!inserted) throw Error(ErrorCode::InvalidInput, "cut surface boundary is not a union of circles");
  }
  std::vector<char> used(free_sides.size(), 0);
  for (std::size_t k = 0; k < free_sides.size(); ++k) {
    if (used[k]) continue;
    BoundaryCycle cycle{free_sides[k].kind, 0};
    std::size_t cur = k;
    while (!used[cur]) {
      used[cur] = 1;
      ++cycle.length;
      if (free_sides[cur].kind != cycle.kind) {
        throw Error(ErrorCode::InvalidInput, "boundary circle mixes curve and arc sides");
      }
      cur = free_from.at(vertex_classes.find(free_sides[cur].to));
    }
    regions[component_of_piece(free_sides[k].piece)].boundary.push_back(cycle);
  }

  for (int c = 0; c < count; ++c) {
    CutRegion& r = regions[c];
    r.euler_characteristic = vertices[c] - edges[c] + faces[c];
    r.genus = (2 - r.euler_characteristic - static_cast<int>(r.boundary.size())) / 2;
    std::sort(r.interior_punctures.begin(), r.interior_punctures.end());
  }
  return regions;
}

}  // namespace acx
