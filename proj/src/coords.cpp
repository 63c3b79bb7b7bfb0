#include "acx/coords.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "acx/error.hpp"

namespace acx {

namespace {

std::int64_t side_value(const IdealTriangulation& t, std::span<const std::int64_t> v, HalfEdge h) {
  return v[t.edge_of(h)];
}

void require_valid(const IdealTriangulation& t, std::span<const std::int64_t> v) {
  if (static_cast<int>(v.size()) != t.edge_count()) {
    throw Error(ErrorCode::InvalidCoordinates, "coordinate vector length does not match edge count");
  }
  if (!satisfies_triangle_conditions(t, v)) {
    throw Error(ErrorCode::InvalidCoordinates, "coordinates violate the triangle conditions");
  }
}

}  // namespace

bool satisfies_triangle_conditions(const IdealTriangulation& t, std::span<const std::int64_t> v) {
  if (static_cast<int>(v.size()) != t.edge_count()) return false;
  if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x < 0; })) return false;
  for (int tri = 0; tri < t.triangle_count(); ++tri) {
    const std::int64_t x = side_value(t, v, 3 * tri);
    const std::int64_t y = side_value(t, v, 3 * tri + 1);
    const std::int64_t z = side_value(t, v, 3 * tri + 2);
    if (x > y + z || y > z + x || z > x + y) return false;
    if ((x + y + z) % 2 != 0) return false;
  }
  return true;
}

std::int64_t corner_count(const IdealTriangulation& t, std::span<const std::int64_t> v, HalfEdge h) {
  using T = IdealTriangulation;
  return (side_value(t, v, h) + side_value(t, v, T::sigma(h)) - side_value(t, v, T::sigma2(h))) / 2;
}

Coords transport(const Coords& v, const IdealTriangulation& t, EdgeId e) {
  require_valid(t, v);
  if (t.is_self_folded(e)) {
    throw Error(ErrorCode::SelfFoldedEdge, "cannot transport across a self-folded edge");
  }
  using T = IdealTriangulation;
  const HalfEdge h = t.sides(e)[0];
  const HalfEdge hp = t.sides(e)[1];
  const std::int64_t a = side_value(t, v, T::sigma(h));
  const std::int64_t b = side_value(t, v, T::sigma2(h));
  const std::int64_t c = side_value(t, v, T::sigma(hp));
  const std::int64_t d = side_value(t, v, T::sigma2(hp));
  Coords out = v;
  out[e] = std::max(a + c, b + d) - v[e];
  return out;
}

Coords puncture_link(const IdealTriangulation& t, Puncture p) {
  Coords v(t.edge_count(), 0);
  for (EdgeId e = 0; e < t.edge_count(); ++e) v[e] = t.ends_at(e, p);
  return v;
}

bool is_peripheral(const IdealTriangulation& t, const Coords& v) {
  for (Puncture p = 1; p <= t.puncture_count(); ++p) {
    if (puncture_link(t, p) == v) return true;
  }
  return false;
}

Coords neighborhood_multicurve(const IdealTriangulation& t, std::span<const EdgeId> edges) {
  std::vector<char> in_graph(t.edge_count(), 0);
  for (EdgeId e : edges) in_graph.at(e) = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int tri = 0; tri < t.triangle_count(); ++tri) {
      int inside = 0;
      EdgeId outside = -1;
      for (int j = 0; j < 3; ++j) {
        const EdgeId f = t.edge_of(3 * tri + j);
        if (in_graph[f]) ++inside;
        else outside = f;
      }
      if (inside == 2 && outside >= 0) {
        in_graph[outside] = 1;
        changed = true;
      }
    }
  }
  std::set<Puncture> vertices;
  for (EdgeId e : edges) {
    const auto ends = t.endpoints(e);
    vertices.insert(ends.begin(), ends.end());
  }
  Coords v(t.edge_count(), 0);
  for (EdgeId f = 0; f < t.edge_count(); ++f) {
    if (in_graph[f]) continue;
    for (Puncture p : vertices) v[f] += t.ends_at(f, p);
  }
  return v;
}

std::vector<Strand> strands(const IdealTriangulation& t, const Coords& v) {
  return labeled_strands(t, v).strands;
}

LabeledStrands labeled_strands(const IdealTriangulation& t, const Coords& v) {
  require_valid(t, v);
  using T = IdealTriangulation;
  std::vector<std::vector<int>> visited(t.edge_count());
  for (EdgeId e = 0; e < t.edge_count(); ++e) visited[e].assign(static_cast<std::size_t>(v[e]), -1);

  auto canonical = [&](HalfEdge h, std::int64_t j) {
    const EdgeId e = t.edge_of(h);
    return t.sides(e)[0] == h ? j : v[e] - 1 - j;
  };

  std::vector<Strand> out;
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    for (std::int64_t p = 0; p < v[e]; ++p) {
      if (visited[e][p] >= 0) continue;
      Strand s;
      s.coords.assign(t.edge_count(), 0);
      const HalfEdge g0 = t.sides(e)[0];
      HalfEdge g = g0;
      std::int64_t j = p;
      do {
        const std::int64_t around_tail = corner_count(t, v, T::sigma2(g));
        HalfEdge exit;
        std::int64_t exit_pos;
        if (j < around_tail) {
          exit = T::sigma2(g);
          exit_pos = side_value(t, v, exit) - 1 - j;
        } else {
          exit = T::sigma(g);
          exit_pos = side_value(t, v, g) - 1 - j;
        }
        s.exits.push_back(exit);
        const EdgeId f = t.edge_of(exit);
        visited[f][canonical(exit, exit_pos)] = static_cast<int>(out.size());
        ++s.coords[f];
        g = t.iota(exit);
        j = v[f] - 1 - exit_pos;
      } while (!(g == g0 && j == p));
      out.push_back(std::move(s));
    }
  }
  return {std::move(out), std::move(visited)};
}

bool is_essential_curve(const IdealTriangulation& t, const Coords& v) {
  if (!satisfies_triangle_conditions(t, v)) return false;
  if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) return false;
  if (strands(t, v).size() != 1) return false;
  return !is_peripheral(t, v);
}

std::int64_t weight(const Coords& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace acx
