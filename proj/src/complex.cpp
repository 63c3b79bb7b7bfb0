#include "acx/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "acx/classify.hpp"
#include "acx/cut_surface.hpp"
#include "acx/error.hpp"
#include "acx/intersect.hpp"
#include "acx/parallel.hpp"
#include "acx/registry.hpp"

namespace acx {

std::string_view to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::A: return "A";
    case ComplexKind::C: return "C";
    case ComplexKind::AC: return "AC";
  }
  return "?";
}

std::optional<ComplexKind> parse_complex_kind(std::string_view s) {
  if (s == "A") return ComplexKind::A;
  if (s == "C") return ComplexKind::C;
  if (s == "AC") return ComplexKind::AC;
  return std::nullopt;
}

bool SimplicialBall::adjacent(int u, int v) const {
  const auto& n = adjacency[u];
  return std::binary_search(n.begin(), n.end(), v);
}

std::vector<std::pair<int, int>> SimplicialBall::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    for (int v : adjacency[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int SimplicialBall::find(const VertexClass& v) const {
  for (int i = 0; i < size(); ++i) {
    if (class_equal(vertices[i], v)) return i;
  }
  return -1;
}

void SimplicialBall::check_vertex(int v) const {
  if (v < 0 || v >= size()) throw Error(ErrorCode::UnknownVertex, "no vertex " + std::to_string(v) + " in ball");
}

bool SimplicialBall::all_complete() const {
  return std::all_of(complete.begin(), complete.end(), [](char c) { return c != 0; });
}

std::vector<CurveClass> enumerate_curves(const SurfaceContext& ctx, std::int64_t max_weight) {
  const IdealTriangulation& t = ctx.base();
  const int n = t.edge_count();
  // Triangles become checkable once their highest edge is assigned.
  std::vector<std::vector<int>> closing(n);
  for (int tri = 0; tri < t.triangle_count(); ++tri) {
    int top = 0;
    for (int k = 0; k < 3; ++k) top = std::max(top, t.edge_of(3 * tri + k));
    closing[top].push_back(tri);
  }
  auto triangle_ok = [&](const Coords& v, int tri) {
    const std::int64_t a = v[t.edge_of(3 * tri)], b = v[t.edge_of(3 * tri + 1)], c = v[t.edge_of(3 * tri + 2)];
    return a <= b + c && b <= a + c && c <= a + b && (a + b + c) % 2 == 0;
  };

  std::vector<CurveClass> out;
  Coords v(n, 0);
  auto rec = [&](auto&& self, int e, std::int64_t left) -> void {
    if (e == n) {
      if (is_essential_curve(t, v)) out.push_back(CurveClass{v});
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      v[e] = x;
      if (std::all_of(closing[e].begin(), closing[e].end(), [&](int tri) { return triangle_ok(v, tri); })) {
        self(self, e + 1, left - x);
      }
    }
    v[e] = 0;
  };
  rec(rec, 0, max_weight);
  std::sort(out.begin(), out.end(), [](const CurveClass& a, const CurveClass& b) {
    const auto wa = weight(a.coords), wb = weight(b.coords);
    return wa != wb ? wa < wb : a.coords < b.coords;
  });
  return out;
}

namespace {

bool curves_exist(Surface s) { return 3 * s.genus + s.punctures - 3 >= 1; }

void finish_graph(SimplicialBall& b, int jobs) {
  const int n = b.size();
  std::vector<std::vector<int>> later(n);
  parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t i) {
    for (int j = static_cast<int>(i) + 1; j < n; ++j) {
      if (disjoint(*b.context, b.vertices[i], b.vertices[j])) later[i].push_back(j);
    }
  });
  b.adjacency.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j : later[i]) {
      b.adjacency[i].push_back(j);
      b.adjacency[j].push_back(i);
    }
  }
  for (auto& a : b.adjacency) std::sort(a.begin(), a.end());
}

}  // namespace

SimplicialBall build_ball(Surface s, ComplexKind kind, const BallBounds& bounds, const BallOptions& options) {
  SimplicialBall b;
  b.surface = s;
  b.kind = kind;
  b.bounds = bounds;
  const bool want_arcs = kind != ComplexKind::C;
  const bool want_curves = kind != ComplexKind::A;

  const SpecialCase sc = special_case(s);
  if (sc == SpecialCase::EmptyComplex) {
    b.closed = true;
    return b;
  }
  if (sc == SpecialCase::SinglePoint) {
    // The only class is the arc between the two punctures.
    if (want_arcs) {
      ArcClass a;
      a.endpoints = {1, 2};
      b.vertices.push_back(a);
      b.types.push_back(TypeLabel::InterPunctureArc);
      b.depths.push_back(0);
      b.complete.push_back(1);
      b.adjacency.emplace_back();
    }
    b.closed = true;
    return b;
  }
  if (!triangulable(s)) throw Error(ErrorCode::UnsupportedSurface, "no ideal triangulation of " + to_string(s));

  b.context = std::make_shared<const SurfaceContext>(s);
  const SurfaceContext& ctx = *b.context;

  bool arcs_closed = !want_arcs;
  if (want_arcs) {
    const FlipRegistry reg = flip_ball(ctx, bounds.radius, {options.node_budget, DedupMode::Isotopy, options.jobs});
    arcs_closed = reg.closed();
    for (std::size_t i = 0; i < reg.arcs().size(); ++i) {
      b.vertices.push_back(reg.arcs()[i]);
      b.depths.push_back(reg.arc_depths()[i]);
    }
  }
  if (want_curves) {
    for (auto& c : enumerate_curves(ctx, bounds.weight)) {
      b.vertices.push_back(std::move(c));
      b.depths.push_back(-1);
    }
  }
  b.closed = arcs_closed && (!want_curves || !curves_exist(s));

  const int n = b.size();
  b.types.assign(n, TypeLabel::SepCurve);
  b.complete.assign(n, 0);
  parallel_for(static_cast<std::size_t>(n), options.jobs, [&](std::size_t i) {
    const VertexClass& v = b.vertices[i];
    b.types[i] = classify_topological(ctx, v);
    if (b.closed) {
      b.complete[i] = 1;
      return;
    }
    const std::int64_t w_max = bounds.weight - bounds.weight_margin;
    if (const auto* c = std::get_if<CurveClass>(&v)) {
      b.complete[i] = weight(c->coords) <= w_max;
      return;
    }
    bool ok = b.depths[i] <= bounds.radius - bounds.radius_margin;
    if (ok && want_curves) {
      for (const auto& c : neighborhood_boundary(ctx, std::get<ArcClass>(v))) ok = ok && weight(c.coords) <= w_max;
    }
    b.complete[i] = ok;
  });

  finish_graph(b, options.jobs);
  return b;
}

int Subgraph::edge_count() const {
  int twice = 0;
  for (const auto& a : adjacency) twice += static_cast<int>(a.size());
  return twice / 2;
}

std::vector<std::vector<int>> Subgraph::components() const {
  std::vector<int> comp(size(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < size(); ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<int> stack = {s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (int w : adjacency[u]) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

Subgraph induced(const SimplicialBall& b, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  Subgraph g;
  g.vertices = std::move(vertices);
  g.adjacency.assign(g.vertices.size(), {});
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      if (b.adjacent(g.vertices[i], g.vertices[j])) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }
  return g;
}

Subgraph star(const SimplicialBall& b, int v) {
  b.check_vertex(v);
  std::vector<int> vs = b.adjacency[v];
  vs.push_back(v);
  return induced(b, std::move(vs));
}

Subgraph link(const SimplicialBall& b, int v) {
  b.check_vertex(v);
  return induced(b, b.adjacency[v]);
}

Subgraph dual_link(const SimplicialBall& b, int v) {
  Subgraph g = link(b, v);
  Subgraph d;
  d.vertices = g.vertices;
  d.adjacency.assign(g.size(), {});
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      if (i != j && !std::binary_search(g.adjacency[i].begin(), g.adjacency[i].end(), j)) d.adjacency[i].push_back(j);
    }
  }
  return d;
}

std::vector<Clique> maximal_cliques(const SimplicialBall& b, std::size_t max_cliques) {
  std::vector<Clique> out;
  std::vector<int> r;
  auto rec = [&](auto&& self, std::vector<int> p, std::vector<int> x) -> void {
    if (p.empty() && x.empty()) {
      if (out.size() >= max_cliques) {
        throw Error(ErrorCode::ResourceLimit, "more than " + std::to_string(max_cliques) + " maximal cliques");
      }
      Clique c{r, true};
      std::sort(c.members.begin(), c.members.end());
      for (int m : c.members) c.confident = c.confident && b.complete[m];
      out.push_back(std::move(c));
      return;
    }
    // Pivot: the vertex of P or X with most neighbors in P.
    int pivot = -1;
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
      for (int u : *set) {
        std::size_t k = 0;
        for (int w : p) k += b.adjacent(u, w);
        if (pivot < 0 || k > best) pivot = u, best = k;
      }
    }
    std::vector<int> todo;
    for (int u : p) {
      if (!b.adjacent(pivot, u)) todo.push_back(u);
    }
    for (int u : todo) {
      std::vector<int> np, nx;
      for (int w : p) {
        if (b.adjacent(u, w)) np.push_back(w);
      }
      for (int w : x) {
        if (b.adjacent(u, w)) nx.push_back(w);
      }
      r.push_back(u);
      self(self, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), u));
      x.push_back(u);
    }
  };
  std::vector<int> all(b.size());
  std::iota(all.begin(), all.end(), 0);
  if (b.size() > 0) rec(rec, all, {});
  std::sort(out.begin(), out.end(), [](const Clique& a, const Clique& c) { return a.members < c.members; });
  return out;
}

CliqueCertificate certify_clique(const SimplicialBall& b, const std::vector<int>& members) {
  CliqueCertificate cert;
  if (!b.context) {
    cert.realized = true;
    cert.maximal = b.size() == static_cast<int>(members.size());
    return cert;
  }
  const SurfaceContext& ctx = *b.context;
  std::vector<ArcClass> arcs;
  std::vector<const CurveClass*> curves;
  for (int m : members) {
    b.check_vertex(m);
    if (const auto* a = std::get_if<ArcClass>(&b.vertices[m])) arcs.push_back(*a);
    else curves.push_back(&std::get<CurveClass>(b.vertices[m]));
  }
  Realization r;
  try {
    r = realize_arcs(ctx, arcs);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidInput) return cert;
    throw;
  }
  const IdealTriangulation& t = r.chain->tip();
  Coords sum(t.edge_count(), 0);
  for (const auto* c : curves) {
    const Coords v = r.chain->to_tip(c->coords);
    for (EdgeId e : r.edges) {
      if (v[e] != 0) return cert;
    }
    for (int e = 0; e < t.edge_count(); ++e) sum[e] += v[e];
  }
  // Disjoint distinct curves add up to a multicurve with one strand each.
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      if (multicurve_intersection(ctx.base(), curves[i]->coords, curves[j]->coords) != 0) return cert;
    }
  }
  cert.realized = true;
  const auto regions = cut_surface(t, sum, r.edges);
  cert.maximal = std::all_of(regions.begin(), regions.end(), [](const CutRegion& g) {
    return g.is_triangle() || g.is_arc_annulus() || g.is_curve_pants();
  });
  return cert;
}

bool is_automorphism(const SimplicialBall& b, const std::vector<int>& perm) {
  const int n = b.size();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || hit[perm[i]]) return false;
    hit[perm[i]] = 1;
    if (is_arc(b.vertices[i]) != is_arc(b.vertices[perm[i]])) return false;
  }
  for (int u = 0; u < n; ++u) {
    if (b.adjacency[u].size() != b.adjacency[perm[u]].size()) return false;
    for (int v : b.adjacency[u]) {
      if (!b.adjacent(perm[u], perm[v])) return false;
    }
  }
  return true;
}

namespace {

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[q[i]];
  return out;
}

}  // namespace

AutomorphismGroup automorphisms(const SimplicialBall& b, std::size_t max_order) {
  if (!b.all_complete()) throw Error(ErrorCode::IncompleteBall, "automorphisms need a ball with every vertex complete");
  const int n = b.size();
  auto signature = [&](int v) {
    return std::tuple{is_arc(b.vertices[v]), b.adjacency[v].size(), static_cast<int>(b.types[v])};
  };

  AutomorphismGroup g;
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (g.elements.size() >= max_order) {
        throw Error(ErrorCode::ResourceLimit, "automorphism group larger than " + std::to_string(max_order));
      }
      g.elements.push_back(image);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || signature(v) != signature(w)) continue;
      bool ok = true;
      for (int u : b.adjacency[v]) {
        if (u < v && !b.adjacent(image[u], w)) ok = false;
      }
      for (int u = 0; u < v && ok; ++u) {
        if (!b.adjacent(u, v) && b.adjacent(image[u], w)) ok = false;
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      self(self, v + 1);
      used[w] = 0;
      image[v] = -1;
    }
  };
  rec(rec, 0);
  g.order = g.elements.size();

  // Greedy generating set: keep an element when it is not yet generated.
  std::set<std::vector<int>> generated;
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  generated.insert(identity);
  for (const auto& e : g.elements) {
    if (generated.count(e)) continue;
    g.generators.push_back(e);
    std::vector<std::vector<int>> frontier(generated.begin(), generated.end());
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& x : frontier) {
        for (const auto& s : g.generators) {
          auto y = compose(s, x);
          if (generated.insert(y).second) next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
  }
  return g;
}

std::vector<std::size_t> f_vector(const SimplicialBall& b, int max_dim, std::size_t max_simplices) {
  std::vector<std::size_t> f(std::max(max_dim + 1, 0), 0);
  std::size_t total = 0;
  // Extend each clique only by vertices above its largest member.
  auto grow = [&](auto&& self, int dim, const std::vector<int>& options) -> void {
    for (std::size_t k = 0; k < options.size(); ++k) {
      if (++total > max_simplices) throw Error(ErrorCode::ResourceLimit, "too many simplices");
      ++f[dim];
      if (dim == max_dim) continue;
      std::vector<int> next;
      for (std::size_t l = k + 1; l < options.size(); ++l) {
        if (b.adjacent(options[k], options[l])) next.push_back(options[l]);
      }
      self(self, dim + 1, next);
    }
  };
  if (max_dim < 0) return f;
  std::vector<int> all(b.size());
  std::iota(all.begin(), all.end(), 0);
  grow(grow, 0, all);
  return f;
}

}  // namespace acx
