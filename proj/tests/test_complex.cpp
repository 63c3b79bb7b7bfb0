#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "acx/complex.hpp"
#include "acx/error.hpp"
#include "acx/intersect.hpp"
#include "oracles.hpp"

using namespace acx;

namespace {

BallBounds bounds(int r, std::int64_t w) {
  BallBounds b;
  b.radius = r;
  b.weight = w;
  return b;
}

// Maximal cliques by plain extension, no pivoting.
std::set<std::vector<int>> naive_maximal_cliques(const SimplicialBall& b) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    bool extendable = false;
    for (int v = 0; v < b.size(); ++v) {
      if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
      if (std::all_of(cur.begin(), cur.end(), [&](int u) { return b.adjacent(u, v); })) extendable = true;
    }
    if (!extendable && !cur.empty()) {
      auto s = cur;
      std::sort(s.begin(), s.end());
      out.insert(s);
    }
    for (int v = from; v < b.size(); ++v) {
      if (!std::all_of(cur.begin(), cur.end(), [&](int u) { return b.adjacent(u, v); })) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int triangles(const SimplicialBall& b) {
  int count = 0;
  for (auto [u, v] : b.edges()) {
    for (int w : b.adjacency[v]) count += w > v && b.adjacent(u, w);
  }
  return count;
}

}  // namespace

TEST_CASE("degenerate complexes") {
  for (auto kind : {ComplexKind::A, ComplexKind::C, ComplexKind::AC}) {
    const auto b01 = build_ball({0, 1}, kind, bounds(3, 6));
    CHECK(b01.size() == 0);
    CHECK(b01.closed);
  }
  const auto b02 = build_ball({0, 2}, ComplexKind::AC, bounds(3, 6));
  CHECK(b02.size() == 1);
  CHECK(b02.edges().empty());
  CHECK(b02.types[0] == TypeLabel::InterPunctureArc);
  CHECK(link(b02, 0).size() == 0);
  CHECK(automorphisms(b02).order == 1);
  CHECK(build_ball({0, 2}, ComplexKind::C, bounds(3, 6)).size() == 0);
  CHECK_THROWS_AS(build_ball({1, 0}, ComplexKind::AC, bounds(1, 4)), Error);
}

TEST_CASE("three-punctured sphere") {
  const auto b = build_ball({0, 3}, ComplexKind::AC, bounds(4, 6));
  REQUIRE(b.closed);
  CHECK(b.size() == 6);
  CHECK(b.edges().size() == 9);
  CHECK(triangles(b) == 4);
  CHECK(b.all_complete());

  // Six arcs, one per endpoint pair: the three edges of a triangulation and
  // a loop at each puncture around one of the others. A loop at p misses
  // exactly the two arcs ending at p; the edges pairwise miss each other.
  std::map<std::array<Puncture, 2>, int> by_ends;
  for (int v = 0; v < b.size(); ++v) by_ends[std::get<ArcClass>(b.vertices[v]).endpoints] = v;
  REQUIRE(by_ends.size() == 6);
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      const auto a = std::get<ArcClass>(b.vertices[u]).endpoints;
      const auto c = std::get<ArcClass>(b.vertices[v]).endpoints;
      bool expected;
      const bool la = a[0] == a[1], lc = c[0] == c[1];
      if (la && lc) expected = false;
      else if (!la && !lc) expected = true;
      else if (la) expected = c[0] == a[0] || c[1] == a[0];
      else expected = a[0] == c[0] || a[1] == c[0];
      CHECK(b.adjacent(u, v) == expected);
    }
  }

  const auto cliques = maximal_cliques(b);
  CHECK(cliques.size() == 4);
  for (const auto& c : cliques) {
    CHECK(c.members.size() == 3);
    CHECK(c.confident);
    const auto cert = certify_clique(b, c.members);
    CHECK(cert.realized);
    CHECK(cert.maximal);
  }
  // Link of an edge: the other two edges and the loops at its endpoints,
  // a path of length three whose complement is again a path.
  for (int v = 0; v < b.size(); ++v) {
    const bool loop = std::get<ArcClass>(b.vertices[v]).is_loop();
    CHECK(link(b, v).size() == (loop ? 2 : 4));
    if (!loop) {
      CHECK(link(b, v).edge_count() == 3);
      CHECK(dual_link(b, v).connected());
    }
  }
}

TEST_CASE("automorphisms of the three-punctured sphere") {
  const auto b = build_ball({0, 3}, ComplexKind::A, bounds(4, 0));
  const auto g = automorphisms(b);
  CHECK(g.order == 6);
  CHECK(g.elements.size() == 6);
  for (const auto& e : g.elements) CHECK(is_automorphism(b, e));

  // Each permutation of the punctures moves arcs by their endpoints.
  std::array<int, 3> p = {1, 2, 3};
  std::set<std::vector<int>> induced_perms;
  do {
    std::vector<int> perm(b.size());
    for (int v = 0; v < b.size(); ++v) {
      auto e = std::get<ArcClass>(b.vertices[v]).endpoints;
      std::array<Puncture, 2> img = {p[e[0] - 1], p[e[1] - 1]};
      std::sort(img.begin(), img.end());
      for (int w = 0; w < b.size(); ++w) {
        if (std::get<ArcClass>(b.vertices[w]).endpoints == img) perm[v] = w;
      }
    }
    CHECK(is_automorphism(b, perm));
    induced_perms.insert(perm);
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(induced_perms.size() == 6);
  for (const auto& perm : induced_perms) {
    CHECK(std::find(g.elements.begin(), g.elements.end(), perm) != g.elements.end());
  }

  // Relabeling the vertices conjugates the group.
  SimplicialBall r = b;
  const std::vector<int> shuffle = {3, 5, 0, 4, 1, 2};
  for (int v = 0; v < b.size(); ++v) {
    r.vertices[shuffle[v]] = b.vertices[v];
    r.types[shuffle[v]] = b.types[v];
    r.complete[shuffle[v]] = b.complete[v];
  }
  for (int v = 0; v < b.size(); ++v) {
    r.adjacency[shuffle[v]].clear();
    for (int w : b.adjacency[v]) r.adjacency[shuffle[v]].push_back(shuffle[w]);
    std::sort(r.adjacency[shuffle[v]].begin(), r.adjacency[shuffle[v]].end());
  }
  CHECK(automorphisms(r).order == 6);
}

TEST_CASE("automorphisms need a complete ball") {
  const auto b = build_ball({0, 4}, ComplexKind::AC, bounds(2, 6));
  CHECK_THROWS_AS(automorphisms(b), Error);
}

TEST_CASE("edges are exactly the disjoint pairs") {
  const auto b = build_ball({0, 4}, ComplexKind::AC, bounds(3, 8));
  const SurfaceContext& ctx = *b.context;
  for (int u = 0; u < b.size(); ++u) {
    for (int v = u + 1; v < b.size(); ++v) {
      CHECK_FALSE(class_equal(b.vertices[u], b.vertices[v]));
      const bool empty = overlay_oracle(ctx, b.vertices[u], b.vertices[v]) == 0;
      CHECK(b.adjacent(u, v) == empty);
    }
  }
  CHECK(b.adjacency == build_ball({0, 4}, ComplexKind::AC, bounds(3, 8), {4}).adjacency);
}

TEST_CASE("curve enumeration matches brute force") {
  for (Surface s : {Surface{0, 4}, Surface{1, 1}, Surface{1, 2}}) {
    const SurfaceContext ctx(s);
    const auto got = enumerate_curves(ctx, 8);
    std::set<Coords> a, e;
    for (const auto& c : got) a.insert(c.coords);
    for (const auto& c : oracle::essential_curves(ctx.base(), 8)) e.insert(c);
    CHECK(a == e);
    CHECK(got.size() == a.size());
  }
}

TEST_CASE("balls grow with the bounds") {
  std::size_t last_v = 0, last_e = 0;
  for (int r = 0; r <= 3; ++r) {
    const auto b = build_ball({0, 4}, ComplexKind::AC, bounds(r, 2 * r + 2));
    CHECK(static_cast<std::size_t>(b.size()) >= last_v);
    CHECK(b.edges().size() >= last_e);
    last_v = b.size();
    last_e = b.edges().size();
  }
  const auto a = build_ball({1, 1}, ComplexKind::A, bounds(3, 0));
  const auto c = build_ball({1, 1}, ComplexKind::C, bounds(0, 6));
  const auto ac = build_ball({1, 1}, ComplexKind::AC, bounds(3, 6));
  CHECK(ac.size() == a.size() + c.size());
  CHECK(std::all_of(a.vertices.begin(), a.vertices.end(), is_arc));
  CHECK(std::all_of(c.vertices.begin(), c.vertices.end(), is_curve));
}

TEST_CASE("maximal cliques match naive enumeration") {
  for (Surface s : {Surface{0, 4}, Surface{1, 1}, Surface{1, 2}}) {
    const auto b = build_ball(s, ComplexKind::AC, bounds(2, 6));
    const auto cliques = maximal_cliques(b);
    std::set<std::vector<int>> got;
    for (const auto& c : cliques) got.insert(c.members);
    CHECK(got == naive_maximal_cliques(b));
    CHECK(std::is_sorted(cliques.begin(), cliques.end(),
                         [](const Clique& x, const Clique& y) { return x.members < y.members; }));
  }
}

TEST_CASE("star, link and dual link") {
  const auto b = build_ball({0, 4}, ComplexKind::AC, bounds(3, 8));
  for (int v = 0; v < b.size(); ++v) {
    const auto st = star(b, v);
    const auto lk = link(b, v);
    const auto du = dual_link(b, v);
    CHECK(st.size() == lk.size() + 1);
    CHECK(lk.vertices == b.adjacency[v]);
    const int n = lk.size();
    CHECK(lk.edge_count() + du.edge_count() == n * (n - 1) / 2);
    CHECK(st.edge_count() == lk.edge_count() + n);
  }
  CHECK_THROWS_AS(link(b, b.size()), Error);
}

TEST_CASE("clique sizes within the simplex dimension bounds") {
  struct Case {
    Surface s;
    int r;
    std::int64_t w;
  };
  for (const Case& c : {Case{{0, 4}, 4, 10}, Case{{1, 2}, 5, 14}}) {
    const auto b = build_ball(c.s, ComplexKind::AC, bounds(c.r, c.w));
    std::set<int> sizes;
    for (const auto& q : maximal_cliques(b)) {
      CHECK(static_cast<int>(q.members.size()) <= max_simplex_dim(c.s) + 1);
      if (!q.confident) continue;
      sizes.insert(static_cast<int>(q.members.size()));
      const auto cert = certify_clique(b, q.members);
      CHECK(cert.realized);
      CHECK(cert.maximal);
    }
    std::set<int> expected;
    for (int k = min_maximal_simplex_dim(c.s); k <= max_simplex_dim(c.s); ++k) expected.insert(k + 1);
    CHECK(sizes == expected);
  }
}

TEST_CASE("arc-only cliques are realized together") {
  const auto b = build_ball({0, 4}, ComplexKind::A, bounds(3, 0));
  int checked = 0;
  for (const auto& q : maximal_cliques(b)) {
    CHECK(certify_clique(b, q.members).realized);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("every arc has a curve neighbor") {
  struct Case {
    Surface s;
    int r;
    std::int64_t w;
  };
  for (const Case& c : {Case{{0, 4}, 3, 12}, Case{{1, 1}, 3, 10}, Case{{0, 5}, 2, 12}, Case{{1, 2}, 2, 14}}) {
    const auto b = build_ball(c.s, ComplexKind::AC, bounds(c.r, c.w));
    for (int v = 0; v < b.size(); ++v) {
      if (!is_arc(b.vertices[v])) continue;
      const auto& n = b.adjacency[v];
      CHECK(std::any_of(n.begin(), n.end(), [&](int w) { return is_curve(b.vertices[w]); }));
    }
  }
}

TEST_CASE("f-vector") {
  const auto b = build_ball({0, 3}, ComplexKind::AC, bounds(4, 4));
  CHECK(f_vector(b, 3) == std::vector<std::size_t>{6, 9, 4, 0});
  const auto c = build_ball({0, 4}, ComplexKind::AC, bounds(3, 10));
  const auto f = f_vector(c, 1);
  CHECK(f[0] == static_cast<std::size_t>(c.size()));
  CHECK(f[1] == c.edges().size());
  CHECK_THROWS_AS(f_vector(c, 5, 10), Error);
}
