#include "acx/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "acx/error.hpp"

namespace acx {

IdealTriangulation::IdealTriangulation(std::vector<HalfEdge> iota, std::vector<Puncture> tails,
                                       std::vector<std::array<HalfEdge, 2>> edges)
    : iota_(std::move(iota)), tails_(std::move(tails)), edges_(std::move(edges)) {
  if (iota_.size() % 3 != 0 || iota_.size() != tails_.size()) {
    throw Error(ErrorCode::InvalidInput, "corner arrays must have equal length divisible by 3");
  }
  for (HalfEdge h = 0; h < corner_count(); ++h) {
    if (iota_[h] < 0 || iota_[h] >= corner_count()) {
      throw Error(ErrorCode::InvalidInput, "iota out of range");
    }
  }
  if (edges_.empty()) {
    for (HalfEdge h = 0; h < corner_count(); ++h) {
      if (h < iota_[h]) edges_.push_back({h, iota_[h]});
    }
  }
  rebuild_edge_index();
}

void IdealTriangulation::rebuild_edge_index() {
  edge_of_.assign(iota_.size(), -1);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    for (HalfEdge h : edges_[e]) {
      if (h < 0 || h >= corner_count()) throw Error(ErrorCode::InvalidInput, "edge side out of range");
      edge_of_[h] = e;
    }
  }
  puncture_count_ = 0;
  for (Puncture p : tails_) puncture_count_ = std::max(puncture_count_, p);
}

int IdealTriangulation::vertex_orbit_count() const {
  std::vector<char> seen(iota_.size(), 0);
  int orbits = 0;
  for (HalfEdge h = 0; h < corner_count(); ++h) {
    if (seen[h]) continue;
    ++orbits;
    for (HalfEdge x = h; !seen[x]; x = rho(x)) seen[x] = 1;
  }
  return orbits;
}

std::array<Puncture, 2> IdealTriangulation::endpoints(EdgeId e) const {
  Puncture a = tails_[edges_[e][0]];
  Puncture b = tails_[edges_[e][1]];
  if (a > b) std::swap(a, b);
  return {a, b};
}

int IdealTriangulation::ends_at(EdgeId e, Puncture p) const {
  return (tails_[edges_[e][0]] == p ? 1 : 0) + (tails_[edges_[e][1]] == p ? 1 : 0);
}

bool IdealTriangulation::is_self_folded(EdgeId e) const {
  return triangle_of(edges_[e][0]) == triangle_of(edges_[e][1]);
}

IdealTriangulation IdealTriangulation::flipped(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw Error(ErrorCode::InvalidInput, "edge id out of range");
  if (is_self_folded(e)) {
    throw Error(ErrorCode::SelfFoldedEdge, "edge " + std::to_string(e) + " is self-folded");
  }
  const HalfEdge h = edges_[e][0];
  const HalfEdge hp = edges_[e][1];
  const HalfEdge a = sigma(h), b = sigma2(h), c = sigma(hp), d = sigma2(hp);

  // The choice of which pair lands in h's triangle alternates with the stored
  // side order so that flipping twice restores the exact arrays.
  const bool rule_x = h < hp;
  const std::array<HalfEdge, 2> first = rule_x ? std::array{d, a} : std::array{b, c};
  const std::array<HalfEdge, 2> second = rule_x ? std::array{b, c} : std::array{d, a};

  auto slot = [](HalfEdge anchor, int j) { return 3 * (anchor / 3) + (anchor % 3 + j) % 3; };
  const HalfEdge n1 = h, n2 = hp;

  std::array<std::pair<HalfEdge, HalfEdge>, 4> moved = {{
      {first[0], slot(h, 1)}, {first[1], slot(h, 2)},
      {second[0], slot(hp, 1)}, {second[1], slot(hp, 2)},
  }};
  auto remap = [&](HalfEdge x) {
    for (auto [from, to] : moved) {
      if (from == x) return to;
    }
    return x;
  };

  std::vector<HalfEdge> iota = iota_;
  std::vector<Puncture> tails = tails_;
  for (auto [from, to] : moved) tails[to] = tails_[from];
  // n runs from the head of the last side of its triangle.
  tails[n1] = tails_[sigma(first[1])];
  tails[n2] = tails_[sigma(second[1])];

  for (auto [from, to] : moved) {
    const HalfEdge partner = iota_[from];
    const HalfEdge mapped = remap(partner);
    iota[to] = mapped;
    if (mapped == partner) iota[partner] = to;
  }
  iota[n1] = n2;
  iota[n2] = n1;

  std::vector<std::array<HalfEdge, 2>> edges = edges_;
  for (EdgeId f = 0; f < edge_count(); ++f) {
    if (f == e) continue;
    edges[f] = {remap(edges_[f][0]), remap(edges_[f][1])};
  }
  edges[e] = {hp, h};
  return IdealTriangulation(std::move(iota), std::move(tails), std::move(edges));
}

void IdealTriangulation::check_invariants() const {
  const int c = corner_count();
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); };
  if (c == 0 || c % 3 != 0) fail("corner count must be a positive multiple of 3");
  for (HalfEdge h = 0; h < c; ++h) {
    if (iota_[h] == h) fail("iota has a fixed point");
    if (iota_[iota_[h]] != h) fail("iota is not an involution");
    if (tails_[h] != tails_[sigma(iota_[h])]) fail("edge sides disagree on endpoints");
  }
  if (edge_count() * 2 != c) fail("edge table does not cover every side once");
  std::vector<int> hits(c, 0);
  for (const auto& pair : edges_) {
    if (iota_[pair[0]] != pair[1]) fail("edge table pairs sides that iota does not");
    ++hits[pair[0]];
    ++hits[pair[1]];
  }
  if (std::any_of(hits.begin(), hits.end(), [](int k) { return k != 1; })) fail("edge table is not a partition");

  // Connectivity over triangles.
  std::vector<char> seen(triangle_count(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    for (int j = 0; j < 3; ++j) {
      const int u = triangle_of(iota_[3 * t + j]);
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != triangle_count()) fail("map is not connected");

  // Each rotation orbit carries one label and labels are 1..n, one orbit each.
  std::vector<char> orbit_seen(c, 0);
  std::set<Puncture> labels;
  int orbits = 0;
  for (HalfEdge h = 0; h < c; ++h) {
    if (orbit_seen[h]) continue;
    ++orbits;
    for (HalfEdge x = h; !orbit_seen[x]; x = rho(x)) {
      orbit_seen[x] = 1;
      if (tails_[x] != tails_[h]) fail("rotation orbit carries two puncture labels");
    }
    labels.insert(tails_[h]);
  }
  if (static_cast<int>(labels.size()) != orbits) fail("two vertex orbits share a label");
  if (*labels.begin() != 1 || *labels.rbegin() != orbits) fail("puncture labels must be 1..n");
}

namespace {

// Mutable triangle soup used while assembling base triangulations.
struct Soup {
  std::vector<HalfEdge> iota;
  std::vector<Puncture> tails;

  int add_triangle(Puncture a, Puncture b, Puncture c) {
    const int t = static_cast<int>(tails.size()) / 3;
    tails.insert(tails.end(), {a, b, c});
    iota.insert(iota.end(), {-1, -1, -1});
    return t;
  }
  void pair(HalfEdge x, HalfEdge y) {
    iota[x] = y;
    iota[y] = x;
  }

  // Inserts puncture `p` inside triangle t, producing three triangles.
  void split(int t, Puncture p) {
    const HalfEdge h0 = 3 * t, h1 = 3 * t + 1, h2 = 3 * t + 2;
    const Puncture A = tails[h0], B = tails[h1], C = tails[h2];
    const HalfEdge out1 = iota[h1], out2 = iota[h2];
    tails[h1] = B;
    tails[h2] = p;
    const int t1 = add_triangle(B, C, p);
    const int t2 = add_triangle(C, A, p);
    // Old sides h1 (B->C) and h2 (C->A) move into t1 and t2.
    pair(3 * t1, out1 == h2 ? 3 * t2 : out1);
    pair(3 * t2, out2 == h1 ? 3 * t1 : out2);
    pair(h1, 3 * t1 + 2);          // B->X with X->B
    pair(3 * t1 + 1, 3 * t2 + 2);  // C->X with X->C
    pair(3 * t2 + 1, h2);          // A->X with X->A
  }
};

}  // namespace

IdealTriangulation base_triangulation(Surface s) {
  if (!triangulable(s)) {
    throw Error(ErrorCode::UnsupportedSurface,
                "surface (" + std::to_string(s.genus) + "," + std::to_string(s.punctures) +
                    ") has no ideal triangulation");
  }
  Soup soup;
  Puncture next = 1;
  if (s.genus == 0) {
    soup.add_triangle(1, 2, 3);
    soup.add_triangle(2, 1, 3);
    soup.pair(0, 3);
    soup.pair(1, 5);
    soup.pair(2, 4);
    next = 4;
  } else {
    // Fan triangulation of the 4g-gon a1 b1 a1^-1 b1^-1 ... from vertex 0.
    const int sides = 4 * s.genus;
    auto polygon_partner = [](int i) { return (i % 4 < 2) ? i + 2 : i - 2; };
    std::vector<HalfEdge> polygon_side(sides, -1);
    HalfEdge previous_closing = -1;
    for (int i = 1; i <= sides - 2; ++i) {
      const int t = soup.add_triangle(1, 1, 1);
      if (i == 1) polygon_side[0] = 3 * t;
      else soup.pair(3 * t, previous_closing);
      polygon_side[i] = 3 * t + 1;
      if (i == sides - 2) polygon_side[sides - 1] = 3 * t + 2;
      previous_closing = 3 * t + 2;
    }
    for (int i = 0; i < sides; ++i) {
      const int j = polygon_partner(i);
      if (i < j) soup.pair(polygon_side[i], polygon_side[j]);
    }
    next = 2;
  }
  for (; next <= s.punctures; ++next) {
    const int triangles = static_cast<int>(soup.tails.size()) / 3;
    soup.split((next * 5) % triangles, next);
  }
  IdealTriangulation t(std::move(soup.iota), std::move(soup.tails));
  t.check_invariants();
  return t;
}

namespace {

void append_int(std::string& out, int v) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((static_cast<unsigned>(v) >> (24 - 8 * k)) & 0xff));
}

std::string code_from(const IdealTriangulation& t, HalfEdge start, bool labeled) {
  const int c = t.corner_count();
  std::vector<int> id(c, -1);
  std::vector<HalfEdge> order;
  order.reserve(c);
  auto label_triangle = [&](HalfEdge x) {
    for (int j = 0; j < 3; ++j) {
      id[x] = static_cast<int>(order.size());
      order.push_back(x);
      x = IdealTriangulation::sigma(x);
    }
  };
  label_triangle(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const HalfEdge partner = t.iota(order[i]);
    if (id[partner] < 0) label_triangle(partner);
  }
  std::string out;
  out.reserve(c * 8 + 4);
  append_int(out, c);
  for (HalfEdge x : order) {
    append_int(out, id[t.iota(x)]);
    if (labeled) append_int(out, t.tail(x));
  }
  return out;
}

}  // namespace

std::string canonical_code(const IdealTriangulation& t, bool labeled) {
  std::string best;
  for (HalfEdge h = 0; h < t.corner_count(); ++h) {
    std::string code = code_from(t, h, labeled);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

Surface surface_of(const IdealTriangulation& t) {
  const int v = t.vertex_orbit_count();
  const int chi = v - t.edge_count() + t.triangle_count();
  return Surface{(2 - chi) / 2, v};
}

}  // namespace acx
