#include <doctest.h>

#include <algorithm>

#include "acx/classify.hpp"
#include "acx/intersect.hpp"
#include "acx/registry.hpp"

using namespace acx;

namespace {

BallBounds bounds(int r, std::int64_t w) {
  BallBounds b;
  b.radius = r;
  b.weight = w;
  return b;
}

bool is_separating_type(TypeLabel t) { return t == TypeLabel::SepCurve || t == TypeLabel::SepLoopArc; }

// A class separates iff every closed curve meets it an even number of
// times; a non-separating one has a dual curve meeting it once.
bool separating_by_parity(const SurfaceContext& ctx, const VertexClass& x, const std::vector<CurveClass>& curves) {
  return std::all_of(curves.begin(), curves.end(), [&](const CurveClass& c) {
    return intersection_number(ctx, c, x).value % 2 == 0;
  });
}

}  // namespace

TEST_CASE("separating curves") {
  {
    const SurfaceContext ctx({0, 4});
    for (const auto& c : enumerate_curves(ctx, 10)) CHECK(separating(ctx, c));
  }
  {
    const SurfaceContext ctx({1, 1});
    for (const auto& c : enumerate_curves(ctx, 10)) CHECK_FALSE(separating(ctx, c));
  }
  for (Surface s : {Surface{1, 2}, Surface{0, 5}}) {
    const SurfaceContext ctx(s);
    const auto curves = enumerate_curves(ctx, 10);
    for (const auto& c : enumerate_curves(ctx, 6)) CHECK(separating(ctx, c) == separating_by_parity(ctx, c, curves));
  }
}

TEST_CASE("separating arcs") {
  for (Surface s : {Surface{1, 2}, Surface{0, 5}, Surface{1, 1}}) {
    const SurfaceContext ctx(s);
    const auto curves = enumerate_curves(ctx, 10);
    const auto reg = flip_ball(ctx, 2);
    int loops = 0, nonsep = 0;
    for (const auto& a : reg.arcs()) {
      const TypeLabel t = classify_topological(ctx, a);
      if (!a.is_loop()) {
        CHECK(t == TypeLabel::InterPunctureArc);
        CHECK_FALSE(separating(ctx, a));
        continue;
      }
      ++loops;
      const bool sep = separating_by_parity(ctx, a, curves);
      CHECK(separating(ctx, a) == sep);
      CHECK(t == (sep ? TypeLabel::SepLoopArc : TypeLabel::NonsepLoopArc));
      nonsep += !sep;
    }
    CHECK(loops > 0);
    if (s.genus == 0) CHECK(nonsep == 0);
    else CHECK(nonsep > 0);
  }
}

TEST_CASE("neighborhood boundary of an inter-puncture arc separates") {
  for (Surface s : {Surface{0, 5}, Surface{1, 2}}) {
    const SurfaceContext ctx(s);
    const auto reg = flip_ball(ctx, 2);
    for (const auto& a : reg.arcs()) {
      if (a.is_loop()) continue;
      for (const auto& z : neighborhood_boundary(ctx, a)) CHECK(classify_topological(ctx, z) == TypeLabel::SepCurve);
    }
  }
}

TEST_CASE("dimension through a vertex") {
  {
    const auto b = build_ball({0, 3}, ComplexKind::AC, bounds(4, 4));
    for (int v = 0; v < b.size(); ++v) {
      const auto d = max_dim_through(b, v);
      CHECK(d.dim == 2);
      CHECK(d.confident);
    }
  }
  const auto b = build_ball({0, 4}, ComplexKind::AC, bounds(4, 10));
  const Classifier cl(b);
  int confident = 0;
  for (int v = 0; v < b.size(); ++v) {
    const auto d = cl.max_dim_through(v);
    if (!d.confident) continue;
    ++confident;
    CHECK(d.dim == (is_curve(b.vertices[v]) ? 4 : 5));
  }
  CHECK(confident > 0);
  CHECK_THROWS(cl.max_dim_through(-1));
}

TEST_CASE("combinatorial classification agrees with topology") {
  struct Case {
    Surface s;
    int r;
    std::int64_t w;
  };
  int conclusive = 0;
  bool sep_curve_s04 = false, witness_s05 = false, nonsep_loop_s12 = false;
  for (const Case& c : {Case{{0, 4}, 4, 10}, Case{{0, 5}, 5, 14}, Case{{1, 2}, 5, 14}}) {
    const auto b = build_ball(c.s, ComplexKind::AC, bounds(c.r, c.w));
    const Classifier cl(b);
    for (int v = 0; v < b.size(); ++v) {
      const auto r = cl.classify(v);
      if (!r.conclusive()) {
        CHECK_FALSE(r.reason.empty());
        continue;
      }
      ++conclusive;
      CHECK(*r.label == b.types[v]);
      CHECK(r.dual_link_disconnected == is_separating_type(b.types[v]));
      if (c.s == Surface{0, 4} && *r.label == TypeLabel::SepCurve) {
        sep_curve_s04 = true;
        CHECK(r.dim.dim == 4);
      }
      if (c.s == Surface{0, 5} && *r.label == TypeLabel::InterPunctureArc) {
        REQUIRE(r.witness.has_value());
        witness_s05 = true;
        // The witness is the boundary of a regular neighborhood of the arc.
        const auto nb = neighborhood_boundary(*b.context, std::get<ArcClass>(b.vertices[v]));
        REQUIRE(nb.size() == 1);
        CHECK(class_equal(b.vertices[*r.witness], nb[0]));
      }
      if (c.s == Surface{1, 2} && *r.label == TypeLabel::NonsepLoopArc) nonsep_loop_s12 = true;
    }
  }
  CHECK(conclusive >= 50);
  CHECK(sep_curve_s04);
  CHECK(witness_s05);
  CHECK(nonsep_loop_s12);
}

TEST_CASE("separating vertices have disconnected dual links") {
  const auto b = build_ball({0, 4}, ComplexKind::AC, bounds(4, 10));
  int checked = 0;
  for (int v = 0; v < b.size(); ++v) {
    if (!b.complete[v] || !is_separating_type(b.types[v])) continue;
    CHECK_FALSE(dual_link(b, v).connected());
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("three-punctured sphere stays inconclusive where no witness exists") {
  const auto b = build_ball({0, 3}, ComplexKind::AC, bounds(4, 4));
  for (int v = 0; v < b.size(); ++v) {
    const auto r = classify_combinatorial(b, v);
    if (r.conclusive()) CHECK(*r.label == b.types[v]);
  }
}

TEST_CASE("stabilization") {
  const SurfaceContext ctx({0, 4});
  const auto reg = flip_ball(ctx, 0);
  const ArcClass& a = reg.arcs()[0];
  const auto st = stabilization({0, 4}, a, bounds(2, 6), 3);
  CHECK(st.radii == std::vector<int>{2, 3, 4});
  REQUIRE(st.labels.back().has_value());
  CHECK(*st.labels.back() == classify_topological(ctx, a));
  CHECK(st.stable_from.has_value());
}
