#include "acx/quasi.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "acx/error.hpp"
#include "acx/intersect.hpp"
#include "acx/parallel.hpp"
#include "acx/registry.hpp"

namespace acx {

std::int64_t curve_adjacency_intersection(Surface s) {
  if (s == Surface{1, 1}) return 1;
  if (s == Surface{0, 4}) return 2;
  return 0;
}

void validate_path(const SurfaceContext& ctx, const Path& p) {
  if (p.vertices.empty()) throw Error(ErrorCode::InvalidPath, "empty path");
  const std::int64_t step = p.kind == PathKind::C ? curve_adjacency_intersection(p.surface) : 0;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const VertexClass& v = p.vertices[i];
    if (p.kind == PathKind::C && !is_curve(v)) {
      throw Error(ErrorCode::InvalidPath, "vertex " + std::to_string(i) + " of a C-path is an arc");
    }
    if (i == 0) continue;
    const VertexClass& u = p.vertices[i - 1];
    if (class_equal(u, v)) throw Error(ErrorCode::InvalidPath, "vertices " + std::to_string(i - 1) + " and " + std::to_string(i) + " coincide");
    const auto n = intersection_number(ctx, u, v).value;
    if (n != step) {
      throw Error(ErrorCode::InvalidPath, "vertices " + std::to_string(i - 1) + " and " + std::to_string(i) + " meet " +
                                              std::to_string(n) + " times");
    }
  }
}

namespace {

class Rewriter {
 public:
  Rewriter(const SurfaceContext& ctx, const Path& in) : ctx_(ctx), in_(in) {
    out_.path.surface = in.surface;
    out_.path.kind = PathKind::C;
  }

  RewriteResult run() {
    const auto& p = in_.vertices;
    append(p.front());
    std::size_t j = 1;
    while (j < p.size()) {
      const VertexClass& next = p[j];
      if (is_curve(next)) {
        out_.steps.push_back({static_cast<int>(j), "keep", {next}});
        append(next);
        ++j;
        continue;
      }
      const auto& a = std::get<ArcClass>(next);
      const VertexClass& after = p[j + 1];
      if (is_curve(after)) {
        arc_then_curve(static_cast<int>(j), a, after);
        j += 2;
      } else {
        arc_then_arc(static_cast<int>(j), a, std::get<ArcClass>(after));
        ++j;
      }
    }
    validate_path(ctx_, out_.path);
    return std::move(out_);
  }

 private:
  const VertexClass& last() const { return out_.path.vertices.back(); }

  void append(const VertexClass& v) {
    if (!out_.path.vertices.empty() && class_equal(last(), v)) return;
    out_.path.vertices.push_back(v);
  }

  bool misses(const VertexClass& x, const VertexClass& y) const { return intersection_number(ctx_, x, y).value == 0; }

  [[noreturn]] void no_candidate(int pos, const std::string& what) const {
    throw Error(ErrorCode::NoCandidate, "no replacement curve for " + what + " at path position " + std::to_string(pos));
  }

  // x a z: a boundary curve of N(a) misses both neighbors.
  void arc_then_curve(int pos, const ArcClass& a, const VertexClass& z) {
    const VertexClass x = last();
    for (const auto& v : neighborhood_boundary(ctx_, a)) {
      if (misses(x, v) && misses(v, z)) {
        out_.steps.push_back({pos, "arc-curve", {v, z}});
        append(v);
        append(z);
        return;
      }
    }
    no_candidate(pos, "arc " + arc_key(a) + " before curve " + class_key(z));
  }

  // x a b: one curve missing x and b, or a curve z missing x followed by a
  // curve v missing z and b.
  void arc_then_arc(int pos, const ArcClass& a, const ArcClass& b) {
    const VertexClass x = last();
    std::vector<CurveClass> own = neighborhood_boundary(ctx_, a);
    std::vector<CurveClass> both = union_boundary(ctx_, a, b);
    std::vector<CurveClass> all = own;
    for (const auto& c : both) {
      if (std::none_of(all.begin(), all.end(), [&](const CurveClass& d) { return class_equal(c, d); })) all.push_back(c);
    }
    for (const auto& c : all) {
      if (misses(x, c) && misses(c, b)) {
        out_.steps.push_back({pos, "arc-arc", {c}});
        append(c);
        return;
      }
    }
    for (const auto& z : all) {
      if (!misses(x, z)) continue;
      for (const auto& v : all) {
        if (class_equal(z, v) || !misses(z, v) || !misses(v, b)) continue;
        out_.steps.push_back({pos, "arc-arc+1", {z, v}});
        append(z);
        append(v);
        return;
      }
    }
    no_candidate(pos, "arcs " + arc_key(a) + " and " + arc_key(b));
  }

  const SurfaceContext& ctx_;
  const Path& in_;
  RewriteResult out_;
};

}  // namespace

RewriteResult rewrite_to_curve_path(const SurfaceContext& ctx, const Path& p) {
  const SpecialCase sc = special_case(p.surface);
  if (sc != SpecialCase::Generic && sc != SpecialCase::SmallOther) {
    throw Error(ErrorCode::UnsupportedSurface, "path rewriting needs 2g + n >= 4 and a non-sphere-with-four-punctures surface");
  }
  if (p.kind != PathKind::AC) throw Error(ErrorCode::InvalidPath, "rewriting expects an AC-path");
  validate_path(ctx, p);
  if (!is_curve(p.vertices.front()) || !is_curve(p.vertices.back())) {
    throw Error(ErrorCode::InvalidPath, "path endpoints must be curves");
  }
  RewriteResult r = Rewriter(ctx, p).run();
  if (sc == SpecialCase::SmallOther) r.warning = "2g + n < 5: the length bound is measured, not guaranteed";
  return r;
}

Distance bfs_distance(const SimplicialBall& b, int x, int y) {
  b.check_vertex(x);
  b.check_vertex(y);
  auto search = [&](bool complete_only) {
    std::vector<int> parent(b.size(), -2);
    std::deque<int> queue = {x};
    parent[x] = -1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (u == y) break;
      for (int w : b.adjacency[u]) {
        if (parent[w] != -2 || (complete_only && !b.complete[w])) continue;
        parent[w] = u;
        queue.push_back(w);
      }
    }
    return parent;
  };
  const auto parent = search(false);
  if (parent[y] == -2) {
    throw Error(ErrorCode::Unreachable, "vertex " + std::to_string(y) + " is not reachable from " + std::to_string(x) + " in the ball");
  }
  Distance d;
  for (int v = y; v != -1; v = parent[v]) d.path.push_back(v);
  std::reverse(d.path.begin(), d.path.end());
  d.value = static_cast<int>(d.path.size()) - 1;
  if (b.closed) {
    d.exact = true;
  } else if (b.complete[x] && b.complete[y]) {
    const auto inner = search(true);
    if (inner[y] != -2) {
      int len = 0;
      for (int v = y; inner[v] != -1; v = inner[v]) ++len;
      d.exact = len == d.value;
    }
  }
  return d;
}

SimplicialBall ac_model_11(std::int64_t bound) {
  SimplicialBall b;
  b.surface = {1, 1};
  b.kind = ComplexKind::AC;
  b.context = std::make_shared<const SurfaceContext>(b.surface);
  const SurfaceContext& ctx = *b.context;
  const SlopeMap slopes(ctx);
  const auto wanted = slopes_up_to(bound);

  std::map<FareySlope, CurveClass> curves;
  for (std::int64_t w = 4; curves.size() < wanted.size(); w *= 2) {
    if (w > 64 * (bound + 1)) throw Error(ErrorCode::ResourceLimit, "curves of the model not found");
    curves.clear();
    for (auto& c : enumerate_curves(ctx, w)) {
      const FareySlope s = slopes.slope(c);
      if (height(s) <= bound) curves.emplace(s, std::move(c));
    }
  }
  std::map<FareySlope, std::pair<ArcClass, int>> arcs;
  for (int r = 1; arcs.size() < wanted.size(); ++r) {
    if (r > 2 * bound + 4) throw Error(ErrorCode::ResourceLimit, "arcs of the model not found");
    arcs.clear();
    const FlipRegistry reg = flip_ball(ctx, r);
    for (std::size_t i = 0; i < reg.arcs().size(); ++i) {
      const FareySlope s = slopes.slope(reg.arcs()[i]);
      if (height(s) <= bound) arcs.emplace(s, std::pair{reg.arcs()[i], reg.arc_depths()[i]});
    }
  }

  const int n = static_cast<int>(wanted.size());
  for (const auto& s : wanted) {
    b.vertices.push_back(curves.at(s));
    b.types.push_back(TypeLabel::NonsepCurve);
    b.depths.push_back(-1);
    b.complete.push_back(1);
  }
  for (const auto& s : wanted) {
    b.vertices.push_back(arcs.at(s).first);
    b.types.push_back(TypeLabel::NonsepLoopArc);
    b.depths.push_back(arcs.at(s).second);
    b.complete.push_back(height(s) <= bound - 1);
  }
  b.bounds.radius = static_cast<int>(bound);
  b.bounds.weight = bound;
  b.adjacency.assign(2 * n, {});
  for (int i = 0; i < n; ++i) {
    b.adjacency[i].push_back(n + i);
    b.adjacency[n + i].push_back(i);
    for (int j = 0; j < n; ++j) {
      if (farey_adjacent(wanted[i], wanted[j])) b.adjacency[n + i].push_back(n + j);
    }
  }
  for (auto& a : b.adjacency) std::sort(a.begin(), a.end());
  return b;
}

std::vector<FareySlope> model_slopes(const SimplicialBall& model) {
  const SlopeMap slopes(*model.context);
  std::vector<FareySlope> out;
  for (const auto& v : model.vertices) out.push_back(slopes.slope(v));
  return out;
}

std::vector<std::string> torus_structure_violations(const SimplicialBall& model) {
  std::vector<std::string> out;
  const auto slopes = model_slopes(model);
  auto curve_neighbors = [&](int v) {
    std::vector<int> c;
    for (int w : model.adjacency[v]) {
      if (is_curve(model.vertices[w])) c.push_back(w);
    }
    return c;
  };
  for (int v = 0; v < model.size(); ++v) {
    const std::string name = to_string(slopes[v]);
    if (is_curve(model.vertices[v])) {
      const auto& n = model.adjacency[v];
      if (n.size() != 1 || !is_arc(model.vertices[n[0]])) out.push_back("curve " + name + " does not have exactly one neighbor, an arc");
      continue;
    }
    if (curve_neighbors(v).size() != 1) out.push_back("arc " + name + " does not have exactly one curve neighbor");
  }
  for (int z = 0; z < model.size(); ++z) {
    if (!is_curve(model.vertices[z])) continue;
    for (int a : model.adjacency[z]) {
      for (int b : model.adjacency[a]) {
        if (b == z || !is_arc(model.vertices[b])) continue;
        for (int v : curve_neighbors(b)) {
          if (v != z && farey_distance(slopes[z], slopes[v]) != 1) {
            out.push_back("path " + to_string(slopes[z]) + " .. " + to_string(slopes[v]) + " through two arcs joins non-neighbors");
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::string> sphere_structure_violations(const SimplicialBall& b) {
  std::vector<std::string> out;
  for (int v = 0; v < b.size(); ++v) {
    if (!b.complete[v]) continue;
    const auto& n = b.adjacency[v];
    if (const auto* a = std::get_if<ArcClass>(&b.vertices[v])) {
      const auto curves = std::count_if(n.begin(), n.end(), [&](int w) { return is_curve(b.vertices[w]); });
      if (curves != 1) out.push_back("arc " + arc_key(*a) + " has " + std::to_string(curves) + " curve neighbors");
      continue;
    }
    const bool joined = std::any_of(n.begin(), n.end(), [&](int w) {
      const auto* a = std::get_if<ArcClass>(&b.vertices[w]);
      return a && !a->is_loop();
    });
    if (!joined) out.push_back("curve " + class_key(b.vertices[v]) + " has no neighboring arc between distinct punctures");
  }
  return out;
}

namespace {

std::vector<std::pair<int, int>> sample_pairs(const std::vector<int>& pool, int count, std::uint64_t seed) {
  std::vector<std::pair<int, int>> out;
  if (pool.empty()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < count; ++k) {
    const int x = pool[pick(rng)];
    const int y = pool[pick(rng)];
    out.emplace_back(x, y);
  }
  return out;
}

std::vector<int> complete_curves(const SimplicialBall& b) {
  std::vector<int> out;
  for (int v = 0; v < b.size(); ++v) {
    if (is_curve(b.vertices[v]) && b.complete[v]) out.push_back(v);
  }
  return out;
}

void tally(InequalityReport& r) {
  for (const auto& s : r.samples) {
    if (!s.exact) ++r.skips;
    else if (s.pass) ++r.passes;
    else ++r.failures;
  }
}

std::string fail_text(const SampleReport& s) {
  return "d_C=" + std::to_string(s.d_c) + " d_AC=" + std::to_string(s.d_ac) + " violates " + s.check;
}

}  // namespace

InequalityReport verify_inequalities(Surface s, const InequalityOptions& options) {
  InequalityReport report;
  report.surface = s;
  const SpecialCase sc = special_case(s);
  const BallOptions ball_options{options.jobs};

  if (sc == SpecialCase::Farey11) {
    report.mode = "torus";
    const SimplicialBall model = ac_model_11(options.bounds.weight);
    const auto slopes = model_slopes(model);
    const auto pairs = sample_pairs(complete_curves(model), options.samples, options.seed);
    report.samples.resize(pairs.size());
    parallel_for(pairs.size(), options.jobs, [&](std::size_t k) {
      const auto [x, y] = pairs[k];
      SampleReport& r = report.samples[k];
      r.id = static_cast<int>(k);
      r.x = class_key(model.vertices[x]);
      r.y = class_key(model.vertices[y]);
      r.d_c = farey_distance(slopes[x], slopes[y]);
      const Distance d = bfs_distance(model, x, y);
      r.d_ac = d.value;
      r.exact = d.exact;
      r.check = x == y ? "d_AC = d_C = 0" : "d_AC = d_C + 2";
      r.pass = x == y ? r.d_ac == 0 : r.d_ac == r.d_c + 2;
      if (!r.pass) r.witness = fail_text(r);
    });
    tally(report);
    return report;
  }

  const SimplicialBall ac = build_ball(s, ComplexKind::AC, options.bounds, ball_options);

  if (sc == SpecialCase::Sphere04) {
    report.mode = "sphere";
    const SlopeMap slopes(*ac.context);
    const auto pairs = sample_pairs(complete_curves(ac), options.samples, options.seed);
    report.samples.resize(pairs.size());
    parallel_for(pairs.size(), options.jobs, [&](std::size_t k) {
      const auto [x, y] = pairs[k];
      SampleReport& r = report.samples[k];
      r.id = static_cast<int>(k);
      r.x = class_key(ac.vertices[x]);
      r.y = class_key(ac.vertices[y]);
      r.d_c = farey_distance(slopes.slope(ac.vertices[x]), slopes.slope(ac.vertices[y]));
      const Distance d = bfs_distance(ac, x, y);
      r.d_ac = d.value;
      r.exact = d.exact;
      r.check = "d_C / 2 <= d_AC <= d_C + 2";
      r.pass = r.d_c <= 2 * r.d_ac && r.d_ac <= r.d_c + 2;
      if (!r.pass) r.witness = fail_text(r);
    });
    tally(report);
    return report;
  }

  report.mode = sc == SpecialCase::Generic ? "generic" : "report-only";
  const SimplicialBall c = build_ball(s, ComplexKind::C, options.bounds, ball_options);
  std::map<std::string, int> in_ac;
  for (int v = 0; v < ac.size(); ++v) in_ac.emplace(class_key(ac.vertices[v]), v);
  const auto pairs = sample_pairs(complete_curves(c), options.samples, options.seed);
  report.samples.resize(pairs.size());
  parallel_for(pairs.size(), options.jobs, [&](std::size_t k) {
    const auto [x, y] = pairs[k];
    SampleReport& r = report.samples[k];
    r.id = static_cast<int>(k);
    r.x = class_key(c.vertices[x]);
    r.y = class_key(c.vertices[y]);
    r.check = "d_C / 2 <= d_AC <= d_C and rewritten length <= 2 d_AC";
    const Distance dc = bfs_distance(c, x, y);
    const Distance dac = bfs_distance(ac, in_ac.at(r.x), in_ac.at(r.y));
    r.d_c = dc.value;
    r.d_ac = dac.value;
    r.exact = dc.exact && dac.exact;
    r.pass = r.d_c <= 2 * r.d_ac && r.d_ac <= r.d_c;
    Path p{s, PathKind::AC, {}};
    for (int v : dac.path) p.vertices.push_back(ac.vertices[v]);
    try {
      const RewriteResult rw = rewrite_to_curve_path(*ac.context, p);
      r.rewritten_length = rw.path.length();
      r.pass = r.pass && r.rewritten_length <= 2 * r.d_ac && r.rewritten_length >= r.d_c;
    } catch (const Error& e) {
      r.pass = false;
      r.witness = std::string(to_string(e.code())) + ": " + e.what();
      return;
    }
    if (!r.pass) r.witness = fail_text(r) + " (rewritten length " + std::to_string(r.rewritten_length) + ")";
  });
  tally(report);
  return report;
}

}  // namespace acx
