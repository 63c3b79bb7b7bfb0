#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "acx/json_io.hpp"
#include "acx/parallel.hpp"
#include "sampling.hpp"

using namespace acx;

namespace {

struct Outcome {
  bool pass = true;
  std::string report;  // deterministic text compared across worker counts
  std::string note;    // timing and other run-dependent detail
};

BallBounds bounds(int r, std::int64_t w) {
  BallBounds b;
  b.radius = r;
  b.weight = w;
  return b;
}

BallOptions with_jobs(int jobs) {
  BallOptions o;
  o.jobs = jobs;
  return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(ACX_CLI) + " " + args;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t k;
  while ((k = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, k);
  const int st = ::pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Outcome s03_ground_truth(int jobs) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Run r = run_cli("selftest-s03 -j " + std::to_string(jobs));
  const double t = seconds_since(t0);
  o.report = r.out;
  o.pass = r.status == 0 && t < 5.0;
  if (o.pass) {
    const json j = json::parse(r.out);
    o.pass = j["f_vector"] == json{6, 9, 4} && j["higher_simplices"] == 0;
  }
  o.note = "f-vector " + (r.status == 0 ? json::parse(r.out)["f_vector"].dump() : std::string("?")) + ", exit " +
           std::to_string(r.status) + ", " + std::to_string(t) + " s";
  return o;
}

Outcome degenerate(int jobs) {
  Outcome o;
  std::ostringstream rep;
  for (ComplexKind k : {ComplexKind::A, ComplexKind::C, ComplexKind::AC}) {
    const auto b1 = build_ball({0, 1}, k, bounds(3, 8), with_jobs(jobs));
    const auto b2 = build_ball({0, 2}, k, bounds(3, 8), with_jobs(jobs));
    const int want2 = k == ComplexKind::C ? 0 : 1;
    o.pass = o.pass && b1.size() == 0 && b1.closed && b2.size() == want2 && b2.closed && b2.edges().empty();
    rep << to_string(k) << ": S0,1 " << b1.size() << " vertices, S0,2 " << b2.size() << " vertices\n";
  }
  o.report = rep.str();
  o.note = "S0,1 empty, S0,2 a single arc";
  return o;
}

Outcome triangulation_counts(int jobs) {
  Outcome o;
  std::ostringstream rep;
  const auto t0 = std::chrono::steady_clock::now();
  int total_trips = 0;
  for (Surface s : {Surface{0, 3}, Surface{0, 4}, Surface{0, 5}, Surface{1, 1}, Surface{1, 2}}) {
    const SurfaceContext ctx(s);
    FlipBallOptions fo;
    fo.jobs = jobs;
    const auto reg = flip_ball(ctx, 3, fo);
    const int edges = 6 * s.genus + 3 * s.punctures - 6;
    int bad = 0;
    for (const auto& e : reg.entries()) {
      const auto& t = e.chain->tip();
      if (t.edge_count() != edges || t.vertex_orbit_count() != s.punctures) ++bad;
    }
    std::mt19937_64 rng(11);
    int trips = 0, broken = 0;
    while (trips < 1000) {
      const auto& t = reg.entries()[rng() % reg.entries().size()].chain->tip();
      const EdgeId e = static_cast<EdgeId>(rng() % t.edge_count());
      if (t.is_self_folded(e)) continue;
      ++trips;
      if (!(t.flipped(e).flipped(e) == t)) ++broken;
    }
    total_trips += trips;
    o.pass = o.pass && bad == 0 && broken == 0;
    rep << to_string(s) << ": " << reg.entries().size() << " triangulations, " << bad << " with wrong counts, "
        << broken << "/" << trips << " round trips broken\n";
  }
  const double t = seconds_since(t0);
  o.pass = o.pass && t < 60;
  o.report = rep.str();
  o.note = std::to_string(total_trips) + " round trips, " + std::to_string(t) + " s";
  return o;
}

Outcome dimension_bounds(int jobs) {
  Outcome o;
  std::ostringstream rep;
  struct Case {
    Surface s;
    int r;
    std::int64_t w;
    std::set<int> must;
  };
  for (const Case& c : {Case{{0, 4}, 4, 10, {4, 5}}, Case{{1, 2}, 5, 14, {3, 4, 5}}}) {
    const auto b = build_ball(c.s, ComplexKind::AC, bounds(c.r, c.w), with_jobs(jobs));
    const int lo = min_maximal_simplex_dim(c.s), hi = max_simplex_dim(c.s);
    std::map<int, int> seen;
    int outside = 0;
    for (const auto& q : maximal_cliques(b)) {
      if (!q.confident) continue;
      const int d = static_cast<int>(q.members.size()) - 1;
      ++seen[d];
      if (d < lo || d > hi) ++outside;
    }
    rep << to_string(c.s) << ": range [" << lo << ", " << hi << "], confident dims";
    for (const auto& [d, k] : seen) rep << " " << d << "x" << k;
    rep << ", " << outside << " outside\n";
    o.pass = o.pass && outside == 0;
    for (int d : c.must) o.pass = o.pass && seen.count(d);
  }
  o.report = rep.str();
  o.note = rep.str();
  o.note.pop_back();
  for (auto& ch : o.note) if (ch == '\n') ch = ';';
  return o;
}

Outcome classifier_agreement(int jobs) {
  Outcome o;
  std::ostringstream rep;
  const auto t0 = std::chrono::steady_clock::now();
  int conclusive = 0, mismatches = 0, dual_bad = 0;
  struct Case {
    Surface s;
    int r;
    std::int64_t w;
  };
  for (const Case& c : {Case{{0, 5}, 6, 16}, Case{{1, 2}, 6, 16}}) {
    const auto b = build_ball(c.s, ComplexKind::AC, bounds(c.r, c.w), with_jobs(jobs));
    const Classifier cl(b);
    std::vector<CombinatorialResult> res(b.size());
    parallel_for(b.size(), jobs, [&](std::size_t v) { res[v] = cl.classify(static_cast<int>(v)); });
    int here = 0, miss = 0, dual = 0;
    for (int v = 0; v < b.size(); ++v) {
      if (!res[v].conclusive()) continue;
      ++here;
      if (*res[v].label != b.types[v]) ++miss;
      const bool sep = b.types[v] == TypeLabel::SepCurve || b.types[v] == TypeLabel::SepLoopArc;
      if (res[v].dual_link_disconnected != sep) ++dual;
    }
    rep << to_string(c.s) << ": " << b.size() << " vertices, " << here << " conclusive, " << miss
        << " mismatches, " << dual << " dual-link disagreements\n";
    conclusive += here;
    mismatches += miss;
    dual_bad += dual;
  }
  const double t = seconds_since(t0);
  o.pass = conclusive >= 100 && mismatches == 0 && dual_bad == 0 && t < 600;
  o.report = rep.str();
  o.note = std::to_string(conclusive) + " conclusive, " + std::to_string(mismatches) + " mismatches, " +
           std::to_string(t) + " s";
  return o;
}

Outcome intersection_correctness(int jobs) {
  Outcome o;
  std::ostringstream rep;
  int total = 0, disagreements = 0;
  for (Surface s : {Surface{0, 4}, Surface{1, 1}, Surface{0, 5}}) {
    const SurfaceContext ctx(s);
    std::vector<VertexClass> classes;
    const auto reg = flip_ball(ctx, 2);
    for (const auto& a : reg.arcs()) classes.push_back(a);
    for (const auto& c : enumerate_curves(ctx, s.punctures == 5 ? 6 : 8)) classes.push_back(c);
    std::mt19937_64 rng(17);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (int k = 0; k < 1000; ++k) pairs.emplace_back(rng() % classes.size(), rng() % classes.size());
    std::vector<std::array<std::int64_t, 3>> got(pairs.size());
    std::vector<IntersectionMethod> method(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t k) {
      const auto& x = classes[pairs[k].first];
      const auto& y = classes[pairs[k].second];
      const auto xy = intersection_number(ctx, x, y);
      got[k] = {xy.value, intersection_number(ctx, y, x).value, overlay_oracle(ctx, x, y)};
      method[k] = xy.method;
    });
    int bad = 0, asym = 0;
    std::map<std::string, int> kinds, methods;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (got[k][0] != got[k][2]) ++bad;
      if (got[k][0] != got[k][1]) ++asym;
      const bool ax = is_arc(classes[pairs[k].first]), ay = is_arc(classes[pairs[k].second]);
      ++kinds[ax && ay ? "arc-arc" : (ax || ay ? "arc-curve" : "curve-curve")];
      ++methods[std::string(to_string(method[k]))];
    }
    rep << to_string(s) << ": " << pairs.size() << " pairs";
    for (const auto& [k, n] : kinds) rep << " " << k << "=" << n;
    for (const auto& [m, n] : methods) rep << " " << m << "=" << n;
    rep << ", " << bad << " oracle disagreements, " << asym << " asymmetric\n";
    total += static_cast<int>(pairs.size());
    disagreements += bad + asym;
  }
  o.pass = disagreements == 0;
  o.report = rep.str();
  o.note = std::to_string(total) + " pairs, " + std::to_string(disagreements) + " disagreements";
  return o;
}

Outcome rewriting(int jobs) {
  Outcome o;
  std::ostringstream rep;
  const auto b = build_ball({0, 5}, ComplexKind::AC, bounds(3, 12), with_jobs(jobs));
  const SurfaceContext& ctx = *b.context;
  std::mt19937_64 rng(23);
  std::vector<Path> paths;
  while (paths.size() < 120) {
    if (auto p = sampling::random_curve_walk(b, 8, rng)) paths.push_back(*p);
  }
  std::vector<std::string> verdict(paths.size());
  std::vector<int> lengths(paths.size());
  parallel_for(paths.size(), jobs, [&](std::size_t k) {
    const Path& p = paths[k];
    try {
      const auto r = rewrite_to_curve_path(ctx, p);
      validate_path(ctx, r.path);
      lengths[k] = r.path.length();
      if (r.path.kind != PathKind::C) verdict[k] = "not a C-path";
      else if (!class_equal(r.path.vertices.front(), p.vertices.front()) ||
               !class_equal(r.path.vertices.back(), p.vertices.back()))
        verdict[k] = "endpoints moved";
      else if (r.path.length() > 2 * p.length()) verdict[k] = "too long";
    } catch (const Error& e) {
      verdict[k] = std::string(to_string(e.code())) + ": " + e.what();
    }
  });
  int failures = 0;
  std::map<int, int> by_length;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    ++by_length[paths[k].length()];
    if (!verdict[k].empty()) {
      ++failures;
      rep << "path " << k << ": " << verdict[k] << "\n";
    }
  }
  rep << paths.size() << " paths, lengths";
  for (const auto& [l, n] : by_length) rep << " " << l << "x" << n;
  rep << ", " << failures << " failures\n";
  o.pass = failures == 0;
  o.report = rep.str();
  o.note = std::to_string(paths.size()) + " paths on S0,5, " + std::to_string(failures) + " failures";
  return o;
}

Outcome distance_one(int jobs) {
  Outcome o;
  std::ostringstream rep;
  struct Case {
    Surface s;
    int r;
    std::int64_t w;
  };
  for (const Case& c : {Case{{0, 4}, 3, 12}, Case{{1, 1}, 3, 10}, Case{{0, 5}, 2, 12}, Case{{1, 2}, 2, 14}}) {
    const auto b = build_ball(c.s, ComplexKind::AC, bounds(c.r, c.w), with_jobs(jobs));
    int arcs = 0, lonely = 0;
    for (int v = 0; v < b.size(); ++v) {
      if (!is_arc(b.vertices[v])) continue;
      ++arcs;
      const auto& n = b.adjacency[v];
      if (std::none_of(n.begin(), n.end(), [&](int w) { return is_curve(b.vertices[w]); })) ++lonely;
    }
    rep << to_string(c.s) << ": " << arcs << " arcs, " << lonely << " without a curve neighbor\n";
    o.pass = o.pass && lonely == 0 && arcs > 0;
  }
  const SurfaceContext ctx({0, 3});
  const auto reg = flip_ball(ctx, 4);
  int nonempty = 0;
  for (const auto& a : reg.arcs()) nonempty += !neighborhood_boundary(ctx, a).empty();
  rep << "S0,3: " << reg.arcs().size() << " arcs, " << nonempty << " with essential boundary\n";
  o.pass = o.pass && reg.arcs().size() == 6 && nonempty == 0;
  o.report = rep.str();
  o.note = "every arc has a curve neighbor; S0,3 boundaries empty";
  return o;
}

Outcome small_inequalities(int jobs) {
  Outcome o;
  std::ostringstream rep;
  InequalityOptions io;
  io.jobs = jobs;
  io.seed = 29;
  io.samples = 150;
  io.bounds = bounds(0, 8);
  const auto torus = verify_inequalities({1, 1}, io);
  int torus_exact = 0;
  for (const auto& s : torus.samples) torus_exact += s.exact && s.pass && s.d_c <= 5 && s.d_ac == s.d_c + 2;
  const auto model_issues = torus_structure_violations(ac_model_11(8));

  io.samples = 60;
  io.bounds = bounds(6, 20);
  const auto sphere = verify_inequalities({0, 4}, io);
  int sphere_exact = 0;
  for (const auto& s : sphere.samples) sphere_exact += s.exact && s.pass;
  const auto ball = build_ball({0, 4}, ComplexKind::AC, bounds(4, 12), with_jobs(jobs));
  const auto sphere_issues = sphere_structure_violations(ball);

  o.report = to_json(torus).dump() + "\n" + to_json(sphere).dump() + "\n";
  rep << "S1,1: " << torus_exact << " exact samples with d_AC = d_C + 2, " << torus.failures << " failures, "
      << model_issues.size() << " model violations; S0,4: " << sphere_exact << " exact samples, " << sphere.failures
      << " failures, " << sphere_issues.size() << " structure violations";
  o.pass = torus_exact >= 50 && torus.failures == 0 && model_issues.empty() && sphere_exact >= 50 &&
           sphere.failures == 0 && sphere_issues.empty();
  o.note = rep.str();
  return o;
}

Outcome finite_automorphisms(int jobs) {
  Outcome o;
  const auto b = build_ball({0, 3}, ComplexKind::A, bounds(4, 0), with_jobs(jobs));
  const auto g = automorphisms(b);
  std::array<int, 3> p = {1, 2, 3};
  int contained = 0;
  do {
    std::vector<int> perm(b.size(), -1);
    for (int v = 0; v < b.size(); ++v) {
      const auto e = std::get<ArcClass>(b.vertices[v]).endpoints;
      std::array<Puncture, 2> img = {p[e[0] - 1], p[e[1] - 1]};
      std::sort(img.begin(), img.end());
      for (int w = 0; w < b.size(); ++w) {
        auto f = std::get<ArcClass>(b.vertices[w]).endpoints;
        std::sort(f.begin(), f.end());
        if (f == img) perm[v] = w;
      }
    }
    contained += std::find(g.elements.begin(), g.elements.end(), perm) != g.elements.end();
  } while (std::next_permutation(p.begin(), p.end()));
  o.pass = g.order == 6 && contained == 6;
  o.report = to_json(g).dump() + "\n";
  o.note = "order " + std::to_string(g.order) + ", " + std::to_string(contained) + "/6 puncture permutations";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome(int)>>> criteria = {
      {"S0,3 ground truth", s03_ground_truth},
      {"degenerate cases", degenerate},
      {"triangulation counts", triangulation_counts},
      {"dimension bounds", dimension_bounds},
      {"classifier agreement", classifier_agreement},
      {"intersection correctness", intersection_correctness},
      {"rewriting", rewriting},
      {"distance-one density", distance_one},
      {"S1,1 and S0,4 distances", small_inequalities},
      {"finite automorphisms", finite_automorphisms},
  };
  bool all = true;
  std::vector<std::string> reports;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second(1);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    reports.push_back(o.report);
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
              << o.note << std::endl;
  }

  // Same reports with 4 and 8 workers, and the CLI report bytes.
  std::vector<std::string> differing;
  for (int jobs : {4, 8}) {
    for (std::size_t i = 0; i < criteria.size(); ++i) {
      std::string rep;
      try {
        rep = criteria[i].second(jobs).report;
      } catch (const std::exception& e) {
        rep = e.what();
      }
      if (rep != reports[i]) differing.push_back(std::to_string(i + 1) + "@" + std::to_string(jobs));
    }
  }
  const std::string args = "verify-inequalities -g 0 -n 5 -s 20 --seed 3 -r 3 -w 10 -j ";
  const std::string one = run_cli(args + "1").out;
  for (int jobs : {4, 8}) {
    if (run_cli(args + std::to_string(jobs)).out != one) differing.push_back("cli@" + std::to_string(jobs));
  }
  const bool same = differing.empty() && !one.empty();
  std::string detail = "reports identical across 1, 4, 8 workers";
  if (!same) {
    detail = "differs:";
    for (const auto& d : differing) detail += " " + d;
  }
  std::cout << "criterion 11 " << (same ? "PASS" : "FAIL") << " determinism: " << detail << std::endl;
  all = all && same;
  return all ? 0 : 1;
}
