#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "acx/json_io.hpp"

using namespace acx;
namespace fs = std::filesystem;

namespace {

constexpr const char* kCodeVersion = "acx-1";

enum Exit { Ok = 0, VerificationFailure = 1, UsageError = 2, ResourceLimitExit = 3 };

struct RunConfig {
  int genus = 0;
  int punctures = 3;
  int radius = 2;
  std::int64_t bound = 8;
  int radius_margin = 2;
  std::int64_t weight_margin = 2;
  std::string kind = "AC";
  int samples = 50;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string cache_dir;
  std::string format = "json";
  std::string output;
  std::string ball_file;
  std::string input;
  int vertex = -1;
  std::string method = "both";
};

struct Failure : std::runtime_error {
  Exit code;
  json body;
  Failure(Exit c, json b) : std::runtime_error("failure"), code(c), body(std::move(b)) {}
};

Surface surface_of(const RunConfig& c) { return {c.genus, c.punctures}; }

BallBounds bounds_of(const RunConfig& c) {
  BallBounds b;
  b.radius = c.radius;
  b.weight = c.bound;
  b.radius_margin = c.radius_margin;
  b.weight_margin = c.weight_margin;
  return b;
}

// Writes next to the target and renames over it.
void write_atomic(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary);
    out << text;
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.output.empty()) std::cout << text;
  else write_atomic(c.output, text);
}

void emit(const RunConfig& c, const json& j) { emit(c, j.dump(2) + "\n"); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

SimplicialBall load_or_build_ball(const RunConfig& c) {
  if (!c.ball_file.empty()) return ball_from_json(read_json_file(c.ball_file));
  const auto kind = parse_complex_kind(c.kind);
  if (!kind) throw Error(ErrorCode::InvalidInput, "kind must be A, C or AC");
  BallOptions o;
  o.jobs = c.jobs;
  return build_ball(surface_of(c), *kind, bounds_of(c), o);
}

fs::path cache_root(const RunConfig& c) {
  if (const char* env = std::getenv("ACX_CACHE_DIR"); env && *env) return env;
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "acx";
  return ".acx-cache";
}

class CacheLock {
 public:
  explicit CacheLock(const fs::path& dir) {
    fs::create_directories(dir);
    fd_ = ::open((dir / ".lock").c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ < 0 || ::flock(fd_, LOCK_EX) != 0) throw Error(ErrorCode::ResourceLimit, "cannot lock " + dir.string());
  }
  ~CacheLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  CacheLock(const CacheLock&) = delete;
  CacheLock& operator=(const CacheLock&) = delete;

 private:
  int fd_ = -1;
};

int cmd_surface_info(const RunConfig& c) {
  const Surface s = surface_of(c);
  json j = {{"surface", to_json(s)},
            {"euler_characteristic", euler_characteristic(s)},
            {"special_case", to_string(special_case(s))},
            {"triangulable", triangulable(s)}};
  if (triangulable(s)) {
    j["triangulation_edges"] = triangulation_edge_count(s);
    j["triangulation_faces"] = triangulation_face_count(s);
    j["dims"] = {{"min", min_maximal_simplex_dim(s)}, {"max", max_simplex_dim(s)}};
  } else {
    j["triangulation_edges"] = nullptr;
    j["triangulation_faces"] = nullptr;
    j["dims"] = nullptr;
  }
  emit(c, j);
  return Ok;
}

int cmd_flip_ball(const RunConfig& c) {
  const Surface s = surface_of(c);
  const fs::path dir = cache_root(c);
  const CacheLock lock(dir);
  const fs::path file = dir / ("flipball-g" + std::to_string(s.genus) + "-n" + std::to_string(s.punctures) + "-r" +
                               std::to_string(c.radius) + "-" + kCodeVersion + ".json");
  std::string status = "miss";
  json doc;
  if (fs::exists(file)) {
    status = "rebuilt";
    try {
      std::ifstream in(file);
      doc = json::parse(in);
      if (doc.at("hash") == content_hash(doc.at("registry"))) status = "hit";
    } catch (const std::exception&) {
    }
  }
  if (status != "hit") {
    const SurfaceContext ctx(s);
    FlipBallOptions o;
    o.jobs = c.jobs;
    doc = to_json(flip_ball(ctx, c.radius, o));
    write_atomic(file, doc.dump() + "\n");
  }
  const json& r = doc["registry"];
  emit(c, json{{"surface", to_json(s)},
               {"radius", c.radius},
               {"triangulations", r["triangulations"].size()},
               {"arcs", r["arcs"].size()},
               {"closed", r["closed"]},
               {"hash", doc["hash"]},
               {"cache", status},
               {"file", file.string()}});
  return Ok;
}

int cmd_build_ball(const RunConfig& c) {
  const SimplicialBall b = load_or_build_ball(c);
  if (c.format == "dot") emit(c, to_dot(b));
  else emit(c, to_json(b));
  return Ok;
}

int cmd_export(const RunConfig& c) {
  if (c.ball_file.empty()) throw Error(ErrorCode::InvalidInput, "export needs --ball");
  return cmd_build_ball(c);
}

int cmd_classify(const RunConfig& c) {
  const SimplicialBall b = load_or_build_ball(c);
  b.check_vertex(c.vertex);
  json j = {{"vertex", c.vertex}, {"key", class_key(b.vertices[c.vertex])}, {"method", c.method}};
  std::optional<TypeLabel> topo, comb;
  if (c.method == "topo" || c.method == "both") {
    if (!b.context) topo = b.types[c.vertex];
    else topo = classify_topological(*b.context, b.vertices[c.vertex]);
    j["topological"] = to_string(*topo);
  }
  if (c.method == "comb" || c.method == "both") {
    const auto r = classify_combinatorial(b, c.vertex);
    comb = r.label;
    j["combinatorial"] = to_json(r, b);
  }
  int code = Ok;
  if (topo && comb) {
    j["agree"] = *topo == *comb;
    if (*topo != *comb) code = VerificationFailure;
  }
  emit(c, j);
  return code;
}

int cmd_maxsimplices(const RunConfig& c) {
  const SimplicialBall b = load_or_build_ball(c);
  const auto cliques = maximal_cliques(b);
  std::map<int, int> all, confident;
  json list = json::array();
  for (const auto& q : cliques) {
    const int dim = static_cast<int>(q.members.size()) - 1;
    ++all[dim];
    if (q.confident) ++confident[dim];
    list.push_back({{"members", q.members}, {"dim", dim}, {"confident", q.confident}});
  }
  auto hist = [](const std::map<int, int>& m) {
    json h = json::object();
    for (const auto& [d, k] : m) h[std::to_string(d)] = k;
    return h;
  };
  json j = {{"surface", to_json(b.surface)},
            {"count", cliques.size()},
            {"dims", hist(all)},
            {"confident_dims", hist(confident)},
            {"simplices", list}};
  if (triangulable(b.surface)) {
    j["expected_range"] = {min_maximal_simplex_dim(b.surface), max_simplex_dim(b.surface)};
  }
  emit(c, j);
  return Ok;
}

int cmd_automorphisms(const RunConfig& c) {
  const SimplicialBall b = load_or_build_ball(c);
  emit(c, to_json(automorphisms(b)));
  return Ok;
}

int cmd_rewrite_path(const RunConfig& c) {
  if (c.input.empty()) throw Error(ErrorCode::InvalidInput, "rewrite-path needs --input");
  const Path p = path_from_json(read_json_file(c.input));
  const SurfaceContext ctx(p.surface);
  const RewriteResult r = rewrite_to_curve_path(ctx, p);
  json j = to_json(r);
  j["input_length"] = p.length();
  j["within_bound"] = r.path.length() <= 2 * p.length();
  emit(c, j);
  return r.path.length() <= 2 * p.length() ? Ok : VerificationFailure;
}

int cmd_verify_inequalities(const RunConfig& c) {
  InequalityOptions o;
  o.samples = c.samples;
  o.seed = c.seed;
  o.bounds = bounds_of(c);
  o.jobs = c.jobs;
  const auto r = verify_inequalities(surface_of(c), o);
  emit(c, to_json(r));
  return r.failures == 0 ? Ok : VerificationFailure;
}

int cmd_selftest_s03(const RunConfig& c) {
  BallBounds bounds;
  bounds.radius = 4;
  bounds.weight = 4;
  BallOptions o;
  o.jobs = c.jobs;
  const auto b = build_ball({0, 3}, ComplexKind::AC, bounds, o);
  const auto f = f_vector(b, 3);
  const bool ok = b.closed && b.all_complete() && f == std::vector<std::size_t>{6, 9, 4, 0};
  emit(c, json{{"surface", to_json(b.surface)},
               {"f_vector", {f[0], f[1], f[2]}},
               {"higher_simplices", f[3]},
               {"expected", {6, 9, 4}},
               {"closed", b.closed},
               {"pass", ok}});
  return ok ? Ok : VerificationFailure;
}

int cmd_intersect(const RunConfig& c) {
  if (c.input.empty()) throw Error(ErrorCode::InvalidInput, "intersect needs --input");
  const json j = read_json_file(c.input);
  const Surface s = surface_from_json(j.at("surface"));
  const SurfaceContext ctx(s);
  const VertexClass x = class_from_json(ctx, j.at("x")), y = class_from_json(ctx, j.at("y"));
  json out = to_json(intersection_number(ctx, x, y));
  out["oracle"] = overlay_oracle(ctx, x, y);
  emit(c, out);
  return out["oracle"] == out["value"] ? Ok : VerificationFailure;
}

Exit exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ResourceLimit:
    case ErrorCode::IncompleteBall: return ResourceLimitExit;
    case ErrorCode::InvalidInput:
    case ErrorCode::UnknownVertex:
    case ErrorCode::UnsupportedSurface:
    case ErrorCode::InvalidPath:
    case ErrorCode::InvalidCoordinates: return UsageError;
    default: return VerificationFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arc and curve complexes of punctured surfaces"};
  app.require_subcommand(1);
  RunConfig c;

  auto surface_opts = [&](CLI::App* s) {
    s->add_option("-g,--genus", c.genus, "genus")->check(CLI::NonNegativeNumber);
    s->add_option("-n,--punctures", c.punctures, "number of punctures")->check(CLI::PositiveNumber);
  };
  auto ball_opts = [&](CLI::App* s) {
    surface_opts(s);
    s->add_option("-r,--radius", c.radius, "flip radius for arcs")->check(CLI::NonNegativeNumber);
    s->add_option("-w,--bound", c.bound, "curve weight bound")->check(CLI::NonNegativeNumber);
    s->add_option("--radius-margin", c.radius_margin, "flip margin for completeness")->check(CLI::NonNegativeNumber);
    s->add_option("--weight-margin", c.weight_margin, "weight margin for completeness")->check(CLI::NonNegativeNumber);
    s->add_option("-k,--kind", c.kind, "A, C or AC")->check(CLI::IsMember({"A", "C", "AC"}));
    s->add_option("--ball", c.ball_file, "ball JSON instead of building one");
  };
  auto common = [&](CLI::App* s) {
    s->add_option("-j,--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    s->add_option("-o,--output", c.output, "write here instead of stdout");
    s->add_option("-f,--format", c.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
  };

  std::map<std::string, int (*)(const RunConfig&)> handlers;
  auto sub = [&](const char* name, const char* help, int (*fn)(const RunConfig&)) {
    CLI::App* s = app.add_subcommand(name, help);
    common(s);
    handlers[name] = fn;
    return s;
  };

  surface_opts(sub("surface-info", "Euler characteristic, edge count, dimension bounds", cmd_surface_info));
  {
    auto* s = sub("flip-ball", "Triangulations within a flip radius, cached on disk", cmd_flip_ball);
    surface_opts(s);
    s->add_option("-r,--radius", c.radius, "flip radius")->check(CLI::NonNegativeNumber);
    s->add_option("--cache-dir", c.cache_dir, "cache directory (ACX_CACHE_DIR overrides)");
  }
  ball_opts(sub("build-ball", "Enumerate a finite ball of A, C or AC", cmd_build_ball));
  {
    auto* s = sub("classify", "Type of one vertex, topologically and from the complex", cmd_classify);
    ball_opts(s);
    s->add_option("-v,--vertex", c.vertex, "vertex id")->required();
    s->add_option("-m,--method", c.method, "topo, comb or both")->check(CLI::IsMember({"topo", "comb", "both"}));
  }
  ball_opts(sub("maxsimplices", "Maximal simplices and their dimensions", cmd_maxsimplices));
  ball_opts(sub("automorphisms", "Automorphism group of a complete ball", cmd_automorphisms));
  sub("rewrite-path", "Rewrite an AC-path into a C-path", cmd_rewrite_path)
      ->add_option("-i,--input", c.input, "path JSON")
      ->required();
  {
    auto* s = sub("verify-inequalities", "Sample curve pairs and compare d_C with d_AC", cmd_verify_inequalities);
    ball_opts(s);
    s->add_option("-s,--samples", c.samples, "number of pairs")->check(CLI::PositiveNumber);
    s->add_option("--seed", c.seed, "random seed");
  }
  sub("selftest-s03", "Check the f-vector of the three-punctured sphere", cmd_selftest_s03);
  {
    auto* s = sub("export", "Convert a ball JSON to DOT or JSON", cmd_export);
    s->add_option("--ball", c.ball_file, "ball JSON")->required();
  }
  sub("intersect", "Intersection number of two classes", cmd_intersect)
      ->add_option("-i,--input", c.input, "JSON with surface, x and y")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : UsageError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return handlers.at(name)(c);
  } catch (const Error& e) {
    std::cout << error_json(e.code(), e.what()).dump() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cout << json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump() << "\n";
    return VerificationFailure;
  }
}
