#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acx/complex.hpp"
#include "acx/farey.hpp"

namespace acx {

enum class PathKind { AC, C };

struct Path {
  Surface surface;
  PathKind kind = PathKind::AC;
  std::vector<VertexClass> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Curves of a C-path on S1,1 and S0,4 meet minimally (once, twice);
/// elsewhere they are disjoint.
std::int64_t curve_adjacency_intersection(Surface s);

/// Throws Error(InvalidPath) naming the first bad step.
void validate_path(const SurfaceContext& ctx, const Path& p);

struct RewriteStep {
  int position = 0;  // index of the arc in the input path
  std::string rule;  // "keep", "arc-curve", "arc-arc", "arc-arc+1"
  std::vector<VertexClass> inserted;
};

struct RewriteResult {
  Path path;
  std::vector<RewriteStep> steps;
  /// Set when the surface falls outside 2g + n >= 5.
  std::optional<std::string> warning;
};

/// Replaces every arc of an AC-path between two curves by one or two
/// curves taken from neighborhood boundaries of the arc and of the arc
/// together with the next arc. Throws Error(NoCandidate) or
/// Error(InvalidPath).
RewriteResult rewrite_to_curve_path(const SurfaceContext& ctx, const Path& p);

struct Distance {
  int value = 0;
  /// Some shortest path runs through complete vertices only.
  bool exact = false;
  std::vector<int> path;  // one shortest path, as ball indices
};

/// Shortest path in the ball's 1-skeleton. Throws Error(Unreachable).
Distance bfs_distance(const SimplicialBall& b, int x, int y);

/// Arc-and-curve complex of S1,1 written down from slopes: curve(s) -- arc(s)
/// for every slope, arc(s) -- arc(t) when s and t are Farey neighbors, and
/// nothing else. Slopes run up to height `bound`; each vertex carries the
/// real class of that slope. Curves are complete; arcs are complete up to
/// height bound - 1.
SimplicialBall ac_model_11(std::int64_t bound);
/// Slope of every vertex of a model ball, in vertex order.
std::vector<FareySlope> model_slopes(const SimplicialBall& model);

/// Checks on a S1,1 model ball: each curve has one neighbor and it is an
/// arc, each arc has one curve neighbor, and whenever z a b v is a path
/// between distinct curves, z and v are Farey neighbors. Returns the
/// violations found.
std::vector<std::string> torus_structure_violations(const SimplicialBall& model);

/// Checks on an S0,4 ball: each complete arc has exactly one curve neighbor
/// and each complete curve has a neighbor joining two distinct punctures.
std::vector<std::string> sphere_structure_violations(const SimplicialBall& b);

struct SampleReport {
  int id = 0;
  std::string x, y;  // class keys
  int d_c = 0, d_ac = 0;
  bool exact = false;
  bool pass = true;
  std::string check;     // inequality that was tested
  std::string witness;   // failure detail
  int rewritten_length = -1;
};

struct InequalityReport {
  Surface surface;
  std::string mode;  // "generic", "torus", "sphere", "report-only"
  std::vector<SampleReport> samples;
  int passes = 0, skips = 0, failures = 0;
};

struct InequalityOptions {
  int samples = 50;
  std::uint64_t seed = 1;
  BallBounds bounds;
  int jobs = 1;
};

/// Samples curve pairs and checks the distance inequalities that apply to
/// the surface, skipping samples whose distances are not exact. On
/// surfaces with 2g + n >= 5 every AC-geodesic is also rewritten and the
/// rewritten length is checked against twice d_AC.
InequalityReport verify_inequalities(Surface s, const InequalityOptions& options);

}  // namespace acx
