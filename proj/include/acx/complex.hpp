#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "acx/classes.hpp"
#include "acx/type_label.hpp"

namespace acx {

enum class ComplexKind { A, C, AC };

std::string_view to_string(ComplexKind k);
std::optional<ComplexKind> parse_complex_kind(std::string_view s);

struct BallBounds {
  int radius = 2;           // flip radius for arcs
  std::int64_t weight = 8;  // total base weight for curves
  /// A vertex is complete when it sits this far inside both bounds.
  int radius_margin = 2;
  std::int64_t weight_margin = 2;
};

struct BallOptions {
  int jobs = 1;
  std::size_t node_budget = 250000;
};

/// Finite portion of A(S), C(S) or AC(S): a vertex table and the
/// disjointness graph. Simplices are the cliques of the graph.
struct SimplicialBall {
  Surface surface;
  ComplexKind kind = ComplexKind::AC;
  BallBounds bounds;
  /// Null for surfaces without an ideal triangulation.
  std::shared_ptr<const SurfaceContext> context;

  std::vector<VertexClass> vertices;
  std::vector<TypeLabel> types;
  /// Flip depth at which an arc was found; -1 for curves.
  std::vector<int> depths;
  std::vector<char> complete;
  /// True when the ball is the whole complex.
  bool closed = false;
  /// Sorted neighbor lists.
  std::vector<std::vector<int>> adjacency;

  int size() const { return static_cast<int>(vertices.size()); }
  bool adjacent(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;
  /// Index of a class, or -1.
  int find(const VertexClass& v) const;
  /// Throws Error(UnknownVertex).
  void check_vertex(int v) const;
  bool all_complete() const;
};

/// Arcs of the flip ball of radius `bounds.radius` (kinds A, AC) and
/// essential curves of total base weight at most `bounds.weight` (kinds C,
/// AC). Throws Error(ResourceLimit) or Error(UnsupportedSurface).
SimplicialBall build_ball(Surface s, ComplexKind kind, const BallBounds& bounds, const BallOptions& options = {});

/// Essential curves with total base weight at most `max_weight`, ordered by
/// weight and then coordinates.
std::vector<CurveClass> enumerate_curves(const SurfaceContext& ctx, std::int64_t max_weight);

/// Induced subgraph on a vertex subset, with local indices.
struct Subgraph {
  std::vector<int> vertices;  // ball indices, sorted
  std::vector<std::vector<int>> adjacency;

  int size() const { return static_cast<int>(vertices.size()); }
  int edge_count() const;
  /// Connected components as lists of local indices.
  std::vector<std::vector<int>> components() const;
  /// The empty graph counts as connected.
  bool connected() const { return components().size() <= 1; }
};

Subgraph induced(const SimplicialBall& b, std::vector<int> vertices);
Subgraph star(const SimplicialBall& b, int v);
Subgraph link(const SimplicialBall& b, int v);
/// Complement graph of the link's 1-skeleton.
Subgraph dual_link(const SimplicialBall& b, int v);

struct Clique {
  std::vector<int> members;  // sorted
  /// Every member is complete.
  bool confident = false;
};

/// Inclusion-maximal cliques in lexicographic order. Throws
/// Error(ResourceLimit) past `max_cliques`.
std::vector<Clique> maximal_cliques(const SimplicialBall& b, std::size_t max_cliques = 1000000);

/// Checks a clique against the surface: realizes its arcs as edges of one
/// triangulation, lays the curves disjointly in it and cuts along all of
/// them.
struct CliqueCertificate {
  bool realized = false;
  /// Every complementary region is a triangle, an annulus between a curve
  /// and a loop arc, or a pair of pants bounded by curves.
  bool maximal = false;
};

CliqueCertificate certify_clique(const SimplicialBall& b, const std::vector<int>& members);

/// Vertex permutations preserving adjacency and the arc/curve tag.
struct AutomorphismGroup {
  std::size_t order = 0;
  std::vector<std::vector<int>> generators;
  /// Every element, in lexicographic order (identity first).
  std::vector<std::vector<int>> elements;
};

/// Brute force with pruning by (kind, degree, type). Throws
/// Error(IncompleteBall) unless every vertex is complete, and
/// Error(ResourceLimit) past `max_order`.
AutomorphismGroup automorphisms(const SimplicialBall& b, std::size_t max_order = 100000);

bool is_automorphism(const SimplicialBall& b, const std::vector<int>& perm);

/// Number of simplices of each dimension 0..max_dim. Throws
/// Error(ResourceLimit) past `max_simplices` in total.
std::vector<std::size_t> f_vector(const SimplicialBall& b, int max_dim, std::size_t max_simplices = 10000000);

}  // namespace acx
