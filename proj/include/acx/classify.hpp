#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acx/complex.hpp"

namespace acx {

/// True iff cutting along the class leaves two components.
bool separating(const SurfaceContext& ctx, const VertexClass& x);

TypeLabel classify_topological(const SurfaceContext& ctx, const VertexClass& x);

struct DimThrough {
  int dim = -1;
  bool confident = false;
};

struct CombinatorialResult {
  std::optional<TypeLabel> label;  // empty when inconclusive
  std::string reason;              // why inconclusive

  // step (a)
  int link_size = 0;
  int dual_link_components = 0;
  bool dual_link_disconnected = false;
  // step (b)
  DimThrough dim;
  // step (c)
  std::optional<int> witness;
  int candidates_checked = 0;

  bool conclusive() const { return label.has_value(); }
};

/// Combinatorial queries on one ball. Maximal cliques are computed once.
class Classifier {
 public:
  explicit Classifier(const SimplicialBall& b);

  const SimplicialBall& ball() const { return *ball_; }
  const std::vector<Clique>& cliques() const { return cliques_; }

  /// Largest confident clique through v, minus one. Confident when it
  /// reaches the ceiling for the vertex's kind or the ball is closed.
  DimThrough max_dim_through(int v) const;

  /// Type from link combinatorics alone: dual-link connectivity, then the
  /// dimension through v, then a separating-curve witness z in the link
  /// with St(z) inside St(v).
  CombinatorialResult classify(int v) const;

 private:
  CombinatorialResult steps_ab(int v) const;

  const SimplicialBall* ball_;
  std::vector<Clique> cliques_;
  std::vector<int> best_;  // largest confident clique size per vertex
};

DimThrough max_dim_through(const SimplicialBall& b, int v);
CombinatorialResult classify_combinatorial(const SimplicialBall& b, int v);

/// Answer of the combinatorial classifier on balls of growing radius and
/// weight, and the first radius from which it no longer changed.
struct Stabilization {
  std::vector<int> radii;
  std::vector<std::optional<TypeLabel>> labels;
  std::optional<int> stable_from;
};

Stabilization stabilization(Surface s, const VertexClass& x, const BallBounds& start, int steps,
                            const BallOptions& options = {});

}  // namespace acx
