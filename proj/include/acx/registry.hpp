#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "acx/classes.hpp"

namespace acx {

/// How flip_ball decides that two triangulations are the same.
enum class DedupMode {
  /// Same set of arcs up to isotopy. Used for arc inventories.
  Isotopy,
  /// Isomorphic as labeled maps (combinatorial types only).
  Isomorphism,
};

struct FlipBallOptions {
  std::size_t node_budget = 250000;
  DedupMode mode = DedupMode::Isotopy;
  int jobs = 1;
};

struct RegistryEntry {
  ChainPtr chain;
  std::string key;
  /// arc id of each edge of chain->tip()
  std::vector<int> edge_arcs;
};

/// Every triangulation within a flip radius of the base, with the arcs they
/// contain. Entries and arcs are in breadth-first discovery order.
class FlipRegistry {
 public:
  FlipRegistry(const SurfaceContext& ctx, DedupMode mode) : ctx_(&ctx), mode_(mode) {}

  const SurfaceContext& context() const { return *ctx_; }
  DedupMode mode() const { return mode_; }
  int radius() const { return radius_; }
  /// True when some breadth-first level found nothing new, so the registry
  /// holds every triangulation of the surface.
  bool closed() const { return closed_; }
  const std::vector<RegistryEntry>& entries() const { return entries_; }
  const std::vector<ArcClass>& arcs() const { return arcs_; }
  /// Breadth-first depth at which each arc was first seen.
  const std::vector<int>& arc_depths() const { return arc_depths_; }

  /// Arc id of a class, or -1.
  int find_arc(const ArcClass& a) const;

 private:
  friend FlipRegistry flip_ball(const SurfaceContext& ctx, int radius, const FlipBallOptions& options);

  const SurfaceContext* ctx_;
  DedupMode mode_;
  int radius_ = 0;
  bool closed_ = false;
  std::vector<RegistryEntry> entries_;
  std::map<std::string, int> entry_index_;
  std::vector<ArcClass> arcs_;
  std::vector<int> arc_depths_;
  std::map<std::string, int> arc_index_;
};

/// Breadth-first flip search from the base triangulation. Self-folded edges
/// are skipped. Throws Error(ResourceLimit) when more than
/// `options.node_budget` triangulations would be stored.
FlipRegistry flip_ball(const SurfaceContext& ctx, int radius, const FlipBallOptions& options = {});

}  // namespace acx
