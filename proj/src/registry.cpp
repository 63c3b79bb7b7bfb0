#include "acx/registry.hpp"

#include <algorithm>
#include <thread>

#include "acx/error.hpp"
#include "acx/parallel.hpp"

namespace acx {

int FlipRegistry::find_arc(const ArcClass& a) const {
  const auto it = arc_index_.find(arc_key(a));
  return it == arc_index_.end() ? -1 : it->second;
}

namespace {

struct Candidate {
  ChainPtr chain;
  std::vector<ArcClass> arcs;
  std::string key;
};

Candidate describe(const SurfaceContext& ctx, ChainPtr chain, DedupMode mode) {
  Candidate c;
  c.chain = std::move(chain);
  const int edges = c.chain->tip().edge_count();
  c.arcs.reserve(edges);
  std::vector<std::string> keys;
  for (EdgeId e = 0; e < edges; ++e) {
    c.arcs.push_back(make_arc(ctx, c.chain, e));
    keys.push_back(arc_key(c.arcs.back()));
  }
  if (mode == DedupMode::Isotopy) {
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) c.key += k + ";";
  } else {
    c.key = canonical_code(c.chain->tip(), true);
  }
  return c;
}

}  // namespace

FlipRegistry flip_ball(const SurfaceContext& ctx, int radius, const FlipBallOptions& options) {
  if (radius < 0) throw Error(ErrorCode::InvalidInput, "radius must be non-negative");
  FlipRegistry reg(ctx, options.mode);

  auto admit = [&](Candidate c, int depth) {
    if (reg.entry_index_.count(c.key)) return false;
    if (reg.entries_.size() >= options.node_budget) {
      throw Error(ErrorCode::ResourceLimit, "flip ball exceeded node budget of " + std::to_string(options.node_budget));
    }
    RegistryEntry entry{c.chain, c.key, {}};
    for (auto& a : c.arcs) {
      const std::string k = arc_key(a);
      auto [it, inserted] = reg.arc_index_.emplace(k, static_cast<int>(reg.arcs_.size()));
      if (inserted) {
        reg.arcs_.push_back(std::move(a));
        reg.arc_depths_.push_back(depth);
      }
      entry.edge_arcs.push_back(it->second);
    }
    reg.entry_index_.emplace(c.key, static_cast<int>(reg.entries_.size()));
    reg.entries_.push_back(std::move(entry));
    return true;
  };

  admit(describe(ctx, ctx.root, options.mode), 0);
  std::size_t frontier_begin = 0;
  for (int depth = 1; depth <= radius; ++depth) {
    const std::size_t frontier_end = reg.entries_.size();
    std::vector<std::pair<std::size_t, EdgeId>> moves;
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      const IdealTriangulation& t = reg.entries_[i].chain->tip();
      for (EdgeId e = 0; e < t.edge_count(); ++e) {
        if (!t.is_self_folded(e)) moves.emplace_back(i, e);
      }
    }
    std::vector<Candidate> children(moves.size());
    parallel_for(moves.size(), options.jobs, [&](std::size_t k) {
      const auto [i, e] = moves[k];
      children[k] = describe(ctx, FlipChain::extend(reg.entries_[i].chain, e), options.mode);
    });
    for (auto& c : children) admit(std::move(c), depth);
    frontier_begin = frontier_end;
    reg.radius_ = depth;
    if (frontier_begin == reg.entries_.size()) {
      reg.closed_ = true;
      break;
    }
  }
  reg.radius_ = radius;
  return reg;
}

}  // namespace acx
