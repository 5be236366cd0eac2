#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "linecut/ldg.hpp"
#include "linecut/maxflow.hpp"

namespace linecut {

struct PruneStats {
  std::uint32_t vertices_deleted = 0;
  std::uint32_t edges_added = 0;
  std::uint64_t flow_queries = 0;
  double seconds = 0.0;
};

/// Pruned LDG: the base graph plus a deletion mask and extra edges. The
/// effective adjacency is base union added, restricted to survivors.
/// Deleted vertices never appear as added-edge endpoints, and added edges
/// only join pairs non-adjacent in base. Every maximal independent set of
/// the base with size <= k survives intact.
struct PrunedLdg {
  const Ldg* base = nullptr;
  std::vector<char> deleted;                        // by line id
  std::vector<std::pair<LineId, LineId>> added_edges; // u < v, ascending
  BitMatrix effective;                              // base adjacency union added

  bool vertex_deleted(LineId v) const { return deleted[v] != 0; }
  bool effective_adjacent(LineId u, LineId v) const {
    return !deleted[u] && !deleted[v] && effective.get(u, v);
  }
  std::uint32_t surviving_count() const;
};

/// Flow lower bound on the size of the smallest MIS containing `line`:
/// LDG neighbors of the line get infinite capacity, everything else 1.
/// Returns the min-cut value, or nullopt when it exceeds k.
std::optional<int> min_mis_single(const Cone& cone, const Ldg& ldg, LineId line, int k);

/// Pair variant: infinite capacity on the union of both neighborhoods;
/// u and v themselves stay at 1. Requires u != v and non-adjacent.
std::optional<int> min_mis_pair(const Cone& cone, const Ldg& ldg, LineId u, LineId v, int k);

/// Two passes. First delete every vertex whose single-line bound exceeds k;
/// then, over surviving non-adjacent pairs in ascending (u, v) order, add an
/// edge when the pair bound exceeds k. Pair tests read the base adjacency
/// only, so the result is independent of iteration order.
PrunedLdg prune_ldg(const Cone& cone, const Ldg& ldg, int k, PruneStats* stats = nullptr);

/// Serial reference for the parallel kernel; bit-identical results.
PrunedLdg prune_ldg_serial(const Cone& cone, const Ldg& ldg, int k, PruneStats* stats = nullptr);

namespace detail {
/// Shared single/pair query core: `infinite` marks lines at infinite capacity.
std::optional<int> min_mis_query(FlowNet& net, const std::vector<Cap>& caps, int k);
} // namespace detail

} // namespace linecut
