#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "linecut/prune.hpp"

namespace linecut {

/// A maximal independent set of the base LDG: members sorted ascending,
/// pairwise non-adjacent in base, not extendable in base, size <= k.
struct MisSet {
  std::vector<LineId> members;

  std::uint32_t size() const { return static_cast<std::uint32_t>(members.size()); }
  bool operator==(const MisSet&) const = default;
};

struct EnumCounters {
  std::uint64_t candidates = 0; // recursion leaves, before the base-maximality filter
  std::uint64_t emitted = 0;
  double seconds = 0.0;
};

using MisSink = std::function<void(const MisSet&)>;

/// Streams every MIS of the base LDG with size <= k, each once, in
/// lexicographic order of the sorted member list. Recursion branches on the
/// lowest-id undecided survivor over the pruned graph's effective adjacency,
/// include branch first; branches are cut when the include count hits k with
/// vertices still undecided or when an excluded vertex can no longer gain an
/// included neighbor. Leaves are re-checked for maximality against the base
/// graph (pruning can make a set maximal in the pruned graph yet extendable
/// in the base); failures count as candidates but are not emitted.
void enumerate_mis(const PrunedLdg& pruned, int k, const MisSink& sink,
                   EnumCounters* counters = nullptr);

} // namespace linecut
