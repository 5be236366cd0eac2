#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linecut/bitmatrix.hpp"
#include "linecut/cone.hpp"
#include "linecut/cuts.hpp"

namespace linecut {

/// Brute-force references used by tests and the verify command. They share
/// nothing with the pipeline beyond the Cone and graph data types: cut
/// checks are phrased over explicitly enumerated input-to-root paths, not
/// over reachability or LDGs. All guards throw guard_error.

/// Every size-<=k line subset that is a strong line cut, by exhaustive
/// subset scan against the path list. Guard: cone has <= 20 lines.
/// Result sorted lexicographically by line-id list.
std::vector<LineCut> brute_strong_cuts(const Cone& cone, int k);

/// Every maximal independent set of size <= k, exhaustively. Guard: <= 20
/// vertices. Result sorted lexicographically by member list.
std::vector<std::vector<std::uint32_t>> brute_mis(const UndirectedGraph& graph, int k);

/// Size of the smallest MIS containing all required vertices. Guard: <= 18
/// vertices; required must be independent (std::invalid_argument otherwise).
/// An independent set always extends to some MIS, so a value exists; the
/// optional return mirrors the native AboveBound shape for comparison.
std::optional<int> brute_min_mis(const UndirectedGraph& graph,
                                 const std::vector<std::uint32_t>& required);

/// Node cuts of every unidirectional S-T bipartition (inputs in S, root in
/// T, all crossing lines S to T) with crossing-line count <= k, by
/// exhaustive bipartition scan. Guard: cone has <= 14 nodes. Result
/// deduplicated and sorted.
std::vector<NodeCut> brute_unidirectional_node_cuts(const Cone& cone, int k);

namespace detail {
/// All input-to-root paths of the cone as line-id bitmasks (cones are
/// acyclic, so every path is simple). Guard: <= 20 lines.
std::vector<std::uint32_t> enumerate_path_masks(const Cone& cone);
} // namespace detail

} // namespace linecut
