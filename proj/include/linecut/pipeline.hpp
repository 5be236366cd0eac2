#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "linecut/cuts.hpp"
#include "linecut/dag.hpp"

namespace linecut {

struct PipelineOptions {
  int k = 6;                              // 1..16
  std::optional<std::uint32_t> cone_limit;
  int jobs = 0;                           // stage-1 workers; 0 = hardware default
};

struct RootStats {
  NodeId root = 0;
  std::uint32_t cone_nodes = 0;
  std::uint32_t cone_lines = 0;
  std::uint32_t ldg_vertices = 0;         // before pruning (= cone_lines)
  std::uint32_t ldg_vertices_after = 0;   // survivors
  std::uint32_t edges_added = 0;
  std::uint64_t candidates = 0;           // recursion leaves, pre-filter
  std::uint64_t cuts = 0;                 // emitted
  double prune_seconds = 0.0;
  double enum_seconds = 0.0;
};

struct EnumStats {
  std::vector<RootStats> per_root;
  std::uint64_t total_cuts = 0;
  std::uint64_t total_candidates = 0;
  double total_prune_seconds = 0.0;
  double total_enum_seconds = 0.0;
  std::uint32_t node_count = 0;
  std::uint32_t input_count = 0;
};

struct EmittedCut {
  LineCut line_cut;
  NodeCut node_cut;
  const Cone* cone = nullptr; // valid during the sink call only
};

using CutSink = std::function<void(const EmittedCut&)>;

/// Runs extract_cone, build_ldg, prune, enumerate, convert for each root in
/// the order given, streaming cuts to the sink. Roots are processed in
/// batches: pruning runs in parallel across the batch (jobs workers sharing
/// only the immutable Dag), then enumeration and emission run serially in
/// root order, so the cut stream is identical for every jobs value and peak
/// memory does not grow with the number of cuts. Per-cut order within a
/// root is lexicographic by sorted line-id list.
EnumStats enumerate_cuts(const Dag& dag, const std::vector<NodeId>& roots,
                         const PipelineOptions& options, const CutSink& sink);

} // namespace linecut
