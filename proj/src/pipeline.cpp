#include "linecut/pipeline.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "linecut/cone.hpp"
#include "linecut/errors.hpp"
#include "linecut/ldg.hpp"
#include "linecut/mis_enum.hpp"
#include "linecut/prune.hpp"

namespace linecut {

namespace {

struct Prepared {
  Cone cone;
  Ldg ldg;
  PrunedLdg pruned; // pruned.base points at this->ldg; slots must not move
  PruneStats prune_stats;
  std::exception_ptr error;
};

void prepare(const Dag& dag, NodeId root, const PipelineOptions& options, Prepared& slot) {
  try {
    slot.error = nullptr;
    slot.cone = extract_cone(dag, root, options.cone_limit);
    slot.ldg = build_ldg(slot.cone);
    slot.prune_stats = PruneStats{};
    slot.pruned = prune_ldg_serial(slot.cone, slot.ldg, options.k, &slot.prune_stats);
  } catch (...) {
    slot.error = std::current_exception();
  }
}

} // namespace

EnumStats enumerate_cuts(const Dag& dag, const std::vector<NodeId>& roots,
                         const PipelineOptions& options, const CutSink& sink) {
  if (options.k < 1 || options.k > 16) throw guard_error("k must be in 1..16");
  if (options.jobs < 0) throw guard_error("jobs must be >= 0");
  for (NodeId root : roots) {
    if (root >= dag.node_count()) throw guard_error("root out of range");
    if (!dag.is_gate(root)) throw guard_error("cone undefined for inputs");
  }

  int workers = options.jobs;
#ifdef _OPENMP
  if (workers == 0) workers = omp_get_max_threads();
#else
  workers = 1;
#endif
  if (workers < 1) workers = 1;
  const std::size_t batch = std::max<std::size_t>(static_cast<std::size_t>(workers) * 2, 4);

  EnumStats stats;
  stats.node_count = dag.node_count();
  stats.input_count = dag.primary_input_count();
  stats.per_root.reserve(roots.size());

  // Stage 1 prunes a batch of roots in parallel (cone, LDG and flow state
  // are all batch-local; the Dag is shared read-only). Stage 2 enumerates
  // and emits serially in root order, so the cut stream is byte-identical
  // for every worker count and memory stays bounded by the batch size.
  std::vector<Prepared> slots(std::min(batch, std::max<std::size_t>(roots.size(), 1)));
  for (std::size_t base = 0; base < roots.size(); base += slots.size()) {
    const std::size_t count = std::min(slots.size(), roots.size() - base);

#ifdef _OPENMP
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
      prepare(dag, roots[base + i], options, slots[i]);

    for (std::size_t i = 0; i < count; ++i) {
      Prepared& slot = slots[i];
      if (slot.error) std::rethrow_exception(slot.error);

      RootStats rs;
      rs.root = roots[base + i];
      rs.cone_nodes = slot.cone.node_count();
      rs.cone_lines = slot.cone.line_count();
      rs.ldg_vertices = slot.ldg.vertex_count();
      rs.ldg_vertices_after = slot.pruned.surviving_count();
      rs.edges_added = static_cast<std::uint32_t>(slot.pruned.added_edges.size());
      rs.prune_seconds = slot.prune_stats.seconds;

      CutValidator validator(slot.cone);
      EnumCounters counters;
      EmittedCut emitted;
      emitted.cone = &slot.cone;
      enumerate_mis(
          slot.pruned, options.k,
          [&](const MisSet& mis) {
            emitted.line_cut = mis_to_line_cut(slot.cone, validator, mis);
            emitted.node_cut = line_cut_to_node_cut(slot.cone, emitted.line_cut);
            sink(emitted);
          },
          &counters);

      rs.candidates = counters.candidates;
      rs.cuts = counters.emitted;
      rs.enum_seconds = counters.seconds;
      stats.per_root.push_back(rs);
      stats.total_cuts += rs.cuts;
      stats.total_candidates += rs.candidates;
      stats.total_prune_seconds += rs.prune_seconds;
      stats.total_enum_seconds += rs.enum_seconds;
    }
  }
  return stats;
}

} // namespace linecut
