#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linecut/dag.hpp"

namespace linecut {

/// A cone line: one Dag edge internal to the cone. LineId is the index into
/// Cone::lines; lines are sorted by dag_edge, so LineId order is stable.
struct ConeLine {
  EdgeId dag_edge;
  NodeId tail;
  NodeId head;
  std::uint32_t tail_local;
  std::uint32_t head_local;

  bool operator==(const ConeLine&) const = default;
};

/// Transitive fanin cone of one root. Invariants: every node reaches root
/// inside the cone; every line lies on some input-to-root path; inputs have
/// no fanin lines inside the cone; root has no fanout lines inside it.
struct Cone {
  NodeId root = 0;
  std::uint32_t root_local = 0;
  std::vector<NodeId> nodes;   // sorted ascending Dag ids; local index = position
  std::vector<ConeLine> lines; // sorted by dag_edge
  std::vector<NodeId> inputs;  // sorted; boundary nodes (PIs and truncation frontier)
  std::vector<char> is_input;  // by local index

  // per local node, incident line ids ascending
  std::vector<std::vector<LineId>> lines_in;
  std::vector<std::vector<LineId>> lines_out;

  std::vector<std::uint32_t> topo_local; // local indices, topological

  std::uint32_t node_count() const { return static_cast<std::uint32_t>(nodes.size()); }
  std::uint32_t line_count() const { return static_cast<std::uint32_t>(lines.size()); }

  /// Local index of a Dag node id; the node must be in the cone.
  std::uint32_t local_index(NodeId id) const;
  bool contains(NodeId id) const;
};

/// Reverse BFS from root, level by level, ascending ids within a level.
/// A node's fanins are added all-or-nothing; the first node whose fanins
/// would push the cone past size_limit stops expansion globally and every
/// unexpanded node becomes a cone input. The root is always expanded, so
/// the trivial root-plus-fanins cone is returned even under a tiny limit.
/// Throws guard_error when root is a PrimaryInput.
Cone extract_cone(const Dag& dag, NodeId root,
                  std::optional<std::uint32_t> size_limit = std::nullopt);

/// All Gate node ids, ascending.
std::vector<NodeId> all_roots(const Dag& dag);

} // namespace linecut
