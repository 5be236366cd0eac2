#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linecut {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
using LineId = std::uint32_t; // cone-local edge index

enum class NodeKind : std::uint8_t { PrimaryInput, Gate };

struct NodeRecord {
  NodeId id = 0;
  NodeKind kind = NodeKind::Gate;
  std::optional<std::string> label;

  bool operator==(const NodeRecord&) const = default;
};

/// A circuit line. `complemented` is carried as metadata only; the
/// structural algorithms never look at it.
struct EdgeRecord {
  EdgeId id = 0;
  NodeId tail = 0;
  NodeId head = 0;
  bool complemented = false;

  bool operator==(const EdgeRecord&) const = default;
};

/*! \brief Immutable subject graph.
 *
 * Node and edge ids are dense, 0-based and assigned in input order, so two
 * parses of the same bytes produce identical ids. Parallel (tail, head)
 * pairs are merged by the parsers before construction; `from_edges` rejects
 * them. Once built, a Dag is safe to share read-only across threads.
 */
class Dag {
public:
  Dag() = default;

  /// Validates density, acyclicity and zero-fanin inputs; computes
  /// adjacency and the deterministic topological order.
  static Dag from_edges(std::vector<NodeRecord> nodes, std::vector<EdgeRecord> edges,
                        std::vector<NodeId> outputs = {}, std::uint32_t merged_parallel_edges = 0);

  std::uint32_t node_count() const { return static_cast<std::uint32_t>(nodes_.size()); }
  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges_.size()); }

  const NodeRecord& node(NodeId id) const { return nodes_.at(id); }
  const EdgeRecord& edge(EdgeId id) const { return edges_.at(id); }
  const std::vector<NodeRecord>& nodes() const { return nodes_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }

  bool is_gate(NodeId id) const { return nodes_.at(id).kind == NodeKind::Gate; }

  /// Edge ids whose head is `id`, ascending.
  const std::vector<EdgeId>& fanins(NodeId id) const { return fanin_.at(id); }
  /// Edge ids whose tail is `id`, ascending.
  const std::vector<EdgeId>& fanouts(NodeId id) const { return fanout_.at(id); }

  const std::vector<NodeId>& topo() const { return topo_; }

  /// Declared root candidates (AIGER output literals), in file order.
  const std::vector<NodeId>& outputs() const { return outputs_; }

  std::uint32_t merged_parallel_edges() const { return merged_parallel_edges_; }

  /// Maximum fanin + fanout over all nodes.
  std::uint32_t max_degree() const;

  std::uint32_t primary_input_count() const;

  bool operator==(const Dag& other) const;

private:
  std::vector<NodeRecord> nodes_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<EdgeId>> fanin_;
  std::vector<std::vector<EdgeId>> fanout_;
  std::vector<NodeId> topo_;
  std::vector<NodeId> outputs_;
  std::uint32_t merged_parallel_edges_ = 0;
};

/// Deterministic topological order: Kahn's method with smallest-id-first
/// tie-breaking. The Dag is acyclic by construction, so this never fails.
std::vector<NodeId> topological_order(const Dag& dag);

namespace detail {
/// Kahn over raw edges; empty optional when a cycle remains.
std::optional<std::vector<NodeId>> kahn_order(std::uint32_t node_count,
                                              const std::vector<EdgeRecord>& edges);
} // namespace detail

} // namespace linecut
