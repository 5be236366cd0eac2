#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linecut/cone.hpp"

namespace linecut {

enum class Cap : std::uint8_t { Unit, Inf };

/// s-t flow network over a cone: one arc per cone line with capacity
/// 1 or infinity, plus infinite arcs s->input and root->t. Infinity is
/// represented as bound+2, which no finite cut of interest can reach.
/// The arc structure is built once; capacities are reassigned per query so
/// one instance serves many Min-MIS calls on the same cone.
class FlowNet {
public:
  FlowNet() = default;
  explicit FlowNet(const Cone& cone); // all lines start at Unit

  void assign_capacities(const std::vector<Cap>& per_line);
  void set_capacity(LineId line, Cap cap) { line_cap_[line] = cap; }
  void reset_capacities() { line_cap_.assign(line_cap_.size(), Cap::Unit); }

  /// Max-flow value lambda if lambda <= bound, std::nullopt otherwise
  /// (AboveBound). Shortest-augmenting-path search; stops as soon as the
  /// accumulated flow exceeds bound. Throws std::logic_error if t is
  /// unreachable from s before any flow is pushed (a broken cone).
  std::optional<int> min_cut_value(int bound);

  std::uint32_t vertex_count() const { return node_count_; }
  std::uint32_t line_arc_count() const { return static_cast<std::uint32_t>(line_cap_.size()); }
  Cap line_capacity(LineId line) const { return line_cap_.at(line); }

private:
  struct Arc {
    std::uint32_t to;
    int cap; // residual
  };

  bool bfs_augment(int inf, int& pushed);

  // vertices: cone-local node ids, then s = node_count_ - 2, t = node_count_ - 1
  std::uint32_t node_count_ = 0;
  std::uint32_t s_ = 0, t_ = 0;
  std::vector<Arc> arcs_;                    // paired: arc i reverses arc i^1
  std::vector<std::vector<std::uint32_t>> out_; // arc indices per vertex
  std::vector<std::uint32_t> line_arc_;      // forward arc index per line
  std::vector<Cap> line_cap_;
  std::uint32_t aux_arcs_ = 0; // first aux arc index == 2 * line count

  // BFS scratch
  std::vector<std::int32_t> parent_arc_;
  std::vector<std::uint32_t> queue_;
};

/// Capacity map must cover every cone line.
FlowNet build_flow_net(const Cone& cone, const std::vector<Cap>& capacity);

std::optional<int> min_cut_value(FlowNet& net, int bound);

} // namespace linecut
