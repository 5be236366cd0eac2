#include "linecut/maxflow.hpp"

#include <algorithm>
#include <stdexcept>

namespace linecut {

FlowNet::FlowNet(const Cone& cone) {
  node_count_ = cone.node_count() + 2;
  s_ = cone.node_count();
  t_ = s_ + 1;
  out_.assign(node_count_, {});
  line_cap_.assign(cone.line_count(), Cap::Unit);
  line_arc_.resize(cone.line_count());

  auto add_arc = [&](std::uint32_t from, std::uint32_t to) {
    const std::uint32_t idx = static_cast<std::uint32_t>(arcs_.size());
    arcs_.push_back({to, 0});
    arcs_.push_back({from, 0});
    out_[from].push_back(idx);
    out_[to].push_back(idx + 1);
    return idx;
  };

  for (LineId l = 0; l < cone.line_count(); ++l)
    line_arc_[l] = add_arc(cone.lines[l].tail_local, cone.lines[l].head_local);
  aux_arcs_ = static_cast<std::uint32_t>(arcs_.size());
  for (NodeId input : cone.inputs) add_arc(s_, cone.local_index(input));
  add_arc(cone.root_local, t_);

  parent_arc_.assign(node_count_, -1);
  queue_.reserve(node_count_);
}

void FlowNet::assign_capacities(const std::vector<Cap>& per_line) {
  if (per_line.size() != line_cap_.size())
    throw std::invalid_argument("capacity map must cover every cone line");
  line_cap_ = per_line;
}

bool FlowNet::bfs_augment(int inf, int& pushed) {
  std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
  queue_.clear();
  queue_.push_back(s_);
  parent_arc_[s_] = -2;
  for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
    const std::uint32_t v = queue_[qi];
    for (std::uint32_t a : out_[v]) {
      const Arc& arc = arcs_[a];
      if (arc.cap <= 0 || parent_arc_[arc.to] != -1) continue;
      parent_arc_[arc.to] = static_cast<std::int32_t>(a);
      if (arc.to == t_) {
        int bottleneck = inf;
        for (std::uint32_t u = t_; u != s_;) {
          const std::uint32_t pa = static_cast<std::uint32_t>(parent_arc_[u]);
          bottleneck = std::min(bottleneck, arcs_[pa].cap);
          u = arcs_[pa ^ 1].to;
        }
        for (std::uint32_t u = t_; u != s_;) {
          const std::uint32_t pa = static_cast<std::uint32_t>(parent_arc_[u]);
          arcs_[pa].cap -= bottleneck;
          arcs_[pa ^ 1].cap += bottleneck;
          u = arcs_[pa ^ 1].to;
        }
        pushed = bottleneck;
        return true;
      }
      queue_.push_back(arc.to);
    }
  }
  return false;
}

std::optional<int> FlowNet::min_cut_value(int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  const int inf = bound + 2;

  for (LineId l = 0; l < line_cap_.size(); ++l) {
    arcs_[line_arc_[l]].cap = line_cap_[l] == Cap::Inf ? inf : 1;
    arcs_[line_arc_[l] ^ 1].cap = 0;
  }
  for (std::uint32_t a = aux_arcs_; a < arcs_.size(); a += 2) {
    arcs_[a].cap = inf;
    arcs_[a ^ 1].cap = 0;
  }

  int flow = 0;
  int pushed = 0;
  while (bfs_augment(inf, pushed)) {
    flow += pushed;
    if (flow > bound) return std::nullopt;
  }
  if (flow == 0)
    throw std::logic_error("flow network has no s-t path");
  return flow;
}

FlowNet build_flow_net(const Cone& cone, const std::vector<Cap>& capacity) {
  FlowNet net(cone);
  net.assign_capacities(capacity);
  return net;
}

std::optional<int> min_cut_value(FlowNet& net, int bound) { return net.min_cut_value(bound); }

} // namespace linecut
