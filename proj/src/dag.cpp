#include "linecut/dag.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "linecut/errors.hpp"

namespace linecut {

namespace detail {

std::optional<std::vector<NodeId>> kahn_order(std::uint32_t node_count,
                                              const std::vector<EdgeRecord>& edges) {
  std::vector<std::uint32_t> indegree(node_count, 0);
  std::vector<std::vector<NodeId>> succ(node_count);
  for (const auto& e : edges) {
    indegree[e.head]++;
    succ[e.tail].push_back(e.head);
  }

  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId v = 0; v < node_count; ++v)
    if (indegree[v] == 0) ready.push(v);

  std::vector<NodeId> order;
  order.reserve(node_count);
  while (!ready.empty()) {
    NodeId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (NodeId w : succ[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (order.size() != node_count) return std::nullopt;
  return order;
}

} // namespace detail

Dag Dag::from_edges(std::vector<NodeRecord> nodes, std::vector<EdgeRecord> edges,
                    std::vector<NodeId> outputs, std::uint32_t merged_parallel_edges) {
  const auto n = static_cast<std::uint32_t>(nodes.size());
  for (std::uint32_t i = 0; i < n; ++i)
    if (nodes[i].id != i) throw std::invalid_argument("node ids must be dense and 0-based");

  std::set<std::pair<NodeId, NodeId>> seen;
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.id != i) throw std::invalid_argument("edge ids must be dense and 0-based");
    if (e.tail >= n || e.head >= n) throw std::invalid_argument("edge endpoint out of range");
    if (!seen.insert({e.tail, e.head}).second)
      throw std::invalid_argument("duplicate (tail, head) pair; merge parallel edges first");
  }
  for (NodeId v : outputs)
    if (v >= n) throw std::invalid_argument("output node out of range");

  Dag dag;
  dag.nodes_ = std::move(nodes);
  dag.edges_ = std::move(edges);
  dag.outputs_ = std::move(outputs);
  dag.merged_parallel_edges_ = merged_parallel_edges;

  dag.fanin_.assign(n, {});
  dag.fanout_.assign(n, {});
  for (const auto& e : dag.edges_) {
    dag.fanin_[e.head].push_back(e.id);
    dag.fanout_[e.tail].push_back(e.id);
  }

  for (NodeId v = 0; v < n; ++v) {
    const bool has_fanin = !dag.fanin_[v].empty();
    if (dag.nodes_[v].kind == NodeKind::PrimaryInput && has_fanin)
      throw std::invalid_argument("primary input has fanins");
    if (dag.nodes_[v].kind == NodeKind::Gate && !has_fanin)
      throw std::invalid_argument("gate node has no fanins");
  }

  auto order = detail::kahn_order(n, dag.edges_);
  if (!order) throw std::invalid_argument("graph is cyclic");
  dag.topo_ = std::move(*order);
  return dag;
}

std::uint32_t Dag::max_degree() const {
  std::uint32_t d = 0;
  for (NodeId v = 0; v < node_count(); ++v)
    d = std::max<std::uint32_t>(d, static_cast<std::uint32_t>(fanin_[v].size() + fanout_[v].size()));
  return d;
}

std::uint32_t Dag::primary_input_count() const {
  std::uint32_t c = 0;
  for (const auto& rec : nodes_)
    if (rec.kind == NodeKind::PrimaryInput) ++c;
  return c;
}

bool Dag::operator==(const Dag& other) const {
  return nodes_ == other.nodes_ && edges_ == other.edges_ && outputs_ == other.outputs_ &&
         merged_parallel_edges_ == other.merged_parallel_edges_ && topo_ == other.topo_;
}

std::vector<NodeId> topological_order(const Dag& dag) { return dag.topo(); }

} // namespace linecut
