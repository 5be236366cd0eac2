#include "linecut/cone.hpp"

#include <algorithm>
#include <stdexcept>

#include "linecut/errors.hpp"

namespace linecut {

std::uint32_t Cone::local_index(NodeId id) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
  if (it == nodes.end() || *it != id) throw std::out_of_range("node not in cone");
  return static_cast<std::uint32_t>(it - nodes.begin());
}

bool Cone::contains(NodeId id) const {
  return std::binary_search(nodes.begin(), nodes.end(), id);
}

Cone extract_cone(const Dag& dag, NodeId root, std::optional<std::uint32_t> size_limit) {
  if (root >= dag.node_count()) throw std::out_of_range("root out of range");
  if (!dag.is_gate(root)) throw guard_error("cone undefined for inputs");

  std::vector<char> in_cone(dag.node_count(), 0);
  std::vector<char> expanded(dag.node_count(), 0);
  in_cone[root] = 1;
  std::uint32_t cone_size = 1;

  // level-order reverse BFS; within a level nodes expand in ascending id
  // order; the first node whose fanins would breach the limit stops all
  // further expansion. The root itself always expands (the trivial cone is
  // valid under any limit).
  std::vector<NodeId> level{root};
  bool stopped = false;
  while (!level.empty() && !stopped) {
    std::vector<NodeId> next;
    for (NodeId u : level) {
      if (dag.node(u).kind == NodeKind::PrimaryInput) continue;
      std::uint32_t fresh = 0;
      for (EdgeId e : dag.fanins(u))
        if (!in_cone[dag.edge(e).tail]) ++fresh;
      if (u != root && size_limit && cone_size + fresh > *size_limit) {
        stopped = true; // u and everything after it become cone inputs
        break;
      }
      expanded[u] = 1;
      for (EdgeId e : dag.fanins(u)) {
        const NodeId tail = dag.edge(e).tail;
        if (!in_cone[tail]) {
          in_cone[tail] = 1;
          ++cone_size;
          next.push_back(tail);
        }
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }

  Cone cone;
  cone.root = root;
  for (NodeId v = 0; v < dag.node_count(); ++v)
    if (in_cone[v]) cone.nodes.push_back(v);
  cone.root_local = cone.local_index(root);

  cone.is_input.assign(cone.nodes.size(), 0);
  for (std::uint32_t i = 0; i < cone.nodes.size(); ++i) {
    if (!expanded[cone.nodes[i]]) {
      cone.is_input[i] = 1;
      cone.inputs.push_back(cone.nodes[i]);
    }
  }

  // cone lines = all Dag fanin edges of expanded nodes; their tails are in
  // the cone by construction, so every line sits on an input-to-root path
  cone.lines_in.assign(cone.nodes.size(), {});
  cone.lines_out.assign(cone.nodes.size(), {});
  for (const auto& e : dag.edges()) {
    if (!in_cone[e.head] || !expanded[e.head]) continue;
    ConeLine line;
    line.dag_edge = e.id;
    line.tail = e.tail;
    line.head = e.head;
    line.tail_local = cone.local_index(e.tail);
    line.head_local = cone.local_index(e.head);
    const LineId id = static_cast<LineId>(cone.lines.size());
    cone.lines.push_back(line);
    cone.lines_out[line.tail_local].push_back(id);
    cone.lines_in[line.head_local].push_back(id);
  }

  // topological order of local indices, via the Dag's global order
  std::vector<std::uint32_t> pos(dag.node_count());
  const auto& topo = dag.topo();
  for (std::uint32_t i = 0; i < topo.size(); ++i) pos[topo[i]] = i;
  cone.topo_local.resize(cone.nodes.size());
  for (std::uint32_t i = 0; i < cone.nodes.size(); ++i) cone.topo_local[i] = i;
  std::sort(cone.topo_local.begin(), cone.topo_local.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              return pos[cone.nodes[a]] < pos[cone.nodes[b]];
            });
  return cone;
}

std::vector<NodeId> all_roots(const Dag& dag) {
  std::vector<NodeId> roots;
  for (const auto& n : dag.nodes())
    if (n.kind == NodeKind::Gate) roots.push_back(n.id);
  return roots;
}

} // namespace linecut
