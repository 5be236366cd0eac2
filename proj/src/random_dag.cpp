#include "linecut/random_dag.hpp"

#include <random>
#include <stdexcept>

namespace linecut {

Dag random_dag(const RandomDagParams& params) {
  if (params.inputs == 0) throw std::invalid_argument("need at least one input");
  if (params.nodes < params.inputs) throw std::invalid_argument("nodes < inputs");
  if (params.two_fanin_prob < 0.0 || params.two_fanin_prob > 1.0)
    throw std::invalid_argument("two_fanin_prob out of [0, 1]");

  std::mt19937_64 rng(params.seed);
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(params.two_fanin_prob * 1'000'000.0);

  std::vector<NodeRecord> nodes;
  nodes.reserve(params.nodes);
  for (NodeId v = 0; v < params.inputs; ++v)
    nodes.push_back({v, NodeKind::PrimaryInput, std::nullopt});
  for (NodeId v = params.inputs; v < params.nodes; ++v)
    nodes.push_back({v, NodeKind::Gate, std::nullopt});

  std::vector<EdgeRecord> edges;
  for (NodeId g = params.inputs; g < params.nodes; ++g) {
    const bool two = g >= 2 && (rng() % 1'000'000) < threshold;
    const NodeId t1 = static_cast<NodeId>(rng() % g);
    edges.push_back({static_cast<EdgeId>(edges.size()), t1, g, false});
    if (two) {
      NodeId t2 = static_cast<NodeId>(rng() % (g - 1));
      if (t2 >= t1) ++t2;
      edges.push_back({static_cast<EdgeId>(edges.size()), t2, g, false});
    }
  }
  return Dag::from_edges(std::move(nodes), std::move(edges));
}

} // namespace linecut
