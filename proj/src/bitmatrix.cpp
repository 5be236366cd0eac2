#include "linecut/bitmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace linecut {

void UndirectedGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("vertex out of range");
  if (adj_.get(u, v)) return;
  adj_.set(u, v);
  adj_.set(v, u);
  nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
  nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
  ++edge_count_;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> UndirectedGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count_);
  for (std::uint32_t u = 0; u < vertex_count(); ++u)
    for (std::uint32_t v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

} // namespace linecut
