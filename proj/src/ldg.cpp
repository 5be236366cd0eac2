#include "linecut/ldg.hpp"

#include <sstream>

namespace linecut {

Reachability::Reachability(const Cone& cone) : m_(cone.node_count()) {
  // sinks first: row[v] = {v} | union of row[head] over lines leaving v
  for (auto it = cone.topo_local.rbegin(); it != cone.topo_local.rend(); ++it) {
    const std::uint32_t v = *it;
    m_.set(v, v);
    for (LineId l : cone.lines_out[v]) m_.or_row(v, cone.lines[l].head_local);
  }
}

namespace detail {

Ldg build_ldg(const Cone& cone, bool zero_length) {
  const Reachability reach(cone);
  const std::uint32_t n = cone.line_count();
  Ldg ldg;
  ldg.adj = UndirectedGraph(n);
  ldg.precedes = BitMatrix(n);

  auto precedes = [&](LineId a, LineId b) {
    const std::uint32_t from = cone.lines[a].head_local;
    const std::uint32_t to = cone.lines[b].tail_local;
    if (!zero_length && from == to) return false;
    return reach.reaches(from, to);
  };

  for (LineId a = 0; a < n; ++a) {
    for (LineId b = a + 1; b < n; ++b) {
      const bool ab = precedes(a, b);
      const bool ba = precedes(b, a);
      if (ab) ldg.precedes.set(a, b);
      if (ba) ldg.precedes.set(b, a);
      if (ab || ba) ldg.adj.add_edge(a, b);
    }
  }
  return ldg;
}

} // namespace detail

Ldg build_ldg(const Cone& cone) { return detail::build_ldg(cone, true); }

std::string dump_edges(const Ldg& ldg) {
  std::ostringstream out;
  for (auto [u, v] : ldg.adj.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

} // namespace linecut
