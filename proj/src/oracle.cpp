#include "linecut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "linecut/errors.hpp"

namespace linecut {

// The checks below are deliberately phrased over explicit path or subset
// enumeration so they share no reasoning with the pipeline implementations
// they vouch for.

namespace detail {

std::vector<std::uint32_t> enumerate_path_masks(const Cone& cone) {
  if (cone.line_count() > 20) throw guard_error("oracle guard: cone has more than 20 lines");
  std::vector<std::uint32_t> masks;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack; // node, mask
  for (std::uint32_t i = 0; i < cone.node_count(); ++i) {
    if (!cone.is_input[i]) continue;
    stack.emplace_back(i, 0u);
    while (!stack.empty()) {
      auto [v, mask] = stack.back();
      stack.pop_back();
      if (v == cone.root_local) {
        masks.push_back(mask);
        continue;
      }
      for (LineId l : cone.lines_out[v])
        stack.emplace_back(cone.lines[l].head_local, mask | (1u << l));
    }
  }
  return masks;
}

} // namespace detail

namespace {

// All size-<=k subsets of {start..n-1} appended to `chosen`, in
// lexicographic order of the element list; `emit` sees each subset once.
template <typename Emit>
void for_each_subset(std::uint32_t n, int k, std::uint32_t start,
                     std::vector<std::uint32_t>& chosen, const Emit& emit) {
  if (!chosen.empty()) emit(chosen);
  if (static_cast<int>(chosen.size()) == k) return;
  for (std::uint32_t v = start; v < n; ++v) {
    chosen.push_back(v);
    for_each_subset(n, k, v + 1, chosen, emit);
    chosen.pop_back();
  }
}

std::uint32_t to_mask(const std::vector<std::uint32_t>& vs) {
  std::uint32_t m = 0;
  for (std::uint32_t v : vs) m |= 1u << v;
  return m;
}

} // namespace

std::vector<LineCut> brute_strong_cuts(const Cone& cone, int k) {
  if (cone.line_count() > 20) throw guard_error("oracle guard: cone has more than 20 lines");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto paths = detail::enumerate_path_masks(cone);

  std::vector<LineCut> cuts;
  std::vector<std::uint32_t> chosen;
  for_each_subset(cone.line_count(), k, 0, chosen, [&](const std::vector<std::uint32_t>& set) {
    const std::uint32_t mask = to_mask(set);
    // disconnecting and strong: every input-to-root path meets the set in
    // exactly one line; minimal: every member owns a path meeting it alone
    for (std::uint32_t p : paths)
      if (std::popcount(p & mask) != 1) return;
    for (std::uint32_t member : set) {
      bool owns = false;
      for (std::uint32_t p : paths)
        if ((p & mask) == (1u << member)) {
          owns = true;
          break;
        }
      if (!owns) return;
    }
    LineCut cut;
    cut.root = cone.root;
    cut.lines.assign(set.begin(), set.end());
    cuts.push_back(std::move(cut));
  });
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

std::vector<std::vector<std::uint32_t>> brute_mis(const UndirectedGraph& graph, int k) {
  const std::uint32_t n = graph.vertex_count();
  if (n > 20) throw guard_error("oracle guard: graph has more than 20 vertices");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : graph.edges()) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> chosen;
  for_each_subset(n, k, 0, chosen, [&](const std::vector<std::uint32_t>& set) {
    const std::uint32_t mask = to_mask(set);
    for (std::uint32_t v : set)
      if (nbr[v] & mask) return; // not independent
    for (std::uint32_t v = 0; v < n; ++v)
      if (!((mask >> v) & 1) && !(nbr[v] & mask)) return; // extendable
    out.push_back(set);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> brute_min_mis(const UndirectedGraph& graph,
                                 const std::vector<std::uint32_t>& required) {
  const std::uint32_t n = graph.vertex_count();
  if (n > 18) throw guard_error("oracle guard: graph has more than 18 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : graph.edges()) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }
  const std::uint32_t req_mask = to_mask(required);
  for (std::uint32_t v : required) {
    if (v >= n) throw std::out_of_range("required vertex out of range");
    if (nbr[v] & req_mask) throw std::invalid_argument("required set is dependent");
  }

  std::optional<int> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask & req_mask) != req_mask) continue;
    if (best && std::popcount(mask) >= *best) continue;
    bool ok = true;
    for (std::uint32_t v = 0; v < n && ok; ++v) {
      if ((mask >> v) & 1)
        ok = !(nbr[v] & mask); // independent
      else
        ok = (nbr[v] & mask) != 0; // maximal
    }
    if (ok) best = std::popcount(mask);
  }
  return best;
}

std::vector<NodeCut> brute_unidirectional_node_cuts(const Cone& cone, int k) {
  if (cone.node_count() > 14) throw guard_error("oracle guard: cone has more than 14 nodes");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const std::uint32_t n = cone.node_count();

  std::vector<std::uint32_t> free_nodes; // local ids assignable to either side
  for (std::uint32_t i = 0; i < n; ++i)
    if (!cone.is_input[i] && i != cone.root_local) free_nodes.push_back(i);

  std::set<std::vector<NodeId>> node_cuts;
  const std::uint32_t combos = 1u << free_nodes.size();
  std::vector<char> in_t(n, 0);
  for (std::uint32_t bits = 0; bits < combos; ++bits) {
    std::fill(in_t.begin(), in_t.end(), 0);
    in_t[cone.root_local] = 1;
    for (std::size_t i = 0; i < free_nodes.size(); ++i)
      if ((bits >> i) & 1) in_t[free_nodes[i]] = 1;

    bool unidirectional = true;
    std::uint32_t crossing = 0;
    std::vector<NodeId> tails;
    for (const auto& line : cone.lines) {
      const bool ts = in_t[line.tail_local], hs = in_t[line.head_local];
      if (ts && !hs) {
        unidirectional = false;
        break;
      }
      if (!ts && hs) {
        ++crossing;
        tails.push_back(line.tail);
      }
    }
    if (!unidirectional || crossing > static_cast<std::uint32_t>(k)) continue;
    std::sort(tails.begin(), tails.end());
    tails.erase(std::unique(tails.begin(), tails.end()), tails.end());
    node_cuts.insert(std::move(tails));
  }

  std::vector<NodeCut> out;
  out.reserve(node_cuts.size());
  for (const auto& nodes : node_cuts) out.push_back({cone.root, nodes});
  return out;
}

} // namespace linecut
