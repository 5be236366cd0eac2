#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "linecut/bitmatrix.hpp"
#include "linecut/cone.hpp"
#include "linecut/dag.hpp"
#include "linecut/ldg.hpp"
#include "linecut/mis_enum.hpp"
#include "linecut/netlist_io.hpp"
#include "linecut/prune.hpp"
#include "linecut/random_dag.hpp"

namespace testutil {

// 0 -> {1, 2} -> 3; line ids 0:(0,1) 1:(0,2) 2:(1,3) 3:(2,3)
inline linecut::Dag diamond() {
  return linecut::parse_edgelist("inputs: 0\n0 1\n0 2\n1 3\n2 3\n");
}

// 0 -> 1 -> 2; line ids 0:(0,1) 1:(1,2)
inline linecut::Dag chain3() {
  return linecut::parse_edgelist("inputs: 0\n0 1\n1 2\n");
}

// Two inputs into node 5: a three-line strand 0->2->3->5 next to 1->4->5
// plus the direct shortcut 1->5. Its dependency graph is a triangle on the
// strand lines {0,1,2}, the edge {3,4}, and the isolated shortcut 5; every
// maximal independent set has exactly three members.
// line ids 0:(0,2) 1:(2,3) 2:(3,5) 3:(1,4) 4:(4,5) 5:(1,5)
inline linecut::Dag two_strand() {
  return linecut::parse_edgelist("inputs: 0 1\n0 2\n2 3\n3 5\n1 4\n4 5\n1 5\n");
}

// Reconvergent ladder: inputs 0,1; 0->2, 1->3, 0->4, the pairs {2,3}
// cross into 5 and 6, those reconverge through 7 into sink 8, and 4 bypasses
// straight to 8. line ids
// 0:(0,2) 1:(1,3) 2:(0,4) 3:(2,5) 4:(3,5) 5:(2,6) 6:(3,6) 7:(5,7) 8:(6,7)
// 9:(7,8) 10:(4,8)
inline linecut::Dag reconverge() {
  return linecut::parse_edgelist(
      "inputs: 0 1\n"
      "0 2\n1 3\n0 4\n"
      "2 5\n3 5\n2 6\n3 6\n"
      "5 7\n6 7\n"
      "7 8\n4 8\n");
}

// Single input 0 fanning into 1 and 2 with a cross line 1->2, both into
// sink 3. line ids 0:(0,1) 1:(0,2) 2:(1,2) 3:(1,3) 4:(2,3)
inline linecut::Dag crossover() {
  return linecut::parse_edgelist("inputs: 0\n0 1\n0 2\n1 2\n1 3\n2 3\n");
}

inline linecut::PrunedLdg identity_pruned(const linecut::Ldg& ldg) {
  linecut::PrunedLdg p;
  p.base = &ldg;
  p.deleted.assign(ldg.vertex_count(), 0);
  p.effective = ldg.adj.matrix();
  return p;
}

inline std::vector<std::vector<linecut::LineId>> collect_mis(
    const linecut::PrunedLdg& pruned, int k, linecut::EnumCounters* counters = nullptr) {
  std::vector<std::vector<linecut::LineId>> out;
  linecut::enumerate_mis(
      pruned, k, [&](const linecut::MisSet& m) { out.push_back(m.members); }, counters);
  return out;
}

// standalone graph dressed up as an Ldg (empty orientation) for enumerator tests
struct GraphLdg {
  linecut::Ldg ldg;

  explicit GraphLdg(linecut::UndirectedGraph g) {
    ldg.precedes = linecut::BitMatrix(g.vertex_count());
    ldg.adj = std::move(g);
  }
};

inline linecut::UndirectedGraph random_graph(std::uint32_t n, int edge_percent,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  linecut::UndirectedGraph g(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (rng() % 100 < static_cast<std::uint64_t>(edge_percent)) g.add_edge(u, v);
  return g;
}

inline linecut::Dag small_random_dag(std::uint64_t seed, std::uint32_t nodes = 10,
                                     std::uint32_t inputs = 3) {
  linecut::RandomDagParams params;
  params.nodes = nodes;
  params.inputs = inputs;
  params.two_fanin_prob = 0.8;
  params.seed = seed;
  return linecut::random_dag(params);
}

} // namespace testutil
