#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "linecut/errors.hpp"
#include "linecut/ldg.hpp"
#include "linecut/oracle.hpp"

#include "helpers.hpp"

using namespace linecut;

namespace {

Dag long_chain(std::uint32_t nodes) {
  std::string text = "inputs: 0\n";
  for (std::uint32_t v = 0; v + 1 < nodes; ++v)
    text += std::to_string(v) + " " + std::to_string(v + 1) + "\n";
  return parse_edgelist(text);
}

std::vector<std::vector<LineId>> cut_lines(const std::vector<LineCut>& cuts) {
  std::vector<std::vector<LineId>> out;
  out.reserve(cuts.size());
  for (const auto& c : cuts) out.push_back(c.lines);
  return out;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("diamond path masks") {
  const Cone c = extract_cone(testutil::diamond(), 3);
  auto masks = detail::enumerate_path_masks(c);
  std::sort(masks.begin(), masks.end());
  // branch lines {0,2} and {1,3} as bitmasks
  CHECK(masks == std::vector<std::uint32_t>{0b0101, 0b1010});
}

TEST_CASE("brute cuts on the chain") {
  const Cone c = extract_cone(testutil::chain3(), 2);
  const auto cuts = brute_strong_cuts(c, 1);
  CHECK(cut_lines(cuts) == std::vector<std::vector<LineId>>{{0}, {1}});
  CHECK(cuts[0].root == 2);
  CHECK(brute_strong_cuts(c, 16).size() == 2);
}

TEST_CASE("brute cuts on the diamond") {
  const Cone c = extract_cone(testutil::diamond(), 3);
  CHECK(cut_lines(brute_strong_cuts(c, 2)) ==
        std::vector<std::vector<LineId>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(brute_strong_cuts(c, 1).empty());
}

TEST_CASE("brute mis basics") {
  UndirectedGraph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  CHECK(brute_mis(p3, 2) == std::vector<std::vector<std::uint32_t>>{{0, 2}, {1}});
  CHECK(brute_mis(p3, 1) == std::vector<std::vector<std::uint32_t>>{{1}});

  UndirectedGraph empty3(3);
  CHECK(brute_mis(empty3, 3) == std::vector<std::vector<std::uint32_t>>{{0, 1, 2}});
  CHECK(brute_mis(empty3, 2).empty()); // the only MIS is too big

  UndirectedGraph k2(2);
  k2.add_edge(0, 1);
  CHECK(brute_mis(k2, 1) == std::vector<std::vector<std::uint32_t>>{{0}, {1}});
}

TEST_CASE("brute min mis") {
  UndirectedGraph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  CHECK(brute_min_mis(p3, {1}) == 1);
  CHECK(brute_min_mis(p3, {0}) == 2);
  CHECK(brute_min_mis(p3, {}) == 1);
  CHECK_THROWS_AS(brute_min_mis(p3, {0, 1}), std::invalid_argument); // dependent
  CHECK_THROWS_AS(brute_min_mis(p3, {9}), std::out_of_range);

  const Cone c = extract_cone(testutil::diamond(), 3);
  const Ldg g = build_ldg(c);
  CHECK(brute_min_mis(g.adj, {0}) == 2);
  CHECK(brute_min_mis(g.adj, {0, 1}) == 2);
}

TEST_CASE("brute unidirectional node cuts") {
  const Cone chain = extract_cone(testutil::chain3(), 2);
  auto chain_cuts = brute_unidirectional_node_cuts(chain, 2);
  REQUIRE(chain_cuts.size() == 2);
  CHECK(chain_cuts[0].nodes == std::vector<NodeId>{0});
  CHECK(chain_cuts[1].nodes == std::vector<NodeId>{1});

  const Cone diamond = extract_cone(testutil::diamond(), 3);
  auto diamond_cuts = brute_unidirectional_node_cuts(diamond, 2);
  REQUIRE(diamond_cuts.size() == 4);
  CHECK(diamond_cuts[0].nodes == std::vector<NodeId>{0});
  CHECK(diamond_cuts[1].nodes == std::vector<NodeId>{0, 1});
  CHECK(diamond_cuts[2].nodes == std::vector<NodeId>{0, 2});
  CHECK(diamond_cuts[3].nodes == std::vector<NodeId>{1, 2});
  // k bounds the crossing-line count, not the node count
  CHECK(brute_unidirectional_node_cuts(diamond, 1).empty());

  const Cone and2 = extract_cone(parse_edgelist("inputs: 0 1\n0 2\n1 2\n"), 2);
  auto and_cuts = brute_unidirectional_node_cuts(and2, 2);
  REQUIRE(and_cuts.size() == 1);
  CHECK(and_cuts[0].nodes == std::vector<NodeId>{0, 1});
}

TEST_CASE("oracle guards") {
  const Dag big = long_chain(22); // 21 lines
  const Cone c = extract_cone(big, 21);
  CHECK_THROWS_AS(brute_strong_cuts(c, 2), guard_error);
  CHECK_THROWS_AS(detail::enumerate_path_masks(c), guard_error);
  CHECK_THROWS_AS(brute_mis(UndirectedGraph(21), 2), guard_error);
  CHECK_THROWS_AS(brute_min_mis(UndirectedGraph(19), {}), guard_error);
  const Dag mid = long_chain(15); // 15 nodes, 14 lines
  const Cone m = extract_cone(mid, 14);
  CHECK_THROWS_AS(brute_unidirectional_node_cuts(m, 2), guard_error);
  CHECK(brute_strong_cuts(m, 1).size() == 14); // line guard still satisfied
}

TEST_CASE("oracle-level equivalences on random cones") {
  for (std::uint64_t seed = 100; seed <= 111; ++seed) {
    const Dag d = testutil::small_random_dag(seed, 12, 3);
    for (NodeId root : all_roots(d)) {
      const Cone cone = extract_cone(d, root);
      if (cone.line_count() > 18 || cone.node_count() > 14) continue;
      const Ldg g = build_ldg(cone);
      for (int k : {2, 3}) {
        const auto cuts = brute_strong_cuts(cone, k);
        // cut family == MIS family of the dependency graph
        CHECK(cut_lines(cuts) == brute_mis(g.adj, k));
        // node-cut view == unidirectional bipartition scan
        std::vector<NodeCut> mapped;
        for (const auto& cut : cuts) mapped.push_back(line_cut_to_node_cut(cone, cut));
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        CHECK(mapped == brute_unidirectional_node_cuts(cone, k));
        // every oracle cut passes the validator
        for (const auto& cut : cuts) CHECK(is_strong_line_cut(cone, cut.lines).ok);
      }
    }
  }
}

} // TEST_SUITE
