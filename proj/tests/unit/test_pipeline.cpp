#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "linecut/errors.hpp"
#include "linecut/oracle.hpp"
#include "linecut/pipeline.hpp"

#include "helpers.hpp"

using namespace linecut;

namespace {

std::string render(const EmittedCut& cut) {
  std::ostringstream out;
  out << cut.line_cut.root << ':';
  for (LineId l : cut.line_cut.lines) out << ' ' << l;
  out << " /";
  for (NodeId v : cut.node_cut.nodes) out << ' ' << v;
  out << '\n';
  return out.str();
}

std::string run_to_string(const Dag& dag, const std::vector<NodeId>& roots,
                          const PipelineOptions& options, EnumStats* stats = nullptr) {
  std::string out;
  EnumStats s = enumerate_cuts(dag, roots, options,
                               [&](const EmittedCut& cut) { out += render(cut); });
  if (stats) *stats = std::move(s);
  return out;
}

} // namespace

TEST_SUITE("pipeline") {

TEST_CASE("diamond cuts for all roots") {
  const Dag d = testutil::diamond();
  PipelineOptions options;
  options.k = 2;
  std::vector<LineCut> cuts;
  std::vector<NodeCut> node_cuts;
  const EnumStats stats = enumerate_cuts(d, {1, 2, 3}, options, [&](const EmittedCut& c) {
    cuts.push_back(c.line_cut);
    node_cuts.push_back(c.node_cut);
    REQUIRE(c.cone != nullptr);
    CHECK(c.cone->root == c.line_cut.root);
  });
  REQUIRE(cuts.size() == 6);
  CHECK(cuts[0] == LineCut{1, {0}});
  CHECK(cuts[1] == LineCut{2, {0}});
  CHECK(cuts[2] == LineCut{3, {0, 1}});
  CHECK(cuts[3] == LineCut{3, {0, 3}});
  CHECK(cuts[4] == LineCut{3, {1, 2}});
  CHECK(cuts[5] == LineCut{3, {2, 3}});
  CHECK(node_cuts[2].nodes == std::vector<NodeId>{0});
  CHECK(node_cuts[3].nodes == std::vector<NodeId>{0, 2});

  CHECK(stats.total_cuts == 6);
  REQUIRE(stats.per_root.size() == 3);
  CHECK(stats.per_root[0].cuts == 1);
  CHECK(stats.per_root[1].cuts == 1);
  CHECK(stats.per_root[2].cuts == 4);
  CHECK(stats.per_root[2].cone_lines == 4);
  CHECK(stats.per_root[2].ldg_vertices == 4);
  CHECK(stats.per_root[2].ldg_vertices_after == 4);
  CHECK(stats.node_count == 4);
  CHECK(stats.input_count == 1);
}

TEST_CASE("k=1 prunes the diamond to nothing") {
  const Dag d = testutil::diamond();
  PipelineOptions options;
  options.k = 1;
  EnumStats stats;
  CHECK(run_to_string(d, {3}, options, &stats).empty());
  CHECK(stats.total_cuts == 0);
  CHECK(stats.per_root[0].ldg_vertices == 4);
  CHECK(stats.per_root[0].ldg_vertices_after == 0);
}

TEST_CASE("cone limit changes the enumerated universe") {
  const Dag d = testutil::chain3();
  PipelineOptions options;
  options.k = 2;
  std::vector<LineCut> cuts;
  enumerate_cuts(d, {2}, options, [&](const EmittedCut& c) { cuts.push_back(c.line_cut); });
  CHECK(cuts.size() == 2); // unlimited cone has two lines

  options.cone_limit = 2;
  cuts.clear();
  std::vector<NodeCut> node_cuts;
  enumerate_cuts(d, {2}, options, [&](const EmittedCut& c) {
    cuts.push_back(c.line_cut);
    node_cuts.push_back(c.node_cut);
  });
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0] == LineCut{2, {0}}); // the truncated cone's only line, (1, 2)
  CHECK(node_cuts[0].nodes == std::vector<NodeId>{1});
}

TEST_CASE("stats aggregates are sums") {
  const Dag d = testutil::small_random_dag(11, 30, 5);
  PipelineOptions options;
  options.k = 3;
  EnumStats stats;
  run_to_string(d, all_roots(d), options, &stats);
  CHECK(stats.per_root.size() == all_roots(d).size());
  std::uint64_t cuts = 0, candidates = 0;
  for (const auto& r : stats.per_root) {
    cuts += r.cuts;
    candidates += r.candidates;
    CHECK(r.candidates >= r.cuts);
    CHECK(r.ldg_vertices == r.cone_lines);
    CHECK(r.ldg_vertices_after <= r.ldg_vertices);
  }
  CHECK(stats.total_cuts == cuts);
  CHECK(stats.total_candidates == candidates);
}

TEST_CASE("output is identical for any worker count") {
  const Dag d = testutil::small_random_dag(12, 60, 8);
  PipelineOptions options;
  options.k = 3;
  options.jobs = 1;
  EnumStats s1;
  const std::string serial = run_to_string(d, all_roots(d), options, &s1);
  for (int jobs : {2, 4, 7}) {
    options.jobs = jobs;
    EnumStats sn;
    CHECK(run_to_string(d, all_roots(d), options, &sn) == serial);
    REQUIRE(sn.per_root.size() == s1.per_root.size());
    for (std::size_t i = 0; i < sn.per_root.size(); ++i) {
      CHECK(sn.per_root[i].cuts == s1.per_root[i].cuts);
      CHECK(sn.per_root[i].candidates == s1.per_root[i].candidates);
    }
  }
}

TEST_CASE("pipeline equals the path oracle") {
  for (std::uint64_t seed = 120; seed <= 131; ++seed) {
    const Dag d = testutil::small_random_dag(seed, 12, 3);
    for (int k : {2, 3}) {
      PipelineOptions options;
      options.k = k;
      for (NodeId root : all_roots(d)) {
        const Cone cone = extract_cone(d, root);
        if (cone.line_count() > 18) continue;
        std::vector<LineCut> emitted;
        enumerate_cuts(d, {root}, options,
                       [&](const EmittedCut& c) { emitted.push_back(c.line_cut); });
        CHECK(emitted == brute_strong_cuts(cone, k));
      }
    }
  }
}

TEST_CASE("many roots batch cleanly") {
  const Dag d = testutil::small_random_dag(13, 50, 6);
  const auto roots = all_roots(d);
  PipelineOptions options;
  options.k = 2;
  options.jobs = 3;
  EnumStats stats;
  run_to_string(d, roots, options, &stats);
  REQUIRE(stats.per_root.size() == roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) CHECK(stats.per_root[i].root == roots[i]);
}

TEST_CASE("guards") {
  const Dag d = testutil::diamond();
  const CutSink sink = [](const EmittedCut&) {};
  PipelineOptions options;
  options.k = 0;
  CHECK_THROWS_AS(enumerate_cuts(d, {3}, options, sink), guard_error);
  options.k = 17;
  CHECK_THROWS_AS(enumerate_cuts(d, {3}, options, sink), guard_error);
  options.k = 2;
  CHECK_THROWS_AS(enumerate_cuts(d, {0}, options, sink), guard_error); // input root
  CHECK_THROWS_AS(enumerate_cuts(d, {9}, options, sink), guard_error); // out of range
  options.jobs = -1;
  CHECK_THROWS_AS(enumerate_cuts(d, {3}, options, sink), guard_error);
}

} // TEST_SUITE
