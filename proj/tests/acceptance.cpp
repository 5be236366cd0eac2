// Acceptance gate: every release-blocking behavior checked end to end, one
// PASS/FAIL line per criterion. Returns nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linecut/cli.hpp"
#include "linecut/cone.hpp"
#include "linecut/cuts.hpp"
#include "linecut/ldg.hpp"
#include "linecut/mis_enum.hpp"
#include "linecut/netlist_io.hpp"
#include "linecut/oracle.hpp"
#include "linecut/pipeline.hpp"
#include "linecut/prune.hpp"
#include "linecut/random_dag.hpp"

using namespace linecut;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& note = "") {
  std::printf("%s - %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
              note.empty() ? "" : ": ", note.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Entry {
  const Dag* dag;
  NodeId root;
  Cone cone;
  Ldg ldg;
};

// seeded corpus: small DAGs whose cones stay inside every oracle guard
// (<= 18 lines, <= 12 nodes)
struct Corpus {
  std::deque<Dag> dags;
  std::vector<Entry> entries;
};

Corpus build_corpus(std::size_t target) {
  Corpus corpus;
  std::uint64_t seed = 1000;
  while (corpus.entries.size() < target) {
    RandomDagParams params;
    params.nodes = 12;
    params.inputs = 3;
    params.two_fanin_prob = 0.85;
    params.seed = seed++;
    corpus.dags.push_back(random_dag(params));
    const Dag& dag = corpus.dags.back();
    for (NodeId root : all_roots(dag)) {
      Entry e{&dag, root, extract_cone(dag, root), {}};
      if (e.cone.line_count() < 2) continue;
      e.ldg = build_ldg(e.cone);
      corpus.entries.push_back(std::move(e));
    }
  }
  return corpus;
}

std::vector<LineCut> pipeline_cuts(const Entry& e, int k) {
  PipelineOptions options;
  options.k = k;
  options.jobs = 1;
  std::vector<LineCut> out;
  enumerate_cuts(*e.dag, {e.root}, options,
                 [&](const EmittedCut& c) { out.push_back(c.line_cut); });
  return out;
}

std::vector<std::vector<LineId>> line_sets(const std::vector<LineCut>& cuts) {
  std::vector<std::vector<LineId>> out;
  out.reserve(cuts.size());
  for (const auto& c : cuts) out.push_back(c.lines);
  return out;
}

const int corpus_ks[] = {2, 3, 4};

void criterion_pipeline_vs_oracle(const Corpus& corpus) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0, bad = 0;
  for (const Entry& e : corpus.entries) {
    for (int k : corpus_ks) {
      if (pipeline_cuts(e, k) != brute_strong_cuts(e.cone, k)) ++bad;
      ++checked;
    }
  }
  const double elapsed = seconds_since(start);
  char note[160];
  std::snprintf(note, sizeof note, "%zu cones x 3 bounds, %zu mismatches, %.1fs (budget 60s)",
                corpus.entries.size(), bad, elapsed);
  report("enumerated cuts match the exhaustive path oracle", bad == 0 && elapsed < 60.0, note);
}

void criterion_mis_duality(const Corpus& corpus) {
  std::size_t bad = 0;
  for (const Entry& e : corpus.entries)
    for (int k : corpus_ks)
      if (line_sets(brute_strong_cuts(e.cone, k)) != brute_mis(e.ldg.adj, k)) ++bad;
  report("strong-cut family equals the dependency-graph MIS family",
         bad == 0, bad ? std::to_string(bad) + " mismatches" : "");
}

void criterion_unidirectional(const Corpus& corpus) {
  std::size_t bad = 0, cones = 0;
  for (const Entry& e : corpus.entries) {
    for (int k : corpus_ks) {
      const auto cuts = pipeline_cuts(e, k);
      std::vector<NodeCut> derived;
      for (const auto& cut : cuts) {
        const Partition p = line_cut_to_partition(e.cone, cut);
        if (p.classification != Directionality::Unidirectional) ++bad;
        derived.push_back(line_cut_to_node_cut(e.cone, cut));
      }
      std::sort(derived.begin(), derived.end());
      derived.erase(std::unique(derived.begin(), derived.end()), derived.end());
      if (derived != brute_unidirectional_node_cuts(e.cone, k)) ++bad;
      ++cones;
    }
  }
  report("every cut is unidirectional and node cuts match the bipartition oracle",
         bad == 0, std::to_string(cones) + " cone/bound pairs");
}

void criterion_flow_bound(const Corpus& corpus) {
  // every corpus LDG stays within 18 vertices (9 two-fanin gates at most),
  // so the exact reference is affordable on all of them
  std::size_t checks = 0, bad = 0;
  std::uint32_t largest = 0;
  for (const Entry& e : corpus.entries) {
    largest = std::max(largest, e.ldg.vertex_count());
    for (int k : corpus_ks) {
      for (LineId v = 0; v < e.ldg.vertex_count(); ++v) {
        const auto flow = min_mis_single(e.cone, e.ldg, v, k);
        const auto exact = brute_min_mis(e.ldg.adj, {v});
        if (!(flow ? (exact && *flow <= *exact) : (exact && *exact > k))) ++bad;
        ++checks;
      }
      for (LineId u = 0; u < e.ldg.vertex_count(); ++u) {
        for (LineId v = u + 1; v < e.ldg.vertex_count(); ++v) {
          if (e.ldg.adjacent(u, v)) continue;
          const auto flow = min_mis_pair(e.cone, e.ldg, u, v, k);
          const auto exact = brute_min_mis(e.ldg.adj, {u, v});
          if (!(flow ? (exact && *flow <= *exact) : (exact && *exact > k))) ++bad;
          ++checks;
        }
      }
    }
  }
  char note[160];
  std::snprintf(note, sizeof note, "%zu bound checks, largest LDG %u vertices, %zu violations",
                checks, largest, bad);
  report("flow bound never exceeds the exact smallest containing MIS", bad == 0, note);
}

void criterion_prune_preserves(const Corpus& corpus) {
  std::size_t checks = 0, bad = 0;
  for (const Entry& e : corpus.entries) {
    for (int k : corpus_ks) {
      const PrunedLdg pruned = prune_ldg_serial(e.cone, e.ldg, k);
      for (const auto& mis : brute_mis(e.ldg.adj, k)) {
        bool survives = true;
        for (std::uint32_t v : mis)
          if (pruned.vertex_deleted(v)) survives = false;
        for (std::size_t i = 0; i < mis.size() && survives; ++i)
          for (std::size_t j = i + 1; j < mis.size(); ++j)
            if (pruned.effective.get(mis[i], mis[j])) survives = false;
        // still maximal among survivors under the effective adjacency
        for (std::uint32_t v = 0; v < e.ldg.vertex_count() && survives; ++v) {
          if (pruned.vertex_deleted(v)) continue;
          if (std::find(mis.begin(), mis.end(), v) != mis.end()) continue;
          bool dominated = false;
          for (std::uint32_t m : mis)
            if (pruned.effective_adjacent(v, m)) dominated = true;
          if (!dominated) survives = false;
        }
        if (!survives) ++bad;
        ++checks;
      }
    }
  }
  char note[96];
  std::snprintf(note, sizeof note, "%zu bounded MISs, %zu lost", checks, bad);
  report("pruning preserves every bounded MIS", bad == 0, note);
}

void criterion_pinned_two_strand() {
  // two inputs; strand 0->2->3->5 beside 1->4->5 with shortcut 1->5;
  // line 1 is the strand's middle line and sits only in 3-member MISs
  const Dag d = parse_edgelist("inputs: 0 1\n0 2\n2 3\n3 5\n1 4\n4 5\n1 5\n");
  const Cone cone = extract_cone(d, 5);
  const Ldg ldg = build_ldg(cone);
  const bool above_at_2 = min_mis_single(cone, ldg, 1, 2) == std::nullopt;
  const bool three_at_3 = min_mis_single(cone, ldg, 1, 3) == 3;
  const bool three_at_16 = min_mis_single(cone, ldg, 1, 16) == 3;
  const bool oracle_three = brute_min_mis(ldg.adj, {1}) == 3;
  // pruning consequences: k=2 deletes the whole LDG, k=3 touches nothing
  const PrunedLdg tight = prune_ldg_serial(cone, ldg, 2);
  const PrunedLdg loose = prune_ldg_serial(cone, ldg, 3);
  const bool prune_ok = tight.surviving_count() == 0 && loose.surviving_count() == 6 &&
                        loose.added_edges.empty();
  report("pinned flow bound on the two-strand network",
         above_at_2 && three_at_3 && three_at_16 && oracle_three && prune_ok,
         "bound 3 reported at k>=3, above-bound at k=2");
}

void criterion_perf(const Dag& big, EnumStats& stats_out) {
  const auto start = std::chrono::steady_clock::now();
  PipelineOptions options;
  options.k = 6;
  std::uint64_t cuts = 0;
  const EnumStats stats =
      enumerate_cuts(big, all_roots(big), options, [&](const EmittedCut&) { ++cuts; });
  const double elapsed = seconds_since(start);
  stats_out = stats;
  const bool prune_dominates = stats.total_prune_seconds >= stats.total_enum_seconds;
  char note[200];
  std::snprintf(note, sizeof note,
                "%u nodes, k=6, %llu cuts in %.1fs (budget 120s); prune %.2fs >= enum %.2fs: %s",
                big.node_count(), static_cast<unsigned long long>(cuts), elapsed,
                stats.total_prune_seconds, stats.total_enum_seconds,
                prune_dominates ? "yes" : "no");
  report("400-node enumeration inside the time budget with pruning dominant",
         elapsed < 120.0 && prune_dominates && cuts == stats.total_cuts, note);
}

void criterion_determinism(const Dag& big) {
  const fs::path dir = fs::temp_directory_path();
  const fs::path input = dir / "linecut_acc_input.el";
  const fs::path out_a = dir / "linecut_acc_a.jsonl";
  const fs::path out_b = dir / "linecut_acc_b.jsonl";
  const fs::path out_c = dir / "linecut_acc_c.jsonl";
  {
    std::ofstream f(input, std::ios::binary);
    f << write_edgelist(big);
  }
  EnumerateArgs args;
  args.input = input.string();
  args.k = 6;
  bool ok = true;
  args.jobs = 1;
  args.output = out_a.string();
  ok = ok && cmd_enumerate(args) == exit_ok;
  args.jobs = 4;
  args.output = out_b.string();
  ok = ok && cmd_enumerate(args) == exit_ok;
  args.output = out_c.string();
  ok = ok && cmd_enumerate(args) == exit_ok;

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  };
  std::string a = slurp(out_a), b = slurp(out_b), c = slurp(out_c);
  const bool identical = ok && !a.empty() && a == b && b == c;
  char note[120];
  std::snprintf(note, sizeof note, "%zu bytes per stream, jobs 1 vs 4 vs 4", a.size());
  report("byte-identical output across repeated runs and worker counts", identical, note);
  fs::remove(input);
  fs::remove(out_a);
  fs::remove(out_b);
  fs::remove(out_c);
}

void criterion_mutation(const Corpus& corpus) {
  // negative control: drop zero-length dependencies when building the LDG and
  // make sure each validation suite notices on some cone
  const int k = 3;
  std::size_t caught_pipeline = 0, caught_mis = 0, caught_nodecut = 0, mutants_differ = 0;
  for (const Entry& e : corpus.entries) {
    if (mutants_differ >= 40) break;
    const Ldg mutant = detail::build_ldg(e.cone, false);
    if (mutant.adj.edge_count() == e.ldg.adj.edge_count()) continue; // mutation is a no-op here
    ++mutants_differ;

    // suite 1: pipeline validation (the lift either throws or the family differs)
    try {
      const PrunedLdg pruned = prune_ldg_serial(e.cone, mutant, k);
      std::vector<std::vector<LineId>> emitted;
      CutValidator validator(e.cone);
      enumerate_mis(pruned, k, [&](const MisSet& mis) {
        emitted.push_back(mis_to_line_cut(e.cone, validator, mis).lines);
      });
      if (emitted != line_sets(brute_strong_cuts(e.cone, k))) ++caught_pipeline;
    } catch (const std::logic_error&) {
      ++caught_pipeline;
    }

    // suite 2: MIS family comparison against the path oracle
    if (brute_mis(mutant.adj, k) != line_sets(brute_strong_cuts(e.cone, k))) ++caught_mis;

    // suite 3: node-cut comparison against the bipartition oracle
    std::vector<NodeCut> derived;
    bool invalid_partition = false;
    for (const auto& mis : brute_mis(mutant.adj, k)) {
      NodeCut nc;
      nc.root = e.cone.root;
      std::set<NodeId> tails;
      for (LineId l : mis) tails.insert(e.cone.lines[l].tail);
      nc.nodes.assign(tails.begin(), tails.end());
      derived.push_back(std::move(nc));
      try {
        const Partition p = line_cut_to_partition(e.cone, LineCut{e.cone.root, mis});
        if (p.classification != Directionality::Unidirectional) invalid_partition = true;
      } catch (const std::invalid_argument&) {
        invalid_partition = true;
      }
    }
    std::sort(derived.begin(), derived.end());
    derived.erase(std::unique(derived.begin(), derived.end()), derived.end());
    if (invalid_partition || derived != brute_unidirectional_node_cuts(e.cone, k))
      ++caught_nodecut;
  }
  char note[200];
  std::snprintf(note, sizeof note,
                "%zu mutated cones: pipeline %zu, MIS family %zu, node cuts %zu detections",
                mutants_differ, caught_pipeline, caught_mis, caught_nodecut);
  report("seeded dependency-graph defect is caught by all three suites",
         mutants_differ > 0 && caught_pipeline > 0 && caught_mis > 0 && caught_nodecut > 0,
         note);
}

} // namespace

int main() {
  try {
    const Corpus corpus = build_corpus(300);

    criterion_pipeline_vs_oracle(corpus);
    criterion_mis_duality(corpus);
    criterion_unidirectional(corpus);
    criterion_flow_bound(corpus);
    criterion_prune_preserves(corpus);
    criterion_pinned_two_strand();

    RandomDagParams big_params;
    big_params.nodes = 400;
    big_params.inputs = 60;
    big_params.two_fanin_prob = 0.8;
    big_params.seed = 42;
    const Dag big = random_dag(big_params);
    EnumStats perf_stats;
    criterion_perf(big, perf_stats);
    criterion_determinism(big);

    criterion_mutation(corpus);
  } catch (const std::exception& e) {
    std::printf("FAIL - acceptance run aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
