#include "linecut/verify.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <random>
#include <sstream>

#include "linecut/cuts.hpp"
#include "linecut/errors.hpp"
#include "linecut/ldg.hpp"
#include "linecut/mis_enum.hpp"
#include "linecut/netlist_io.hpp"
#include "linecut/oracle.hpp"
#include "linecut/prune.hpp"
#include "linecut/random_dag.hpp"

namespace linecut {

namespace {

struct Collector {
  std::vector<PropertyResult> results;

  PropertyResult& at(const std::string& name) {
    for (auto& r : results)
      if (r.name == name) return r;
    results.push_back({name, 0, 0, {}});
    return results.back();
  }

  void check(const std::string& name, bool ok, const std::string& counterexample) {
    auto& r = at(name);
    ++r.checks;
    if (!ok) {
      ++r.failures;
      if (r.first_counterexample.empty()) r.first_counterexample = counterexample;
    }
  }
};

std::string describe(const Dag& dag, NodeId root, int k, const std::string& detail) {
  std::ostringstream out;
  out << "k=" << k << " root=" << root;
  if (!detail.empty()) out << ' ' << detail;
  out << "\n" << write_edgelist(dag);
  return out.str();
}

std::string id_list(const std::vector<std::uint32_t>& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << '}';
  return out.str();
}

// cone-local path check used only by the maxflow oracle below
bool has_surviving_path(const Cone& cone, const std::vector<char>& removed) {
  std::vector<char> seen(cone.node_count(), 0);
  std::vector<std::uint32_t> stack{cone.root_local};
  seen[cone.root_local] = 1;
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    if (cone.is_input[v]) return true;
    for (LineId l : cone.lines_in[v]) {
      if (removed[l]) continue;
      const std::uint32_t u = cone.lines[l].tail_local;
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return false;
}

// exhaustive min-cut over finite lines; nullopt = every subset leaves a path
std::optional<int> oracle_min_cut(const Cone& cone, const std::vector<Cap>& caps) {
  std::vector<LineId> finite;
  for (LineId l = 0; l < cone.line_count(); ++l)
    if (caps[l] == Cap::Unit) finite.push_back(l);
  std::optional<int> best;
  std::vector<char> removed(cone.line_count(), 0);
  for (std::uint32_t mask = 0; mask < (1u << finite.size()); ++mask) {
    const int size = std::popcount(mask);
    if (best && size >= *best) continue;
    std::fill(removed.begin(), removed.end(), 0);
    for (std::size_t i = 0; i < finite.size(); ++i)
      if ((mask >> i) & 1) removed[finite[i]] = 1;
    if (!has_surviving_path(cone, removed)) best = size;
  }
  return best;
}

struct ConeChecks {
  const Dag& dag;
  const VerifyOptions& opt;
  Collector& col;
  std::mt19937_64& rng;

  void run(NodeId root) {
    const Cone cone = extract_cone(dag, root);
    const Ldg ldg = build_ldg(cone);
    const int k = opt.k;
    auto ctx = [&](const std::string& d) { return describe(dag, root, k, d); };

    if (cone.line_count() <= 20) {
      check_ldg_adjacency(cone, ldg, ctx);
      check_orientation(ldg, ctx);
      check_cut_mis_duality(cone, ldg, k, ctx);
    }
    // exhaustive min-MIS / min-cut references are exponential in the line
    // count; 12 keeps a default verify run in the seconds range
    if (cone.line_count() <= 12) check_flow_lower_bounds(cone, ldg, k, ctx);
    if (cone.line_count() <= 20) check_prune_preservation(cone, ldg, k, ctx);
    if (cone.line_count() <= 12) check_maxflow(cone, k, ctx);
  }

  template <typename Ctx>
  void check_ldg_adjacency(const Cone& cone, const Ldg& ldg, const Ctx& ctx) {
    const auto paths = detail::enumerate_path_masks(cone);
    bool ok = true;
    std::string detail_str;
    for (LineId a = 0; a < cone.line_count() && ok; ++a) {
      for (LineId b = a + 1; b < cone.line_count() && ok; ++b) {
        bool on_common_path = false;
        for (std::uint32_t p : paths)
          if ((p >> a) & 1 && (p >> b) & 1) {
            on_common_path = true;
            break;
          }
        if (on_common_path != ldg.adjacent(a, b)) {
          ok = false;
          detail_str = "adjacency mismatch on pair " + id_list({a, b});
        }
      }
    }
    col.check("ldg_adjacency_oracle", ok, ok ? "" : ctx(detail_str));
  }

  template <typename Ctx>
  void check_orientation(const Ldg& ldg, const Ctx& ctx) {
    const std::uint32_t n = ldg.vertex_count();
    bool ok = true;
    for (LineId a = 0; a < n && ok; ++a) {
      if (ldg.precedes.get(a, a)) ok = false; // irreflexive
      for (LineId b = 0; b < n && ok; ++b) {
        if (a != b && ldg.precedes.get(a, b) && ldg.precedes.get(b, a)) ok = false;
        for (LineId c = 0; ok && c < n; ++c) {
          if (a == b || b == c || a == c) continue;
          if (ldg.precedes.get(a, b) && ldg.precedes.get(b, c) &&
              (!ldg.precedes.get(a, c) || !ldg.adjacent(a, c)))
            ok = false;
        }
      }
    }
    col.check("ldg_orientation_partial_order", ok, ok ? "" : ctx("orientation not transitive"));
  }

  template <typename Ctx>
  void check_cut_mis_duality(const Cone& cone, const Ldg& ldg, int k, const Ctx& ctx) {
    const auto oracle_cuts = brute_strong_cuts(cone, k);
    std::vector<std::vector<std::uint32_t>> oracle_sets;
    oracle_sets.reserve(oracle_cuts.size());
    for (const auto& c : oracle_cuts) oracle_sets.push_back(c.lines);

    const auto mis_sets = brute_mis(ldg.adj, k);
    col.check("cut_family_equals_mis_family", oracle_sets == mis_sets,
              oracle_sets == mis_sets ? "" : ctx("strong-cut family != MIS family"));

    // full per-cone pipeline against the oracle
    std::vector<LineCut> emitted;
    bool pipeline_ok = true;
    std::string detail_str;
    try {
      const PrunedLdg pruned = prune_ldg(cone, ldg, k);
      CutValidator validator(cone);
      enumerate_mis(pruned, k, [&](const MisSet& mis) {
        emitted.push_back(mis_to_line_cut(cone, validator, mis));
      });
    } catch (const std::logic_error& e) {
      pipeline_ok = false;
      detail_str = std::string("pipeline aborted: ") + e.what();
    }
    if (pipeline_ok && emitted != oracle_cuts) {
      pipeline_ok = false;
      detail_str = "pipeline cuts != oracle cuts";
    }
    col.check("pipeline_oracle_cut_equivalence", pipeline_ok, pipeline_ok ? "" : ctx(detail_str));
    if (!pipeline_ok) return;

    bool uni_ok = true, invert_ok = true, nodecut_ok = true;
    for (const auto& cut : emitted) {
      const Partition p = line_cut_to_partition(cone, cut);
      if (p.classification != Directionality::Unidirectional) uni_ok = false;
      // the reach-root rule must invert the cut: crossing lines == cut lines
      std::vector<char> in_t(cone.node_count(), 0);
      for (NodeId v : p.t_side) in_t[cone.local_index(v)] = 1;
      std::vector<LineId> crossing;
      for (LineId l = 0; l < cone.line_count(); ++l)
        if (!in_t[cone.lines[l].tail_local] && in_t[cone.lines[l].head_local])
          crossing.push_back(l);
      if (crossing != cut.lines) invert_ok = false;
      if (line_cut_to_node_cut(cone, cut).nodes.size() > cut.lines.size()) nodecut_ok = false;
    }
    col.check("emitted_cuts_unidirectional", uni_ok, uni_ok ? "" : ctx("bidirectional emission"));
    col.check("partition_inverts_cut", invert_ok, invert_ok ? "" : ctx("crossing set != cut"));
    col.check("node_cut_not_larger", nodecut_ok, nodecut_ok ? "" : ctx("|node cut| > |line cut|"));

    if (cone.node_count() <= 14) {
      auto oracle_nodes = brute_unidirectional_node_cuts(cone, k);
      std::vector<NodeCut> derived;
      derived.reserve(emitted.size());
      for (const auto& cut : emitted) derived.push_back(line_cut_to_node_cut(cone, cut));
      std::sort(derived.begin(), derived.end());
      derived.erase(std::unique(derived.begin(), derived.end()), derived.end());
      col.check("node_cut_oracle_equivalence", derived == oracle_nodes,
                derived == oracle_nodes ? "" : ctx("unidirectional node cuts differ"));
    }

    // round-trip: a strong cut's line set is an MIS; lifting it back must
    // return the identical line set
    bool rt_ok = true;
    try {
      for (const auto& cut : oracle_cuts) {
        MisSet mis;
        mis.members = cut.lines;
        if (mis_to_line_cut(cone, ldg, mis).lines != cut.lines) rt_ok = false;
      }
    } catch (const std::logic_error&) {
      rt_ok = false;
    }
    col.check("cut_mis_roundtrip", rt_ok, rt_ok ? "" : ctx("round-trip changed the line set"));
  }

  template <typename Ctx>
  void check_flow_lower_bounds(const Cone& cone, const Ldg& ldg, int k, const Ctx& ctx) {
    for (LineId v = 0; v < ldg.vertex_count(); ++v) {
      const auto flow = min_mis_single(cone, ldg, v, k);
      const auto brute = brute_min_mis(ldg.adj, {v});
      const bool ok = flow ? (brute && *flow <= *brute) : (brute && *brute > k);
      col.check("flow_single_lower_bound", ok,
                ok ? "" : ctx("line " + std::to_string(v)));
    }
    for (LineId u = 0; u < ldg.vertex_count(); ++u) {
      for (LineId v = u + 1; v < ldg.vertex_count(); ++v) {
        if (ldg.adjacent(u, v)) continue;
        const auto flow = min_mis_pair(cone, ldg, u, v, k);
        const auto brute = brute_min_mis(ldg.adj, {u, v});
        const bool ok = flow ? (brute && *flow <= *brute) : (brute && *brute > k);
        col.check("flow_pair_lower_bound", ok, ok ? "" : ctx("pair " + id_list({u, v})));
      }
    }
  }

  template <typename Ctx>
  void check_prune_preservation(const Cone& cone, const Ldg& ldg, int k, const Ctx& ctx) {
    const PrunedLdg pruned = prune_ldg(cone, ldg, k);
    const auto base_mis = brute_mis(ldg.adj, k);
    for (const auto& mis : base_mis) {
      bool survives = true; // members intact, pairwise non-adjacent, still maximal
      for (std::uint32_t v : mis)
        if (pruned.vertex_deleted(v)) survives = false;
      for (std::size_t i = 0; i < mis.size() && survives; ++i)
        for (std::size_t j = i + 1; j < mis.size(); ++j)
          if (pruned.effective_adjacent(mis[i], mis[j])) survives = false;
      if (survives) {
        for (std::uint32_t v = 0; v < ldg.vertex_count() && survives; ++v) {
          if (pruned.vertex_deleted(v)) continue;
          if (std::find(mis.begin(), mis.end(), v) != mis.end()) continue;
          bool dominated = false;
          for (std::uint32_t m : mis)
            if (pruned.effective_adjacent(v, m)) dominated = true;
          if (!dominated) survives = false;
        }
      }
      col.check("prune_preserves_bounded_mis", survives,
                survives ? "" : ctx("lost MIS " + id_list(mis)));
      for (std::uint32_t v : mis) {
        const bool ok = !pruned.vertex_deleted(v);
        col.check("prune_deletion_sound", ok,
                  ok ? "" : ctx("deleted vertex " + std::to_string(v) + " in MIS " + id_list(mis)));
      }
      for (auto [u, v] : pruned.added_edges) {
        const bool both = std::find(mis.begin(), mis.end(), u) != mis.end() &&
                          std::find(mis.begin(), mis.end(), v) != mis.end();
        col.check("prune_addition_sound", !both,
                  !both ? "" : ctx("added edge " + id_list({u, v}) + " inside MIS " + id_list(mis)));
      }
    }
  }

  template <typename Ctx>
  void check_maxflow(const Cone& cone, int k, const Ctx& ctx) {
    std::vector<Cap> caps(cone.line_count(), Cap::Unit);
    for (auto& c : caps)
      if (rng() % 4 == 0) c = Cap::Inf;
    FlowNet net = build_flow_net(cone, caps);
    const auto flow = net.min_cut_value(k);
    const auto oracle = oracle_min_cut(cone, caps);
    // agreement when within bound, AboveBound exactly when the oracle
    // exceeds it (no finite cut counts as above any bound)
    const bool ok = flow ? (oracle && *oracle == *flow && *flow <= k)
                         : (!oracle || *oracle > k);
    col.check("maxflow_oracle_min_cut", ok, ok ? "" : ctx("capacity draw mismatch"));

    if (cone.line_count() > 0) {
      const LineId raised = static_cast<LineId>(rng() % cone.line_count());
      auto caps2 = caps;
      caps2[raised] = Cap::Inf;
      FlowNet net2 = build_flow_net(cone, caps2);
      const auto flow2 = net2.min_cut_value(k);
      const bool mono = !flow2 || (flow && *flow2 >= *flow);
      col.check("maxflow_monotone_in_capacity", mono,
                mono ? "" : ctx("raising a capacity lowered the min cut"));
    }
  }
};

} // namespace

VerifyReport run_verify(const VerifyOptions& options, std::ostream* log) {
  if (options.k < 1 || options.k > 16) throw guard_error("k must be in 1..16");
  if (options.max_nodes < 5) throw guard_error("max-nodes must be >= 5");
  if (options.max_nodes > 400) throw guard_error("max-nodes must be <= 400");

  Collector col;
  for (std::uint32_t trial = 0; trial < options.trials; ++trial) {
    std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ull + trial);
    RandomDagParams params;
    params.nodes = 5 + static_cast<std::uint32_t>(rng() % (options.max_nodes - 4));
    params.inputs = 1 + static_cast<std::uint32_t>(rng() % 3);
    if (params.inputs >= params.nodes) params.inputs = params.nodes - 1;
    params.two_fanin_prob = 0.5 + static_cast<double>(rng() % 50) / 100.0;
    params.seed = rng();
    const Dag dag = random_dag(params);

    ConeChecks checks{dag, options, col, rng};
    for (NodeId root : all_roots(dag)) checks.run(root);
  }

  VerifyReport report;
  report.properties = std::move(col.results);
  for (const auto& r : report.properties) {
    report.total_checks += r.checks;
    if (r.failures > 0) report.ok = false;
  }
  if (log) {
    for (const auto& r : report.properties) {
      *log << r.name << ": checks=" << r.checks << " failures=" << r.failures << "\n";
      if (r.failures > 0) *log << "counterexample:\n" << r.first_counterexample << "\n";
    }
    *log << "total checks: " << report.total_checks << (report.ok ? " (all passed)" : "")
         << "\n";
  }
  return report;
}

} // namespace linecut
