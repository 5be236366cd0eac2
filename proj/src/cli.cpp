#include "linecut/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "linecut/cone.hpp"
#include "linecut/errors.hpp"
#include "linecut/netlist_io.hpp"
#include "linecut/pipeline.hpp"
#include "linecut/verify.hpp"

namespace linecut {

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

Dag load_input(const std::string& path) {
  const auto text = read_file(path);
  if (!text) throw parse_error("cannot read input file: " + path);
  // sniff: AIGER starts with its magic, the fixture format with "inputs:"
  std::string_view head(*text);
  while (!head.empty() && (head.front() == ' ' || head.front() == '\n' || head.front() == '\r' ||
                           head.front() == '\t'))
    head.remove_prefix(1);
  if (head.starts_with("aag") || head.starts_with("aig")) return parse_aiger(*text);
  return parse_edgelist(*text);
}

std::vector<NodeId> parse_roots(const Dag& dag, const std::string& selector) {
  if (selector == "all") return all_roots(dag);
  std::vector<NodeId> roots;
  if (selector == "outputs") {
    for (NodeId v : dag.outputs())
      if (v < dag.node_count() && dag.is_gate(v)) roots.push_back(v);
    if (roots.empty()) throw guard_error("input declares no gate outputs");
  } else {
    std::stringstream ss(selector);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      try {
        const unsigned long v = std::stoul(tok);
        if (v >= dag.node_count()) throw guard_error("root id out of range: " + tok);
        roots.push_back(static_cast<NodeId>(v));
      } catch (const guard_error&) {
        throw;
      } catch (const std::exception&) {
        throw guard_error("bad roots selector: " + selector);
      }
    }
    if (roots.empty()) throw guard_error("empty roots selector");
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

void append_cut_jsonl(std::string& out, const EmittedCut& cut, const Cone& cone) {
  out += "{\"root\":";
  out += std::to_string(cut.line_cut.root);
  out += ",\"lines\":[";
  for (std::size_t i = 0; i < cut.line_cut.lines.size(); ++i) {
    const auto& line = cone.lines[cut.line_cut.lines[i]];
    if (i) out += ',';
    out += '[';
    out += std::to_string(line.tail);
    out += ',';
    out += std::to_string(line.head);
    out += ']';
  }
  out += "],\"node_cut\":[";
  for (std::size_t i = 0; i < cut.node_cut.nodes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cut.node_cut.nodes[i]);
  }
  out += "],\"size\":";
  out += std::to_string(cut.line_cut.lines.size());
  out += ",\"node_cut_size\":";
  out += std::to_string(cut.node_cut.nodes.size());
  out += "}\n";
}

void append_cut_csv(std::string& out, const EmittedCut& cut, const Cone& cone) {
  out += std::to_string(cut.line_cut.root);
  out += ',';
  out += std::to_string(cut.line_cut.lines.size());
  out += ',';
  out += std::to_string(cut.node_cut.nodes.size());
  out += ',';
  for (std::size_t i = 0; i < cut.line_cut.lines.size(); ++i) {
    const auto& line = cone.lines[cut.line_cut.lines[i]];
    if (i) out += ';';
    out += std::to_string(line.tail);
    out += '-';
    out += std::to_string(line.head);
  }
  out += ',';
  for (std::size_t i = 0; i < cut.node_cut.nodes.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(cut.node_cut.nodes[i]);
  }
  out += '\n';
}

nlohmann::ordered_json stats_to_json(const EnumStats& stats, const EnumerateArgs& args,
                                     std::uint32_t merged) {
  nlohmann::ordered_json j;
  j["input"] = args.input;
  j["format"] = args.format;
  j["k"] = args.k;
  if (args.cone_limit > 0)
    j["cone_limit"] = args.cone_limit;
  else
    j["cone_limit"] = nullptr;
  j["jobs"] = args.jobs;
  j["node_count"] = stats.node_count;
  j["input_count"] = stats.input_count;
  j["merged_parallel_edges"] = merged;
  j["roots"] = stats.per_root.size();
  j["total_cuts"] = stats.total_cuts;
  j["total_candidates"] = stats.total_candidates;
  j["prune_seconds"] = stats.total_prune_seconds;
  j["enum_seconds"] = stats.total_enum_seconds;
  j["per_root"] = nlohmann::ordered_json::array();
  for (const auto& r : stats.per_root) {
    nlohmann::ordered_json rec;
    rec["root"] = r.root;
    rec["cone_nodes"] = r.cone_nodes;
    rec["cone_lines"] = r.cone_lines;
    rec["ldg_vertices"] = r.ldg_vertices;
    rec["ldg_vertices_after"] = r.ldg_vertices_after;
    rec["edges_added"] = r.edges_added;
    rec["candidates"] = r.candidates;
    rec["cuts"] = r.cuts;
    rec["prune_seconds"] = r.prune_seconds;
    rec["enum_seconds"] = r.enum_seconds;
    j["per_root"].push_back(std::move(rec));
  }
  return j;
}

int fail(int code, const std::string& message) {
  std::cerr << "linecut: " << message << "\n";
  return code;
}

} // namespace

int cmd_enumerate(const EnumerateArgs& args) {
  try {
    if (args.k < 1 || args.k > 16) return fail(exit_guard_violation, "k must be in 1..16");
    if (args.format != "jsonl" && args.format != "csv")
      return fail(exit_guard_violation, "format must be jsonl or csv");
    if (args.jobs < 0) return fail(exit_guard_violation, "jobs must be >= 0");

    const Dag dag = load_input(args.input);
    const std::vector<NodeId> roots = parse_roots(dag, args.roots);
    if (args.cone_limit > 0) {
      // the smallest cone of a root holds the root plus its fanin tails
      for (NodeId root : roots)
        if (dag.fanins(root).size() + 1 > args.cone_limit)
          return fail(exit_guard_violation,
                      "cone limit cannot cover root " + std::to_string(root) + " and its fanins");
    }

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!args.output.empty()) {
      file_out.open(args.output, std::ios::binary);
      if (!file_out) return fail(exit_io_failed, "cannot open output file: " + args.output);
      out = &file_out;
    }

    PipelineOptions options;
    options.k = args.k;
    if (args.cone_limit > 0) options.cone_limit = args.cone_limit;
    options.jobs = args.jobs;

    std::string buffer;
    buffer.reserve(1 << 16);
    const bool csv = args.format == "csv";
    if (csv) buffer += "root,size,node_cut_size,lines,node_cut\n";

    bool write_failed = false;
    const EnumStats stats = enumerate_cuts(dag, roots, options, [&](const EmittedCut& cut) {
      if (csv)
        append_cut_csv(buffer, cut, *cut.cone);
      else
        append_cut_jsonl(buffer, cut, *cut.cone);
      if (buffer.size() >= (1 << 16)) {
        out->write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        if (!*out) write_failed = true;
        buffer.clear();
      }
    });
    out->write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    out->flush();
    if (write_failed || !*out) return fail(exit_io_failed, "failed writing cut stream");

    if (!args.stats.empty()) {
      std::ofstream stats_out(args.stats, std::ios::binary);
      if (!stats_out) return fail(exit_io_failed, "cannot open stats file: " + args.stats);
      stats_out << stats_to_json(stats, args, dag.merged_parallel_edges()).dump(2) << "\n";
      if (!stats_out) return fail(exit_io_failed, "failed writing stats");
    }
    return exit_ok;
  } catch (const parse_error& e) {
    return fail(exit_parse_failed, e.what());
  } catch (const guard_error& e) {
    return fail(exit_guard_violation, e.what());
  } catch (const std::exception& e) {
    return fail(exit_verify_failed, std::string("internal error: ") + e.what());
  }
}

int cmd_bench(const BenchArgs& args) {
  try {
    if (args.ks.empty()) return fail(exit_guard_violation, "empty k list");
    for (int k : args.ks)
      if (k < 1 || k > 16) return fail(exit_guard_violation, "k must be in 1..16");
    if (args.inputs.empty()) return fail(exit_guard_violation, "no inputs");
    std::vector<std::uint32_t> limits = args.cone_limits;
    if (limits.empty()) limits.push_back(0);

    std::vector<std::string> inputs = args.inputs;
    std::sort(inputs.begin(), inputs.end());

    std::ostringstream table;
    const bool markdown = args.report.size() > 3 &&
                          args.report.compare(args.report.size() - 3, 3, ".md") == 0;
    if (markdown) {
      table << "| circuit | nodes | inputs | k | cone_limit | cuts | prune_s | enum_s |\n";
      table << "|---|---|---|---|---|---|---|---|\n";
    } else {
      table << "circuit,nodes,inputs,k,cone_limit,cuts,prune_s,enum_s\n";
    }

    for (const auto& path : inputs) {
      const Dag dag = load_input(path);
      const auto roots = all_roots(dag);
      for (int k : args.ks) {
        for (std::uint32_t limit : limits) {
          PipelineOptions options;
          options.k = k;
          if (limit > 0) options.cone_limit = limit;
          options.jobs = args.jobs;
          const EnumStats stats = enumerate_cuts(dag, roots, options, [](const EmittedCut&) {});
          const std::string limit_str = limit > 0 ? std::to_string(limit) : "none";
          if (markdown)
            table << "| " << path << " | " << stats.node_count << " | " << stats.input_count
                  << " | " << k << " | " << limit_str << " | " << stats.total_cuts << " | "
                  << stats.total_prune_seconds << " | " << stats.total_enum_seconds << " |\n";
          else
            table << path << ',' << stats.node_count << ',' << stats.input_count << ',' << k
                  << ',' << limit_str << ',' << stats.total_cuts << ','
                  << stats.total_prune_seconds << ',' << stats.total_enum_seconds << '\n';
        }
      }
    }

    if (args.report.empty()) {
      std::cout << table.str();
      if (!std::cout) return fail(exit_io_failed, "failed writing report");
    } else {
      std::ofstream out(args.report, std::ios::binary);
      if (!out) return fail(exit_io_failed, "cannot open report file: " + args.report);
      out << table.str();
      if (!out) return fail(exit_io_failed, "failed writing report");
    }
    return exit_ok;
  } catch (const parse_error& e) {
    return fail(exit_parse_failed, e.what());
  } catch (const guard_error& e) {
    return fail(exit_guard_violation, e.what());
  } catch (const std::exception& e) {
    return fail(exit_verify_failed, std::string("internal error: ") + e.what());
  }
}

int cmd_verify(const VerifyArgs& args) {
  try {
    VerifyOptions options;
    options.seed = args.seed;
    options.trials = args.trials;
    options.max_nodes = args.max_nodes;
    options.k = args.k;
    const VerifyReport report = run_verify(options, &std::cout);
    return report.ok ? exit_ok : exit_verify_failed;
  } catch (const guard_error& e) {
    return fail(exit_guard_violation, e.what());
  } catch (const std::exception& e) {
    return fail(exit_verify_failed, std::string("internal error: ") + e.what());
  }
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"k-feasible strong line cut enumeration for Boolean-network DAGs"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate cuts for selected roots");
  enumerate->add_option("--input", en.input, "aag or edge-list circuit")->required();
  enumerate->add_option("--k", en.k, "cut size bound (1..16)");
  enumerate->add_option("--cone-limit", en.cone_limit, "cone node limit; 0 = unlimited");
  enumerate->add_option("--roots", en.roots, "all | outputs | comma-separated ids");
  enumerate->add_option("--output", en.output, "cut stream path; default stdout");
  enumerate->add_option("--stats", en.stats, "stats JSON path");
  enumerate->add_option("--jobs", en.jobs, "prune workers; 0 = hardware default");
  enumerate->add_option("--format", en.format, "jsonl | csv");

  BenchArgs be;
  auto* bench = app.add_subcommand("bench", "tabulate cut counts and timing");
  bench->add_option("--input", be.inputs, "circuit paths")->required();
  bench->add_option("--k", be.ks, "k values");
  bench->add_option("--cone-limit", be.cone_limits, "cone node limits; 0 = unlimited");
  bench->add_option("--report", be.report, "report path (.md = Markdown); default stdout");
  bench->add_option("--jobs", be.jobs, "prune workers; 0 = hardware default");

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "run randomized oracle cross-checks");
  verify->add_option("--seed", ve.seed, "base seed");
  verify->add_option("--trials", ve.trials, "number of random DAGs");
  verify->add_option("--max-nodes", ve.max_nodes, "max DAG size per trial");
  verify->add_option("--k", ve.k, "cut size bound (1..16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_guard_violation;
  }

  if (enumerate->parsed()) return cmd_enumerate(en);
  if (bench->parsed()) return cmd_bench(be);
  return cmd_verify(ve);
}

} // namespace linecut
