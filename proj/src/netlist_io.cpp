#include "linecut/netlist_io.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "linecut/errors.hpp"

namespace linecut {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  for (auto& l : lines)
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

std::uint64_t parse_u64(std::string_view tok, const char* what) {
  if (tok.empty()) throw parse_error(std::string("expected number for ") + what);
  std::uint64_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9')
      throw parse_error(std::string("malformed number '") + std::string(tok) + "' for " + what);
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > 0xffffffffull) throw parse_error(std::string("number out of range for ") + what);
  }
  return v;
}

} // namespace

Dag parse_aiger(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t ln = 0;
  auto next_line = [&]() -> std::string_view {
    if (ln >= lines.size()) throw parse_error("unexpected end of file");
    return lines[ln++];
  };

  const auto header = split_tokens(next_line());
  if (header.empty()) throw parse_error("malformed header");
  if (header[0] == "aig") throw parse_error("binary aiger unsupported; use ascii \"aag\"");
  if (header[0] != "aag") throw parse_error("malformed header");
  if (header.size() < 6 || header.size() > 10) throw parse_error("malformed header");

  const std::uint64_t m = parse_u64(header[1], "M");
  const std::uint64_t num_inputs = parse_u64(header[2], "I");
  const std::uint64_t num_latches = parse_u64(header[3], "L");
  const std::uint64_t num_outputs = parse_u64(header[4], "O");
  const std::uint64_t num_ands = parse_u64(header[5], "A");
  if (num_latches > 0) throw parse_error("sequential input unsupported");
  for (std::size_t i = 6; i < header.size(); ++i)
    if (parse_u64(header[i], "header extension") > 0)
      throw parse_error("unsupported aiger section");

  constexpr std::uint32_t undefined = 0xffffffffu;
  // variable -> node id; variable 0 is the constant, materialized on demand
  std::vector<std::uint32_t> var_node(m + 1, undefined);

  auto read_literal = [&](std::string_view tok, const char* what) -> std::uint64_t {
    const std::uint64_t lit = parse_u64(tok, what);
    if (lit / 2 > m) throw parse_error("literal out of range");
    return lit;
  };

  for (std::uint64_t i = 0; i < num_inputs; ++i) {
    const auto toks = split_tokens(next_line());
    if (toks.size() != 1) throw parse_error("malformed input line");
    const std::uint64_t lit = read_literal(toks[0], "input literal");
    if (lit < 2 || (lit & 1)) throw parse_error("invalid input literal");
    if (var_node[lit / 2] != undefined) throw parse_error("redefined variable");
    var_node[lit / 2] = static_cast<std::uint32_t>(i);
  }

  std::vector<std::uint64_t> output_lits;
  output_lits.reserve(num_outputs);
  for (std::uint64_t i = 0; i < num_outputs; ++i) {
    const auto toks = split_tokens(next_line());
    if (toks.size() != 1) throw parse_error("malformed output line");
    output_lits.push_back(read_literal(toks[0], "output literal"));
  }

  struct AndLine {
    std::uint64_t rhs0, rhs1;
  };
  std::vector<AndLine> ands;
  ands.reserve(num_ands);
  for (std::uint64_t i = 0; i < num_ands; ++i) {
    const auto toks = split_tokens(next_line());
    if (toks.size() != 3) throw parse_error("malformed and line");
    const std::uint64_t lhs = read_literal(toks[0], "and lhs");
    if (lhs < 2 || (lhs & 1)) throw parse_error("invalid and lhs");
    if (var_node[lhs / 2] != undefined) throw parse_error("redefined variable");
    var_node[lhs / 2] = static_cast<std::uint32_t>(num_inputs + i);
    ands.push_back({read_literal(toks[1], "and rhs"), read_literal(toks[2], "and rhs")});
  }

  // symbol table: i<pos> / o<pos> / l<pos> name; 'c' starts the comment section
  std::vector<std::optional<std::string>> input_labels(num_inputs);
  while (ln < lines.size()) {
    const std::string_view line = lines[ln++];
    const auto toks = split_tokens(line);
    if (toks.empty()) continue;
    if (toks[0] == "c") break;
    const char tag = toks[0][0];
    if ((tag != 'i' && tag != 'o' && tag != 'l') || toks.size() < 2)
      throw parse_error("malformed symbol line");
    const std::uint64_t pos = parse_u64(toks[0].substr(1), "symbol position");
    if (tag == 'i') {
      if (pos >= num_inputs) throw parse_error("symbol position out of range");
      // name is everything after the first blank
      const std::size_t at = line.find(toks[0]);
      std::string_view rest = line.substr(at + toks[0].size());
      while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
      input_labels[pos] = std::string(rest);
    } else if (pos >= (tag == 'o' ? num_outputs : std::uint64_t{0})) {
      throw parse_error("symbol position out of range");
    }
  }

  // the constant node is only materialized when some literal references it
  bool need_const = false;
  auto uses_const = [&](std::uint64_t lit) { return lit / 2 == 0; };
  for (const auto& a : ands) need_const = need_const || uses_const(a.rhs0) || uses_const(a.rhs1);
  for (std::uint64_t lit : output_lits) need_const = need_const || uses_const(lit);
  const std::uint32_t const_node = static_cast<std::uint32_t>(num_inputs + num_ands);
  if (need_const) var_node[0] = const_node;

  auto lit_node = [&](std::uint64_t lit) -> std::uint32_t {
    const std::uint32_t node = var_node[lit / 2];
    if (node == undefined) throw parse_error("undefined variable");
    return node;
  };

  std::vector<EdgeRecord> edges;
  std::uint32_t merged = 0;
  for (std::uint64_t i = 0; i < ands.size(); ++i) {
    const std::uint32_t head = static_cast<std::uint32_t>(num_inputs + i);
    const std::uint32_t t0 = lit_node(ands[i].rhs0);
    const std::uint32_t t1 = lit_node(ands[i].rhs1);
    edges.push_back({static_cast<EdgeId>(edges.size()), t0, head, (ands[i].rhs0 & 1) != 0});
    if (t1 == t0) {
      ++merged;
    } else {
      edges.push_back({static_cast<EdgeId>(edges.size()), t1, head, (ands[i].rhs1 & 1) != 0});
    }
  }

  std::vector<NodeRecord> nodes;
  const std::uint32_t node_count = static_cast<std::uint32_t>(num_inputs + num_ands) +
                                   (need_const ? 1u : 0u);
  nodes.reserve(node_count);
  for (std::uint64_t i = 0; i < num_inputs; ++i)
    nodes.push_back({static_cast<NodeId>(i), NodeKind::PrimaryInput, input_labels[i]});
  for (std::uint64_t i = 0; i < num_ands; ++i)
    nodes.push_back({static_cast<NodeId>(num_inputs + i), NodeKind::Gate, std::nullopt});
  if (need_const) nodes.push_back({const_node, NodeKind::PrimaryInput, std::string("const0")});

  if (!detail::kahn_order(node_count, edges)) throw parse_error("cyclic definitions");

  std::vector<NodeId> outputs;
  outputs.reserve(output_lits.size());
  for (std::uint64_t lit : output_lits) outputs.push_back(lit_node(lit));

  try {
    return Dag::from_edges(std::move(nodes), std::move(edges), std::move(outputs), merged);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

Dag parse_edgelist(std::string_view text) {
  std::vector<NodeId> declared_inputs;
  bool saw_inputs_line = false;
  std::vector<std::pair<NodeId, NodeId>> raw_edges;

  for (std::string_view line : split_lines(text)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_tokens(line);
    if (toks.empty()) continue;

    if (!saw_inputs_line) {
      if (toks[0] != "inputs:")
        throw parse_error("missing inputs declaration");
      saw_inputs_line = true;
      for (std::size_t i = 1; i < toks.size(); ++i)
        declared_inputs.push_back(static_cast<NodeId>(parse_u64(toks[i], "input id")));
      continue;
    }
    if (toks.size() != 2) throw parse_error("malformed edge line");
    const NodeId tail = static_cast<NodeId>(parse_u64(toks[0], "tail"));
    const NodeId head = static_cast<NodeId>(parse_u64(toks[1], "head"));
    if (tail == head) throw parse_error("cycle detected");
    raw_edges.emplace_back(tail, head);
  }
  if (!saw_inputs_line) throw parse_error("missing inputs declaration");

  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<EdgeRecord> edges;
  std::uint32_t merged = 0;
  for (auto [tail, head] : raw_edges) {
    if (!seen.insert({tail, head}).second) {
      ++merged;
      continue;
    }
    edges.push_back({static_cast<EdgeId>(edges.size()), tail, head, false});
  }

  NodeId max_id = 0;
  bool any = false;
  std::set<NodeId> mentioned;
  for (const auto& e : edges) {
    mentioned.insert(e.tail);
    mentioned.insert(e.head);
    max_id = std::max({max_id, e.tail, e.head});
    any = true;
  }
  for (NodeId v : declared_inputs) {
    mentioned.insert(v);
    max_id = std::max(max_id, v);
    any = true;
  }
  if (any && max_id > 10'000'000) throw parse_error("node id out of range");
  const std::uint32_t node_count = any ? max_id + 1 : 0;
  for (NodeId v = 0; v < node_count; ++v)
    if (!mentioned.count(v))
      throw parse_error("dangling node id " + std::to_string(v));

  std::vector<std::uint32_t> fanin_count(node_count, 0);
  for (const auto& e : edges) ++fanin_count[e.head];
  const std::set<NodeId> declared(declared_inputs.begin(), declared_inputs.end());
  for (NodeId v : declared)
    if (fanin_count[v] > 0) throw parse_error("declared input has fanins");

  std::vector<NodeRecord> nodes;
  nodes.reserve(node_count);
  for (NodeId v = 0; v < node_count; ++v) {
    const NodeKind kind = fanin_count[v] == 0 ? NodeKind::PrimaryInput : NodeKind::Gate;
    nodes.push_back({v, kind, std::nullopt});
  }

  if (!detail::kahn_order(node_count, edges)) throw parse_error("cycle detected");
  try {
    return Dag::from_edges(std::move(nodes), std::move(edges), {}, merged);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

std::string dag_to_json(const Dag& dag) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : dag.nodes()) {
    nlohmann::ordered_json rec;
    rec["id"] = n.id;
    rec["kind"] = n.kind == NodeKind::PrimaryInput ? "input" : "gate";
    if (n.label) rec["label"] = *n.label;
    j["nodes"].push_back(std::move(rec));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : dag.edges()) {
    nlohmann::ordered_json rec;
    rec["id"] = e.id;
    rec["tail"] = e.tail;
    rec["head"] = e.head;
    rec["complemented"] = e.complemented;
    j["edges"].push_back(std::move(rec));
  }
  j["outputs"] = dag.outputs();
  j["merged_parallel_edges"] = dag.merged_parallel_edges();
  return j.dump();
}

Dag dag_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad dag json: ") + e.what());
  }
  try {
    std::vector<NodeRecord> nodes;
    for (const auto& rec : j.at("nodes")) {
      NodeRecord n;
      n.id = rec.at("id").get<NodeId>();
      const std::string kind = rec.at("kind").get<std::string>();
      if (kind != "input" && kind != "gate") throw parse_error("bad node kind");
      n.kind = kind == "input" ? NodeKind::PrimaryInput : NodeKind::Gate;
      if (rec.contains("label")) n.label = rec.at("label").get<std::string>();
      nodes.push_back(std::move(n));
    }
    std::vector<EdgeRecord> edges;
    for (const auto& rec : j.at("edges")) {
      EdgeRecord e;
      e.id = rec.at("id").get<EdgeId>();
      e.tail = rec.at("tail").get<NodeId>();
      e.head = rec.at("head").get<NodeId>();
      e.complemented = rec.at("complemented").get<bool>();
      edges.push_back(e);
    }
    std::vector<NodeId> outputs = j.at("outputs").get<std::vector<NodeId>>();
    const std::uint32_t merged = j.at("merged_parallel_edges").get<std::uint32_t>();
    return Dag::from_edges(std::move(nodes), std::move(edges), std::move(outputs), merged);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad dag json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

std::string write_edgelist(const Dag& dag) {
  std::ostringstream out;
  out << "inputs:";
  for (const auto& n : dag.nodes())
    if (n.kind == NodeKind::PrimaryInput) out << ' ' << n.id;
  out << '\n';
  for (const auto& e : dag.edges()) out << e.tail << ' ' << e.head << '\n';
  return out.str();
}

} // namespace linecut
