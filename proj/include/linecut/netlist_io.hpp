#pragma once

#include <string>
#include <string_view>

#include "linecut/dag.hpp"

namespace linecut {

/// ASCII AIGER ("aag", combinational subset). One Gate per AND, one
/// PrimaryInput per declared input; complement bits become edge metadata.
/// A referenced constant literal materializes as one extra PrimaryInput
/// labeled "const0". Duplicate (tail, head) fanin pairs are merged and
/// counted in Dag::merged_parallel_edges. Throws parse_error.
Dag parse_aiger(std::string_view text);

/// Fixture format: first line "inputs: <id> <id> ...", then one "tail head"
/// pair per line; '#' starts a comment. Zero-fanin nodes are PrimaryInputs.
/// Throws parse_error on cycles, fanins into declared inputs, or node ids
/// that appear neither in an edge nor in the inputs declaration.
Dag parse_edgelist(std::string_view text);

/// Lossless JSON serialization; dag_from_json(dag_to_json(d)) == d
/// field-for-field, and the text is byte-stable for a given Dag.
std::string dag_to_json(const Dag& dag);
Dag dag_from_json(std::string_view text);

/// Fixture-format text for the Dag (labels and complement bits are dropped).
std::string write_edgelist(const Dag& dag);

} // namespace linecut
