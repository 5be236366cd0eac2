#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linecut/ldg.hpp"
#include "linecut/mis_enum.hpp"

namespace linecut {

/// A strong line cut of a cone: removing the lines disconnects every cone
/// input from root, no proper subset does, and no two lines lie on a common
/// directed path. Lines are cone line ids, sorted ascending.
struct LineCut {
  NodeId root = 0;
  std::vector<LineId> lines;

  bool operator==(const LineCut&) const = default;
  auto operator<=>(const LineCut&) const = default;
};

/// Deduplicated tails of a line cut, as Dag node ids sorted ascending; every
/// cone-input-to-root path passes through a member.
struct NodeCut {
  NodeId root = 0;
  std::vector<NodeId> nodes;

  bool operator==(const NodeCut&) const = default;
  auto operator<=>(const NodeCut&) const = default;
};

enum class Directionality : std::uint8_t { Unidirectional, Bidirectional };

/// S-T bipartition of the cone nodes: t_side is everything that still
/// reaches root once the cut lines are removed, s_side the rest (so inputs
/// land in S exactly when the cut disconnects them). Unidirectional iff no
/// cone line runs T to S.
struct Partition {
  std::vector<NodeId> s_side; // sorted Dag ids
  std::vector<NodeId> t_side;
  Directionality classification = Directionality::Unidirectional;
};

enum class CutViolation : std::uint8_t {
  None,
  CommonPath,      // two lines on one directed path
  NotDisconnecting,
  NotMinimal,
};

struct StrongCutCheck {
  bool ok = false;
  CutViolation violation = CutViolation::None;
  std::vector<LineId> witness; // offending pair or redundant line
  std::string message;
};

/// Reusable validator; builds cone reachability once and keeps BFS scratch.
class CutValidator {
public:
  explicit CutValidator(const Cone& cone);

  /// Checks the three strong-cut clauses in order: common path,
  /// disconnection, minimality; reports the first violated one.
  StrongCutCheck check(const std::vector<LineId>& lines);

  /// Throws std::invalid_argument("not a cut") when the lines do not
  /// disconnect the inputs from root.
  Partition partition(const std::vector<LineId>& lines);

private:
  bool reaches_root(const std::vector<char>& cut_mask, std::vector<char>& t_mask);

  const Cone* cone_;
  Reachability reach_;
  std::vector<char> cut_mask_;
  std::vector<char> t_mask_;
  std::vector<std::uint32_t> stack_;
};

Partition line_cut_to_partition(const Cone& cone, const LineCut& cut);

NodeCut line_cut_to_node_cut(const Cone& cone, const LineCut& cut);

StrongCutCheck is_strong_line_cut(const Cone& cone, const std::vector<LineId>& lines);

/// Lifts a verified MIS to a LineCut over the same line ids, asserting the
/// strong-cut invariants first; a failure means an upstream bug, surfaced as
/// std::logic_error rather than ever emitting the set.
LineCut mis_to_line_cut(const Cone& cone, const Ldg& ldg, const MisSet& mis);

/// Validator-reusing variant for the enumeration hot loop.
LineCut mis_to_line_cut(const Cone& cone, CutValidator& validator, const MisSet& mis);

} // namespace linecut
