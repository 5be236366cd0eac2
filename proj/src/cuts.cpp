#include "linecut/cuts.hpp"

#include <algorithm>
#include <stdexcept>

namespace linecut {

CutValidator::CutValidator(const Cone& cone)
    : cone_(&cone), reach_(cone), cut_mask_(cone.line_count(), 0),
      t_mask_(cone.node_count(), 0) {
  stack_.reserve(cone.node_count());
}

// Fills t_mask with the nodes that still reach root once the lines in
// cut_mask are removed; true iff no cone input is among them.
bool CutValidator::reaches_root(const std::vector<char>& cut_mask, std::vector<char>& t_mask) {
  std::fill(t_mask.begin(), t_mask.end(), 0);
  stack_.clear();
  t_mask[cone_->root_local] = 1;
  stack_.push_back(cone_->root_local);
  while (!stack_.empty()) {
    const std::uint32_t v = stack_.back();
    stack_.pop_back();
    for (LineId l : cone_->lines_in[v]) {
      if (cut_mask[l]) continue;
      const std::uint32_t u = cone_->lines[l].tail_local;
      if (!t_mask[u]) {
        t_mask[u] = 1;
        stack_.push_back(u);
      }
    }
  }
  for (std::uint32_t i = 0; i < cone_->node_count(); ++i)
    if (cone_->is_input[i] && t_mask[i]) return false;
  return true;
}

StrongCutCheck CutValidator::check(const std::vector<LineId>& lines) {
  StrongCutCheck out;
  for (LineId l : lines)
    if (l >= cone_->line_count()) throw std::out_of_range("line out of range");

  // clause order: common path, then disconnection, then minimality
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& a = cone_->lines[lines[i]];
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& b = cone_->lines[lines[j]];
      if (reach_.reaches(a.head_local, b.tail_local) ||
          reach_.reaches(b.head_local, a.tail_local)) {
        out.violation = CutViolation::CommonPath;
        out.witness = {lines[i], lines[j]};
        out.message = "lines on common path (" + std::to_string(lines[i]) + ", " +
                      std::to_string(lines[j]) + ")";
        return out;
      }
    }
  }

  for (LineId l : lines) cut_mask_[l] = 1;
  const bool disconnects = reaches_root(cut_mask_, t_mask_);
  if (!disconnects) {
    for (LineId l : lines) cut_mask_[l] = 0;
    out.violation = CutViolation::NotDisconnecting;
    out.message = "does not disconnect";
    return out;
  }
  for (LineId l : lines) {
    cut_mask_[l] = 0;
    const bool still = reaches_root(cut_mask_, t_mask_);
    cut_mask_[l] = 1;
    if (still) {
      for (LineId m : lines) cut_mask_[m] = 0;
      out.violation = CutViolation::NotMinimal;
      out.witness = {l};
      out.message = "not minimal: line " + std::to_string(l) + " is redundant";
      return out;
    }
  }
  for (LineId l : lines) cut_mask_[l] = 0;

  out.ok = true;
  out.violation = CutViolation::None;
  return out;
}

Partition CutValidator::partition(const std::vector<LineId>& lines) {
  for (LineId l : lines)
    if (l >= cone_->line_count()) throw std::out_of_range("line out of range");
  for (LineId l : lines) cut_mask_[l] = 1;
  const bool disconnects = reaches_root(cut_mask_, t_mask_);
  if (!disconnects) {
    for (LineId l : lines) cut_mask_[l] = 0;
    throw std::invalid_argument("not a cut");
  }
  for (LineId l : lines) cut_mask_[l] = 0;

  Partition p;
  for (std::uint32_t i = 0; i < cone_->node_count(); ++i)
    (t_mask_[i] ? p.t_side : p.s_side).push_back(cone_->nodes[i]);
  p.classification = Directionality::Unidirectional;
  for (const auto& line : cone_->lines) {
    if (t_mask_[line.tail_local] && !t_mask_[line.head_local]) {
      p.classification = Directionality::Bidirectional;
      break;
    }
  }
  return p;
}

Partition line_cut_to_partition(const Cone& cone, const LineCut& cut) {
  if (cut.root != cone.root) throw std::invalid_argument("cut root does not match cone");
  CutValidator validator(cone);
  return validator.partition(cut.lines);
}

NodeCut line_cut_to_node_cut(const Cone& cone, const LineCut& cut) {
  NodeCut out;
  out.root = cut.root;
  out.nodes.reserve(cut.lines.size());
  for (LineId l : cut.lines) out.nodes.push_back(cone.lines[l].tail);
  std::sort(out.nodes.begin(), out.nodes.end());
  out.nodes.erase(std::unique(out.nodes.begin(), out.nodes.end()), out.nodes.end());
  return out;
}

StrongCutCheck is_strong_line_cut(const Cone& cone, const std::vector<LineId>& lines) {
  CutValidator validator(cone);
  return validator.check(lines);
}

LineCut mis_to_line_cut(const Cone& cone, CutValidator& validator, const MisSet& mis) {
  const StrongCutCheck check = validator.check(mis.members);
  if (!check.ok)
    throw std::logic_error("mis does not form a strong line cut: " + check.message);
  LineCut cut;
  cut.root = cone.root;
  cut.lines = mis.members;
  return cut;
}

LineCut mis_to_line_cut(const Cone& cone, const Ldg& ldg, const MisSet& mis) {
  for (std::size_t i = 0; i < mis.members.size(); ++i)
    for (std::size_t j = i + 1; j < mis.members.size(); ++j)
      if (ldg.adjacent(mis.members[i], mis.members[j]))
        throw std::logic_error("mis members adjacent in the ldg");
  CutValidator validator(cone);
  return mis_to_line_cut(cone, validator, mis);
}

} // namespace linecut
