#include "linecut/mis_enum.hpp"

#include <chrono>
#include <stdexcept>

namespace linecut {

namespace {

// Branch-and-bound state over one pruned LDG. Vertices carry three facts:
// status, the number of included effective-neighbors (dom), and the number
// of still-undecided effective-neighbors (und). An excluded vertex with
// dom == 0 and und == 0 can never become dominated, so any state containing
// one is dead; `doomed` counts them for an O(1) check. Base-graph
// maximality is tracked the same way: `base_undominated` counts vertices of
// the whole base graph (deleted ones included) with no included vertex in
// their closed base neighborhood, and a leaf is emitted only when it is 0.
class Enumerator {
public:
  Enumerator(const PrunedLdg& pruned, int k, const MisSink& sink, EnumCounters* counters)
      : pruned_(pruned), base_(pruned.base->adj), n_(pruned.base->adj.vertex_count()),
        k_(k), sink_(sink), counters_(counters) {
    status_.assign(n_, Decided); // deleted vertices never enter the recursion
    dom_.assign(n_, 0);
    und_.assign(n_, 0);
    base_dom_.assign(n_, 0);
    base_undominated_ = n_;
    eff_nbrs_.assign(n_, {});
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (pruned_.vertex_deleted(v)) continue;
      status_[v] = Undecided;
      for (std::uint32_t w = 0; w < n_; ++w)
        if (w != v && !pruned_.vertex_deleted(w) && pruned_.effective.get(v, w))
          eff_nbrs_[v].push_back(w);
    }
    for (std::uint32_t v = 0; v < n_; ++v)
      und_[v] = static_cast<std::uint32_t>(eff_nbrs_[v].size());
  }

  void run() {
    scratch_.members.clear();
    recurse(0);
  }

private:
  enum Status : char { Undecided = 0, Included = 1, Excluded = 2, Decided = 3 };

  bool is_doomed(std::uint32_t x) const {
    return status_[x] == Excluded && dom_[x] == 0 && und_[x] == 0;
  }

  // v leaves the undecided pool; to_included tells which way.
  void decide(std::uint32_t v, bool to_included) {
    for (std::uint32_t x : eff_nbrs_[v]) {
      const bool was = is_doomed(x);
      --und_[x];
      if (to_included) ++dom_[x];
      doomed_ += static_cast<int>(is_doomed(x)) - static_cast<int>(was);
    }
    status_[v] = to_included ? Included : Excluded;
    if (!to_included && is_doomed(v)) ++doomed_;
  }

  void undecide(std::uint32_t v) {
    if (status_[v] == Excluded && is_doomed(v)) --doomed_;
    const bool was_included = status_[v] == Included;
    status_[v] = Undecided;
    for (std::uint32_t x : eff_nbrs_[v]) {
      const bool was = is_doomed(x);
      ++und_[x];
      if (was_included) --dom_[x];
      doomed_ += static_cast<int>(is_doomed(x)) - static_cast<int>(was);
    }
  }

  void include(std::uint32_t v, std::vector<std::uint32_t>& excluded_here,
               std::uint32_t& base_marks) {
    decide(v, true);
    include_stack_.push_back(v);
    if (!base_dom_[v]) {
      base_dom_[v] = 1;
      --base_undominated_;
      ++base_marks;
      base_trail_.push_back(v);
    }
    for (std::uint32_t w : base_.neighbors(v)) {
      if (!base_dom_[w]) {
        base_dom_[w] = 1;
        --base_undominated_;
        ++base_marks;
        base_trail_.push_back(w);
      }
    }
    for (std::uint32_t w : eff_nbrs_[v]) {
      if (status_[w] == Undecided) {
        decide(w, false);
        excluded_here.push_back(w);
      }
    }
  }

  void undo_include(std::uint32_t v, const std::vector<std::uint32_t>& excluded_here,
                    std::uint32_t base_marks) {
    for (auto it = excluded_here.rbegin(); it != excluded_here.rend(); ++it) undecide(*it);
    for (std::uint32_t i = 0; i < base_marks; ++i) {
      base_dom_[base_trail_.back()] = 0;
      base_trail_.pop_back();
      ++base_undominated_;
    }
    include_stack_.pop_back();
    undecide(v);
  }

  void leaf() {
    if (counters_) ++counters_->candidates;
    if (base_undominated_ != 0) return; // maximal in G' but extendable in G
    scratch_.members = include_stack_;
    if (counters_) ++counters_->emitted;
    sink_(scratch_);
  }

  void recurse(std::uint32_t cursor) {
    if (doomed_ > 0) return;
    while (cursor < n_ && status_[cursor] != Undecided) ++cursor;
    if (cursor == n_) {
      leaf();
      return;
    }
    // with k vertices already in, every remaining undecided vertex would
    // stay undominated forever; only a full decision can be a leaf
    if (static_cast<int>(include_stack_.size()) == k_) return;

    const std::uint32_t v = cursor;
    std::vector<std::uint32_t> excluded_here;
    std::uint32_t base_marks = 0;
    include(v, excluded_here, base_marks);
    recurse(cursor + 1);
    undo_include(v, excluded_here, base_marks);

    decide(v, false);
    recurse(cursor + 1);
    undecide(v);
  }

  const PrunedLdg& pruned_;
  const UndirectedGraph& base_;
  std::uint32_t n_;
  int k_;
  const MisSink& sink_;
  EnumCounters* counters_;

  std::vector<char> status_;
  std::vector<std::uint32_t> dom_, und_;
  std::vector<std::vector<std::uint32_t>> eff_nbrs_;
  std::vector<std::uint32_t> include_stack_;
  int doomed_ = 0;

  std::vector<char> base_dom_;
  std::uint32_t base_undominated_ = 0;
  std::vector<std::uint32_t> base_trail_;

  MisSet scratch_;
};

} // namespace

void enumerate_mis(const PrunedLdg& pruned, int k, const MisSink& sink,
                   EnumCounters* counters) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!pruned.base) throw std::invalid_argument("pruned ldg has no base");
  const auto start = std::chrono::steady_clock::now();
  Enumerator(pruned, k, sink, counters).run();
  if (counters)
    counters->seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace linecut
