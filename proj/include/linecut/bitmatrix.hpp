#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace linecut {

/// Packed square bit matrix. Rows are 64-bit word aligned so whole-row OR
/// (the transitive-closure inner loop) runs word-at-a-time.
class BitMatrix {
public:
  BitMatrix() = default;
  explicit BitMatrix(std::uint32_t n)
      : n_(n), words_(((static_cast<std::size_t>(n) + 63) / 64)),
        bits_(words_ * n, 0) {}

  std::uint32_t size() const { return n_; }

  bool get(std::uint32_t r, std::uint32_t c) const {
    return (bits_[row_word(r, c)] >> (c & 63)) & 1u;
  }
  void set(std::uint32_t r, std::uint32_t c) {
    bits_[row_word(r, c)] |= std::uint64_t{1} << (c & 63);
  }
  void reset(std::uint32_t r, std::uint32_t c) {
    bits_[row_word(r, c)] &= ~(std::uint64_t{1} << (c & 63));
  }

  /// row[dst] |= row[src]
  void or_row(std::uint32_t dst, std::uint32_t src) {
    std::uint64_t* d = &bits_[static_cast<std::size_t>(dst) * words_];
    const std::uint64_t* s = &bits_[static_cast<std::size_t>(src) * words_];
    for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
  }

  bool operator==(const BitMatrix&) const = default;

private:
  std::size_t row_word(std::uint32_t r, std::uint32_t c) const {
    return static_cast<std::size_t>(r) * words_ + (c >> 6);
  }

  std::uint32_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Simple undirected graph; self-loops rejected, duplicate insertions ignored.
/// The adjacency matrix is the source of truth; neighbor lists are kept
/// sorted ascending for deterministic iteration.
class UndirectedGraph {
public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::uint32_t vertex_count)
      : adj_(vertex_count), nbrs_(vertex_count) {}

  std::uint32_t vertex_count() const { return adj_.size(); }
  std::uint32_t edge_count() const { return edge_count_; }

  void add_edge(std::uint32_t u, std::uint32_t v);

  bool is_adjacent(std::uint32_t u, std::uint32_t v) const { return adj_.get(u, v); }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return nbrs_.at(v); }
  std::uint32_t degree(std::uint32_t v) const {
    return static_cast<std::uint32_t>(nbrs_.at(v).size());
  }

  /// All edges as (u, v) with u < v, ascending.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  const BitMatrix& matrix() const { return adj_; }

  bool operator==(const UndirectedGraph&) const = default;

private:
  BitMatrix adj_;
  std::vector<std::vector<std::uint32_t>> nbrs_;
  std::uint32_t edge_count_ = 0;
};

} // namespace linecut
