#pragma once

#include <string>

#include "linecut/bitmatrix.hpp"
#include "linecut/cone.hpp"

namespace linecut {

/// Reflexive reachability over cone-local node indices: reaches(a, b) iff a
/// directed path a to b exists inside the cone, including the empty path
/// (reaches(a, a) is always true).
class Reachability {
public:
  explicit Reachability(const Cone& cone);

  bool reaches(std::uint32_t from_local, std::uint32_t to_local) const {
    return m_.get(from_local, to_local);
  }

private:
  BitMatrix m_;
};

/// Line dependency graph of a cone. Vertices are cone line ids; two lines
/// are adjacent iff some input-to-root path contains both, equivalently
/// reaches(head(a), tail(b)) or reaches(head(b), tail(a)). For an adjacent
/// pair exactly one direction holds; `precedes` records it and is a strict
/// partial order (the transitive-orientation witness).
struct Ldg {
  UndirectedGraph adj;
  BitMatrix precedes; // precedes.get(a, b): head(a) reaches tail(b)

  std::uint32_t vertex_count() const { return adj.vertex_count(); }
  bool adjacent(LineId a, LineId b) const { return adj.is_adjacent(a, b); }
};

Ldg build_ldg(const Cone& cone);

/// One "u v" edge per line, u < v, ascending; for debugging.
std::string dump_edges(const Ldg& ldg);

namespace detail {
/// zero_length=false drops the reflexive part of the dependency test
/// (consecutive lines sharing a node stop being adjacent). Exists only as a
/// mutation knob for negative-control tests; build_ldg passes true.
Ldg build_ldg(const Cone& cone, bool zero_length);
} // namespace detail

} // namespace linecut
