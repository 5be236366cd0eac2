#pragma once

#include <cstdint>

#include "linecut/dag.hpp"

namespace linecut {

/// AIG-like random DAG: `inputs` PrimaryInputs with ids 0..inputs-1, then
/// gates in id order, each drawing one or two distinct fanins uniformly from
/// the nodes before it (acyclic by construction). Draws come from a seeded
/// mt19937_64 reduced by modulo, so streams are identical across platforms.
struct RandomDagParams {
  std::uint32_t nodes = 10; // total, including inputs
  std::uint32_t inputs = 3;
  double two_fanin_prob = 0.7;
  std::uint64_t seed = 1;
};

Dag random_dag(const RandomDagParams& params);

} // namespace linecut
