#include "linecut/prune.hpp"

#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace linecut {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Marks the neighborhood(s) infinite, runs one bounded min-cut, restores.
std::optional<int> query_single(FlowNet& net, const Ldg& ldg, LineId v, int k) {
  for (LineId w : ldg.adj.neighbors(v)) net.set_capacity(w, Cap::Inf);
  const auto r = net.min_cut_value(k);
  for (LineId w : ldg.adj.neighbors(v)) net.set_capacity(w, Cap::Unit);
  return r;
}

std::optional<int> query_pair(FlowNet& net, const Ldg& ldg, LineId u, LineId v, int k) {
  for (LineId w : ldg.adj.neighbors(u)) net.set_capacity(w, Cap::Inf);
  for (LineId w : ldg.adj.neighbors(v)) net.set_capacity(w, Cap::Inf);
  const auto r = net.min_cut_value(k);
  for (LineId w : ldg.adj.neighbors(u)) net.set_capacity(w, Cap::Unit);
  for (LineId w : ldg.adj.neighbors(v)) net.set_capacity(w, Cap::Unit);
  return r;
}

void check_pair_preconditions(const Ldg& ldg, LineId u, LineId v) {
  if (u == v) throw std::invalid_argument("pair needs two distinct lines");
  if (ldg.adjacent(u, v)) throw std::invalid_argument("pair is adjacent in the ldg");
}

PrunedLdg assemble(const Ldg& ldg, std::vector<char> deleted,
                   std::vector<std::pair<LineId, LineId>> added) {
  PrunedLdg out;
  out.base = &ldg;
  out.deleted = std::move(deleted);
  out.added_edges = std::move(added);
  out.effective = ldg.adj.matrix();
  for (auto [u, v] : out.added_edges) {
    out.effective.set(u, v);
    out.effective.set(v, u);
  }
  return out;
}

std::vector<std::pair<LineId, LineId>> candidate_pairs(const Ldg& ldg,
                                                       const std::vector<char>& deleted) {
  std::vector<std::pair<LineId, LineId>> pairs;
  const std::uint32_t n = ldg.vertex_count();
  for (LineId u = 0; u < n; ++u) {
    if (deleted[u]) continue;
    for (LineId v = u + 1; v < n; ++v)
      if (!deleted[v] && !ldg.adjacent(u, v)) pairs.emplace_back(u, v);
  }
  return pairs;
}

} // namespace

std::uint32_t PrunedLdg::surviving_count() const {
  std::uint32_t n = 0;
  for (char d : deleted)
    if (!d) ++n;
  return n;
}

std::optional<int> min_mis_single(const Cone& cone, const Ldg& ldg, LineId line, int k) {
  if (line >= ldg.vertex_count()) throw std::out_of_range("line out of range");
  FlowNet net(cone);
  return query_single(net, ldg, line, k);
}

std::optional<int> min_mis_pair(const Cone& cone, const Ldg& ldg, LineId u, LineId v, int k) {
  if (u >= ldg.vertex_count() || v >= ldg.vertex_count())
    throw std::out_of_range("line out of range");
  check_pair_preconditions(ldg, u, v);
  FlowNet net(cone);
  return query_pair(net, ldg, u, v, k);
}

namespace detail {
std::optional<int> min_mis_query(FlowNet& net, const std::vector<Cap>& caps, int k) {
  net.assign_capacities(caps);
  const auto r = net.min_cut_value(k);
  net.reset_capacities();
  return r;
}
} // namespace detail

PrunedLdg prune_ldg_serial(const Cone& cone, const Ldg& ldg, int k, PruneStats* stats) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto start = Clock::now();
  const std::uint32_t n = ldg.vertex_count();
  std::uint64_t queries = 0;

  FlowNet net(cone);
  std::vector<char> deleted(n, 0);
  for (LineId v = 0; v < n; ++v) {
    ++queries;
    if (!query_single(net, ldg, v, k)) deleted[v] = 1;
  }

  std::vector<std::pair<LineId, LineId>> added;
  for (auto [u, v] : candidate_pairs(ldg, deleted)) {
    ++queries;
    if (!query_pair(net, ldg, u, v, k)) added.emplace_back(u, v);
  }

  PrunedLdg out = assemble(ldg, std::move(deleted), std::move(added));
  if (stats) {
    stats->vertices_deleted = n - out.surviving_count();
    stats->edges_added = static_cast<std::uint32_t>(out.added_edges.size());
    stats->flow_queries = queries;
    stats->seconds = seconds_since(start);
  }
  return out;
}

PrunedLdg prune_ldg(const Cone& cone, const Ldg& ldg, int k, PruneStats* stats) {
#ifndef _OPENMP
  return prune_ldg_serial(cone, ldg, k, stats);
#else
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto start = Clock::now();
  const std::uint32_t n = ldg.vertex_count();

  // Verdict arrays are pre-sized so worker scheduling cannot change the
  // result; dl and el are assembled serially afterward.
  std::vector<char> deleted(n, 0);
#pragma omp parallel
  {
    FlowNet net(cone);
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v)
      if (!query_single(net, ldg, static_cast<LineId>(v), k)) deleted[v] = 1;
  }

  const auto pairs = candidate_pairs(ldg, deleted);
  std::vector<char> add(pairs.size(), 0);
#pragma omp parallel
  {
    FlowNet net(cone);
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(pairs.size()); ++i)
      if (!query_pair(net, ldg, pairs[i].first, pairs[i].second, k)) add[i] = 1;
  }

  std::vector<std::pair<LineId, LineId>> added;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (add[i]) added.push_back(pairs[i]);

  PrunedLdg out = assemble(ldg, std::move(deleted), std::move(added));
  if (stats) {
    stats->vertices_deleted = n - out.surviving_count();
    stats->edges_added = static_cast<std::uint32_t>(out.added_edges.size());
    stats->flow_queries = static_cast<std::uint64_t>(n) + pairs.size();
    stats->seconds = seconds_since(start);
  }
  return out;
#endif
}

} // namespace linecut
