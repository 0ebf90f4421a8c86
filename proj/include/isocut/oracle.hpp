#pragma once

#include <cstdint>
#include <string>

#include "isocut/closedform.hpp"
#include "isocut/graphs.hpp"
#include "isocut/vertex_set.hpp"

// Exhaustive ground truth on small graphs. Work is split into chunks keyed
// by the least vertex of the enumerated set (and its first extension), run
// on a pool of worker threads and folded by a min-reduction whose ties go
// to the lexicographically least witness, so results do not depend on the
// thread count.

namespace isocut {

std::uint32_t default_parallelism();

struct OracleBudget {
  std::uint64_t max_subsets = 4'000'000'000;
  std::uint64_t max_vertices = 64;
  /// Worker threads.
  std::uint32_t parallel_chunks = default_parallelism();

  /// Throws DomainError unless every field is positive.
  void validate() const;
};

struct EnumerationStats {
  std::uint64_t subsets_visited = 0;
  double wall_seconds = 0.0;
  std::uint32_t threads = 1;
  std::string kernel; // census kernel variant used, empty when none
};

struct FragmentResult {
  std::uint64_t optimum = 0;
  VertexSet witness;          // lexicographically least optimal set
  std::uint64_t atom_size = 0; // least |X| over optimal sets X
  EnumerationStats stats;
};

/// min |[U, U']| over all m-subsets U. 1 <= m <= floor(N/2).
FragmentResult brute_beta(const Graph& graph, std::uint64_t m, const OracleBudget& budget = {});

/// Same with G[U] connected.
FragmentResult brute_xi_e(const Graph& graph, std::uint64_t m, const OracleBudget& budget = {});

/// Same with G[U] and G[U'] connected.
FragmentResult brute_xi(const Graph& graph, std::uint64_t m, const OracleBudget& budget = {});

/// min over h <= m <= floor(N/2) of brute_xi; the witness and atom come from
/// the least achieving m.
FragmentResult brute_lambda_h(const Graph& graph, std::uint64_t h,
                              const OracleBudget& budget = {});

/// Minimum two-part cut whose sides both satisfy the condition:
///   extra(h)          both sides connected, both sizes >= h
///   isoperimetric(h)  both sizes >= h, no connectivity requirement
///   cyclic            both sides connected and containing a cycle
///   super(k)          both sides connected, induced minimum degree >= k
///   average(k)        both sides connected, induced average degree >= k
///   embedded(t)       both sides connected, each containing all vertices of
///                     some t-dimensional sub-layer (Hamming graphs only)
/// Throws InfeasibleResult when no bipartition qualifies, UnsupportedError
/// for embedded(t) on a graph not labelled hamming(L,n).
FragmentResult brute_conditional(const Graph& graph, const ConditionKind& cond,
                                 const OracleBudget& budget = {});

/// True iff no partition of V into three or more connected parts, each
/// satisfying the condition, cuts at most as many edges as the optimum of
/// brute_conditional. Always true for isoperimetric(h), whose cuts are
/// two-part by definition.
bool bipartite_property_check(const Graph& graph, const ConditionKind& cond,
                              const OracleBudget& budget = {});

} // namespace isocut
