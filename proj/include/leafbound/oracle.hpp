#pragma once

#include "leafbound/graph.hpp"

#include <cstdint>

namespace leafbound {

/// Largest number of candidate vertex sets the oracle may examine.
inline constexpr std::uint64_t default_oracle_budget = std::uint64_t{1} << 24;

/// Largest subproblem the solver hands to the exact search when the
/// constructive argument has no move left.
inline constexpr std::size_t exact_fallback_limit = 12;

struct OracleResult {
  std::size_t u = 0;      // maximum leaf count over all spanning trees
  SpanningForest witness; // a spanning tree with u leaves
  std::uint64_t explored = 0;
};

/// Exact u(g) for small connected graphs.
///
/// For v(g) >= 3 the internal vertices of a spanning tree form a connected
/// dominating set and vice versa, so u = v - (smallest connected dominating
/// set). Cutpoints are internal in every spanning tree, so only supersets of
/// the cutpoint set are scanned. Throws BudgetError if there are more than
/// `budget` such supersets, InputError for disconnected graphs, fewer than
/// two vertices or more than 64 vertices.
///
/// This version splits the scan across OpenMP threads; the witness is the
/// same as the serial one (smallest set, then smallest bitmask).
OracleResult max_leaf_exact(const Graph &g,
                            std::uint64_t budget = default_oracle_budget);

/// Single-threaded reference scan, by increasing set size.
OracleResult max_leaf_exact_serial(const Graph &g,
                                   std::uint64_t budget = default_oracle_budget);

/// True iff max_leaf_exact(g).u >= c(g) + 3/2.
bool max_leaf_lower_bound_check(const Graph &g,
                                std::uint64_t budget = default_oracle_budget);

} // namespace leafbound
