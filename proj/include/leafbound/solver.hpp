#pragma once

#include "leafbound/certificate.hpp"
#include "leafbound/graph.hpp"
#include "leafbound/tree.hpp"

namespace leafbound {

struct SolveOptions {
  /// Re-check the final tree independently and mark the certificate
  /// verified. Lifts and growth steps are checked regardless.
  bool verify = true;
};

/// Spanning tree of a connected graph with at least c(G) + 3/2 leaves.
/// Throws InputError for disconnected graphs or fewer than two vertices and
/// InvariantError if any step of the construction breaks its contract.
Certificate solve(const Graph &g, const SolveOptions &options = {});

/// True iff solving g again reproduces the certificate's summary, trace and
/// tree exactly. Never throws.
bool replay(const Certificate &cert, const Graph &g);

} // namespace leafbound
