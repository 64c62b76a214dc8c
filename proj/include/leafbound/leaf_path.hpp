#pragma once

#include "leafbound/graph.hpp"

#include <span>
#include <vector>

namespace leafbound {

enum class PathOutcome {
  Full,  // reached a terminal vertex
  Early, // every extension from the end is a bridge of g - E(P) - excluded
};

struct LeafPath {
  std::vector<VertexId> vertices; // start, first, ..., end
  PathOutcome outcome = PathOutcome::Full;

  VertexId end() const { return vertices.back(); }
  /// The vertex before the end (t' when the growth stopped early).
  VertexId before_end() const { return vertices[vertices.size() - 2]; }
  std::vector<Edge> edges() const;
};

/// Grows a simple path from `start` through `first`, keeping
/// g - E(P) - excluded connected.
///
/// A vertex q ends the path when it lies in `stop_set`, or when its degree
/// is not 3 and it is not a neighbour of `excluded`. Otherwise q has degree
/// 3 and the path tries to continue through a neighbour other than its
/// predecessor, `excluded` and `avoid`, preferring a non-bridge extension
/// (lowest id). If every extension is a bridge of g - E(P) - excluded the
/// growth stops with outcome Early.
///
/// Throws InvariantError if (start, first) is a bridge of g - excluded, if a
/// non-terminal end does not have degree 3, or if the loop runs more than
/// v(g) times.
LeafPath grow_leaf_path(const Graph &g, VertexId start, VertexId first,
                        VertexId excluded, VertexId avoid,
                        std::span<const VertexId> stop_set);

} // namespace leafbound
