#pragma once

#include "leafbound/graph.hpp"

#include <string>

namespace leafbound {

struct TreeCheck {
  std::size_t leaves = 0;
  bool ok = false;
  std::string reason; // empty when ok
};

/// Independent verifier: ok iff the edges are graph edges and form a single
/// acyclic component covering every vertex of g.
TreeCheck check_tree(const Graph &g, const SpanningForest &tree);

/// Number of vertices of degree 1 in the edge set.
std::size_t leaf_count(const SpanningForest &forest);

/// Sorts and counts components over the touched vertices.
SpanningForest make_forest(std::vector<Edge> edges);

} // namespace leafbound
