#include "leafbound/leaf_path.hpp"

#include "leafbound/errors.hpp"

#include <algorithm>
#include <string>

namespace leafbound {

std::vector<Edge> LeafPath::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < vertices.size(); ++i)
    out.emplace_back(vertices[i - 1], vertices[i]);
  return out;
}

LeafPath grow_leaf_path(const Graph &g, VertexId start, VertexId first,
                        VertexId excluded, VertexId avoid,
                        std::span<const VertexId> stop_set) {
  if (!g.adjacent(start, first))
    throw InvariantError("leaf path: start edge is not a graph edge");
  const std::vector<VertexId> excluded_one{excluded};
  Graph rest = delete_vertices(g, excluded_one);
  if (!is_connected(rest))
    throw InvariantError("leaf path: graph minus the excluded vertex is "
                         "disconnected");
  if (is_bridge(rest, Edge(start, first)))
    throw InvariantError("leaf path: start edge " + std::to_string(start) +
                         "-" + std::to_string(first) + " is a bridge");

  auto terminal = [&](VertexId q) {
    if (std::find(stop_set.begin(), stop_set.end(), q) != stop_set.end())
      return true;
    return g.degree(q) != 3 && !g.adjacent(q, excluded);
  };

  LeafPath path;
  path.vertices = {start, first};
  rest.remove_edge(start, first);

  for (std::size_t guard = 0; guard <= g.vertex_count(); ++guard) {
    VertexId t = path.end();
    if (terminal(t)) {
      path.outcome = PathOutcome::Full;
      return path;
    }
    if (g.degree(t) != 3)
      throw InvariantError("leaf path: inner vertex " + std::to_string(t) +
                           " does not have degree 3");
    VertexId prev = path.before_end();
    std::vector<VertexId> options;
    for (VertexId v : rest.neighbors(t))
      if (v != prev && v != avoid)
        options.push_back(v);
    if (options.empty())
      throw InvariantError("leaf path: no extension from " +
                           std::to_string(t));
    auto cut = bridges(rest);
    auto next = std::find_if(options.begin(), options.end(), [&](VertexId v) {
      return !std::binary_search(cut.begin(), cut.end(), Edge(t, v));
    });
    if (next == options.end()) {
      path.outcome = PathOutcome::Early;
      return path;
    }
    if (std::find(path.vertices.begin(), path.vertices.end(), *next) !=
        path.vertices.end())
      throw InvariantError("leaf path: extension revisits a path vertex");
    path.vertices.push_back(*next);
    rest.remove_edge(t, *next);
    if (!is_connected(rest))
      throw InvariantError("leaf path: removing path edges disconnected the "
                           "graph");
  }
  throw InvariantError("leaf path: growth exceeded v(g) iterations");
}

} // namespace leafbound
