#pragma once

#include "leafbound/graph.hpp"

#include <cstdint>
#include <vector>

namespace leafbound {

/// Nine vertices, three each of degree 1, 3 and 4, with u = c + 3/2 = 4.
/// Vertices 0-2 form a triangle, 3-5 hang between consecutive triangle
/// vertices, 6-8 are pendants on 3-5.
Graph gadget();

/// Joins g1 and g2 at pendant vertices x1 and x2: both pendants disappear
/// and their neighbours become adjacent. Result ids are dense: g1's
/// remaining vertices in ascending order, then g2's.
Graph glue(const Graph &g1, VertexId x1, const Graph &g2, VertexId x2);

/// k gadgets glued left to right (highest pendant of the chain so far with
/// the lowest pendant of the next gadget).
Graph chain(int k);

/// Connected simple graph with n vertices, m edges and minimum degree at
/// least `min_degree`; deterministic per seed. Throws InputError when the
/// combination is infeasible.
Graph random_graph(std::size_t n, std::size_t m, std::size_t min_degree,
                   std::uint64_t seed);

/// Connected 3-regular graph on n vertices (n even, n >= 4).
Graph random_cubic(std::size_t n, std::uint64_t seed);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph petersen_graph();

/// Every connected simple graph on n vertices up to isomorphism, 1 <= n <= 7.
std::vector<Graph> all_connected_graphs(std::size_t n);

/// Relabels the vertices of g with ids[v] for each vertex v (dense ids).
Graph relabel(const Graph &g, const std::vector<VertexId> &ids);

/// Copy of g with ids 0..v-1 assigned in ascending order of the old ids.
Graph compact(const Graph &g);

} // namespace leafbound
