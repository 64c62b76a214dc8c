#pragma once

// Test-only helpers: reference implementations that share no code with the
// library, and the graph corpus used by the property suites.

#include "leafbound/graph.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace testing_support {

using leafbound::Edge;
using leafbound::Graph;
using leafbound::VertexId;

/// Graph on vertices 0..n-1 with the listed edges.
Graph graph_of(std::size_t n,
               std::initializer_list<std::pair<VertexId, VertexId>> edges);

/// Maximum leaf count by enumerating every spanning tree (edge subsets of
/// size v-1, acyclicity by union-find). Tiny graphs only.
std::size_t brute_force_max_leaves(const Graph &g);
/// Number of spanning trees, by the same enumeration.
std::size_t brute_force_tree_count(const Graph &g);

/// Definition-level cutpoints and bridges: remove and count components.
std::vector<VertexId> brute_force_cutpoints(const Graph &g);
std::vector<Edge> brute_force_bridges(const Graph &g);
std::size_t component_count(const Graph &g);

struct Named {
  std::string name;
  Graph graph;
};

/// Every connected graph on 2..7 vertices.
std::vector<Named> exhaustive_corpus();
/// 500 seeded connected graphs with 8..30 vertices: sparse, dense, cores
/// with pendant vertices and layered pendant structures.
std::vector<Named> random_corpus();
/// 100 seeded connected cubic graphs with 8..30 vertices.
std::vector<Named> cubic_corpus();

/// Core of minimum degree >= 3 with pendant vertices hung on some of its
/// vertices.
Graph core_with_pendants(std::size_t core, std::size_t extra_edges,
                         std::size_t pendants, std::uint64_t seed);

/// Pendant structure the reductions cannot touch: `hubs` vertices of high
/// degree, each joined to every one of `spokes` degree-3 or degree-4
/// vertices carrying one pendant each.
Graph layered_pendants(std::size_t hubs, std::size_t spokes);

/// Several clusters of two high-degree hubs sharing spokes with one pendant
/// each, tied together only through extra vertices adjacent to hubs, so that
/// the pendant core splits into more than one component.
Graph clustered_hubs(std::uint64_t seed);

} // namespace testing_support
