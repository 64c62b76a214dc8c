#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace leafbound {

using VertexId = std::uint32_t;

// Undirected edge stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return x == u || x == v; }

  friend auto operator<=>(const Edge &, const Edge &) = default;
  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Simple undirected graph with stable vertex ids.
///
/// Ids are dense integers handed out in increasing order and never reused:
/// deleting a vertex leaves a hole, contracting an edge allocates a fresh id.
/// Every vertex carries the set of root-instance vertices it stands for, so
/// trees found on a reduced graph can be expanded back.
class Graph {
public:
  Graph() = default;

  /// Vertices 0..n-1, no edges, provenance {i} for vertex i.
  explicit Graph(std::size_t n);

  /// Throws InputError on loops, repeated edges or ids >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  /// Allocates a fresh id with the given provenance.
  VertexId add_vertex(std::vector<VertexId> provenance = {});
  void add_edge(VertexId a, VertexId b);
  void remove_edge(VertexId a, VertexId b);
  void remove_vertex(VertexId x);

  bool contains(VertexId x) const {
    return x < alive_.size() && alive_[x];
  }
  bool adjacent(VertexId a, VertexId b) const;

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }
  /// One past the largest id ever allocated.
  std::size_t id_bound() const { return alive_.size(); }

  std::size_t degree(VertexId x) const;
  /// Sorted ascending.
  const std::vector<VertexId> &neighbors(VertexId x) const;
  /// Ascending list of live ids.
  std::vector<VertexId> vertices() const;
  /// Sorted list of edges.
  std::vector<Edge> edges() const;

  const std::vector<VertexId> &provenance(VertexId x) const;

private:
  void require(VertexId x) const;

  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<VertexId>> provenance_;
  std::vector<bool> alive_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
};

/// Edge set of a forest over a graph's vertices. A spanning tree is the
/// special case of a single component covering every vertex.
struct SpanningForest {
  std::vector<Edge> edges;
  std::size_t components = 0;

  friend bool operator==(const SpanningForest &, const SpanningForest &) =
      default;
};

// Pure operations. None of them modify their input.

std::size_t degree(const Graph &g, VertexId v);
Graph delete_edges(const Graph &g, std::span<const Edge> edges);
Graph delete_vertices(const Graph &g, std::span<const VertexId> vertices);
/// Merges the ends of e into a fresh vertex; returns the new graph and id.
std::pair<Graph, VertexId> contract_edge(const Graph &g, Edge e);
/// Subgraph induced by the given vertices (other ids become holes).
Graph induced_subgraph(const Graph &g, std::span<const VertexId> keep);

/// Components as ascending vertex lists, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph &g);
bool is_connected(const Graph &g);
/// The component containing `start`, ascending.
std::vector<VertexId> component_of(const Graph &g, VertexId start);

/// Articulation points, ascending (iterative lowpoint DFS).
std::vector<VertexId> cutpoints(const Graph &g);
/// Bridges, sorted.
std::vector<Edge> bridges(const Graph &g);
bool is_cutpoint(const Graph &g, VertexId v);
bool is_bridge(const Graph &g, Edge e);
/// Connected without cutpoints. K2 counts as biconnected. Needs v(g) >= 2.
bool is_biconnected(const Graph &g);

} // namespace leafbound
