#pragma once

#include "leafbound/graph.hpp"
#include "leafbound/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace leafbound {

/// c_G(x): 1/3 for degree >= 4, 1/4 for degree 1 or 3, 0 otherwise.
Rational cost_of_degree(std::size_t degree);
Rational vertex_cost(const Graph &g, VertexId v);
Rational graph_cost(const Graph &g);
/// Sum of vertex costs measured in g (not in the induced subgraph).
Rational subgraph_cost(const Graph &g, std::span<const VertexId> vertices);

inline bool in_s(std::size_t degree) { return degree == 1 || degree == 3; }
inline bool in_t(std::size_t degree) { return degree >= 4; }

/// Degree classes that drive the case analysis. All lists ascending.
struct DegreeClasses {
  std::vector<VertexId> s; // degree 1 or 3
  std::vector<VertexId> t; // degree >= 4
  std::vector<VertexId> u; // pendant vertices
  std::vector<VertexId> w; // neighbours of pendants
  std::vector<VertexId> x; // neighbours of W outside U and W
  std::vector<VertexId> y; // neighbours of X outside W

  bool in_u(VertexId v) const;
  bool in_w(VertexId v) const;
  bool in_x(VertexId v) const;
  bool in_y(VertexId v) const;
};

DegreeClasses classify(const Graph &g);

struct BoundReport {
  std::size_t s = 0;
  std::size_t t = 0;
  Rational cost;
  Rational bound; // cost + 3/2
  std::int64_t min_leaves = 0;
};

/// Throws InputError unless g is connected with at least two vertices.
BoundReport bound_report(const Graph &g);

/// t/3 + s/4 + 3/2.
Rational leaf_bound(std::size_t s, std::size_t t);

} // namespace leafbound
