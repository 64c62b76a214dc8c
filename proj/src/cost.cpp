#include "leafbound/cost.hpp"

#include "leafbound/errors.hpp"

#include <algorithm>

namespace leafbound {

Rational parse_rational(const std::string &text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
  } catch (const std::exception &) {
    throw InputError("malformed rational '" + text + "'");
  }
}

Rational cost_of_degree(std::size_t degree) {
  if (in_t(degree))
    return Rational(1, 3);
  if (in_s(degree))
    return Rational(1, 4);
  return Rational(0);
}

Rational vertex_cost(const Graph &g, VertexId v) {
  return cost_of_degree(g.degree(v));
}

Rational graph_cost(const Graph &g) {
  std::size_t s = 0, t = 0;
  for (VertexId v : g.vertices()) {
    std::size_t d = g.degree(v);
    s += in_s(d);
    t += in_t(d);
  }
  return Rational(static_cast<std::int64_t>(t), 3) +
         Rational(static_cast<std::int64_t>(s), 4);
}

Rational subgraph_cost(const Graph &g, std::span<const VertexId> vertices) {
  Rational sum(0);
  for (VertexId v : vertices)
    sum += vertex_cost(g, v);
  return sum;
}

namespace {
bool has(const std::vector<VertexId> &xs, VertexId v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}
} // namespace

bool DegreeClasses::in_u(VertexId v) const { return has(u, v); }
bool DegreeClasses::in_w(VertexId v) const { return has(w, v); }
bool DegreeClasses::in_x(VertexId v) const { return has(x, v); }
bool DegreeClasses::in_y(VertexId v) const { return has(y, v); }

DegreeClasses classify(const Graph &g) {
  DegreeClasses c;
  const std::size_t n = g.id_bound();
  std::vector<char> is_u(n, 0), is_w(n, 0), is_x(n, 0), is_y(n, 0);
  for (VertexId v : g.vertices()) {
    std::size_t d = g.degree(v);
    if (in_s(d))
      c.s.push_back(v);
    if (in_t(d))
      c.t.push_back(v);
    if (d == 1)
      is_u[v] = 1;
  }
  for (VertexId v : g.vertices())
    if (is_u[v])
      for (VertexId nb : g.neighbors(v))
        is_w[nb] = 1;
  for (VertexId v : g.vertices())
    if (is_w[v])
      for (VertexId nb : g.neighbors(v))
        if (!is_u[nb] && !is_w[nb])
          is_x[nb] = 1;
  for (VertexId v : g.vertices())
    if (is_x[v])
      for (VertexId nb : g.neighbors(v))
        if (!is_w[nb])
          is_y[nb] = 1;
  for (VertexId v : g.vertices()) {
    if (is_u[v])
      c.u.push_back(v);
    if (is_w[v])
      c.w.push_back(v);
    if (is_x[v])
      c.x.push_back(v);
    if (is_y[v])
      c.y.push_back(v);
  }
  return c;
}

Rational leaf_bound(std::size_t s, std::size_t t) {
  return Rational(static_cast<std::int64_t>(t), 3) +
         Rational(static_cast<std::int64_t>(s), 4) + Rational(3, 2);
}

BoundReport bound_report(const Graph &g) {
  if (g.vertex_count() < 2)
    throw InputError("bound needs a graph with at least two vertices");
  if (!is_connected(g))
    throw InputError("bound needs a connected graph");
  BoundReport r;
  for (VertexId v : g.vertices()) {
    std::size_t d = g.degree(v);
    r.s += in_s(d);
    r.t += in_t(d);
  }
  r.cost = Rational(static_cast<std::int64_t>(r.t), 3) +
           Rational(static_cast<std::int64_t>(r.s), 4);
  r.bound = r.cost + Rational(3, 2);
  r.min_leaves = ceil(r.bound);
  return r;
}

} // namespace leafbound
