#include "leafbound/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace leafbound {

namespace {

struct DisjointSets {
  std::map<VertexId, VertexId> parent;

  VertexId find(VertexId x) {
    auto it = parent.try_emplace(x, x).first;
    if (it->second == x)
      return x;
    VertexId root = find(it->second);
    parent[x] = root;
    return root;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

} // namespace

std::size_t leaf_count(const SpanningForest &forest) {
  std::map<VertexId, std::size_t> deg;
  for (const Edge &e : forest.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return static_cast<std::size_t>(std::count_if(
      deg.begin(), deg.end(), [](const auto &kv) { return kv.second == 1; }));
}

SpanningForest make_forest(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  DisjointSets ds;
  std::size_t touched = 0;
  for (const Edge &e : edges) {
    for (VertexId x : {e.u, e.v})
      if (!ds.parent.count(x)) {
        ds.parent[x] = x;
        ++touched;
      }
  }
  std::size_t merges = 0;
  for (const Edge &e : edges)
    merges += ds.unite(e.u, e.v);
  return {std::move(edges), touched - merges};
}

TreeCheck check_tree(const Graph &g, const SpanningForest &tree) {
  TreeCheck out;
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    out.reason = "empty graph";
    return out;
  }
  if (tree.edges.size() + 1 != n) {
    out.reason = "expected " + std::to_string(n - 1) + " edges, got " +
                 std::to_string(tree.edges.size());
    return out;
  }
  DisjointSets ds;
  for (const Edge &e : tree.edges) {
    if (!g.adjacent(e.u, e.v)) {
      out.reason = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                   " is not a graph edge";
      return out;
    }
    if (!ds.unite(e.u, e.v)) {
      out.reason = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                   " closes a cycle";
      return out;
    }
  }
  // n-1 acyclic edges over graph vertices: a single component iff every
  // vertex is touched (or the graph is a single vertex).
  std::vector<std::size_t> deg(g.id_bound(), 0);
  for (const Edge &e : tree.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (VertexId v : g.vertices())
    if (n > 1 && deg[v] == 0) {
      out.reason = "vertex " + std::to_string(v) + " is not covered";
      return out;
    }
  out.leaves = static_cast<std::size_t>(
      std::count(deg.begin(), deg.end(), std::size_t{1}));
  out.ok = true;
  return out;
}

} // namespace leafbound
