#include "leafbound/graph.hpp"

#include "leafbound/errors.hpp"

#include <algorithm>
#include <string>

namespace leafbound {

namespace {

void insert_sorted(std::vector<VertexId> &xs, VertexId x) {
  xs.insert(std::lower_bound(xs.begin(), xs.end(), x), x);
}

void erase_sorted(std::vector<VertexId> &xs, VertexId x) {
  auto it = std::lower_bound(xs.begin(), xs.end(), x);
  if (it != xs.end() && *it == x)
    xs.erase(it);
}

} // namespace

Graph::Graph(std::size_t n)
    : adj_(n), provenance_(n), alive_(n, true), vertex_count_(n) {
  for (std::size_t i = 0; i < n; ++i)
    provenance_[i] = {static_cast<VertexId>(i)};
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge &e : edges)
    g.add_edge(e.u, e.v);
  return g;
}

VertexId Graph::add_vertex(std::vector<VertexId> provenance) {
  auto id = static_cast<VertexId>(alive_.size());
  std::sort(provenance.begin(), provenance.end());
  adj_.emplace_back();
  provenance_.push_back(std::move(provenance));
  alive_.push_back(true);
  ++vertex_count_;
  return id;
}

void Graph::require(VertexId x) const {
  if (!contains(x))
    throw InputError("unknown vertex " + std::to_string(x));
}

void Graph::add_edge(VertexId a, VertexId b) {
  require(a);
  require(b);
  if (a == b)
    throw InputError("self-loop at vertex " + std::to_string(a));
  if (adjacent(a, b))
    throw InputError("repeated edge " + std::to_string(a) + "-" +
                     std::to_string(b));
  insert_sorted(adj_[a], b);
  insert_sorted(adj_[b], a);
  ++edge_count_;
}

void Graph::remove_edge(VertexId a, VertexId b) {
  require(a);
  require(b);
  if (!adjacent(a, b))
    throw InputError("missing edge " + std::to_string(a) + "-" +
                     std::to_string(b));
  erase_sorted(adj_[a], b);
  erase_sorted(adj_[b], a);
  --edge_count_;
}

void Graph::remove_vertex(VertexId x) {
  require(x);
  for (VertexId y : adj_[x])
    erase_sorted(adj_[y], x);
  edge_count_ -= adj_[x].size();
  adj_[x].clear();
  provenance_[x].clear();
  alive_[x] = false;
  --vertex_count_;
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  if (!contains(a) || !contains(b))
    return false;
  const auto &xs = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  VertexId other = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::binary_search(xs.begin(), xs.end(), other);
}

std::size_t Graph::degree(VertexId x) const {
  require(x);
  return adj_[x].size();
}

const std::vector<VertexId> &Graph::neighbors(VertexId x) const {
  require(x);
  return adj_[x];
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertex_count_);
  for (std::size_t i = 0; i < alive_.size(); ++i)
    if (alive_[i])
      out.push_back(static_cast<VertexId>(i));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < alive_.size(); ++i) {
    if (!alive_[i])
      continue;
    for (VertexId j : adj_[i])
      if (j > i)
        out.emplace_back(static_cast<VertexId>(i), j);
  }
  return out;
}

const std::vector<VertexId> &Graph::provenance(VertexId x) const {
  require(x);
  return provenance_[x];
}

std::size_t degree(const Graph &g, VertexId v) { return g.degree(v); }

Graph delete_edges(const Graph &g, std::span<const Edge> edges) {
  Graph out = g;
  for (const Edge &e : edges)
    out.remove_edge(e.u, e.v);
  return out;
}

Graph delete_vertices(const Graph &g, std::span<const VertexId> vertices) {
  Graph out = g;
  for (VertexId x : vertices)
    out.remove_vertex(x);
  return out;
}

std::pair<Graph, VertexId> contract_edge(const Graph &g, Edge e) {
  if (!g.adjacent(e.u, e.v))
    throw InputError("cannot contract missing edge " + std::to_string(e.u) +
                     "-" + std::to_string(e.v));
  std::vector<VertexId> prov = g.provenance(e.u);
  const auto &pv = g.provenance(e.v);
  prov.insert(prov.end(), pv.begin(), pv.end());

  std::vector<VertexId> nbrs;
  std::set_union(g.neighbors(e.u).begin(), g.neighbors(e.u).end(),
                 g.neighbors(e.v).begin(), g.neighbors(e.v).end(),
                 std::back_inserter(nbrs));

  Graph out = g;
  out.remove_vertex(e.u);
  out.remove_vertex(e.v);
  VertexId merged = out.add_vertex(std::move(prov));
  for (VertexId y : nbrs)
    if (y != e.u && y != e.v)
      out.add_edge(merged, y);
  return {std::move(out), merged};
}

Graph induced_subgraph(const Graph &g, std::span<const VertexId> keep) {
  std::vector<bool> kept(g.id_bound(), false);
  for (VertexId x : keep) {
    if (!g.contains(x))
      throw InputError("unknown vertex " + std::to_string(x));
    kept[x] = true;
  }
  std::vector<VertexId> drop;
  for (VertexId x : g.vertices())
    if (!kept[x])
      drop.push_back(x);
  return delete_vertices(g, drop);
}

std::vector<VertexId> component_of(const Graph &g, VertexId start) {
  if (!g.contains(start))
    throw InputError("unknown vertex " + std::to_string(start));
  std::vector<bool> seen(g.id_bound(), false);
  std::vector<VertexId> stack{start}, out;
  seen[start] = true;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (VertexId y : g.neighbors(x))
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const Graph &g) {
  std::vector<bool> seen(g.id_bound(), false);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s : g.vertices()) {
    if (seen[s])
      continue;
    auto comp = component_of(g, s);
    for (VertexId x : comp)
      seen[x] = true;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph &g) {
  if (g.vertex_count() == 0)
    return true;
  return component_of(g, g.vertices().front()).size() == g.vertex_count();
}

namespace {

struct LowpointResult {
  std::vector<VertexId> cutpoints;
  std::vector<Edge> bridges;
};

// Iterative Hopcroft-Tarjan lowpoint DFS over every component.
LowpointResult lowpoint(const Graph &g) {
  constexpr std::uint32_t unvisited = 0;
  const std::size_t n = g.id_bound();
  std::vector<std::uint32_t> disc(n, unvisited), low(n, 0);
  std::vector<bool> is_cut(n, false);
  LowpointResult out;
  std::uint32_t timer = 0;

  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
    std::size_t children;
  };
  std::vector<Frame> stack;

  for (VertexId root : g.vertices()) {
    if (disc[root] != unvisited)
      continue;
    disc[root] = low[root] = ++timer;
    stack.push_back({root, root, 0, 0});
    while (!stack.empty()) {
      Frame &f = stack.back();
      const auto &nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        VertexId w = nb[f.next++];
        if (disc[w] == unvisited) {
          ++f.children;
          disc[w] = low[w] = ++timer;
          stack.push_back({w, f.v, 0, 0});
        } else if (w != f.parent || f.v == root) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2)
          is_cut[done.v] = true;
        continue;
      }
      VertexId p = done.parent;
      low[p] = std::min(low[p], low[done.v]);
      if (low[done.v] > disc[p])
        out.bridges.emplace_back(p, done.v);
      if (p != root && low[done.v] >= disc[p])
        is_cut[p] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (is_cut[i])
      out.cutpoints.push_back(static_cast<VertexId>(i));
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

} // namespace

std::vector<VertexId> cutpoints(const Graph &g) { return lowpoint(g).cutpoints; }

std::vector<Edge> bridges(const Graph &g) { return lowpoint(g).bridges; }

bool is_cutpoint(const Graph &g, VertexId v) {
  auto cps = cutpoints(g);
  return std::binary_search(cps.begin(), cps.end(), v);
}

bool is_bridge(const Graph &g, Edge e) {
  auto bs = bridges(g);
  return std::binary_search(bs.begin(), bs.end(), e);
}

bool is_biconnected(const Graph &g) {
  if (g.vertex_count() < 2)
    throw InputError("biconnectivity needs at least two vertices");
  return is_connected(g) && cutpoints(g).empty();
}

} // namespace leafbound
