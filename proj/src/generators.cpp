#include "leafbound/generators.hpp"

#include "leafbound/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace leafbound {

Graph gadget() {
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}};
  for (VertexId i = 0; i < 3; ++i) {
    edges.emplace_back(i, 3 + i);
    edges.emplace_back(3 + i, (i + 1) % 3);
    edges.emplace_back(3 + i, 6 + i);
  }
  return Graph::from_edges(9, edges);
}

Graph compact(const Graph &g) {
  std::vector<VertexId> index(g.id_bound(), 0);
  VertexId next = 0;
  for (VertexId v : g.vertices())
    index[v] = next++;
  std::vector<Edge> edges;
  for (const Edge &e : g.edges())
    edges.emplace_back(index[e.u], index[e.v]);
  return Graph::from_edges(g.vertex_count(), edges);
}

Graph glue(const Graph &g1, VertexId x1, const Graph &g2, VertexId x2) {
  if (g1.vertex_count() <= 2 || g2.vertex_count() <= 2)
    throw InputError("glue needs graphs with more than two vertices");
  if (g1.degree(x1) != 1 || g2.degree(x2) != 1)
    throw InputError("glue needs pendant vertices");

  std::vector<VertexId> index1(g1.id_bound()), index2(g2.id_bound());
  VertexId next = 0;
  for (VertexId v : g1.vertices())
    if (v != x1)
      index1[v] = next++;
  for (VertexId v : g2.vertices())
    if (v != x2)
      index2[v] = next++;

  std::vector<Edge> edges;
  for (const Edge &e : g1.edges())
    if (!e.touches(x1))
      edges.emplace_back(index1[e.u], index1[e.v]);
  for (const Edge &e : g2.edges())
    if (!e.touches(x2))
      edges.emplace_back(index2[e.u], index2[e.v]);
  edges.emplace_back(index1[g1.neighbors(x1).front()],
                     index2[g2.neighbors(x2).front()]);
  return Graph::from_edges(next, edges);
}

Graph chain(int k) {
  if (k < 1)
    throw InputError("chain length must be at least 1");
  Graph out = gadget();
  const Graph piece = gadget();
  for (int i = 1; i < k; ++i) {
    VertexId last = 0;
    for (VertexId v : out.vertices())
      if (out.degree(v) == 1)
        last = v;
    out = glue(out, last, piece, 6);
  }
  return out;
}

Graph random_graph(std::size_t n, std::size_t m, std::size_t min_degree,
                   std::uint64_t seed) {
  if (n < 2)
    throw InputError("random graph needs at least two vertices");
  if (m + 1 < n || m > n * (n - 1) / 2)
    throw InputError("no connected simple graph has " + std::to_string(n) +
                     " vertices and " + std::to_string(m) + " edges");
  if (min_degree >= n || min_degree * n > 2 * m)
    throw InputError("minimum degree " + std::to_string(min_degree) +
                     " is infeasible with " + std::to_string(m) + " edges");

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Graph g(n);
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, i - 1);
      g.add_edge(order[i], order[pick(rng)]);
    }

    // Raise low degrees, pairing deficient vertices where possible.
    bool ok = true;
    while (ok) {
      std::vector<VertexId> low;
      for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) < min_degree)
          low.push_back(v);
      if (low.empty())
        break;
      if (g.edge_count() >= m) {
        ok = false;
        break;
      }
      VertexId a = low[std::uniform_int_distribution<std::size_t>(
          0, low.size() - 1)(rng)];
      std::vector<VertexId> mates;
      for (VertexId b : low)
        if (b != a && !g.adjacent(a, b))
          mates.push_back(b);
      if (mates.empty())
        for (VertexId b = 0; b < n; ++b)
          if (b != a && !g.adjacent(a, b))
            mates.push_back(b);
      if (mates.empty()) {
        ok = false;
        break;
      }
      g.add_edge(a, mates[std::uniform_int_distribution<std::size_t>(
                           0, mates.size() - 1)(rng)]);
    }
    if (!ok)
      continue;

    std::uniform_int_distribution<VertexId> any(0, static_cast<VertexId>(n - 1));
    while (g.edge_count() < m) {
      VertexId a = any(rng), b = any(rng);
      if (a != b && !g.adjacent(a, b))
        g.add_edge(a, b);
    }
    return g;
  }
  throw InputError("could not generate a graph with n=" + std::to_string(n) +
                   " m=" + std::to_string(m) +
                   " min_degree=" + std::to_string(min_degree));
}

Graph random_cubic(std::size_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw InputError("cubic graphs need an even number of vertices >= 4");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> stubs;
  for (VertexId v = 0; v < n; ++v)
    stubs.insert(stubs.end(), 3, v);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    Graph g(n);
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      VertexId a = stubs[i], b = stubs[i + 1];
      if (a == b || g.adjacent(a, b))
        simple = false;
      else
        g.add_edge(a, b);
    }
    if (simple && is_connected(g))
      return g;
  }
  throw InputError("could not generate a connected cubic graph on " +
                   std::to_string(n) + " vertices");
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (VertexId i = 1; i < n; ++i)
    g.add_edge(i - 1, i);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3)
    throw InputError("a cycle needs at least three vertices");
  Graph g = path_graph(n);
  g.add_edge(0, static_cast<VertexId>(n - 1));
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      g.add_edge(a, b);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (VertexId i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph relabel(const Graph &g, const std::vector<VertexId> &ids) {
  if (ids.size() != g.id_bound())
    throw InputError("relabelling needs one id per vertex");
  std::vector<Edge> edges;
  for (const Edge &e : g.edges())
    edges.emplace_back(ids[e.u], ids[e.v]);
  return Graph::from_edges(g.id_bound(), edges);
}

namespace {

using Code = std::uint32_t;

// Bit index of pair (a, b), a < b, in the upper triangle of an n <= 8 matrix.
int pair_bit(int a, int b) { return b * (b - 1) / 2 + a; }

// Smallest adjacency code over all vertex orders that list vertices by
// ascending degree. Isomorphic graphs get the same code.
Code canonical_code(int n, const std::vector<std::uint8_t> &adj) {
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v)
    deg[v] = std::popcount(static_cast<unsigned>(adj[v]));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return deg[a] < deg[b]; });

  // Degree blocks; every permutation inside the blocks is tried.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg[order[j]] == deg[order[i]])
      ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  Code best = ~Code{0};
  std::function<void(std::size_t)> walk = [&](std::size_t block) {
    if (block == blocks.size()) {
      Code code = 0;
      for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a)
          if (adj[order[a]] >> order[b] & 1)
            code |= Code{1} << pair_bit(a, b);
      best = std::min(best, code);
      return;
    }
    auto [lo, hi] = blocks[block];
    std::sort(order.begin() + lo, order.begin() + hi);
    do
      walk(block + 1);
    while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  walk(0);
  return best;
}

std::vector<std::uint8_t> decode(int n, Code code) {
  std::vector<std::uint8_t> adj(n, 0);
  for (int b = 1; b < n; ++b)
    for (int a = 0; a < b; ++a)
      if (code >> pair_bit(a, b) & 1) {
        adj[a] |= static_cast<std::uint8_t>(1u << b);
        adj[b] |= static_cast<std::uint8_t>(1u << a);
      }
  return adj;
}

} // namespace

std::vector<Graph> all_connected_graphs(std::size_t n) {
  if (n < 1 || n > 7)
    throw InputError("exhaustive generation supports 1..7 vertices");
  // Every connected graph has a vertex whose removal keeps it connected,
  // so adding a vertex with every non-empty neighbourhood to the graphs on
  // n - 1 vertices reaches all of them.
  std::set<Code> level{0};
  for (int size = 2; size <= static_cast<int>(n); ++size) {
    std::set<Code> next;
    for (Code code : level) {
      auto adj = decode(size - 1, code);
      adj.push_back(0);
      for (unsigned nbrs = 1; nbrs < (1u << (size - 1)); ++nbrs) {
        auto grown = adj;
        grown[size - 1] = static_cast<std::uint8_t>(nbrs);
        for (int v = 0; v < size - 1; ++v)
          if (nbrs >> v & 1)
            grown[v] |= static_cast<std::uint8_t>(1u << (size - 1));
        next.insert(canonical_code(size, grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (Code code : level) {
    auto adj = decode(static_cast<int>(n), code);
    Graph g(n);
    for (int b = 1; b < static_cast<int>(n); ++b)
      for (int a = 0; a < b; ++a)
        if (adj[a] >> b & 1)
          g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    out.push_back(std::move(g));
  }
  return out;
}

} // namespace leafbound
