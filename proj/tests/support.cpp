#include "support.hpp"

#include "leafbound/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace testing_support {

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[a] = b;
    return true;
  }
};

// Calls visit(degrees) for every spanning tree; edges are picked by a
// recursive include/exclude over the sorted edge list.
template <class Visit>
void for_each_spanning_tree(const Graph &g, Visit &&visit) {
  const auto ids = g.vertices();
  std::vector<std::size_t> index(g.id_bound());
  for (std::size_t i = 0; i < ids.size(); ++i)
    index[ids[i]] = i;
  const auto edges = g.edges();
  const std::size_t need = ids.size() - 1;
  std::vector<std::size_t> chosen;

  auto rec = [&](auto &&self, std::size_t next) -> void {
    if (chosen.size() == need) {
      Dsu dsu(ids.size());
      std::vector<std::size_t> deg(ids.size(), 0);
      for (std::size_t i : chosen) {
        auto a = index[edges[i].u], b = index[edges[i].v];
        if (!dsu.join(a, b))
          return;
        ++deg[a];
        ++deg[b];
      }
      visit(deg);
      return;
    }
    if (edges.size() - next < need - chosen.size())
      return;
    chosen.push_back(next);
    self(self, next + 1);
    chosen.pop_back();
    self(self, next + 1);
  };
  rec(rec, 0);
}

std::size_t components_without(const Graph &g, const std::vector<bool> &gone,
                               const Edge *skip) {
  Dsu dsu(g.id_bound());
  for (const Edge &e : g.edges()) {
    if (gone[e.u] || gone[e.v] || (skip && e == *skip))
      continue;
    dsu.join(e.u, e.v);
  }
  std::size_t count = 0;
  for (VertexId v : g.vertices())
    if (!gone[v] && dsu.find(v) == v)
      ++count;
  return count;
}

} // namespace

Graph graph_of(std::size_t n,
               std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  std::vector<Edge> list;
  for (auto [a, b] : edges)
    list.emplace_back(a, b);
  return Graph::from_edges(n, list);
}

std::size_t brute_force_max_leaves(const Graph &g) {
  std::size_t best = 0;
  for_each_spanning_tree(g, [&](const std::vector<std::size_t> &deg) {
    best = std::max<std::size_t>(best, std::count(deg.begin(), deg.end(), 1));
  });
  return best;
}

std::size_t brute_force_tree_count(const Graph &g) {
  std::size_t count = 0;
  for_each_spanning_tree(g, [&](const std::vector<std::size_t> &) { ++count; });
  return count;
}

std::size_t component_count(const Graph &g) {
  std::vector<bool> gone(g.id_bound(), false);
  return components_without(g, gone, nullptr);
}

std::vector<VertexId> brute_force_cutpoints(const Graph &g) {
  std::vector<bool> gone(g.id_bound(), false);
  const std::size_t base = components_without(g, gone, nullptr);
  std::vector<VertexId> out;
  for (VertexId v : g.vertices()) {
    gone[v] = true;
    if (components_without(g, gone, nullptr) > base)
      out.push_back(v);
    gone[v] = false;
  }
  return out;
}

std::vector<Edge> brute_force_bridges(const Graph &g) {
  std::vector<bool> gone(g.id_bound(), false);
  const std::size_t base = components_without(g, gone, nullptr);
  std::vector<Edge> out;
  for (const Edge &e : g.edges())
    if (components_without(g, gone, &e) > base)
      out.push_back(e);
  return out;
}

std::vector<Named> exhaustive_corpus() {
  std::vector<Named> out;
  for (std::size_t n = 2; n <= 7; ++n) {
    auto graphs = leafbound::all_connected_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i)
      out.push_back({"all" + std::to_string(n) + "_" + std::to_string(i),
                     std::move(graphs[i])});
  }
  return out;
}

Graph core_with_pendants(std::size_t core, std::size_t extra_edges,
                         std::size_t pendants, std::uint64_t seed) {
  Graph base = leafbound::random_graph(core, core - 1 + extra_edges, 3, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick(0, core - 1);
  std::vector<Edge> edges = base.edges();
  for (std::size_t i = 0; i < pendants; ++i)
    edges.emplace_back(static_cast<VertexId>(pick(rng)),
                       static_cast<VertexId>(core + i));
  return Graph::from_edges(core + pendants, edges);
}

Graph layered_pendants(std::size_t hubs, std::size_t spokes) {
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < spokes; ++s) {
    const auto spoke = static_cast<VertexId>(hubs + s);
    for (std::size_t h = 0; h < hubs; ++h)
      edges.emplace_back(static_cast<VertexId>(h), spoke);
    edges.emplace_back(spoke, static_cast<VertexId>(hubs + spokes + s));
  }
  return Graph::from_edges(hubs + 2 * spokes, edges);
}

Graph clustered_hubs(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  VertexId next = 0;
  std::vector<VertexId> hubs;
  const std::size_t spokes = 3;
  for (std::size_t c = 0; c < 2; ++c) {
    const VertexId first = next;
    next += 3;
    for (VertexId h = first; h < next; ++h)
      hubs.push_back(h);
    for (std::size_t s = 0; s < spokes; ++s) {
      const VertexId w = next++, u = next++;
      for (VertexId h = first; h < first + 3; ++h)
        edges.emplace_back(h, w);
      edges.emplace_back(w, u);
    }
  }
  // Linking vertices have degree 3, all three neighbours hubs; every hub
  // gets 7 - spokes of them. Triples are redrawn until they use three
  // different hubs and at least one crosses between the clusters.
  const std::size_t per_hub = 7 - spokes;
  std::vector<std::size_t> slots;
  for (std::size_t h = 0; h < 6; ++h)
    slots.insert(slots.end(), per_hub, h);
  for (;;) {
    std::shuffle(slots.begin(), slots.end(), rng);
    bool distinct = true, crossing = false;
    for (std::size_t t = 0; t < slots.size(); t += 3) {
      const std::size_t a = slots[t], b = slots[t + 1], c = slots[t + 2];
      distinct = distinct && a != b && b != c && a != c;
      crossing = crossing || a / 3 != b / 3 || b / 3 != c / 3;
    }
    if (distinct && crossing)
      break;
  }
  std::vector<VertexId> links;
  for (std::size_t t = 0; t < slots.size(); t += 3) {
    const VertexId y = next++;
    links.push_back(y);
    for (std::size_t k = 0; k < 3; ++k)
      edges.emplace_back(hubs[slots[t + k]], y);
  }

  // A K4 outside the core, each member joined to its own link. Every hub
  // keeps one link of degree 3.
  const std::size_t clique = 4;
  const std::size_t per_member = 1;
  std::vector<std::size_t> order(links.size());
  std::iota(order.begin(), order.end(), 0);
  for (;;) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<bool> keeps(6, false);
    for (std::size_t i = clique * per_member; i < order.size(); ++i)
      for (std::size_t k = 0; k < 3; ++k)
        keeps[slots[3 * order[i] + k]] = true;
    if (std::all_of(keeps.begin(), keeps.end(), [](bool b) { return b; }))
      break;
  }
  const VertexId first_member = next;
  for (std::size_t m = 0; m < clique; ++m) {
    const VertexId z = next++;
    for (VertexId o = first_member; o < z; ++o)
      edges.emplace_back(o, z);
    for (std::size_t k = 0; k < per_member; ++k)
      edges.emplace_back(links[order[m * per_member + k]], z);
  }
  return Graph::from_edges(next, edges);
}

std::vector<Named> random_corpus() {
  std::vector<Named> out;
  std::mt19937_64 rng(20240611);
  for (std::uint64_t i = 0; out.size() < 500; ++i) {
    const std::uint64_t seed = 1000 + i;
    std::uniform_int_distribution<std::size_t> nd(8, 30);
    const std::size_t n = nd(rng);
    Graph g;
    std::string family;
    switch (i % 5) {
    case 0: { // trees and near-trees: many pendants and degree-2 vertices
      std::uniform_int_distribution<std::size_t> extra(0, 3);
      g = leafbound::random_graph(n, n - 1 + extra(rng), 1, seed);
      family = "sparse";
      break;
    }
    case 1: {
      std::uniform_int_distribution<std::size_t> extra(n / 4, n);
      g = leafbound::random_graph(n, n - 1 + extra(rng), 1, seed);
      family = "mixed";
      break;
    }
    case 2: {
      const std::size_t cap = n * (n - 1) / 2;
      std::uniform_int_distribution<std::size_t> m(2 * n, std::min(cap, 4 * n));
      g = leafbound::random_graph(n, m(rng), 2, seed);
      family = "dense";
      break;
    }
    case 3: {
      std::uniform_int_distribution<std::size_t> pend(1, n / 3);
      const std::size_t p = pend(rng);
      const std::size_t core = n - p;
      std::uniform_int_distribution<std::size_t> extra(core / 2 + 2, core + 2);
      g = core_with_pendants(core, extra(rng), p, seed);
      family = "core";
      break;
    }
    default: {
      if (i % 10 == 9) {
        g = clustered_hubs(seed);
        family = "clustered";
        break;
      }
      std::uniform_int_distribution<std::size_t> hubs(2, 3);
      const std::size_t h = hubs(rng);
      const std::size_t spokes = std::max<std::size_t>(3, (n - h) / 2);
      Graph layered = layered_pendants(h, spokes);
      // Perturb with a few random chords so the corpus is not all one shape.
      std::vector<Edge> edges = layered.edges();
      std::uniform_int_distribution<VertexId> pick(
          0, static_cast<VertexId>(layered.vertex_count() - 1));
      std::uniform_int_distribution<int> chords(0, 3);
      for (int c = chords(rng); c > 0; --c) {
        VertexId a = pick(rng), b = pick(rng);
        Edge e(a, b);
        if (a != b && std::find(edges.begin(), edges.end(), e) == edges.end())
          edges.push_back(e);
      }
      g = Graph::from_edges(layered.vertex_count(), edges);
      family = "layered";
      break;
    }
    }
    out.push_back({family + "_" + std::to_string(seed), std::move(g)});
  }
  return out;
}

std::vector<Named> cubic_corpus() {
  std::vector<Named> out;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 8 + 2 * (i % 12); // 8..30
    out.push_back({"cubic" + std::to_string(n) + "_" + std::to_string(i),
                   leafbound::random_cubic(n, 500 + i)});
  }
  return out;
}

} // namespace testing_support
