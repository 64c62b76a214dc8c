#include "support.hpp"

#include "leafbound/errors.hpp"
#include "leafbound/generators.hpp"
#include "leafbound/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace leafbound;
using testing_support::graph_of;

namespace {

Graph path3() { return graph_of(3, {{0, 1}, {1, 2}}); }

Graph bowtie() {
  return graph_of(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

bool symmetric(const Graph &g) {
  for (VertexId v : g.vertices())
    for (VertexId w : g.neighbors(v)) {
      const auto &back = g.neighbors(w);
      if (!std::binary_search(back.begin(), back.end(), v))
        return false;
    }
  return true;
}

} // namespace

TEST_CASE("degree") {
  CHECK(degree(path3(), 1) == 2);
  Graph k4 = complete_graph(4);
  for (VertexId v : k4.vertices())
    CHECK(degree(k4, v) == 3);
  Graph g = gadget();
  for (VertexId p : {6u, 7u, 8u})
    CHECK(degree(g, p) == 1);
  CHECK_THROWS_AS(degree(k4, 9), InputError);
}

TEST_CASE("construction rejects loops, repeats and unknown ids") {
  std::vector<Edge> loop{Edge(1, 1)};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), InputError);
  std::vector<Edge> twice{Edge(0, 1), Edge(1, 0)};
  CHECK_THROWS_AS(Graph::from_edges(3, twice), InputError);
  std::vector<Edge> far{Edge(0, 5)};
  CHECK_THROWS_AS(Graph::from_edges(3, far), InputError);
}

TEST_CASE("delete_edges") {
  Graph c4 = cycle_graph(4);
  std::vector<Edge> one{Edge(0, 1)};
  Graph p4 = delete_edges(c4, one);
  CHECK(p4.vertex_count() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(is_connected(p4));
  CHECK(c4.edge_count() == 4); // input untouched

  Graph k4 = complete_graph(4);
  std::vector<Edge> matching{Edge(0, 1), Edge(2, 3)};
  Graph c = delete_edges(k4, matching);
  CHECK(c.edge_count() == 4);
  for (VertexId v : c.vertices())
    CHECK(c.degree(v) == 2);
  CHECK(is_connected(c));

  Graph tri = complete_graph(3);
  Graph bare = delete_edges(tri, tri.edges());
  CHECK(connected_components(bare).size() == 3);

  CHECK_THROWS_AS(delete_edges(p4, one), InputError);
}

TEST_CASE("delete_vertices") {
  Graph star = graph_of(4, {{0, 1}, {0, 2}, {0, 3}});
  std::vector<VertexId> centre{0};
  Graph leaves = delete_vertices(star, centre);
  CHECK(leaves.vertex_count() == 3);
  CHECK(leaves.edge_count() == 0);
  CHECK(!leaves.contains(0));

  Graph c5 = cycle_graph(5);
  std::vector<VertexId> one{2};
  Graph p4 = delete_vertices(c5, one);
  CHECK(p4.vertex_count() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(is_connected(p4));

  Graph k3 = delete_vertices(complete_graph(4), one);
  CHECK(k3.edge_count() == 3);
  // Ids are stable: vertex 3 keeps its id after 2 is removed.
  CHECK(k3.contains(3));
  CHECK(k3.id_bound() == 4);

  std::vector<VertexId> unknown{7};
  CHECK_THROWS_AS(delete_vertices(c5, unknown), InputError);
}

TEST_CASE("contract_edge") {
  SUBCASE("triangle collapses to an edge") {
    Graph tri = complete_graph(3);
    auto [g, merged] = contract_edge(tri, Edge(0, 1));
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(2) == 1);
    CHECK(g.adjacent(merged, 2));
    CHECK(merged == 3); // fresh id
    auto prov = g.provenance(merged);
    std::sort(prov.begin(), prov.end());
    CHECK(prov == std::vector<VertexId>{0, 1});
  }
  SUBCASE("path") {
    auto [g, merged] = contract_edge(path3(), Edge(0, 1));
    CHECK(g.vertex_count() == 2);
    CHECK(g.adjacent(merged, 2));
  }
  SUBCASE("C4 becomes a triangle") {
    auto [g, merged] = contract_edge(cycle_graph(4), Edge(0, 1));
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
  }
  SUBCASE("missing edge") {
    CHECK_THROWS_AS(contract_edge(path3(), Edge(0, 2)), InputError);
  }
  SUBCASE("no loops or parallels, untouched degrees drop by at most one") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 200; ++round) {
      Graph g = random_graph(10, 18, 1, 100 + round);
      auto edges = g.edges();
      Edge e = edges[rng() % edges.size()];
      auto [h, merged] = contract_edge(g, e);
      CHECK(symmetric(h));
      CHECK(h.edge_count() <= g.edge_count() - 1);
      for (VertexId v : h.vertices()) {
        const auto &nb = h.neighbors(v);
        CHECK(std::find(nb.begin(), nb.end(), v) == nb.end());
        CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
        if (v == merged)
          continue;
        const bool triangle = g.adjacent(v, e.u) && g.adjacent(v, e.v);
        CHECK(h.degree(v) == g.degree(v) - (triangle ? 1 : 0));
      }
    }
  }
}

TEST_CASE("connected_components") {
  Graph two = graph_of(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto comps = connected_components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<VertexId>{0, 1, 2});
  CHECK(comps[1] == std::vector<VertexId>{3, 4, 5});
  CHECK(connected_components(petersen_graph()).size() == 1);
  CHECK(connected_components(Graph(3)).size() == 3);
  CHECK(!is_connected(two));
  CHECK(component_of(two, 4) == std::vector<VertexId>{3, 4, 5});
}

TEST_CASE("cutpoints and bridges: examples") {
  CHECK(cutpoints(path3()) == std::vector<VertexId>{1});
  CHECK(cutpoints(cycle_graph(5)).empty());
  CHECK(cutpoints(bowtie()) == std::vector<VertexId>{2});
  CHECK(testing_support::brute_force_cutpoints(bowtie()) ==
        std::vector<VertexId>{2});

  CHECK(bridges(path3()) == std::vector<Edge>{Edge(0, 1), Edge(1, 2)});
  CHECK(bridges(cycle_graph(4)).empty());
  CHECK(bridges(bowtie()).empty());
  CHECK(testing_support::brute_force_bridges(bowtie()).empty());

  CHECK(is_cutpoint(bowtie(), 2));
  CHECK(!is_cutpoint(bowtie(), 0));
  CHECK(is_bridge(path3(), Edge(0, 1)));
}

TEST_CASE("cutpoints and bridges agree with exhaustive removal") {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 6; ++n)
    for (const Graph &g : all_connected_graphs(n)) {
      CHECK(cutpoints(g) == testing_support::brute_force_cutpoints(g));
      CHECK(bridges(g) == testing_support::brute_force_bridges(g));
      ++checked;
    }
  // Sparser and denser graphs up to ten vertices, some disconnected after
  // deleting random edges.
  std::mt19937_64 rng(11);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 7 + round % 4;
    Graph g = random_graph(n, n - 1 + rng() % (2 * n), 1, 7000 + round);
    if (round % 3 == 0) {
      auto edges = g.edges();
      std::vector<Edge> drop{edges[rng() % edges.size()]};
      g = delete_edges(g, drop);
    }
    CHECK(cutpoints(g) == testing_support::brute_force_cutpoints(g));
    CHECK(bridges(g) == testing_support::brute_force_bridges(g));
    ++checked;
  }
  CHECK(checked > 500);
}

TEST_CASE("is_biconnected") {
  CHECK(is_biconnected(cycle_graph(5)));
  CHECK(!is_biconnected(path3()));
  CHECK(!is_biconnected(bowtie()));
  CHECK(is_biconnected(path_graph(2))); // K2
  CHECK_THROWS_AS(is_biconnected(Graph(1)), InputError);
}

TEST_CASE("induced_subgraph keeps ids") {
  Graph g = petersen_graph();
  std::vector<VertexId> keep{0, 1, 2, 5};
  Graph h = induced_subgraph(g, keep);
  CHECK(h.vertices() == keep);
  for (const Edge &e : h.edges())
    CHECK(g.adjacent(e.u, e.v));
  for (VertexId a : keep)
    for (VertexId b : keep)
      if (a < b)
        CHECK(h.adjacent(a, b) == g.adjacent(a, b));
}

TEST_CASE("adjacency is symmetric and edge count is half the degree sum") {
  for (int seed = 0; seed < 50; ++seed) {
    Graph g = random_graph(15, 30, 1, seed);
    CHECK(symmetric(g));
    std::size_t sum = 0;
    for (VertexId v : g.vertices())
      sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
  }
}
