#include "support.hpp"

#include "leafbound/cost.hpp"
#include "leafbound/errors.hpp"
#include "leafbound/generators.hpp"
#include "leafbound/oracle.hpp"
#include "leafbound/reduction.hpp"
#include "leafbound/tree.hpp"

#include <doctest.h>

#include <map>

using namespace leafbound;
using testing_support::graph_of;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// Two K4 blocks joined through vertex 0, which also carries pendant 9.
Graph two_blocks() {
  std::vector<Edge> e;
  for (VertexId base : {1u, 5u})
    for (VertexId i = base; i < base + 4; ++i)
      for (VertexId j = i + 1; j < base + 4; ++j)
        e.emplace_back(i, j);
  for (VertexId v : {1u, 2u, 5u, 6u, 9u})
    e.emplace_back(0, v);
  return Graph::from_edges(10, e);
}

// K6 with a pendant on vertex 0.
Graph k6_pendant() {
  std::vector<Edge> e = complete_graph(6).edges();
  e.emplace_back(0, 6);
  return Graph::from_edges(7, e);
}

Graph twin_hubs() {
  Graph g = testing_support::layered_pendants(2, 3);
  g.add_edge(0, 1);
  return g;
}

// Solves every child exactly and lifts.
LiftedTree lift_exact(const Graph &g, const ReductionStep &step) {
  std::vector<SpanningForest> trees;
  for (const Graph &child : apply_reduction(g, step))
    trees.push_back(max_leaf_exact(child).witness);
  return lift(g, step, trees);
}

} // namespace

TEST_CASE("R1 deletes an edge at a degree-2 vertex on a cycle") {
  Graph c5 = cycle_graph(5);
  auto step = find_reduction(c5);
  REQUIRE(step);
  CHECK(step->kind == ReductionKind::R1DeleteEdge);
  CHECK(step->witness("a") == std::vector<VertexId>{0});
  CHECK(step->parent_cost == r(0));
  REQUIRE(step->child_costs.size() == 1);
  CHECK(step->child_costs[0] == r(1, 2));
  CHECK(cost_inequality_holds(*step));
  auto children = apply_reduction(c5, *step);
  REQUIRE(children.size() == 1);
  CHECK(children[0].edge_count() == 4);
  CHECK(is_connected(children[0]));
  CHECK(lift_exact(c5, *step).leaf_gain >= 0);
}

TEST_CASE("R1 contracts at a degree-2 cutpoint") {
  Graph p3 = path_graph(3);
  auto step = find_reduction(p3);
  REQUIRE(step);
  CHECK(step->kind == ReductionKind::R1Contract);
  CHECK(step->witness("a") == std::vector<VertexId>{1});
  REQUIRE(step->lift.expansion);
  CHECK(step->lift.expansion->merged == step->witness("merged").front());
  auto children = apply_reduction(p3, *step);
  CHECK(children[0].vertex_count() == 2);
  CHECK(step->child_costs[0] == step->parent_cost);
  LiftedTree t = lift_exact(p3, *step);
  CHECK(leaf_count(t.tree) == 2);
}

TEST_CASE("R2 splits at a cutpoint of G - U") {
  Graph g = two_blocks();
  auto step = find_reduction(g);
  REQUIRE(step);
  CHECK(step->kind == ReductionKind::R2Split);
  CHECK(step->witness("a") == std::vector<VertexId>{0});
  CHECK(step->witness("side") == std::vector<VertexId>{1, 2, 3, 4});
  CHECK(step->parent_cost == r(35, 12));
  REQUIRE(step->child_costs.size() == 2);
  CHECK(step->child_costs[0] == r(5, 3));
  CHECK(step->child_costs[1] == r(2));
  CHECK(step->parent_cost <= step->child_costs[0] + step->child_costs[1] -
                                 r(1, 2));
  CHECK(cost_inequality_holds(*step));
  auto children = apply_reduction(g, *step);
  REQUIRE(children.size() == 2);
  CHECK(children[0].vertex_count() == 6);
  CHECK(children[1].vertex_count() == 7);
  // The fresh vertex is a pendant in both children and is dropped on lift.
  const VertexId fresh = step->witness("fresh").front();
  for (const Graph &c : children)
    CHECK(c.degree(fresh) == 1);
  LiftedTree t = lift_exact(g, *step);
  CHECK(t.leaf_gain == -2);
  CHECK(leaf_count(t.tree) == max_leaf_exact(g).u);
}

TEST_CASE("R3 deletes an edge between two high-degree vertices") {
  Graph g = k6_pendant();
  auto step = find_reduction(g);
  REQUIRE(step);
  CHECK(step->kind == ReductionKind::R3DeleteEdge);
  CHECK(step->witness("x") == std::vector<VertexId>{0});
  CHECK(step->witness("y") == std::vector<VertexId>{1});
  CHECK(step->child_costs[0] == step->parent_cost);
  auto children = apply_reduction(g, *step);
  CHECK(!children[0].adjacent(0, 1));
  CHECK(lift_exact(g, *step).leaf_gain >= 0);
}

TEST_CASE("gadget reduces by attaching at a cutpoint") {
  Graph g = gadget();
  auto step = find_reduction(g);
  REQUIRE(step);
  CHECK(step->kind == ReductionKind::R4CutpointAttach);
  CHECK(step->rule == "L3.5");
  CHECK(step->witness("a") == std::vector<VertexId>{0});
  CHECK(step->witness("b") == std::vector<VertexId>{3});
  CHECK(step->parent_cost == r(5, 2));
  CHECK(step->child_costs[0] == r(3, 2));
  CHECK(step->parent_cost - step->child_costs[0] <= r(1));
  CHECK(step->lift.min_gain == 1);
  CHECK(lift_exact(g, *step).leaf_gain >= 1);
}

TEST_CASE("no reduction on graphs without degree 2 or pendant vertices") {
  CHECK(!find_reduction(petersen_graph()));
  CHECK(!find_reduction(complete_graph(5)));
  CHECK(!find_reduction(random_cubic(20, 3)));
}

TEST_CASE("find_reduction rejects bad input") {
  CHECK_THROWS_AS(find_reduction(path_graph(2)), InputError);
  CHECK_THROWS_AS(find_reduction(graph_of(4, {{0, 1}, {2, 3}})), InputError);
}

TEST_CASE("apply_reduction revalidates witnesses") {
  Graph c5 = cycle_graph(5);
  auto step = find_reduction(c5);
  REQUIRE(step);

  SUBCASE("moved witness") {
    ReductionStep bad = *step;
    bad.witnesses[0].vertices = {3};
    CHECK_THROWS_AS(apply_reduction(c5, bad), InvariantError);
  }
  SUBCASE("wrong kind") {
    ReductionStep bad = *step;
    bad.kind = ReductionKind::R1Contract;
    CHECK_THROWS_AS(apply_reduction(c5, bad), InvariantError);
  }
  SUBCASE("missing role") {
    ReductionStep bad = *step;
    bad.witnesses.pop_back();
    CHECK_THROWS_AS(apply_reduction(c5, bad), InputError);
  }
  SUBCASE("other graph") {
    CHECK_THROWS_AS(apply_reduction(complete_graph(5), *step), InvariantError);
  }
}

TEST_CASE("lift rejects a tree that does not span the child") {
  Graph g = gadget();
  auto step = find_reduction(g);
  REQUIRE(step);
  auto children = apply_reduction(g, *step);
  SpanningForest partial = max_leaf_exact(children[0]).witness;
  partial.edges.pop_back();
  std::vector<SpanningForest> trees{partial};
  CHECK_THROWS_AS(lift(g, *step, trees), InvariantError);
  CHECK_THROWS_AS(lift(g, *step, std::vector<SpanningForest>{}),
                  InvariantError);
}

TEST_CASE("reductions keep their cost and leaf contracts on random graphs") {
  std::map<ReductionKind, int> seen;
  for (int seed = 0; seed < 400; ++seed) {
    const std::size_t n = 6 + seed % 7;
    Graph g = random_graph(n, n - 1 + seed % n, 1, 9000 + seed);
    std::optional<ReductionStep> step;
    try {
      step = find_reduction(g);
    } catch (const ReductionGap &) {
      continue;
    }
    if (!step)
      continue;
    ++seen[step->kind];
    CHECK(step->parent_cost == graph_cost(g));
    CHECK(cost_inequality_holds(*step));
    auto children = apply_reduction(g, *step);
    REQUIRE(children.size() == step->child_costs.size());
    for (std::size_t i = 0; i < children.size(); ++i) {
      CHECK(is_connected(children[i]));
      CHECK(graph_cost(children[i]) == step->child_costs[i]);
      CHECK(children[i].vertex_count() + children[i].edge_count() <
            g.vertex_count() + g.edge_count());
    }
    LiftedTree t = lift_exact(g, *step);
    CHECK(check_tree(g, t.tree).ok);
    if (step->lift.exact_gain)
      CHECK(t.leaf_gain == step->lift.min_gain);
    else
      CHECK(t.leaf_gain >= step->lift.min_gain);
  }
  CHECK(seen.size() >= 3);
}

TEST_CASE("a degree-4 vertex next to both W vertices leaves R5 without a "
          "witness") {
  Graph g = twin_hubs();
  CHECK(g.vertex_count() == 8);
  CHECK_THROWS_AS(find_reduction(g), ReductionGap);
  // The graph itself still meets the bound.
  CHECK(max_leaf_lower_bound_check(g));
}

TEST_CASE("reduction names round trip") {
  for (int k = 0; k <= static_cast<int>(ReductionKind::R6_2PathFull); ++k) {
    auto kind = static_cast<ReductionKind>(k);
    CHECK(reduction_kind_from_name(name(kind)) == kind);
  }
  CHECK(!reduction_kind_from_name("R7"));
}
