#include "leafbound/solver.hpp"

#include "leafbound/cost.hpp"
#include "leafbound/dead_vertices.hpp"
#include "leafbound/errors.hpp"
#include "leafbound/oracle.hpp"
#include "leafbound/reduction.hpp"

#include <utility>

namespace leafbound {

namespace {

struct Node {
  Graph graph;
  std::optional<ReductionStep> step;
  std::vector<std::size_t> children;
  SpanningForest tree;
  std::size_t record = 0; // index of the node's reduction record
  bool expanded = false;
};

} // namespace

Certificate solve(const Graph &g, const SolveOptions &options) {
  const BoundReport report = bound_report(g);

  Certificate cert;
  cert.v = g.vertex_count();
  cert.e = g.edge_count();
  cert.s = report.s;
  cert.t = report.t;
  cert.bound = report.bound;
  cert.min_leaves = report.min_leaves;

  std::vector<Node> nodes;
  nodes.push_back({g, {}, {}, {}, 0, false});
  std::vector<std::size_t> stack{0};

  while (!stack.empty()) {
    const std::size_t id = stack.back();

    if (nodes[id].expanded) {
      stack.pop_back();
      Node &node = nodes[id];
      std::vector<SpanningForest> child_trees;
      for (std::size_t c : node.children) {
        child_trees.push_back(std::move(nodes[c].tree));
        nodes[c].graph = Graph();
      }
      LiftedTree lifted = lift(node.graph, *node.step, child_trees);
      node.tree = std::move(lifted.tree);
      std::get<ReductionTrace>(cert.trace[node.record]).leaf_gain =
          lifted.leaf_gain;
      continue;
    }

    const Graph &graph = nodes[id].graph;
    if (graph.vertex_count() == 2) {
      stack.pop_back();
      nodes[id].tree = make_forest(graph.edges());
      cert.trace.emplace_back(EdgeTrace{id});
      continue;
    }

    std::optional<ReductionStep> step;
    try {
      step = find_reduction(graph);
    } catch (const ReductionGap &) {
      if (graph.vertex_count() > exact_fallback_limit)
        throw;
      stack.pop_back();
      OracleResult exact = max_leaf_exact(graph);
      if (Rational(static_cast<std::int64_t>(exact.u)) <
          graph_cost(graph) + Rational(3, 2))
        throw InvariantError("subproblem " + std::to_string(id) +
                             " has fewer leaves than its bound");
      cert.trace.emplace_back(
          ExactTrace{id, graph.vertex_count(), graph.edge_count(), exact.u});
      nodes[id].tree = std::move(exact.witness);
      continue;
    }
    if (step) {
      std::vector<Graph> children = apply_reduction(graph, *step);
      ReductionTrace rec;
      rec.node = id;
      rec.v = graph.vertex_count();
      rec.e = graph.edge_count();
      rec.kind = step->kind;
      rec.rule = step->rule;
      rec.witnesses = step->witnesses;
      rec.parent_cost = step->parent_cost;
      rec.child_costs = step->child_costs;
      rec.min_gain = step->lift.min_gain;
      for (Graph &child : children) {
        rec.children.push_back(nodes.size());
        nodes.push_back({std::move(child), {}, {}, {}, 0, false});
      }
      Node &node = nodes[id];
      node.step = std::move(step);
      node.children = rec.children;
      node.record = cert.trace.size();
      node.expanded = true;
      cert.trace.emplace_back(std::move(rec));
      for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
        stack.push_back(*it);
      continue;
    }

    stack.pop_back();
    DeadVerticesResult grown = run_to_spanning_tree(graph);
    BaseTrace base;
    base.node = id;
    base.v = graph.vertex_count();
    base.e = graph.edge_count();
    base.kind = grown.base;
    base.base_alpha = grown.ledger.base_alpha;
    base.final_alpha = grown.ledger.alpha;
    base.components = grown.base_stats;
    base.exhaustive_fallback = grown.exhaustive_fallback;
    cert.trace.emplace_back(std::move(base));
    for (const StepRecord &r : grown.ledger.history)
      cert.trace.emplace_back(StepTrace{id, r});
    nodes[id].tree = std::move(grown.tree);
  }

  cert.tree = std::move(nodes[0].tree);
  cert.leaves = leaf_count(cert.tree);
  if (static_cast<std::int64_t>(cert.leaves) < cert.min_leaves)
    throw InvariantError("spanning tree has " + std::to_string(cert.leaves) +
                         " leaves, bound requires " +
                         std::to_string(cert.min_leaves));
  if (options.verify) {
    TreeCheck check = check_tree(g, cert.tree);
    if (!check.ok || check.leaves != cert.leaves ||
        Rational(static_cast<std::int64_t>(check.leaves)) < cert.bound)
      throw InvariantError("final tree failed verification: " + check.reason);
    cert.verified = true;
  }
  return cert;
}

bool replay(const Certificate &cert, const Graph &g) {
  try {
    return solve(g, {cert.verified}) == cert;
  } catch (const std::exception &) {
    return false;
  }
}

} // namespace leafbound
