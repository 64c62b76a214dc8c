#pragma once

#include "leafbound/graph.hpp"
#include "leafbound/rational.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace leafbound {

enum class StepKind {
  S1,
  S2,
  S3,
  S4,
  S5,
  S6_1,
  S6_2,
  S7_1,
  S7_2_1,
  S7_2_2,
  S7_2_3,
  S8_1_1,
  S8_1_2,
  S8_2_1,
  S8_2_2_1,
  S8_2_2_2,
  S8_2_2_3,
};

/// "S1", "S6.1", "S8.2.2.3", ...
std::string_view name(StepKind kind);
std::optional<StepKind> step_kind_from_name(std::string_view text);
/// Guaranteed minimum change of the potential for one step of this kind.
Rational profit_lower_bound(StepKind kind);
/// Top-level step number 1..8.
int step_family(StepKind kind);

struct StepRecord {
  StepKind kind = StepKind::S1;
  VertexId pivot = 0;
  int du = 0; // leaves
  int db = 0; // dead leaves
  int dk = 0; // components merged (k before - k after)
  int ds = 0; // added S vertices
  int dt = 0; // added T vertices
  Rational profit;

  friend bool operator==(const StepRecord &, const StepRecord &) = default;
};

struct PotentialLedger {
  Rational base_alpha;
  Rational alpha;
  std::vector<StepRecord> history;
};

/// A forest F inside g. Vertices outside the forest form the set Z.
struct ForestState {
  SpanningForest forest;
  std::vector<VertexId> vertices; // V(F), ascending
  std::vector<VertexId> dead;     // dead leaves, ascending
  PotentialLedger ledger;

  bool contains(VertexId v) const;
  std::size_t components() const { return forest.components; }
};

/// alpha(F) = 5/6 u + 1/6 b - c_G(F) - 2(k - 1), recomputed from scratch.
Rational potential(const Graph &g, const ForestState &st);
/// Leaves of F whose graph neighbours all lie in their own component.
std::vector<VertexId> dead_leaves(const Graph &g, const SpanningForest &forest);
/// Z: vertices of g outside the forest.
std::vector<VertexId> outside_vertices(const Graph &g, const ForestState &st);
/// Vertices of Z adjacent to the forest.
std::vector<VertexId> level_one(const Graph &g, const ForestState &st);
/// P(x): forest vertices adjacent to x.
std::vector<VertexId> attach_set(const Graph &g, const ForestState &st,
                                 VertexId x);

/// One growth step. `edges` are added in order; every edge joins a forest
/// vertex (or a vertex added earlier in the same step) to a new vertex, or
/// joins two forest components.
struct StepPlan {
  StepKind kind = StepKind::S1;
  VertexId pivot = 0;
  std::vector<Edge> edges;

  friend bool operator==(const StepPlan &, const StepPlan &) = default;
};

/// The plan that step family 1..8 builds around `pivot`, or nullopt if the
/// family's precondition fails there. Later variants of one family are only
/// tried when earlier ones fail, as in find_step.
std::optional<StepPlan> plan_at(const Graph &g, const ForestState &st,
                                int family, VertexId pivot);

/// First applicable step in the order S1..S8, lowest pivot first. Returns
/// nullopt iff the forest is a spanning tree of g; throws InvariantError if
/// no step applies although the forest does not span g.
std::optional<StepPlan> find_step(const Graph &g, const ForestState &st);

/// Re-derives the plan at its pivot, adds it to the forest and checks the
/// measured profit against profit_lower_bound. Throws InvariantError on a
/// stale plan, a profit shortfall or a ledger mismatch.
ForestState apply_step(const Graph &g, const ForestState &st,
                       const StepPlan &plan);

enum class BaseKind {
  Star,      // no pendant vertices, star on a vertex of degree >= 4
  CubicStar, // no pendant vertices and no vertex of degree >= 4
  Bipartite, // pendant vertices present
};

std::string_view name(BaseKind kind);

/// Counts for one component of the bipartite core built when pendant
/// vertices exist.
struct BaseStats {
  std::size_t w2 = 0; // W vertices with two X neighbours
  std::size_t w3 = 0; // W vertices with three X neighbours
  std::size_t y3 = 0; // Y vertices with at most three X neighbours
  std::size_t y4 = 0; // Y vertices with four X neighbours
  std::size_t x = 0;
  std::size_t k = 0;  // components of the core minus Y
  std::size_t k2 = 0; // of those, components with exactly two X vertices
  std::size_t u = 0;  // pendant vertices in the component
  Rational alpha;     // potential of the component's tree
  bool terminal = false;

  friend bool operator==(const BaseStats &, const BaseStats &) = default;
};

/// Identities relating the counts of one component; empty when all hold,
/// otherwise a description of the first failure.
std::string base_equations_failure(const BaseStats &stats);

struct BaseResult {
  BaseKind kind = BaseKind::Star;
  ForestState state;
  std::vector<BaseStats> components; // Bipartite only
  bool terminal = false;             // the base tree already spans g
};

/// Builds the starting forest. Expects a connected graph on which no
/// reduction applies; throws InvariantError when the structural facts this
/// relies on fail (including on pendant-free graphs with a degree-2 vertex).
BaseResult build_base(const Graph &g);

struct DeadVerticesResult {
  SpanningForest tree;
  BaseKind base = BaseKind::Star;
  std::vector<BaseStats> base_stats;
  PotentialLedger ledger;
  bool exhaustive_fallback = false; // cubic case fell back to the oracle
};

/// Base, then steps until the forest spans g. Checks every step's profit,
/// the ledger against a fresh potential, and the final leaf bound.
DeadVerticesResult run_to_spanning_tree(const Graph &g);

} // namespace leafbound
