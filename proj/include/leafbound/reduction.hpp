#pragma once

#include "leafbound/errors.hpp"
#include "leafbound/graph.hpp"
#include "leafbound/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace leafbound {

enum class ReductionKind {
  R1Contract,
  R1DeleteEdge,
  R2Split,
  R3DeleteEdge,
  R4CutpointAttach,
  R5ContractSplit,
  R6_1PathEarly,
  R6_1PathFull,
  R6_2PathEarly,
  R6_2PathFull,
};

/// R5's condition holds but none of its witnesses meets the cost bound, and
/// R6 cannot take over either. Seen only on small graphs; the solver handles
/// such subproblems exactly.
class ReductionGap : public InvariantError {
public:
  using InvariantError::InvariantError;
};

std::string_view name(ReductionKind kind);
std::optional<ReductionKind> reduction_kind_from_name(std::string_view text);

/// A named group of vertices taking part in a reduction ("a", "b", "path"...).
struct Witness {
  std::string role;
  std::vector<VertexId> vertices;

  friend bool operator==(const Witness &, const Witness &) = default;
};

/// A vertex of the child graph that stands for the edge first-second of the
/// parent graph.
struct Expansion {
  VertexId merged = 0;
  VertexId first = 0;
  VertexId second = 0;

  friend bool operator==(const Expansion &, const Expansion &) = default;
};

/// How to turn spanning trees of the children into a spanning tree of the
/// parent: union the child trees, drop the listed child-only vertices, add
/// the attachment edges, then expand the merged vertex if any.
struct LiftPlan {
  std::vector<VertexId> dropped;
  std::vector<Edge> attachments;
  std::optional<Expansion> expansion;
  int min_gain = 0;        // leaves(parent) - sum leaves(children) >= min_gain
  bool exact_gain = false; // ... and equality is required (gluing)

  friend bool operator==(const LiftPlan &, const LiftPlan &) = default;
};

struct ReductionStep {
  ReductionKind kind = ReductionKind::R1Contract;
  /// Which test fired, e.g. "L3.2" or "generic" for R4, "empty-path" for R6.2.
  std::string rule;
  std::vector<Witness> witnesses;
  LiftPlan lift;

  Rational parent_cost;
  /// c(G') of the contracted graph for R5 and R6.2, before deletions.
  std::optional<Rational> contracted_cost;
  std::vector<Rational> child_costs;
  std::vector<std::pair<std::size_t, std::size_t>> child_sizes; // (v, e)

  /// Throws InputError if the role is missing.
  const std::vector<VertexId> &witness(std::string_view role) const;
};

struct LiftedTree {
  SpanningForest tree;
  int leaf_gain = 0;
};

/// First applicable reduction in the order R1..R6, or nullopt when none
/// applies. Throws InputError for disconnected graphs or v(g) <= 2,
/// ReductionGap as described above and InvariantError when any other case
/// fires but its construction cannot be completed.
std::optional<ReductionStep> find_reduction(const Graph &g);

/// Rebuilds the children from the step's witnesses, re-validating every
/// precondition and cost inequality. Throws InvariantError on mismatch.
std::vector<Graph> apply_reduction(const Graph &g, const ReductionStep &step);

/// Combines child spanning trees into a spanning tree of g and checks the
/// per-kind leaf increment. Throws InvariantError on any breach.
LiftedTree lift(const Graph &g, const ReductionStep &step,
                std::span<const SpanningForest> child_trees);

/// Lower bound on c(G) - c(child) (or the gluing inequality for R2) that
/// the case analysis promises; checked on every application.
bool cost_inequality_holds(const ReductionStep &step);

} // namespace leafbound
