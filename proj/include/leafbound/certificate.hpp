#pragma once

#include "leafbound/dead_vertices.hpp"
#include "leafbound/graph.hpp"
#include "leafbound/rational.hpp"
#include "leafbound/reduction.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace leafbound {

// Subproblems are numbered in the order they are created; the input graph is
// node 0.

struct ReductionTrace {
  std::size_t node = 0;
  std::size_t v = 0;
  std::size_t e = 0;
  ReductionKind kind = ReductionKind::R1Contract;
  std::string rule;
  std::vector<Witness> witnesses;
  Rational parent_cost;
  std::vector<Rational> child_costs;
  std::vector<std::size_t> children;
  int min_gain = 0;
  int leaf_gain = 0;

  friend bool operator==(const ReductionTrace &, const ReductionTrace &) =
      default;
};

/// A two-vertex subproblem, solved by its single edge.
struct EdgeTrace {
  std::size_t node = 0;

  friend bool operator==(const EdgeTrace &, const EdgeTrace &) = default;
};

/// A subproblem handed to the forest-growing phase.
struct BaseTrace {
  std::size_t node = 0;
  std::size_t v = 0;
  std::size_t e = 0;
  BaseKind kind = BaseKind::Star;
  Rational base_alpha;
  Rational final_alpha;
  std::vector<BaseStats> components;
  bool exhaustive_fallback = false;

  friend bool operator==(const BaseTrace &, const BaseTrace &) = default;
};

/// A small subproblem no reduction can handle, solved by exhaustive search.
struct ExactTrace {
  std::size_t node = 0;
  std::size_t v = 0;
  std::size_t e = 0;
  std::size_t leaves = 0;

  friend bool operator==(const ExactTrace &, const ExactTrace &) = default;
};

struct StepTrace {
  std::size_t node = 0;
  StepRecord record;

  friend bool operator==(const StepTrace &, const StepTrace &) = default;
};

using TraceEntry =
    std::variant<ReductionTrace, EdgeTrace, BaseTrace, StepTrace, ExactTrace>;

struct Certificate {
  std::size_t v = 0;
  std::size_t e = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  Rational bound;
  std::int64_t min_leaves = 0;
  std::size_t leaves = 0;
  bool verified = false;
  std::vector<TraceEntry> trace;
  SpanningForest tree;

  friend bool operator==(const Certificate &, const Certificate &) = default;
};

/// Line-oriented text: "key value" lines for the summary, one "trace" line
/// per record with key=value fields, then "tree u v" lines.
void write_certificate(std::ostream &out, const Certificate &cert);
std::string certificate_text(const Certificate &cert);
/// Throws InputError on malformed text.
Certificate parse_certificate(std::istream &in);
Certificate parse_certificate_text(const std::string &text);

} // namespace leafbound
