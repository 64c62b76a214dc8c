#include "leafbound/reduction.hpp"

#include "leafbound/cost.hpp"
#include "leafbound/errors.hpp"
#include "leafbound/leaf_path.hpp"
#include "leafbound/tree.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace leafbound {

namespace {

constexpr std::array<std::string_view, 10> kind_names = {
    "R1Contract",       "R1DeleteEdge",  "R2Split",       "R3DeleteEdge",
    "R4CutpointAttach", "R5ContractSplit", "R6_1PathEarly", "R6_1PathFull",
    "R6_2PathEarly",    "R6_2PathFull"};

struct Realized {
  ReductionStep step;
  std::vector<Graph> children;
};

// Result of trying to build a reduction from a set of witnesses. `why` is
// set when the candidate does not satisfy its case's preconditions.
struct Attempt {
  std::optional<Realized> done;
  std::string why;
};

Attempt fail(std::string why) { return {std::nullopt, std::move(why)}; }

std::string str(VertexId v) { return std::to_string(v); }

bool contains(const std::vector<VertexId> &xs, VertexId v) {
  return std::find(xs.begin(), xs.end(), v) != xs.end();
}

Attempt finish(const Graph &g, Realized r) {
  r.step.parent_cost = graph_cost(g);
  for (const Graph &c : r.children) {
    if (!is_connected(c))
      return fail(std::string(name(r.step.kind)) + ": child is disconnected");
    if (c.vertex_count() > g.vertex_count() ||
        (c.vertex_count() == g.vertex_count() &&
         c.edge_count() >= g.edge_count()))
      return fail(std::string(name(r.step.kind)) + ": child is not smaller");
    r.step.child_costs.push_back(graph_cost(c));
    r.step.child_sizes.emplace_back(c.vertex_count(), c.edge_count());
  }
  if (!cost_inequality_holds(r.step))
    return fail(std::string(name(r.step.kind)) + ": cost inequality fails");
  return {std::move(r), {}};
}

std::vector<VertexId> pendants_of(const Graph &g, VertexId v) {
  std::vector<VertexId> out;
  for (VertexId nb : g.neighbors(v))
    if (g.degree(nb) == 1)
      out.push_back(nb);
  return out;
}

// --- R1 -------------------------------------------------------------------

Attempt realize_r1(const Graph &g, VertexId a, VertexId b, bool contract) {
  if (!g.contains(a) || g.degree(a) != 2 || !g.adjacent(a, b))
    return fail("R1: a must have degree 2 and be adjacent to b");
  if (contract != is_cutpoint(g, a))
    return fail("R1: contraction iff a is a cutpoint");
  Realized r;
  r.step.witnesses = {{"a", {a}}, {"b", {b}}};
  if (contract) {
    r.step.kind = ReductionKind::R1Contract;
    auto [child, merged] = contract_edge(g, Edge(a, b));
    r.step.witnesses.push_back({"merged", {merged}});
    r.step.lift.expansion = Expansion{merged, a, b};
    r.children.push_back(std::move(child));
  } else {
    r.step.kind = ReductionKind::R1DeleteEdge;
    const std::array<Edge, 1> e{Edge(a, b)};
    r.children.push_back(delete_edges(g, e));
  }
  return finish(g, std::move(r));
}

// --- R2 -------------------------------------------------------------------

Attempt realize_r2(const Graph &g, VertexId a) {
  auto classes = classify(g);
  Graph h = delete_vertices(g, classes.u);
  if (!h.contains(a) || !is_cutpoint(h, a))
    return fail("R2: a is not a cutpoint of G - U");

  const std::vector<VertexId> a_only{a};
  auto parts = connected_components(delete_vertices(h, a_only));
  std::vector<VertexId> side = parts.front();
  for (VertexId v : parts.front())
    for (VertexId p : pendants_of(g, v))
      side.push_back(p);
  std::sort(side.begin(), side.end());

  std::vector<VertexId> first = side, second;
  first.push_back(a);
  for (VertexId v : g.vertices())
    if (!std::binary_search(side.begin(), side.end(), v))
      second.push_back(v);
  if (first.size() <= 2 || second.size() <= 2)
    return fail("R2: both sides need more than two vertices");

  Realized r;
  r.step.kind = ReductionKind::R2Split;
  VertexId fresh = 0;
  for (const auto &keep : {first, second}) {
    Graph child = induced_subgraph(g, keep);
    fresh = child.add_vertex();
    child.add_edge(a, fresh);
    r.children.push_back(std::move(child));
  }
  r.step.witnesses = {{"a", {a}}, {"side", side}, {"fresh", {fresh}}};
  r.step.lift.dropped = {fresh};
  r.step.lift.min_gain = -2;
  r.step.lift.exact_gain = true;
  return finish(g, std::move(r));
}

// --- R3 -------------------------------------------------------------------

Attempt realize_r3(const Graph &g, VertexId x, VertexId y) {
  if (!g.adjacent(x, y) || g.degree(x) < 5 || g.degree(y) < 5)
    return fail("R3: need adjacent vertices of degree >= 5");
  Realized r;
  r.step.kind = ReductionKind::R3DeleteEdge;
  r.step.witnesses = {{"x", {x}}, {"y", {y}}};
  const std::array<Edge, 1> e{Edge(x, y)};
  r.children.push_back(delete_edges(g, e));
  return finish(g, std::move(r));
}

// --- R4 -------------------------------------------------------------------

Attempt realize_r4(const Graph &g, VertexId a, VertexId b, std::string rule) {
  if (!g.adjacent(a, b))
    return fail("R4: a and b are not adjacent");
  const std::vector<VertexId> a_only{a};
  Graph rest = delete_vertices(g, a_only);
  auto comp = component_of(rest, b);
  Graph child = induced_subgraph(rest, comp);
  if (!is_cutpoint(child, b))
    return fail("R4: b is not a cutpoint of the component of G - a");
  std::vector<VertexId> outside;
  for (VertexId v : rest.vertices())
    if (!std::binary_search(comp.begin(), comp.end(), v)) {
      if (g.degree(v) != 1)
        return fail("R4: G - a has a non-pendant vertex outside the child");
      outside.push_back(v);
    }

  Realized r;
  r.step.kind = ReductionKind::R4CutpointAttach;
  r.step.rule = std::move(rule);
  r.step.witnesses = {{"a", {a}}, {"b", {b}}, {"pendants", outside}};
  r.step.lift.attachments.emplace_back(a, b);
  for (VertexId p : outside)
    r.step.lift.attachments.emplace_back(a, p);
  r.step.lift.min_gain = 1;
  r.children.push_back(std::move(child));
  return finish(g, std::move(r));
}

// --- R5 -------------------------------------------------------------------

std::size_t s_neighbours(const Graph &g, VertexId v) {
  std::size_t n = 0;
  for (VertexId nb : g.neighbors(v))
    n += in_s(g.degree(nb));
  return n;
}

Attempt realize_r5(const Graph &g, VertexId x, VertexId w, VertexId w2) {
  auto classes = classify(g);
  if (!classes.in_x(x) || !classes.in_w(w) || w == w2)
    return fail("R5: need x in X and w in W");
  if (!g.adjacent(x, w) || !g.adjacent(x, w2) || g.degree(w) != 3 ||
      g.degree(w2) != 3 || s_neighbours(g, w2) > 1)
    return fail("R5: degree or neighbourhood condition fails");

  Realized r;
  r.step.kind = ReductionKind::R5ContractSplit;
  auto [contracted, merged] = contract_edge(g, Edge(x, w));
  r.step.contracted_cost = graph_cost(contracted);

  const std::vector<VertexId> w2_only{w2};
  Graph rest = delete_vertices(contracted, w2_only);
  auto comp = component_of(rest, merged);
  Graph child = induced_subgraph(rest, comp);
  std::vector<VertexId> outside;
  for (VertexId v : rest.vertices())
    if (!std::binary_search(comp.begin(), comp.end(), v)) {
      if (contracted.degree(v) != 1 || !contracted.adjacent(v, w2))
        return fail("R5: G' - w' has a non-pendant vertex outside G*");
      outside.push_back(v);
    }
  if (!is_cutpoint(child, merged))
    return fail("R5: x' is not a cutpoint of G*");

  r.step.witnesses = {{"x", {x}},           {"w", {w}},
                      {"w'", {w2}},         {"merged", {merged}},
                      {"pendants", outside}};
  r.step.lift.attachments.emplace_back(w2, merged);
  for (VertexId p : outside)
    r.step.lift.attachments.emplace_back(w2, p);
  r.step.lift.expansion = Expansion{merged, x, w};
  r.step.lift.min_gain = 1;
  r.children.push_back(std::move(child));
  return finish(g, std::move(r));
}

// --- R6 -------------------------------------------------------------------

// The W-neighbour used by R6: degree 3 preferred, then lowest id.
std::optional<VertexId> choose_r6_w(const Graph &g, const DegreeClasses &c,
                                    VertexId x) {
  std::optional<VertexId> best;
  for (VertexId nb : g.neighbors(x)) {
    if (!c.in_w(nb))
      continue;
    if (g.degree(nb) == 3)
      return nb;
    if (!best)
      best = nb;
  }
  return best;
}

bool has_two_s_neighbours(const Graph &g, VertexId y, VertexId except) {
  for (VertexId nb : g.neighbors(y))
    if (nb != except && g.degree(nb) != 3)
      return false;
  return true;
}

// Degree-3 neighbour of x outside W; one whose other neighbours both have
// degree 3 is preferred.
std::optional<VertexId> choose_r6_y(const Graph &g, const DegreeClasses &c,
                                    VertexId x, VertexId w) {
  std::optional<VertexId> fallback;
  for (VertexId nb : g.neighbors(x)) {
    if (nb == w || g.degree(nb) != 3 || c.in_w(nb))
      continue;
    if (has_two_s_neighbours(g, nb, x))
      return nb;
    if (!fallback)
      fallback = nb;
  }
  return fallback;
}

std::optional<VertexId> first_non_bridge(const Graph &g, VertexId from,
                                         VertexId excluded,
                                         const std::vector<VertexId> &skip) {
  const std::vector<VertexId> ex{excluded};
  Graph rest = delete_vertices(g, ex);
  auto cut = bridges(rest);
  for (VertexId nb : rest.neighbors(from))
    if (!contains(skip, nb) &&
        !std::binary_search(cut.begin(), cut.end(), Edge(from, nb)))
      return nb;
  return std::nullopt;
}

// Builds the child for a grown path: g - E(path) - excluded [- t'].
Graph path_child(const Graph &g, const LeafPath &path, VertexId excluded) {
  auto es = path.edges();
  Graph child = delete_edges(g, es);
  child.remove_vertex(excluded);
  if (path.outcome == PathOutcome::Early)
    child.remove_vertex(path.before_end());
  return child;
}

Attempt realize_r6(const Graph &g, VertexId x, VertexId w, VertexId y) {
  auto classes = classify(g);
  if (!classes.in_x(x) || g.degree(x) > 6)
    return fail("R6: x must be in X with degree <= 6");
  if (!classes.in_w(w) || !g.adjacent(x, w))
    return fail("R6: w must be a W-neighbour of x");
  if (!g.adjacent(x, y) || g.degree(y) != 3 || classes.in_w(y))
    return fail("R6: y must be a degree-3 neighbour of x outside W");

  Realized r;
  r.step.witnesses = {{"x", {x}}, {"w", {w}}, {"y", {y}}};

  if (g.degree(x) == 4 && g.degree(w) >= 4) {
    std::vector<VertexId> stop;
    for (VertexId nb : g.neighbors(x))
      if (nb != y && nb != w)
        stop.push_back(nb);
    auto z = first_non_bridge(g, y, x, {});
    if (!z)
      return fail("R6.1: every edge at y is a bridge of G - x");
    LeafPath path = grow_leaf_path(g, y, *z, x, w, stop);
    Graph child = path_child(g, path, x);
    r.step.witnesses.push_back({"path", path.vertices});
    r.step.lift.attachments.emplace_back(x, w);
    if (path.outcome == PathOutcome::Early) {
      r.step.kind = ReductionKind::R6_1PathEarly;
      r.step.lift.attachments.emplace_back(path.before_end(), path.end());
      r.step.lift.min_gain = 2;
      if (!is_cutpoint(child, path.end()))
        return fail("R6.1: t is not a cutpoint of the child");
    } else {
      r.step.kind = ReductionKind::R6_1PathFull;
      r.step.lift.min_gain = 1;
    }
    if (!is_cutpoint(child, w))
      return fail("R6.1: w is not a cutpoint of the child");
    r.children.push_back(std::move(child));
    return finish(g, std::move(r));
  }

  auto [contracted, merged] = contract_edge(g, Edge(x, w));
  r.step.contracted_cost = graph_cost(contracted);
  r.step.witnesses.push_back({"merged", {merged}});
  r.step.lift.expansion = Expansion{merged, x, w};

  std::vector<VertexId> others;
  for (VertexId nb : contracted.neighbors(y))
    if (nb != merged)
      others.push_back(nb);
  const bool cubic_pair =
      others.size() == 2 && contracted.degree(others[0]) == 3 &&
      contracted.degree(others[1]) == 3;

  if (!cubic_pair) {
    r.step.kind = ReductionKind::R6_2PathFull;
    r.step.rule = "empty-path";
    const std::vector<VertexId> y_only{y};
    Graph child = delete_vertices(contracted, y_only);
    if (!is_cutpoint(child, merged))
      return fail("R6.2: x' is not a cutpoint of G' - y");
    r.step.lift.attachments.emplace_back(y, merged);
    r.step.lift.min_gain = 1;
    r.children.push_back(std::move(child));
    return finish(g, std::move(r));
  }

  // Start the path at the lower-id degree-3 neighbour that admits a
  // non-bridge first edge.
  for (int pick = 0; pick < 2; ++pick) {
    VertexId z = others[pick], z2 = others[1 - pick];
    auto v = first_non_bridge(contracted, z, y, {merged});
    if (!v)
      continue;
    const std::vector<VertexId> stop{z2};
    LeafPath path = grow_leaf_path(contracted, z, *v, y, merged, stop);
    Graph child = path_child(contracted, path, y);
    r.step.witnesses.push_back({"z", {z}});
    r.step.witnesses.push_back({"path", path.vertices});
    if (path.outcome == PathOutcome::Early) {
      r.step.kind = ReductionKind::R6_2PathEarly;
      if (!is_cutpoint(child, merged) || !is_cutpoint(child, path.end()))
        return fail("R6.2: x' and t must be cutpoints of the child");
      r.step.lift.attachments.emplace_back(y, merged);
      r.step.lift.attachments.emplace_back(path.before_end(), path.end());
      r.step.lift.min_gain = 2;
    } else {
      r.step.kind = ReductionKind::R6_2PathFull;
      // x' separates the pendant of w; fall back to another cutpoint
      // adjacent to y if that ever fails.
      std::optional<VertexId> target;
      for (VertexId c : {merged, z, z2})
        if (child.contains(c) && contracted.adjacent(y, c) &&
            is_cutpoint(child, c)) {
          target = c;
          break;
        }
      if (!target)
        return fail("R6.2: no neighbour of y is a cutpoint of the child");
      r.step.lift.attachments.emplace_back(y, *target);
      r.step.lift.min_gain = 1;
    }
    r.children.push_back(std::move(child));
    return finish(g, std::move(r));
  }
  return fail("R6.2: no non-bridge edge to start the path");
}

// --- detection --------------------------------------------------------------

Attempt must(Attempt a) {
  if (!a.done)
    throw InvariantError("reduction construction failed: " + a.why);
  return a;
}

std::vector<std::pair<VertexId, VertexId>>
lemma3_candidates(const Graph &g, const DegreeClasses &c, int condition) {
  std::vector<std::pair<VertexId, VertexId>> out;
  auto adjacent_to_w = [&](VertexId v) {
    for (VertexId nb : g.neighbors(v))
      if (c.in_w(nb))
        return true;
    return false;
  };
  auto count_s = [&](VertexId v) { return s_neighbours(g, v); };
  for (VertexId v : g.vertices()) {
    switch (condition) {
    case 1:
      if (g.degree(v) <= 3)
        for (VertexId nb : g.neighbors(v))
          out.emplace_back(v, nb);
      break;
    case 2:
      if (!c.in_u(v) && g.degree(v) == 3)
        for (VertexId nb : g.neighbors(v))
          if (c.in_w(nb))
            out.emplace_back(v, nb);
      break;
    case 3:
      if (c.in_w(v)) {
        auto ps = pendants_of(g, v);
        if (ps.size() >= 2)
          out.emplace_back(ps.front(), v);
      }
      break;
    case 4:
    case 5: {
      bool ok = condition == 4 ? (g.degree(v) <= 6 && count_s(v) <= 1)
                               : (g.degree(v) == 4 && count_s(v) <= 2);
      if (ok && adjacent_to_w(v))
        for (VertexId nb : g.neighbors(v))
          if (c.in_w(nb))
            out.emplace_back(v, nb);
      break;
    }
    }
  }
  return out;
}

std::optional<Realized> find_r4(const Graph &g, const DegreeClasses &c) {
  for (int condition = 1; condition <= 5; ++condition)
    for (auto [a, b] : lemma3_candidates(g, c, condition)) {
      auto at = realize_r4(g, a, b, "L3." + std::to_string(condition));
      if (at.done)
        return std::move(at.done);
    }
  // Generic scan: one lowpoint pass per removed vertex.
  const Rational limit = graph_cost(g) - 1;
  for (VertexId a : g.vertices()) {
    const std::vector<VertexId> a_only{a};
    Graph rest = delete_vertices(g, a_only);
    auto cps = cutpoints(rest);
    for (VertexId b : g.neighbors(a)) {
      if (!std::binary_search(cps.begin(), cps.end(), b))
        continue;
      auto comp = component_of(rest, b);
      if (graph_cost(induced_subgraph(rest, comp)) < limit)
        continue;
      auto at = realize_r4(g, a, b, "generic");
      if (at.done)
        return std::move(at.done);
    }
  }
  return std::nullopt;
}

// Sets `why` when the condition matched but no witness validated; the
// caller then falls through to R6.
std::optional<Realized> find_r5(const Graph &g, const DegreeClasses &c,
                                std::string &why) {
  for (VertexId x : c.x)
    for (VertexId w : g.neighbors(x)) {
      if (!c.in_w(w) || g.degree(w) != 3)
        continue;
      for (VertexId w2 : g.neighbors(x)) {
        if (w2 == w || g.degree(w2) != 3 || s_neighbours(g, w2) > 1)
          continue;
        auto at = realize_r5(g, x, w, w2);
        if (at.done)
          return std::move(at.done);
        why = at.why;
      }
    }
  return std::nullopt;
}

std::optional<Realized> find_r6(const Graph &g, const DegreeClasses &c) {
  std::optional<VertexId> x;
  for (VertexId v : c.x)
    if (g.degree(v) <= 6 && (!x || g.degree(v) < g.degree(*x)))
      x = v;
  if (!x)
    return std::nullopt;
  auto w = choose_r6_w(g, c, *x);
  if (!w)
    throw InvariantError("R6: x has no W-neighbour");
  auto y = choose_r6_y(g, c, *x, *w);
  if (!y)
    throw InvariantError("R6: x has no degree-3 neighbour outside W");
  return std::move(must(realize_r6(g, *x, *w, *y)).done);
}

std::optional<Realized> detect(const Graph &g) {
  if (!is_connected(g))
    throw InputError("reduction needs a connected graph");
  if (g.vertex_count() <= 2)
    throw InputError("reduction needs more than two vertices");

  for (VertexId a : g.vertices())
    if (g.degree(a) == 2) {
      VertexId b = g.neighbors(a).front();
      return std::move(must(realize_r1(g, a, b, is_cutpoint(g, a))).done);
    }

  auto classes = classify(g);
  if (classes.u.empty())
    return std::nullopt;

  Graph h = delete_vertices(g, classes.u);
  if (h.vertex_count() >= 3) {
    auto cps = cutpoints(h);
    if (!cps.empty())
      return std::move(must(realize_r2(g, cps.front())).done);
  }

  auto cut = bridges(g);
  for (const Edge &e : g.edges())
    if (g.degree(e.u) >= 5 && g.degree(e.v) >= 5 &&
        !std::binary_search(cut.begin(), cut.end(), e))
      return std::move(must(realize_r3(g, e.u, e.v)).done);

  if (auto r = find_r4(g, classes))
    return r;
  std::string r5_why;
  if (auto r = find_r5(g, classes, r5_why))
    return r;
  if (r5_why.empty())
    return find_r6(g, classes);
  // R5 matched but its cost bound fails (a degree-4 X vertex adjacent to x,
  // w and w' becomes an S vertex on contraction). R6 must take over.
  try {
    if (auto r = find_r6(g, classes))
      return r;
  } catch (const InvariantError &e) {
    throw ReductionGap("R5 applies but no witness validates (" + r5_why +
                       "), and R6 fails: " + e.what());
  }
  throw ReductionGap("R5 applies but no witness validates: " + r5_why);
}

VertexId single(const ReductionStep &step, std::string_view role) {
  const auto &vs = step.witness(role);
  if (vs.size() != 1)
    throw InvariantError("witness '" + std::string(role) +
                         "' must name exactly one vertex");
  return vs.front();
}

// Expands `merged` into the edge first-second, routing each tree edge at
// the merged vertex to whichever part is adjacent; of the two routings
// (prefer first / prefer second) the one with more leaves wins.
std::vector<Edge> expand(const Graph &g, const std::vector<Edge> &edges,
                         const Expansion &ex) {
  std::vector<Edge> best;
  std::size_t best_leaves = 0;
  for (int prefer_second = 0; prefer_second < 2; ++prefer_second) {
    VertexId p = prefer_second ? ex.second : ex.first;
    VertexId q = prefer_second ? ex.first : ex.second;
    std::vector<Edge> out{Edge(ex.first, ex.second)};
    for (const Edge &e : edges) {
      if (!e.touches(ex.merged)) {
        out.push_back(e);
        continue;
      }
      VertexId v = e.other(ex.merged);
      if (g.adjacent(p, v))
        out.emplace_back(p, v);
      else if (g.adjacent(q, v))
        out.emplace_back(q, v);
      else
        throw InvariantError("expansion: " + str(v) +
                             " is adjacent to neither part of the merged "
                             "vertex");
    }
    std::size_t leaves = leaf_count(make_forest(out));
    if (prefer_second == 0 || leaves > best_leaves) {
      best = std::move(out);
      best_leaves = leaves;
    }
  }
  return best;
}

Attempt rederive(const Graph &g, const ReductionStep &step) {
  switch (step.kind) {
  case ReductionKind::R1Contract:
  case ReductionKind::R1DeleteEdge:
    return realize_r1(g, single(step, "a"), single(step, "b"),
                      step.kind == ReductionKind::R1Contract);
  case ReductionKind::R2Split:
    return realize_r2(g, single(step, "a"));
  case ReductionKind::R3DeleteEdge:
    return realize_r3(g, single(step, "x"), single(step, "y"));
  case ReductionKind::R4CutpointAttach:
    return realize_r4(g, single(step, "a"), single(step, "b"), step.rule);
  case ReductionKind::R5ContractSplit:
    return realize_r5(g, single(step, "x"), single(step, "w"),
                      single(step, "w'"));
  default:
    return realize_r6(g, single(step, "x"), single(step, "w"),
                      single(step, "y"));
  }
}

} // namespace

std::string_view name(ReductionKind kind) {
  return kind_names[static_cast<std::size_t>(kind)];
}

std::optional<ReductionKind> reduction_kind_from_name(std::string_view text) {
  for (std::size_t i = 0; i < kind_names.size(); ++i)
    if (kind_names[i] == text)
      return static_cast<ReductionKind>(i);
  return std::nullopt;
}

const std::vector<VertexId> &
ReductionStep::witness(std::string_view role) const {
  for (const Witness &w : witnesses)
    if (w.role == role)
      return w.vertices;
  throw InputError("reduction step has no witness '" + std::string(role) +
                   "'");
}

bool cost_inequality_holds(const ReductionStep &step) {
  const Rational &parent = step.parent_cost;
  if (step.child_costs.empty())
    return false;
  const Rational &child = step.child_costs.front();
  const Rational drop = parent - child;
  switch (step.kind) {
  case ReductionKind::R1Contract:
  case ReductionKind::R3DeleteEdge:
    return child == parent;
  case ReductionKind::R1DeleteEdge:
    return child >= parent;
  case ReductionKind::R2Split:
    return step.child_costs.size() == 2 &&
           parent <= step.child_costs[0] + step.child_costs[1] -
                         Rational(1, 2);
  case ReductionKind::R4CutpointAttach:
    return drop <= Rational(1);
  case ReductionKind::R5ContractSplit:
    return step.contracted_cost &&
           parent - *step.contracted_cost <= Rational(1, 3) && drop <= Rational(1);
  case ReductionKind::R6_1PathEarly:
    return drop <= Rational(11, 6);
  case ReductionKind::R6_1PathFull:
    return drop <= Rational(1);
  case ReductionKind::R6_2PathEarly:
    return step.contracted_cost &&
           parent - *step.contracted_cost <= Rational(1, 3) &&
           drop <= Rational(11, 6);
  case ReductionKind::R6_2PathFull:
    return step.contracted_cost &&
           parent - *step.contracted_cost <= Rational(1, 3) && drop <= Rational(1);
  }
  return false;
}

std::optional<ReductionStep> find_reduction(const Graph &g) {
  auto r = detect(g);
  if (!r)
    return std::nullopt;
  return std::move(r->step);
}

std::vector<Graph> apply_reduction(const Graph &g, const ReductionStep &step) {
  Attempt at = rederive(g, step);
  if (!at.done)
    throw InvariantError("witness validation failed for " +
                         std::string(name(step.kind)) + ": " + at.why);
  const ReductionStep &again = at.done->step;
  if (again.kind != step.kind || again.witnesses != step.witnesses ||
      again.lift != step.lift)
    throw InvariantError("witness validation failed for " +
                         std::string(name(step.kind)) +
                         ": re-derived step differs");
  return std::move(at.done->children);
}

LiftedTree lift(const Graph &g, const ReductionStep &step,
                std::span<const SpanningForest> child_trees) {
  const std::size_t expected = step.kind == ReductionKind::R2Split ? 2 : 1;
  if (child_trees.size() != expected)
    throw InvariantError("lift: wrong number of child trees");

  std::size_t child_leaves = 0;
  std::vector<Edge> edges;
  for (const SpanningForest &t : child_trees) {
    child_leaves += leaf_count(t);
    for (const Edge &e : t.edges) {
      bool dropped = std::any_of(
          step.lift.dropped.begin(), step.lift.dropped.end(),
          [&](VertexId d) { return e.touches(d); });
      if (!dropped)
        edges.push_back(e);
    }
  }
  edges.insert(edges.end(), step.lift.attachments.begin(),
               step.lift.attachments.end());
  if (step.lift.expansion)
    edges = expand(g, edges, *step.lift.expansion);

  LiftedTree out;
  out.tree = make_forest(std::move(edges));
  TreeCheck check = check_tree(g, out.tree);
  if (!check.ok)
    throw InvariantError("lift of " + std::string(name(step.kind)) +
                         " is not a spanning tree: " + check.reason);
  out.leaf_gain =
      static_cast<int>(check.leaves) - static_cast<int>(child_leaves);
  bool ok = step.lift.exact_gain ? out.leaf_gain == step.lift.min_gain
                                 : out.leaf_gain >= step.lift.min_gain;
  if (!ok)
    throw InvariantError("lift of " + std::string(name(step.kind)) +
                         " gained " + std::to_string(out.leaf_gain) +
                         " leaves, contract is " +
                         std::to_string(step.lift.min_gain));
  return out;
}

} // namespace leafbound
