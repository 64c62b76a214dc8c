#include "leafbound/dead_vertices.hpp"

#include "leafbound/cost.hpp"
#include "leafbound/errors.hpp"
#include "leafbound/oracle.hpp"
#include "leafbound/reduction.hpp"
#include "leafbound/tree.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>

namespace leafbound {

namespace {

struct StepInfo {
  std::string_view name;
  Rational bound;
  int family;
};

const std::array<StepInfo, 17> &step_table() {
  static const std::array<StepInfo, 17> table = {{
      {"S1", Rational(1, 3), 1},
      {"S2", Rational(1, 2), 2},
      {"S3", Rational(1, 6), 3},
      {"S4", Rational(0), 4},
      {"S5", Rational(0), 5},
      {"S6.1", Rational(1, 3), 6},
      {"S6.2", Rational(0), 6},
      {"S7.1", Rational(1, 12), 7},
      {"S7.2.1", Rational(1, 12), 7},
      {"S7.2.2", Rational(1, 4), 7},
      {"S7.2.3", Rational(1, 12), 7},
      {"S8.1.1", Rational(1, 6), 8},
      {"S8.1.2", Rational(0), 8},
      {"S8.2.1", Rational(1, 4), 8},
      {"S8.2.2.1", Rational(0), 8},
      {"S8.2.2.2", Rational(0), 8},
      {"S8.2.2.3", Rational(0), 8},
  }};
  return table;
}

constexpr VertexId none = std::numeric_limits<VertexId>::max();

// Forest structure indexed by vertex id: membership, forest degree and a
// component label (smallest id in the component).
struct View {
  const Graph &g;
  std::vector<char> in;
  std::vector<std::size_t> fdeg;
  std::vector<VertexId> comp;

  View(const Graph &graph, const std::vector<Edge> &edges)
      : g(graph), in(graph.id_bound(), 0), fdeg(graph.id_bound(), 0),
        comp(graph.id_bound(), none) {
    std::vector<std::vector<VertexId>> adj(g.id_bound());
    for (const Edge &e : edges) {
      if (!g.adjacent(e.u, e.v))
        throw InvariantError("forest edge " + std::to_string(e.u) + "-" +
                             std::to_string(e.v) + " is not a graph edge");
      in[e.u] = in[e.v] = 1;
      ++fdeg[e.u];
      ++fdeg[e.v];
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (VertexId s = 0; s < g.id_bound(); ++s) {
      if (!in[s] || comp[s] != none)
        continue;
      std::vector<VertexId> stack{s};
      comp[s] = s;
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adj[v])
          if (comp[w] == none) {
            comp[w] = s;
            stack.push_back(w);
          }
      }
    }
  }

  bool inside(VertexId v) const { return in[v] != 0; }

  std::vector<VertexId> forest_neighbours(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId w : g.neighbors(v))
      if (in[w])
        out.push_back(w);
    return out;
  }
  std::vector<VertexId> outside_neighbours(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId w : g.neighbors(v))
      if (!in[w])
        out.push_back(w);
    return out;
  }
};

bool is_s(const Graph &g, VertexId v) { return in_s(g.degree(v)); }
bool is_t(const Graph &g, VertexId v) { return in_t(g.degree(v)); }

std::vector<VertexId> first_n(std::vector<VertexId> xs, std::size_t n) {
  if (xs.size() > n)
    xs.resize(n);
  return xs;
}

std::vector<VertexId> without(std::vector<VertexId> xs,
                              std::initializer_list<VertexId> drop) {
  std::erase_if(xs, [&](VertexId v) {
    return std::find(drop.begin(), drop.end(), v) != drop.end();
  });
  return xs;
}

StepPlan plan(StepKind kind, VertexId pivot, std::vector<Edge> edges) {
  return {kind, pivot, std::move(edges)};
}

std::optional<StepPlan> plan_s1(const View &f, VertexId a) {
  if (!f.inside(a))
    return std::nullopt;
  for (VertexId b : f.forest_neighbours(a))
    if (f.comp[b] != f.comp[a])
      return plan(StepKind::S1, a, {Edge(a, b)});
  return std::nullopt;
}

std::optional<StepPlan> plan_s2(const View &f, VertexId p) {
  if (!f.inside(p) || f.fdeg[p] < 2)
    return std::nullopt;
  auto zs = f.outside_neighbours(p);
  if (zs.empty())
    return std::nullopt;
  return plan(StepKind::S2, p, {Edge(p, zs.front())});
}

std::optional<StepPlan> plan_s3(const View &f, VertexId p) {
  if (!f.inside(p))
    return std::nullopt;
  auto zs = f.outside_neighbours(p);
  if (zs.size() < 2)
    return std::nullopt;
  return plan(StepKind::S3, p, {Edge(p, zs[0]), Edge(p, zs[1])});
}

std::optional<StepPlan> plan_s4(const View &f, VertexId x) {
  if (f.inside(x))
    return std::nullopt;
  auto ps = f.forest_neighbours(x);
  if (ps.empty())
    return std::nullopt;
  for (VertexId q : ps)
    if (f.comp[q] != f.comp[ps.front()])
      return plan(StepKind::S4, x, {Edge(ps.front(), x), Edge(q, x)});
  return std::nullopt;
}

std::optional<StepPlan> plan_s5(const View &f, VertexId x) {
  if (f.inside(x))
    return std::nullopt;
  auto ps = f.forest_neighbours(x);
  if (ps.size() < 3)
    return std::nullopt;
  return plan(StepKind::S5, x, {Edge(ps.front(), x)});
}

std::optional<StepPlan> plan_s6(const View &f, VertexId x) {
  if (f.inside(x) || !is_t(f.g, x))
    return std::nullopt;
  auto ps = f.forest_neighbours(x);
  auto zs = f.outside_neighbours(x);
  if (ps.size() == 1 && zs.size() >= 3)
    return plan(StepKind::S6_1, x,
                {Edge(ps[0], x), Edge(x, zs[0]), Edge(x, zs[1]),
                 Edge(x, zs[2])});
  if (ps.size() == 2 && f.comp[ps[0]] == f.comp[ps[1]] && zs.size() >= 2)
    return plan(StepKind::S6_2, x,
                {Edge(ps[0], x), Edge(x, zs[0]), Edge(x, zs[1])});
  return std::nullopt;
}

std::optional<StepPlan> plan_s7(const View &f, VertexId x) {
  if (f.inside(x) || f.g.degree(x) != 3)
    return std::nullopt;
  auto ps = f.forest_neighbours(x);
  if (ps.size() != 1)
    return std::nullopt;
  auto ys = f.outside_neighbours(x);
  const VertexId p = ps[0];
  std::vector<Edge> edges{Edge(p, x), Edge(x, ys[0]), Edge(x, ys[1])};
  if (is_s(f.g, ys[0]) && is_s(f.g, ys[1]))
    return plan(StepKind::S7_1, x, std::move(edges));

  const VertexId ya = is_t(f.g, ys[0]) ? ys[0] : ys[1];
  const VertexId yb = ya == ys[0] ? ys[1] : ys[0];
  auto qs = f.forest_neighbours(ya);
  for (VertexId q : qs)
    if (f.comp[q] == f.comp[p])
      return plan(StepKind::S7_2_1, x, std::move(edges));
  if (!qs.empty()) {
    edges.emplace_back(ya, qs.front());
    return plan(StepKind::S7_2_2, x, std::move(edges));
  }
  auto zs = without(f.outside_neighbours(ya), {x, yb});
  if (zs.size() < 2)
    throw InvariantError("S7.2.3: vertex " + std::to_string(ya) +
                         " of degree >= 4 lacks two outside neighbours");
  edges.emplace_back(ya, zs[0]);
  edges.emplace_back(ya, zs[1]);
  return plan(StepKind::S7_2_3, x, std::move(edges));
}

std::optional<StepPlan> plan_s8(const View &f, VertexId x) {
  if (f.inside(x) || f.g.degree(x) != 3)
    return std::nullopt;
  auto ps = f.forest_neighbours(x);
  if (ps.size() != 2 || f.comp[ps[0]] != f.comp[ps[1]])
    return std::nullopt;
  const VertexId y = f.outside_neighbours(x).front();
  const VertexId home = f.comp[ps[0]];
  std::vector<Edge> edges{Edge(ps[0], x), Edge(x, y)};

  auto qs = f.forest_neighbours(y);
  if (!qs.empty()) {
    // Earlier steps leave only this shape: y of degree 3 touching two
    // vertices of one component.
    if (f.g.degree(y) != 3 || qs.size() != 2 || f.comp[qs[0]] != f.comp[qs[1]])
      return std::nullopt;
    if (f.comp[qs[0]] == home)
      return plan(StepKind::S8_1_1, x, std::move(edges));
    edges.emplace_back(y, qs.front());
    return plan(StepKind::S8_1_2, x, std::move(edges));
  }

  auto zs = without(f.outside_neighbours(y), {x});
  if (is_t(f.g, y)) {
    zs = first_n(std::move(zs), 3);
    for (VertexId z : zs)
      edges.emplace_back(y, z);
    return plan(StepKind::S8_2_1, x, std::move(edges));
  }

  edges.emplace_back(y, zs[0]);
  edges.emplace_back(y, zs[1]);
  if (is_s(f.g, zs[0]) && is_s(f.g, zs[1]))
    return plan(StepKind::S8_2_2_1, x, std::move(edges));
  const VertexId za = is_t(f.g, zs[0]) ? zs[0] : zs[1];
  const VertexId zb = za == zs[0] ? zs[1] : zs[0];
  auto rs = f.forest_neighbours(za);
  if (!rs.empty()) {
    bool touches_home = std::any_of(rs.begin(), rs.end(), [&](VertexId r) {
      return f.comp[r] == home;
    });
    if (!touches_home)
      edges.emplace_back(za, rs.front());
    return plan(StepKind::S8_2_2_2, x, std::move(edges));
  }
  auto more = without(f.outside_neighbours(za), {y, zb});
  if (more.size() < 2)
    throw InvariantError("S8.2.2.3: vertex " + std::to_string(za) +
                         " of degree >= 4 lacks two outside neighbours");
  edges.emplace_back(za, more[0]);
  edges.emplace_back(za, more[1]);
  return plan(StepKind::S8_2_2_3, x, std::move(edges));
}

std::optional<StepPlan> plan_family(const View &f, int family, VertexId v) {
  switch (family) {
  case 1: return plan_s1(f, v);
  case 2: return plan_s2(f, v);
  case 3: return plan_s3(f, v);
  case 4: return plan_s4(f, v);
  case 5: return plan_s5(f, v);
  case 6: return plan_s6(f, v);
  case 7: return plan_s7(f, v);
  case 8: return plan_s8(f, v);
  }
  throw InputError("step family must be in 1..8, got " +
                   std::to_string(family));
}

ForestState with_edges(const Graph &g, std::vector<Edge> edges) {
  ForestState st;
  st.forest = make_forest(std::move(edges));
  for (const Edge &e : st.forest.edges) {
    st.vertices.push_back(e.u);
    st.vertices.push_back(e.v);
  }
  std::sort(st.vertices.begin(), st.vertices.end());
  st.vertices.erase(std::unique(st.vertices.begin(), st.vertices.end()),
                    st.vertices.end());
  st.dead = dead_leaves(g, st.forest);
  return st;
}

Rational frac(std::int64_t n, std::int64_t d) { return Rational(n, d); }

// Final potential of a spanning tree where every leaf is dead is u - c(G).
void check_final(const Graph &g, const ForestState &st) {
  TreeCheck check = check_tree(g, st.forest);
  if (!check.ok)
    throw InvariantError("dead-vertices result is not a spanning tree: " +
                         check.reason);
  if (st.dead.size() != check.leaves)
    throw InvariantError("spanning tree has a live leaf");
  Rational closing = Rational(static_cast<std::int64_t>(check.leaves)) -
                     graph_cost(g);
  if (closing != st.ledger.alpha)
    throw InvariantError("closing identity u - c(G) = alpha fails: " +
                         to_string(closing) + " vs " +
                         to_string(st.ledger.alpha));
}

} // namespace

std::string_view name(StepKind kind) {
  return step_table()[static_cast<std::size_t>(kind)].name;
}

std::optional<StepKind> step_kind_from_name(std::string_view text) {
  const auto &t = step_table();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i].name == text)
      return static_cast<StepKind>(i);
  return std::nullopt;
}

Rational profit_lower_bound(StepKind kind) {
  return step_table()[static_cast<std::size_t>(kind)].bound;
}

int step_family(StepKind kind) {
  return step_table()[static_cast<std::size_t>(kind)].family;
}

std::string_view name(BaseKind kind) {
  switch (kind) {
  case BaseKind::Star: return "star";
  case BaseKind::CubicStar: return "cubic-star";
  case BaseKind::Bipartite: return "bipartite";
  }
  return "?";
}

bool ForestState::contains(VertexId v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::vector<VertexId> dead_leaves(const Graph &g,
                                  const SpanningForest &forest) {
  View f(g, forest.edges);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!f.inside(v) || f.fdeg[v] != 1)
      continue;
    bool dead = true;
    for (VertexId w : g.neighbors(v))
      if (!f.inside(w) || f.comp[w] != f.comp[v]) {
        dead = false;
        break;
      }
    if (dead)
      out.push_back(v);
  }
  return out;
}

Rational potential(const Graph &g, const ForestState &st) {
  auto u = static_cast<std::int64_t>(leaf_count(st.forest));
  auto b = static_cast<std::int64_t>(dead_leaves(g, st.forest).size());
  auto k = static_cast<std::int64_t>(st.forest.components);
  return frac(5, 6) * u + frac(1, 6) * b - subgraph_cost(g, st.vertices) -
         Rational(2 * (k - 1));
}

std::vector<VertexId> outside_vertices(const Graph &g, const ForestState &st) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices())
    if (!st.contains(v))
      out.push_back(v);
  return out;
}

std::vector<VertexId> level_one(const Graph &g, const ForestState &st) {
  std::vector<VertexId> out;
  for (VertexId v : outside_vertices(g, st))
    for (VertexId w : g.neighbors(v))
      if (st.contains(w)) {
        out.push_back(v);
        break;
      }
  return out;
}

std::vector<VertexId> attach_set(const Graph &g, const ForestState &st,
                                 VertexId x) {
  std::vector<VertexId> out;
  for (VertexId w : g.neighbors(x))
    if (st.contains(w))
      out.push_back(w);
  return out;
}

std::optional<StepPlan> plan_at(const Graph &g, const ForestState &st,
                                int family, VertexId pivot) {
  if (!g.contains(pivot))
    throw InputError("unknown vertex " + std::to_string(pivot));
  View f(g, st.forest.edges);
  return plan_family(f, family, pivot);
}

std::optional<StepPlan> find_step(const Graph &g, const ForestState &st) {
  View f(g, st.forest.edges);
  const auto vs = g.vertices();
  for (int family = 1; family <= 8; ++family)
    for (VertexId v : vs)
      if (auto p = plan_family(f, family, v))
        return p;
  if (st.vertices.size() != g.vertex_count() || st.components() != 1)
    throw InvariantError("no growth step applies but the forest does not "
                         "span the graph (" +
                         std::to_string(st.vertices.size()) + " of " +
                         std::to_string(g.vertex_count()) + " vertices, " +
                         std::to_string(st.components()) + " components)");
  return std::nullopt;
}

ForestState apply_step(const Graph &g, const ForestState &st,
                       const StepPlan &plan) {
  auto again = plan_at(g, st, step_family(plan.kind), plan.pivot);
  if (!again || *again != plan)
    throw InvariantError("stale step plan " + std::string(name(plan.kind)) +
                         " at vertex " + std::to_string(plan.pivot));

  // Every edge must join two different trees of the growing forest.
  View before(g, st.forest.edges);
  std::vector<VertexId> label(before.comp);
  std::vector<VertexId> added;
  std::function<VertexId(VertexId)> root = [&](VertexId v) {
    return label[v] == v ? v : (label[v] = root(label[v]));
  };
  for (const Edge &e : plan.edges)
    for (VertexId v : {e.u, e.v})
      if (label[v] == none) {
        label[v] = v;
        added.push_back(v);
      }
  for (const Edge &e : plan.edges) {
    VertexId a = root(e.u), b = root(e.v);
    if (a == b)
      throw InvariantError("step " + std::string(name(plan.kind)) +
                           " closes a cycle");
    label[std::max(a, b)] = std::min(a, b);
  }

  std::vector<Edge> edges = st.forest.edges;
  edges.insert(edges.end(), plan.edges.begin(), plan.edges.end());
  ForestState next = with_edges(g, std::move(edges));

  if (!std::includes(next.dead.begin(), next.dead.end(), st.dead.begin(),
                     st.dead.end()))
    throw InvariantError("a dead leaf came back to life");

  StepRecord rec;
  rec.kind = plan.kind;
  rec.pivot = plan.pivot;
  rec.du = static_cast<int>(leaf_count(next.forest)) -
           static_cast<int>(leaf_count(st.forest));
  rec.db = static_cast<int>(next.dead.size()) - static_cast<int>(st.dead.size());
  rec.dk = static_cast<int>(st.components()) -
           static_cast<int>(next.components());
  for (VertexId v : added) {
    rec.ds += is_s(g, v);
    rec.dt += is_t(g, v);
  }
  rec.profit = frac(5, 6) * rec.du + frac(1, 6) * rec.db + Rational(2 * rec.dk) -
               frac(1, 3) * rec.dt - frac(1, 4) * rec.ds;

  next.ledger = st.ledger;
  next.ledger.alpha += rec.profit;
  next.ledger.history.push_back(rec);

  const Rational fresh = potential(g, next);
  if (fresh != next.ledger.alpha)
    throw InvariantError("potential ledger drifted: ledger " +
                         to_string(next.ledger.alpha) + ", recomputed " +
                         to_string(fresh));
  if (rec.profit < profit_lower_bound(plan.kind))
    throw InvariantError("step " + std::string(name(plan.kind)) +
                         " at vertex " + std::to_string(plan.pivot) +
                         " has profit " + to_string(rec.profit) +
                         " below " + to_string(profit_lower_bound(plan.kind)));
  return next;
}

std::string base_equations_failure(const BaseStats &s) {
  auto i = [](std::size_t v) { return static_cast<std::int64_t>(v); };
  if (s.u != s.w2 + s.w3)
    return "|U'| = w2 + w3 fails";
  if (7 * i(s.x) > 2 * i(s.w2) + 3 * i(s.w3) + 3 * i(s.y3) + 4 * i(s.y4))
    return "7x <= 2w2 + 3w3 + 3y3 + 4y4 fails";
  if (2 * s.k > s.x)
    return "2k <= x fails";
  if (3 * s.k > s.x + s.w2)
    return "3k <= x + w2 fails";
  if (12 * i(s.k) > 5 * i(s.x) + 2 * i(s.w2))
    return "k <= 5x/12 + w2/6 fails";
  if (s.w2 + s.w3 + s.y3 + s.y4 < 7)
    return "w2 + w3 + y3 + y4 >= 7 fails";
  if (s.k2 > s.w2)
    return "k2 <= w2 fails";
  const Rational need = s.terminal ? frac(23, 12) : Rational(2);
  if (s.alpha < need)
    return "component potential " + to_string(s.alpha) + " below " +
           to_string(need);
  return {};
}

namespace {

void check_lemma5(const Graph &g, const DegreeClasses &c) {
  auto fail = [](const std::string &what) {
    throw InvariantError("pendant-vertex structure violated: " + what);
  };
  for (VertexId x : c.x) {
    if (g.degree(x) < 7)
      fail("X vertex " + std::to_string(x) + " has degree < 7");
    for (VertexId nb : g.neighbors(x))
      if (c.in_x(nb))
        fail("X vertices " + std::to_string(x) + " and " + std::to_string(nb) +
             " are adjacent");
  }
  for (VertexId w : c.w) {
    if (g.degree(w) > 4)
      fail("W vertex " + std::to_string(w) + " has degree > 4");
    std::size_t pendants = 0;
    for (VertexId nb : g.neighbors(w)) {
      if (c.in_w(nb))
        fail("W vertices " + std::to_string(w) + " and " + std::to_string(nb) +
             " are adjacent");
      pendants += c.in_u(nb);
    }
    if (pendants != 1)
      fail("W vertex " + std::to_string(w) + " has " +
           std::to_string(pendants) + " pendant neighbours");
  }
}

BaseResult star_base(const Graph &g, VertexId centre, std::size_t arms,
                     BaseKind kind, const Rational &need) {
  std::vector<Edge> edges;
  for (VertexId nb : first_n(g.neighbors(centre), arms))
    edges.emplace_back(centre, nb);
  BaseResult out;
  out.kind = kind;
  out.state = with_edges(g, std::move(edges));
  out.state.ledger.base_alpha = out.state.ledger.alpha =
      potential(g, out.state);
  if (out.state.ledger.alpha < need)
    throw InvariantError("star base potential " +
                         to_string(out.state.ledger.alpha) + " below " +
                         to_string(need));
  return out;
}

BaseResult bipartite_base(const Graph &g, const DegreeClasses &c) {
  check_lemma5(g, c);

  // The core: W, X, U, Y with the edges incident to W or X.
  std::vector<char> member(g.id_bound(), 0);
  for (const auto *set : {&c.w, &c.x, &c.u, &c.y})
    for (VertexId v : *set)
      member[v] = 1;
  Graph core(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v)
    if (!member[v])
      core.remove_vertex(v);
  for (const Edge &e : g.edges())
    if (c.in_w(e.u) || c.in_w(e.v) || c.in_x(e.u) || c.in_x(e.v))
      core.add_edge(e.u, e.v);

  BaseResult out;
  out.kind = BaseKind::Bipartite;
  std::vector<Edge> all;
  const auto parts = connected_components(core);
  for (const auto &part : parts) {
    BaseStats st;
    std::vector<VertexId> label(g.id_bound(), none);
    std::function<VertexId(VertexId)> root = [&](VertexId v) {
      return label[v] == v ? v : (label[v] = root(label[v]));
    };
    auto unite = [&](VertexId a, VertexId b) {
      a = root(a);
      b = root(b);
      if (a == b)
        return false;
      label[std::max(a, b)] = std::min(a, b);
      return true;
    };
    for (VertexId v : part)
      label[v] = v;

    // Spanning forest of the W-X part.
    std::vector<Edge> edges;
    for (VertexId v : part)
      if (c.in_w(v))
        for (VertexId nb : g.neighbors(v))
          if (c.in_x(nb) && unite(v, nb))
            edges.emplace_back(v, nb);
    for (VertexId v : part) {
      if (c.in_x(v))
        ++st.x;
      if (c.in_u(v))
        ++st.u;
    }

    // Components of the core minus Y, with their X counts.
    std::vector<std::size_t> xs_in(g.id_bound(), 0);
    for (VertexId v : part)
      if (c.in_x(v))
        ++xs_in[root(v)];
    for (VertexId v : part)
      if ((c.in_w(v) || c.in_x(v)) && root(v) == v) {
        ++st.k;
        st.k2 += xs_in[v] == 2;
      }

    for (VertexId v : part) {
      std::size_t xn = 0;
      for (VertexId nb : g.neighbors(v))
        xn += c.in_x(nb);
      if (c.in_w(v)) {
        if (xn == 2)
          ++st.w2;
        else if (xn == 3)
          ++st.w3;
        else
          throw InvariantError("W vertex " + std::to_string(v) + " has " +
                               std::to_string(xn) + " X neighbours");
      } else if (c.in_y(v)) {
        if (xn >= 4)
          ++st.y4;
        else
          ++st.y3;
      }
    }

    // Pendants hang on their W vertex, Y vertices on their lowest X one.
    for (VertexId v : part) {
      if (c.in_u(v)) {
        VertexId w = g.neighbors(v).front();
        unite(v, w);
        edges.emplace_back(v, w);
      } else if (c.in_y(v)) {
        for (VertexId nb : g.neighbors(v))
          if (c.in_x(nb)) {
            unite(v, nb);
            edges.emplace_back(v, nb);
            break;
          }
      }
    }
    // k - 1 further Y-X edges join the pieces.
    for (VertexId v : part)
      if (c.in_y(v))
        for (VertexId nb : g.neighbors(v))
          if (c.in_x(nb) && unite(v, nb))
            edges.emplace_back(v, nb);
    for (VertexId v : part)
      if (root(v) != root(part.front()))
        throw InvariantError("core component could not be joined into a tree");

    SpanningForest tree = make_forest(edges);
    auto u = static_cast<std::int64_t>(leaf_count(tree));
    auto b = static_cast<std::int64_t>(dead_leaves(g, tree).size());
    st.alpha = frac(5, 6) * u + frac(1, 6) * b - subgraph_cost(g, part);
    st.terminal = st.w2 == 0 && st.k == 1 && st.y3 == 0 && st.y4 == 0;
    if (st.terminal) {
      if (part.size() != g.vertex_count())
        throw InvariantError("terminal core component does not span the "
                             "graph");
      out.terminal = true;
    }
    if (auto why = base_equations_failure(st); !why.empty())
      throw InvariantError("core component at vertex " +
                           std::to_string(part.front()) + ": " + why);
    out.components.push_back(st);
    all.insert(all.end(), edges.begin(), edges.end());
  }

  out.state = with_edges(g, std::move(all));
  out.state.ledger.base_alpha = out.state.ledger.alpha =
      potential(g, out.state);
  const Rational need = out.terminal ? frac(23, 12) : Rational(2);
  if (out.state.ledger.alpha < need)
    throw InvariantError("core forest potential " +
                         to_string(out.state.ledger.alpha) + " below " +
                         to_string(need));
  for (VertexId v : c.u)
    if (!out.state.contains(v))
      throw InvariantError("pendant vertex missing from the base forest");
  return out;
}

} // namespace

BaseResult build_base(const Graph &g) {
  if (!is_connected(g) || g.vertex_count() <= 2)
    throw InputError("base construction needs a connected graph with more "
                     "than two vertices");
  if (find_reduction(g))
    throw InvariantError("base construction called on a reducible graph");
  const auto classes = classify(g);
  if (!classes.u.empty())
    return bipartite_base(g, classes);
  for (VertexId v : g.vertices())
    if (g.degree(v) < 3)
      throw InvariantError("vertex " + std::to_string(v) + " has degree " +
                           std::to_string(g.degree(v)) +
                           " in a graph without pendant vertices");
  if (!classes.t.empty())
    return star_base(g, classes.t.front(), 4, BaseKind::Star, frac(5, 3));
  return star_base(g, g.vertices().front(), 3, BaseKind::CubicStar,
                   frac(3, 2));
}

DeadVerticesResult run_to_spanning_tree(const Graph &g) {
  BaseResult base = build_base(g);
  DeadVerticesResult out;
  out.base = base.kind;
  out.base_stats = base.components;

  ForestState st = std::move(base.state);
  const std::size_t cap = 3 * g.vertex_count() + 3;
  for (std::size_t round = 0;; ++round) {
    if (round > cap)
      throw InvariantError("growth did not terminate");
    auto plan = find_step(g, st);
    if (!plan)
      break;
    st = apply_step(g, st, *plan);
  }
  check_final(g, st);
  out.tree = st.forest;
  out.ledger = st.ledger;

  const auto leaves = static_cast<std::int64_t>(leaf_count(out.tree));
  if (out.base == BaseKind::CubicStar) {
    const Rational need = Rational(static_cast<std::int64_t>(
                                       g.vertex_count()),
                                   4) +
                          frac(3, 2);
    if (Rational(leaves) < need) {
      if (g.vertex_count() > exact_fallback_limit)
        throw InvariantError("cubic tree misses v/4 + 3/2");
      out.tree = max_leaf_exact(g).witness;
      out.exhaustive_fallback = true;
    }
  } else if (Rational(leaves) < graph_cost(g) + frac(3, 2)) {
    throw InvariantError("dead-vertices tree misses the leaf bound");
  }
  return out;
}

} // namespace leafbound
