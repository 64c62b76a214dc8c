#include "leafbound/oracle.hpp"

#include "leafbound/cost.hpp"
#include "leafbound/errors.hpp"
#include "leafbound/tree.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <vector>

namespace leafbound {

namespace {

using Mask = std::uint64_t;

// Dense re-indexing of g with bitmask neighbourhoods.
struct Dense {
  std::vector<VertexId> ids;   // dense index -> vertex id
  std::vector<Mask> closed;    // closed neighbourhoods
  std::vector<Mask> open;      // open neighbourhoods
  Mask all = 0;
  Mask forced = 0;             // cutpoints
  std::vector<int> free_bits;  // indices that may or may not be internal
};

Dense prepare(const Graph &g) {
  if (g.vertex_count() < 2)
    throw InputError("oracle needs at least two vertices");
  if (g.vertex_count() > 64)
    throw InputError("oracle handles at most 64 vertices");
  if (!is_connected(g))
    throw InputError("oracle needs a connected graph");
  Dense d;
  d.ids = g.vertices();
  std::vector<int> index(g.id_bound(), -1);
  for (std::size_t i = 0; i < d.ids.size(); ++i)
    index[d.ids[i]] = static_cast<int>(i);
  const std::size_t n = d.ids.size();
  d.closed.assign(n, 0);
  d.open.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    d.closed[i] = Mask{1} << i;
    for (VertexId nb : g.neighbors(d.ids[i]))
      d.open[i] |= Mask{1} << index[nb];
    d.closed[i] |= d.open[i];
  }
  d.all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (VertexId c : cutpoints(g))
    d.forced |= Mask{1} << index[c];
  for (std::size_t i = 0; i < n; ++i)
    if (!(d.forced >> i & 1))
      d.free_bits.push_back(static_cast<int>(i));
  return d;
}

void check_budget(const Dense &d, std::uint64_t budget) {
  const std::size_t r = d.free_bits.size();
  if (r >= 63 || (Mask{1} << r) > budget)
    throw BudgetError("oracle search space 2^" + std::to_string(r) +
                      " exceeds the budget of " + std::to_string(budget) +
                      " candidates");
}

// Spreads the low bits of `compact` onto the free positions.
Mask deposit(const Dense &d, Mask compact) {
  Mask out = d.forced;
  for (std::size_t j = 0; compact; ++j, compact >>= 1)
    if (compact & 1)
      out |= Mask{1} << d.free_bits[j];
  return out;
}

bool connected_dominating(const Dense &d, Mask set) {
  if (set == 0)
    return false;
  Mask dom = 0;
  for (Mask m = set; m; m &= m - 1)
    dom |= d.closed[std::countr_zero(m)];
  if (dom != d.all)
    return false;
  Mask seen = set & -set, frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1)
      next |= d.open[std::countr_zero(m)];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

// Spanning tree of the internal set plus every other vertex hung on its
// lowest internal neighbour.
SpanningForest tree_from_internal(const Dense &d, Mask set) {
  std::vector<Edge> edges;
  Mask seen = set & -set, frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) {
      int v = std::countr_zero(m);
      for (Mask nb = d.open[v] & set & ~seen & ~next; nb; nb &= nb - 1) {
        int w = std::countr_zero(nb);
        edges.emplace_back(d.ids[v], d.ids[w]);
        next |= Mask{1} << w;
      }
    }
    seen |= next;
    frontier = next;
  }
  for (Mask m = d.all & ~set; m; m &= m - 1) {
    int v = std::countr_zero(m);
    int w = std::countr_zero(d.open[v] & set);
    edges.emplace_back(d.ids[v], d.ids[w]);
  }
  return make_forest(std::move(edges));
}

OracleResult finish(const Graph &g, const Dense &d, Mask best,
                    std::uint64_t explored) {
  OracleResult out;
  out.explored = explored;
  out.witness = tree_from_internal(d, best);
  out.u = d.ids.size() - static_cast<std::size_t>(std::popcount(best));
  TreeCheck check = check_tree(g, out.witness);
  if (!check.ok || check.leaves != out.u)
    throw InvariantError("oracle witness does not check: " + check.reason);
  return out;
}

OracleResult edge_case(const Graph &g) {
  OracleResult out;
  out.u = 2;
  out.witness = make_forest(g.edges());
  out.explored = 1;
  return out;
}

} // namespace

OracleResult max_leaf_exact_serial(const Graph &g, std::uint64_t budget) {
  Dense d = prepare(g);
  if (d.ids.size() == 2)
    return edge_case(g);
  check_budget(d, budget);
  const std::size_t r = d.free_bits.size();
  std::uint64_t explored = 0;
  for (std::size_t size = 0; size <= r; ++size) {
    if (size == 0) {
      ++explored;
      if (connected_dominating(d, d.forced))
        return finish(g, d, d.forced, explored);
      continue;
    }
    // Gosper's hack: all r-bit masks with `size` bits, ascending.
    Mask c = (Mask{1} << size) - 1;
    const Mask limit = Mask{1} << r;
    while (c < limit) {
      ++explored;
      Mask set = deposit(d, c);
      if (connected_dominating(d, set))
        return finish(g, d, set, explored);
      Mask low = c & -c, ripple = c + low;
      c = (((ripple ^ c) >> 2) / low) | ripple;
    }
  }
  throw InvariantError("oracle found no connected dominating set");
}

OracleResult max_leaf_exact(const Graph &g, std::uint64_t budget) {
  Dense d = prepare(g);
  if (d.ids.size() == 2)
    return edge_case(g);
  check_budget(d, budget);
  const int r = static_cast<int>(d.free_bits.size());

  // binom[n][k] for n <= r.
  std::vector<std::vector<std::uint64_t>> binom(r + 1);
  for (int n = 0; n <= r; ++n) {
    binom[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k)
      binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
  }
  auto choose = [&](int n, int k) -> std::uint64_t {
    return k < 0 || k > n ? 0 : binom[n][k];
  };
  // The rank-th mask with `size` bits in ascending order (colex unranking).
  auto unrank = [&](std::uint64_t rank, int size) {
    Mask out = 0;
    int top = r - 1;
    for (int k = size; k >= 1; --k) {
      while (choose(top, k) > rank)
        --top;
      out |= Mask{1} << top;
      rank -= choose(top, k);
      --top;
    }
    return out;
  };

  // Same order as the serial scan: by size, and within a size the smallest
  // mask wins. Each size is split into chunks that start from an unranked
  // mask and continue with Gosper's step.
  constexpr std::uint64_t chunk = 2048;
  std::uint64_t explored = 0;
  for (int size = 0; size <= r; ++size) {
    const std::uint64_t count = choose(r, size);
    const auto chunks = static_cast<std::int64_t>((count + chunk - 1) / chunk);
    std::atomic<Mask> best{~Mask{0}};
    std::uint64_t layer_explored = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : layer_explored)
    for (std::int64_t ci = 0; ci < chunks; ++ci) {
      const std::uint64_t first = static_cast<std::uint64_t>(ci) * chunk;
      const std::uint64_t last = std::min(count, first + chunk);
      Mask c = unrank(first, size);
      for (std::uint64_t i = first; i < last; ++i) {
        if (c >= best.load(std::memory_order_relaxed))
          break; // masks only grow within a chunk
        ++layer_explored;
        if (connected_dominating(d, deposit(d, c))) {
          Mask seen = best.load(std::memory_order_relaxed);
          while (c < seen && !best.compare_exchange_weak(
                                 seen, c, std::memory_order_relaxed)) {
          }
          break;
        }
        if (c == 0)
          break;
        Mask low = c & -c, ripple = c + low;
        c = (((ripple ^ c) >> 2) / low) | ripple;
      }
    }
    explored += layer_explored;
    if (best.load() != ~Mask{0})
      return finish(g, d, deposit(d, best.load()), explored);
  }
  throw InvariantError("oracle found no connected dominating set");
}

bool max_leaf_lower_bound_check(const Graph &g, std::uint64_t budget) {
  const auto u = static_cast<std::int64_t>(max_leaf_exact(g, budget).u);
  return Rational(u) >= graph_cost(g) + Rational(3, 2);
}

} // namespace leafbound
