#include "chroma/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "chroma/dsu.hpp"

namespace chroma {

namespace {

// C(n, k) saturating at the refusal budget to avoid overflow.
long long binomial_capped(long long n, long long k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (long long i = 1; i <= k; ++i) {
    if (result > cap) return cap + 1;
    result = result * (n - i + 1) / i;
  }
  return std::min(result, cap + 1);
}

void require_enumerable(const EdgeColoredGraph& graph, int m, const OracleLimits& limits) {
  if (graph.vertex_count() > limits.max_vertices) {
    std::ostringstream msg;
    msg << "oracle refuses n=" << graph.vertex_count() << " (cap " << limits.max_vertices << ")";
    throw std::runtime_error(msg.str());
  }
  const long long sets =
      binomial_capped(graph.edge_count(), graph.vertex_count() - m, limits.max_subsets);
  if (sets > limits.max_subsets) {
    std::ostringstream msg;
    msg << "oracle refuses C(" << graph.edge_count() << ", " << graph.vertex_count() - m
        << ") > " << limits.max_subsets << " candidate edge sets";
    throw std::runtime_error(msg.str());
  }
}

struct ForestEnumerator {
  const EdgeColoredGraph& graph;
  const std::function<bool(const std::vector<EdgeIndex>&)>& visit;
  RollbackDsu dsu;
  std::vector<EdgeIndex> chosen;

  ForestEnumerator(const EdgeColoredGraph& g,
                   const std::function<bool(const std::vector<EdgeIndex>&)>& v)
      : graph(g), visit(v), dsu(g.vertex_count()) {}

  // include-before-exclude at each index yields lexicographic order
  bool walk(EdgeIndex next, int need) {
    if (need == 0) return visit(chosen);
    if (graph.edge_count() - next < need) return true;
    const Edge& e = graph.edge(next);
    if (dsu.find(e.u) != dsu.find(e.v)) {
      const std::size_t mark = dsu.mark();
      dsu.unite(e.u, e.v);
      chosen.push_back(next);
      const bool keep_going = walk(next + 1, need - 1);
      chosen.pop_back();
      dsu.rollback(mark);
      if (!keep_going) return false;
    }
    return walk(next + 1, need);
  }
};

}  // namespace

void for_each_spanning_forest(const EdgeColoredGraph& graph, int m,
                              const std::function<bool(const std::vector<EdgeIndex>&)>& visit,
                              const OracleLimits& limits) {
  require_enumerable(graph, m, limits);
  const int need = graph.vertex_count() - m;
  if (need < 0 || need > graph.edge_count()) return;
  ForestEnumerator enumerator(graph, visit);
  enumerator.walk(0, need);
}

long long count_spanning_forests(const EdgeColoredGraph& graph, int m,
                                 const OracleLimits& limits) {
  long long count = 0;
  for_each_spanning_forest(
      graph, m,
      [&](const std::vector<EdgeIndex>&) {
        ++count;
        return true;
      },
      limits);
  return count;
}

bool brute_force_gf_exists(const EdgeColoredGraph& graph, const ColorBounds& bounds, int m,
                           const OracleLimits& limits) {
  bool exists = false;
  std::vector<int> hist(graph.color_count(), 0);
  for_each_spanning_forest(
      graph, m,
      [&](const std::vector<EdgeIndex>& edges) {
        std::fill(hist.begin(), hist.end(), 0);
        for (EdgeIndex i : edges) ++hist[graph.edge(i).color];
        for (ColorId c = 0; c < graph.color_count(); ++c) {
          if (hist[c] < bounds.g[c] || hist[c] > bounds.f[c]) return true;
        }
        exists = true;
        return false;
      },
      limits);
  return exists;
}

bool brute_force_condition(const EdgeColoredGraph& graph, const ColorBounds& bounds, int m,
                           const OracleLimits& limits) {
  if (graph.color_count() > limits.max_colors) {
    std::ostringstream msg;
    msg << "oracle refuses " << graph.color_count() << " colors (cap " << limits.max_colors
        << ")";
    throw std::runtime_error(msg.str());
  }
  const int colors = graph.color_count();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << colors); ++mask) {
    DisjointSets dsu(graph.vertex_count());
    for (const Edge& e : graph.edges()) {
      if (!(mask >> e.color & 1)) dsu.unite(e.u, e.v);
    }
    const int omega = dsu.set_count();
    long long f_sum = 0;
    long long g_outside = 0;
    for (ColorId c = 0; c < colors; ++c) {
      if (mask >> c & 1) {
        f_sum += bounds.f[c];
      } else {
        g_outside += bounds.g[c];
      }
    }
    const long long cap = std::min<long long>(m + f_sum, graph.vertex_count() - g_outside);
    if (omega > cap) return false;
  }
  return true;
}

}  // namespace chroma
