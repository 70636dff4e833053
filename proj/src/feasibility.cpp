#include "chroma/feasibility.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "chroma/dsu.hpp"

namespace chroma {

namespace {

void require_bounds_shape(const EdgeColoredGraph& graph, const ColorBounds& bounds) {
  const auto count = static_cast<std::size_t>(graph.color_count());
  if (bounds.g.size() != count || bounds.f.size() != count) {
    std::ostringstream msg;
    msg << "bounds must cover all " << graph.color_count() << " colors (got g:" << bounds.g.size()
        << ", f:" << bounds.f.size() << ")";
    throw std::invalid_argument(msg.str());
  }
  for (ColorId c = 0; c < graph.color_count(); ++c) {
    if (bounds.g[c] < 0 || bounds.f[c] < 0) {
      std::ostringstream msg;
      msg << "bounds for color '" << graph.color_label(c) << "' must be non-negative";
      throw std::invalid_argument(msg.str());
    }
  }
}

void require_m_range(const EdgeColoredGraph& graph, int m) {
  if (m < 1 || m > graph.vertex_count()) {
    std::ostringstream msg;
    msg << "component count m=" << m << " must satisfy 1 <= m <= n=" << graph.vertex_count();
    throw std::invalid_argument(msg.str());
  }
}

void require_gf_preconditions(const EdgeColoredGraph& graph, const ColorBounds& bounds, int m) {
  require_m_range(graph, m);
  require_bounds_shape(graph, bounds);
  for (ColorId c = 0; c < graph.color_count(); ++c) {
    if (bounds.g[c] > bounds.f[c]) {
      std::ostringstream msg;
      msg << "g('" << graph.color_label(c) << "') = " << bounds.g[c] << " exceeds f = "
          << bounds.f[c];
      throw std::invalid_argument(msg.str());
    }
  }
  if (graph.vertex_count() < m + bounds.g_total()) {
    std::ostringstream msg;
    msg << "n >= m + sum(g) fails: n=" << graph.vertex_count() << ", m=" << m
        << ", sum(g)=" << bounds.g_total();
    throw std::invalid_argument(msg.str());
  }
}

// Component count of the graph after deleting all edges whose color id is
// flagged in `removed`.
int omega_without(const EdgeColoredGraph& graph, const std::vector<char>& removed) {
  DisjointSets dsu(graph.vertex_count());
  for (const Edge& e : graph.edges()) {
    if (!removed[e.color]) dsu.unite(e.u, e.v);
  }
  return dsu.set_count();
}

// Next k-combination of set bits (Gosper's hack). `v` must be nonzero.
std::uint32_t next_combination(std::uint32_t v) {
  const std::uint32_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

SubsetEvaluation evaluate_color_subset(const EdgeColoredGraph& graph, const ColorBounds& bounds,
                                       int m, const ColorSet& subset) {
  require_m_range(graph, m);
  require_bounds_shape(graph, bounds);
  std::vector<char> removed(graph.color_count(), 0);
  for (ColorId c : subset.members()) {
    if (c < 0 || c >= graph.color_count()) {
      throw std::invalid_argument("subset contains a color id outside the universe");
    }
    removed[c] = 1;
  }
  SubsetEvaluation eval;
  eval.omega = omega_without(graph, removed);
  long long f_sum = 0;
  long long g_complement_sum = 0;
  for (ColorId c = 0; c < graph.color_count(); ++c) {
    if (removed[c]) {
      f_sum += bounds.f[c];
    } else {
      g_complement_sum += bounds.g[c];
    }
  }
  eval.f_bound = m + f_sum;
  eval.g_bound = graph.vertex_count() - g_complement_sum;
  return eval;
}

FeasibilityVerdict check_gf_spanning_forest(const EdgeColoredGraph& graph,
                                            const ColorBounds& bounds, int m,
                                            int max_present_colors) {
  require_gf_preconditions(graph, bounds, m);

  // Only colors that occur on an edge can change omega, and dropping an
  // absent color from R tightens neither bound, so a violating subset over
  // the full universe restricts to a violating subset of present colors
  // that comes no later in (popcount, bitmask) order. Enumerating subsets
  // of present colors therefore decides the same predicate and yields the
  // same first certificate.
  const ColorHistogram hist = color_histogram(graph);
  std::vector<ColorId> present;
  for (ColorId c = 0; c < graph.color_count(); ++c) {
    if (hist[c] > 0) present.push_back(c);
  }
  const int p = static_cast<int>(present.size());
  if (p > max_present_colors) {
    std::ostringstream msg;
    msg << "instance too large for exact check: " << p << " colors occur on edges (cap "
        << max_present_colors << ")";
    throw std::runtime_error(msg.str());
  }

  const long long g_total = bounds.g_total();
  std::vector<char> removed(graph.color_count(), 0);

  auto evaluate_mask = [&](std::uint32_t mask) -> std::optional<ViolationCertificate> {
    std::fill(removed.begin(), removed.end(), 0);
    long long f_sum = 0;
    long long g_sum = 0;
    std::vector<ColorId> members;
    for (int i = 0; i < p; ++i) {
      if (mask >> i & 1) {
        const ColorId c = present[i];
        removed[c] = 1;
        f_sum += bounds.f[c];
        g_sum += bounds.g[c];
        members.push_back(c);
      }
    }
    const int omega = omega_without(graph, removed);
    const long long f_bound = m + f_sum;
    const long long g_bound = graph.vertex_count() - (g_total - g_sum);
    if (omega > std::min(f_bound, g_bound)) {
      return ViolationCertificate{ColorSet(std::move(members)), omega, f_bound, g_bound};
    }
    return std::nullopt;
  };

  for (int k = 0; k <= p; ++k) {
    if (k == 0) {
      if (auto cert = evaluate_mask(0)) return {false, std::move(cert)};
      continue;
    }
    std::uint32_t mask = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << p;
    while (mask < limit) {
      if (auto cert = evaluate_mask(mask)) return {false, std::move(cert)};
      if (mask == limit - (std::uint32_t{1} << (p - k))) break;  // highest k-subset
      mask = next_combination(mask);
    }
  }
  return {true, std::nullopt};
}

FeasibilityVerdict check_heterochromatic_spanning_tree(const EdgeColoredGraph& graph) {
  return check_gf_spanning_forest(graph, ColorBounds::uniform(graph.color_count(), 0, 1), 1);
}

FeasibilityVerdict check_f_spanning_forest(const EdgeColoredGraph& graph,
                                           const std::vector<int>& f, int m) {
  return check_gf_spanning_forest(graph, {std::vector<int>(graph.color_count(), 0), f}, m);
}

bool check_sufficient_condition(const EdgeColoredGraph& graph, const ColorBounds& bounds, int m) {
  require_m_range(graph, m);
  require_bounds_shape(graph, bounds);
  const long long n = graph.vertex_count();
  const long long total = graph.edge_count();
  if (total <= (n - m) * (n - m - 1) / 2) return false;
  const ColorHistogram hist = color_histogram(graph);
  for (ColorId c = 0; c < graph.color_count(); ++c) {
    // g(c) <= |E_c| (n-m) / |E| <= f(c), cross-multiplied to stay exact
    const long long share = static_cast<long long>(hist[c]) * (n - m);
    if (static_cast<long long>(bounds.g[c]) * total > share) return false;
    if (share > static_cast<long long>(bounds.f[c]) * total) return false;
  }
  return true;
}

}  // namespace chroma
