#pragma once

// Deterministic random instances and the fixed example instances shared by
// the unit and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "chroma/colored_graph.hpp"
#include "chroma/feasibility.hpp"

namespace test_support {

// Bounded draw by rejection so results depend only on the mt19937_64
// stream; mirrors the library's sampling to keep tests reproducible.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % k;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % k;
}

// Simple graph with 1..max_n vertices, 1..max_colors colors, each vertex
// pair present with probability about one half.
inline chroma::EdgeColoredGraph random_graph(std::mt19937_64& rng, int max_n, int max_colors) {
  const int n = 1 + static_cast<int>(draw(rng, max_n));
  const int colors = 1 + static_cast<int>(draw(rng, max_colors));
  std::vector<chroma::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (draw(rng, 2) == 0) continue;
      edges.push_back({u, v, static_cast<int>(draw(rng, colors))});
    }
  }
  return chroma::EdgeColoredGraph::with_numbered_colors(n, colors, edges);
}

// Complete graph on n vertices with colors drawn uniformly from a palette.
inline chroma::EdgeColoredGraph random_complete(std::mt19937_64& rng, int n, int palette) {
  std::vector<chroma::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      edges.push_back({u, v, static_cast<int>(draw(rng, palette))});
    }
  }
  return chroma::EdgeColoredGraph::with_numbered_colors(n, palette, edges);
}

struct RandomBounds {
  chroma::ColorBounds bounds;
  int m = 1;
};

// Bounds and component count satisfying every precondition of the checker:
// 1 <= m <= n, g <= f, and n >= m + sum(g).
inline RandomBounds random_bounds(std::mt19937_64& rng, const chroma::EdgeColoredGraph& graph) {
  const int n = graph.vertex_count();
  RandomBounds out;
  out.m = 1 + static_cast<int>(draw(rng, n));
  int slack = n - out.m;  // how much sum(g) may still grow
  out.bounds.g.assign(graph.color_count(), 0);
  out.bounds.f.assign(graph.color_count(), 0);
  for (chroma::ColorId c = 0; c < graph.color_count(); ++c) {
    const int g = static_cast<int>(draw(rng, std::min(slack, 2) + 1));
    slack -= g;
    out.bounds.g[c] = g;
    out.bounds.f[c] = g + static_cast<int>(draw(rng, 4));
  }
  return out;
}

// K_3 with every edge the same color: the smallest instance where single
// color use caps bite (a heterochromatic spanning tree needs two colors).
inline chroma::EdgeColoredGraph make_triangle() {
  return chroma::EdgeColoredGraph::with_numbered_colors(3, 1,
                                                        {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}});
}

struct GfInstance {
  chroma::EdgeColoredGraph graph;
  chroma::ColorBounds bounds;
  int m = 1;
};

// Eight vertices, seven colors, twelve edges. Removing colors 1, 4, 5, 7
// leaves the components {0,1,2}, {3,4}, {5,6}, {7}, so that subset gives
// omega 4 against bounds min(1 + 3+0+0+2, 8 - (2+2+1)) = 3: infeasible,
// even though every per-color floor is individually coverable.
inline GfInstance make_certificate_instance() {
  std::vector<chroma::LabeledEdge> edges = {
      {3, 5, "1"}, {5, 7, "1"}, {1, 7, "1"},  // color 1
      {0, 1, "2"}, {3, 4, "2"},               // color 2
      {1, 2, "3"}, {5, 6, "3"},               // color 3
      {4, 6, "4"},                            // color 4
      {6, 7, "5"},                            // color 5
      {0, 2, "6"},                            // color 6
      {0, 5, "7"}, {3, 6, "7"},               // color 7
  };
  chroma::EdgeColoredGraph graph(8, {"1", "2", "3", "4", "5", "6", "7"}, edges);
  chroma::ColorBounds bounds;
  bounds.g = {0, 2, 2, 0, 0, 1, 0};
  bounds.f = {3, 2, 3, 0, 0, 1, 2};
  return {std::move(graph), std::move(bounds), 1};
}

// Complete graph on six vertices with color counts 3, 3, 6, 3: every
// 2|E_c| is divisible by 6, so a spanning tree with the exact distribution
// (1/5, 1/5, 2/5, 1/5) exists and must have histogram 1, 1, 2, 1.
inline chroma::EdgeColoredGraph make_k6_four_colors() {
  std::vector<chroma::Edge> edges = {
      {0, 1, 0}, {0, 2, 0}, {0, 3, 0},                          // color 1, 3 edges
      {0, 4, 1}, {0, 5, 1}, {1, 2, 1},                          // color 2, 3 edges
      {1, 3, 2}, {1, 4, 2}, {1, 5, 2}, {2, 3, 2}, {2, 4, 2}, {2, 5, 2},  // color 3, 6 edges
      {3, 4, 3}, {3, 5, 3}, {4, 5, 3},                          // color 4, 3 edges
  };
  return chroma::EdgeColoredGraph::with_numbered_colors(6, 4, edges);
}

// Complete graph on six vertices with color counts 7, 4, 2, 2; per-tree
// bounds for three trees are [2,3], [1,2], [0,1], [0,1].
inline chroma::EdgeColoredGraph make_k6_heavy_color() {
  std::vector<chroma::Edge> edges = {
      {0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {0, 4, 0}, {0, 5, 0}, {1, 2, 0}, {1, 3, 0},  // 7
      {1, 4, 1}, {1, 5, 1}, {2, 3, 1}, {2, 4, 1},                                    // 4
      {2, 5, 2}, {3, 4, 2},                                                          // 2
      {3, 5, 3}, {4, 5, 3},                                                          // 2
  };
  return chroma::EdgeColoredGraph::with_numbered_colors(6, 4, edges);
}

// Complete graph on six vertices with seven colors (counts 3, 2, 2, 2, 2,
// 2, 2). Fifteen edges cannot split into seven multiples of three, so no
// spanning tree has the exact distribution; color 2 is the first offender.
inline chroma::EdgeColoredGraph make_k6_seven_colors() {
  std::vector<chroma::Edge> edges = {
      {0, 1, 0}, {0, 2, 0}, {0, 3, 0},  // color 1
      {0, 4, 1}, {0, 5, 1},             // color 2
      {1, 2, 2}, {1, 3, 2},             // color 3
      {1, 4, 3}, {1, 5, 3},             // color 4
      {2, 3, 4}, {2, 4, 4},             // color 5
      {2, 5, 5}, {3, 4, 5},             // color 6
      {3, 5, 6}, {4, 5, 6},             // color 7
  };
  return chroma::EdgeColoredGraph::with_numbered_colors(6, 7, edges);
}

// Path 0-1-2-3 with three distinct colors: a rainbow spanning tree exists,
// but the edge count is too small for the counting-based sufficient
// condition (3 edges, not more than C(3, 2) = 3).
inline chroma::EdgeColoredGraph make_rainbow_path() {
  return chroma::EdgeColoredGraph::with_numbered_colors(4, 3,
                                                        {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}});
}

}  // namespace test_support
