#pragma once

#include <optional>
#include <vector>

#include "chroma/colored_graph.hpp"
#include "chroma/feasibility.hpp"

namespace chroma {

// An acyclic subgraph of a host graph covering all its vertices, stored as
// sorted edge indices into the host. Component count and color histogram
// are fixed at construction.
class ColoredForest {
 public:
  // Throws std::invalid_argument on an out-of-range or repeated index, or
  // if the selected edges contain a cycle.
  ColoredForest(const EdgeColoredGraph& host, std::vector<EdgeIndex> edges);

  const EdgeColoredGraph& host() const { return *host_; }
  const std::vector<EdgeIndex>& edge_indices() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int components() const { return components_; }
  const ColorHistogram& histogram() const { return histogram_; }
  bool contains(EdgeIndex e) const;
  bool is_spanning_tree() const { return components_ == 1; }

  friend bool operator==(const ColoredForest& a, const ColoredForest& b) {
    return a.host_ == b.host_ && a.edges_ == b.edges_;
  }

 private:
  const EdgeColoredGraph* host_;
  std::vector<EdgeIndex> edges_;
  int components_;
  ColorHistogram histogram_;
};

// Progress counters for build_gf_spanning_forest.
struct ExchangeStats {
  int iterations = 0;     // exchange steps performed
  int overlap_start = 0;  // |E(F_f) ∩ E(F_g)| before the first step
  int overlap_end = 0;    // and after the last
};

// Spanning forest with exactly m components and at most f(c) edges of each
// color c, or nullopt if none exists. Grows a maximum common independent
// set of the graphic matroid and the color-capacity partition matroid by
// shortest augmenting paths.
std::optional<ColoredForest> build_f_spanning_forest(const EdgeColoredGraph& graph,
                                                     const std::vector<int>& f, int m);

// Forest with exactly g(c) edges of each color (hence n - sum(g)
// components), or nullopt. Requires sum(g) <= n - 1.
std::optional<ColoredForest> build_gg_forest(const EdgeColoredGraph& graph,
                                             const std::vector<int>& g);

// Spanning forest with exactly m components and g(c) <= uses of c <= f(c),
// or nullopt. Builds a g-exact forest and an f-bounded forest, then walks
// edges of the former into the latter, growing their overlap each step, so
// at most n - m exchange steps run. Preconditions as in
// check_gf_spanning_forest.
std::optional<ColoredForest> build_gf_spanning_forest(const EdgeColoredGraph& graph,
                                                      const ColorBounds& bounds, int m,
                                                      ExchangeStats* stats = nullptr);

}  // namespace chroma
