#pragma once

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace chroma {

using VertexId = int;
using ColorId = int;
using EdgeIndex = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  ColorId color = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge as it appears in input documents: endpoints plus a color label.
struct LabeledEdge {
  VertexId u = 0;
  VertexId v = 0;
  std::string color;
};

// Per-color edge counts of a graph or subgraph. Colors that occur on no
// edge are present with count 0, so the index range always matches the
// color universe of the graph the histogram was taken from.
class ColorHistogram {
 public:
  ColorHistogram() = default;
  explicit ColorHistogram(int color_count) : counts_(color_count, 0) {}

  int& operator[](ColorId c) { return counts_[c]; }
  int operator[](ColorId c) const { return counts_[c]; }
  int color_count() const { return static_cast<int>(counts_.size()); }

  long long total() const {
    long long sum = 0;
    for (int c : counts_) sum += c;
    return sum;
  }

  const std::vector<int>& counts() const { return counts_; }

  friend bool operator==(const ColorHistogram&, const ColorHistogram&) = default;

 private:
  std::vector<int> counts_;
};

// A subset of the color universe, kept sorted and duplicate-free.
class ColorSet {
 public:
  ColorSet() = default;
  explicit ColorSet(std::vector<ColorId> members);

  bool contains(ColorId c) const;
  bool empty() const { return members_.empty(); }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<ColorId>& members() const { return members_; }

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  std::vector<ColorId> members_;
};

// An undirected simple graph with one color per edge. Vertices are dense
// ids 0..n-1; colors are interned string labels with dense ids given by
// their position in the universe. The universe may contain colors that no
// edge uses. Immutable after construction and safe to share across threads.
class EdgeColoredGraph {
 public:
  // Throws std::invalid_argument on loops, duplicate vertex pairs,
  // out-of-range endpoints, unknown or duplicate color labels, or n < 1.
  EdgeColoredGraph(int vertex_count, std::vector<std::string> color_labels,
                   const std::vector<LabeledEdge>& edges);

  // Convenience constructor with labels "1".."color_count" and edges
  // referring to colors by dense id.
  static EdgeColoredGraph with_numbered_colors(int vertex_count, int color_count,
                                               const std::vector<Edge>& edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int color_count() const { return static_cast<int>(color_labels_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex i) const { return edges_[i]; }

  const std::vector<std::string>& color_labels() const { return color_labels_; }
  const std::string& color_label(ColorId c) const { return color_labels_[c]; }
  // Throws std::invalid_argument for labels outside the universe.
  ColorId color_id(std::string_view label) const;

  bool is_complete() const;

 private:
  EdgeColoredGraph() = default;

  int vertex_count_ = 0;
  std::vector<std::string> color_labels_;
  std::vector<Edge> edges_;
};

// Number of connected components, isolated vertices included.
int component_count(const EdgeColoredGraph& graph);

// The graph with every edge whose color lies in `removed` deleted; vertex
// set and color universe are preserved. Throws on color ids outside the
// universe.
EdgeColoredGraph remove_colors(const EdgeColoredGraph& graph, const ColorSet& removed);

ColorHistogram color_histogram(const EdgeColoredGraph& graph);

}  // namespace chroma
