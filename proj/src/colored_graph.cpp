#include "chroma/colored_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "chroma/dsu.hpp"

namespace chroma {

ColorSet::ColorSet(std::vector<ColorId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ColorSet::contains(ColorId c) const {
  return std::binary_search(members_.begin(), members_.end(), c);
}

EdgeColoredGraph::EdgeColoredGraph(int vertex_count, std::vector<std::string> color_labels,
                                   const std::vector<LabeledEdge>& edges)
    : vertex_count_(vertex_count), color_labels_(std::move(color_labels)) {
  if (vertex_count < 1) throw std::invalid_argument("vertex count must be positive");

  std::unordered_map<std::string, ColorId> ids;
  ids.reserve(color_labels_.size());
  for (ColorId c = 0; c < static_cast<ColorId>(color_labels_.size()); ++c) {
    if (!ids.emplace(color_labels_[c], c).second)
      throw std::invalid_argument("duplicate color label '" + color_labels_[c] + "'");
  }

  edges_.reserve(edges.size());
  for (const LabeledEdge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.u) +
                                  ", " + std::to_string(e.v) + ")");
    if (e.u == e.v)
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    auto it = ids.find(e.color);
    if (it == ids.end())
      throw std::invalid_argument("edge color '" + e.color + "' is not in the color universe");
    edges_.push_back({e.u, e.v, it->second});
  }

  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  auto dup = std::adjacent_find(pairs.begin(), pairs.end());
  if (dup != pairs.end())
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->first) + ", " +
                                std::to_string(dup->second) + "}");
}

EdgeColoredGraph EdgeColoredGraph::with_numbered_colors(int vertex_count, int color_count,
                                                        const std::vector<Edge>& edges) {
  std::vector<std::string> labels;
  labels.reserve(color_count);
  for (int c = 1; c <= color_count; ++c) labels.push_back(std::to_string(c));
  std::vector<LabeledEdge> labeled;
  labeled.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.color < 0 || e.color >= color_count)
      throw std::invalid_argument("edge color id " + std::to_string(e.color) +
                                  " is not in the color universe");
    labeled.push_back({e.u, e.v, labels[e.color]});
  }
  return EdgeColoredGraph(vertex_count, std::move(labels), labeled);
}

ColorId EdgeColoredGraph::color_id(std::string_view label) const {
  for (ColorId c = 0; c < color_count(); ++c)
    if (color_labels_[c] == label) return c;
  throw std::invalid_argument("color '" + std::string(label) + "' is not in the color universe");
}

bool EdgeColoredGraph::is_complete() const {
  // Simple and loop-free by construction, so the edge count determines it.
  long long n = vertex_count_;
  return static_cast<long long>(edges_.size()) == n * (n - 1) / 2;
}

int component_count(const EdgeColoredGraph& graph) {
  DisjointSets dsu(graph.vertex_count());
  for (const Edge& e : graph.edges()) dsu.unite(e.u, e.v);
  return dsu.set_count();
}

EdgeColoredGraph remove_colors(const EdgeColoredGraph& graph, const ColorSet& removed) {
  for (ColorId c : removed.members())
    if (c < 0 || c >= graph.color_count())
      throw std::invalid_argument("color id " + std::to_string(c) +
                                  " is not in the color universe");
  std::vector<LabeledEdge> kept;
  for (const Edge& e : graph.edges())
    if (!removed.contains(e.color)) kept.push_back({e.u, e.v, graph.color_label(e.color)});
  return EdgeColoredGraph(graph.vertex_count(), graph.color_labels(), kept);
}

ColorHistogram color_histogram(const EdgeColoredGraph& graph) {
  ColorHistogram hist(graph.color_count());
  for (const Edge& e : graph.edges()) ++hist[e.color];
  return hist;
}

}  // namespace chroma
