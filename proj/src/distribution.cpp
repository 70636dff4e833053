#include "chroma/distribution.hpp"

#include <sstream>
#include <stdexcept>

namespace chroma {

namespace {

void require_complete_with_edges(const EdgeColoredGraph& graph, const char* what) {
  if (!graph.is_complete() || graph.edge_count() == 0) {
    std::ostringstream msg;
    msg << what << " requires a complete graph on at least two vertices";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

ColorDistribution color_distribution(const EdgeColoredGraph& graph) {
  if (graph.edge_count() == 0) {
    throw std::invalid_argument("color distribution undefined for a graph with no edges");
  }
  const ColorHistogram hist = color_histogram(graph);
  ColorDistribution dist;
  dist.probabilities.reserve(graph.color_count());
  for (ColorId c = 0; c < graph.color_count(); ++c) {
    dist.probabilities.emplace_back(hist[c], graph.edge_count());
  }
  return dist;
}

SimilarityBounds similarity_bounds(const EdgeColoredGraph& graph) {
  if (graph.edge_count() == 0) {
    throw std::invalid_argument("similarity bounds undefined for a graph with no edges");
  }
  const ColorHistogram hist = color_histogram(graph);
  const long long total = graph.edge_count();
  const long long scale = graph.vertex_count() - 1;
  SimilarityBounds bounds;
  bounds.lower.reserve(graph.color_count());
  bounds.upper.reserve(graph.color_count());
  for (ColorId c = 0; c < graph.color_count(); ++c) {
    const long long share = hist[c] * scale;  // tree size times the color's edge fraction
    bounds.lower.push_back(static_cast<int>(share / total));
    bounds.upper.push_back(static_cast<int>((share + total - 1) / total));
  }
  return bounds;
}

ColoredForest build_similar_tree(const EdgeColoredGraph& graph) {
  require_complete_with_edges(graph, "build_similar_tree");
  const SimilarityBounds bounds = similarity_bounds(graph);
  // Feasibility follows from the counting condition: a complete graph has
  // more than C(n-1, 2) edges and every expected count sits between its
  // floor and ceiling, so the construction may not fail.
  auto tree = build_gf_spanning_forest(graph, {bounds.lower, bounds.upper}, 1);
  if (!tree) {
    throw std::logic_error("build_similar_tree: no tree despite the similarity guarantee");
  }
  return *std::move(tree);
}

ExactTreeResult exact_distribution_tree(const EdgeColoredGraph& graph) {
  require_complete_with_edges(graph, "exact_distribution_tree");
  const ColorHistogram hist = color_histogram(graph);
  const int n = graph.vertex_count();
  std::vector<int> exact(graph.color_count(), 0);
  for (ColorId c = 0; c < graph.color_count(); ++c) {
    // a tree share equal to |E_c| / |E| over n-1 edges means 2|E_c| / n edges
    const long long doubled = 2LL * hist[c];
    if (doubled % n != 0) return {std::nullopt, c};
    exact[c] = static_cast<int>(doubled / n);
  }
  auto tree = build_gf_spanning_forest(graph, {exact, exact}, 1);
  if (!tree) {
    throw std::logic_error("exact_distribution_tree: no tree despite divisibility");
  }
  // the histogram is pinned, so the distributions agree by construction;
  // verify in exact arithmetic anyway
  const ColorDistribution host_dist = color_distribution(graph);
  for (ColorId c = 0; c < graph.color_count(); ++c) {
    if (Rational(tree->histogram()[c], n - 1) != host_dist.probabilities[c]) {
      throw std::logic_error("exact_distribution_tree: distribution mismatch");
    }
  }
  return {*std::move(tree), -1};
}

}  // namespace chroma
