#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "chroma/colored_graph.hpp"
#include "chroma/construction.hpp"

namespace chroma {

using Rational = boost::rational<long long>;

// Exact per-color edge fractions |E_c| / |E| of a graph, indexed by color
// id; entries sum to one. Undefined (throws) on an edgeless graph.
struct ColorDistribution {
  std::vector<Rational> probabilities;

  friend bool operator==(const ColorDistribution&, const ColorDistribution&) = default;
};

ColorDistribution color_distribution(const EdgeColoredGraph& graph);

// Expected color counts of a spanning tree matching the edge distribution
// of the host, rounded both ways: lower[c] = floor(|E_c|(n-1)/|E|),
// upper[c] = ceil of the same.
struct SimilarityBounds {
  std::vector<int> lower;
  std::vector<int> upper;
};

SimilarityBounds similarity_bounds(const EdgeColoredGraph& graph);

// A spanning tree whose per-color counts sit within the similarity bounds.
// For a complete host with at least two vertices such a tree always exists;
// an internal failure therefore throws std::logic_error rather than
// returning an empty result.
ColoredForest build_similar_tree(const EdgeColoredGraph& graph);

// A spanning tree whose color distribution equals the host's exactly, which
// requires every 2|E_c| / n to be an integer. On failure, offending_color
// is the lowest color id breaking that divisibility.
struct ExactTreeResult {
  std::optional<ColoredForest> tree;
  ColorId offending_color = -1;

  bool representable() const { return tree.has_value(); }
};

ExactTreeResult exact_distribution_tree(const EdgeColoredGraph& graph);

}  // namespace chroma
