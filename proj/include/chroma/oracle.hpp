#pragma once

#include <functional>

#include "chroma/colored_graph.hpp"
#include "chroma/feasibility.hpp"

namespace chroma {

// Size caps for the exhaustive reference routines; instances beyond them
// are refused with std::runtime_error instead of running unbounded.
struct OracleLimits {
  int max_vertices = 9;
  int max_colors = 16;
  long long max_subsets = 20'000'000;
};

// Visits the edge-index set of every spanning forest with exactly m
// components, in lexicographic order of the sorted index vectors. The
// visitor returns false to stop early. Refuses when C(|E|, n-m) exceeds
// limits.max_subsets or n exceeds limits.max_vertices.
void for_each_spanning_forest(const EdgeColoredGraph& graph, int m,
                              const std::function<bool(const std::vector<EdgeIndex>&)>& visit,
                              const OracleLimits& limits = {});

long long count_spanning_forests(const EdgeColoredGraph& graph, int m,
                                 const OracleLimits& limits = {});

// Literal existence check by enumeration: is there a spanning forest with
// exactly m components using each color c between g(c) and f(c) times?
// Applies no preconditions beyond the size limits.
bool brute_force_gf_exists(const EdgeColoredGraph& graph, const ColorBounds& bounds, int m,
                           const OracleLimits& limits = {});

// Literal evaluation of the subset condition over every subset R of the
// full color universe: omega(G - E_R) <= min(m + sum_{c in R} f(c),
// n - sum_{c not in R} g(c)). Refuses beyond limits.max_colors.
bool brute_force_condition(const EdgeColoredGraph& graph, const ColorBounds& bounds, int m,
                           const OracleLimits& limits = {});

}  // namespace chroma
