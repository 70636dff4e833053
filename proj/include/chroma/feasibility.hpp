#pragma once

#include <optional>
#include <vector>

#include "chroma/colored_graph.hpp"

namespace chroma {

// Lower and upper usage bounds per color, indexed by dense color id over
// the full color universe of the graph they are checked against.
struct ColorBounds {
  std::vector<int> g;
  std::vector<int> f;

  static ColorBounds uniform(int color_count, int g_value, int f_value) {
    return {std::vector<int>(color_count, g_value), std::vector<int>(color_count, f_value)};
  }

  long long g_total() const {
    long long sum = 0;
    for (int x : g) sum += x;
    return sum;
  }
};

// The three quantities of the subset condition for one color subset R:
// the component count of the graph with R's edges removed, and the two
// bounds it is compared against.
struct SubsetEvaluation {
  int omega = 0;
  long long f_bound = 0;  // m + sum of f over R
  long long g_bound = 0;  // n - sum of g over the complement of R

  bool violated() const { return omega > std::min(f_bound, g_bound); }
};

// A color subset witnessing infeasibility, self-checking: recomputing the
// three quantities for `colors` must again give omega > min(f_bound, g_bound).
struct ViolationCertificate {
  ColorSet colors;
  int omega = 0;
  long long f_bound = 0;
  long long g_bound = 0;
};

struct FeasibilityVerdict {
  bool feasible = false;
  std::optional<ViolationCertificate> certificate;  // present iff infeasible
};

// Present-color cap for the exponential subset loop; larger instances are
// refused rather than approximated.
inline constexpr int kDefaultPresentColorCap = 24;

// Evaluates the subset condition for a single R.
SubsetEvaluation evaluate_color_subset(const EdgeColoredGraph& graph, const ColorBounds& bounds,
                                       int m, const ColorSet& subset);

// Decides whether the graph has a spanning forest with exactly m components
// in which every color c is used between g(c) and f(c) times. Infeasible
// verdicts carry the first violating subset in (popcount, bitmask) order
// over the colors that actually occur on edges.
//
// Throws std::invalid_argument when 1 <= m <= n fails, g(c) > f(c) for some
// color, or n < m + sum(g); throws std::runtime_error when more than
// max_present_colors colors occur on edges.
FeasibilityVerdict check_gf_spanning_forest(const EdgeColoredGraph& graph,
                                            const ColorBounds& bounds, int m,
                                            int max_present_colors = kDefaultPresentColorCap);

// Spanning tree with every color used at most once (g=0, f=1, m=1).
FeasibilityVerdict check_heterochromatic_spanning_tree(const EdgeColoredGraph& graph);

// Upper bounds only (g=0).
FeasibilityVerdict check_f_spanning_forest(const EdgeColoredGraph& graph,
                                           const std::vector<int>& f, int m);

// The fast sufficient condition: |E| > C(n-m, 2) and
// g(c) <= (|E_c|/|E|)(n-m) <= f(c) for every color, decided in exact
// integer arithmetic. True implies feasibility; false decides nothing.
bool check_sufficient_condition(const EdgeColoredGraph& graph, const ColorBounds& bounds, int m);

}  // namespace chroma
