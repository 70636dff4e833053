#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chroma/colored_graph.hpp"

namespace chroma {

// A claimed partition of the host's edges into spanning trees. Plain data
// on purpose: invalid claims must be representable so verify_partition can
// report what is wrong with them.
struct TreePartition {
  const EdgeColoredGraph* host = nullptr;
  std::vector<std::vector<EdgeIndex>> trees;
};

struct PartitionCheck {
  bool ok = false;
  std::string violation;  // empty when ok; one human-readable sentence otherwise
};

// Checks that the trees are edge-disjoint, cover every edge, are each a
// spanning tree, and that each tree uses every color c between
// floor(|E_c|/t) and ceil(|E_c|/t) times, t being the number of trees.
PartitionCheck verify_partition(const EdgeColoredGraph& graph, const TreePartition& partition);

enum class SearchMode { Exact, Heuristic };
enum class SearchOutcome { Found, Exhausted, BudgetExceeded };

struct SearchOptions {
  SearchMode mode = SearchMode::Exact;
  long long node_budget = 0;  // 0 picks the mode default
  std::uint64_t seed = 0;     // heuristic restarts only
  int workers = 1;
  std::string artifact_path;  // exhausted instances are dumped here when set
};

inline constexpr long long kDefaultExactBudget = 20'000'000;
inline constexpr long long kDefaultHeuristicBudget = 5'000'000;

struct SearchReport {
  SearchOutcome outcome = SearchOutcome::BudgetExceeded;
  std::optional<TreePartition> partition;  // present iff outcome is Found
  long long nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

// Searches for a partition of a complete graph on 2k vertices into k
// spanning trees whose per-tree color counts all sit within
// [floor(|E_c|/k), ceil(|E_c|/k)]. Exact mode runs an exhaustive
// backtracking search and can prove absence (Exhausted, which would
// refute the underlying conjecture, so such instances are preserved via
// artifact_path). Heuristic mode runs seeded restarts of a perturbed
// path-decomposition with local search and can only find, never refute.
// With workers == 1 the search is deterministic for a fixed seed.
SearchReport partition_similar_trees(const EdgeColoredGraph& graph,
                                     const SearchOptions& options = {});

enum class ColoringProfile { Uniform, Skewed, ProperIsh };

// Complete graph on `order` vertices (even, at least 6) with edge colors
// drawn from labels "1".."palette" by the given profile, reproducible from
// the seed. Uniform picks colors independently; Skewed weights color j
// proportionally to 2^-j; ProperIsh greedily balances colors around each
// vertex, breaking ties by seed.
EdgeColoredGraph random_complete_coloring(int order, int palette, std::uint64_t seed,
                                          ColoringProfile profile = ColoringProfile::Uniform);

}  // namespace chroma
