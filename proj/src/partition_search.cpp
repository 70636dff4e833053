#include "chroma/partition_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "chroma/dsu.hpp"
#include "chroma/io.hpp"

namespace chroma {

namespace {

// Uniform draw from [0, k) by rejection, so results depend only on the
// mt19937_64 stream and not on any library's distribution internals.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % k;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % k;
}

struct TreeBounds {
  std::vector<int> low;
  std::vector<int> up;
  int tree_count = 0;
  int tree_size = 0;
};

TreeBounds per_tree_bounds(const EdgeColoredGraph& graph, int tree_count) {
  const ColorHistogram hist = color_histogram(graph);
  TreeBounds bounds;
  bounds.tree_count = tree_count;
  bounds.tree_size = graph.vertex_count() - 1;
  bounds.low.reserve(graph.color_count());
  bounds.up.reserve(graph.color_count());
  for (ColorId c = 0; c < graph.color_count(); ++c) {
    bounds.low.push_back(hist[c] / tree_count);
    bounds.up.push_back((hist[c] + tree_count - 1) / tree_count);
  }
  return bounds;
}

void require_partitionable(const EdgeColoredGraph& graph) {
  if (!graph.is_complete() || graph.vertex_count() % 2 != 0 || graph.vertex_count() < 2) {
    throw std::invalid_argument(
        "partition search requires a complete graph on an even number of vertices");
  }
}

// ---------------------------------------------------------------------------
// exact backtracking search

struct ExactShared {
  std::atomic<long long> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  long long budget = 0;
  std::mutex result_mutex;
  std::optional<std::vector<std::int8_t>> result;
};

class ExactWorker {
 public:
  ExactWorker(const EdgeColoredGraph& graph, const std::vector<EdgeIndex>& order,
              const TreeBounds& bounds, ExactShared& shared)
      : graph_(graph),
        order_(order),
        bounds_(bounds),
        shared_(shared),
        dsu_(bounds.tree_count, RollbackDsu(graph.vertex_count())),
        counts_(bounds.tree_count, std::vector<int>(graph.color_count(), 0)),
        sizes_(bounds.tree_count, 0),
        remaining_(graph.color_count(), 0),
        deficit_(graph.color_count(), 0),
        tree_at_(bounds.tree_count, std::vector<int>(graph.vertex_count(), 0)),
        unassigned_at_(graph.vertex_count(), 0),
        needed_at_(graph.vertex_count(), 0),
        assignment_(order.size(), -1) {}

  // Search the subtree below a fixed assignment of the first edges.
  // Prefixes come from collect_prefixes and are valid by construction.
  void run(const std::vector<std::int8_t>& prefix) {
    reset();
    for (std::size_t i = 0; i < prefix.size(); ++i) apply(static_cast<int>(i), prefix[i]);
    search(static_cast<int>(prefix.size()));
  }

  // Expands the choice tree breadth-first until at least `min_leaves`
  // partial assignments exist; used to split work across threads.
  std::vector<std::vector<std::int8_t>> collect_prefixes(int min_leaves) {
    std::vector<std::vector<std::int8_t>> frontier{{}};
    int depth = 0;
    const int depth_cap = static_cast<int>(order_.size());
    while (static_cast<int>(frontier.size()) < min_leaves && depth < depth_cap) {
      std::vector<std::vector<std::int8_t>> next;
      for (const auto& prefix : frontier) {
        reset();
        for (std::size_t i = 0; i < prefix.size(); ++i) apply(static_cast<int>(i), prefix[i]);
        for (std::int8_t t : viable_trees(depth)) {
          auto extended = prefix;
          extended.push_back(t);
          next.push_back(std::move(extended));
        }
      }
      if (next.empty()) return {};  // no assignment survives this depth
      frontier = std::move(next);
      ++depth;
    }
    return frontier;
  }

 private:
  void reset() {
    const ColorHistogram hist = color_histogram(graph_);
    for (auto& d : dsu_) d = RollbackDsu(graph_.vertex_count());
    for (auto& row : counts_) std::fill(row.begin(), row.end(), 0);
    std::fill(sizes_.begin(), sizes_.end(), 0);
    for (ColorId c = 0; c < graph_.color_count(); ++c) {
      remaining_[c] = hist[c];
      deficit_[c] = static_cast<long long>(bounds_.tree_count) * bounds_.low[c];
    }
    for (auto& row : tree_at_) std::fill(row.begin(), row.end(), 0);
    std::fill(unassigned_at_.begin(), unassigned_at_.end(), 0);
    for (EdgeIndex i = 0; i < graph_.edge_count(); ++i) {
      unassigned_at_[graph_.edge(i).u] += 1;
      unassigned_at_[graph_.edge(i).v] += 1;
    }
    std::fill(needed_at_.begin(), needed_at_.end(), bounds_.tree_count);
    used_trees_ = 0;
  }

  void touch(int t, VertexId v) {
    if (tree_at_[t][v]++ == 0) needed_at_[v] -= 1;
  }

  void untouch(int t, VertexId v) {
    if (--tree_at_[t][v] == 0) needed_at_[v] += 1;
  }

  void apply(int depth, int tree) {
    const Edge& e = graph_.edge(order_[depth]);
    if (counts_[tree][e.color] < bounds_.low[e.color]) deficit_[e.color] -= 1;
    counts_[tree][e.color] += 1;
    sizes_[tree] += 1;
    dsu_[tree].unite(e.u, e.v);
    remaining_[e.color] -= 1;
    unassigned_at_[e.u] -= 1;
    unassigned_at_[e.v] -= 1;
    touch(tree, e.u);
    touch(tree, e.v);
    used_trees_ = std::max(used_trees_, tree + 1);
    assignment_[depth] = static_cast<std::int8_t>(tree);
  }

  // Trees the edge at `depth` can enter without breaking a hard constraint
  // or a feasibility bound. Mirrors the move loop of search().
  std::vector<std::int8_t> viable_trees(int depth) {
    std::vector<std::int8_t> out;
    const Edge& e = graph_.edge(order_[depth]);
    const ColorId c = e.color;
    remaining_[c] -= 1;
    unassigned_at_[e.u] -= 1;
    unassigned_at_[e.v] -= 1;
    const int max_tree = std::min(used_trees_, bounds_.tree_count - 1);
    for (int t = 0; t <= max_tree; ++t) {
      if (!admissible(t, e, c)) continue;
      const bool below = counts_[t][c] < bounds_.low[c];
      if (below) deficit_[c] -= 1;
      counts_[t][c] += 1;
      sizes_[t] += 1;
      touch(t, e.u);
      touch(t, e.v);
      if (promising(t, e, c)) out.push_back(static_cast<std::int8_t>(t));
      untouch(t, e.v);
      untouch(t, e.u);
      sizes_[t] -= 1;
      counts_[t][c] -= 1;
      if (below) deficit_[c] += 1;
    }
    unassigned_at_[e.v] += 1;
    unassigned_at_[e.u] += 1;
    remaining_[c] += 1;
    return out;
  }

  bool admissible(int t, const Edge& e, ColorId c) {
    return sizes_[t] < bounds_.tree_size && counts_[t][c] < bounds_.up[c] &&
           dsu_[t].find(e.u) != dsu_[t].find(e.v);
  }

  // Bound checks after tentatively placing a color-c edge into tree t:
  // every still-needed floor of c must be coverable by unassigned c-edges,
  // every tree still absent from an endpoint must be able to claim one of
  // the endpoint's unassigned edges (spanning trees touch every vertex),
  // and a tree that just filled up must have met all its floors.
  bool promising(int t, const Edge& e, ColorId c) {
    if (deficit_[c] > remaining_[c]) return false;
    if (needed_at_[e.u] > unassigned_at_[e.u]) return false;
    if (needed_at_[e.v] > unassigned_at_[e.v]) return false;
    if (sizes_[t] == bounds_.tree_size) {
      for (ColorId x = 0; x < graph_.color_count(); ++x) {
        if (counts_[t][x] < bounds_.low[x]) return false;
      }
    }
    return true;
  }

  bool search(int depth) {
    if (shared_.stop.load(std::memory_order_relaxed)) return false;
    const long long seen = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (seen > shared_.budget) {
      shared_.budget_hit.store(true);
      shared_.stop.store(true);
      return false;
    }
    if (depth == static_cast<int>(order_.size())) {
      std::lock_guard<std::mutex> lock(shared_.result_mutex);
      if (!shared_.result) shared_.result = assignment_;
      shared_.stop.store(true);
      return true;
    }
    const Edge& e = graph_.edge(order_[depth]);
    const ColorId c = e.color;
    remaining_[c] -= 1;
    unassigned_at_[e.u] -= 1;
    unassigned_at_[e.v] -= 1;
    const int max_tree = std::min(used_trees_, bounds_.tree_count - 1);
    for (int t = 0; t <= max_tree; ++t) {
      if (!admissible(t, e, c)) continue;
      const bool below = counts_[t][c] < bounds_.low[c];
      if (below) deficit_[c] -= 1;
      counts_[t][c] += 1;
      sizes_[t] += 1;
      touch(t, e.u);
      touch(t, e.v);
      const std::size_t mark = dsu_[t].mark();
      dsu_[t].unite(e.u, e.v);
      const int prev_used = used_trees_;
      used_trees_ = std::max(used_trees_, t + 1);
      assignment_[depth] = static_cast<std::int8_t>(t);

      if (promising(t, e, c) && search(depth + 1)) return true;

      used_trees_ = prev_used;
      dsu_[t].rollback(mark);
      untouch(t, e.v);
      untouch(t, e.u);
      sizes_[t] -= 1;
      counts_[t][c] -= 1;
      if (below) deficit_[c] += 1;
      if (shared_.stop.load(std::memory_order_relaxed)) break;
    }
    unassigned_at_[e.v] += 1;
    unassigned_at_[e.u] += 1;
    remaining_[c] += 1;
    return false;
  }

  const EdgeColoredGraph& graph_;
  const std::vector<EdgeIndex>& order_;
  const TreeBounds& bounds_;
  ExactShared& shared_;
  std::vector<RollbackDsu> dsu_;
  std::vector<std::vector<int>> counts_;
  std::vector<int> sizes_;
  std::vector<int> remaining_;
  std::vector<long long> deficit_;
  std::vector<std::vector<int>> tree_at_;  // tree x vertex incidence counts
  std::vector<int> unassigned_at_;         // unassigned edges at each vertex
  std::vector<int> needed_at_;             // trees with no edge at each vertex
  std::vector<std::int8_t> assignment_;
  int used_trees_ = 0;
};

// Colors with no slack between floor and ceiling first, bigger color
// classes before smaller: the tightest choices fail earliest.
std::vector<EdgeIndex> exact_edge_order(const EdgeColoredGraph& graph, const TreeBounds& bounds) {
  const ColorHistogram hist = color_histogram(graph);
  std::vector<ColorId> colors(graph.color_count());
  std::iota(colors.begin(), colors.end(), 0);
  std::sort(colors.begin(), colors.end(), [&](ColorId a, ColorId b) {
    const int rigid_a = bounds.low[a] == bounds.up[a] ? 0 : 1;
    const int rigid_b = bounds.low[b] == bounds.up[b] ? 0 : 1;
    return std::tuple(rigid_a, -hist[a], a) < std::tuple(rigid_b, -hist[b], b);
  });
  std::vector<EdgeIndex> order;
  order.reserve(graph.edge_count());
  for (ColorId c : colors) {
    for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
      if (graph.edge(i).color == c) order.push_back(i);
    }
  }
  return order;
}

TreePartition partition_from_assignment(const EdgeColoredGraph& graph,
                                        const std::vector<EdgeIndex>& order,
                                        const std::vector<std::int8_t>& assignment,
                                        int tree_count) {
  TreePartition partition;
  partition.host = &graph;
  partition.trees.assign(tree_count, {});
  for (std::size_t i = 0; i < order.size(); ++i) {
    partition.trees[assignment[i]].push_back(order[i]);
  }
  for (auto& tree : partition.trees) std::sort(tree.begin(), tree.end());
  return partition;
}

SearchReport run_exact(const EdgeColoredGraph& graph, const TreeBounds& bounds,
                       const SearchOptions& options) {
  const std::vector<EdgeIndex> order = exact_edge_order(graph, bounds);
  ExactShared shared;
  shared.budget = options.node_budget;

  if (options.workers <= 1) {
    ExactWorker worker(graph, order, bounds, shared);
    worker.run({});
  } else {
    ExactWorker splitter(graph, order, bounds, shared);
    const auto tasks = splitter.collect_prefixes(options.workers * 8);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(options.workers);
    for (int w = 0; w < options.workers; ++w) {
      pool.emplace_back([&] {
        ExactWorker worker(graph, order, bounds, shared);
        while (!shared.stop.load(std::memory_order_relaxed)) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) break;
          worker.run(tasks[i]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  SearchReport report;
  report.nodes_explored = shared.nodes.load();
  if (shared.result) {
    report.outcome = SearchOutcome::Found;
    report.partition = partition_from_assignment(graph, order, *shared.result, bounds.tree_count);
  } else if (shared.budget_hit.load()) {
    report.outcome = SearchOutcome::BudgetExceeded;
  } else {
    report.outcome = SearchOutcome::Exhausted;
  }
  return report;
}

// ---------------------------------------------------------------------------
// heuristic search

// Vertex sequence of the r-th path in the classical zigzag decomposition of
// a complete graph on an even vertex count into Hamiltonian paths:
// r, r+1, r-1, r+2, r-2, ... taken modulo n.
std::vector<VertexId> zigzag_path(int n, int r) {
  std::vector<VertexId> path;
  path.reserve(n);
  path.push_back(r);
  for (int j = 1; path.size() < static_cast<std::size_t>(n); ++j) {
    path.push_back(((r + j) % n + n) % n);
    if (path.size() < static_cast<std::size_t>(n)) path.push_back(((r - j) % n + n) % n);
  }
  return path;
}

struct HeuristicShared {
  std::atomic<long long> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  long long budget = 0;
  std::mutex result_mutex;
  std::optional<TreePartition> result;
};

class HeuristicWorker {
 public:
  HeuristicWorker(const EdgeColoredGraph& graph, const TreeBounds& bounds, std::uint64_t seed,
                  HeuristicShared& shared)
      : graph_(graph), bounds_(bounds), rng_(seed), shared_(shared) {
    const int n = graph.vertex_count();
    pair_index_.assign(n, std::vector<EdgeIndex>(n, -1));
    for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
      const Edge& e = graph.edge(i);
      pair_index_[e.u][e.v] = i;
      pair_index_[e.v][e.u] = i;
    }
  }

  void run() {
    while (!shared_.stop.load(std::memory_order_relaxed)) {
      restart();
      refine();
    }
  }

 private:
  // Start from a Hamiltonian-path decomposition pushed through a random
  // vertex relabeling: structurally valid, color counts left to chance.
  void restart() {
    const int n = graph_.vertex_count();
    std::vector<VertexId> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      std::swap(relabel[i], relabel[bounded(rng_, i + 1)]);
    }
    trees_.assign(bounds_.tree_count, {});
    counts_.assign(bounds_.tree_count, std::vector<int>(graph_.color_count(), 0));
    for (int r = 0; r < bounds_.tree_count; ++r) {
      const auto path = zigzag_path(n, r);
      for (int i = 0; i + 1 < n; ++i) {
        const EdgeIndex idx = pair_index_[relabel[path[i]]][relabel[path[i + 1]]];
        trees_[r].push_back(idx);
        counts_[r][graph_.edge(idx).color] += 1;
      }
    }
    cost_ = 0;
    for (int t = 0; t < bounds_.tree_count; ++t) {
      for (ColorId c = 0; c < graph_.color_count(); ++c) cost_ += penalty(t, c);
    }
  }

  int penalty(int t, ColorId c) const {
    const int v = counts_[t][c];
    return std::max(0, bounds_.low[c] - v) + std::max(0, v - bounds_.up[c]);
  }

  // Swap random edges between two trees when both stay spanning trees and
  // the color-bound penalty does not get worse; restart when the slice of
  // attempts runs out before the penalty hits zero.
  void refine() {
    const long long slice = 20'000 + 200LL * graph_.edge_count();
    for (long long step = 0; step < slice; ++step) {
      if (shared_.stop.load(std::memory_order_relaxed)) return;
      const long long seen = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
      if (seen > shared_.budget) {
        shared_.budget_hit.store(true);
        shared_.stop.store(true);
        return;
      }
      if (cost_ == 0) {
        record();
        return;
      }
      const int t1 = static_cast<int>(bounded(rng_, bounds_.tree_count));
      int t2 = static_cast<int>(bounded(rng_, bounds_.tree_count - 1));
      if (t2 >= t1) ++t2;
      const int i1 = static_cast<int>(bounded(rng_, trees_[t1].size()));
      const int i2 = static_cast<int>(bounded(rng_, trees_[t2].size()));
      const EdgeIndex e1 = trees_[t1][i1];
      const EdgeIndex e2 = trees_[t2][i2];
      const ColorId c1 = graph_.edge(e1).color;
      const ColorId c2 = graph_.edge(e2).color;

      int delta = 0;
      if (c1 != c2) {
        const int before = penalty(t1, c1) + penalty(t1, c2) + penalty(t2, c1) + penalty(t2, c2);
        counts_[t1][c1] -= 1;
        counts_[t1][c2] += 1;
        counts_[t2][c2] -= 1;
        counts_[t2][c1] += 1;
        const int after = penalty(t1, c1) + penalty(t1, c2) + penalty(t2, c1) + penalty(t2, c2);
        counts_[t1][c1] += 1;
        counts_[t1][c2] -= 1;
        counts_[t2][c2] += 1;
        counts_[t2][c1] -= 1;
        delta = after - before;
      }
      if (delta > 0) continue;
      if (delta == 0 && bounded(rng_, 8) != 0) continue;
      if (!swap_keeps_tree(trees_[t1], e1, e2) || !swap_keeps_tree(trees_[t2], e2, e1)) continue;

      trees_[t1][i1] = e2;
      trees_[t2][i2] = e1;
      counts_[t1][c1] -= 1;
      counts_[t1][c2] += 1;
      counts_[t2][c2] -= 1;
      counts_[t2][c1] += 1;
      cost_ += delta;
      if (cost_ == 0) {
        record();
        return;
      }
    }
  }

  // Removing `outgoing` splits the tree in two; `incoming` must reconnect
  // the halves for the swap to leave a spanning tree behind.
  bool swap_keeps_tree(const std::vector<EdgeIndex>& tree, EdgeIndex outgoing,
                       EdgeIndex incoming) {
    const int n = graph_.vertex_count();
    std::vector<std::vector<VertexId>> adj(n);
    for (EdgeIndex idx : tree) {
      if (idx == outgoing) continue;
      const Edge& e = graph_.edge(idx);
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<char> side(n, 0);
    std::deque<VertexId> queue{graph_.edge(outgoing).u};
    side[graph_.edge(outgoing).u] = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : adj[v]) {
        if (!side[w]) {
          side[w] = 1;
          queue.push_back(w);
        }
      }
    }
    const Edge& in = graph_.edge(incoming);
    return side[in.u] != side[in.v];
  }

  void record() {
    TreePartition partition;
    partition.host = &graph_;
    partition.trees = trees_;
    for (auto& tree : partition.trees) std::sort(tree.begin(), tree.end());
    const PartitionCheck check = verify_partition(graph_, partition);
    if (!check.ok) {
      throw std::logic_error("heuristic produced an invalid partition: " + check.violation);
    }
    std::lock_guard<std::mutex> lock(shared_.result_mutex);
    if (!shared_.result) shared_.result = std::move(partition);
    shared_.stop.store(true);
  }

  const EdgeColoredGraph& graph_;
  const TreeBounds& bounds_;
  std::mt19937_64 rng_;
  HeuristicShared& shared_;
  std::vector<std::vector<EdgeIndex>> pair_index_;
  std::vector<std::vector<EdgeIndex>> trees_;
  std::vector<std::vector<int>> counts_;
  int cost_ = 0;
};

SearchReport run_heuristic(const EdgeColoredGraph& graph, const TreeBounds& bounds,
                           const SearchOptions& options) {
  HeuristicShared shared;
  shared.budget = options.node_budget;
  if (options.workers <= 1) {
    HeuristicWorker worker(graph, bounds, options.seed, shared);
    worker.run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(options.workers);
    for (int w = 0; w < options.workers; ++w) {
      pool.emplace_back([&, w] {
        HeuristicWorker worker(graph, bounds, options.seed + w, shared);
        worker.run();
      });
    }
    for (auto& t : pool) t.join();
  }

  SearchReport report;
  report.nodes_explored = shared.nodes.load();
  if (shared.result) {
    report.outcome = SearchOutcome::Found;
    report.partition = std::move(shared.result);
  } else {
    report.outcome = SearchOutcome::BudgetExceeded;
  }
  return report;
}

}  // namespace

PartitionCheck verify_partition(const EdgeColoredGraph& graph, const TreePartition& partition) {
  std::ostringstream why;
  const int n = graph.vertex_count();
  const int tree_count = static_cast<int>(partition.trees.size());
  if (tree_count == 0) return {false, "partition has no trees"};

  std::vector<int> owner(graph.edge_count(), -1);
  for (int t = 0; t < tree_count; ++t) {
    for (EdgeIndex idx : partition.trees[t]) {
      if (idx < 0 || idx >= graph.edge_count()) {
        why << "tree " << t << " references edge index " << idx << " outside the host";
        return {false, why.str()};
      }
      if (owner[idx] != -1) {
        const Edge& e = graph.edge(idx);
        why << "edge {" << e.u << ", " << e.v << "} appears in trees " << owner[idx] << " and "
            << t;
        return {false, why.str()};
      }
      owner[idx] = t;
    }
  }
  for (EdgeIndex idx = 0; idx < graph.edge_count(); ++idx) {
    if (owner[idx] == -1) {
      const Edge& e = graph.edge(idx);
      why << "edge {" << e.u << ", " << e.v << "} belongs to no tree";
      return {false, why.str()};
    }
  }

  for (int t = 0; t < tree_count; ++t) {
    if (static_cast<int>(partition.trees[t].size()) != n - 1) {
      why << "tree " << t << " has " << partition.trees[t].size() << " edges, expected " << n - 1;
      return {false, why.str()};
    }
    DisjointSets dsu(n);
    for (EdgeIndex idx : partition.trees[t]) {
      const Edge& e = graph.edge(idx);
      if (!dsu.unite(e.u, e.v)) {
        why << "tree " << t << " contains a cycle";
        return {false, why.str()};
      }
    }
    if (dsu.set_count() != 1) {
      why << "tree " << t << " does not span all vertices";
      return {false, why.str()};
    }
  }

  const TreeBounds bounds = per_tree_bounds(graph, tree_count);
  for (int t = 0; t < tree_count; ++t) {
    std::vector<int> hist(graph.color_count(), 0);
    for (EdgeIndex idx : partition.trees[t]) hist[graph.edge(idx).color] += 1;
    for (ColorId c = 0; c < graph.color_count(); ++c) {
      if (hist[c] < bounds.low[c] || hist[c] > bounds.up[c]) {
        why << "tree " << t << " uses color '" << graph.color_label(c) << "' " << hist[c]
            << " times, outside [" << bounds.low[c] << ", " << bounds.up[c] << "]";
        return {false, why.str()};
      }
    }
  }
  return {true, ""};
}

SearchReport partition_similar_trees(const EdgeColoredGraph& graph, const SearchOptions& options) {
  require_partitionable(graph);
  if (options.node_budget < 0) throw std::invalid_argument("node budget must be non-negative");
  if (options.workers < 1) throw std::invalid_argument("worker count must be at least one");

  SearchOptions effective = options;
  if (effective.node_budget == 0) {
    effective.node_budget = options.mode == SearchMode::Exact ? kDefaultExactBudget
                                                              : kDefaultHeuristicBudget;
  }
  const TreeBounds bounds = per_tree_bounds(graph, graph.vertex_count() / 2);

  const auto start = std::chrono::steady_clock::now();
  SearchReport report = options.mode == SearchMode::Exact ? run_exact(graph, bounds, effective)
                                                          : run_heuristic(graph, bounds, effective);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  if (report.outcome == SearchOutcome::Found) {
    const PartitionCheck check = verify_partition(graph, *report.partition);
    if (!check.ok) {
      throw std::logic_error("search returned an invalid partition: " + check.violation);
    }
  }
  if (report.outcome == SearchOutcome::Exhausted && !options.artifact_path.empty()) {
    write_instance_file(options.artifact_path, graph);
  }
  return report;
}

EdgeColoredGraph random_complete_coloring(int order, int palette, std::uint64_t seed,
                                          ColoringProfile profile) {
  if (order < 6 || order % 2 != 0) {
    throw std::invalid_argument("order must be even and at least 6");
  }
  if (palette < 1) throw std::invalid_argument("palette must have at least one color");
  if (profile == ColoringProfile::Skewed && palette > 62) {
    throw std::invalid_argument("palette too large for the skewed profile");
  }

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(order * (order - 1) / 2);
  std::vector<std::vector<int>> at_vertex(order, std::vector<int>(palette, 0));
  std::vector<int> global(palette, 0);

  for (VertexId u = 0; u < order; ++u) {
    for (VertexId v = u + 1; v < order; ++v) {
      ColorId color = 0;
      switch (profile) {
        case ColoringProfile::Uniform:
          color = static_cast<ColorId>(bounded(rng, palette));
          break;
        case ColoringProfile::Skewed: {
          // color j with weight 2^(palette-1-j), so color 1 dominates
          const std::uint64_t total = (std::uint64_t{1} << palette) - 1;
          std::uint64_t r = bounded(rng, total);
          color = palette - 1;
          for (int j = 0; j < palette; ++j) {
            const std::uint64_t weight = std::uint64_t{1} << (palette - 1 - j);
            if (r < weight) {
              color = j;
              break;
            }
            r -= weight;
          }
          break;
        }
        case ColoringProfile::ProperIsh: {
          // prefer colors rare around both endpoints, then rare overall
          int best_score = std::numeric_limits<int>::max();
          int best_global = std::numeric_limits<int>::max();
          std::vector<ColorId> tied;
          for (ColorId c = 0; c < palette; ++c) {
            const int score = at_vertex[u][c] + at_vertex[v][c];
            if (std::tuple(score, global[c]) < std::tuple(best_score, best_global)) {
              best_score = score;
              best_global = global[c];
              tied.clear();
            }
            if (std::tuple(score, global[c]) == std::tuple(best_score, best_global)) {
              tied.push_back(c);
            }
          }
          color = tied[bounded(rng, tied.size())];
          break;
        }
      }
      edges.push_back({u, v, color});
      at_vertex[u][color] += 1;
      at_vertex[v][color] += 1;
      global[color] += 1;
    }
  }
  return EdgeColoredGraph::with_numbered_colors(order, palette, edges);
}

}  // namespace chroma
