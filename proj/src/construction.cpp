#include "chroma/construction.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "chroma/dsu.hpp"

namespace chroma {

ColoredForest::ColoredForest(const EdgeColoredGraph& host, std::vector<EdgeIndex> edges)
    : host_(&host), edges_(std::move(edges)), histogram_(host.color_count()) {
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("forest repeats an edge index");
  }
  DisjointSets dsu(host.vertex_count());
  for (EdgeIndex idx : edges_) {
    if (idx < 0 || idx >= host.edge_count()) {
      std::ostringstream msg;
      msg << "forest edge index " << idx << " out of range";
      throw std::invalid_argument(msg.str());
    }
    const Edge& e = host.edge(idx);
    if (!dsu.unite(e.u, e.v)) {
      throw std::invalid_argument("forest edges contain a cycle");
    }
    ++histogram_[e.color];
  }
  components_ = dsu.set_count();
}

bool ColoredForest::contains(EdgeIndex e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

namespace {

void require_f_shape(const EdgeColoredGraph& graph, const std::vector<int>& f,
                     const char* name) {
  if (f.size() != static_cast<std::size_t>(graph.color_count())) {
    std::ostringstream msg;
    msg << name << " must cover all " << graph.color_count() << " colors (got " << f.size() << ")";
    throw std::invalid_argument(msg.str());
  }
  for (int x : f) {
    if (x < 0) {
      std::ostringstream msg;
      msg << name << " entries must be non-negative";
      throw std::invalid_argument(msg.str());
    }
  }
}

// Largest edge set that is simultaneously acyclic and uses each color c at
// most f(c) times, grown one shortest augmenting path at a time in the
// exchange digraph of the two matroids. Stops as soon as `target` edges are
// reached; returns nullopt if the maximum falls short of target.
std::optional<std::vector<EdgeIndex>> common_independent_set(const EdgeColoredGraph& graph,
                                                             const std::vector<int>& f,
                                                             int target) {
  const int edge_total = graph.edge_count();
  const int n = graph.vertex_count();
  std::vector<char> in_set(edge_total, 0);
  std::vector<int> used(graph.color_count(), 0);
  int size = 0;

  // adjacency over the current set: vertex -> (neighbor, edge index)
  std::vector<std::vector<std::pair<VertexId, EdgeIndex>>> adj(n);

  while (size < target) {
    DisjointSets comp(n);
    for (auto& list : adj) list.clear();
    for (EdgeIndex i = 0; i < edge_total; ++i) {
      if (!in_set[i]) continue;
      const Edge& e = graph.edge(i);
      comp.unite(e.u, e.v);
      adj[e.u].emplace_back(e.v, i);
      adj[e.v].emplace_back(e.u, i);
    }

    // For every outside edge whose endpoints the set already connects,
    // record which set edges lie on the connecting path; those carry the
    // arcs set-edge -> outside-edge.
    std::vector<std::vector<EdgeIndex>> leaves_on_path(edge_total);
    std::vector<char> is_source(edge_total, 0);
    for (EdgeIndex i = 0; i < edge_total; ++i) {
      if (in_set[i]) continue;
      const Edge& e = graph.edge(i);
      if (comp.find(e.u) != comp.find(e.v)) {
        is_source[i] = 1;
        continue;
      }
      // BFS through the set from e.u to e.v
      std::vector<EdgeIndex> via(n, -1);
      std::vector<VertexId> prev(n, -1);
      std::deque<VertexId> verts{e.u};
      prev[e.u] = e.u;
      while (!verts.empty()) {
        const VertexId v = verts.front();
        verts.pop_front();
        if (v == e.v) break;
        for (auto [w, idx] : adj[v]) {
          if (prev[w] != -1) continue;
          prev[w] = v;
          via[w] = idx;
          verts.push_back(w);
        }
      }
      for (VertexId v = e.v; v != e.u; v = prev[v]) {
        leaves_on_path[via[v]].push_back(i);
      }
    }

    // Shortest augmenting path via BFS, sources seeded in index order so
    // ties resolve to the lowest-index elements.
    std::vector<EdgeIndex> parent(edge_total, -2);
    std::deque<EdgeIndex> queue;
    EdgeIndex goal = -1;
    for (EdgeIndex i = 0; i < edge_total && goal < 0; ++i) {
      if (!is_source[i]) continue;
      parent[i] = -1;
      if (used[graph.edge(i).color] < f[graph.edge(i).color]) {
        goal = i;
        break;
      }
      queue.push_back(i);
    }
    while (goal < 0 && !queue.empty()) {
      const EdgeIndex x = queue.front();
      queue.pop_front();
      if (!in_set[x]) {
        // outside edge over its color cap: may swap with a same-colored set edge
        const ColorId c = graph.edge(x).color;
        for (EdgeIndex y = 0; y < edge_total; ++y) {
          if (in_set[y] && graph.edge(y).color == c && parent[y] == -2) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      } else {
        for (EdgeIndex z : leaves_on_path[x]) {
          if (parent[z] != -2) continue;
          parent[z] = x;
          if (used[graph.edge(z).color] < f[graph.edge(z).color]) {
            goal = z;
            break;
          }
          queue.push_back(z);
        }
      }
    }
    if (goal < 0) return std::nullopt;  // maximum reached below target

    for (EdgeIndex x = goal; x != -1; x = parent[x]) {
      if (in_set[x]) {
        in_set[x] = 0;
        --used[graph.edge(x).color];
      } else {
        in_set[x] = 1;
        ++used[graph.edge(x).color];
      }
    }
    ++size;
  }

  std::vector<EdgeIndex> result;
  for (EdgeIndex i = 0; i < edge_total; ++i) {
    if (in_set[i]) result.push_back(i);
  }
  return result;
}

void require_forest_meets(const ColoredForest& forest, const ColorBounds& bounds, int m,
                          const char* where) {
  bool ok = forest.components() == m;
  for (ColorId c = 0; ok && c < forest.host().color_count(); ++c) {
    ok = bounds.g[c] <= forest.histogram()[c] && forest.histogram()[c] <= bounds.f[c];
  }
  if (!ok) {
    std::ostringstream msg;
    msg << where << ": constructed forest violates its own guarantees";
    throw std::logic_error(msg.str());
  }
}

}  // namespace

std::optional<ColoredForest> build_f_spanning_forest(const EdgeColoredGraph& graph,
                                                     const std::vector<int>& f, int m) {
  if (m < 1 || m > graph.vertex_count()) {
    std::ostringstream msg;
    msg << "component count m=" << m << " must satisfy 1 <= m <= n=" << graph.vertex_count();
    throw std::invalid_argument(msg.str());
  }
  require_f_shape(graph, f, "f");
  auto edges = common_independent_set(graph, f, graph.vertex_count() - m);
  if (!edges) return std::nullopt;
  ColoredForest forest(graph, std::move(*edges));
  require_forest_meets(forest, {std::vector<int>(graph.color_count(), 0), f}, m,
                       "build_f_spanning_forest");
  return forest;
}

std::optional<ColoredForest> build_gg_forest(const EdgeColoredGraph& graph,
                                             const std::vector<int>& g) {
  require_f_shape(graph, g, "g");
  long long g_total = 0;
  for (int x : g) g_total += x;
  if (g_total > graph.vertex_count() - 1) {
    std::ostringstream msg;
    msg << "sum(g)=" << g_total << " exceeds n-1=" << graph.vertex_count() - 1;
    throw std::invalid_argument(msg.str());
  }
  // A forest capped at g(c) per color with n - sum(g) components has
  // sum(g) edges, so every cap is met with equality.
  const int m = graph.vertex_count() - static_cast<int>(g_total);
  auto forest = build_f_spanning_forest(graph, g, m);
  if (!forest) return std::nullopt;
  for (ColorId c = 0; c < graph.color_count(); ++c) {
    if (forest->histogram()[c] != g[c]) {
      throw std::logic_error("build_gg_forest: counting argument violated");
    }
  }
  return forest;
}

std::optional<ColoredForest> build_gf_spanning_forest(const EdgeColoredGraph& graph,
                                                      const ColorBounds& bounds, int m,
                                                      ExchangeStats* stats) {
  // same preconditions as the checker
  evaluate_color_subset(graph, bounds, m, ColorSet{});
  for (ColorId c = 0; c < graph.color_count(); ++c) {
    if (bounds.g[c] > bounds.f[c]) {
      std::ostringstream msg;
      msg << "g('" << graph.color_label(c) << "') = " << bounds.g[c] << " exceeds f = "
          << bounds.f[c];
      throw std::invalid_argument(msg.str());
    }
  }
  if (graph.vertex_count() < m + bounds.g_total()) {
    std::ostringstream msg;
    msg << "n >= m + sum(g) fails: n=" << graph.vertex_count() << ", m=" << m
        << ", sum(g)=" << bounds.g_total();
    throw std::invalid_argument(msg.str());
  }

  const auto base = build_gg_forest(graph, bounds.g);
  if (!base) return std::nullopt;
  const auto capped = build_f_spanning_forest(graph, bounds.f, m);
  if (!capped) return std::nullopt;

  const int n = graph.vertex_count();
  const int size = n - m;
  std::vector<char> in_base(graph.edge_count(), 0);
  for (EdgeIndex i : base->edge_indices()) in_base[i] = 1;
  std::vector<char> current(graph.edge_count(), 0);
  std::vector<int> hist(graph.color_count(), 0);
  for (EdgeIndex i : capped->edge_indices()) {
    current[i] = 1;
    hist[graph.edge(i).color] += 1;
  }

  auto overlap = [&] {
    int count = 0;
    for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
      count += in_base[i] && current[i];
    }
    return count;
  };

  ExchangeStats local;
  local.overlap_start = overlap();
  int last_overlap = local.overlap_start;

  // Each step moves one base edge of a deficient color into the current
  // forest, evicting a non-base edge, so the overlap with the base forest
  // grows by one per step and the loop runs at most n - m times.
  while (true) {
    ColorId deficient = -1;
    for (ColorId c = 0; c < graph.color_count(); ++c) {
      if (hist[c] < bounds.g[c]) {
        deficient = c;
        break;
      }
    }
    if (deficient < 0) break;
    if (local.iterations >= size) {
      throw std::logic_error("build_gf_spanning_forest: exchange exceeded its step bound");
    }
    ++local.iterations;

    EdgeIndex entering = -1;
    for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
      if (in_base[i] && !current[i] && graph.edge(i).color == deficient) {
        entering = i;
        break;
      }
    }
    if (entering < 0) {
      throw std::logic_error("build_gf_spanning_forest: deficient color has no base edge left");
    }

    std::vector<std::vector<std::pair<VertexId, EdgeIndex>>> adj(n);
    DisjointSets comp(n);
    for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
      if (!current[i]) continue;
      const Edge& e = graph.edge(i);
      comp.unite(e.u, e.v);
      adj[e.u].emplace_back(e.v, i);
      adj[e.v].emplace_back(e.u, i);
    }

    const Edge& add = graph.edge(entering);
    EdgeIndex leaving = -1;
    if (comp.find(add.u) != comp.find(add.v)) {
      // the new edge bridges two components: evict any non-base edge to
      // restore the component count
      for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
        if (current[i] && !in_base[i]) {
          leaving = i;
          break;
        }
      }
    } else {
      // evict a non-base edge on the unique cycle the new edge closes
      std::vector<EdgeIndex> via(n, -1);
      std::vector<VertexId> prev(n, -1);
      std::deque<VertexId> verts{add.u};
      prev[add.u] = add.u;
      while (!verts.empty()) {
        const VertexId v = verts.front();
        verts.pop_front();
        if (v == add.v) break;
        for (auto [w, idx] : adj[v]) {
          if (prev[w] != -1) continue;
          prev[w] = v;
          via[w] = idx;
          verts.push_back(w);
        }
      }
      for (VertexId v = add.v; v != add.u; v = prev[v]) {
        if (!in_base[via[v]] && (leaving < 0 || via[v] < leaving)) leaving = via[v];
      }
    }
    if (leaving < 0) {
      throw std::logic_error("build_gf_spanning_forest: no evictable edge in exchange step");
    }

    current[entering] = 1;
    hist[add.color] += 1;
    current[leaving] = 0;
    hist[graph.edge(leaving).color] -= 1;

    // step invariants: size and component count hold, no cap is broken,
    // and the overlap with the base forest grew by exactly one
    DisjointSets after(n);
    int count = 0;
    for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
      if (!current[i]) continue;
      ++count;
      if (!after.unite(graph.edge(i).u, graph.edge(i).v)) {
        throw std::logic_error("build_gf_spanning_forest: exchange created a cycle");
      }
    }
    if (count != size || after.set_count() != m) {
      throw std::logic_error("build_gf_spanning_forest: exchange broke the forest shape");
    }
    for (ColorId c = 0; c < graph.color_count(); ++c) {
      if (hist[c] > bounds.f[c]) {
        throw std::logic_error("build_gf_spanning_forest: exchange broke a color cap");
      }
    }
    const int now = overlap();
    if (now != last_overlap + 1) {
      throw std::logic_error("build_gf_spanning_forest: overlap did not grow");
    }
    last_overlap = now;
  }

  local.overlap_end = last_overlap;
  if (stats) *stats = local;

  std::vector<EdgeIndex> edges;
  for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
    if (current[i]) edges.push_back(i);
  }
  ColoredForest forest(graph, std::move(edges));
  require_forest_meets(forest, bounds, m, "build_gf_spanning_forest");
  return forest;
}

}  // namespace chroma
