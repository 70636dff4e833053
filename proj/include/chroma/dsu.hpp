#pragma once

#include <cassert>
#include <utility>
#include <vector>

namespace chroma {

// Union-find with path compression and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1), sets_(n) {
    for (int v = 0; v < n; ++v) parent_[v] = v;
  }

  int find(int v) {
    int root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) v = std::exchange(parent_[v], root);
    return root;
  }

  // Returns false if a and b were already in the same set.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }

  bool connected(int a, int b) { return find(a) == find(b); }
  int set_count() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_;
};

// Union-find supporting rollback to an earlier mark. No path compression,
// so find() stays valid across undos; union by size keeps depth O(log n).
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(n), size_(n, 1), sets_(n) {
    for (int v = 0; v < n; ++v) parent_[v] = v;
  }

  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    trail_.push_back(b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }

  bool connected(int a, int b) const { return find(a) == find(b); }
  int set_count() const { return sets_; }

  std::size_t mark() const { return trail_.size(); }

  void rollback(std::size_t mark) {
    assert(mark <= trail_.size());
    while (trail_.size() > mark) {
      int child = trail_.back();
      trail_.pop_back();
      size_[parent_[child]] -= size_[child];
      parent_[child] = child;
      ++sets_;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> trail_;
  int sets_;
};

}  // namespace chroma
