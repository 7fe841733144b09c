#pragma once

#include <numeric>
#include <vector>

namespace lls {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    parent_[static_cast<std::size_t>(y)] = x;
    --count_;
  }

  bool same(int x, int y) { return find(x) == find(y); }

  int count() const { return count_; }

 private:
  std::vector<int> parent_;
  int count_;
};

}  // namespace lls
