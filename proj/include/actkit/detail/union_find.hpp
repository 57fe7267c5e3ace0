#pragma once

#include <numeric>
#include <vector>

namespace actkit::detail {

// Union-find with path halving.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // true if the two were in distinct classes
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep least element as root
    parent[b] = a;
    return true;
  }

  // class ids numbered by least member, ascending
  std::vector<int> canonical_classes(int* count = nullptr) {
    std::vector<int> id(parent.size(), -1);
    int next = 0;
    for (size_t i = 0; i < parent.size(); ++i) {
      int r = find(static_cast<int>(i));
      if (id[r] < 0) id[r] = next++;
      id[i] = id[r];
    }
    if (count) *count = next;
    return id;
  }
};

}  // namespace actkit::detail
