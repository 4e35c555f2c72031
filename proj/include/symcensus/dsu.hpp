#pragma once

#include <vector>

namespace symcensus {

// Union-find over {0..n-1} with path halving; used for orbit bookkeeping on
// edges and arcs.
struct DisjointSets {
  std::vector<int> parent;

  explicit DisjointSets(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }

  int class_count() {
    int c = 0;
    for (int i = 0; i < (int)parent.size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }
};

}  // namespace symcensus
