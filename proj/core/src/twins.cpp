#include "mdim/twins.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mdim {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool are_twins(const Graph& g, int u, int v) {
  const auto& nu = g.neighbors(u);
  const auto& nv = g.neighbors(v);
  if (g.has_edge(u, v)) {
    // Closed neighborhoods equal: N(u) \ {v} == N(v) \ {u}.
    if (nu.size() != nv.size()) return false;
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] == v) { ++i; continue; }
      if (nv[j] == u) { ++j; continue; }
      if (nu[i] != nv[j]) return false;
      ++i; ++j;
    }
    while (i < nu.size() && nu[i] == v) ++i;
    while (j < nv.size() && nv[j] == u) ++j;
    return i == nu.size() && j == nv.size();
  }
  return nu == nv;  // open neighborhoods equal
}

}  // namespace

std::vector<std::vector<int>> twin_classes(const Graph& g) {
  int n = g.vertex_count();
  UnionFind uf(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (are_twins(g, u, v)) uf.unite(u, v);

  std::vector<std::vector<int>> by_root(n);
  for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> classes;
  for (auto& cls : by_root)
    if (!cls.empty()) classes.push_back(std::move(cls));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });

  // The relation is an equivalence; confirm transitivity within each class.
  for (const auto& cls : classes)
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (!are_twins(g, cls[i], cls[j]))
          throw std::logic_error("twin relation not transitive");
  return classes;
}

}  // namespace mdim
