#include "mdim/resolving.hpp"

#include <algorithm>
#include <numeric>

namespace mdim {

namespace {

// Sort vertex ids by their selected-coordinate vectors and scan adjacent
// entries for a duplicate: O(n |R| log n) instead of the pairwise square.
template <typename ValueAt>
ResolveCheck grouped_duplicate_scan(int rows, int key_len, ValueAt&& value) {
  std::vector<int> order(rows);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    for (int i = 0; i < key_len; ++i) {
      auto va = value(a, i), vb = value(b, i);
      if (va != vb) return va < vb;
    }
    return a < b;
  });
  for (int i = 0; i + 1 < rows; ++i) {
    int a = order[i], b = order[i + 1];
    bool equal = true;
    for (int j = 0; j < key_len && equal; ++j)
      equal = value(a, j) == value(b, j);
    if (equal)
      return {false, std::make_pair(std::min(a, b), std::max(a, b))};
  }
  return {true, std::nullopt};
}

}  // namespace

std::vector<std::int32_t> distance_vector(const DistanceMatrix& d, int v,
                                          const VertexSet& r) {
  if (v < 0 || v >= d.size()) throw input_error("vertex out of range");
  validate_vertex_set(r, d.size());
  std::vector<std::int32_t> vec;
  vec.reserve(r.size());
  for (int landmark : r) vec.push_back(d.at(landmark, v));
  return vec;
}

ResolveCheck check_resolving(const DistanceMatrix& d, const VertexSet& r) {
  validate_vertex_set(r, d.size());
  return grouped_duplicate_scan(
      d.size(), static_cast<int>(r.size()),
      [&](int v, int i) { return d.at(r[i], v); });
}

bool is_resolving(const DistanceMatrix& d, const VertexSet& r) {
  return check_resolving(d, r).resolving;
}

ResolveCheck check_resolves_table(const GeneralTable& m, const VertexSet& cols) {
  validate_vertex_set(cols, m.cols());
  return grouped_duplicate_scan(
      m.rows(), static_cast<int>(cols.size()),
      [&](int row, int i) { return m.at(row, cols[i]); });
}

bool resolves_table(const GeneralTable& m, const VertexSet& cols) {
  return check_resolves_table(m, cols).resolving;
}

ResolveCheck check_doubly_resolving(const DistanceMatrix& d, const VertexSet& r) {
  validate_vertex_set(r, d.size());
  if (r.size() < 2)
    throw input_error("doubly resolving check needs at least two vertices");
  for (std::int32_t e : d.entries())
    if (e == kInfDistance)
      throw input_error(
          "doubly resolving is undefined on disconnected graphs");
  int anchor = r[0];
  return grouped_duplicate_scan(
      d.size(), static_cast<int>(r.size()) - 1, [&](int v, int i) {
        return d.at(r[i + 1], v) - d.at(anchor, v);
      });
}

bool is_doubly_resolving(const DistanceMatrix& d, const VertexSet& r) {
  return check_doubly_resolving(d, r).resolving;
}

ResolveCheck check_strongly_resolving(const Graph& g, const DistanceMatrix& d,
                                      const VertexSet& s) {
  validate_vertex_set(s, d.size());
  if (g.vertex_count() != d.size())
    throw input_error("graph and matrix size mismatch");
  if (!g.is_connected())
    throw input_error("strong resolving is undefined on disconnected graphs");
  int n = d.size();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool covered = false;
      for (int w : s) {
        if (d.at(w, v) == d.at(w, u) + d.at(u, v) ||
            d.at(w, u) == d.at(w, v) + d.at(u, v)) {
          covered = true;
          break;
        }
      }
      if (!covered) return {false, std::make_pair(u, v)};
    }
  }
  return {true, std::nullopt};
}

bool is_strongly_resolving(const Graph& g, const DistanceMatrix& d,
                           const VertexSet& s) {
  return check_strongly_resolving(g, d, s).resolving;
}

}  // namespace mdim
