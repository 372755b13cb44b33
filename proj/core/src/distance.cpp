#include "mdim/distance.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace mdim {

DistanceMatrix::DistanceMatrix(int n, std::vector<std::int32_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 0 || entries_.size() != static_cast<std::size_t>(n) * n)
    throw input_error("distance matrix: entry count does not match size");
  for (int u = 0; u < n_; ++u) {
    if (at(u, u) != 0) throw input_error("distance matrix: nonzero diagonal");
    for (int v = u + 1; v < n_; ++v) {
      if (at(u, v) != at(v, u))
        throw input_error("distance matrix: not symmetric");
      if (at(u, v) < 0) throw input_error("distance matrix: negative entry");
    }
  }
}

std::int32_t DistanceMatrix::max_distance() const {
  if (n_ <= 1) return 0;
  std::int32_t best = 0;
  for (std::int32_t e : entries_) {
    if (e == kInfDistance) return kInfDistance;
    best = std::max(best, e);
  }
  return best;
}

std::vector<std::int32_t> bfs_distances(const Graph& g, int source) {
  int n = g.vertex_count();
  if (source < 0 || source >= n)
    throw input_error("bfs source out of range: " + std::to_string(source));
  std::vector<std::int32_t> dist(n, kInfDistance);
  std::vector<int> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (dist[w] == kInfDistance) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::int32_t> entries(static_cast<std::size_t>(n) * n);
  for (int v = 0; v < n; ++v) {
    auto row = bfs_distances(g, v);
    std::copy(row.begin(), row.end(),
              entries.begin() + static_cast<std::size_t>(v) * n);
  }
  return DistanceMatrix(n, std::move(entries));
}

DistanceMatrix truncate_distances(const DistanceMatrix& d, int k) {
  if (k < 1) throw input_error("truncation threshold must be >= 1");
  std::int32_t cap = k + 1;
  std::vector<std::int32_t> entries = d.entries();
  for (auto& e : entries) {
    if (e == kInfDistance || e > cap) e = cap;
  }
  return DistanceMatrix(d.size(), std::move(entries));
}

std::int32_t diameter(const Graph& g) {
  if (g.vertex_count() <= 1) return 0;
  std::int32_t best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (std::int32_t e : bfs_distances(g, v)) {
      if (e == kInfDistance) return kInfDistance;
      best = std::max(best, e);
    }
  }
  return best;
}

void write_distance_csv(const DistanceMatrix& d, std::ostream& out) {
  for (int u = 0; u < d.size(); ++u) {
    for (int v = 0; v < d.size(); ++v) {
      if (v) out << ',';
      std::int32_t e = d.at(u, v);
      if (e == kInfDistance)
        out << "inf";
      else
        out << e;
    }
    out << '\n';
  }
}

DistanceMatrix read_distance_csv(std::istream& in) {
  std::vector<std::vector<std::int32_t>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::int32_t> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      if (cell == "inf")
        row.push_back(kInfDistance);
      else
        row.push_back(static_cast<std::int32_t>(std::stol(cell)));
    }
    rows.push_back(std::move(row));
  }
  int n = static_cast<int>(rows.size());
  std::vector<std::int32_t> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw input_error("distance csv: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(entries));
}

}  // namespace mdim
