#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

// "No path" sentinel. Strictly larger than any finite distance and equal
// only to itself; the only arithmetic permitted on it is the truncation rule.
inline constexpr std::int32_t kInfDistance =
    std::numeric_limits<std::int32_t>::max();

/// Symmetric n-by-n table of shortest-path lengths with a zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<std::int32_t> entries);

  int size() const { return n_; }
  std::int32_t at(int u, int v) const {
    return entries_[static_cast<std::size_t>(u) * n_ + v];
  }
  const std::int32_t* row(int u) const {
    return entries_.data() + static_cast<std::size_t>(u) * n_;
  }
  const std::vector<std::int32_t>& entries() const { return entries_; }

  // Largest finite entry; kInfDistance if any pair is unreachable; 0 if n<=1.
  std::int32_t max_distance() const;

  bool operator==(const DistanceMatrix& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }

 private:
  int n_ = 0;
  std::vector<std::int32_t> entries_;
};

// Row of shortest-path lengths from `source`; kInfDistance when unreachable.
std::vector<std::int32_t> bfs_distances(const Graph& g, int source);

DistanceMatrix all_pairs_distances(const Graph& g);

// Caps every entry at k+1 (k >= 1); unreachable pairs also become k+1.
// The diagonal stays 0.
DistanceMatrix truncate_distances(const DistanceMatrix& d, int k);

// kInfDistance when g is disconnected, 0 when n <= 1.
std::int32_t diameter(const Graph& g);

// CSV: n rows of n comma-separated values, kInfDistance spelled "inf".
void write_distance_csv(const DistanceMatrix& d, std::ostream& out);
DistanceMatrix read_distance_csv(std::istream& in);

}  // namespace mdim
