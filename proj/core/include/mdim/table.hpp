#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mdim/distance.hpp"
#include "mdim/graph.hpp"

namespace mdim {

// Sentinel for "no value" table entries, mirroring kInfDistance.
inline constexpr std::int64_t kInfValue =
    std::numeric_limits<std::int64_t>::max();

/// Rectangular item-by-function table for multilateration.
///
/// Rows are items, columns are functions; only equality of values within a
/// column is ever used, so any alphabet can be encoded into the int64
/// entries.
class GeneralTable {
 public:
  GeneralTable() = default;
  GeneralTable(int rows, int cols, std::vector<std::int64_t> values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t at(int row, int col) const {
    return values_[static_cast<std::size_t>(row) * cols_ + col];
  }

  static GeneralTable from_distance_matrix(const DistanceMatrix& d);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> values_;
};

}  // namespace mdim
