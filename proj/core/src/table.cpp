#include "mdim/table.hpp"

namespace mdim {

GeneralTable::GeneralTable(int rows, int cols, std::vector<std::int64_t> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows < 0 || cols < 0 ||
      values_.size() != static_cast<std::size_t>(rows) * cols)
    throw input_error("table: value count does not match shape");
}

GeneralTable GeneralTable::from_distance_matrix(const DistanceMatrix& d) {
  int n = d.size();
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(n) * n);
  for (std::int32_t e : d.entries())
    values.push_back(e == kInfDistance ? kInfValue : e);
  return GeneralTable(n, n, std::move(values));
}

}  // namespace mdim
