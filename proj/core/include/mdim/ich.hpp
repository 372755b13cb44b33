#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mdim/distance.hpp"
#include "mdim/exact.hpp"
#include "mdim/graph.hpp"
#include "mdim/table.hpp"

namespace mdim {

/// Partition of the rows by equality of their selected coordinates, with
/// its Shannon entropy (natural log, nats).
struct EntropyState {
  std::vector<int> class_of;  // row -> class id
  int class_count = 0;
  double entropy = 0.0;
};

EntropyState entropy_state(const DistanceMatrix& d, const VertexSet& r);
EntropyState entropy_state(const GeneralTable& m, const VertexSet& cols);

/// Raised when no column set can separate two identical rows.
class unresolvable_error : public input_error {
 public:
  unresolvable_error(std::pair<int, int> pair, const std::string& what)
      : input_error(what), duplicate_rows(pair) {}
  std::pair<int, int> duplicate_rows;
};

// Greedy entropy maximization: each step adds the candidate maximizing the
// entropy of the refined partition, ties broken by larger class count then
// smaller index; stops when every row is alone in its class. The result
// always verifies as resolving.
BetaResult ich(const DistanceMatrix& d);
BetaResult ich(const GeneralTable& m);

}  // namespace mdim
