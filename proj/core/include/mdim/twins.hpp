#pragma once

#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

// Partition of the vertices into twin classes. Two vertices are twins when
// they have equal open neighborhoods (non-adjacent pair) or equal closed
// neighborhoods (adjacent pair); either way d(u,w) = d(v,w) for every other
// vertex w. Classes are listed by smallest member, members ascending.
std::vector<std::vector<int>> twin_classes(const Graph& g);

}  // namespace mdim
