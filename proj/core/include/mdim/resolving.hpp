#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mdim/distance.hpp"
#include "mdim/graph.hpp"
#include "mdim/table.hpp"

namespace mdim {

/// Outcome of a resolvability check; on failure carries one unresolved pair
/// (the smallest-index pair found by the grouped scan).
struct ResolveCheck {
  bool resolving = false;
  std::optional<std::pair<int, int>> unresolved;
};

// Coordinates follow the order of r.
std::vector<std::int32_t> distance_vector(const DistanceMatrix& d, int v,
                                          const VertexSet& r);

// R resolves D when the distance vectors d(.|R) are injective over vertices.
ResolveCheck check_resolving(const DistanceMatrix& d, const VertexSet& r);
bool is_resolving(const DistanceMatrix& d, const VertexSet& r);

// Multilateration: the induced row vectors of the selected columns must be
// pairwise distinct. check_resolving is the special case of the distance
// matrix viewed as a table.
ResolveCheck check_resolves_table(const GeneralTable& m, const VertexSet& cols);
bool resolves_table(const GeneralTable& m, const VertexSet& cols);

// R is doubly resolving when for every vertex pair some pair r,r' in R
// separates the distance differences; equivalently the first-coordinate-
// normalized vectors are injective. Requires |R| >= 2 and all entries
// finite.
ResolveCheck check_doubly_resolving(const DistanceMatrix& d, const VertexSet& r);
bool is_doubly_resolving(const DistanceMatrix& d, const VertexSet& r);

// S strongly resolves G when for every pair u,v some s in S has u on a
// shortest s-v path or v on a shortest s-u path. Requires g connected.
ResolveCheck check_strongly_resolving(const Graph& g, const DistanceMatrix& d,
                                      const VertexSet& s);
bool is_strongly_resolving(const Graph& g, const DistanceMatrix& d,
                           const VertexSet& s);

}  // namespace mdim
