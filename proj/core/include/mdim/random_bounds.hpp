#pragma once

#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

// Subset size from the Erdos-Renyi high-probability bound
// ceil(-3 ln n / ln(p^2 + (1-p)^2)); requires 0 < p < 1 and n >= 2.
int er_subset_size(long long n, double p);

// First-moment upper bound on the probability that some vertex pair shares
// all adjacencies into a set with k[l] members in community l:
//   sum_{i<=j} |V_i||V_j| prod_l [P_il P_jl + (1-P_il)(1-P_jl)]^{k_l}.
double sbm_failure_bound(const std::vector<long long>& sizes,
                         const std::vector<std::vector<double>>& probs,
                         const std::vector<long long>& k);

struct SbmAllocation {
  std::vector<long long> k;
  double bound = 0.0;
};

/// Raised when even selecting every vertex cannot reach the threshold;
/// carries the floor bound at k = sizes.
class threshold_unreachable : public std::runtime_error {
 public:
  threshold_unreachable(double floor, const std::string& what)
      : std::runtime_error(what), floor_bound(floor) {}
  double floor_bound;
};

// Greedy allocation: repeatedly increment the community count giving the
// largest bound decrease (ties to the smallest index) until the bound is
// at most `threshold`.
SbmAllocation sbm_allocate(const std::vector<long long>& sizes,
                           const std::vector<std::vector<double>>& probs,
                           double threshold);

}  // namespace mdim
