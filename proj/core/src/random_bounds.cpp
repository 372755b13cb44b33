#include "mdim/random_bounds.hpp"

#include <cmath>

namespace mdim {

int er_subset_size(long long n, double p) {
  if (n < 2) throw input_error("er bound requires n >= 2");
  if (!(p > 0.0 && p < 1.0))
    throw input_error("er bound is undefined at p = 0 or p = 1");
  double value = -3.0 * std::log(static_cast<double>(n)) /
                 std::log(p * p + (1.0 - p) * (1.0 - p));
  // Snap to the mathematically exact integer before taking the ceiling.
  double rounded = std::round(value);
  if (std::fabs(value - rounded) < 1e-9) value = rounded;
  return static_cast<int>(std::ceil(value));
}

namespace {

void validate_sbm(const std::vector<long long>& sizes,
                  const std::vector<std::vector<double>>& probs) {
  std::size_t c = sizes.size();
  if (c == 0) throw input_error("sbm bound needs at least one community");
  if (probs.size() != c)
    throw input_error("sbm probability matrix size mismatch");
  for (std::size_t i = 0; i < c; ++i) {
    if (sizes[i] < 0) throw input_error("community sizes must be nonnegative");
    if (probs[i].size() != c)
      throw input_error("sbm probability matrix size mismatch");
    for (std::size_t j = 0; j < c; ++j) {
      if (!(probs[i][j] >= 0.0 && probs[i][j] <= 1.0))
        throw input_error("probability must lie in [0,1]");
      if (probs[i][j] != probs[j][i])
        throw input_error("sbm probability matrix must be symmetric");
    }
  }
}

}  // namespace

double sbm_failure_bound(const std::vector<long long>& sizes,
                         const std::vector<std::vector<double>>& probs,
                         const std::vector<long long>& k) {
  validate_sbm(sizes, probs);
  std::size_t c = sizes.size();
  if (k.size() != c) throw input_error("allocation size mismatch");
  for (std::size_t l = 0; l < c; ++l)
    if (k[l] < 0 || k[l] > sizes[l])
      throw input_error("allocation exceeds community size");
  double total = 0.0;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i; j < c; ++j) {
      double term = static_cast<double>(sizes[i]) * static_cast<double>(sizes[j]);
      for (std::size_t l = 0; l < c; ++l) {
        double agree = probs[i][l] * probs[j][l] +
                       (1.0 - probs[i][l]) * (1.0 - probs[j][l]);
        term *= std::pow(agree, static_cast<double>(k[l]));
      }
      total += term;
    }
  return total;
}

SbmAllocation sbm_allocate(const std::vector<long long>& sizes,
                           const std::vector<std::vector<double>>& probs,
                           double threshold) {
  validate_sbm(sizes, probs);
  if (!(threshold > 0.0)) throw input_error("threshold must be positive");
  std::size_t c = sizes.size();
  SbmAllocation alloc;
  alloc.k.assign(c, 0);
  alloc.bound = sbm_failure_bound(sizes, probs, alloc.k);
  while (alloc.bound > threshold) {
    int best = -1;
    double best_bound = alloc.bound;
    for (std::size_t l = 0; l < c; ++l) {
      if (alloc.k[l] >= sizes[l]) continue;
      ++alloc.k[l];
      double candidate = sbm_failure_bound(sizes, probs, alloc.k);
      --alloc.k[l];
      if (candidate < best_bound) {
        best_bound = candidate;
        best = static_cast<int>(l);
      }
    }
    if (best == -1) {
      std::vector<long long> full = sizes;
      double floor = sbm_failure_bound(sizes, probs, full);
      throw threshold_unreachable(
          floor, "threshold unreachable; bound with every vertex chosen is " +
                     std::to_string(floor));
    }
    ++alloc.k[best];
    alloc.bound = best_bound;
  }
  return alloc;
}

}  // namespace mdim
