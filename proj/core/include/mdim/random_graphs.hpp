#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

enum class RandomKind { uniform_tree, erdos_renyi, sbm };

/// Seeded random-graph model. Generation is a pure function of the spec.
///
/// Spec strings accepted by parse():
///   tree:n=5,seed=3
///   er:n=100,p=0.5,seed=7
///   sbm:sizes=50+50,p=0.5+0.1+0.1+0.5,seed=1   (p row-major, c*c values)
struct RandomSpec {
  RandomKind kind;
  long long n = 0;                     // uniform_tree, erdos_renyi
  double p = 0.0;                      // erdos_renyi
  std::vector<long long> sizes;        // sbm community sizes
  std::vector<std::vector<double>> probs;  // sbm symmetric matrix
  std::uint64_t seed = 0;

  static RandomSpec parse(const std::string& text);
  std::string to_string() const;
};

Graph generate_random(const RandomSpec& spec);

// Labeled-tree bijection used by uniform_tree. Decoding a uniformly random
// length-(n-2) sequence over 0..n-1 yields a uniformly random labeled tree.
Graph prufer_decode(const std::vector<int>& sequence, int n);
std::vector<int> prufer_encode(const Graph& tree);

// Convenience wrappers with the documented per-model edge orderings.
Graph uniform_tree(long long n, std::uint64_t seed);
Graph erdos_renyi(long long n, double p, std::uint64_t seed);
Graph stochastic_block_model(const std::vector<long long>& sizes,
                             const std::vector<std::vector<double>>& probs,
                             std::uint64_t seed);

}  // namespace mdim
