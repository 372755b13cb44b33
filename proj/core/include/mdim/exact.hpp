#pragma once

#include <string>
#include <vector>

#include "mdim/distance.hpp"
#include "mdim/families.hpp"
#include "mdim/graph.hpp"
#include "mdim/table.hpp"

namespace mdim {

enum class Method { brute_force, closed_form, tree_formula, ich };

std::string method_name(Method m);

/// Exact or heuristic dimension value with its certifying set.
struct BetaResult {
  int beta = 0;
  VertexSet witness;
  Method method = Method::brute_force;
};

/// Closed interval known to contain the true dimension.
struct BetaInterval {
  int lo = 0;
  int hi = 0;
};

// Smallest k admitting a resolving subset of size k; the witness is the
// lexicographically smallest such subset. Levels below the twin and
// diameter lower bounds are skipped. A 0-row or 1-row matrix yields beta 0
// with an empty witness.
BetaResult brute_force_beta(const DistanceMatrix& d);
// Same search over the induced-row-uniqueness predicate of a table
// (multilateration). Throws input_error when the table has duplicate rows.
BetaResult brute_force_beta(const GeneralTable& m);

// All resolving subsets of exactly size k, in lexicographic order.
std::vector<VertexSet> all_resolving_sets_of_size(const DistanceMatrix& d,
                                                  int k);

// Leaves minus exterior major vertices, witness assembled in one linear
// traversal (all leaves except the smallest-indexed one per exterior major
// vertex). A path, including the single-vertex path, has beta 1 with one
// endpoint.
BetaResult tree_beta(const Graph& g);

// Closed forms for the supported families, each with a verified witness;
// parameters outside a form's validity range fall back to brute force and
// are labeled Method::brute_force.
BetaResult family_beta(const FamilySpec& spec);

// Block construction on the fan F_n (hub 0, path 1..n), n >= 7: path
// positions 5j+2 and 5j+4 of every full block of five, plus v_n when
// n mod 5 is 2 or 3, plus v_{n-2} and v_n when n mod 5 is 4.
VertexSet fan_resolving_set(long long n);

// Sum over twin classes of (size - 1).
int twin_lower_bound(const Graph& g);

// Smallest k with diam(g)^k + k >= n. Requires g connected, n >= 2.
int diameter_lower_bound(const Graph& g);

// [max(1, beta(T) - 2), beta(T) + 1] for a spanning tree T of the
// unicyclic graph g (the DFS tree from vertex 0).
BetaInterval unicyclic_interval(const Graph& g);

/// The five necessary properties of a graph with a minimum resolving set
/// of size two.
struct Beta2Properties {
  bool no_k5_subgraph = false;
  bool no_k33_subgraph = false;
  bool unique_shortest_path = false;
  bool path_degrees_at_most_5 = false;
  bool endpoint_degrees_at_most_3 = false;
  bool all() const {
    return no_k5_subgraph && no_k33_subgraph && unique_shortest_path &&
           path_degrees_at_most_5 && endpoint_degrees_at_most_3;
  }
};

// `pair` must be a verified minimum resolving set of size 2.
Beta2Properties beta2_necessary_properties(const Graph& g,
                                           const VertexSet& pair);

enum class Variant { doubly, strong, truncated };

// Smallest set satisfying the variant predicate, witness lexicographically
// smallest. `k` is the truncation threshold for Variant::truncated.
BetaResult brute_force_variant(const Graph& g, Variant variant, int k = 0);

// Sum of the component dimensions, each by tree formula or brute force.
// A single-vertex component counts as a path (beta 1).
int disconnected_beta(const Graph& g);

}  // namespace mdim
