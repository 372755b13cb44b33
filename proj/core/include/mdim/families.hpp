#pragma once

#include <array>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

enum class FamilyKind {
  path,
  cycle,
  complete,
  complete_bipartite,
  grid,
  fan,
  wheel,
  hypercube,
  hamming,
  honeycomb,
  hexagon,
  prism,
  petersen2,
  join,
  disjoint_union,
  empty,
};

/// Parameterized deterministic graph family.
///
/// Spec strings accepted by parse():
///   path:9  cycle:6  complete:5  kst:2,3  grid:4x3x2  fan:12  wheel:9
///   hypercube:4  hamming:k=2,a=3  honeycomb:2  hexagon:3  prism:5
///   petersen2:5  empty:4  join((complete:1),(path:4))
///   union((path:2),(path:2))
struct FamilySpec {
  FamilyKind kind;
  std::vector<long long> params;
  std::vector<FamilySpec> children;  // for join / disjoint_union

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

// Vertex labelings (documented, fixed):
//   path/cycle: 0..n-1 along the path/cycle.
//   complete_bipartite(s,t): side one is 0..s-1, side two is s..s+t-1.
//   grid(n1,..,nd): row-major, last coordinate fastest.
//   fan/wheel: hub is vertex 0, path/cycle vertices are 1..n in order.
//   hamming(k,a): vertex v encodes the string whose position-i symbol is
//     (v / a^i) % a; hypercube(k) = hamming(k,2).
//   hexagon HX(n): lattice triples (x,y,z), x+y+z=0, max(|x|,|y|,|z|)<=n-1,
//     sorted lexicographically.
//   honeycomb HC(n): bounded dual of HX(n+1); one vertex per triangular
//     face, faces sorted by their vertex triple, adjacent when two faces
//     share an edge.
//   prism(n): outer cycle 0..n-1, inner cycle n..2n-1, rungs i -- n+i.
//   petersen2(n): outer cycle 0..n-1, spokes i -- n+i, inner edges
//     n+i -- n+((i+2) mod n).
Graph generate(const FamilySpec& spec);

Graph join_graphs(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Position-i symbol of vertex v in hamming(k,a) and back.
std::vector<int> hamming_digits(long long v, int k, int a);
long long hamming_vertex(const std::vector<int>& digits, int a);

// The HX(n) lattice points in label order (lexicographically sorted).
std::vector<std::array<int, 3>> hexagon_lattice(long long n);

// Index of the grid vertex with the given coordinates (row-major).
int grid_vertex(const std::vector<long long>& dims,
                const std::vector<long long>& coords);

}  // namespace mdim
