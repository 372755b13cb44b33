#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

/// Thrown when an input violates a documented precondition or format.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using VertexSet = std::vector<int>;

/// Simple undirected unweighted graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are stored normalized (u < v) and
/// sorted; adjacency lists are sorted ascending.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  bool is_connected() const;
  // Components listed with vertices ascending, ordered by smallest member.
  std::vector<std::vector<int>> connected_components() const;
  // Subgraph induced on `vertices` (relabeled 0..k-1 in the given order).
  Graph induced_subgraph(const std::vector<int>& vertices) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Relabels: vertex v of g becomes perm[v] in the result.
Graph permute_vertices(const Graph& g, const std::vector<int>& perm);

// Edge-list text format: first line "n m", then m lines "u v" (0-indexed).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

// Throws input_error unless `s` holds distinct vertex indices < n.
void validate_vertex_set(const VertexSet& s, int n);

}  // namespace mdim
