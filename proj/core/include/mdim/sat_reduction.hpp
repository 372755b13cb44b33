#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Variable reference with sign; var is 0-indexed.
struct Literal {
  int var = 0;
  bool positive = true;
};

/// CNF with exactly three literals per clause, three distinct variables
/// per clause.
struct SatFormula {
  int num_vars = 0;
  std::vector<std::array<Literal, 3>> clauses;

  void validate() const;
};

// DIMACS-style text: comment lines "c ...", header "p cnf <vars> <clauses>",
// then clauses as signed 1-indexed integers terminated by 0.
SatFormula parse_dimacs(std::istream& in);
SatFormula parse_dimacs_file(const std::string& path);

/// Output of the 3-SAT construction.
///
/// Vertex numbering: variable gadgets first in blocks of six ordered
/// T, a1, b1, F, b2, a2, then clause gadgets in blocks of five ordered
/// c1..c5. Role accessors use 0-indexed variable/clause numbers.
struct ReductionGraph {
  Graph graph;
  int num_vars = 0;
  int num_clauses = 0;

  int t(int i) const { return 6 * i; }
  int a1(int i) const { return 6 * i + 1; }
  int b1(int i) const { return 6 * i + 2; }
  int f(int i) const { return 6 * i + 3; }
  int b2(int i) const { return 6 * i + 4; }
  int a2(int i) const { return 6 * i + 5; }
  int c(int j, int k) const {  // k in 1..5
    return 6 * num_vars + 5 * j + (k - 1);
  }

  // Role name ("T_1", "a1_1", ..., "c4_2"; indices 1-based) per vertex.
  std::vector<std::pair<std::string, int>> labels() const;
};

// Builds the gadget graph: a six-cycle per variable, a four-star per
// clause, and the positive/negative/absent cross-edge cases.
ReductionGraph sat_to_graph(const SatFormula& f);

struct DerivedSet {
  VertexSet set;
  bool verified = false;  // is_resolving outcome on the reduction graph
};

// R = {c4_j for all j} + {a1_i : x_i true} + {b1_i : x_i false}; always of
// size n+m, and verified resolving whenever the assignment satisfies f.
DerivedSet assignment_to_resolving_set(const ReductionGraph& rg,
                                       const SatFormula& f,
                                       const std::vector<bool>& assignment);

// x_i true iff a1_i or a2_i is in r; requires r resolving with |r| = n+m.
std::vector<bool> resolving_set_to_assignment(const ReductionGraph& rg,
                                              const VertexSet& r);

bool satisfies(const SatFormula& f, const std::vector<bool>& assignment);

}  // namespace mdim
