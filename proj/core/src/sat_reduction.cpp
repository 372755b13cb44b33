#include "mdim/sat_reduction.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "mdim/distance.hpp"
#include "mdim/resolving.hpp"

namespace mdim {

void SatFormula::validate() const {
  if (num_vars < 1) throw input_error("formula needs at least one variable");
  for (const auto& clause : clauses) {
    for (const auto& lit : clause)
      if (lit.var < 0 || lit.var >= num_vars)
        throw input_error("literal variable out of range");
    if (clause[0].var == clause[1].var || clause[0].var == clause[2].var ||
        clause[1].var == clause[2].var)
      throw input_error(
          "clause repeats a variable; the construction requires three "
          "distinct variables per clause");
  }
}

SatFormula parse_dimacs(std::istream& in) {
  SatFormula f;
  std::string line;
  bool have_header = false;
  long long expected_clauses = 0;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::stringstream ss(line);
    if (line[0] == 'p') {
      std::string p, cnf;
      long long vars = 0;
      if (!(ss >> p >> cnf >> vars >> expected_clauses) || cnf != "cnf")
        throw input_error("malformed DIMACS header");
      f.num_vars = static_cast<int>(vars);
      have_header = true;
      continue;
    }
    long long x;
    while (ss >> x) {
      if (x == 0) {
        if (pending.size() != 3)
          throw input_error("clauses must have exactly three literals");
        std::array<Literal, 3> clause;
        for (int i = 0; i < 3; ++i)
          clause[i] = {std::abs(pending[i]) - 1, pending[i] > 0};
        f.clauses.push_back(clause);
        pending.clear();
      } else {
        pending.push_back(static_cast<int>(x));
      }
    }
  }
  if (!have_header) throw input_error("missing DIMACS header");
  if (!pending.empty()) throw input_error("unterminated clause");
  if (expected_clauses != static_cast<long long>(f.clauses.size()))
    throw input_error("clause count does not match header");
  f.validate();
  return f;
}

SatFormula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open CNF file: " + path);
  return parse_dimacs(in);
}

std::vector<std::pair<std::string, int>> ReductionGraph::labels() const {
  std::vector<std::pair<std::string, int>> out;
  for (int i = 0; i < num_vars; ++i) {
    std::string suffix = "_" + std::to_string(i + 1);
    out.emplace_back("T" + suffix, t(i));
    out.emplace_back("a1" + suffix, a1(i));
    out.emplace_back("b1" + suffix, b1(i));
    out.emplace_back("F" + suffix, f(i));
    out.emplace_back("b2" + suffix, b2(i));
    out.emplace_back("a2" + suffix, a2(i));
  }
  for (int j = 0; j < num_clauses; ++j)
    for (int k = 1; k <= 5; ++k)
      out.emplace_back("c" + std::to_string(k) + "_" + std::to_string(j + 1),
                       c(j, k));
  return out;
}

ReductionGraph sat_to_graph(const SatFormula& f) {
  f.validate();
  ReductionGraph rg;
  rg.num_vars = f.num_vars;
  rg.num_clauses = static_cast<int>(f.clauses.size());
  int n = rg.num_vars, m = rg.num_clauses;
  std::vector<std::pair<int, int>> edges;

  // Six-cycle T_i, a1_i, b1_i, F_i, b2_i, a2_i per variable.
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(rg.t(i), rg.a1(i));
    edges.emplace_back(rg.a1(i), rg.b1(i));
    edges.emplace_back(rg.b1(i), rg.f(i));
    edges.emplace_back(rg.f(i), rg.b2(i));
    edges.emplace_back(rg.b2(i), rg.a2(i));
    edges.emplace_back(rg.a2(i), rg.t(i));
  }
  // Four-star per clause, centered at c2.
  for (int j = 0; j < m; ++j) {
    edges.emplace_back(rg.c(j, 2), rg.c(j, 1));
    edges.emplace_back(rg.c(j, 2), rg.c(j, 3));
    edges.emplace_back(rg.c(j, 2), rg.c(j, 4));
    edges.emplace_back(rg.c(j, 2), rg.c(j, 5));
  }
  // Cross edges: {T_i, c1_j} always, then the literal case analysis.
  for (int j = 0; j < m; ++j) {
    const auto& clause = f.clauses[j];
    for (int i = 0; i < n; ++i) {
      edges.emplace_back(rg.t(i), rg.c(j, 1));
      int sign = 0;  // 0 = absent, +1 positive literal, -1 negative literal
      for (const auto& lit : clause)
        if (lit.var == i) sign = lit.positive ? 1 : -1;
      if (sign == 1) {
        edges.emplace_back(rg.f(i), rg.c(j, 1));
        edges.emplace_back(rg.f(i), rg.c(j, 3));
      } else if (sign == -1) {
        edges.emplace_back(rg.f(i), rg.c(j, 1));
        edges.emplace_back(rg.t(i), rg.c(j, 3));
      } else {
        edges.emplace_back(rg.f(i), rg.c(j, 1));
        edges.emplace_back(rg.f(i), rg.c(j, 3));
        edges.emplace_back(rg.t(i), rg.c(j, 3));
      }
    }
  }
  rg.graph = Graph(6 * n + 5 * m, std::move(edges));
  return rg;
}

DerivedSet assignment_to_resolving_set(const ReductionGraph& rg,
                                       const SatFormula& f,
                                       const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != rg.num_vars)
    throw input_error("assignment size mismatch");
  DerivedSet result;
  for (int j = 0; j < rg.num_clauses; ++j) result.set.push_back(rg.c(j, 4));
  for (int i = 0; i < rg.num_vars; ++i)
    result.set.push_back(assignment[i] ? rg.a1(i) : rg.b1(i));
  std::sort(result.set.begin(), result.set.end());
  result.verified = is_resolving(all_pairs_distances(rg.graph), result.set);
  (void)f;
  return result;
}

std::vector<bool> resolving_set_to_assignment(const ReductionGraph& rg,
                                              const VertexSet& r) {
  if (static_cast<int>(r.size()) != rg.num_vars + rg.num_clauses)
    throw input_error("resolving set must have size n+m");
  if (!is_resolving(all_pairs_distances(rg.graph), r))
    throw input_error("set does not resolve the reduction graph");
  std::vector<bool> assignment(rg.num_vars, false);
  for (int i = 0; i < rg.num_vars; ++i)
    for (int v : r)
      if (v == rg.a1(i) || v == rg.a2(i)) assignment[i] = true;
  return assignment;
}

bool satisfies(const SatFormula& f, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != f.num_vars)
    throw input_error("assignment size mismatch");
  for (const auto& clause : f.clauses) {
    bool ok = false;
    for (const auto& lit : clause)
      if (assignment[lit.var] == lit.positive) ok = true;
    if (!ok) return false;
  }
  return true;
}

}  // namespace mdim
