#include "mdim/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>

#include "mdim/resolving.hpp"
#include "mdim/twins.hpp"

namespace mdim {

namespace {

// ---------------------------------------------------------------------------
// Fast duplicate detection for subset enumeration.
//
// Values are compressed per column into dense codes so a subset check can
// run through one of three strategies: a stamped direct-address table when
// the mixed-radix key space is small, packed 64-bit keys otherwise, and a
// generic lexicographic sort as the last resort.
// ---------------------------------------------------------------------------

struct ColumnCodes {
  int rows = 0;
  std::int32_t bound = 1;  // codes lie in [0, bound)
  std::vector<std::vector<std::int32_t>> codes;  // [column][row]
};

ColumnCodes codes_from_matrix(const DistanceMatrix& d) {
  ColumnCodes cc;
  cc.rows = d.size();
  std::int32_t max_finite = 0;
  for (std::int32_t e : d.entries())
    if (e != kInfDistance) max_finite = std::max(max_finite, e);
  std::int32_t inf_code = max_finite + 1;
  cc.bound = inf_code + 1;
  cc.codes.assign(d.size(), std::vector<std::int32_t>(d.size()));
  for (int c = 0; c < d.size(); ++c)
    for (int r = 0; r < d.size(); ++r) {
      std::int32_t e = d.at(c, r);
      cc.codes[c][r] = (e == kInfDistance) ? inf_code : e;
    }
  return cc;
}

ColumnCodes codes_from_table(const GeneralTable& m) {
  ColumnCodes cc;
  cc.rows = m.rows();
  cc.codes.assign(m.cols(), std::vector<std::int32_t>(m.rows()));
  std::int32_t max_code = 0;
  for (int c = 0; c < m.cols(); ++c) {
    std::vector<std::int64_t> values;
    values.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) values.push_back(m.at(r, c));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int r = 0; r < m.rows(); ++r) {
      auto it = std::lower_bound(values.begin(), values.end(), m.at(r, c));
      cc.codes[c][r] = static_cast<std::int32_t>(it - values.begin());
    }
    max_code = std::max(max_code, static_cast<std::int32_t>(values.size()) - 1);
  }
  cc.bound = max_code + 1;
  return cc;
}

class DuplicateChecker {
 public:
  DuplicateChecker(int rows, std::int64_t bound) : rows_(rows), bound_(bound) {
    std::int64_t space = 1;
    stamp_width_ = 0;
    while (stamp_width_ < 16 && space * bound <= (1 << 22)) {
      space *= bound;
      ++stamp_width_;
    }
    stamp_space_ = space;
    bits_per_value_ = 1;
    while ((std::int64_t{1} << bits_per_value_) < bound) ++bits_per_value_;
  }

  // True when value(row, slot), slot in [0, slots), is injective over rows.
  template <typename Value>
  bool all_distinct(int slots, Value&& value) {
    if (slots == 0) return rows_ <= 1;
    if (slots <= stamp_width_) return stamp_path(slots, value);
    if (slots * bits_per_value_ <= 64) return packed_path(slots, value);
    return sorted_path(slots, value);
  }

 private:
  template <typename Value>
  bool stamp_path(int slots, Value&& value) {
    std::int64_t space = 1;
    for (int i = 0; i < slots; ++i) space *= bound_;
    if (static_cast<std::int64_t>(stamps_.size()) < space)
      stamps_.assign(space, 0);
    ++generation_;
    for (int r = 0; r < rows_; ++r) {
      std::int64_t key = 0;
      for (int i = 0; i < slots; ++i) key = key * bound_ + value(r, i);
      if (stamps_[key] == generation_) return false;
      stamps_[key] = generation_;
    }
    return true;
  }

  template <typename Value>
  bool packed_path(int slots, Value&& value) {
    scratch_.resize(rows_);
    for (int r = 0; r < rows_; ++r) {
      std::uint64_t key = 0;
      for (int i = 0; i < slots; ++i)
        key = (key << bits_per_value_) | static_cast<std::uint64_t>(value(r, i));
      scratch_[r] = key;
    }
    std::sort(scratch_.begin(), scratch_.end());
    return std::adjacent_find(scratch_.begin(), scratch_.end()) ==
           scratch_.end();
  }

  template <typename Value>
  bool sorted_path(int slots, Value&& value) {
    std::vector<std::vector<std::int32_t>> rows(rows_);
    for (int r = 0; r < rows_; ++r) {
      rows[r].resize(slots);
      for (int i = 0; i < slots; ++i) rows[r][i] = value(r, i);
    }
    std::sort(rows.begin(), rows.end());
    return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
  }

  int rows_;
  std::int64_t bound_;
  int stamp_width_;
  std::int64_t stamp_space_;
  int bits_per_value_;
  std::vector<std::uint32_t> stamps_;
  std::uint32_t generation_ = 0;
  std::vector<std::uint64_t> scratch_;
};

// Calls check on every size-k subset of 0..n-1 in lexicographic order and
// returns the first one accepted.
template <typename Check>
std::optional<VertexSet> first_passing_subset(int n, int k, Check&& check) {
  if (k > n) return std::nullopt;
  VertexSet sub(k);
  std::iota(sub.begin(), sub.end(), 0);
  while (true) {
    if (check(sub)) return sub;
    int i = k - 1;
    while (i >= 0 && sub[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++sub[i];
    for (int j = i + 1; j < k; ++j) sub[j] = sub[j - 1] + 1;
  }
}

// Twin classes read off a symmetric matrix: rows equal everywhere outside
// the {u,v} coordinates. Equal premises force pairwise agreement inside the
// triple as well, so the relation is transitive on any symmetric matrix.
std::vector<std::vector<int>> matrix_twin_classes(const DistanceMatrix& d) {
  int n = d.size();
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (find(u) == find(v)) continue;
      bool twins = true;
      for (int w = 0; w < n && twins; ++w)
        if (w != u && w != v) twins = d.at(u, w) == d.at(v, w);
      if (twins) root[find(v)] = find(u);
    }
  std::vector<std::vector<int>> classes(n);
  for (int v = 0; v < n; ++v) classes[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& cls : classes)
    if (!cls.empty()) out.push_back(std::move(cls));
  return out;
}

int matrix_lower_bound(const DistanceMatrix& d) {
  int n = d.size();
  if (n <= 1) return 0;
  int lo = 1;
  if (n <= 512) {
    int twin = 0;
    for (const auto& cls : matrix_twin_classes(d))
      twin += static_cast<int>(cls.size()) - 1;
    lo = std::max(lo, twin);
  }
  // Counting bound n <= delta^k + k; only valid when every off-diagonal
  // entry is a positive finite "distance".
  std::int32_t delta = 0;
  bool usable = true;
  for (int u = 0; u < n && usable; ++u)
    for (int v = u + 1; v < n && usable; ++v) {
      std::int32_t e = d.at(u, v);
      if (e == kInfDistance || e < 1)
        usable = false;
      else
        delta = std::max(delta, e);
    }
  if (usable && delta >= 1) {
    int k = 1;
    while (true) {
      __int128 power = 1;
      bool enough = false;
      for (int i = 0; i < k; ++i) {
        power *= delta;
        if (power + k >= n) {
          enough = true;
          break;
        }
      }
      if (enough || power + k >= n) break;
      ++k;
    }
    lo = std::max(lo, k);
  }
  return lo;
}

BetaResult brute_force_over_codes(const ColumnCodes& cc, int cols, int lo,
                                  const char* unresolvable_what) {
  if (cc.rows <= 1) return {0, {}, Method::brute_force};
  DuplicateChecker checker(cc.rows, cc.bound);
  // Bail out early when even the full column set cannot separate the rows.
  {
    std::vector<std::vector<std::int32_t>> rows(cc.rows);
    for (int r = 0; r < cc.rows; ++r) {
      rows[r].resize(cols);
      for (int c = 0; c < cols; ++c) rows[r][c] = cc.codes[c][r];
    }
    auto sorted = rows;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw input_error(unresolvable_what);
  }
  for (int k = std::max(1, lo); k <= cols; ++k) {
    auto found = first_passing_subset(cols, k, [&](const VertexSet& sub) {
      return checker.all_distinct(k, [&](int row, int slot) {
        return cc.codes[sub[slot]][row];
      });
    });
    if (found) return {k, std::move(*found), Method::brute_force};
  }
  throw input_error(unresolvable_what);
}

// Distance rows of just the witness members; lets closed forms verify their
// construction without materializing the full matrix.
bool witness_resolves(const Graph& g, const VertexSet& witness) {
  validate_vertex_set(witness, g.vertex_count());
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<std::int32_t>> rows;
  rows.reserve(witness.size());
  for (int w : witness) rows.push_back(bfs_distances(g, w));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    for (const auto& row : rows)
      if (row[a] != row[b]) return row[a] < row[b];
    return a < b;
  });
  for (int i = 0; i + 1 < n; ++i) {
    bool equal = true;
    for (const auto& row : rows)
      if (row[order[i]] != row[order[i + 1]]) {
        equal = false;
        break;
      }
    if (equal) return false;
  }
  return true;
}

BetaResult closed_form(const Graph& g, int beta, VertexSet witness) {
  std::sort(witness.begin(), witness.end());
  if (static_cast<int>(witness.size()) != beta || !witness_resolves(g, witness))
    throw std::logic_error("closed-form witness failed verification");
  return {beta, std::move(witness), Method::closed_form};
}

// Lexicographically smallest resolving subset of exactly size k.
VertexSet lex_first_resolving_of_size(const DistanceMatrix& d, int k) {
  ColumnCodes cc = codes_from_matrix(d);
  DuplicateChecker checker(cc.rows, cc.bound);
  auto found = first_passing_subset(d.size(), k, [&](const VertexSet& sub) {
    return checker.all_distinct(k, [&](int row, int slot) {
      return cc.codes[sub[slot]][row];
    });
  });
  if (!found) throw std::logic_error("no resolving set at the expected size");
  return *found;
}

constexpr int kWitnessSearchCap = 512;

BetaResult searched_closed_form(const Graph& g, int beta, const char* what) {
  if (g.vertex_count() > kWitnessSearchCap)
    throw input_error(std::string(what) +
                      ": witness search not supported at this size");
  VertexSet witness = lex_first_resolving_of_size(all_pairs_distances(g), beta);
  return {beta, std::move(witness), Method::closed_form};
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::brute_force: return "brute_force";
    case Method::closed_form: return "closed_form";
    case Method::tree_formula: return "tree_formula";
    case Method::ich: return "ich";
  }
  return "unknown";
}

BetaResult brute_force_beta(const DistanceMatrix& d) {
  if (d.size() <= 1) return {0, {}, Method::brute_force};
  ColumnCodes cc = codes_from_matrix(d);
  return brute_force_over_codes(cc, d.size(), matrix_lower_bound(d),
                                "matrix has indistinguishable rows");
}

BetaResult brute_force_beta(const GeneralTable& m) {
  if (m.rows() <= 1) return {0, {}, Method::brute_force};
  ColumnCodes cc = codes_from_table(m);
  return brute_force_over_codes(cc, m.cols(), 1,
                                "table has duplicate rows; no column set resolves it");
}

std::vector<VertexSet> all_resolving_sets_of_size(const DistanceMatrix& d,
                                                  int k) {
  std::vector<VertexSet> out;
  if (d.size() <= 1) {
    if (k == 0) out.push_back({});
    return out;
  }
  ColumnCodes cc = codes_from_matrix(d);
  DuplicateChecker checker(cc.rows, cc.bound);
  first_passing_subset(d.size(), k, [&](const VertexSet& sub) {
    if (checker.all_distinct(k, [&](int row, int slot) {
          return cc.codes[sub[slot]][row];
        }))
      out.push_back(sub);
    return false;  // keep enumerating
  });
  return out;
}

BetaResult tree_beta(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0 || g.edge_count() != n - 1 || !g.is_connected())
    throw input_error("tree_beta requires a tree");
  if (n == 1) return {1, {0}, Method::tree_formula};

  bool has_major = false;
  for (int v = 0; v < n && !has_major; ++v) has_major = g.degree(v) >= 3;
  if (!has_major) {
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 1) return {1, {v}, Method::tree_formula};
  }

  // Walk each leaf down its chain of degree-2 vertices; the first major
  // vertex reached is the exterior major vertex owning that leaf.
  std::vector<std::vector<int>> owned(n);
  for (int leaf = 0; leaf < n; ++leaf) {
    if (g.degree(leaf) != 1) continue;
    int prev = leaf;
    int cur = g.neighbors(leaf)[0];
    while (g.degree(cur) == 2) {
      int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                             : g.neighbors(cur)[0];
      prev = cur;
      cur = next;
    }
    owned[cur].push_back(leaf);
  }

  VertexSet witness;
  int leaves = 0, exterior = 0;
  for (int v = 0; v < n; ++v) {
    if (owned[v].empty()) continue;
    ++exterior;
    leaves += static_cast<int>(owned[v].size());
    // owned[v] is ascending by construction; drop the smallest leaf.
    witness.insert(witness.end(), owned[v].begin() + 1, owned[v].end());
  }
  std::sort(witness.begin(), witness.end());
  return {leaves - exterior, std::move(witness), Method::tree_formula};
}

VertexSet fan_resolving_set(long long n) {
  if (n < 7) throw input_error("fan block construction requires n >= 7");
  VertexSet r;
  long long blocks = n / 5;
  for (long long j = 0; j < blocks; ++j) {
    r.push_back(static_cast<int>(5 * j + 2));
    r.push_back(static_cast<int>(5 * j + 4));
  }
  long long m = n % 5;
  if (m == 2 || m == 3) {
    r.push_back(static_cast<int>(n));
  } else if (m == 4) {
    r.push_back(static_cast<int>(n - 2));
    r.push_back(static_cast<int>(n));
  }
  return r;
}

namespace {

long long fan_wheel_formula(long long n) { return (2 * n + 2) / 5; }

BetaResult wheel_closed_form(const Graph& wheel, long long n) {
  int beta = static_cast<int>(fan_wheel_formula(n));
  // The fan set may use the cut endpoints v_1 / v_n; the wheel admits the
  // same size after shifting those picks off the seam.
  VertexSet base = fan_resolving_set(n);
  std::vector<VertexSet> candidates = {base};
  auto replaced = [&](int from, int to) {
    VertexSet s = base;
    for (int& v : s)
      if (v == from) v = to;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  };
  long long m = n % 5;
  if (m == 2 || m == 3) {
    candidates.push_back(replaced(static_cast<int>(n), static_cast<int>(n - 1)));
    candidates.push_back(replaced(static_cast<int>(n), static_cast<int>(n - 2)));
  } else if (m == 4) {
    for (int last : {static_cast<int>(n - 1), static_cast<int>(n)}) {
      VertexSet s = base;
      for (int& v : s)
        if (v == static_cast<int>(n)) v = last;
      std::sort(s.begin(), s.end());
      if (std::unique(s.begin(), s.end()) == s.end()) candidates.push_back(s);
    }
  }
  for (auto& cand : candidates) {
    if (static_cast<int>(cand.size()) != beta) continue;
    if (witness_resolves(wheel, cand)) {
      std::sort(cand.begin(), cand.end());
      return {beta, std::move(cand), Method::closed_form};
    }
  }
  return searched_closed_form(wheel, beta, "wheel");
}

BetaResult hexagon_closed_form(const Graph& g, long long n) {
  // Three consecutive corners of the bounding hexagon (cyclic corner order
  // visits (r,-r,0), (r,0,-r), (0,r,-r), ...).
  int r = static_cast<int>(n) - 1;
  std::array<std::array<int, 3>, 3> corners = {{
      {r, -r, 0}, {r, 0, -r}, {0, r, -r},
  }};
  auto lattice = hexagon_lattice(n);
  VertexSet witness;
  for (const auto& c : corners) {
    auto it = std::lower_bound(lattice.begin(), lattice.end(), c);
    if (it == lattice.end() || *it != c)
      throw std::logic_error("hexagon corner missing from lattice");
    witness.push_back(static_cast<int>(it - lattice.begin()));
  }
  return closed_form(g, 3, std::move(witness));
}

}  // namespace

BetaResult family_beta(const FamilySpec& spec) {
  Graph g = generate(spec);
  int n = g.vertex_count();
  auto fallback = [&]() { return brute_force_beta(all_pairs_distances(g)); };

  switch (spec.kind) {
    case FamilyKind::path: {
      if (n == 1) return {0, {}, Method::brute_force};
      return closed_form(g, 1, {0});
    }
    case FamilyKind::cycle:
      return closed_form(g, 2, {0, 1});
    case FamilyKind::complete: {
      if (n == 1) return {0, {}, Method::brute_force};
      VertexSet witness(n - 1);
      std::iota(witness.begin(), witness.end(), 0);
      return closed_form(g, n - 1, std::move(witness));
    }
    case FamilyKind::complete_bipartite: {
      long long s = spec.params[0], t = spec.params[1];
      if (s + t < 3) return fallback();  // K_{1,1} is the path P_2
      VertexSet witness;
      for (long long i = 0; i + 1 < s; ++i) witness.push_back(static_cast<int>(i));
      for (long long i = 0; i + 1 < t; ++i)
        witness.push_back(static_cast<int>(s + i));
      return closed_form(g, static_cast<int>(s + t - 2), std::move(witness));
    }
    case FamilyKind::grid: {
      std::vector<long long> dims;
      for (long long d : spec.params)
        if (d > 1) dims.push_back(d);
      if (dims.empty()) return {0, {}, Method::brute_force};
      if (dims.size() == 1) return closed_form(g, 1, {0});
      // Origin plus the far corner along each dimension but the last.
      VertexSet witness = {0};
      std::vector<long long> full = spec.params;
      for (std::size_t i = 0, seen = 0; i < full.size(); ++i) {
        if (full[i] <= 1) continue;
        if (seen + 1 < dims.size()) {
          std::vector<long long> coords(full.size(), 0);
          coords[i] = full[i] - 1;
          witness.push_back(grid_vertex(full, coords));
        }
        ++seen;
      }
      return closed_form(g, static_cast<int>(dims.size()), std::move(witness));
    }
    case FamilyKind::fan: {
      long long pn = spec.params[0];
      if (pn < 7) return fallback();
      return closed_form(g, static_cast<int>(fan_wheel_formula(pn)),
                         fan_resolving_set(pn));
    }
    case FamilyKind::wheel: {
      long long pn = spec.params[0];
      if (pn < 7) return fallback();
      return wheel_closed_form(g, pn);
    }
    case FamilyKind::hypercube: {
      long long k = spec.params[0];
      if (k == 1) return closed_form(g, 1, {0});
      if (k == 2) return closed_form(g, 2, {0, 1});
      return fallback();
    }
    case FamilyKind::hamming: {
      long long k = spec.params[0], a = spec.params[1];
      if (k == 1) {  // complete graph K_a
        VertexSet witness(a - 1);
        std::iota(witness.begin(), witness.end(), 0);
        return closed_form(g, static_cast<int>(a - 1), std::move(witness));
      }
      if (k == 2) {
        if (a > 6)
          throw input_error("hamming k=2 witness search supported for a <= 6");
        return searched_closed_form(
            g, static_cast<int>(2 * (2 * a - 1) / 3), "hamming");
      }
      return fallback();
    }
    case FamilyKind::hexagon: {
      if (spec.params[0] < 2) return fallback();
      return hexagon_closed_form(g, spec.params[0]);
    }
    case FamilyKind::honeycomb: {
      if (spec.params[0] < 2) return fallback();
      return searched_closed_form(g, 3, "honeycomb");
    }
    case FamilyKind::prism:
      return searched_closed_form(g, spec.params[0] % 2 == 1 ? 2 : 3, "prism");
    case FamilyKind::petersen2:
      return searched_closed_form(g, 3, "petersen2");
    case FamilyKind::join:
    case FamilyKind::disjoint_union:
    case FamilyKind::empty:
      return fallback();
  }
  throw std::logic_error("unreachable");
}

int twin_lower_bound(const Graph& g) {
  int bound = 0;
  for (const auto& cls : twin_classes(g))
    bound += static_cast<int>(cls.size()) - 1;
  return bound;
}

int diameter_lower_bound(const Graph& g) {
  if (g.vertex_count() < 2)
    throw input_error("diameter_lower_bound requires n >= 2");
  std::int32_t delta = diameter(g);
  if (delta == kInfDistance)
    throw input_error("diameter_lower_bound requires a connected graph");
  int n = g.vertex_count();
  int k = 1;
  while (true) {
    __int128 power = 1;
    bool enough = false;
    for (int i = 0; i < k; ++i) {
      power *= delta;
      if (power + k >= n) {
        enough = true;
        break;
      }
    }
    if (enough || power + k >= n) return k;
    ++k;
  }
}

BetaInterval unicyclic_interval(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3 || g.edge_count() != n || !g.is_connected())
    throw input_error("unicyclic_interval requires a connected graph with n edges");
  // Search tree from vertex 0; drop the first non-tree edge found.
  std::vector<char> seen(n, 0);
  std::vector<int> parent(n, -1);
  seen[0] = 1;
  std::vector<int> order = {0};
  for (std::size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        order.push_back(w);
      }
    }
  }
  std::pair<int, int> extra{-1, -1};
  for (auto [u, v] : g.edges()) {
    if (parent[u] == v || parent[v] == u) continue;
    extra = {u, v};
    break;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto e : g.edges())
    if (e != extra) edges.push_back(e);
  Graph t(n, std::move(edges));
  int bt = tree_beta(t).beta;
  return {std::max(1, bt - 2), bt + 1};
}

namespace {

using Bitset = std::vector<std::uint64_t>;

Bitset make_bitset(int n) { return Bitset((n + 63) / 64, 0); }
void bit_set(Bitset& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool bits_intersect(const Bitset& a, const Bitset& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

std::vector<Bitset> adjacency_bitsets(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Bitset> adj(n, make_bitset(n));
  for (auto [u, v] : g.edges()) {
    bit_set(adj[u], v);
    bit_set(adj[v], u);
  }
  return adj;
}

bool has_k5_subgraph(const Graph& g) {
  int n = g.vertex_count();
  auto adj = adjacency_bitsets(g);
  std::vector<int> clique;
  // Depth-first search for a 5-clique over candidate sets.
  std::function<bool(Bitset, int)> extend = [&](Bitset candidates, int depth) {
    if (depth == 5) return true;
    for (int v = 0; v < n; ++v) {
      if (!(candidates[v >> 6] >> (v & 63) & 1)) continue;
      Bitset next = candidates;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] &= adj[v][i];
      // Restrict to higher indices to avoid re-visiting permutations.
      for (int w = 0; w <= v; ++w) next[w >> 6] &= ~(std::uint64_t{1} << (w & 63));
      if (extend(next, depth + 1)) return true;
    }
    return false;
  };
  Bitset all = make_bitset(n);
  for (int v = 0; v < n; ++v) bit_set(all, v);
  return extend(all, 0);
}

bool has_k33_subgraph(const Graph& g) {
  int n = g.vertex_count();
  if (n < 6) return false;
  auto adj = adjacency_bitsets(g);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        int common = 0;
        for (std::size_t i = 0; i < adj[a].size(); ++i)
          common += std::popcount(adj[a][i] & adj[b][i] & adj[c][i]);
        if (common >= 3) return true;
      }
  return false;
}

}  // namespace

Beta2Properties beta2_necessary_properties(const Graph& g,
                                           const VertexSet& pair) {
  if (pair.size() != 2)
    throw input_error("beta2 check requires a set of exactly two vertices");
  DistanceMatrix d = all_pairs_distances(g);
  if (!is_resolving(d, pair))
    throw input_error("beta2 check requires a resolving pair");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (is_resolving(d, {v}))
      throw input_error("beta2 check requires a minimum resolving set");

  int u = pair[0], v = pair[1];
  Beta2Properties props;
  props.no_k5_subgraph = !has_k5_subgraph(g);
  props.no_k33_subgraph = !has_k33_subgraph(g);

  // Count shortest u-v paths along the BFS dag, capped at 2.
  auto du = bfs_distances(g, u);
  std::vector<int> count(g.vertex_count(), 0);
  count[u] = 1;
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return du[a] < du[b]; });
  for (int w : order) {
    if (w == u || du[w] == kInfDistance) continue;
    for (int x : g.neighbors(w))
      if (du[x] + 1 == du[w]) count[w] = std::min(2, count[w] + count[x]);
  }
  props.unique_shortest_path = count[v] == 1;

  auto dv = bfs_distances(g, v);
  props.path_degrees_at_most_5 = true;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == u || w == v) continue;
    if (du[w] != kInfDistance && dv[w] != kInfDistance &&
        du[w] + dv[w] == du[v] && g.degree(w) > 5)
      props.path_degrees_at_most_5 = false;
  }
  props.endpoint_degrees_at_most_3 = g.degree(u) <= 3 && g.degree(v) <= 3;
  return props;
}

namespace {

// Strong dimension solved as an exact hitting-set search: each vertex pair
// contributes the mask of vertices that strongly resolve it, and a strongly
// resolving set is exactly a set meeting every mask.
BetaResult strong_brute_force(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return {0, {}, Method::brute_force};
  DistanceMatrix d = all_pairs_distances(g);
  if (d.max_distance() == kInfDistance)
    throw input_error("strong resolving is undefined on disconnected graphs");

  struct PairMask {
    Bitset mask;
    int max_member;
  };
  std::vector<PairMask> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      Bitset mask = make_bitset(n);
      int max_member = -1;
      for (int s = 0; s < n; ++s) {
        if (d.at(s, v) == d.at(s, u) + d.at(u, v) ||
            d.at(s, u) == d.at(s, v) + d.at(u, v)) {
          bit_set(mask, s);
          max_member = s;
        }
      }
      pairs.push_back({std::move(mask), max_member});
    }

  auto suffix_mask = [&](int from) {
    Bitset b = make_bitset(n);
    for (int v = from; v < n; ++v) bit_set(b, v);
    return b;
  };

  // Greedy disjoint-mask packing: pairwise disjoint masks need one chosen
  // vertex each, so their count bounds the solution size from below.
  auto disjoint_bound = [&](const std::vector<int>& uncovered, int from) {
    Bitset used = make_bitset(n);
    Bitset allowed = suffix_mask(from);
    int count = 0;
    for (int id : uncovered) {
      Bitset restricted = pairs[id].mask;
      for (std::size_t i = 0; i < restricted.size(); ++i)
        restricted[i] &= allowed[i];
      if (!bits_intersect(restricted, used)) {
        bool empty = true;
        for (auto w : restricted)
          if (w) {
            empty = false;
            break;
          }
        if (empty) return n + 1;  // unhittable with the remaining candidates
        ++count;
        for (std::size_t i = 0; i < used.size(); ++i) used[i] |= restricted[i];
      }
    }
    return count;
  };

  std::vector<int> all_pairs_ids(pairs.size());
  std::iota(all_pairs_ids.begin(), all_pairs_ids.end(), 0);
  int lb = std::max(1, disjoint_bound(all_pairs_ids, 0));

  for (int k = lb; k <= n - 1; ++k) {
    VertexSet chosen;
    std::function<std::optional<VertexSet>(int, const std::vector<int>&)> dfs =
        [&](int from, const std::vector<int>& uncovered)
        -> std::optional<VertexSet> {
      if (uncovered.empty()) return chosen;
      int slots = k - static_cast<int>(chosen.size());
      if (slots == 0) return std::nullopt;
      for (int id : uncovered)
        if (pairs[id].max_member < from) return std::nullopt;
      if (disjoint_bound(uncovered, from) > slots) return std::nullopt;
      for (int c = from; c < n; ++c) {
        chosen.push_back(c);
        std::vector<int> rest;
        rest.reserve(uncovered.size());
        for (int id : uncovered)
          if (!(pairs[id].mask[c >> 6] >> (c & 63) & 1)) rest.push_back(id);
        if (auto hit = dfs(c + 1, rest)) return hit;
        chosen.pop_back();
      }
      return std::nullopt;
    };
    if (auto hit = dfs(0, all_pairs_ids))
      return {k, std::move(*hit), Method::brute_force};
  }
  // V minus any single vertex always strongly resolves.
  VertexSet witness(n - 1);
  std::iota(witness.begin(), witness.end(), 0);
  return {n - 1, std::move(witness), Method::brute_force};
}

BetaResult doubly_brute_force(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return {0, {}, Method::brute_force};
  DistanceMatrix d = all_pairs_distances(g);
  if (d.max_distance() == kInfDistance)
    throw input_error("doubly resolving is undefined on disconnected graphs");
  ColumnCodes cc = codes_from_matrix(d);
  // Normalized coordinates (subtract the first member's distance) live in
  // (-bound, bound); shift into [0, 2*bound-1).
  std::int64_t shifted_bound = 2 * static_cast<std::int64_t>(cc.bound) - 1;
  DuplicateChecker checker(n, shifted_bound);
  int lo = std::max(2, matrix_lower_bound(d));
  for (int k = lo; k <= n; ++k) {
    auto found = first_passing_subset(n, k, [&](const VertexSet& sub) {
      return checker.all_distinct(k - 1, [&](int row, int slot) {
        return cc.codes[sub[slot + 1]][row] - cc.codes[sub[0]][row] +
               cc.bound - 1;
      });
    });
    if (found) return {k, std::move(*found), Method::brute_force};
  }
  throw std::logic_error("full vertex set must doubly resolve");
}

}  // namespace

BetaResult brute_force_variant(const Graph& g, Variant variant, int k) {
  switch (variant) {
    case Variant::doubly:
      return doubly_brute_force(g);
    case Variant::strong:
      return strong_brute_force(g);
    case Variant::truncated: {
      if (k < 1) throw input_error("truncation threshold must be >= 1");
      return brute_force_beta(truncate_distances(all_pairs_distances(g), k));
    }
  }
  throw std::logic_error("unreachable");
}

int disconnected_beta(const Graph& g) {
  int total = 0;
  for (const auto& comp : g.connected_components()) {
    Graph sub = g.induced_subgraph(comp);
    if (sub.edge_count() == sub.vertex_count() - 1)
      total += tree_beta(sub).beta;
    else
      total += brute_force_beta(all_pairs_distances(sub)).beta;
  }
  return total;
}

}  // namespace mdim
