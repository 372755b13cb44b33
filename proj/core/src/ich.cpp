#include "mdim/ich.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace mdim {

namespace {

// Candidate score for the greedy step. Entropy order is decided on the
// sorted class-size multiset: equal multisets tie exactly, otherwise the
// sums of size*log(size) are compared with a 1e-12 relative epsilon
// (termination never relies on float equality).
struct Score {
  std::vector<int> sizes;  // sorted ascending
  double size_log_sum = 0.0;
  int class_count = 0;
};

// True when `a` has strictly higher entropy; entropy ties fall back to the
// class count.
bool better(const Score& a, const Score& b) {
  if (a.sizes != b.sizes) {
    double scale = std::max({std::fabs(a.size_log_sum),
                             std::fabs(b.size_log_sum), 1.0});
    if (std::fabs(a.size_log_sum - b.size_log_sum) > 1e-12 * scale)
      return a.size_log_sum < b.size_log_sum;  // smaller sum = higher entropy
  }
  return a.class_count > b.class_count;
}

using Partition = std::vector<std::vector<int>>;  // rows per class

template <typename ValueAt>
Score refine_score(const Partition& classes, ValueAt&& value) {
  Score score;
  std::vector<std::int64_t> values;
  for (const auto& cls : classes) {
    values.clear();
    for (int r : cls) values.push_back(value(r));
    std::sort(values.begin(), values.end());
    for (std::size_t i = 0; i < values.size();) {
      std::size_t j = i;
      while (j < values.size() && values[j] == values[i]) ++j;
      score.sizes.push_back(static_cast<int>(j - i));
      i = j;
    }
  }
  std::sort(score.sizes.begin(), score.sizes.end());
  score.class_count = static_cast<int>(score.sizes.size());
  for (int s : score.sizes)
    if (s > 1) score.size_log_sum += s * std::log(static_cast<double>(s));
  return score;
}

template <typename ValueAt>
Partition refine_partition(const Partition& classes, ValueAt&& value) {
  Partition refined;
  std::vector<std::pair<std::int64_t, int>> tagged;
  for (const auto& cls : classes) {
    tagged.clear();
    for (int r : cls) tagged.emplace_back(value(r), r);
    std::sort(tagged.begin(), tagged.end());
    for (std::size_t i = 0; i < tagged.size();) {
      std::size_t j = i;
      std::vector<int> part;
      while (j < tagged.size() && tagged[j].first == tagged[i].first)
        part.push_back(tagged[j++].second);
      refined.push_back(std::move(part));
      i = j;
    }
  }
  return refined;
}

double entropy_of(const Partition& classes, int rows) {
  if (rows == 0) return 0.0;
  double sum = 0.0;
  for (const auto& cls : classes)
    if (cls.size() > 1)
      sum += static_cast<double>(cls.size()) *
             std::log(static_cast<double>(cls.size()));
  return std::log(static_cast<double>(rows)) - sum / rows;
}

template <typename ValueAt>
std::pair<int, int> find_duplicate_rows(int rows, int cols, ValueAt&& value) {
  std::vector<int> order(rows);
  for (int i = 0; i < rows; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    for (int c = 0; c < cols; ++c) {
      auto va = value(a, c), vb = value(b, c);
      if (va != vb) return va < vb;
    }
    return a < b;
  });
  for (int i = 0; i + 1 < rows; ++i) {
    bool equal = true;
    for (int c = 0; c < cols && equal; ++c)
      equal = value(order[i], c) == value(order[i + 1], c);
    if (equal)
      return {std::min(order[i], order[i + 1]),
              std::max(order[i], order[i + 1])};
  }
  return {-1, -1};
}

// Shared greedy loop; value(row, col) values only need equality/order.
template <typename ValueAt>
BetaResult ich_impl(int rows, int cols, ValueAt&& value) {
  if (rows <= 1) return {0, {}, Method::ich};
  Partition classes = {std::vector<int>(rows)};
  for (int r = 0; r < rows; ++r) classes[0][r] = r;
  int class_count = 1;
  VertexSet chosen;
  std::vector<char> used(cols, 0);
  while (class_count < rows) {
    int best_candidate = -1;
    Score best_score;
    for (int c = 0; c < cols; ++c) {
      if (used[c]) continue;
      Score score =
          refine_score(classes, [&](int r) { return value(r, c); });
      if (score.class_count <= class_count) continue;  // no refinement
      if (best_candidate == -1 || better(score, best_score)) {
        best_candidate = c;
        best_score = std::move(score);
      }
    }
    if (best_candidate == -1) {
      auto pair = find_duplicate_rows(rows, cols, value);
      throw unresolvable_error(
          pair, "rows " + std::to_string(pair.first) + " and " +
                    std::to_string(pair.second) +
                    " are identical in every column; no resolving set exists");
    }
    classes = refine_partition(classes,
                               [&](int r) { return value(r, best_candidate); });
    class_count = static_cast<int>(classes.size());
    chosen.push_back(best_candidate);
    used[best_candidate] = 1;
  }
  return {static_cast<int>(chosen.size()), std::move(chosen), Method::ich};
}

template <typename ValueAt>
EntropyState entropy_state_impl(int rows, const VertexSet& selected,
                                ValueAt&& value) {
  Partition classes;
  if (rows > 0) {
    classes.push_back(std::vector<int>(rows));
    for (int r = 0; r < rows; ++r) classes[0][r] = r;
  }
  for (int col : selected)
    classes = refine_partition(classes,
                               [&](int r) { return value(r, col); });
  EntropyState state;
  state.class_of.assign(rows, 0);
  for (std::size_t id = 0; id < classes.size(); ++id)
    for (int r : classes[id]) state.class_of[r] = static_cast<int>(id);
  state.class_count = static_cast<int>(classes.size());
  state.entropy = entropy_of(classes, rows);
  return state;
}

}  // namespace

EntropyState entropy_state(const DistanceMatrix& d, const VertexSet& r) {
  validate_vertex_set(r, d.size());
  return entropy_state_impl(d.size(), r,
                            [&](int row, int col) { return d.at(col, row); });
}

EntropyState entropy_state(const GeneralTable& m, const VertexSet& cols) {
  validate_vertex_set(cols, m.cols());
  return entropy_state_impl(m.rows(), cols,
                            [&](int row, int col) { return m.at(row, col); });
}

BetaResult ich(const DistanceMatrix& d) {
  return ich_impl(d.size(), d.size(),
                  [&](int row, int col) { return d.at(col, row); });
}

BetaResult ich(const GeneralTable& m) {
  return ich_impl(m.rows(), m.cols(),
                  [&](int row, int col) { return m.at(row, col); });
}

}  // namespace mdim
