#include "mdim/random_graphs.hpp"

#include <algorithm>
#include <sstream>

#include "mdim/rng.hpp"

namespace mdim {

namespace {

void validate_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw input_error("probability must lie in [0,1]");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, sep)) out.push_back(piece);
  return out;
}

}  // namespace

RandomSpec RandomSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw input_error("random spec must look like kind:params");
  std::string head = text.substr(0, colon);
  RandomSpec spec;
  bool have_seed = false;
  if (head == "tree")
    spec.kind = RandomKind::uniform_tree;
  else if (head == "er")
    spec.kind = RandomKind::erdos_renyi;
  else if (head == "sbm")
    spec.kind = RandomKind::sbm;
  else
    throw input_error("unknown random model: " + head);

  for (const std::string& kv : split(text.substr(colon + 1), ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw input_error("random spec parameters must be key=value");
    std::string key = kv.substr(0, eq);
    std::string value = kv.substr(eq + 1);
    if (key == "n") {
      spec.n = std::stoll(value);
    } else if (key == "p") {
      if (spec.kind == RandomKind::sbm) {
        std::vector<double> flat;
        for (const auto& cell : split(value, '+'))
          flat.push_back(std::stod(cell));
        std::size_t c = spec.sizes.size();
        if (c == 0 || flat.size() != c * c)
          throw input_error("sbm spec: give sizes before p; p needs c*c values");
        spec.probs.assign(c, std::vector<double>(c));
        for (std::size_t i = 0; i < c; ++i)
          for (std::size_t j = 0; j < c; ++j) spec.probs[i][j] = flat[i * c + j];
      } else {
        spec.p = std::stod(value);
      }
    } else if (key == "sizes") {
      for (const auto& cell : split(value, '+'))
        spec.sizes.push_back(std::stoll(cell));
    } else if (key == "seed") {
      spec.seed = std::stoull(value);
      have_seed = true;
    } else {
      throw input_error("unknown random spec parameter: " + key);
    }
  }
  if (!have_seed) throw input_error("random spec requires an explicit seed");
  return spec;
}

std::string RandomSpec::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case RandomKind::uniform_tree:
      out << "tree:n=" << n << ",seed=" << seed;
      break;
    case RandomKind::erdos_renyi:
      out << "er:n=" << n << ",p=" << p << ",seed=" << seed;
      break;
    case RandomKind::sbm: {
      out << "sbm:sizes=";
      for (std::size_t i = 0; i < sizes.size(); ++i)
        out << (i ? "+" : "") << sizes[i];
      out << ",p=";
      bool first = true;
      for (const auto& row : probs)
        for (double x : row) {
          if (!first) out << '+';
          out << x;
          first = false;
        }
      out << ",seed=" << seed;
      break;
    }
  }
  return out.str();
}

Graph prufer_decode(const std::vector<int>& sequence, int n) {
  if (n < 1) throw input_error("tree needs n >= 1");
  if (n <= 2) {
    if (!sequence.empty()) throw input_error("sequence length must be n-2");
    if (n == 1) return Graph(1, {});
    return Graph(2, {{0, 1}});
  }
  if (static_cast<int>(sequence.size()) != n - 2)
    throw input_error("sequence length must be n-2");
  std::vector<int> degree(n, 1);
  for (int v : sequence) {
    if (v < 0 || v >= n) throw input_error("sequence value out of range");
    ++degree[v];
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  // Classic linear scan: `ptr` tracks the smallest never-promoted leaf.
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : sequence) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph(n, std::move(edges));
}

std::vector<int> prufer_encode(const Graph& tree) {
  int n = tree.vertex_count();
  if (tree.edge_count() != n - 1 || !tree.is_connected())
    throw input_error("prufer_encode requires a tree");
  if (n <= 2) return {};
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = tree.degree(v);
  std::vector<int> parent(n, -1);
  // Root at n-1 so repeated leaf removal mirrors the decoder.
  std::vector<int> order;
  order.reserve(n);
  order.push_back(n - 1);
  std::vector<char> seen(n, 0);
  seen[n - 1] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    for (int w : tree.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        order.push_back(w);
      }
    }
  }
  std::vector<int> sequence;
  sequence.reserve(n - 2);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < n - 2; ++i) {
    int v = parent[leaf];
    sequence.push_back(v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return sequence;
}

Graph uniform_tree(long long n, std::uint64_t seed) {
  if (n < 1) throw input_error("tree needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<int> sequence;
  sequence.reserve(std::max<long long>(0, n - 2));
  for (long long i = 0; i < n - 2; ++i)
    sequence.push_back(static_cast<int>(rng.next_below(n)));
  return prufer_decode(sequence, static_cast<int>(n));
}

Graph erdos_renyi(long long n, double p, std::uint64_t seed) {
  if (n < 0) throw input_error("er needs n >= 0");
  validate_probability(p);
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  // One draw per pair in fixed (u,v) order, u < v.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) edges.emplace_back(u, v);
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph stochastic_block_model(const std::vector<long long>& sizes,
                             const std::vector<std::vector<double>>& probs,
                             std::uint64_t seed) {
  if (sizes.empty()) throw input_error("sbm needs at least one community");
  std::size_t c = sizes.size();
  if (probs.size() != c) throw input_error("sbm probability matrix size mismatch");
  for (std::size_t i = 0; i < c; ++i) {
    if (probs[i].size() != c)
      throw input_error("sbm probability matrix size mismatch");
    for (std::size_t j = 0; j < c; ++j) {
      validate_probability(probs[i][j]);
      if (probs[i][j] != probs[j][i])
        throw input_error("sbm probability matrix must be symmetric");
    }
  }
  long long n = 0;
  std::vector<int> community;
  for (std::size_t i = 0; i < c; ++i) {
    if (sizes[i] < 1) throw input_error("sbm community sizes must be positive");
    n += sizes[i];
    for (long long j = 0; j < sizes[i]; ++j)
      community.push_back(static_cast<int>(i));
  }
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < probs[community[u]][community[v]])
        edges.emplace_back(u, v);
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph generate_random(const RandomSpec& spec) {
  switch (spec.kind) {
    case RandomKind::uniform_tree:
      return uniform_tree(spec.n, spec.seed);
    case RandomKind::erdos_renyi:
      return erdos_renyi(spec.n, spec.p, spec.seed);
    case RandomKind::sbm:
      return stochastic_block_model(spec.sizes, spec.probs, spec.seed);
  }
  throw std::logic_error("unreachable");
}

}  // namespace mdim
