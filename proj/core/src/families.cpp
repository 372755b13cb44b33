#include "mdim/families.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <sstream>
#include <tuple>

namespace mdim {

namespace {

long long checked_vertex_count(long long n) {
  if (n > 5'000'000) throw input_error("family too large to materialize");
  return n;
}

Graph path_graph(long long n) {
  checked_vertex_count(n);
  if (n < 1) throw input_error("path requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph cycle_graph(long long n) {
  checked_vertex_count(n);
  if (n < 3) throw input_error("cycle requires n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, static_cast<int>(n) - 1);
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph complete_graph(long long n) {
  checked_vertex_count(n);
  if (n < 1) throw input_error("complete requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph empty_graph(long long n) {
  checked_vertex_count(n);
  if (n < 0) throw input_error("empty requires n >= 0");
  return Graph(static_cast<int>(n), {});
}

Graph complete_bipartite(long long s, long long t) {
  checked_vertex_count(s + t);
  if (s < 1 || t < 1) throw input_error("kst requires both sides >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < t; ++v) edges.emplace_back(u, static_cast<int>(s) + v);
  return Graph(static_cast<int>(s + t), std::move(edges));
}

Graph grid_graph(const std::vector<long long>& dims) {
  if (dims.empty()) throw input_error("grid requires at least one dimension");
  long long total = 1;
  for (long long d : dims) {
    if (d < 1) throw input_error("grid dimensions must be >= 1");
    total *= d;
    checked_vertex_count(total);
  }
  std::vector<std::pair<int, int>> edges;
  // Neighbors differ by one in exactly one coordinate; with row-major
  // indexing the step along coordinate i is the product of later dims.
  std::vector<long long> stride(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
    stride[i] = stride[i + 1] * dims[i + 1];
  std::vector<long long> coord(dims.size(), 0);
  for (long long v = 0; v < total; ++v) {
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (coord[i] + 1 < dims[i])
        edges.emplace_back(static_cast<int>(v),
                           static_cast<int>(v + stride[i]));
    }
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
      if (++coord[i] < dims[i]) break;
      coord[i] = 0;
    }
  }
  return Graph(static_cast<int>(total), std::move(edges));
}

Graph fan_graph(long long n) {
  if (n < 1) throw input_error("fan requires n >= 1");
  return join_graphs(complete_graph(1), path_graph(n));
}

Graph wheel_graph(long long n) {
  if (n < 3) throw input_error("wheel requires n >= 3");
  return join_graphs(complete_graph(1), cycle_graph(n));
}

Graph hamming_graph(long long k, long long a) {
  if (k < 1) throw input_error("hamming requires k >= 1");
  if (a < 2) throw input_error("hamming requires alphabet size a >= 2");
  long long total = 1;
  for (long long i = 0; i < k; ++i) {
    total *= a;
    checked_vertex_count(total);
  }
  std::vector<std::pair<int, int>> edges;
  // Adjacent when the label strings differ in exactly one position.
  long long power = 1;
  for (long long pos = 0; pos < k; ++pos) {
    for (long long v = 0; v < total; ++v) {
      long long digit = (v / power) % a;
      for (long long d = digit + 1; d < a; ++d) {
        long long w = v + (d - digit) * power;
        edges.emplace_back(static_cast<int>(v), static_cast<int>(w));
      }
    }
    power *= a;
  }
  return Graph(static_cast<int>(total), std::move(edges));
}

using HexCoord = std::array<int, 3>;

constexpr std::array<HexCoord, 6> kHexDirections = {{
    {1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {-1, 1, 0}, {-1, 0, 1}, {0, -1, 1},
}};

Graph hexagon_graph(long long n) {
  if (n < 1) throw input_error("hexagon requires n >= 1");
  checked_vertex_count(3 * n * n);
  auto points = hexagon_lattice(n);
  std::map<HexCoord, int> index;
  for (std::size_t i = 0; i < points.size(); ++i)
    index[points[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const auto& d : kHexDirections) {
      HexCoord q = {points[i][0] + d[0], points[i][1] + d[1],
                    points[i][2] + d[2]};
      auto it = index.find(q);
      if (it != index.end() && it->second > static_cast<int>(i))
        edges.emplace_back(static_cast<int>(i), it->second);
    }
  }
  return Graph(static_cast<int>(points.size()), std::move(edges));
}

Graph honeycomb_graph(long long n) {
  if (n < 1) throw input_error("honeycomb requires n >= 1");
  checked_vertex_count(6 * n * n);
  // Bounded dual of HX(n+1): every face of the triangular tiling is a
  // 3-clique of lattice points, and two faces are adjacent exactly when
  // they share two of them.
  Graph hx = hexagon_graph(n + 1);
  std::vector<std::array<int, 3>> faces;
  for (int u = 0; u < hx.vertex_count(); ++u)
    for (int v : hx.neighbors(u)) {
      if (v <= u) continue;
      for (int w : hx.neighbors(v)) {
        if (w <= v || !hx.has_edge(u, w)) continue;
        faces.push_back({u, v, w});
      }
    }
  std::sort(faces.begin(), faces.end());
  std::map<std::pair<int, int>, std::vector<int>> by_edge;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    by_edge[{f[0], f[1]}].push_back(static_cast<int>(i));
    by_edge[{f[0], f[2]}].push_back(static_cast<int>(i));
    by_edge[{f[1], f[2]}].push_back(static_cast<int>(i));
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [e, fs] : by_edge)
    if (fs.size() == 2) edges.emplace_back(fs[0], fs[1]);
  return Graph(static_cast<int>(faces.size()), std::move(edges));
}

Graph prism_graph(long long n) {
  if (n < 3) throw input_error("prism requires n >= 3");
  checked_vertex_count(2 * n);
  std::vector<std::pair<int, int>> edges;
  int nn = static_cast<int>(n);
  for (int i = 0; i < nn; ++i) {
    edges.emplace_back(i, (i + 1) % nn);
    edges.emplace_back(nn + i, nn + (i + 1) % nn);
    edges.emplace_back(i, nn + i);
  }
  return Graph(2 * nn, std::move(edges));
}

Graph petersen2_graph(long long n) {
  if (n < 5) throw input_error("petersen2 requires n >= 5");
  checked_vertex_count(2 * n);
  std::vector<std::pair<int, int>> edges;
  int nn = static_cast<int>(n);
  for (int i = 0; i < nn; ++i) {
    edges.emplace_back(i, (i + 1) % nn);
    edges.emplace_back(i, nn + i);
    edges.emplace_back(nn + i, nn + (i + 2) % nn);
  }
  return Graph(2 * nn, std::move(edges));
}

void require_params(const FamilySpec& spec, std::size_t count,
                    const char* what) {
  if (spec.params.size() != count)
    throw input_error(std::string(what) + ": wrong number of parameters");
}

std::vector<long long> parse_numbers(const std::string& text, char sep) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, sep)) {
    if (piece.empty()) throw input_error("empty numeric field in spec");
    out.push_back(std::stoll(piece));
  }
  return out;
}

// Splits "(...),(...)" into the two balanced child spec strings.
std::vector<std::string> split_children(const std::string& text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(') {
      if (depth++ > 0) current.push_back(c);
    } else if (c == ')') {
      if (--depth > 0)
        current.push_back(c);
      else if (depth == 0) {
        parts.push_back(current);
        current.clear();
      }
      if (depth < 0) throw input_error("unbalanced parentheses in spec");
    } else if (depth == 0) {
      if (c != ',') throw input_error("malformed composite spec");
    } else {
      current.push_back(c);
    }
  }
  if (depth != 0) throw input_error("unbalanced parentheses in spec");
  return parts;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  auto paren = text.find('(');
  auto colon = text.find(':');
  if (paren != std::string::npos && (colon == std::string::npos || paren < colon)) {
    std::string head = text.substr(0, paren);
    auto children = split_children(text.substr(paren));
    if (children.size() != 2)
      throw input_error("composite spec needs exactly two children");
    FamilySpec spec;
    if (head == "join")
      spec.kind = FamilyKind::join;
    else if (head == "union")
      spec.kind = FamilyKind::disjoint_union;
    else
      throw input_error("unknown composite family: " + head);
    spec.children.push_back(parse(children[0]));
    spec.children.push_back(parse(children[1]));
    return spec;
  }
  if (colon == std::string::npos)
    throw input_error("family spec must look like kind:params");
  std::string head = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  FamilySpec spec;
  if (head == "path") {
    spec.kind = FamilyKind::path;
    spec.params = parse_numbers(rest, ',');
  } else if (head == "cycle") {
    spec.kind = FamilyKind::cycle;
    spec.params = parse_numbers(rest, ',');
  } else if (head == "complete") {
    spec.kind = FamilyKind::complete;
    spec.params = parse_numbers(rest, ',');
  } else if (head == "kst") {
    spec.kind = FamilyKind::complete_bipartite;
    spec.params = parse_numbers(rest, ',');
  } else if (head == "grid") {
    spec.kind = FamilyKind::grid;
    spec.params = parse_numbers(rest, 'x');
  } else if (head == "fan") {
    spec.kind = FamilyKind::fan;
    spec.params = parse_numbers(rest, ',');
  } else if (head == "wheel") {
    spec.kind = FamilyKind::wheel;
    spec.params = parse_numbers(rest, ',');
  } else if (head == "hypercube") {
    spec.kind = FamilyKind::hypercube;
    spec.params = parse_numbers(rest, ',');
  } else if (head == "hamming") {
    spec.kind = FamilyKind::hamming;
    long long k = -1, a = -1;
    std::stringstream ss(rest);
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw input_error("hamming spec needs k=..,a=..");
      std::string key = kv.substr(0, eq);
      long long value = std::stoll(kv.substr(eq + 1));
      if (key == "k")
        k = value;
      else if (key == "a")
        a = value;
      else
        throw input_error("unknown hamming parameter: " + key);
    }
    spec.params = {k, a};
  } else if (head == "honeycomb") {
    spec.kind = FamilyKind::honeycomb;
    spec.params = parse_numbers(rest, ',');
  } else if (head == "hexagon") {
    spec.kind = FamilyKind::hexagon;
    spec.params = parse_numbers(rest, ',');
  } else if (head == "prism") {
    spec.kind = FamilyKind::prism;
    spec.params = parse_numbers(rest, ',');
  } else if (head == "petersen2") {
    spec.kind = FamilyKind::petersen2;
    spec.params = parse_numbers(rest, ',');
  } else if (head == "empty") {
    spec.kind = FamilyKind::empty;
    spec.params = parse_numbers(rest, ',');
  } else {
    throw input_error("unknown family kind: " + head);
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  auto joined = [&](char sep) {
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s.push_back(sep);
      s += std::to_string(params[i]);
    }
    return s;
  };
  switch (kind) {
    case FamilyKind::path: return "path:" + joined(',');
    case FamilyKind::cycle: return "cycle:" + joined(',');
    case FamilyKind::complete: return "complete:" + joined(',');
    case FamilyKind::complete_bipartite: return "kst:" + joined(',');
    case FamilyKind::grid: return "grid:" + joined('x');
    case FamilyKind::fan: return "fan:" + joined(',');
    case FamilyKind::wheel: return "wheel:" + joined(',');
    case FamilyKind::hypercube: return "hypercube:" + joined(',');
    case FamilyKind::hamming:
      return "hamming:k=" + std::to_string(params[0]) +
             ",a=" + std::to_string(params[1]);
    case FamilyKind::honeycomb: return "honeycomb:" + joined(',');
    case FamilyKind::hexagon: return "hexagon:" + joined(',');
    case FamilyKind::prism: return "prism:" + joined(',');
    case FamilyKind::petersen2: return "petersen2:" + joined(',');
    case FamilyKind::empty: return "empty:" + joined(',');
    case FamilyKind::join:
      return "join((" + children[0].to_string() + "),(" +
             children[1].to_string() + "))";
    case FamilyKind::disjoint_union:
      return "union((" + children[0].to_string() + "),(" +
             children[1].to_string() + "))";
  }
  throw std::logic_error("unreachable");
}

Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::path:
      require_params(spec, 1, "path");
      return path_graph(spec.params[0]);
    case FamilyKind::cycle:
      require_params(spec, 1, "cycle");
      return cycle_graph(spec.params[0]);
    case FamilyKind::complete:
      require_params(spec, 1, "complete");
      return complete_graph(spec.params[0]);
    case FamilyKind::complete_bipartite:
      require_params(spec, 2, "kst");
      return complete_bipartite(spec.params[0], spec.params[1]);
    case FamilyKind::grid:
      return grid_graph(spec.params);
    case FamilyKind::fan:
      require_params(spec, 1, "fan");
      return fan_graph(spec.params[0]);
    case FamilyKind::wheel:
      require_params(spec, 1, "wheel");
      return wheel_graph(spec.params[0]);
    case FamilyKind::hypercube:
      require_params(spec, 1, "hypercube");
      return hamming_graph(spec.params[0], 2);
    case FamilyKind::hamming:
      require_params(spec, 2, "hamming");
      return hamming_graph(spec.params[0], spec.params[1]);
    case FamilyKind::honeycomb:
      require_params(spec, 1, "honeycomb");
      return honeycomb_graph(spec.params[0]);
    case FamilyKind::hexagon:
      require_params(spec, 1, "hexagon");
      return hexagon_graph(spec.params[0]);
    case FamilyKind::prism:
      require_params(spec, 1, "prism");
      return prism_graph(spec.params[0]);
    case FamilyKind::petersen2:
      require_params(spec, 1, "petersen2");
      return petersen2_graph(spec.params[0]);
    case FamilyKind::empty:
      require_params(spec, 1, "empty");
      return empty_graph(spec.params[0]);
    case FamilyKind::join:
      return join_graphs(generate(spec.children.at(0)),
                         generate(spec.children.at(1)));
    case FamilyKind::disjoint_union:
      return disjoint_union(generate(spec.children.at(0)),
                            generate(spec.children.at(1)));
  }
  throw std::logic_error("unreachable");
}

Graph join_graphs(const Graph& g1, const Graph& g2) {
  Graph base = disjoint_union(g1, g2);
  std::vector<std::pair<int, int>> edges = base.edges();
  for (int u = 0; u < g1.vertex_count(); ++u)
    for (int v = 0; v < g2.vertex_count(); ++v)
      edges.emplace_back(u, g1.vertex_count() + v);
  return Graph(base.vertex_count(), std::move(edges));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<std::pair<int, int>> edges = g1.edges();
  int offset = g1.vertex_count();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph(offset + g2.vertex_count(), std::move(edges));
}

std::vector<std::array<int, 3>> hexagon_lattice(long long n) {
  // Triples summing to zero with max coordinate magnitude n-1.
  int r = static_cast<int>(n) - 1;
  std::vector<std::array<int, 3>> points;
  for (int x = -r; x <= r; ++x)
    for (int y = std::max(-r, -x - r); y <= std::min(r, -x + r); ++y)
      points.push_back({x, y, -x - y});
  std::sort(points.begin(), points.end());
  return points;
}

std::vector<int> hamming_digits(long long v, int k, int a) {
  std::vector<int> digits(k);
  for (int i = 0; i < k; ++i) {
    digits[i] = static_cast<int>(v % a);
    v /= a;
  }
  return digits;
}

long long hamming_vertex(const std::vector<int>& digits, int a) {
  long long v = 0;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i)
    v = v * a + digits[i];
  return v;
}

int grid_vertex(const std::vector<long long>& dims,
                const std::vector<long long>& coords) {
  if (dims.size() != coords.size())
    throw input_error("grid coordinate arity mismatch");
  long long v = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= dims[i])
      throw input_error("grid coordinate out of range");
    v = v * dims[i] + coords[i];
  }
  return static_cast<int>(v);
}

}  // namespace mdim
