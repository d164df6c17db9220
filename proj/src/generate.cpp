#include "generate.hpp"

#include <algorithm>
#include <set>

#include "graph.hpp"

namespace medrec {

namespace detail {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) {
    throw Error(ErrorCode::InvalidArgument, "uniform_below(0)");
  }
  const std::uint64_t threshold = (-n) % n;  // 2^64 mod n
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

}  // namespace detail

namespace {

std::string bit_label(int mask, int width) {
  if (width == 0) return "0";
  std::string s(width, '0');
  for (int j = 0; j < width; ++j) {
    if (mask & (1 << j)) s[width - 1 - j] = '1';
  }
  return s;
}

int parse_int(const std::string& text, const std::string& what) {
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "expected an integer for " + what + ", got '" + text + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

Graph hypercube(int n) {
  if (n < 0 || n > 12) {
    throw Error(ErrorCode::InvalidArgument,
                "hypercube dimension must be between 0 and 12");
  }
  const int total = 1 << n;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  labels.reserve(total);
  for (int m = 0; m < total; ++m) {
    labels.push_back(bit_label(m, n));
    for (int j = 0; j < n; ++j) {
      if (!(m & (1 << j))) edges.emplace_back(m, m | (1 << j));
    }
  }
  return Graph(total, std::move(edges), std::move(labels));
}

Graph grid(const std::vector<int>& dims) {
  if (dims.empty()) {
    throw Error(ErrorCode::InvalidArgument, "grid needs at least one side");
  }
  long long total = 1;
  for (int d : dims) {
    if (d < 1) {
      throw Error(ErrorCode::InvalidArgument, "grid sides must be >= 1");
    }
    total *= d;
    if (total > (1 << 20)) {
      throw Error(ErrorCode::InvalidArgument, "grid is too large");
    }
  }
  const int n = static_cast<int>(total);
  const int k = static_cast<int>(dims.size());
  std::vector<int> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<int> coord(k, 0);
  for (int v = 0; v < n; ++v) {
    std::string label;
    for (int i = 0; i < k; ++i) {
      if (i) label += '_';
      label += std::to_string(coord[i]);
      if (coord[i] + 1 < dims[i]) edges.emplace_back(v, v + stride[i]);
    }
    labels.push_back(std::move(label));
    for (int i = k - 1; i >= 0; --i) {
      if (++coord[i] < dims[i]) break;
      coord[i] = 0;
    }
  }
  return Graph(n, std::move(edges), std::move(labels));
}

Graph tree_from_pruefer(int n, const std::vector<int>& code) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "tree size must be >= 1");
  }
  if (static_cast<int>(code.size()) != std::max(n - 2, 0)) {
    throw Error(ErrorCode::InvalidArgument,
                "Pruefer code for " + std::to_string(n) +
                    " vertices must have length " + std::to_string(n - 2));
  }
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::vector<int> degree(n, 1);
  for (int s : code) {
    if (s < 0 || s >= n) {
      throw Error(ErrorCode::InvalidArgument, "Pruefer entry out of range");
    }
    ++degree[s];
  }
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int s : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1) leaves.insert(s);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1 || n > 100000) {
    throw Error(ErrorCode::InvalidArgument,
                "tree size must be between 1 and 100000");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> code(std::max(n - 2, 0));
  for (int& s : code) {
    s = static_cast<int>(detail::uniform_below(rng, n));
  }
  return tree_from_pruefer(n, code);
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  const int nb = b.vertex_count();
  if (static_cast<long long>(na) * nb > (1 << 20)) {
    throw Error(ErrorCode::InvalidArgument, "product is too large");
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < na; ++u) {
    for (const auto& [x, y] : b.edges()) {
      edges.emplace_back(u * nb + x, u * nb + y);
    }
  }
  for (const auto& [x, y] : a.edges()) {
    for (int v = 0; v < nb; ++v) {
      edges.emplace_back(x * nb + v, y * nb + v);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(na) * nb);
  for (int u = 0; u < na; ++u) {
    for (int v = 0; v < nb; ++v) {
      labels.push_back(a.label(u) + "|" + b.label(v));
    }
  }
  return Graph(na * nb, std::move(edges), std::move(labels));
}

Graph median_closure(int d, int k, std::uint64_t seed) {
  if (d < 1 || d > 10) {
    throw Error(ErrorCode::InvalidArgument,
                "median closure dimension must be between 1 and 10");
  }
  if (k < 1 || k > (1 << d)) {
    throw Error(ErrorCode::InvalidArgument,
                "median closure sample size must be between 1 and 2^d");
  }
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::mt19937_64 rng(seed + attempt);
    std::set<int> picked;
    while (static_cast<int>(picked.size()) < k) {
      picked.insert(static_cast<int>(detail::uniform_below(rng, 1u << d)));
    }
    // Close under coordinatewise majority. Processing each new element
    // against all pairs present at that moment covers every triple once its
    // last member is processed.
    std::vector<int> elems(picked.begin(), picked.end());
    std::set<int> in(picked);
    for (size_t zi = 0; zi < elems.size(); ++zi) {
      int z = elems[zi];
      for (size_t xi = 0; xi <= zi; ++xi) {
        for (size_t yi = xi; yi <= zi; ++yi) {
          int x = elems[xi], y = elems[yi];
          int m = (x & y) | (x & z) | (y & z);
          if (in.insert(m).second) elems.push_back(m);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    std::vector<int> index(size_t{1} << d, -1);
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    for (size_t i = 0; i < elems.size(); ++i) {
      labels.push_back(bit_label(elems[i], d));
      for (int j = 0; j < d; ++j) {
        int other = elems[i] ^ (1 << j);
        if (other > elems[i] && index[other] >= 0) {
          edges.emplace_back(static_cast<int>(i), index[other]);
        }
      }
    }
    try {
      Graph g(static_cast<int>(elems.size()), std::move(edges),
              std::move(labels));
      // Majority-closed subsets of a hypercube induce median graphs once
      // connected; spot-check with the oracle at sizes it can afford.
      if (g.vertex_count() <= 128 && !check_median(g).is_median) {
        throw Error(ErrorCode::Internal, "median closure failed the oracle");
      }
      return g;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidGraph) throw;  // disconnected: retry
    }
  }
  throw Error(ErrorCode::InvalidArgument,
              "median closure stayed disconnected after 16 attempts; "
              "try a larger sample");
}

Q3MinusPair q3_minus() {
  std::vector<std::string> labels = {"v0", "v1", "v2", "v3", "v4", "v5", "v6"};
  std::vector<std::pair<int, int>> cycle = {{1, 2}, {2, 3}, {3, 4},
                                            {4, 5}, {5, 6}, {6, 1}};
  auto with_hub = [&](std::initializer_list<int> hub) {
    auto edges = cycle;
    for (int v : hub) edges.emplace_back(0, v);
    return Graph(7, std::move(edges), labels);
  };
  return {with_hub({1, 3, 5}), with_hub({2, 4, 6}),
          {"v1", "v2", "v3", "v4", "v5", "v6"}};
}

Graph generate(const GenSpec& spec) {
  const std::string& family = spec.family;
  const std::string& params = spec.params;
  if (family == "hypercube") {
    return hypercube(parse_int(params, "hypercube dimension"));
  }
  if (family == "grid") {
    std::string p = params;
    std::replace(p.begin(), p.end(), ',', 'x');  // 3,3 and 3x3 both work
    std::vector<int> dims;
    for (const auto& part : split(p, 'x')) {
      dims.push_back(parse_int(part, "grid side"));
    }
    return grid(dims);
  }
  if (family == "tree") {
    return random_tree(parse_int(params, "tree size"), spec.seed);
  }
  if (family == "product") {
    auto parts = split(params, '+');
    if (parts.size() != 2) {
      throw Error(ErrorCode::InvalidArgument,
                  "product parameters must look like tree:6+path:3");
    }
    std::uint64_t sub_seed = spec.seed;
    auto build = [&](const std::string& part) {
      auto colon = part.find(':');
      if (colon == std::string::npos) {
        throw Error(ErrorCode::InvalidArgument,
                    "product factor '" + part + "' needs a family:size form");
      }
      std::string fam = part.substr(0, colon);
      std::string rest = part.substr(colon + 1);
      Graph g = [&]() {
        if (fam == "tree") return random_tree(parse_int(rest, "tree size"), sub_seed);
        if (fam == "path") return grid({parse_int(rest, "path length")});
        if (fam == "hypercube") return hypercube(parse_int(rest, "hypercube dimension"));
        if (fam == "grid") {
          std::string sides = rest;
          std::replace(sides.begin(), sides.end(), ',', 'x');
          std::vector<int> dims;
          for (const auto& side : split(sides, 'x')) {
            dims.push_back(parse_int(side, "grid side"));
          }
          return grid(dims);
        }
        throw Error(ErrorCode::InvalidArgument,
                    "unknown product factor family '" + fam + "'");
      }();
      ++sub_seed;
      return g;
    };
    Graph a = build(parts[0]);
    Graph b = build(parts[1]);
    return cartesian_product(a, b);
  }
  if (family == "median_closure") {
    auto parts = split(params, ',');
    if (parts.size() != 2) {
      throw Error(ErrorCode::InvalidArgument,
                  "median_closure parameters must look like 6,8");
    }
    return median_closure(parse_int(parts[0], "dimension"),
                          parse_int(parts[1], "sample size"), spec.seed);
  }
  if (family == "q3_minus") {
    auto pair = q3_minus();
    int which = params.empty() ? 0 : parse_int(params, "variant");
    if (which == 0) return pair.g_odd;
    if (which == 1) return pair.g_even;
    throw Error(ErrorCode::InvalidArgument, "q3_minus variant must be 0 or 1");
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
}

}  // namespace medrec
