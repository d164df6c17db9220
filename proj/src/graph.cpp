#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace medrec {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::MalformedMatrix: return "MalformedMatrix";
    case ErrorCode::AmbiguousCompletion: return "AmbiguousCompletion";
    case ErrorCode::IsolatedNonBase: return "IsolatedNonBase";
    case ErrorCode::NotMedian: return "NotMedian";
    case ErrorCode::NoGate: return "NoGate";
    case ErrorCode::NotInCube: return "NotInCube";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::Verification: return "Verification";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels) {
  if (n <= 0) {
    throw Error(ErrorCode::InvalidGraph, "graph must have at least one vertex");
  }
  adj_.assign(n, {});
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::InvalidGraph,
                  "edge endpoint out of range: (" + std::to_string(u) + "," +
                      std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) {
      throw Error(ErrorCode::InvalidGraph,
                  "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorCode::InvalidGraph, "duplicate edge in edge list");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

  // Connectivity is a construction invariant: everything downstream
  // (BFS layers, gates, peelings) assumes a single component.
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::InvalidGraph, "graph is disconnected (" +
                                             std::to_string(reached) + " of " +
                                             std::to_string(n) +
                                             " vertices reachable from 0)");
  }

  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n) {
      throw Error(ErrorCode::InvalidGraph,
                  "label table size does not match vertex count");
    }
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::InvalidGraph, "labels must be distinct");
    }
    for (const auto& s : labels) {
      if (s.empty() || s.find_first_of(",\r\n") != std::string::npos) {
        throw Error(ErrorCode::InvalidGraph,
                    "labels must be nonempty and free of commas/newlines");
      }
    }
    labels_ = std::move(labels);
  }
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex id out of range: " + std::to_string(v));
  }
  return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
  const auto& nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::string Graph::label(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex id out of range: " + std::to_string(v));
  }
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<int> Graph::vertex_by_label(const std::string& label) const {
  if (labels_.empty()) {
    // Implicit decimal labels.
    if (label.empty() ||
        label.find_first_not_of("0123456789") != std::string::npos) {
      return std::nullopt;
    }
    try {
      int v = std::stoi(label);
      if (v >= 0 && v < vertex_count()) return v;
    } catch (const std::exception&) {
    }
    return std::nullopt;
  }
  for (int v = 0; v < vertex_count(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels,
                               std::vector<std::vector<int>> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const int n = static_cast<int>(labels_.size());
  if (n == 0) {
    throw Error(ErrorCode::MalformedMatrix, "matrix must have at least one label");
  }
  {
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::MalformedMatrix, "duplicate label in matrix header");
    }
  }
  if (static_cast<int>(entries_.size()) != n) {
    throw Error(ErrorCode::MalformedMatrix,
                "matrix row count does not match label count");
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries_[i].size()) != n) {
      throw Error(ErrorCode::MalformedMatrix,
                  "matrix row " + std::to_string(i) + " has wrong length");
    }
    if (entries_[i][i] != 0) {
      throw Error(ErrorCode::MalformedMatrix,
                  "nonzero diagonal entry at " + labels_[i]);
    }
    for (int j = 0; j < n; ++j) {
      if (entries_[i][j] < 0) {
        throw Error(ErrorCode::MalformedMatrix,
                    "negative entry at (" + labels_[i] + "," + labels_[j] + ")");
      }
      if (i != j && entries_[i][j] == 0) {
        throw Error(ErrorCode::MalformedMatrix,
                    "zero distance between distinct labels " + labels_[i] +
                        " and " + labels_[j]);
      }
      if (entries_[i][j] != entries_[j][i]) {
        throw Error(ErrorCode::MalformedMatrix,
                    "asymmetric entries at (" + labels_[i] + "," + labels_[j] + ")");
      }
    }
  }
}

std::optional<int> DistanceMatrix::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

void DistanceMatrix::validate_metric() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (entries_[i][j] > entries_[i][k] + entries_[k][j]) {
          throw Error(ErrorCode::MalformedMatrix,
                      "triangle inequality violated: d(" + labels_[i] + "," +
                          labels_[j] + ") > d(" + labels_[i] + "," + labels_[k] +
                          ") + d(" + labels_[k] + "," + labels_[j] + ")");
        }
      }
    }
  }
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace

DistanceMatrix DistanceMatrix::from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> entries;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (!have_header) {
      labels = fields;
      have_header = true;
      continue;
    }
    std::vector<int> row;
    row.reserve(fields.size());
    for (const auto& f : fields) {
      if (f.empty() || f.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::MalformedMatrix,
                    "matrix entry is not a nonnegative integer: '" + f + "'");
      }
      try {
        row.push_back(std::stoi(f));
      } catch (const std::exception&) {
        throw Error(ErrorCode::MalformedMatrix, "matrix entry out of range: '" + f + "'");
      }
    }
    entries.push_back(std::move(row));
  }
  if (!have_header) {
    throw Error(ErrorCode::MalformedMatrix, "empty distance matrix input");
  }
  DistanceMatrix m(std::move(labels), std::move(entries));
  m.validate_metric();
  return m;
}

std::string DistanceMatrix::to_csv() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (i) out << ',';
    out << labels_[i];
  }
  out << '\n';
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (j) out << ',';
      out << entries_[i][j];
    }
    out << '\n';
  }
  return out.str();
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n) {
    throw Error(ErrorCode::InvalidArgument,
                "BFS source out of range: " + std::to_string(source));
  }
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

std::vector<int> interval(const Graph& g, int u, int v) {
  auto du = bfs_distances(g, u);
  auto dv = bfs_distances(g, v);
  std::vector<int> out;
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (du[x] + dv[x] == du[v]) out.push_back(x);
  }
  return out;
}

namespace {

// Fixed-width bitset over n vertices used by the median triple scan.
class VertexBits {
 public:
  explicit VertexBits(int n) : words_((n + 63) / 64, 0) {}
  void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  static int and3_popcount(const VertexBits& a, const VertexBits& b,
                           const VertexBits& c) {
    int count = 0;
    for (size_t w = 0; w < a.words_.size(); ++w) {
      count += __builtin_popcountll(a.words_[w] & b.words_[w] & c.words_[w]);
    }
    return count;
  }

 private:
  std::vector<uint64_t> words_;
};

}  // namespace

MedianCheck check_median(const Graph& g) {
  const int n = g.vertex_count();
  auto dist = all_pairs_distances(g);

  MedianCheck result;
  // Two-coloring by BFS parity; an edge within a layer breaks it.
  result.is_bipartite = true;
  for (const auto& [u, v] : g.edges()) {
    if (dist[0][u] == dist[0][v]) {
      result.is_bipartite = false;
      break;
    }
  }

  // Interval membership bitsets for every unordered pair.
  std::vector<VertexBits> ivals(static_cast<size_t>(n) * n, VertexBits(n));
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      VertexBits bits(n);
      for (int x = 0; x < n; ++x) {
        if (dist[u][x] + dist[x][v] == dist[u][v]) bits.set(x);
      }
      ivals[static_cast<size_t>(u) * n + v] = bits;
      ivals[static_cast<size_t>(v) * n + u] = bits;
    }
  }

  result.is_median = true;
  for (int x = 0; x < n && result.is_median; ++x) {
    for (int y = x; y < n && result.is_median; ++y) {
      for (int z = y; z < n; ++z) {
        int m = VertexBits::and3_popcount(ivals[static_cast<size_t>(x) * n + y],
                                          ivals[static_cast<size_t>(y) * n + z],
                                          ivals[static_cast<size_t>(x) * n + z]);
        if (m != 1) {
          result.is_median = false;
          result.witness = std::array<int, 3>{x, y, z};
          result.witness_intersection_size = m;
          break;
        }
      }
    }
  }
  return result;
}

int gate(const Graph& g, int x, const std::vector<int>& h) {
  if (h.empty()) {
    throw Error(ErrorCode::InvalidArgument, "gate of an empty vertex set");
  }
  auto dx = bfs_distances(g, x);
  for (int cand : h) {
    auto dc = bfs_distances(g, cand);
    bool ok = true;
    for (int y : h) {
      if (dx[cand] + dc[y] != dx[y]) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  throw Error(ErrorCode::NoGate, "no gate: vertex set is not gated from " +
                                     std::to_string(x));
}

}  // namespace medrec
