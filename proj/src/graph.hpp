// Graph and DistanceMatrix types plus the basic metric operations
// (BFS, intervals, median check, gates) everything else is built on.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace medrec {

// Simple connected undirected graph with dense vertex ids 0..n-1.
// External string labels, when present, live in a side table; all
// algorithms work on ids and translate at the I/O boundary.
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges,
        std::vector<std::string> labels = {});

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;
  // Edges as sorted pairs (u < v), ascending.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& raw_labels() const { return labels_; }
  // Label of v: the external label if provided, otherwise the decimal id.
  std::string label(int v) const;
  std::optional<int> vertex_by_label(const std::string& label) const;

  // Optional annotation filled by the boundary module; not part of the
  // structural identity of the graph and not serialized.
  const std::optional<std::vector<int>>& boundary_labels() const {
    return boundary_labels_;
  }
  void set_boundary_labels(std::vector<int> vertices) {
    boundary_labels_ = std::move(vertices);
  }

 private:
  std::vector<std::vector<int>> adj_;          // sorted neighbor lists
  std::vector<std::pair<int, int>> edges_;     // canonical edge list
  std::vector<std::string> labels_;            // empty when unlabeled
  std::optional<std::vector<int>> boundary_labels_;
};

// Symmetric integer distance matrix keyed by external labels.
class DistanceMatrix {
 public:
  // Checks shape, symmetry, zero diagonal, positive off-diagonal entries and
  // distinct labels. Triangle inequality is checked by validate_metric(),
  // which from_csv and the reconstruction entry point always run.
  DistanceMatrix(std::vector<std::string> labels,
                 std::vector<std::vector<int>> entries);

  int size() const { return static_cast<int>(labels_.size()); }
  int at(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;

  // Throws MalformedMatrix on a triangle-inequality violation.
  void validate_metric() const;

  static DistanceMatrix from_csv(const std::string& text);
  std::string to_csv() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> entries_;
};

// Single-source BFS distances; every vertex reachable (graphs are connected).
std::vector<int> bfs_distances(const Graph& g, int source);

// All-pairs distances via n BFS runs.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

// Interval I(u,v) = vertices on shortest u-v paths, ascending ids.
std::vector<int> interval(const Graph& g, int u, int v);

// Result of the brute-force median check. A graph is median when every
// triple of vertices has exactly one vertex lying simultaneously on
// shortest paths between all three pairs.
struct MedianCheck {
  bool is_median = false;
  bool is_bipartite = false;
  // Witness triple with intersection_size != 1 when not median.
  std::optional<std::array<int, 3>> witness;
  int witness_intersection_size = 0;
};

// O(n^3) triple scan over precomputed interval bitsets; this is the
// ground-truth oracle the rest of the test suite leans on.
MedianCheck check_median(const Graph& g);

// Gate of x in the vertex set h: the unique member of h lying on a shortest
// path from x to every member of h. Throws NoGate when none exists.
int gate(const Graph& g, int x, const std::vector<int>& h);

}  // namespace medrec
