// Reconstruction of a median graph from the distance matrix of its boundary
// vertices. Repeatedly peels the active vertex farthest from the basepoint,
// completes the cube spanned by its active neighborhood via the quadrangle
// condition, and either finds the opposite corner among the active vertices
// or creates it fresh, deriving its distance row as
//   d(x, u) = max{ d(x, w) : w a neighbor of u in the cube } - 1.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace medrec {

// One peeling step, mirrored verbatim into the JSONL trace.
struct StepRecord {
  int step = 0;                                   // 1-based
  std::string v;                                  // peeled vertex
  std::vector<std::string> L;                     // active neighbors of v
  std::vector<std::vector<std::string>> cube_levels;  // level 0 = {v}
  std::vector<std::string> N;                     // cube neighbors of u
  std::optional<std::string> u;                   // absent only on terminal
  bool u_new = false;
  bool terminal = false;
};

struct CompletionResult {
  int dim = 0;
  std::vector<std::vector<int>> levels;  // label indices, level 0 = {v}
  std::vector<int> N;                    // label indices
  std::optional<int> u;                  // nullopt: u is not an active label
};

class ReconstructionState {
 public:
  // Validates the matrix (including the triangle inequality) and builds the
  // initial graph Gamma from its distance-1 pairs. The basepoint defaults to
  // the first label. Throws MalformedMatrix / InvalidArgument.
  ReconstructionState(const DistanceMatrix& matrix,
                      const std::optional<std::string>& basepoint = std::nullopt);

  const std::string& basepoint() const { return labels_[z_]; }
  // Active vertex maximizing distance to the basepoint; ties break toward
  // the earliest-created label. Returns the basepoint exactly when it is the
  // only active vertex left.
  int pick_corner() const;
  bool done() const { return pick_corner() == z_; }

  // Cube completion for the active vertex v (see module comment). Throws
  // AmbiguousCompletion when any level candidate is missing, repeated, or
  // differs between derivation routes.
  CompletionResult complete_cube(int v) const;

  // max over N of D[x][.] minus 1.
  int distance_to_new_vertex(const std::vector<int>& N, int x) const;

  // One peel. The potential sum of active distances to the basepoint
  // strictly decreases, which bounds the number of steps.
  void step();

  // Runs to termination and returns Gamma with its label table.
  Graph run();

  const std::vector<StepRecord>& trace() const { return trace_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  bool active(int i) const { return active_[i] != 0; }
  std::vector<std::string> active_labels() const;
  int distance(int i, int j) const { return D_[i][j]; }  // -1 when never defined
  int label_count() const { return static_cast<int>(labels_.size()); }
  int initial_count() const { return initial_count_; }
  Graph gamma() const;

 private:
  int find_or_create(const CompletionResult& c, int v);

  std::vector<std::string> labels_;      // creation order: inputs, then aux
  std::vector<std::vector<int>> D_;      // grows with aux rows; -1 = undefined
  std::vector<char> active_;
  std::vector<std::vector<int>> adj_;    // Gamma, by label index
  int z_ = 0;
  int initial_count_ = 0;
  int aux_counter_ = 0;
  int steps_ = 0;
  std::vector<StepRecord> trace_;
};

// Convenience wrapper: reconstruct from a matrix, optionally collecting the
// step trace into *trace_out.
Graph reconstruct(const DistanceMatrix& matrix,
                  const std::optional<std::string>& basepoint = std::nullopt,
                  std::vector<StepRecord>* trace_out = nullptr);

}  // namespace medrec
