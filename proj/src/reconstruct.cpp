#include "reconstruct.hpp"

#include <algorithm>
#include <cassert>

namespace medrec {

namespace {

std::string aux_label(int counter) { return "aux:" + std::to_string(counter); }

// Returns k when `label` is "aux:<k>", else -1; used to keep fresh labels
// collision-free even if the input already carries aux-style names.
int parse_aux(const std::string& label) {
  if (label.rfind("aux:", 0) != 0) return -1;
  std::string tail = label.substr(4);
  if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) {
    return -1;
  }
  try {
    return std::stoi(tail);
  } catch (const std::exception&) {
    return -1;
  }
}

}  // namespace

ReconstructionState::ReconstructionState(
    const DistanceMatrix& matrix, const std::optional<std::string>& basepoint) {
  matrix.validate_metric();
  labels_ = matrix.labels();
  D_ = matrix.entries();
  initial_count_ = static_cast<int>(labels_.size());
  active_.assign(labels_.size(), 1);
  adj_.assign(labels_.size(), {});
  for (int i = 0; i < initial_count_; ++i) {
    aux_counter_ = std::max(aux_counter_, parse_aux(labels_[i]) + 1);
    for (int j = i + 1; j < initial_count_; ++j) {
      if (D_[i][j] == 1) {
        adj_[i].push_back(j);
        adj_[j].push_back(i);
      }
    }
  }
  if (basepoint) {
    auto idx = matrix.index_of(*basepoint);
    if (!idx) {
      throw Error(ErrorCode::InvalidArgument,
                  "basepoint label '" + *basepoint + "' is not in the matrix");
    }
    z_ = *idx;
  } else {
    z_ = 0;
  }
}

int ReconstructionState::pick_corner() const {
  int best = -1;
  for (int i = 0; i < label_count(); ++i) {
    if (!active_[i]) continue;
    if (best < 0 || D_[z_][i] > D_[z_][best]) best = i;
  }
  if (best < 0) {
    throw Error(ErrorCode::Internal, "no active vertices left");
  }
  return best;
}

CompletionResult ReconstructionState::complete_cube(int v) const {
  if (v < 0 || v >= label_count() || !active_[v]) {
    throw Error(ErrorCode::InvalidArgument, "complete_cube on inactive vertex");
  }
  CompletionResult res;
  std::vector<int> L;
  for (int w = 0; w < label_count(); ++w) {
    if (w != v && active_[w] && D_[v][w] == 1) L.push_back(w);
  }
  const int k = static_cast<int>(L.size());

  if (k == 0) {
    if (v == z_) {
      throw Error(ErrorCode::IsolatedNonBase,
                  "basepoint has no active neighbors but peeling continues");
    }
    // Pendant resolution: v is a leaf whose unique support vertex is not
    // among the active labels.
    res.dim = 1;
    res.levels = {{v}};
    res.N = {v};
    res.u = std::nullopt;
    return res;
  }
  if (k == 1) {
    res.dim = 1;
    res.levels = {{v}, {L[0]}};
    res.N = {v};
    res.u = L[0];
    return res;
  }

  if (k > 20) {
    throw Error(ErrorCode::InvalidArgument,
                "cube completion limit: vertex " + labels_[v] + " has " +
                    std::to_string(k) + " active neighbors");
  }

  const int dzv = D_[z_][v];
  const int full = (1 << k) - 1;
  std::vector<int> down(size_t{1} << k, -1);
  std::vector<char> used(label_count(), 0);
  down[0] = v;
  used[v] = 1;
  for (int j = 0; j < k; ++j) {
    down[1 << j] = L[j];
    used[L[j]] = 1;
  }

  // Active labels bucketed by distance to the basepoint, so candidate scans
  // only touch the relevant layer.
  std::vector<std::vector<int>> layer;
  for (int w = 0; w < label_count(); ++w) {
    if (!active_[w]) continue;
    int d = D_[z_][w];
    if (d >= static_cast<int>(layer.size())) layer.resize(d + 1);
    layer[d].push_back(w);
  }

  auto ambiguous = [&](const std::string& what) -> Error {
    return Error(ErrorCode::AmbiguousCompletion,
                 "cube completion at " + labels_[v] + ": " + what);
  };

  for (int level = 2; level <= k; ++level) {
    int target = dzv - level;
    const std::vector<int>* bucket =
        (target >= 0 && target < static_cast<int>(layer.size())) ? &layer[target]
                                                                 : nullptr;
    for (int m = 1; m <= full; ++m) {
      if (__builtin_popcount(m) != level) continue;
      // Derive the corner through every pair of its facet subsets; the
      // quadrangle condition says each route has a unique answer and all
      // routes agree. Disagreement means the matrix is not median data.
      int agreed = -2;  // -2: no route processed yet, -1: routes saw nothing
      for (int i = 0; i < k; ++i) {
        if (!(m & (1 << i))) continue;
        for (int j = i + 1; j < k; ++j) {
          if (!(m & (1 << j))) continue;
          int p0 = down[m ^ (1 << i)];
          int p1 = down[m ^ (1 << j)];
          if (D_[p0][p1] != 2) {
            throw ambiguous("level-" + std::to_string(level - 1) + " corners " +
                            labels_[p0] + " and " + labels_[p1] +
                            " are not at distance 2");
          }
          int found = -1;
          if (bucket) {
            for (int w : *bucket) {
              if (D_[w][p0] != 1 || D_[w][p1] != 1 || D_[w][v] != level) continue;
              if (found >= 0) {
                throw ambiguous("multiple level-" + std::to_string(level) +
                                " candidates adjacent to " + labels_[p0] +
                                " and " + labels_[p1]);
              }
              found = w;
            }
          }
          if (agreed == -2) {
            agreed = found;
          } else if (agreed != found) {
            throw ambiguous("derivation routes disagree at level " +
                            std::to_string(level));
          }
        }
      }
      if (agreed < 0) {
        if (level < k) {
          throw ambiguous("no level-" + std::to_string(level) +
                          " candidate below the top corner");
        }
        // Top corner absent from the active set: u is a new vertex.
        break;
      }
      if (used[agreed]) {
        throw ambiguous("corner " + labels_[agreed] + " repeats inside one cube");
      }
      down[m] = agreed;
      used[agreed] = 1;
    }
  }

  res.dim = k;
  for (int level = 0; level <= k; ++level) {
    std::vector<int> bucket_level;
    for (int m = 0; m <= full; ++m) {
      if (__builtin_popcount(m) == level && down[m] >= 0) {
        bucket_level.push_back(down[m]);
      }
    }
    if (bucket_level.empty()) break;
    std::sort(bucket_level.begin(), bucket_level.end());
    res.levels.push_back(std::move(bucket_level));
  }
  for (int j = 0; j < k; ++j) res.N.push_back(down[full ^ (1 << j)]);
  std::sort(res.N.begin(), res.N.end());
  res.u = down[full] >= 0 ? std::optional<int>(down[full]) : std::nullopt;
  return res;
}

int ReconstructionState::distance_to_new_vertex(const std::vector<int>& N,
                                                int x) const {
  if (N.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty cube neighborhood");
  }
  int best = 0;
  for (int n : N) best = std::max(best, D_[x][n]);
  return best - 1;
}

int ReconstructionState::find_or_create(const CompletionResult& c, int v) {
  if (c.u) return *c.u;
  int u = label_count();
  labels_.push_back(aux_label(aux_counter_++));
  active_.push_back(1);
  adj_.push_back({});
  for (auto& row : D_) row.push_back(-1);
  D_.emplace_back(label_count(), -1);
  D_[u][u] = 0;
  for (int x = 0; x < u; ++x) {
    if (!active_[x] || x == v) continue;
    int d = distance_to_new_vertex(c.N, x);
    if (d < 1) {
      throw Error(ErrorCode::AmbiguousCompletion,
                  "derived distance from new vertex to " + labels_[x] +
                      " is " + std::to_string(d) + "; matrix is inconsistent");
    }
    D_[u][x] = D_[x][u] = d;
  }
  // v is already peeled, but its distance to u is the cube diameter and
  // recording it keeps the trace and audits complete.
  D_[u][v] = D_[v][u] = c.dim;
  for (int x = 0; x < u; ++x) {
    if (active_[x] && D_[u][x] == 1) {
      adj_[u].push_back(x);
      adj_[x].push_back(u);
    }
  }
  if (c.dim == 1) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  return u;
}

void ReconstructionState::step() {
  int v = pick_corner();
  if (v == z_) {
    throw Error(ErrorCode::InvalidArgument,
                "peeling already finished: only the basepoint is active");
  }
#ifndef NDEBUG
  long long potential_before = 0;
  for (int i = 0; i < label_count(); ++i) {
    if (active_[i]) potential_before += D_[z_][i];
  }
#endif
  auto cc = complete_cube(v);
  active_[v] = 0;
  bool fresh = !cc.u.has_value();
  int u = find_or_create(cc, v);

  StepRecord rec;
  rec.step = ++steps_;
  rec.v = labels_[v];
  if (cc.levels.size() > 1) {
    for (int l : cc.levels[1]) rec.L.push_back(labels_[l]);
  }
  for (const auto& level : cc.levels) {
    std::vector<std::string> names;
    for (int x : level) names.push_back(labels_[x]);
    rec.cube_levels.push_back(std::move(names));
  }
  for (int n : cc.N) rec.N.push_back(labels_[n]);
  rec.u = labels_[u];
  rec.u_new = fresh;
  trace_.push_back(std::move(rec));

#ifndef NDEBUG
  long long potential_after = 0;
  for (int i = 0; i < label_count(); ++i) {
    if (active_[i]) potential_after += D_[z_][i];
  }
  assert(potential_after < potential_before);
#endif
}

std::vector<std::string> ReconstructionState::active_labels() const {
  std::vector<std::string> out;
  for (int i = 0; i < label_count(); ++i) {
    if (active_[i]) out.push_back(labels_[i]);
  }
  return out;
}

Graph ReconstructionState::gamma() const {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < label_count(); ++a) {
    for (int b : adj_[a]) {
      if (a < b) edges.emplace_back(a, b);
    }
  }
  return Graph(label_count(), std::move(edges), labels_);
}

Graph ReconstructionState::run() {
  while (!done()) step();
  StepRecord rec;
  rec.step = ++steps_;
  rec.v = labels_[z_];
  rec.terminal = true;
  trace_.push_back(std::move(rec));
  return gamma();
}

Graph reconstruct(const DistanceMatrix& matrix,
                  const std::optional<std::string>& basepoint,
                  std::vector<StepRecord>* trace_out) {
  ReconstructionState state(matrix, basepoint);
  Graph result = state.run();
  if (trace_out) *trace_out = state.trace();
  return result;
}

}  // namespace medrec
