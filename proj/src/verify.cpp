#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "cube_search.hpp"
#include "cubes.hpp"

namespace medrec {

namespace {

// Distinct vertex sets among the induced cubes spanning the closed
// neighborhood of v inside the alive subgraph; the first completion (if any)
// is written to *out.
int spanning_cube_sets(const detail::AdjacencyList& adj,
                       const std::vector<char>& alive, int v,
                       detail::CubeAssignment* out) {
  std::vector<int> level1;
  for (int w : adj[v]) {
    if (alive.empty() || alive[w]) level1.push_back(w);
  }
  std::vector<detail::CubeAssignment> found;
  detail::spanning_cubes(adj, alive, v, level1, -1, &found);
  auto sets = detail::cube_vertex_sets(found);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  if (out && !found.empty()) *out = found.front();
  return static_cast<int>(sets.size());
}

}  // namespace

PartialMap PartialMap::identity_on(const std::vector<std::string>& labels) {
  PartialMap sigma;
  sigma.pairs.reserve(labels.size());
  for (const auto& l : labels) sigma.pairs.emplace_back(l, l);
  return sigma;
}

std::optional<std::vector<int>> isomorphism_extending(const Graph& a,
                                                      const Graph& b,
                                                      const PartialMap& sigma) {
  const int n = a.vertex_count();
  if (n != b.vertex_count()) {
    throw Error(ErrorCode::SizeMismatch,
                "cannot extend a map between graphs on " + std::to_string(n) +
                    " and " + std::to_string(b.vertex_count()) + " vertices");
  }
  std::vector<int> map_ab(n, -1);
  std::vector<char> used_b(n, 0);
  for (const auto& [la, lb] : sigma.pairs) {
    auto va = a.vertex_by_label(la);
    auto vb = b.vertex_by_label(lb);
    if (!va || !vb) {
      throw Error(ErrorCode::InvalidArgument,
                  "partial map mentions unknown label '" + (va ? lb : la) + "'");
    }
    if (map_ab[*va] == *vb) continue;  // repeated pair
    if (map_ab[*va] >= 0 || used_b[*vb]) {
      throw Error(ErrorCode::InvalidArgument,
                  "partial map is not injective at '" + la + "'");
    }
    map_ab[*va] = *vb;
    used_b[*vb] = 1;
  }

  if (a.edge_count() != b.edge_count()) return std::nullopt;
  auto da = all_pairs_distances(a);
  auto db = all_pairs_distances(b);

  std::vector<int> mapped;
  for (int v = 0; v < n; ++v) {
    if (map_ab[v] >= 0) mapped.push_back(v);
  }
  // Seeded pairs must already be distance-preserving among themselves.
  for (size_t i = 0; i < mapped.size(); ++i) {
    if (a.degree(mapped[i]) != b.degree(map_ab[mapped[i]])) return std::nullopt;
    for (size_t j = i + 1; j < mapped.size(); ++j) {
      if (da[mapped[i]][mapped[j]] != db[map_ab[mapped[i]]][map_ab[mapped[j]]]) {
        return std::nullopt;
      }
    }
  }

  auto candidates_of = [&](int va) {
    std::vector<int> cand;
    for (int vb = 0; vb < n; ++vb) {
      if (used_b[vb] || a.degree(va) != b.degree(vb)) continue;
      bool ok = true;
      for (int x : mapped) {
        if (da[va][x] != db[vb][map_ab[x]]) {
          ok = false;
          break;
        }
      }
      if (ok) cand.push_back(vb);
    }
    return cand;
  };

  // Most-constrained-first backtracking: always branch on the unmapped
  // vertex with the fewest signature-compatible images.
  std::function<bool()> extend = [&]() -> bool {
    if (static_cast<int>(mapped.size()) == n) return true;
    int best = -1;
    std::vector<int> best_cand;
    for (int va = 0; va < n; ++va) {
      if (map_ab[va] >= 0) continue;
      auto cand = candidates_of(va);
      if (best < 0 || cand.size() < best_cand.size()) {
        best = va;
        best_cand = std::move(cand);
        if (best_cand.empty()) return false;
      }
    }
    for (int vb : best_cand) {
      map_ab[best] = vb;
      used_b[vb] = 1;
      mapped.push_back(best);
      if (extend()) return true;
      mapped.pop_back();
      used_b[vb] = 0;
      map_ab[best] = -1;
    }
    return false;
  };

  if (!extend()) return std::nullopt;
  // Soundness check: the map must carry edges to edges. Equal edge counts
  // plus bijectivity then force non-edges to non-edges.
  for (const auto& [u, v] : a.edges()) {
    if (!b.adjacent(map_ab[u], map_ab[v])) {
      throw Error(ErrorCode::Internal, "extension search returned a non-map");
    }
  }
  return map_ab;
}

bool check_corner(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw Error(ErrorCode::InvalidArgument, "vertex out of range");
  }
  return spanning_cube_sets(g.adjacency(), {}, v, nullptr) == 1;
}

PeelingCheck check_monotone_peeling(const Graph& g, int z,
                                    const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (z < 0 || z >= n) {
    throw Error(ErrorCode::InvalidArgument, "basepoint out of range");
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::NotPermutation,
                "order has " + std::to_string(order.size()) + " entries for " +
                    std::to_string(n) + " vertices");
  }
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) {
      throw Error(ErrorCode::NotPermutation,
                  "order is not a permutation of the vertex ids");
    }
    seen[v] = 1;
  }

  PeelingCheck res;
  auto dist = bfs_distances(g, z);
  if (order[0] != z) {
    res.ok = false;
    res.violation = 1;
    res.reason = "order must start at the basepoint";
    return res;
  }
  for (int i = 1; i < n; ++i) {
    if (dist[order[i]] < dist[order[i - 1]]) {
      res.ok = false;
      res.violation = i + 1;
      res.reason = "distance to the basepoint decreases at position " +
                   std::to_string(i + 1);
      return res;
    }
  }

  std::vector<char> alive(n, 1);
  for (int i = n - 1; i > 0; --i) {
    if (spanning_cube_sets(g.adjacency(), alive, order[i], nullptr) != 1) {
      res.ok = false;
      res.violation = i + 1;
      res.reason = "vertex at position " + std::to_string(i + 1) +
                   " is not a corner of the prefix subgraph";
      return res;
    }
    alive[order[i]] = 0;
  }
  return res;
}

namespace {

// Combinatorial boundary (as original vertex ids) of the subgraph of g
// induced on the alive vertices.
std::set<int> induced_boundary(const Graph& g, const std::vector<char>& alive,
                               BoundaryMode mode) {
  std::vector<int> ids;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (alive[v]) ids.push_back(v);
  }
  std::vector<int> index(g.vertex_count(), -1);
  for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (alive[u] && alive[v]) edges.emplace_back(index[u], index[v]);
  }
  Graph sub(static_cast<int>(ids.size()), std::move(edges));
  auto spec = boundary_cells(enumerate_cubes(sub, 0), mode);
  std::set<int> out;
  for (int v : spec.vertices) out.insert(ids[v]);
  return out;
}

}  // namespace

AuditReport audit_reconstruction(const Graph& g, BoundaryMode mode,
                                 const std::vector<int>& extra_vertices) {
  AuditReport rep;
  rep.mode = mode;
  rep.graph_vertices = g.vertex_count();

  auto fail = [&](int step, std::string message) {
    rep.issues.push_back({step, std::move(message)});
  };

  auto mc = check_median(g);
  if (!mc.is_median) {
    std::string why = "original graph is not median: ";
    if (!mc.is_bipartite) {
      why += "it is not bipartite";
    } else if (mc.witness) {
      const auto& w = *mc.witness;
      why += "triple (" + g.label(w[0]) + ", " + g.label(w[1]) + ", " +
             g.label(w[2]) + ") has " +
             std::to_string(mc.witness_intersection_size) + " medians";
    }
    fail(0, std::move(why));
    return rep;
  }

  auto spec = boundary_cells(enumerate_cubes(g, 0), mode);
  rep.boundary_size = static_cast<int>(spec.vertices.size());
  std::vector<int> ids = spec.vertices;
  ids.insert(ids.end(), extra_vertices.begin(), extra_vertices.end());
  auto matrix = subset_distance_matrix(g, std::move(ids));

  ReconstructionState state(matrix);
  // Trace labels resolved to vertices of g; grows as aux vertices are
  // identified with their true counterparts.
  std::unordered_map<std::string, int> mu;
  std::set<int> s_replay;
  for (const auto& label : matrix.labels()) {
    int v = *g.vertex_by_label(label);
    mu[label] = v;
    s_replay.insert(v);
  }
  std::unordered_map<std::string, int> state_index;
  for (int i = 0; i < state.label_count(); ++i) state_index[state.label(i)] = i;

  std::vector<char> alive(g.vertex_count(), 1);
  const auto& adj = g.adjacency();

  try {
    while (!state.done()) {
      const int stepno = static_cast<int>(state.trace().size()) + 1;
      auto bd = induced_boundary(g, alive, mode);
      for (int w : bd) {
        if (!s_replay.count(w)) {
          fail(stepno, "boundary vertex " + g.label(w) +
                           " of the surviving subgraph is not active");
        }
      }
      if (!rep.issues.empty()) break;

      const int before = state.label_count();
      state.step();
      const auto& rec = state.trace().back();
      for (int i = before; i < state.label_count(); ++i) {
        state_index[state.label(i)] = i;
      }

      const int v_g = mu.at(rec.v);
      detail::CubeAssignment cube;
      if (spanning_cube_sets(adj, alive, v_g, &cube) != 1) {
        fail(stepno, rec.v + " is not a corner of the surviving subgraph");
        break;
      }
      const int claimed_dim = std::max<int>(static_cast<int>(rec.L.size()), 1);
      if (cube.dim != claimed_dim) {
        fail(stepno, "completed a " + std::to_string(claimed_dim) +
                         "-cube at " + rec.v + " but the true cube there is a " +
                         std::to_string(cube.dim) + "-cube");
        break;
      }
      const int u_true = cube.by_mask[(1 << cube.dim) - 1];

      // The traced active neighborhood must be the true one within S.
      std::set<int> l_set;
      for (const auto& l : rec.L) l_set.insert(mu.at(l));
      std::set<int> expect_l;
      for (int w : adj[v_g]) {
        if (alive[w] && s_replay.count(w)) expect_l.insert(w);
      }
      if (l_set != expect_l) {
        fail(stepno, "active neighborhood of " + rec.v +
                         " does not match the surviving subgraph");
        break;
      }

      // The traced cube corners must be the true ones (minus a fresh top).
      std::set<int> traced_cube;
      for (const auto& level : rec.cube_levels) {
        for (const auto& l : level) {
          if (!rec.u_new || l != *rec.u) traced_cube.insert(mu.at(l));
        }
      }
      std::set<int> true_cube(cube.by_mask.begin(), cube.by_mask.end());
      if (rec.u_new) true_cube.erase(u_true);
      if (traced_cube != true_cube) {
        fail(stepno, "completed cube at " + rec.v +
                         " does not match the true spanning cube");
        break;
      }
      std::set<int> n_set;
      for (const auto& l : rec.N) n_set.insert(mu.at(l));
      std::set<int> expect_n;
      for (int j = 0; j < cube.dim; ++j) {
        expect_n.insert(cube.by_mask[((1 << cube.dim) - 1) ^ (1 << j)]);
      }
      if (n_set != expect_n) {
        fail(stepno, "cube neighborhood of the opposite corner at " + rec.v +
                         " does not match");
        break;
      }

      // Every corner of the true cube except possibly u lies on the current
      // combinatorial boundary.
      for (int w : cube.by_mask) {
        if (w != u_true && !bd.count(w)) {
          fail(stepno, "cube corner " + g.label(w) +
                           " is missing from the combinatorial boundary");
        }
      }
      if (!rep.issues.empty()) break;

      if (!rec.u_new) {
        if (mu.at(*rec.u) != u_true) {
          fail(stepno, "opposite corner " + *rec.u + " should be " +
                           g.label(u_true));
          break;
        }
      } else {
        if (s_replay.count(u_true)) {
          fail(stepno, "created a fresh vertex although the true opposite "
                       "corner " +
                           g.label(u_true) + " was already active");
          break;
        }
        mu[*rec.u] = u_true;
        ++rep.created;
        // Every derived distance to the new vertex must be the graph metric.
        auto du = bfs_distances(g, u_true);
        const int u_idx = state_index.at(*rec.u);
        bool bad = false;
        for (int x = 0; x < state.label_count() && !bad; ++x) {
          if (x == u_idx || !(state.active(x) || state.label(x) == rec.v)) {
            continue;
          }
          int truth = du[mu.at(state.label(x))];
          if (state.distance(u_idx, x) != truth) {
            fail(stepno, "derived distance from " + *rec.u + " to " +
                             state.label(x) + " is " +
                             std::to_string(state.distance(u_idx, x)) +
                             ", graph distance is " + std::to_string(truth));
            bad = true;
          }
        }
        if (bad) break;
      }

      alive[v_g] = 0;
      s_replay.erase(v_g);
      s_replay.insert(u_true);

      std::set<int> s_state;
      for (const auto& l : state.active_labels()) s_state.insert(mu.at(l));
      if (s_state != s_replay) {
        fail(stepno, "active label set diverged from the true extended "
                     "boundary");
        break;
      }
    }
  } catch (const Error& e) {
    fail(static_cast<int>(state.trace().size()) + 1,
         std::string(error_code_name(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    fail(static_cast<int>(state.trace().size()) + 1,
         std::string("audit bookkeeping failed: ") + e.what());
  }

  rep.steps = static_cast<int>(state.trace().size()) + 1;  // + terminal

  if (rep.issues.empty()) {
    int remaining = 0;
    for (char c : alive) remaining += c;
    if (remaining != 1) {
      fail(0, "peeling finished with " + std::to_string(remaining) +
                  " vertices never peeled");
    }
  }
  if (rep.issues.empty()) {
    Graph gamma = state.gamma();
    try {
      auto iso = isomorphism_extending(
          gamma, g, PartialMap::identity_on(matrix.labels()));
      rep.isomorphic = iso.has_value();
      if (!rep.isomorphic) {
        fail(0, "no isomorphism onto the original extends the identity on "
                "the boundary labels");
      }
    } catch (const Error& e) {
      fail(0, std::string(error_code_name(e.code())) + ": " + e.what());
    }
  }

  rep.ok = rep.issues.empty();
  return rep;
}

}  // namespace medrec
