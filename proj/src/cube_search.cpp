#include "cube_search.hpp"

#include <algorithm>

namespace medrec::detail {

namespace {

bool adj_contains(const AdjacencyList& adj, int u, int v) {
  const auto& nu = adj[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

struct SearchState {
  const AdjacencyList* adj = nullptr;
  const std::vector<char>* alive = nullptr;
  int dim = 0;
  int min_id = -1;  // when >= 0, every non-anchor vertex must exceed it
  std::vector<int> by_mask;
  std::vector<char> used;
  std::vector<int> mask_order;  // masks with popcount >= 2, by (popcount, value)
  int limit = -1;
  int found = 0;
  std::vector<CubeAssignment>* out = nullptr;
};

bool usable(const SearchState& s, int v) {
  if (!s.alive->empty() && !(*s.alive)[v]) return false;
  if (s.min_id >= 0 && v <= s.min_id) return false;
  return s.used[v] == 0;
}

// Candidate at `mask` must be adjacent to an assigned corner exactly when the
// masks differ in one bit; this keeps the subgraph induced as it grows.
bool consistent(const SearchState& s, int mask, int v) {
  for (int m = 0; m < static_cast<int>(s.by_mask.size()); ++m) {
    if (m == mask) continue;
    int w = s.by_mask[m];
    if (w < 0) continue;
    bool want = __builtin_popcount(mask ^ m) == 1;
    if (adj_contains(*s.adj, v, w) != want) return false;
  }
  return true;
}

bool fill(SearchState& s, size_t pos) {
  if (pos == s.mask_order.size()) {
    ++s.found;
    if (s.out) {
      CubeAssignment a;
      a.dim = s.dim;
      a.by_mask = s.by_mask;
      s.out->push_back(std::move(a));
    }
    return s.limit >= 0 && s.found >= s.limit;
  }
  int mask = s.mask_order[pos];
  // Candidates: common neighbors of two parent corners.
  int b0 = mask & -mask;
  int b1 = (mask ^ b0) & -(mask ^ b0);
  int p0 = mask ^ b0;
  int p1 = mask ^ b1;
  const auto& n0 = (*s.adj)[s.by_mask[p0]];
  const auto& n1 = (*s.adj)[s.by_mask[p1]];
  std::vector<int> cands;
  std::set_intersection(n0.begin(), n0.end(), n1.begin(), n1.end(),
                        std::back_inserter(cands));
  for (int v : cands) {
    if (!usable(s, v) || !consistent(s, mask, v)) continue;
    s.by_mask[mask] = v;
    s.used[v] = 1;
    bool stop = fill(s, pos + 1);
    s.used[v] = 0;
    s.by_mask[mask] = -1;
    if (stop) return true;
  }
  return false;
}

int run_search(const AdjacencyList& adj, const std::vector<char>& alive,
               int anchor, const std::vector<int>& level1, int min_id,
               int limit, std::vector<CubeAssignment>* out) {
  const int k = static_cast<int>(level1.size());
  SearchState s;
  s.adj = &adj;
  s.alive = &alive;
  s.dim = k;
  s.min_id = min_id;
  s.limit = limit;
  s.out = out;
  s.by_mask.assign(size_t{1} << k, -1);
  s.used.assign(adj.size(), 0);
  s.by_mask[0] = anchor;
  s.used[anchor] = 1;
  // Level-1 corners are fixed inputs; they must be pairwise nonadjacent
  // neighbors of the anchor or no induced cube can exist.
  for (int j = 0; j < k; ++j) {
    int v = level1[j];
    if (!adj_contains(adj, anchor, v)) return 0;
    if (!alive.empty() && !alive[v]) return 0;
    if (min_id >= 0 && v <= min_id) return 0;
    for (int i = 0; i < j; ++i) {
      if (adj_contains(adj, level1[i], v)) return 0;
    }
    s.by_mask[1 << j] = v;
    s.used[v] = 1;
  }
  for (int m = 0; m < (1 << k); ++m) {
    if (__builtin_popcount(m) >= 2) s.mask_order.push_back(m);
  }
  std::sort(s.mask_order.begin(), s.mask_order.end(), [](int a, int b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  fill(s, 0);
  return s.found;
}

}  // namespace

int spanning_cubes(const AdjacencyList& adj, const std::vector<char>& alive,
                   int anchor, const std::vector<int>& level1, int limit,
                   std::vector<CubeAssignment>* out) {
  return run_search(adj, alive, anchor, level1, -1, limit, out);
}

std::vector<CubeAssignment> all_induced_cubes(const AdjacencyList& adj,
                                              const std::vector<char>& alive,
                                              int max_dim) {
  const int n = static_cast<int>(adj.size());
  std::vector<CubeAssignment> cubes;
  for (int v = 0; v < n; ++v) {
    if (!alive.empty() && !alive[v]) continue;
    cubes.push_back(CubeAssignment{0, {v}});  // every vertex is a 0-cube
    if (max_dim == 0) continue;
    // Anchor at the minimum-id corner: all other corners, in particular the
    // anchor's in-cube neighbors, must have larger ids.
    std::vector<int> nbrs;
    for (int w : adj[v]) {
      if (w > v && (alive.empty() || alive[w])) nbrs.push_back(w);
    }
    const int d = static_cast<int>(nbrs.size());
    int kmax = max_dim < 0 ? d : std::min(max_dim, d);
    std::vector<int> combo;
    // Enumerate k-combinations of nbrs for k = 1..kmax.
    std::function<void(int, int)> rec = [&](int start, int k) {
      if (k == 0) {
        run_search(adj, alive, v, combo, v, -1, &cubes);
        return;
      }
      for (int i = start; i <= d - k; ++i) {
        bool indep = true;
        for (int c : combo) {
          if (adj_contains(adj, c, nbrs[i])) {
            indep = false;
            break;
          }
        }
        if (!indep) continue;
        combo.push_back(nbrs[i]);
        rec(i + 1, k - 1);
        combo.pop_back();
      }
    };
    for (int k = 1; k <= kmax; ++k) rec(0, k);
  }
  return cubes;
}

std::vector<std::vector<int>> cube_vertex_sets(
    const std::vector<CubeAssignment>& cubes) {
  std::vector<std::vector<int>> sets;
  sets.reserve(cubes.size());
  for (const auto& c : cubes) {
    std::vector<int> s = c.by_mask;
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace medrec::detail
