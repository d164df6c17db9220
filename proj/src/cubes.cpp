#include "cubes.hpp"

#include <algorithm>
#include <numeric>

#include "cube_search.hpp"

namespace medrec {

Cube::Cube(int dim, std::vector<int> by_mask) : dim_(dim) {
  if (dim < 0 || by_mask.size() != (size_t{1} << dim)) {
    throw Error(ErrorCode::Internal, "cube corner table has wrong size");
  }
  // Canonical direction order: ascending vertex id at the corners adjacent
  // to corner 0. Makes facet and dump order deterministic.
  std::vector<int> dirs(dim);
  std::iota(dirs.begin(), dirs.end(), 0);
  std::sort(dirs.begin(), dirs.end(),
            [&](int a, int b) { return by_mask[1 << a] < by_mask[1 << b]; });
  by_mask_.assign(by_mask.size(), -1);
  for (size_t m = 0; m < by_mask.size(); ++m) {
    size_t canon = 0;
    for (int p = 0; p < dim; ++p) {
      if (m & (size_t{1} << dirs[p])) canon |= size_t{1} << p;
    }
    by_mask_[canon] = by_mask[m];
  }
  vertices_ = by_mask_;
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorCode::Internal, "cube has repeated vertices");
  }
}

bool Cube::contains(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Cube::mask_of(int v) const {
  for (size_t m = 0; m < by_mask_.size(); ++m) {
    if (by_mask_[m] == v) return static_cast<int>(m);
  }
  throw Error(ErrorCode::NotInCube,
              "vertex " + std::to_string(v) + " is not in the cube");
}

int opposite_vertex(const Cube& c, int v) {
  int full = (1 << c.dim()) - 1;
  return c.by_mask()[c.mask_of(v) ^ full];
}

std::vector<Cube> facets(const Cube& c) {
  if (c.dim() < 1) {
    throw Error(ErrorCode::InvalidArgument, "a 0-cube has no facets");
  }
  std::vector<Cube> out;
  for (int j = 0; j < c.dim(); ++j) {
    for (int side = 0; side <= 1; ++side) {
      std::vector<int> half(size_t{1} << (c.dim() - 1));
      for (int m = 0; m < (1 << c.dim()); ++m) {
        if (((m >> j) & 1) != side) continue;
        // Compress the remaining bits, preserving their order.
        int low = m & ((1 << j) - 1);
        int high = (m >> (j + 1)) << j;
        half[low | high] = c.by_mask()[m];
      }
      out.emplace_back(c.dim() - 1, std::move(half));
    }
  }
  std::sort(out.begin(), out.end(), [](const Cube& a, const Cube& b) {
    return a.vertices() < b.vertices();
  });
  return out;
}

CellComplex::CellComplex(std::vector<Cube> cells) {
  int maxdim = 0;
  for (const auto& c : cells) maxdim = std::max(maxdim, c.dim());
  cells_.resize(maxdim + 1);
  for (auto& c : cells) cells_[c.dim()].push_back(std::move(c));
  for (auto& bucket : cells_) {
    std::sort(bucket.begin(), bucket.end(), [](const Cube& a, const Cube& b) {
      return a.vertices() < b.vertices();
    });
  }
  for (int d = 0; d <= maxdim; ++d) {
    for (int i = 0; i < static_cast<int>(cells_[d].size()); ++i) {
      auto [it, inserted] = index_.emplace(cells_[d][i].vertices(), std::make_pair(d, i));
      if (!inserted) {
        throw Error(ErrorCode::Internal,
                    "duplicate cell in cube enumeration (dim " +
                        std::to_string(d) + ")");
      }
    }
  }
  cofaces_.resize(maxdim + 1);
  for (int d = 0; d <= maxdim; ++d) cofaces_[d].assign(cells_[d].size(), 0);
  for (int d = 1; d <= maxdim; ++d) {
    for (const auto& cell : cells_[d]) {
      for (const auto& f : facets(cell)) {
        auto hit = index_.find(f.vertices());
        if (hit == index_.end()) {
          throw Error(ErrorCode::Internal,
                      "facet of a cell is missing from the complex");
        }
        ++cofaces_[hit->second.first][hit->second.second];
      }
    }
  }
}

int CellComplex::cell_count() const {
  int total = 0;
  for (const auto& bucket : cells_) total += static_cast<int>(bucket.size());
  return total;
}

std::optional<std::pair<int, int>> CellComplex::find(
    const std::vector<int>& vertices) const {
  auto it = index_.find(vertices);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> lambda_set(const Graph& g, int z, int v) {
  auto dist = bfs_distances(g, z);
  std::vector<int> out;
  for (int w : g.neighbors(v)) {
    if (dist[w] == dist[v] - 1) out.push_back(w);
  }
  return out;
}

namespace {

// Quadrangle-condition closure of {v} + down-set a, level by level away
// from v. down[m] holds the vertex for subset m of a; the vertex for m is
// the unique common neighbor, one step closer to z, of the vertices at any
// two of m's facet subsets.
std::vector<int> close_downward(const Graph& g, const std::vector<int>& dist,
                                int v, const std::vector<int>& a) {
  const int k = static_cast<int>(a.size());
  std::vector<int> down(size_t{1} << k, -1);
  down[0] = v;
  for (int j = 0; j < k; ++j) {
    if (dist[a[j]] != dist[v] - 1 || !g.adjacent(v, a[j])) {
      throw Error(ErrorCode::InvalidArgument,
                  "down-set member " + std::to_string(a[j]) +
                      " is not a lower neighbor of " + std::to_string(v));
    }
    down[size_t{1} << j] = a[j];
  }
  for (int level = 2; level <= k; ++level) {
    for (int m = 0; m < (1 << k); ++m) {
      if (__builtin_popcount(m) != level) continue;
      int b0 = m & -m;
      int b1 = (m ^ b0) & -(m ^ b0);
      int p0 = down[m ^ b0];
      int p1 = down[m ^ b1];
      int want = dist[v] - level;
      int found = -1;
      const auto& n0 = g.neighbors(p0);
      const auto& n1 = g.neighbors(p1);
      std::vector<int> common;
      std::set_intersection(n0.begin(), n0.end(), n1.begin(), n1.end(),
                            std::back_inserter(common));
      for (int x : common) {
        if (dist[x] != want) continue;
        if (found >= 0) {
          throw Error(ErrorCode::NotMedian,
                      "quadrangle completion not unique below vertex " +
                          std::to_string(v));
        }
        found = x;
      }
      if (found < 0) {
        throw Error(ErrorCode::NotMedian,
                    "quadrangle completion missing below vertex " +
                        std::to_string(v));
      }
      // The new corner must close the square with *every* facet subset,
      // not just the pair it was derived from.
      for (int j = 0; j < k; ++j) {
        if (!(m & (1 << j))) continue;
        if (!g.adjacent(found, down[m ^ (1 << j)])) {
          throw Error(ErrorCode::NotMedian,
                      "inconsistent cube levels below vertex " +
                          std::to_string(v));
        }
      }
      down[m] = found;
    }
  }
  // For small cubes also verify the subgraph is induced: corners are
  // adjacent exactly when their subsets differ in one element.
  if (k <= 6) {
    for (int m1 = 0; m1 < (1 << k); ++m1) {
      for (int m2 = m1 + 1; m2 < (1 << k); ++m2) {
        bool want = __builtin_popcount(m1 ^ m2) == 1;
        if (g.adjacent(down[m1], down[m2]) != want) {
          throw Error(ErrorCode::NotMedian,
                      "cube spanned by vertex " + std::to_string(v) +
                          " is not induced");
        }
      }
    }
  }
  return down;
}

Cube cube_from_down(const std::vector<int>& down, int k) {
  // Re-anchor at the bottom corner: cube mask = complement of down-subset.
  std::vector<int> by_mask(down.size());
  int full = static_cast<int>(down.size()) - 1;
  for (int m = 0; m <= full; ++m) by_mask[m] = down[full ^ m];
  return Cube(k, std::move(by_mask));
}

}  // namespace

Cube downward_cube(const Graph& g, int z, int v, const std::vector<int>& a) {
  auto dist = bfs_distances(g, z);
  auto down = close_downward(g, dist, v, a);
  return cube_from_down(down, static_cast<int>(a.size()));
}

CellComplex enumerate_cubes(const Graph& g, int z) {
  auto dist = bfs_distances(g, z);
  std::vector<Cube> cells;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> lam;
    for (int w : g.neighbors(v)) {
      if (dist[w] == dist[v] - 1) lam.push_back(w);
    }
    const int k = static_cast<int>(lam.size());
    if (k > 20) {
      throw Error(ErrorCode::InvalidArgument,
                  "cube enumeration limit: vertex " + std::to_string(v) +
                      " has " + std::to_string(k) + " lower neighbors");
    }
    for (int subset = 0; subset < (1 << k); ++subset) {
      std::vector<int> a;
      for (int j = 0; j < k; ++j) {
        if (subset & (1 << j)) a.push_back(lam[j]);
      }
      auto down = close_downward(g, dist, v, a);
      cells.push_back(cube_from_down(down, static_cast<int>(a.size())));
    }
  }
  return CellComplex(std::move(cells));  // duplicate cells trip Internal here
}

CellComplex build_complex_exhaustive(const Graph& g) {
  auto found = detail::all_induced_cubes(g.adjacency(), {}, -1);
  std::vector<Cube> cells;
  cells.reserve(found.size());
  for (auto& a : found) cells.emplace_back(a.dim, std::move(a.by_mask));
  return CellComplex(std::move(cells));
}

ThreeCubeCheck check_3cube_condition(const Graph& g) {
  auto cubes = detail::all_induced_cubes(g.adjacency(), {}, 3);
  std::vector<std::vector<int>> squares;
  std::vector<std::vector<int>> three_cubes;
  for (const auto& c : cubes) {
    std::vector<int> s = c.by_mask;
    std::sort(s.begin(), s.end());
    if (c.dim == 2) squares.push_back(std::move(s));
    else if (c.dim == 3) three_cubes.push_back(std::move(s));
  }

  auto intersection = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
  };

  // Squares grouped by member vertex so triples sharing a vertex are local.
  std::vector<std::vector<int>> through(g.vertex_count());
  for (int i = 0; i < static_cast<int>(squares.size()); ++i) {
    for (int v : squares[i]) through[v].push_back(i);
  }

  ThreeCubeCheck result;
  for (int x = 0; x < g.vertex_count(); ++x) {
    const auto& ids = through[x];
    const int m = static_cast<int>(ids.size());
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        auto ij = intersection(squares[ids[i]], squares[ids[j]]);
        if (ij.size() != 2 || !g.adjacent(ij[0], ij[1])) continue;
        for (int k = j + 1; k < m; ++k) {
          auto ik = intersection(squares[ids[i]], squares[ids[k]]);
          if (ik.size() != 2 || !g.adjacent(ik[0], ik[1])) continue;
          auto jk = intersection(squares[ids[j]], squares[ids[k]]);
          if (jk.size() != 2 || !g.adjacent(jk[0], jk[1])) continue;
          auto triple = intersection(ij, ik);
          if (triple.size() != 1 || triple[0] != x) continue;
          // Union of the three squares; a 3-cube must contain it.
          std::vector<int> u = squares[ids[i]];
          for (int v : squares[ids[j]]) u.push_back(v);
          for (int v : squares[ids[k]]) u.push_back(v);
          std::sort(u.begin(), u.end());
          u.erase(std::unique(u.begin(), u.end()), u.end());
          bool completed = false;
          for (const auto& tc : three_cubes) {
            if (std::includes(tc.begin(), tc.end(), u.begin(), u.end())) {
              completed = true;
              break;
            }
          }
          if (!completed) {
            result.ok = false;
            result.witness_squares = {squares[ids[i]], squares[ids[j]],
                                      squares[ids[k]]};
            return result;
          }
        }
      }
    }
  }
  return result;
}

}  // namespace medrec
