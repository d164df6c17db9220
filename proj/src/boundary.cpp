#include "boundary.hpp"

#include <algorithm>
#include <deque>

namespace medrec {

const char* boundary_mode_name(BoundaryMode mode) {
  return mode == BoundaryMode::FacetUnique ? "facet-unique" : "dimension-based";
}

BoundaryMode parse_boundary_mode(const std::string& name) {
  if (name == "facet-unique") return BoundaryMode::FacetUnique;
  if (name == "dimension-based") return BoundaryMode::DimensionBased;
  throw Error(ErrorCode::InvalidArgument,
              "unknown boundary mode '" + name +
                  "' (expected facet-unique or dimension-based)");
}

BoundarySpec boundary_cells(const CellComplex& cx, BoundaryMode mode) {
  BoundarySpec spec;
  spec.mode = mode;
  const int maxdim = cx.dim();
  spec.cell_indices.assign(maxdim + 1, {});

  std::vector<std::vector<char>> in_boundary(maxdim + 1);
  for (int d = 0; d <= maxdim; ++d) {
    in_boundary[d].assign(cx.cells(d).size(), 0);
  }

  // Generators per mode.
  std::deque<std::pair<int, int>> work;
  if (mode == BoundaryMode::FacetUnique) {
    for (int d = 0; d <= maxdim; ++d) {
      for (int i = 0; i < static_cast<int>(cx.cells(d).size()); ++i) {
        if (!cx.maximal(d, i) && cx.coface_count(d, i) == 1) {
          in_boundary[d][i] = 1;
          work.emplace_back(d, i);
        }
      }
    }
  } else {
    // dimension-based: count top-dimensional cells containing each cell.
    for (int d = 0; d < maxdim; ++d) {
      for (int i = 0; i < static_cast<int>(cx.cells(d).size()); ++i) {
        const auto& verts = cx.cells(d)[i].vertices();
        int containing = 0;
        for (const auto& top : cx.cells(maxdim)) {
          const auto& tv = top.vertices();
          if (std::includes(tv.begin(), tv.end(), verts.begin(), verts.end())) {
            ++containing;
            if (containing > 1) break;
          }
        }
        if (containing <= 1) {
          in_boundary[d][i] = 1;
          work.emplace_back(d, i);
        }
      }
    }
  }

  // Downward closure through facets.
  while (!work.empty()) {
    auto [d, i] = work.front();
    work.pop_front();
    if (d == 0) continue;
    for (const auto& f : facets(cx.cells(d)[i])) {
      auto hit = cx.find(f.vertices());
      if (!hit) {
        throw Error(ErrorCode::Internal, "boundary facet missing from complex");
      }
      auto [fd, fi] = *hit;
      if (!in_boundary[fd][fi]) {
        in_boundary[fd][fi] = 1;
        work.emplace_back(fd, fi);
      }
    }
  }

  for (int d = 0; d <= maxdim; ++d) {
    for (int i = 0; i < static_cast<int>(cx.cells(d).size()); ++i) {
      if (in_boundary[d][i]) spec.cell_indices[d].push_back(i);
    }
  }
  for (int i : spec.cell_indices[0]) {
    spec.vertices.push_back(cx.cells(0)[i].vertices()[0]);
  }
  std::sort(spec.vertices.begin(), spec.vertices.end());

  // Convention for the one-cell complex: the lone vertex is its own boundary.
  if (spec.vertices.empty() && maxdim == 0 && cx.cells(0).size() == 1) {
    spec.cell_indices[0].push_back(0);
    spec.vertices.push_back(cx.cells(0)[0].vertices()[0]);
  }
  return spec;
}

DistanceMatrix boundary_distance_matrix(const Graph& g, BoundaryMode mode,
                                        int basepoint) {
  auto cx = enumerate_cubes(g, basepoint);
  auto spec = boundary_cells(cx, mode);
  std::vector<std::string> labels;
  labels.reserve(spec.vertices.size());
  for (int v : spec.vertices) labels.push_back(g.label(v));
  const int m = static_cast<int>(spec.vertices.size());
  std::vector<std::vector<int>> entries(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) {
    auto dist = bfs_distances(g, spec.vertices[i]);
    for (int j = 0; j < m; ++j) entries[i][j] = dist[spec.vertices[j]];
  }
  return DistanceMatrix(std::move(labels), std::move(entries));
}

DistanceMatrix subset_distance_matrix(const Graph& g, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty vertex subset");
  }
  for (int v : ids) {
    if (v < 0 || v >= g.vertex_count()) {
      throw Error(ErrorCode::InvalidArgument,
                  "subset vertex " + std::to_string(v) + " is out of range");
    }
  }
  std::vector<std::string> labels;
  labels.reserve(ids.size());
  for (int v : ids) labels.push_back(g.label(v));
  const int m = static_cast<int>(ids.size());
  std::vector<std::vector<int>> entries(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) {
    auto dist = bfs_distances(g, ids[i]);
    for (int j = 0; j < m; ++j) entries[i][j] = dist[ids[j]];
  }
  return DistanceMatrix(std::move(labels), std::move(entries));
}

}  // namespace medrec
