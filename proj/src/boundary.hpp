// Combinatorial boundary of a cube complex, in two flavors: the default
// facet-unique rule (downward closure of non-maximal cells that are a facet
// of exactly one cell) and the dimension-based rule (cells of dimension
// below dim(X) lying in at most one top-dimensional cell).
#pragma once

#include <string>
#include <vector>

#include "cubes.hpp"
#include "graph.hpp"

namespace medrec {

enum class BoundaryMode { FacetUnique, DimensionBased };

const char* boundary_mode_name(BoundaryMode mode);
// Parses "facet-unique" / "dimension-based"; throws InvalidArgument.
BoundaryMode parse_boundary_mode(const std::string& name);

struct BoundarySpec {
  BoundaryMode mode = BoundaryMode::FacetUnique;
  // cell_indices[d] holds indices into cx.cells(d); downward closed.
  std::vector<std::vector<int>> cell_indices;
  // Ascending ids of the 0-cells in the closure (the boundary vertices).
  std::vector<int> vertices;
};

// Boundary cells of the complex under the given mode. The one-cell complex
// (a single vertex) has boundary {v} by convention.
BoundarySpec boundary_cells(const CellComplex& cx, BoundaryMode mode);

// Distance matrix over the boundary vertices of g (ascending id order),
// labeled with the external labels of g. Requires g median.
DistanceMatrix boundary_distance_matrix(const Graph& g, BoundaryMode mode,
                                        int basepoint = 0);

// Distance matrix over an arbitrary nonempty vertex subset of g (deduplicated,
// ascending id order). Used to feed reconstruction from boundary supersets.
DistanceMatrix subset_distance_matrix(const Graph& g, std::vector<int> ids);

}  // namespace medrec
