// Brute-force search for induced hypercube subgraphs by mask backtracking.
// Deliberately independent of the basepoint/quadrangle machinery in cubes.cpp:
// it works on arbitrary graphs (including non-median ones) and serves as the
// ground-truth enumeration the fast path is checked against.
#pragma once

#include <functional>
#include <vector>

namespace medrec::detail {

// A concrete induced k-cube: by_mask[m] is the vertex sitting at corner m,
// where corner 0 is the anchor and bit j flips the j-th direction.
struct CubeAssignment {
  int dim = 0;
  std::vector<int> by_mask;
};

using AdjacencyList = std::vector<std::vector<int>>;  // sorted neighbor lists

// Enumerates every induced cube that has `anchor` at corner 0 and exactly
// `level1` (pairwise nonadjacent neighbors of anchor) as the corners at
// Hamming distance 1. Vertices with alive[v] == 0 are ignored; pass an empty
// vector to allow all. Distinct completions are distinct cubes: a hypercube
// automorphism fixing one corner and all its neighbors is the identity.
// Returns the number of completions; stops early once `limit` is reached
// (limit < 0 means unlimited). `out` may be null.
int spanning_cubes(const AdjacencyList& adj, const std::vector<char>& alive,
                   int anchor, const std::vector<int>& level1, int limit,
                   std::vector<CubeAssignment>* out);

// All induced cubes of the graph with dimension <= max_dim (max_dim < 0
// means unbounded). Each cube is reported exactly once, anchored at its
// minimum-id vertex.
std::vector<CubeAssignment> all_induced_cubes(const AdjacencyList& adj,
                                              const std::vector<char>& alive,
                                              int max_dim);

// Sorted vertex sets of the given cubes, ascending; convenience for oracles.
std::vector<std::vector<int>> cube_vertex_sets(
    const std::vector<CubeAssignment>& cubes);

}  // namespace medrec::detail
