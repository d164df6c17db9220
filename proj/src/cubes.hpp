// Graphic cubes of a median graph and the cube complex built from them.
// The fast enumeration walks downward cubes from a basepoint: every vertex v
// together with any subset of its lower neighbors Lambda(v) spans exactly one
// cube, so cubes are in bijection with (v, subset) pairs.
#pragma once

#include <optional>
#include <map>
#include <string>
#include <vector>

#include "graph.hpp"

namespace medrec {

// An induced hypercube subgraph. by_mask[m] is the vertex at corner m; for
// complexes produced by enumerate_cubes, corner 0 is the gate of the
// basepoint (bottom) and the all-ones corner is the vertex farthest from it
// (top). For exhaustively built complexes the anchoring is structural only.
// Directions are canonicalized so that by_mask[1<<0] < by_mask[1<<1] < ...
class Cube {
 public:
  Cube(int dim, std::vector<int> by_mask);

  int dim() const { return dim_; }
  const std::vector<int>& vertices() const { return vertices_; }  // sorted
  const std::vector<int>& by_mask() const { return by_mask_; }
  int bottom() const { return by_mask_.front(); }
  int top() const { return by_mask_.back(); }
  bool contains(int v) const;
  int mask_of(int v) const;  // throws NotInCube

 private:
  int dim_;
  std::vector<int> by_mask_;
  std::vector<int> vertices_;
};

// Vertex of the cube diagonally opposite v. Throws NotInCube.
int opposite_vertex(const Cube& c, int v);

// The 2*dim facets obtained by splitting along each parallel-edge class,
// sorted by vertex list. Throws InvalidArgument for a 0-cube.
std::vector<Cube> facets(const Cube& c);

// All cells of the cube complex, grouped by dimension, with coface counts
// (number of (dim+1)-cells containing a cell) and maximality flags.
class CellComplex {
 public:
  explicit CellComplex(std::vector<Cube> cells);

  int dim() const { return static_cast<int>(cells_.size()) - 1; }
  int cell_count() const;
  const std::vector<Cube>& cells(int dim) const { return cells_.at(dim); }
  int coface_count(int dim, int index) const { return cofaces_.at(dim).at(index); }
  bool maximal(int dim, int index) const { return cofaces_.at(dim).at(index) == 0; }
  // Locate a cell by its sorted vertex list; nullopt when absent.
  std::optional<std::pair<int, int>> find(const std::vector<int>& vertices) const;

 private:
  std::vector<std::vector<Cube>> cells_;          // cells_[d] sorted by vertex list
  std::vector<std::vector<int>> cofaces_;
  std::map<std::vector<int>, std::pair<int, int>> index_;
};

// Lower neighbors of v seen from basepoint z: neighbors at distance
// d(z,v) - 1, ascending.
std::vector<int> lambda_set(const Graph& g, int z, int v);

// The unique cube spanned by v and down-set a (a subset of lambda_set(v)),
// closed level by level through the quadrangle condition. Throws NotMedian
// when a level candidate is missing or not unique.
Cube downward_cube(const Graph& g, int z, int v, const std::vector<int>& a);

// Cube complex of a median graph via downward cubes from basepoint z.
// The (v, subset) enumeration must produce every cube exactly once;
// a duplicate signals a library bug and raises Internal.
CellComplex enumerate_cubes(const Graph& g, int z = 0);

// Cube complex of an arbitrary graph by exhaustive induced-cube search.
// Slower, but valid for non-median diagnostics.
CellComplex build_complex_exhaustive(const Graph& g);

// Verifies that any three squares pairwise sharing an edge and all sharing a
// vertex are faces of a common 3-cube. Returns the three offending squares
// (as sorted vertex lists) when the condition fails.
struct ThreeCubeCheck {
  bool ok = true;
  std::vector<std::vector<int>> witness_squares;
};
ThreeCubeCheck check_3cube_condition(const Graph& g);

}  // namespace medrec
