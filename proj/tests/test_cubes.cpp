#include <algorithm>
#include <set>
#include <vector>

#include "cube_search.hpp"
#include "cubes.hpp"
#include "doctest.h"
#include "generate.hpp"
#include "graph.hpp"
#include "test_util.hpp"

using medrec::CellComplex;
using medrec::Cube;
using medrec::ErrorCode;
using medrec::Graph;
using testutil::thrown_code;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

// All cells of a complex as sorted vertex lists, sorted; shape-only view
// that ignores corner anchoring.
std::vector<std::vector<int>> cell_sets(const CellComplex& cx) {
  std::vector<std::vector<int>> out;
  for (int d = 0; d <= cx.dim(); ++d) {
    for (const auto& c : cx.cells(d)) out.push_back(c.vertices());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> brute_force_sets(const Graph& g) {
  auto found = medrec::detail::all_induced_cubes(g.adjacency(), {}, -1);
  auto sets = medrec::detail::cube_vertex_sets(found);
  std::sort(sets.begin(), sets.end());
  return sets;
}

long long cube_count_from(const Graph& g, int z) {
  long long total = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    total += 1LL << medrec::lambda_set(g, z, v).size();
  }
  return total;
}

}  // namespace

TEST_CASE("cube corners are canonicalized by direction") {
  Cube c(2, {0, 7, 2, 9});
  // Directions reordered so the corners adjacent to corner 0 ascend.
  CHECK(c.by_mask() == std::vector<int>{0, 2, 7, 9});
  CHECK(c.vertices() == std::vector<int>{0, 2, 7, 9});
  CHECK(c.dim() == 2);
  CHECK(c.bottom() == 0);
  CHECK(c.top() == 9);
  CHECK(c.contains(7));
  CHECK_FALSE(c.contains(5));
  CHECK(c.mask_of(0) == 0);
  CHECK(c.mask_of(9) == 3);
  CHECK(thrown_code([&] { c.mask_of(5); }) == ErrorCode::NotInCube);

  CHECK(medrec::opposite_vertex(c, 0) == 9);
  CHECK(medrec::opposite_vertex(c, 2) == 7);
  CHECK(medrec::opposite_vertex(c, 9) == 0);
  CHECK(thrown_code([&] { medrec::opposite_vertex(c, 4); }) ==
        ErrorCode::NotInCube);
}

TEST_CASE("facets split a cube along each direction") {
  SUBCASE("square") {
    Cube c(2, {0, 7, 2, 9});
    auto fs = medrec::facets(c);
    REQUIRE(fs.size() == 4);
    std::vector<std::vector<int>> sets;
    for (const auto& f : fs) {
      CHECK(f.dim() == 1);
      sets.push_back(f.vertices());
    }
    CHECK(sets == std::vector<std::vector<int>>{
                      {0, 2}, {0, 7}, {2, 9}, {7, 9}});
  }
  SUBCASE("the six faces of the 3-cube") {
    Graph g = medrec::hypercube(3);
    auto cx = medrec::enumerate_cubes(g);
    REQUIRE(cx.dim() == 3);
    REQUIRE(cx.cells(3).size() == 1);
    auto fs = medrec::facets(cx.cells(3)[0]);
    REQUIRE(fs.size() == 6);
    std::vector<std::vector<int>> sets;
    for (const auto& f : fs) sets.push_back(f.vertices());
    CHECK(sets == std::vector<std::vector<int>>{{0, 1, 2, 3},
                                                {0, 1, 4, 5},
                                                {0, 2, 4, 6},
                                                {1, 3, 5, 7},
                                                {2, 3, 6, 7},
                                                {4, 5, 6, 7}});
  }
  CHECK(thrown_code([] { medrec::facets(Cube(0, {5})); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("lambda sets on hypercubes count the bits toward the basepoint") {
  Graph g = medrec::hypercube(4);
  for (int z : {0, 5}) {
    for (int v = 0; v < 16; ++v) {
      auto lam = medrec::lambda_set(g, z, v);
      CHECK(static_cast<int>(lam.size()) == __builtin_popcount(v ^ z));
      CHECK(std::is_sorted(lam.begin(), lam.end()));
      for (int w : lam) {
        CHECK(__builtin_popcount(v ^ w) == 1);         // a neighbor
        CHECK(__builtin_popcount(w ^ z) ==
              __builtin_popcount(v ^ z) - 1);          // one step closer
      }
    }
  }
}

TEST_CASE("downward cubes match the bitmask oracle on the 4-cube") {
  Graph g = medrec::hypercube(4);
  for (int z : {0, 9}) {
    for (int v = 0; v < 16; ++v) {
      auto lam = medrec::lambda_set(g, z, v);
      const int k = static_cast<int>(lam.size());
      for (int subset = 0; subset < (1 << k); ++subset) {
        std::vector<int> a;
        int mask = 0;
        for (int j = 0; j < k; ++j) {
          if (subset & (1 << j)) {
            a.push_back(lam[j]);
            mask |= v ^ lam[j];
          }
        }
        Cube c = medrec::downward_cube(g, z, v, a);
        CHECK(c.dim() == static_cast<int>(a.size()));
        CHECK(c.top() == v);
        CHECK(c.bottom() == (v ^ mask));
        std::vector<int> expect;
        for (int sub = mask;; sub = (sub - 1) & mask) {
          expect.push_back(v ^ sub);
          if (sub == 0) break;
        }
        std::sort(expect.begin(), expect.end());
        CHECK(c.vertices() == expect);
      }
    }
  }

  SUBCASE("rejects a set that is not a down-set") {
    // 3 is not a lower neighbor of 1 from basepoint 0.
    CHECK(thrown_code([&] { medrec::downward_cube(g, 0, 1, {3}); }) ==
          ErrorCode::InvalidArgument);
  }
}

TEST_CASE("quadrangle closure fails honestly on the six-cycle") {
  Graph g = cycle(6);
  // From basepoint 0 the antipode 3 has two lower neighbors whose square
  // has no fourth corner.
  CHECK(thrown_code([&] { medrec::downward_cube(g, 0, 3, {2, 4}); }) ==
        ErrorCode::NotMedian);
  CHECK(thrown_code([&] { medrec::enumerate_cubes(g); }) ==
        ErrorCode::NotMedian);
}

TEST_CASE("cube enumeration agrees with brute force") {
  std::vector<Graph> graphs;
  graphs.push_back(medrec::hypercube(3));
  graphs.push_back(medrec::grid({3, 3}));
  graphs.push_back(medrec::grid({2, 3}));
  graphs.push_back(medrec::grid({2, 2, 2}));
  graphs.push_back(medrec::random_tree(10, 7));
  graphs.push_back(medrec::median_closure(4, 6, 11));
  for (const auto& g : graphs) {
    auto fast = cell_sets(medrec::enumerate_cubes(g));
    CHECK(fast == brute_force_sets(g));
    CHECK(fast == cell_sets(medrec::build_complex_exhaustive(g)));
  }
}

TEST_CASE("cube count is independent of the basepoint") {
  for (const Graph& g : {medrec::grid({3, 3}), medrec::hypercube(3),
                         medrec::random_tree(12, 5)}) {
    long long reference = cube_count_from(g, 0);
    CHECK(reference == medrec::enumerate_cubes(g, 0).cell_count());
    for (int z = 1; z < g.vertex_count(); ++z) {
      CHECK(cube_count_from(g, z) == reference);
      CHECK(medrec::enumerate_cubes(g, z).cell_count() == reference);
    }
  }
}

TEST_CASE("coface counts and maximal flags") {
  SUBCASE("3-cube") {
    auto cx = medrec::enumerate_cubes(medrec::hypercube(3));
    REQUIRE(cx.dim() == 3);
    CHECK(cx.cells(0).size() == 8);
    CHECK(cx.cells(1).size() == 12);
    CHECK(cx.cells(2).size() == 6);
    CHECK(cx.cells(3).size() == 1);
    CHECK(cx.cell_count() == 27);
    for (int i = 0; i < 8; ++i) CHECK(cx.coface_count(0, i) == 3);
    for (int i = 0; i < 12; ++i) CHECK(cx.coface_count(1, i) == 2);
    for (int i = 0; i < 6; ++i) {
      CHECK(cx.coface_count(2, i) == 1);
      CHECK_FALSE(cx.maximal(2, i));
    }
    CHECK(cx.maximal(3, 0));
    CHECK(cx.coface_count(3, 0) == 0);
  }
  SUBCASE("tree: edges are the maximal cells, vertex cofaces are degrees") {
    Graph g = medrec::random_tree(9, 2);
    auto cx = medrec::enumerate_cubes(g);
    REQUIRE(cx.dim() == 1);
    CHECK(static_cast<int>(cx.cells(1).size()) == g.edge_count());
    for (int i = 0; i < static_cast<int>(cx.cells(1).size()); ++i) {
      CHECK(cx.maximal(1, i));
    }
    for (int i = 0; i < static_cast<int>(cx.cells(0).size()); ++i) {
      int v = cx.cells(0)[i].vertices()[0];
      CHECK(cx.coface_count(0, i) == g.degree(v));
    }
  }
  SUBCASE("find locates cells by vertex list") {
    auto cx = medrec::enumerate_cubes(medrec::hypercube(3));
    auto hit = cx.find({0, 1});
    REQUIRE(hit.has_value());
    CHECK(hit->first == 1);
    CHECK(cx.cells(1)[hit->second].vertices() == std::vector<int>{0, 1});
    CHECK_FALSE(cx.find({0, 7}).has_value());
    CHECK_FALSE(cx.find({0, 1, 2, 3, 4}).has_value());
  }
}

TEST_CASE("three-square condition") {
  CHECK(medrec::check_3cube_condition(medrec::hypercube(3)).ok);
  CHECK(medrec::check_3cube_condition(medrec::grid({3, 3})).ok);
  CHECK(medrec::check_3cube_condition(medrec::random_tree(8, 1)).ok);

  SUBCASE("punctured 3-cube exposes three squares with no filler") {
    auto pair = medrec::q3_minus();
    for (const Graph& g : {pair.g_odd, pair.g_even}) {
      auto res = medrec::check_3cube_condition(g);
      CHECK_FALSE(res.ok);
      REQUIRE(res.witness_squares.size() == 3);
      // The witnesses really are pairwise edge-sharing squares through one
      // common vertex.
      std::vector<int> common = res.witness_squares[0];
      for (const auto& s : res.witness_squares) {
        CHECK(s.size() == 4);
        std::vector<int> meet;
        std::set_intersection(common.begin(), common.end(), s.begin(), s.end(),
                              std::back_inserter(meet));
        common = meet;
      }
      CHECK(common.size() == 1);
      for (size_t i = 0; i < 3; ++i) {
        for (size_t j = i + 1; j < 3; ++j) {
          std::vector<int> meet;
          std::set_intersection(res.witness_squares[i].begin(),
                                res.witness_squares[i].end(),
                                res.witness_squares[j].begin(),
                                res.witness_squares[j].end(),
                                std::back_inserter(meet));
          REQUIRE(meet.size() == 2);
          CHECK(g.adjacent(meet[0], meet[1]));
        }
      }
    }
  }
}

TEST_CASE("enumeration from every basepoint matches on the punctured cube") {
  // The graph is not median, yet downward cubes from the hub close fine and
  // must agree with brute force (3 squares, 9 edges, 7 vertices).
  auto g = medrec::q3_minus().g_odd;
  auto cx = medrec::enumerate_cubes(g, 0);
  CHECK(cx.dim() == 2);
  CHECK(cx.cells(0).size() == 7);
  CHECK(cx.cells(1).size() == 9);
  CHECK(cx.cells(2).size() == 3);
  CHECK(cell_sets(cx) == brute_force_sets(g));
}
