// Deterministic and seeded generators for the test families: hypercubes,
// grids, uniform random trees, Cartesian products, median closures of random
// hypercube subsets, and the 3-cube-minus-a-vertex pair whose two labelings
// share a boundary metric without being isomorphic over it.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graph.hpp"

namespace medrec {

// Family plus family-specific parameter string; identical specs always yield
// the identical labeled graph.
struct GenSpec {
  std::string family;  // hypercube | grid | tree | product | median_closure | q3_minus
  std::string params;
  std::uint64_t seed = 0;
};

// Q_n with bitstring labels, most significant direction first. 0 <= n <= 12.
Graph hypercube(int n);

// Cartesian-product grid; labels are coordinates joined by '_', ids are
// row-major. Every side must be >= 1.
Graph grid(const std::vector<int>& dims);

// Uniform random labeled tree on n >= 1 vertices (decoded from a random
// Pruefer sequence), deterministic in the seed.
Graph random_tree(int n, std::uint64_t seed);

// Tree with the given Pruefer code (entries in [0, n), length n - 2); used
// by the exhaustive small-tree sweeps.
Graph tree_from_pruefer(int n, const std::vector<int>& code);

// Cartesian product; vertex (u, v) gets id u * |V(b)| + v and label
// "<label_a>|<label_b>".
Graph cartesian_product(const Graph& a, const Graph& b);

// Closure of k random distinct vertices of Q_d under coordinatewise majority,
// as the induced subgraph of Q_d. Retries with seed+1 (at most 16 attempts)
// when the closure induces a disconnected graph. 1 <= d <= 10, 1 <= k <= 2^d.
Graph median_closure(int d, int k, std::uint64_t seed);

struct Q3MinusPair {
  Graph g_odd;    // hub v0 adjacent to v1, v3, v5
  Graph g_even;   // hub v0 adjacent to v2, v4, v6
  std::vector<std::string> boundary_labels;  // the shared 6-cycle v1..v6
};

// The 3-cube minus one vertex: two ways to attach the hub to the 6-cycle.
Q3MinusPair q3_minus();

// Dispatch on a GenSpec; parses the parameter string. Throws InvalidArgument
// on unknown families or out-of-range parameters.
Graph generate(const GenSpec& spec);

namespace detail {
// Unbiased integer in [0, n) by rejection; stable across platforms, unlike
// std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);
}  // namespace detail

}  // namespace medrec
