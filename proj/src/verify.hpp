// Ground-truth checking: graph isomorphism constrained to extend a partial
// label map, corner and peeling-order validators, and a step-by-step audit
// that replays a reconstruction against the original graph.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boundary.hpp"
#include "graph.hpp"
#include "reconstruct.hpp"

namespace medrec {

// Injective partial map between the label sets of two graphs.
struct PartialMap {
  std::vector<std::pair<std::string, std::string>> pairs;

  static PartialMap identity_on(const std::vector<std::string>& labels);
};

// Isomorphism a -> b extending sigma, as a vertex map indexed by a's ids,
// or nullopt if none exists. Backtracking, pruned by degree and by distance
// vectors to already-mapped vertices, most-constrained vertex first; a found
// map is re-verified edge-perfect before being returned.
// Throws SizeMismatch when the vertex counts differ, InvalidArgument when
// sigma mentions unknown labels or is not injective.
std::optional<std::vector<int>> isomorphism_extending(const Graph& a,
                                                      const Graph& b,
                                                      const PartialMap& sigma);

// True iff the closed neighborhood of v lies in exactly one cube of g.
bool check_corner(const Graph& g, int v);

struct PeelingCheck {
  bool ok = true;
  int violation = -1;   // 1-based position of the first offending vertex
  std::string reason;
};

// Checks that `order` (a permutation of V(g)) is distance-monotone from z and
// that each prefix ends in a corner of the induced subgraph on that prefix.
// Throws NotPermutation.
PeelingCheck check_monotone_peeling(const Graph& g, int z,
                                    const std::vector<int>& order);

struct AuditIssue {
  int step = 0;  // 0 = precheck / final checks
  std::string message;
};

struct AuditReport {
  bool ok = false;
  BoundaryMode mode = BoundaryMode::FacetUnique;
  int graph_vertices = 0;
  int boundary_size = 0;
  int steps = 0;          // peels plus the terminal record
  int created = 0;        // vertices the reconstruction had to invent
  bool isomorphic = false;
  std::vector<AuditIssue> issues;
};

// Reconstructs g from its boundary distance matrix (optionally widened by
// extra vertex ids) and replays every step against g itself: the peeled
// vertex must be a corner of the surviving subgraph, the completed cube must
// match the unique cube spanned by its closed neighborhood, found opposite
// corners must be the true ones, derived distance rows must equal graph
// distances, the active label set must track the true extended boundary, the
// combinatorial boundary of each surviving subgraph must stay inside it, and
// the final graph must be isomorphic to g via the identity on the matrix
// labels. Violations are collected into the report rather than thrown.
AuditReport audit_reconstruction(const Graph& g, BoundaryMode mode,
                                 const std::vector<int>& extra_vertices = {});

}  // namespace medrec
