// Serialization: graph JSON, cell-complex JSON, boundary JSON, step traces
// as JSON lines, audit reports, and small file helpers. All dumps are
// deterministic (keys sorted, arrays in canonical order) so identical inputs
// produce identical bytes.
#pragma once

#include <string>
#include <vector>

#include "boundary.hpp"
#include "cubes.hpp"
#include "graph.hpp"
#include "reconstruct.hpp"
#include "verify.hpp"

namespace medrec {

// {"n": int, "edges": [[u,v],...], "labels": [string,...] when present}
std::string graph_to_json(const Graph& g);
// Rejects malformed JSON with Parse; structural problems (loops, duplicate
// or out-of-range edges, bad labels) surface as InvalidGraph.
Graph graph_from_json(const std::string& text);

// Cells grouped by dimension: vertex ids ascending within each cell, cells
// ordered lexicographically, with maximal flags and coface counts.
std::string complex_to_json(const CellComplex& cx);

// Boundary cells and vertices under the given mode; vertices carry labels.
std::string boundary_to_json(const CellComplex& cx, const BoundarySpec& spec,
                             const Graph& g);

// One JSON object per line with fields step, v_i, L_i, cube_levels, N_i,
// u_i, u_i_new; the final line carries "terminal": true instead of a cube.
std::string trace_to_jsonl(const std::vector<StepRecord>& trace);

std::string audit_to_json(const AuditReport& report);

// Vertex map a -> b as a label-to-label object.
std::string map_to_json(const Graph& a, const Graph& b,
                        const std::vector<int>& map_ab);

std::string read_file(const std::string& path);   // throws Parse on failure
void write_file(const std::string& path, const std::string& content);

}  // namespace medrec
