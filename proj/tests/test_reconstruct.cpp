#include <optional>
#include <string>
#include <vector>

#include "boundary.hpp"
#include "doctest.h"
#include "generate.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "reconstruct.hpp"
#include "test_util.hpp"
#include "verify.hpp"

using medrec::DistanceMatrix;
using medrec::ErrorCode;
using medrec::Graph;
using medrec::ReconstructionState;
using medrec::StepRecord;
using testutil::thrown_code;
using testutil::thrown_message;

namespace {

DistanceMatrix boundary_matrix(const Graph& g) {
  return medrec::boundary_distance_matrix(g, medrec::BoundaryMode::FacetUnique);
}

// Flattened "v -> u" view of the non-terminal trace steps.
std::vector<std::pair<std::string, std::string>> peel_pairs(
    const std::vector<StepRecord>& trace) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& rec : trace) {
    if (!rec.terminal) out.emplace_back(rec.v, *rec.u);
  }
  return out;
}

}  // namespace

TEST_CASE("two boundary points joined by an edge") {
  DistanceMatrix m({"a", "b"}, {{0, 1}, {1, 0}});
  std::vector<StepRecord> trace;
  Graph g = medrec::reconstruct(m, std::nullopt, &trace);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.label(0) == "a");
  CHECK(g.label(1) == "b");
  REQUIRE(trace.size() == 2);
  CHECK(trace[0].v == "b");
  CHECK(trace[0].u == "a");
  CHECK(trace[0].L == std::vector<std::string>{"a"});
  CHECK_FALSE(trace[0].u_new);
  CHECK(trace[1].terminal);
  CHECK(trace[1].v == "a");
}

TEST_CASE("pendant resolution recreates the middle of a path") {
  // Leaves of the 3-path sit at distance 2; the support vertex must be
  // invented.
  DistanceMatrix m({"a", "c"}, {{0, 2}, {2, 0}});
  std::vector<StepRecord> trace;
  Graph g = medrec::reconstruct(m, std::nullopt, &trace);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.raw_labels() == std::vector<std::string>{"a", "c", "aux:0"});
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 1));

  REQUIRE(trace.size() == 3);
  CHECK(trace[0].v == "c");
  CHECK(trace[0].L.empty());
  CHECK(trace[0].cube_levels ==
        std::vector<std::vector<std::string>>{{"c"}});
  CHECK(trace[0].N == std::vector<std::string>{"c"});
  CHECK(trace[0].u == "aux:0");
  CHECK(trace[0].u_new);
  CHECK(trace[1].v == "aux:0");
  CHECK(trace[1].u == "a");
  CHECK(trace[2].terminal);
}

TEST_CASE("single label input is already finished") {
  DistanceMatrix m({"only"}, {{0}});
  std::vector<StepRecord> trace;
  Graph g = medrec::reconstruct(m, std::nullopt, &trace);
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].terminal);
  CHECK(trace[0].v == "only");

  // Asking for a cube at the basepoint anyway is the one isolated-vertex
  // error path.
  ReconstructionState state(m);
  CHECK(state.done());
  CHECK(thrown_code([&] { state.complete_cube(0); }) ==
        ErrorCode::IsolatedNonBase);
  CHECK(thrown_code([&] { state.step(); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("3x3 grid reconstruction, step by step") {
  Graph grid = medrec::grid({3, 3});
  auto m = boundary_matrix(grid);
  std::vector<StepRecord> trace;
  Graph g = medrec::reconstruct(m, std::nullopt, &trace);

  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 12);
  CHECK(g.raw_labels() ==
        std::vector<std::string>{"0_0", "0_1", "0_2", "1_0", "1_2", "2_0",
                                 "2_1", "2_2", "aux:0"});

  REQUIRE(trace.size() == 9);
  CHECK(peel_pairs(trace) ==
        std::vector<std::pair<std::string, std::string>>{
            {"2_2", "aux:0"},
            {"1_2", "0_1"},
            {"2_1", "1_0"},
            {"0_2", "0_1"},
            {"2_0", "1_0"},
            {"aux:0", "0_0"},
            {"0_1", "0_0"},
            {"1_0", "0_0"}});
  for (size_t i = 0; i < trace.size(); ++i) {
    CHECK(trace[i].step == static_cast<int>(i) + 1);
  }
  // Only the very first step has to invent a vertex (the grid center).
  CHECK(trace[0].u_new);
  for (size_t i = 1; i < trace.size() - 1; ++i) CHECK_FALSE(trace[i].u_new);
  CHECK(trace.back().terminal);
  CHECK(trace.back().v == "0_0");

  SUBCASE("first step completes a square whose top corner is fresh") {
    const auto& rec = trace[0];
    CHECK(rec.L == std::vector<std::string>{"1_2", "2_1"});
    CHECK(rec.N == std::vector<std::string>{"1_2", "2_1"});
    // The created corner is absent, so the recorded cube stops one level
    // short.
    CHECK(rec.cube_levels ==
          std::vector<std::vector<std::string>>{{"2_2"}, {"1_2", "2_1"}});
  }

  SUBCASE("a later step records the full square") {
    const auto& rec = trace[1];
    CHECK(rec.v == "1_2");
    CHECK(rec.cube_levels ==
          std::vector<std::vector<std::string>>{
              {"1_2"}, {"0_2", "aux:0"}, {"0_1"}});
    CHECK(rec.N == std::vector<std::string>{"0_2", "aux:0"});
  }

  SUBCASE("trace serializes to one JSON object per line") {
    CHECK(medrec::trace_to_jsonl(trace) ==
          R"({"L_i":["1_2","2_1"],"N_i":["1_2","2_1"],"cube_levels":[["2_2"],["1_2","2_1"]],"step":1,"u_i":"aux:0","u_i_new":true,"v_i":"2_2"}
{"L_i":["0_2","aux:0"],"N_i":["0_2","aux:0"],"cube_levels":[["1_2"],["0_2","aux:0"],["0_1"]],"step":2,"u_i":"0_1","u_i_new":false,"v_i":"1_2"}
{"L_i":["2_0","aux:0"],"N_i":["2_0","aux:0"],"cube_levels":[["2_1"],["2_0","aux:0"],["1_0"]],"step":3,"u_i":"1_0","u_i_new":false,"v_i":"2_1"}
{"L_i":["0_1"],"N_i":["0_2"],"cube_levels":[["0_2"],["0_1"]],"step":4,"u_i":"0_1","u_i_new":false,"v_i":"0_2"}
{"L_i":["1_0"],"N_i":["2_0"],"cube_levels":[["2_0"],["1_0"]],"step":5,"u_i":"1_0","u_i_new":false,"v_i":"2_0"}
{"L_i":["0_1","1_0"],"N_i":["0_1","1_0"],"cube_levels":[["aux:0"],["0_1","1_0"],["0_0"]],"step":6,"u_i":"0_0","u_i_new":false,"v_i":"aux:0"}
{"L_i":["0_0"],"N_i":["0_1"],"cube_levels":[["0_1"],["0_0"]],"step":7,"u_i":"0_0","u_i_new":false,"v_i":"0_1"}
{"L_i":["0_0"],"N_i":["1_0"],"cube_levels":[["1_0"],["0_0"]],"step":8,"u_i":"0_0","u_i_new":false,"v_i":"1_0"}
{"step":9,"terminal":true,"v_i":"0_0"}
)");
  }

  SUBCASE("the invented vertex carries the metric of the grid center") {
    ReconstructionState state(m);
    while (!state.done()) state.step();
    REQUIRE(state.label_count() == 9);
    CHECK(state.label(8) == "aux:0");
    std::vector<int> row;
    for (int j = 0; j < 8; ++j) row.push_back(state.distance(8, j));
    CHECK(row == std::vector<int>{2, 1, 2, 1, 1, 2, 1, 2});
    CHECK(state.initial_count() == 8);
    CHECK(state.basepoint() == "0_0");
  }

  SUBCASE("result is the grid, fixing the boundary pointwise") {
    auto iso = medrec::isomorphism_extending(
        g, grid, medrec::PartialMap::identity_on(m.labels()));
    REQUIRE(iso.has_value());
    CHECK((*iso)[8] == 4);  // aux:0 lands on the center 1_1
  }
}

TEST_CASE("reconstruction accepts any basepoint in the matrix") {
  Graph grid = medrec::grid({3, 3});
  auto m = boundary_matrix(grid);
  for (const auto& base : m.labels()) {
    Graph g = medrec::reconstruct(m, base);
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 12);
    CHECK(medrec::isomorphism_extending(
              g, grid, medrec::PartialMap::identity_on(m.labels()))
              .has_value());
  }
  CHECK(thrown_code([&] { medrec::reconstruct(m, "1_1"); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("reconstruction from a boundary superset") {
  Graph grid = medrec::grid({3, 3});
  SUBCASE("the full vertex set") {
    std::vector<int> all(9);
    for (int i = 0; i < 9; ++i) all[i] = i;
    auto m = medrec::subset_distance_matrix(grid, all);
    Graph g = medrec::reconstruct(m);
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 12);
    // Nothing to invent: the identity on all labels is the isomorphism.
    auto iso = medrec::isomorphism_extending(
        g, grid, medrec::PartialMap::identity_on(m.labels()));
    REQUIRE(iso.has_value());
    for (int v = 0; v < 9; ++v) CHECK(grid.label((*iso)[v]) == g.label(v));
  }
  SUBCASE("boundary plus one interior vertex of a larger grid") {
    Graph big = medrec::grid({4, 4});
    auto spec = medrec::boundary_cells(medrec::enumerate_cubes(big),
                                       medrec::BoundaryMode::FacetUnique);
    auto ids = spec.vertices;
    ids.push_back(5);  // 1_1
    auto m = medrec::subset_distance_matrix(big, ids);
    CHECK(m.size() == 13);
    Graph g = medrec::reconstruct(m);
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 24);
    CHECK(medrec::isomorphism_extending(
              g, big, medrec::PartialMap::identity_on(m.labels()))
              .has_value());
  }
}

TEST_CASE("punctured 3-cube metric rebuilds the odd labeling") {
  auto pair = medrec::q3_minus();
  auto m = boundary_matrix(pair.g_odd);
  CHECK(m.labels() == pair.boundary_labels);

  std::vector<StepRecord> trace;
  Graph g = medrec::reconstruct(m, std::nullopt, &trace);
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 9);
  REQUIRE(trace.size() == 7);
  CHECK(peel_pairs(trace) ==
        std::vector<std::pair<std::string, std::string>>{{"v4", "aux:0"},
                                                         {"v3", "v1"},
                                                         {"v5", "v1"},
                                                         {"v2", "v1"},
                                                         {"v6", "v1"},
                                                         {"aux:0", "v1"}});
  // The invented hub is adjacent to the odd cycle vertices.
  auto hub = g.vertex_by_label("aux:0");
  REQUIRE(hub.has_value());
  std::vector<std::string> hub_nbrs;
  for (int w : g.neighbors(*hub)) hub_nbrs.push_back(g.label(w));
  CHECK(hub_nbrs == std::vector<std::string>{"v1", "v3", "v5"});

  CHECK(medrec::isomorphism_extending(
            g, pair.g_odd, medrec::PartialMap::identity_on(m.labels()))
            .has_value());
  CHECK_FALSE(medrec::isomorphism_extending(
                  g, pair.g_even, medrec::PartialMap::identity_on(m.labels()))
                  .has_value());
}

TEST_CASE("ambiguous completions are reported, not guessed") {
  SUBCASE("two candidates for one square corner") {
    DistanceMatrix m({"z", "a", "b", "c", "w1", "w2", "v"},
                     {{0, 2, 2, 2, 1, 1, 3},
                      {2, 0, 2, 2, 1, 1, 1},
                      {2, 2, 0, 2, 1, 1, 1},
                      {2, 2, 2, 0, 2, 2, 1},
                      {1, 1, 1, 2, 0, 2, 2},
                      {1, 1, 1, 2, 2, 0, 2},
                      {3, 1, 1, 1, 2, 2, 0}});
    CHECK(thrown_code([&] { medrec::reconstruct(m); }) ==
          ErrorCode::AmbiguousCompletion);
    CHECK(thrown_message([&] { medrec::reconstruct(m); })
              .find("multiple level-2 candidates") != std::string::npos);
  }
  SUBCASE("no candidate below the top corner") {
    DistanceMatrix m({"z", "a", "b", "c", "v"},
                     {{0, 2, 2, 2, 3},
                      {2, 0, 2, 2, 1},
                      {2, 2, 0, 2, 1},
                      {2, 2, 2, 0, 1},
                      {3, 1, 1, 1, 0}});
    CHECK(thrown_code([&] { medrec::reconstruct(m); }) ==
          ErrorCode::AmbiguousCompletion);
    CHECK(thrown_message([&] { medrec::reconstruct(m); })
              .find("no level-2 candidate") != std::string::npos);
  }
}

TEST_CASE("distance to a new vertex is one below the neighborhood maximum") {
  Graph grid = medrec::grid({3, 3});
  auto m = boundary_matrix(grid);
  ReconstructionState state(m);
  // N of the first completion is {1_2, 2_1} = indices 4 and 6.
  auto cc = state.complete_cube(7);
  CHECK(cc.dim == 2);
  REQUIRE(cc.N == std::vector<int>{4, 6});
  CHECK_FALSE(cc.u.has_value());
  // From 0_0: max(d(0_0,1_2), d(0_0,2_1)) - 1 = 3 - 1 = 2, the distance to
  // the center.
  CHECK(state.distance_to_new_vertex(cc.N, 0) == 2);
  CHECK(state.distance_to_new_vertex(cc.N, 1) == 1);
  CHECK(thrown_code([&] { state.distance_to_new_vertex({}, 0); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("aux labels in the input do not collide with created ones") {
  // A 3-path whose middle vertex already uses an aux-style name.
  DistanceMatrix m({"aux:5", "x"}, {{0, 2}, {2, 0}});
  Graph g = medrec::reconstruct(m);
  CHECK(g.vertex_count() == 3);
  CHECK(g.raw_labels() == std::vector<std::string>{"aux:5", "x", "aux:6"});
}

TEST_CASE("reconstruct validates the metric first") {
  CHECK(thrown_code([] {
          medrec::reconstruct(DistanceMatrix(
              {"a", "b", "c"}, {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}));
        }) == ErrorCode::MalformedMatrix);
}

TEST_CASE("trees round trip from their leaf metric") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph t = medrec::random_tree(2 + static_cast<int>(seed), seed);
    auto m = boundary_matrix(t);
    Graph g = medrec::reconstruct(m);
    CHECK(g.vertex_count() == t.vertex_count());
    CHECK(g.edge_count() == t.edge_count());
    CHECK(medrec::isomorphism_extending(
              g, t, medrec::PartialMap::identity_on(m.labels()))
              .has_value());
  }
}
