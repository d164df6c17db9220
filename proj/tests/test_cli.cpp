// Drives the installed CLI binary as a subprocess and checks stdout/stderr
// bytes and exit codes: 0 success, 1 domain error, 2 usage error.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;  // stdout and stderr, interleaved
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(MEDREC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run result;
  char buf[4096];
  size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, n);
  }
  int status = ::pclose(pipe);
  if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
  return result;
}

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("medrec_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  std::ofstream f(p, std::ios::binary);
  REQUIRE(f.good());
  f << text;
  f.close();
  return p.string();
}

std::string read_all(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  return std::string(std::istreambuf_iterator<char>(f),
                     std::istreambuf_iterator<char>());
}

// Boundary metric of the 3x3 grid; doubles as reconstruction input.
const char* kGridBoundaryCsv =
    "0_0,0_1,0_2,1_0,1_2,2_0,2_1,2_2\n"
    "0,1,2,1,3,2,3,4\n"
    "1,0,1,2,2,3,2,3\n"
    "2,1,0,3,1,4,3,2\n"
    "1,2,3,0,2,1,2,3\n"
    "3,2,1,2,0,3,2,1\n"
    "2,3,4,1,3,0,1,2\n"
    "3,2,3,2,2,1,0,1\n"
    "4,3,2,3,1,2,1,0\n";

std::string grid_json_path() {
  static const std::string path = [] {
    Run gen = run_cli("gen --family grid --params 3x3");
    REQUIRE(gen.code == 0);
    return write_scratch("g33.json", gen.out);
  }();
  return path;
}

}  // namespace

TEST_CASE("gen writes the graph JSON to stdout") {
  Run r = run_cli("gen --family grid --params 3x3");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 9);
  CHECK(j["edges"].size() == 12);
  CHECK(j["labels"][8] == "2_2");

  CHECK(run_cli("gen --family grid --params 3x3").out == r.out);

  Run tree = run_cli("gen --family tree --params 10 --seed 7");
  REQUIRE(tree.code == 0);
  CHECK(nlohmann::json::parse(tree.out)["edges"].size() == 9);
}

TEST_CASE("usage errors exit 2 and help exits 0") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("gen").code == 2);  // --family is required
  CHECK(run_cli("gen --family petersen").code == 2);
  CHECK(run_cli("gen --family grid --bogus 1").code == 2);
  CHECK(run_cli("boundary --graph x.json --mode sideways").code == 2);

  Run help = run_cli("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("reconstruct") != std::string::npos);
}

TEST_CASE("domain errors exit 1 with a diagnostic") {
  Run r = run_cli("gen --family grid --params 0x3");
  CHECK(r.code == 1);
  CHECK(r.out.find("error: gen: InvalidArgument:") != std::string::npos);

  Run missing = run_cli("complex --graph /nonexistent/graph.json");
  CHECK(missing.code == 1);
  CHECK(missing.out.find("cannot access") != std::string::npos);

  std::string bad = write_scratch("bad.csv", "a,b,c\n0,1,5\n1,0,1\n5,1,0\n");
  Run rec = run_cli("reconstruct --matrix '" + bad + "'");
  CHECK(rec.code == 1);
  CHECK(rec.out.find("MalformedMatrix") != std::string::npos);
  CHECK(rec.out.find("triangle inequality") != std::string::npos);
}

TEST_CASE("complex prints the cube complex") {
  Run r = run_cli("complex --graph '" + grid_json_path() + "'");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["cells"].size() == 3);
  CHECK(j["cells"][0].size() == 9);
  CHECK(j["cells"][1].size() == 12);
  CHECK(j["cells"][2].size() == 4);
  for (const auto& cell : j["cells"][2]) {
    CHECK(cell["maximal"] == true);
  }
}

TEST_CASE("boundary prints CSV by default and JSON on request") {
  Run csv = run_cli("boundary --graph '" + grid_json_path() + "'");
  REQUIRE(csv.code == 0);
  CHECK(csv.out == kGridBoundaryCsv);

  Run js = run_cli("boundary --graph '" + grid_json_path() +
                   "' --format json --mode dimension-based");
  REQUIRE(js.code == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["mode"] == "dimension-based");
  CHECK(j["vertices"].size() == 8);
}

TEST_CASE("reconstruct prints the graph and writes the trace file") {
  std::string matrix = write_scratch("b33.csv", kGridBoundaryCsv);
  std::string trace = (scratch_dir() / "t33.jsonl").string();

  Run r = run_cli("reconstruct --matrix '" + matrix + "' --trace '" + trace +
                  "'");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 9);
  CHECK(j["edges"].size() == 12);

  std::string t = read_all(trace);
  CHECK(std::count(t.begin(), t.end(), '\n') == 9);
  CHECK(t.find("\"u_i\":\"aux:0\"") != std::string::npos);
  CHECK(t.find("{\"step\":9,\"terminal\":true,\"v_i\":\"0_0\"}\n") !=
        std::string::npos);
  // The trace goes to the file, never to stdout.
  CHECK(r.out.find("u_i") == std::string::npos);

  Run based = run_cli("reconstruct --matrix '" + matrix +
                      "' --basepoint 2_2");
  CHECK(based.code == 0);
  CHECK(nlohmann::json::parse(based.out)["n"] == 9);

  Run bad = run_cli("reconstruct --matrix '" + matrix + "' --basepoint nope");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("InvalidArgument") != std::string::npos);
}

TEST_CASE("verify audits a graph against itself") {
  Run ok = run_cli("verify --original '" + grid_json_path() + "'");
  REQUIRE(ok.code == 0);
  auto j = nlohmann::json::parse(ok.out);
  CHECK(j["ok"] == true);
  CHECK(j["steps"] == 9);
  CHECK(j["mode"] == "facet-unique");

  Run gen = run_cli("gen --family q3_minus --params 1");
  REQUIRE(gen.code == 0);
  std::string path = write_scratch("q3even.json", gen.out);
  Run fail = run_cli("verify --original '" + path + "'");
  CHECK(fail.code == 1);
  auto jf = nlohmann::json::parse(fail.out);
  CHECK(jf["ok"] == false);
  CHECK(!jf["issues"].empty());
}

TEST_CASE("roundtrip composes the pipeline") {
  Run r = run_cli("roundtrip --family grid --params 3,3");
  CHECK(r.code == 0);
  CHECK(r.out == "ISOMORPHIC (fixing 8 boundary vertices)\n");

  Run tree = run_cli(
      "roundtrip --family tree --params 12 --seed 4 --mode dimension-based");
  CHECK(tree.code == 0);
  CHECK(tree.out.find("ISOMORPHIC") == 0);
}

TEST_CASE("demo-q3minus tells the whole story") {
  Run r = run_cli("demo-q3minus");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("identity on v1..v6 matches matrices: yes") !=
        std::string::npos);
  CHECK(r.out.find("rotation v_i -> v_{i+1} matches matrices: yes") !=
        std::string::npos);
  CHECK(r.out.find(
            "boundary matrices isometric; no extending isomorphism exists") !=
        std::string::npos);
}
