// Command-line front end over the medrec C API: graph generation, cube
// complexes, boundary extraction, reconstruction from a boundary metric,
// auditing against an original, one-shot roundtrips, and the Q3-minus
// non-rigidity demo. Exit codes: 0 success, 1 domain error, 2 usage error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "medrec/medrec.h"

namespace {

struct CString {
  char* ptr = nullptr;
  ~CString() { medrec_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct GraphHandle {
  medrec_graph* ptr = nullptr;
  ~GraphHandle() { medrec_graph_free(ptr); }
};

int fail(const std::string& stage, medrec_status st) {
  std::cerr << "error: " << stage << ": " << medrec_status_name(st) << ": "
            << medrec_last_error_message() << "\n";
  return 1;
}

int fail_io(const std::string& stage, const std::string& path) {
  std::cerr << "error: " << stage << ": cannot access " << path << "\n";
  return 1;
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  out.flush();
  return static_cast<bool>(out);
}

// First CSV row = the boundary labels.
std::vector<std::string> csv_header(const std::string& csv) {
  std::vector<std::string> labels;
  std::string line = csv.substr(0, csv.find('\n'));
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      labels.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) labels.push_back(cur);
  return labels;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

// {"a":"b",...} from parallel label lists.
std::string label_map_json(const std::vector<std::string>& from,
                           const std::vector<std::string>& to) {
  std::string out = "{";
  for (size_t i = 0; i < from.size(); ++i) {
    if (i) out += ",";
    out += "\"" + json_escape(from[i]) + "\":\"" + json_escape(to[i]) + "\"";
  }
  out += "}";
  return out;
}

int run_gen(const std::string& family, const std::string& params,
            std::uint64_t seed) {
  GraphHandle g;
  if (auto st = medrec_generate(family.c_str(), params.c_str(), seed, &g.ptr)) {
    return fail("gen", st);
  }
  CString json;
  if (auto st = medrec_graph_to_json(g.ptr, &json.ptr)) return fail("gen", st);
  std::cout << json.str() << "\n";
  return 0;
}

int run_complex(const std::string& graph_path) {
  std::string text;
  if (!read_file(graph_path, &text)) return fail_io("complex", graph_path);
  GraphHandle g;
  if (auto st = medrec_graph_from_json(text.c_str(), &g.ptr)) {
    return fail("complex: load graph", st);
  }
  CString json;
  if (auto st = medrec_complex_json(g.ptr, &json.ptr)) {
    return fail("complex", st);
  }
  std::cout << json.str() << "\n";
  return 0;
}

int run_boundary(const std::string& graph_path, const std::string& mode,
                 const std::string& format) {
  std::string text;
  if (!read_file(graph_path, &text)) return fail_io("boundary", graph_path);
  GraphHandle g;
  if (auto st = medrec_graph_from_json(text.c_str(), &g.ptr)) {
    return fail("boundary: load graph", st);
  }
  CString out;
  if (format == "json") {
    if (auto st = medrec_boundary_json(g.ptr, mode.c_str(), &out.ptr)) {
      return fail("boundary", st);
    }
    std::cout << out.str() << "\n";
  } else {
    if (auto st = medrec_boundary_csv(g.ptr, mode.c_str(), &out.ptr)) {
      return fail("boundary", st);
    }
    std::cout << out.str();
  }
  return 0;
}

int run_reconstruct(const std::string& matrix_path,
                    const std::string& basepoint,
                    const std::string& trace_path) {
  std::string csv;
  if (!read_file(matrix_path, &csv)) return fail_io("reconstruct", matrix_path);
  GraphHandle g;
  CString trace;
  auto st = medrec_reconstruct(csv.c_str(),
                               basepoint.empty() ? nullptr : basepoint.c_str(),
                               &g.ptr, trace_path.empty() ? nullptr : &trace.ptr);
  if (st) return fail("reconstruct", st);
  if (!trace_path.empty() && !write_file(trace_path, trace.str())) {
    return fail_io("reconstruct: write trace", trace_path);
  }
  CString json;
  if (auto st2 = medrec_graph_to_json(g.ptr, &json.ptr)) {
    return fail("reconstruct", st2);
  }
  std::cout << json.str() << "\n";
  return 0;
}

int run_verify(const std::string& graph_path, const std::string& mode) {
  std::string text;
  if (!read_file(graph_path, &text)) return fail_io("verify", graph_path);
  GraphHandle g;
  if (auto st = medrec_graph_from_json(text.c_str(), &g.ptr)) {
    return fail("verify: load graph", st);
  }
  int ok = 0;
  CString report;
  if (auto st = medrec_audit(g.ptr, mode.c_str(), &ok, &report.ptr)) {
    return fail("verify", st);
  }
  std::cout << report.str() << "\n";
  return ok ? 0 : 1;
}

int run_roundtrip(const std::string& family, const std::string& params,
                  std::uint64_t seed, const std::string& mode) {
  GraphHandle original;
  if (auto st = medrec_generate(family.c_str(), params.c_str(), seed,
                                &original.ptr)) {
    return fail("roundtrip: gen", st);
  }
  CString csv;
  if (auto st = medrec_boundary_csv(original.ptr, mode.c_str(), &csv.ptr)) {
    return fail("roundtrip: boundary", st);
  }
  GraphHandle rebuilt;
  if (auto st = medrec_reconstruct(csv.str().c_str(), nullptr, &rebuilt.ptr,
                                   nullptr)) {
    return fail("roundtrip: reconstruct", st);
  }
  auto labels = csv_header(csv.str());
  std::string sigma = label_map_json(labels, labels);
  int found = 0;
  if (auto st = medrec_isomorphism_extending(rebuilt.ptr, original.ptr,
                                             sigma.c_str(), &found, nullptr)) {
    return fail("roundtrip: isomorphism", st);
  }
  if (!found) {
    std::cout << "NOT ISOMORPHIC (" << labels.size()
              << " boundary vertices)\n";
    return 1;
  }
  std::cout << "ISOMORPHIC (fixing " << labels.size()
            << " boundary vertices)\n";
  return 0;
}

int run_demo_q3minus() {
  GraphHandle odd, even;
  CString labels_json;
  if (auto st = medrec_q3_minus(&odd.ptr, &even.ptr, &labels_json.ptr)) {
    return fail("demo-q3minus", st);
  }
  CString odd_json, even_json;
  if (auto st = medrec_graph_to_json(odd.ptr, &odd_json.ptr)) {
    return fail("demo-q3minus", st);
  }
  if (auto st = medrec_graph_to_json(even.ptr, &even_json.ptr)) {
    return fail("demo-q3minus", st);
  }
  CString odd_csv, even_csv;
  if (auto st = medrec_boundary_csv(odd.ptr, "facet-unique", &odd_csv.ptr)) {
    return fail("demo-q3minus: boundary", st);
  }
  if (auto st = medrec_boundary_csv(even.ptr, "facet-unique", &even_csv.ptr)) {
    return fail("demo-q3minus: boundary", st);
  }

  std::cout << "G' (hub v0 adjacent to v1,v3,v5): " << odd_json.str() << "\n";
  std::cout << "G'' (hub v0 adjacent to v2,v4,v6): " << even_json.str() << "\n";
  std::cout << "boundary matrix of G' over the 6-cycle:\n" << odd_csv.str();
  std::cout << "boundary matrix of G'' over the 6-cycle:\n" << even_csv.str();

  int equal_identity = 0;
  if (auto st = medrec_matrix_permuted_equal(odd_csv.str().c_str(),
                                             even_csv.str().c_str(), nullptr,
                                             &equal_identity)) {
    return fail("demo-q3minus: compare", st);
  }
  auto labels = csv_header(odd_csv.str());
  std::vector<std::string> rotated(labels.begin() + 1, labels.end());
  rotated.push_back(labels.front());
  std::string rotation = label_map_json(labels, rotated);
  int equal_rotated = 0;
  if (auto st = medrec_matrix_permuted_equal(odd_csv.str().c_str(),
                                             even_csv.str().c_str(),
                                             rotation.c_str(),
                                             &equal_rotated)) {
    return fail("demo-q3minus: compare", st);
  }
  std::string sigma = label_map_json(labels, labels);
  int found = 0;
  if (auto st = medrec_isomorphism_extending(odd.ptr, even.ptr, sigma.c_str(),
                                             &found, nullptr)) {
    return fail("demo-q3minus: isomorphism", st);
  }

  std::cout << "identity on v1..v6 matches matrices: "
            << (equal_identity ? "yes" : "no") << "\n";
  std::cout << "rotation v_i -> v_{i+1} matches matrices: "
            << (equal_rotated ? "yes" : "no") << "\n";
  if (equal_identity && equal_rotated && !found) {
    std::cout << "boundary matrices isometric; no extending isomorphism "
                 "exists\n";
    return 0;
  }
  std::cout << "demo failed: "
            << (found ? "an extending isomorphism exists"
                      : "boundary matrices differ")
            << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"median-graph reconstruction from boundary distances"};
  app.require_subcommand(1);

  const std::vector<std::string> families = {"hypercube", "grid",
                                             "tree",      "product",
                                             "median_closure", "q3_minus"};
  const std::vector<std::string> modes = {"facet-unique", "dimension-based"};

  std::string family, params, graph_path, matrix_path, basepoint, trace_path;
  std::string mode = "facet-unique";
  std::string format = "csv";
  std::uint64_t seed = 0;

  auto* gen = app.add_subcommand("gen", "generate a graph family as JSON");
  gen->add_option("--family", family, "graph family")
      ->required()
      ->check(CLI::IsMember(families));
  gen->add_option("--params", params, "family parameters");
  gen->add_option("--seed", seed, "seed for randomized families");

  auto* complex =
      app.add_subcommand("complex", "cube complex of a graph as JSON");
  complex->add_option("--graph", graph_path, "graph JSON file")->required();

  auto* boundary = app.add_subcommand(
      "boundary", "combinatorial boundary: distance CSV or cell JSON");
  boundary->add_option("--graph", graph_path, "graph JSON file")->required();
  boundary->add_option("--mode", mode, "boundary definition")
      ->check(CLI::IsMember(modes));
  boundary->add_option("--format", format, "csv (default) or json")
      ->check(CLI::IsMember(std::vector<std::string>{"csv", "json"}));

  auto* reconstruct =
      app.add_subcommand("reconstruct", "rebuild a graph from a distance CSV");
  reconstruct->add_option("--matrix", matrix_path, "distance CSV file")
      ->required();
  reconstruct->add_option("--basepoint", basepoint,
                          "basepoint label (default: first)");
  reconstruct->add_option("--trace", trace_path,
                          "write the step trace to this file as JSON lines");

  auto* verify = app.add_subcommand(
      "verify", "audit reconstruction of a graph against itself");
  verify->add_option("--original", graph_path, "graph JSON file")->required();
  verify->add_option("--mode", mode, "boundary definition")
      ->check(CLI::IsMember(modes));

  auto* roundtrip = app.add_subcommand(
      "roundtrip", "gen + boundary + reconstruct + isomorphism check");
  roundtrip->add_option("--family", family, "graph family")
      ->required()
      ->check(CLI::IsMember(families));
  roundtrip->add_option("--params", params, "family parameters");
  roundtrip->add_option("--seed", seed, "seed for randomized families");
  roundtrip->add_option("--mode", mode, "boundary definition")
      ->check(CLI::IsMember(modes));

  auto* demo = app.add_subcommand(
      "demo-q3minus", "two complexes sharing a boundary metric");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*gen) return run_gen(family, params, seed);
  if (*complex) return run_complex(graph_path);
  if (*boundary) return run_boundary(graph_path, mode, format);
  if (*reconstruct) return run_reconstruct(matrix_path, basepoint, trace_path);
  if (*verify) return run_verify(graph_path, mode);
  if (*roundtrip) return run_roundtrip(family, params, seed, mode);
  if (*demo) return run_demo_q3minus();
  return 2;
}
