#include "io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace medrec {

using nlohmann::json;

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  auto edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.raw_labels();
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("invalid graph JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
      throw Error(ErrorCode::Parse,
                  "graph JSON needs an object with 'n' and 'edges'");
    }
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::Parse, "each edge must be a pair [u, v]");
      }
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    }
    return Graph(n, std::move(edges), std::move(labels));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("invalid graph JSON: ") + e.what());
  }
}

std::string complex_to_json(const CellComplex& cx) {
  json j;
  j["dim"] = cx.dim();
  auto by_dim = json::array();
  for (int d = 0; d <= cx.dim(); ++d) {
    auto cells = json::array();
    for (int i = 0; i < static_cast<int>(cx.cells(d).size()); ++i) {
      const Cube& c = cx.cells(d)[i];
      json cell;
      cell["vertices"] = c.vertices();
      cell["maximal"] = cx.maximal(d, i);
      cell["coface_count"] = cx.coface_count(d, i);
      cells.push_back(std::move(cell));
    }
    by_dim.push_back(std::move(cells));
  }
  j["cells"] = std::move(by_dim);
  return j.dump();
}

std::string boundary_to_json(const CellComplex& cx, const BoundarySpec& spec,
                             const Graph& g) {
  json j;
  j["mode"] = boundary_mode_name(spec.mode);
  j["vertices"] = spec.vertices;
  auto labels = json::array();
  for (int v : spec.vertices) labels.push_back(g.label(v));
  j["labels"] = std::move(labels);
  auto by_dim = json::array();
  for (size_t d = 0; d < spec.cell_indices.size(); ++d) {
    auto cells = json::array();
    for (int i : spec.cell_indices[d]) {
      cells.push_back(cx.cells(static_cast<int>(d))[i].vertices());
    }
    by_dim.push_back(std::move(cells));
  }
  j["cells"] = std::move(by_dim);
  return j.dump();
}

std::string trace_to_jsonl(const std::vector<StepRecord>& trace) {
  std::string out;
  for (const auto& rec : trace) {
    json j;
    j["step"] = rec.step;
    j["v_i"] = rec.v;
    if (rec.terminal) {
      j["terminal"] = true;
    } else {
      j["L_i"] = rec.L;
      j["cube_levels"] = rec.cube_levels;
      j["N_i"] = rec.N;
      j["u_i"] = rec.u ? json(*rec.u) : json(nullptr);
      j["u_i_new"] = rec.u_new;
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string audit_to_json(const AuditReport& report) {
  json j;
  j["ok"] = report.ok;
  j["mode"] = boundary_mode_name(report.mode);
  j["graph_vertices"] = report.graph_vertices;
  j["boundary_size"] = report.boundary_size;
  j["steps"] = report.steps;
  j["created"] = report.created;
  j["isomorphic"] = report.isomorphic;
  auto issues = json::array();
  for (const auto& issue : report.issues) {
    issues.push_back({{"step", issue.step}, {"message", issue.message}});
  }
  j["issues"] = std::move(issues);
  return j.dump();
}

std::string map_to_json(const Graph& a, const Graph& b,
                        const std::vector<int>& map_ab) {
  json j = json::object();
  for (int v = 0; v < a.vertex_count(); ++v) {
    j[a.label(v)] = b.label(map_ab[v]);
  }
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::Parse, "cannot open file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::Parse, "cannot write file: " + path);
  }
  out << content;
  out.flush();
  if (!out) {
    throw Error(ErrorCode::Parse, "failed writing file: " + path);
  }
}

}  // namespace medrec
