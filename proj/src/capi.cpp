#include "medrec/medrec.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "boundary.hpp"
#include "cubes.hpp"
#include "generate.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "json.hpp"
#include "reconstruct.hpp"
#include "verify.hpp"

struct medrec_graph {
  medrec::Graph g;
};

namespace {

thread_local std::string t_error;

medrec_status status_of(medrec::ErrorCode code) {
  using medrec::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return MEDREC_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return MEDREC_ERR_PARSE;
    case ErrorCode::InvalidGraph: return MEDREC_ERR_INVALID_GRAPH;
    case ErrorCode::MalformedMatrix: return MEDREC_ERR_MALFORMED_MATRIX;
    case ErrorCode::AmbiguousCompletion: return MEDREC_ERR_AMBIGUOUS_COMPLETION;
    case ErrorCode::IsolatedNonBase: return MEDREC_ERR_ISOLATED_NON_BASE;
    case ErrorCode::NotMedian: return MEDREC_ERR_NOT_MEDIAN;
    case ErrorCode::NoGate: return MEDREC_ERR_NO_GATE;
    case ErrorCode::NotInCube: return MEDREC_ERR_NOT_IN_CUBE;
    case ErrorCode::SizeMismatch: return MEDREC_ERR_SIZE_MISMATCH;
    case ErrorCode::NotPermutation: return MEDREC_ERR_NOT_PERMUTATION;
    case ErrorCode::Verification: return MEDREC_ERR_VERIFICATION;
    case ErrorCode::Internal: return MEDREC_ERR_INTERNAL;
  }
  return MEDREC_ERR_UNKNOWN;
}

// Runs fn, translating C++ exceptions into statuses plus the thread-local
// error message.
template <typename Fn>
medrec_status guarded(Fn&& fn) {
  try {
    fn();
    t_error.clear();
    return MEDREC_OK;
  } catch (const medrec::Error& e) {
    t_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_error = e.what();
    return MEDREC_ERR_UNKNOWN;
  } catch (...) {
    t_error = "unknown error";
    return MEDREC_ERR_UNKNOWN;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) std::abort();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

medrec_status require(bool cond, const char* message) {
  if (cond) return MEDREC_OK;
  t_error = message;
  return MEDREC_ERR_INVALID_ARGUMENT;
}

medrec::PartialMap sigma_from_json(const char* sigma_json) {
  medrec::PartialMap sigma;
  if (!sigma_json || !*sigma_json) return sigma;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(sigma_json);
  } catch (const nlohmann::json::exception& e) {
    throw medrec::Error(medrec::ErrorCode::Parse,
                        std::string("invalid map JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw medrec::Error(medrec::ErrorCode::Parse,
                        "map JSON must be an object of label pairs");
  }
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) {
      throw medrec::Error(medrec::ErrorCode::Parse,
                          "map JSON values must be strings");
    }
    sigma.pairs.emplace_back(key, value.get<std::string>());
  }
  return sigma;
}

}  // namespace

extern "C" {

const char* medrec_version(void) { return "0.1.0"; }

const char* medrec_status_name(medrec_status status) {
  switch (status) {
    case MEDREC_OK: return "ok";
    case MEDREC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case MEDREC_ERR_PARSE: return "Parse";
    case MEDREC_ERR_INVALID_GRAPH: return "InvalidGraph";
    case MEDREC_ERR_MALFORMED_MATRIX: return "MalformedMatrix";
    case MEDREC_ERR_AMBIGUOUS_COMPLETION: return "AmbiguousCompletion";
    case MEDREC_ERR_ISOLATED_NON_BASE: return "IsolatedNonBase";
    case MEDREC_ERR_NOT_MEDIAN: return "NotMedian";
    case MEDREC_ERR_NO_GATE: return "NoGate";
    case MEDREC_ERR_NOT_IN_CUBE: return "NotInCube";
    case MEDREC_ERR_SIZE_MISMATCH: return "SizeMismatch";
    case MEDREC_ERR_NOT_PERMUTATION: return "NotPermutation";
    case MEDREC_ERR_VERIFICATION: return "Verification";
    case MEDREC_ERR_INTERNAL: return "Internal";
    case MEDREC_ERR_UNKNOWN: return "Unknown";
  }
  return "Unknown";
}

const char* medrec_last_error_message(void) { return t_error.c_str(); }

void medrec_string_free(char* s) { std::free(s); }

void medrec_graph_free(medrec_graph* g) { delete g; }

medrec_status medrec_graph_from_json(const char* json_text,
                                     medrec_graph** out) {
  if (auto st = require(json_text && out, "null argument")) return st;
  return guarded([&] {
    *out = new medrec_graph{medrec::graph_from_json(json_text)};
  });
}

medrec_status medrec_graph_to_json(const medrec_graph* g, char** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(medrec::graph_to_json(g->g)); });
}

int medrec_graph_vertex_count(const medrec_graph* g) {
  return g ? g->g.vertex_count() : -1;
}

int medrec_graph_edge_count(const medrec_graph* g) {
  return g ? g->g.edge_count() : -1;
}

medrec_status medrec_generate(const char* family, const char* params,
                              uint64_t seed, medrec_graph** out) {
  if (auto st = require(family && params && out, "null argument")) return st;
  return guarded([&] {
    medrec::GenSpec spec{family, params, seed};
    *out = new medrec_graph{medrec::generate(spec)};
  });
}

medrec_status medrec_is_median(const medrec_graph* g, int* out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = medrec::check_median(g->g).is_median ? 1 : 0; });
}

medrec_status medrec_complex_json(const medrec_graph* g, char** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] {
    auto cx = medrec::enumerate_cubes(g->g);
    *out = copy_string(medrec::complex_to_json(cx));
  });
}

medrec_status medrec_boundary_json(const medrec_graph* g, const char* mode,
                                   char** out) {
  if (auto st = require(g && mode && out, "null argument")) return st;
  return guarded([&] {
    auto m = medrec::parse_boundary_mode(mode);
    auto cx = medrec::enumerate_cubes(g->g);
    auto spec = medrec::boundary_cells(cx, m);
    *out = copy_string(medrec::boundary_to_json(cx, spec, g->g));
  });
}

medrec_status medrec_boundary_csv(const medrec_graph* g, const char* mode,
                                  char** out) {
  if (auto st = require(g && mode && out, "null argument")) return st;
  return guarded([&] {
    auto m = medrec::parse_boundary_mode(mode);
    *out = copy_string(medrec::boundary_distance_matrix(g->g, m).to_csv());
  });
}

medrec_status medrec_reconstruct(const char* matrix_csv, const char* basepoint,
                                 medrec_graph** out_graph,
                                 char** out_trace_jsonl) {
  if (auto st = require(matrix_csv && out_graph, "null argument")) return st;
  return guarded([&] {
    auto matrix = medrec::DistanceMatrix::from_csv(matrix_csv);
    std::optional<std::string> base;
    if (basepoint && *basepoint) base = basepoint;
    std::vector<medrec::StepRecord> trace;
    medrec::Graph g = medrec::reconstruct(matrix, base, &trace);
    *out_graph = new medrec_graph{std::move(g)};
    if (out_trace_jsonl) {
      *out_trace_jsonl = copy_string(medrec::trace_to_jsonl(trace));
    }
  });
}

medrec_status medrec_audit(const medrec_graph* g, const char* mode,
                           int* out_ok, char** out_report_json) {
  if (auto st = require(g && mode && out_ok, "null argument")) return st;
  return guarded([&] {
    auto m = medrec::parse_boundary_mode(mode);
    auto report = medrec::audit_reconstruction(g->g, m);
    *out_ok = report.ok ? 1 : 0;
    if (out_report_json) {
      *out_report_json = copy_string(medrec::audit_to_json(report));
    }
  });
}

medrec_status medrec_isomorphism_extending(const medrec_graph* a,
                                           const medrec_graph* b,
                                           const char* sigma_json,
                                           int* out_found,
                                           char** out_map_json) {
  if (auto st = require(a && b && out_found, "null argument")) return st;
  return guarded([&] {
    auto sigma = sigma_from_json(sigma_json);
    auto iso = medrec::isomorphism_extending(a->g, b->g, sigma);
    *out_found = iso ? 1 : 0;
    if (out_map_json) {
      *out_map_json =
          copy_string(iso ? medrec::map_to_json(a->g, b->g, *iso) : "null");
    }
  });
}

medrec_status medrec_q3_minus(medrec_graph** out_odd, medrec_graph** out_even,
                              char** out_boundary_labels_json) {
  if (auto st = require(out_odd && out_even, "null argument")) return st;
  return guarded([&] {
    auto pair = medrec::q3_minus();
    *out_odd = new medrec_graph{std::move(pair.g_odd)};
    *out_even = new medrec_graph{std::move(pair.g_even)};
    if (out_boundary_labels_json) {
      *out_boundary_labels_json =
          copy_string(nlohmann::json(pair.boundary_labels).dump());
    }
  });
}

medrec_status medrec_matrix_permuted_equal(const char* csv_a,
                                           const char* csv_b,
                                           const char* perm_json,
                                           int* out_equal) {
  if (auto st = require(csv_a && csv_b && out_equal, "null argument")) return st;
  return guarded([&] {
    auto a = medrec::DistanceMatrix::from_csv(csv_a);
    auto b = medrec::DistanceMatrix::from_csv(csv_b);
    *out_equal = 0;
    if (a.size() != b.size()) return;
    auto sigma = sigma_from_json(perm_json);
    // to_b[i] = index in b of the image of a's i-th label.
    std::vector<int> to_b(a.size(), -1);
    if (sigma.pairs.empty()) {
      for (int i = 0; i < a.size(); ++i) {
        auto idx = b.index_of(a.labels()[i]);
        if (!idx) return;
        to_b[i] = *idx;
      }
    } else {
      for (const auto& [la, lb] : sigma.pairs) {
        auto ia = a.index_of(la);
        auto ib = b.index_of(lb);
        if (!ia || !ib) {
          throw medrec::Error(medrec::ErrorCode::InvalidArgument,
                              "permutation mentions unknown label '" +
                                  (ia ? lb : la) + "'");
        }
        to_b[*ia] = *ib;
      }
      for (int i = 0; i < a.size(); ++i) {
        if (to_b[i] < 0) return;  // not a full relabeling: not comparable
      }
    }
    std::vector<char> hit(b.size(), 0);
    for (int i = 0; i < a.size(); ++i) {
      if (hit[to_b[i]]) {
        throw medrec::Error(medrec::ErrorCode::NotPermutation,
                            "label map is not injective");
      }
      hit[to_b[i]] = 1;
    }
    for (int i = 0; i < a.size(); ++i) {
      for (int j = 0; j < a.size(); ++j) {
        if (a.at(i, j) != b.at(to_b[i], to_b[j])) return;
      }
    }
    *out_equal = 1;
  });
}

}  // extern "C"
