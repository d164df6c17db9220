// Structured errors shared by all medrec modules.
#pragma once

#include <stdexcept>
#include <string>

namespace medrec {

enum class ErrorCode {
  InvalidArgument,      // bad parameters, out-of-range sizes, unknown family
  Parse,                // unreadable JSON input
  InvalidGraph,         // loops, duplicate edges, out-of-range ids, disconnected
  MalformedMatrix,      // asymmetry, negative entries, nonzero diagonal, triangle violation
  AmbiguousCompletion,  // quadrangle completion found zero/multiple candidates below the top level
  IsolatedNonBase,      // defensive: a non-basepoint vertex with no usable neighbor information
  NotMedian,            // cube closure failed; input graph violates the median property
  NoGate,               // no gate exists (target set not gated in this graph)
  NotInCube,            // vertex not a member of the given cube
  SizeMismatch,         // isomorphism requested between graphs of different order
  NotPermutation,       // peeling order is not a permutation of the vertex set
  Verification,         // an audit or verification check failed
  Internal,             // invariant broken inside the library itself
};

// All fallible operations throw Error; the C API translates code() into a status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace medrec
