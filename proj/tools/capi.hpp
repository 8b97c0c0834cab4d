#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "vcolor/vcolor.h"

namespace cli {

// Carries the process exit code out of a command.
struct CliError : std::runtime_error {
  CliError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNonConvergence = 2;
inline constexpr int kExitInternal = 3;

inline int exit_code_for(vc_status s) {
  switch (s) {
    case VC_OK: return kExitOk;
    case VC_ERR_INPUT:
    case VC_ERR_INVALID_ARGUMENT:
    case VC_ERR_SIZE_LIMIT: return kExitInput;
    case VC_ERR_NONCONVERGENCE:
    case VC_ERR_NUMERICAL: return kExitNonConvergence;
    default: return kExitInternal;
  }
}

inline void check(vc_status s) {
  if (s != VC_OK) throw CliError(exit_code_for(s), vc_last_error());
}

// Copies and releases a library-owned string.
inline std::string take(char* s) {
  std::string out = s ? s : "";
  vc_string_free(s);
  return out;
}

struct GraphFree {
  void operator()(vc_graph* g) const { vc_graph_free(g); }
};
struct VectorsFree {
  void operator()(vc_vectors* v) const { vc_vectors_free(v); }
};
struct ColoringFree {
  void operator()(vc_coloring* c) const { vc_coloring_free(c); }
};

using GraphPtr = std::unique_ptr<vc_graph, GraphFree>;
using VectorsPtr = std::unique_ptr<vc_vectors, VectorsFree>;
using ColoringPtr = std::unique_ptr<vc_coloring, ColoringFree>;

}  // namespace cli
