#ifndef VCOLOR_H
#define VCOLOR_H

/* C interface to the vector-coloring library. Every fallible call returns a
 * vc_status; on failure vc_last_error() describes the problem (thread-local).
 * Strings handed out through char** must be released with vc_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define VC_API __declspec(dllexport)
#else
#define VC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vc_status {
  VC_OK = 0,
  VC_ERR_INPUT = 1,
  VC_ERR_NONCONVERGENCE = 2,
  VC_ERR_CONTRACT = 3,
  VC_ERR_INVALID_ARGUMENT = 4,
  VC_ERR_SIZE_LIMIT = 5,
  VC_ERR_NUMERICAL = 6,
  VC_ERR_INTERNAL = 7
} vc_status;

typedef struct vc_graph vc_graph;
typedef struct vc_vectors vc_vectors;
typedef struct vc_coloring vc_coloring;

VC_API const char* vc_version(void);
VC_API const char* vc_last_error(void);
VC_API void vc_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

/* warnings (nullable) receives a JSON array of strings. */
VC_API vc_status vc_graph_parse_dimacs(const char* text, size_t len, vc_graph** out, char** warnings);
VC_API vc_status vc_graph_read_dimacs(const char* path, vc_graph** out, char** warnings);
/* pairs holds 2*m 0-based endpoints. */
VC_API vc_status vc_graph_from_edges(size_t n, const uint32_t* pairs, size_t m, vc_graph** out);
/* hidden (nullable) must hold n entries. */
VC_API vc_status vc_graph_planted(size_t n, size_t k, double p, uint64_t seed, vc_graph** out, uint32_t* hidden);
VC_API vc_status vc_graph_kneser(uint32_t m, uint32_t r, uint32_t t, vc_graph** out);
VC_API vc_status vc_graph_emit_dimacs(const vc_graph* g, char** out);
VC_API size_t vc_graph_vertex_count(const vc_graph* g);
VC_API size_t vc_graph_edge_count(const vc_graph* g);
VC_API size_t vc_graph_max_degree(const vc_graph* g);
/* pairs must hold 2 * edge_count entries. */
VC_API vc_status vc_graph_edges(const vc_graph* g, uint32_t* pairs);
VC_API void vc_graph_free(vc_graph* g);

/* ---- solver ------------------------------------------------------------ */

typedef struct vc_solver_config {
  double feasibility_tol;
  double objective_tol;
  size_t max_iterations;
  uint64_t seed;
  size_t restarts;
  size_t max_rank; /* 0 = automatic */
} vc_solver_config;

VC_API void vc_solver_config_default(vc_solver_config* cfg);

typedef struct vc_solve_info {
  double k_value;
  double alpha;
  double vector_k_value;
  double feasibility_residual;
  int converged;
  size_t iterations;
  size_t rank;
} vc_solve_info;

/* Non-convergence is reported through info->converged, not the status. */
VC_API vc_status vc_solve(const vc_graph* g, const vc_solver_config* cfg, int strict, vc_vectors** out,
                          vc_solve_info* info);
/* {"n","k_value","alpha","vectors",...} */
VC_API vc_status vc_vectors_json(const vc_vectors* v, char** out);
VC_API size_t vc_vectors_count(const vc_vectors* v);
VC_API size_t vc_vectors_dim(const vc_vectors* v);
/* Row-major copy; out must hold count * dim doubles. */
VC_API vc_status vc_vectors_copy(const vc_vectors* v, double* out);
VC_API void vc_vectors_free(vc_vectors* v);

typedef struct vc_theta_info {
  double theta;
  double dual_value;
  double mu;
  int converged;
  size_t newton_steps;
} vc_theta_info;

VC_API vc_status vc_theta(const vc_graph* g, const vc_solver_config* cfg, vc_theta_info* info);

/* ---- rounding ---------------------------------------------------------- */

typedef enum vc_method { VC_METHOD_AUTO = 0, VC_METHOD_HYPERPLANE = 1, VC_METHOD_PROJECTION = 2 } vc_method;

typedef struct vc_rounding_config {
  vc_method method;
  uint64_t seed;
  size_t hyperplane_count;      /* 0 = automatic */
  size_t trials_per_extraction; /* 0 = max(20, ceil(10 ln n)) */
  double wigderson_delta;       /* <= 0 = method default */
  size_t greedy_delta_floor;
  int wigderson;                /* 0 disables the degree reduction */
  vc_solver_config solver;      /* used by vc_color_graph */
} vc_rounding_config;

VC_API void vc_rounding_config_default(vc_rounding_config* cfg);

VC_API vc_status vc_color_graph(const vc_graph* g, const vc_rounding_config* cfg, vc_coloring** out);
VC_API vc_status vc_color_with_vectors(const vc_graph* g, const vc_vectors* v, const vc_rounding_config* cfg,
                                       vc_coloring** out);
VC_API size_t vc_coloring_colors_used(const vc_coloring* c);
/* out must hold vertex_count entries. */
VC_API vc_status vc_coloring_assignment(const vc_coloring* c, uint32_t* out);
VC_API vc_status vc_coloring_stats_json(const vc_coloring* c, char** out);
/* `v <vertex_1based> <color>` lines. */
VC_API vc_status vc_coloring_text(const vc_coloring* c, char** out);
VC_API void vc_coloring_free(vc_coloring* c);

/* legal receives 1 iff no edge is monochromatic; conflicts may be NULL. */
VC_API vc_status vc_verify_coloring(const vc_graph* g, const uint32_t* colors, size_t n, int* legal,
                                    size_t* conflicts);

/* ---- analysis ---------------------------------------------------------- */

VC_API vc_status vc_kneser_bounds_json(uint32_t m, uint32_t r, uint32_t t, int weighted, int emit_vectors,
                                       char** out);

/* Reference color counts: delta^{1-2/k} sqrt(ln delta) log2 n and
 * n^{1-3/(k+1)} sqrt(ln n). */
VC_API vc_status vc_reference_bounds(size_t n, size_t max_degree, double k, double* degree_ref, double* n_ref);

#ifdef __cplusplus
}
#endif

#endif
