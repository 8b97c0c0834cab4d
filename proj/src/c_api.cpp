#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "vcolor/analysis.hpp"
#include "vcolor/errors.hpp"
#include "vcolor/graph.hpp"
#include "vcolor/rounding.hpp"
#include "vcolor/sdp.hpp"
#include "vcolor/serialize.hpp"
#include "vcolor/vcolor.h"

struct vc_graph {
  vcolor::Graph g;
};

struct vc_vectors {
  vcolor::SolveResult result;
  bool strict = false;
};

struct vc_coloring {
  vcolor::Coloring c;
};

namespace {

thread_local std::string last_error;

vc_status status_of(vcolor::ErrorCode code) {
  switch (code) {
    case vcolor::ErrorCode::input: return VC_ERR_INPUT;
    case vcolor::ErrorCode::non_convergence: return VC_ERR_NONCONVERGENCE;
    case vcolor::ErrorCode::contract_violation: return VC_ERR_CONTRACT;
    case vcolor::ErrorCode::invalid_argument: return VC_ERR_INVALID_ARGUMENT;
    case vcolor::ErrorCode::size_limit: return VC_ERR_SIZE_LIMIT;
    case vcolor::ErrorCode::numerical: return VC_ERR_NUMERICAL;
  }
  return VC_ERR_INTERNAL;
}

template <class F>
vc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return VC_OK;
  } catch (const vcolor::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return VC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return VC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return VC_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) vcolor::fail(vcolor::ErrorCode::invalid_argument, std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void put_warnings(const std::vector<std::string>& warnings, char** out) {
  if (out != nullptr) *out = dup_string(nlohmann::json(warnings).dump());
}

vcolor::SolverConfig to_cpp(const vc_solver_config* cfg) {
  vcolor::SolverConfig s;
  if (cfg == nullptr) return s;
  s.feasibility_tol = cfg->feasibility_tol;
  s.objective_tol = cfg->objective_tol;
  s.max_iterations = cfg->max_iterations;
  s.seed = cfg->seed;
  s.restarts = cfg->restarts;
  s.max_rank = cfg->max_rank;
  return s;
}

void from_cpp(const vcolor::SolverConfig& s, vc_solver_config* cfg) {
  cfg->feasibility_tol = s.feasibility_tol;
  cfg->objective_tol = s.objective_tol;
  cfg->max_iterations = s.max_iterations;
  cfg->seed = s.seed;
  cfg->restarts = s.restarts;
  cfg->max_rank = s.max_rank;
}

vcolor::RoundingConfig to_cpp(const vc_rounding_config* cfg) {
  vcolor::RoundingConfig r;
  if (cfg == nullptr) return r;
  switch (cfg->method) {
    case VC_METHOD_AUTO: r.method = vcolor::Method::automatic; break;
    case VC_METHOD_HYPERPLANE: r.method = vcolor::Method::hyperplane; break;
    case VC_METHOD_PROJECTION: r.method = vcolor::Method::projection; break;
    default: vcolor::fail(vcolor::ErrorCode::invalid_argument, "unknown rounding method");
  }
  r.seed = cfg->seed;
  if (cfg->hyperplane_count > 0) r.hyperplane_count_override = cfg->hyperplane_count;
  if (cfg->trials_per_extraction > 0) r.trials_per_extraction = cfg->trials_per_extraction;
  if (cfg->wigderson_delta > 0.0) r.wigderson_delta_override = cfg->wigderson_delta;
  r.greedy_delta_floor = cfg->greedy_delta_floor;
  r.wigderson = cfg->wigderson != 0;
  r.solver = to_cpp(&cfg->solver);
  return r;
}

}  // namespace

extern "C" {

const char* vc_version(void) { return "0.3.0"; }

const char* vc_last_error(void) { return last_error.c_str(); }

void vc_string_free(char* s) { std::free(s); }

vc_status vc_graph_parse_dimacs(const char* text, size_t len, vc_graph** out, char** warnings) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto parsed = vcolor::parse_dimacs(std::string_view(text, len));
    put_warnings(parsed.warnings, warnings);
    *out = new vc_graph{std::move(parsed.graph)};
  });
}

vc_status vc_graph_read_dimacs(const char* path, vc_graph** out, char** warnings) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    auto parsed = vcolor::read_dimacs_file(path);
    put_warnings(parsed.warnings, warnings);
    *out = new vc_graph{std::move(parsed.graph)};
  });
}

vc_status vc_graph_from_edges(size_t n, const uint32_t* pairs, size_t m, vc_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (m > 0) require(pairs, "pairs");
    std::vector<vcolor::Edge> edges(m);
    for (size_t i = 0; i < m; ++i) edges[i] = {pairs[2 * i], pairs[2 * i + 1]};
    *out = new vc_graph{vcolor::Graph::from_edges(n, edges)};
  });
}

vc_status vc_graph_planted(size_t n, size_t k, double p, uint64_t seed, vc_graph** out, uint32_t* hidden) {
  return guarded([&] {
    require(out, "out");
    auto inst = vcolor::generate_planted(n, k, p, seed);
    if (hidden != nullptr) std::copy(inst.hidden_coloring.begin(), inst.hidden_coloring.end(), hidden);
    *out = new vc_graph{std::move(inst.graph)};
  });
}

vc_status vc_graph_kneser(uint32_t m, uint32_t r, uint32_t t, vc_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new vc_graph{vcolor::generate_kneser({m, r, t})};
  });
}

vc_status vc_graph_emit_dimacs(const vc_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(vcolor::emit_dimacs(g->g));
  });
}

size_t vc_graph_vertex_count(const vc_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t vc_graph_edge_count(const vc_graph* g) { return g ? g->g.edge_count() : 0; }
size_t vc_graph_max_degree(const vc_graph* g) { return g ? g->g.max_degree() : 0; }

vc_status vc_graph_edges(const vc_graph* g, uint32_t* pairs) {
  return guarded([&] {
    require(g, "graph");
    if (g->g.edge_count() > 0) require(pairs, "pairs");
    size_t i = 0;
    for (const vcolor::Edge& e : g->g.edges()) {
      pairs[i++] = e.u;
      pairs[i++] = e.v;
    }
  });
}

void vc_graph_free(vc_graph* g) { delete g; }

void vc_solver_config_default(vc_solver_config* cfg) {
  if (cfg != nullptr) from_cpp(vcolor::SolverConfig{}, cfg);
}

vc_status vc_solve(const vc_graph* g, const vc_solver_config* cfg, int strict, vc_vectors** out,
                   vc_solve_info* info) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto s = to_cpp(cfg);
    auto res = strict ? vcolor::solve_strict_vector_coloring(g->g, s) : vcolor::solve_vector_coloring(g->g, s);
    if (info != nullptr) {
      info->k_value = res.matrix.k_value;
      info->alpha = res.matrix.alpha;
      info->vector_k_value = res.vectors.k_value;
      info->feasibility_residual = res.feasibility_residual;
      info->converged = res.converged ? 1 : 0;
      info->iterations = res.iterations;
      info->rank = res.rank;
    }
    *out = new vc_vectors{std::move(res), strict != 0};
  });
}

vc_status vc_vectors_json(const vc_vectors* v, char** out) {
  return guarded([&] {
    require(v, "vectors");
    require(out, "out");
    *out = dup_string(vcolor::solve_to_json(v->result, v->strict).dump());
  });
}

size_t vc_vectors_count(const vc_vectors* v) { return v ? v->result.vectors.size() : 0; }
size_t vc_vectors_dim(const vc_vectors* v) { return v ? v->result.vectors.dim() : 0; }

vc_status vc_vectors_copy(const vc_vectors* v, double* out) {
  return guarded([&] {
    require(v, "vectors");
    const auto& m = v->result.vectors.vectors;
    if (m.size() > 0) require(out, "out");
    std::copy(m.data(), m.data() + m.size(), out);
  });
}

void vc_vectors_free(vc_vectors* v) { delete v; }

vc_status vc_theta(const vc_graph* g, const vc_solver_config* cfg, vc_theta_info* info) {
  return guarded([&] {
    require(g, "graph");
    require(info, "info");
    const auto th = vcolor::theta_dual(g->g, to_cpp(cfg));
    info->theta = th.theta;
    info->dual_value = th.dual_value;
    info->mu = th.mu;
    info->converged = th.converged ? 1 : 0;
    info->newton_steps = th.newton_steps;
  });
}

void vc_rounding_config_default(vc_rounding_config* cfg) {
  if (cfg == nullptr) return;
  const vcolor::RoundingConfig r;
  cfg->method = VC_METHOD_AUTO;
  cfg->seed = r.seed;
  cfg->hyperplane_count = 0;
  cfg->trials_per_extraction = 0;
  cfg->wigderson_delta = 0.0;
  cfg->greedy_delta_floor = r.greedy_delta_floor;
  cfg->wigderson = r.wigderson ? 1 : 0;
  from_cpp(r.solver, &cfg->solver);
}

vc_status vc_color_graph(const vc_graph* g, const vc_rounding_config* cfg, vc_coloring** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new vc_coloring{vcolor::color_graph(g->g, to_cpp(cfg))};
  });
}

vc_status vc_color_with_vectors(const vc_graph* g, const vc_vectors* v, const vc_rounding_config* cfg,
                                vc_coloring** out) {
  return guarded([&] {
    require(g, "graph");
    require(v, "vectors");
    require(out, "out");
    *out = new vc_coloring{vcolor::color_with_vectors(g->g, v->result.vectors, to_cpp(cfg))};
  });
}

size_t vc_coloring_colors_used(const vc_coloring* c) { return c ? c->c.colors_used : 0; }

vc_status vc_coloring_assignment(const vc_coloring* c, uint32_t* out) {
  return guarded([&] {
    require(c, "coloring");
    if (!c->c.assignment.empty()) require(out, "out");
    std::copy(c->c.assignment.begin(), c->c.assignment.end(), out);
  });
}

vc_status vc_coloring_stats_json(const vc_coloring* c, char** out) {
  return guarded([&] {
    require(c, "coloring");
    require(out, "out");
    *out = dup_string(vcolor::coloring_stats_to_json(c->c).dump());
  });
}

vc_status vc_coloring_text(const vc_coloring* c, char** out) {
  return guarded([&] {
    require(c, "coloring");
    require(out, "out");
    *out = dup_string(vcolor::coloring_to_text(c->c));
  });
}

void vc_coloring_free(vc_coloring* c) { delete c; }

vc_status vc_verify_coloring(const vc_graph* g, const uint32_t* colors, size_t n, int* legal, size_t* conflicts) {
  return guarded([&] {
    require(g, "graph");
    require(legal, "legal");
    if (n > 0) require(colors, "colors");
    const auto rep = vcolor::verify_coloring(g->g, std::span<const vcolor::Color>(colors, n));
    *legal = rep.legal ? 1 : 0;
    if (conflicts != nullptr) *conflicts = rep.conflicts.size();
  });
}

vc_status vc_kneser_bounds_json(uint32_t m, uint32_t r, uint32_t t, int weighted, int emit_vectors, char** out) {
  return guarded([&] {
    require(out, "out");
    const vcolor::KneserSpec spec{m, r, t};
    const bool keep = emit_vectors != 0;
    const auto plain = vcolor::kneser_vectors(spec, keep);
    std::optional<vcolor::KneserCertificate> w;
    if (weighted) w = vcolor::kneser_weighted(spec, keep);
    *out = dup_string(vcolor::kneser_to_json(plain, w ? &*w : nullptr, keep).dump());
  });
}

vc_status vc_reference_bounds(size_t n, size_t max_degree, double k, double* degree_ref, double* n_ref) {
  return guarded([&] {
    require(degree_ref, "degree_ref");
    require(n_ref, "n_ref");
    if (!(k > 0.0)) vcolor::fail(vcolor::ErrorCode::invalid_argument, "reference bounds need k > 0");
    const double d = static_cast<double>(max_degree);
    const double nn = static_cast<double>(n);
    const double ln_d = d > 1.0 ? std::log(d) : 0.0;
    const double ln_n = nn > 1.0 ? std::log(nn) : 0.0;
    *degree_ref = d > 0.0 ? std::pow(d, 1.0 - 2.0 / k) * std::sqrt(ln_d) * (nn > 0.0 ? std::log2(nn) : 0.0) : 0.0;
    *n_ref = nn > 0.0 ? std::pow(nn, 1.0 - 3.0 / (k + 1.0)) * std::sqrt(ln_n) : 0.0;
  });
}

}  // extern "C"
