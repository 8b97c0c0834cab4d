#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vcolor/graph.hpp"

namespace vcolor {

// One unit vector per row.
using VectorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct SolverConfig {
  double feasibility_tol = 1e-6;  // delta
  double objective_tol = 1e-4;    // epsilon
  std::size_t max_iterations = 20000;  // inner iterations per restart
  std::uint64_t seed = 0;
  std::size_t restarts = 3;
  // Columns of the factor; 0 picks min(n + 1, rank_cap_auto) from the
  // Barvinok-Pataki bound.
  std::size_t max_rank = 0;

  void validate() const;
};

// Gram-matrix form of a vector coloring.
struct MatrixColoring {
  Eigen::MatrixXd gram;
  double alpha = 0.0;
  double k_value = 1.0;
};

struct VectorColoring {
  VectorMatrix vectors;
  double k_value = 1.0;

  std::size_t size() const noexcept { return static_cast<std::size_t>(vectors.rows()); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(vectors.cols()); }

  // Rows `ids` in order, with k recomputed on `sub` (the graph induced by ids).
  VectorColoring restrict_to(const Graph& sub, std::span<const Vertex> ids) const;
};

struct SolveResult {
  MatrixColoring matrix;
  VectorColoring vectors;
  bool converged = false;
  double feasibility_residual = 0.0;
  std::size_t iterations = 0;
  std::size_t restarts_run = 0;
  std::size_t rank = 0;
};

// k = 1 - 1/alpha for alpha < 0; +inf otherwise.
double k_from_alpha(double alpha);
// Largest dot product over edges; NaN for an edgeless graph.
double max_edge_dot(const Graph& g, const VectorMatrix& vectors);
// k implied by the worst edge; 1 for edgeless graphs.
double implied_k(const Graph& g, const VectorMatrix& vectors);

// minimize alpha s.t. <v_i, v_j> <= alpha on edges, |v_i| = 1.
SolveResult solve_vector_coloring(const Graph& g, const SolverConfig& cfg = {});
// Same with <v_i, v_j> = alpha on every edge.
SolveResult solve_strict_vector_coloring(const Graph& g, const SolverConfig& cfg = {});

// Eigen-factorization of a PSD Gram matrix with clipping of small negative
// eigenvalues. Throws Error(numerical) if the smallest eigenvalue is below
// -100 * delta.
VectorColoring factor_gram(const MatrixColoring& m, double delta);

// k unit vectors with pairwise dot -1/(k-1), zero padded to `dim` >= k columns
// (the vectors span a (k-1)-dimensional subspace).
VectorMatrix make_simplex_vectors(std::size_t k, std::size_t dim);

struct NeighborhoodColoring {
  std::vector<Vertex> vertices;  // neighbors of the center, in adjacency order
  Graph graph;                   // induced on `vertices`
  VectorColoring coloring;
};

// Projects neighbor vectors onto the complement of the center's vector and
// renormalizes. A vector (k)-coloring becomes a vector (k-1)-coloring of the
// neighborhood.
NeighborhoodColoring project_neighborhood(const VectorColoring& vc, const Graph& g, Vertex center);

struct ThetaResult {
  double theta = 1.0;       // theta of the complement graph
  double dual_value = 0.0;  // optimum of  max -tr(P)
  double mu = 0.0;          // sum_{i != j} p_ij at the optimum
  bool converged = false;
  std::size_t newton_steps = 0;
};

// Barrier interior-point solve of the dual strict vector coloring program:
//   max -sum p_ii  s.t. P psd, sum_{i!=j} p_ij >= 1, p_ij = 0 off E.
ThetaResult theta_dual(const Graph& g, const SolverConfig& cfg = {});

}  // namespace vcolor
