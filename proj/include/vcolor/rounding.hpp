#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vcolor/graph.hpp"
#include "vcolor/sdp.hpp"

namespace vcolor {

using Color = std::uint32_t;
inline constexpr Color kUncolored = std::numeric_limits<Color>::max();

enum class Method { hyperplane, projection, automatic };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

// Looser than the SolverConfig defaults: rounding only needs a good vector
// coloring, not the optimum to 1e-4.
SolverConfig rounding_solver_defaults();

struct RoundingConfig {
  Method method = Method::automatic;
  std::uint64_t seed = 0;
  std::optional<std::size_t> hyperplane_count_override;
  std::optional<std::size_t> trials_per_extraction;  // default max(20, ceil(10 ln n))
  std::optional<double> wigderson_delta_override;
  std::size_t greedy_delta_floor = 16;
  bool wigderson = true;
  SolverConfig solver = rounding_solver_defaults();

  void validate() const;
  std::size_t trials_for(std::size_t n) const;
};

struct Semicoloring {
  std::vector<Color> assignment;  // kUncolored for unassigned vertices
  std::size_t colors_used = 0;
  bool conforming = true;  // false when a trial budget ran out

  std::size_t colored() const;
  std::vector<Vertex> uncolored() const;
};

struct RoundStats {
  std::size_t palette = 0;
  std::size_t colored = 0;
};

struct Coloring {
  std::vector<Color> assignment;
  std::size_t colors_used = 0;
  std::vector<RoundStats> rounds;
  double k_value = 1.0;
  std::uint64_t seed = 0;
  Method method = Method::automatic;  // method actually used (never automatic unless trivial)
  std::size_t wigderson_colors = 0;
  bool bipartite_shortcut = false;
  bool solver_converged = true;  // false when color_graph's solve hit its budget
};

struct CaptureResult {
  std::vector<Vertex> captured;  // ascending
  std::size_t induced_edges = 0;
  double threshold_c = 0.0;
  std::uint64_t trial_seed = 0;
};

struct CaptureParams {
  double a = 0.0;
  double c = 0.0;  // 0 means: use greedy coloring instead
};

struct WigdersonResult {
  std::vector<Color> assignment;  // colors of removed neighborhoods, kUncolored elsewhere
  std::size_t colors_used = 0;
  std::size_t phases = 0;
  std::vector<Vertex> residual;  // uncolored vertices, ascending
  Graph residual_graph;
};

Eigen::VectorXd sample_standard_normal_vector(std::size_t dim, std::uint64_t seed);

double normal_tail(double x);     // N(x) = P[Z >= x]
double normal_density(double x);  // phi(x)

double separation_probability_estimate(const Eigen::VectorXd& v1, const Eigen::VectorXd& v2,
                                       std::size_t trials, std::uint64_t seed);

// 2 + ceil(log_{1/q} delta) with q = 1 - arccos(-1/(k-1))/pi; 0 when delta = 0.
std::size_t hyperplane_count(double k, std::size_t max_degree);

Semicoloring hyperplane_semicolor(const VectorColoring& vc, const Graph& g, const RoundingConfig& cfg);

CaptureParams compute_capture_params(double k, std::size_t max_degree, std::size_t greedy_floor = 16);

CaptureResult projection_capture(const VectorColoring& vc, const Graph& g, double c, std::uint64_t seed);

// Drops a vertex of largest induced degree (lowest index on ties) until the
// captured set is independent.
std::vector<Vertex> extract_independent_set(const Graph& g, const CaptureResult& cap);

Semicoloring projection_semicolor(const VectorColoring& vc, const Graph& g, const RoundingConfig& cfg);

// Default Wigderson threshold for the given method and vector chromatic bound.
double default_wigderson_delta(std::size_t n, double k, Method method);

WigdersonResult wigderson_reduce(const Graph& g, const VectorColoring& vc, double k, double delta,
                                 const RoundingConfig& cfg);

// Called with the graph induced by `ids` (ids[i] is the original label of
// vertex i) and the round number; must semicolor it.
using SemicolorFn = std::function<Semicoloring(const Graph&, std::span<const Vertex>, std::size_t)>;

Coloring semicolor_to_color(const Graph& g, const SemicolorFn& semicolor);

std::vector<Color> greedy_coloring(const Graph& g);

Coloring color_with_vectors(const Graph& g, const VectorColoring& vc, const RoundingConfig& cfg);
Coloring color_graph(const Graph& g, const RoundingConfig& cfg = {});

}  // namespace vcolor
