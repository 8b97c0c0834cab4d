#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "vcolor/errors.hpp"
#include "vcolor/rounding.hpp"
#include "vcolor/seed.hpp"

namespace vcolor {

std::size_t hyperplane_count(double k, std::size_t max_degree) {
  if (max_degree == 0) return 0;
  if (!(k > 1.0)) fail(ErrorCode::invalid_argument, "hyperplane_count: k must exceed 1");
  // q: chance that one hyperplane misses an edge at the worst allowed angle.
  const double cos_angle = std::isinf(k) ? 0.0 : -1.0 / (k - 1.0);
  const double q = 1.0 - std::acos(std::clamp(cos_angle, -1.0, 1.0)) / std::numbers::pi;
  if (!(q > 0.0)) return 1;  // antipodal edges: one hyperplane always cuts
  const double levels = std::log(static_cast<double>(max_degree)) / std::log(1.0 / q);
  // Guard against log(3)/log(3) landing a hair above an integer.
  return 2 + static_cast<std::size_t>(std::ceil(levels - 1e-12));
}

Semicoloring hyperplane_semicolor(const VectorColoring& vc, const Graph& g, const RoundingConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.vertex_count();
  if (vc.size() != n) fail(ErrorCode::invalid_argument, "hyperplane_semicolor: vector count differs from n");
  Semicoloring out;
  out.assignment.assign(n, kUncolored);
  if (n == 0) return out;

  const std::size_t r = cfg.hyperplane_count_override.value_or(
      hyperplane_count(std::max(vc.k_value, 2.0 + 1e-3), g.max_degree()));
  if (r > 62) fail(ErrorCode::invalid_argument, "hyperplane_semicolor: more than 62 hyperplanes");
  const std::size_t trials = cfg.trials_for(n);
  const auto edges = g.edges();

  std::vector<std::uint64_t> pattern(n), best_pattern;
  std::size_t best_uncut = std::numeric_limits<std::size_t>::max();
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::fill(pattern.begin(), pattern.end(), 0);
    for (std::size_t h = 0; h < r; ++h) {
      const Eigen::VectorXd normal = sample_standard_normal_vector(vc.dim(), derive_seed(cfg.seed, "hyperplane", trial * 64 + h));
      const Eigen::VectorXd side = vc.vectors * normal;
      for (std::size_t i = 0; i < n; ++i) {
        // A dot product of exactly zero counts as the positive side.
        if (side[static_cast<Eigen::Index>(i)] >= 0.0) pattern[i] |= std::uint64_t{1} << h;
      }
    }
    std::size_t uncut = 0;
    for (const Edge& e : edges) uncut += pattern[e.u] == pattern[e.v];
    if (uncut < best_uncut) {
      best_uncut = uncut;
      best_pattern = pattern;
    }
    if (4 * uncut <= n) break;
  }
  out.conforming = 4 * best_uncut <= n;

  // One endpoint per uncut edge loses its color; survivors get region ids
  // compacted to colors in order of first appearance.
  std::vector<char> dropped(n, 0);
  for (const Edge& e : edges) {
    if (!dropped[e.u] && !dropped[e.v] && best_pattern[e.u] == best_pattern[e.v]) dropped[e.v] = 1;
  }
  std::unordered_map<std::uint64_t, Color> ids;
  for (std::size_t i = 0; i < n; ++i) {
    if (dropped[i]) continue;
    auto [it, inserted] = ids.try_emplace(best_pattern[i], static_cast<Color>(ids.size()));
    out.assignment[i] = it->second;
  }
  out.colors_used = ids.size();
  return out;
}

}  // namespace vcolor
