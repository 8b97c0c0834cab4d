#include <cmath>
#include <numbers>
#include <random>

#include "vcolor/errors.hpp"
#include "vcolor/rounding.hpp"

namespace vcolor {

Eigen::VectorXd sample_standard_normal_vector(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) fail(ErrorCode::invalid_argument, "sample_standard_normal_vector: dim must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd r(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < r.size(); ++i) r[i] = normal(rng);
  return r;
}

double normal_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double normal_density(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double separation_probability_estimate(const Eigen::VectorXd& v1, const Eigen::VectorXd& v2,
                                       std::size_t trials, std::uint64_t seed) {
  if (trials == 0) fail(ErrorCode::invalid_argument, "separation estimate needs at least one trial");
  if (v1.size() != v2.size() || v1.size() == 0) {
    fail(ErrorCode::invalid_argument, "separation estimate: vectors must share a positive dimension");
  }
  // One stream for the whole estimate; each trial is a fresh normal vector.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd r(v1.size());
  std::size_t cut = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    for (Eigen::Index i = 0; i < r.size(); ++i) r[i] = normal(rng);
    const bool s1 = v1.dot(r) >= 0.0;
    const bool s2 = v2.dot(r) >= 0.0;
    if (s1 != s2) ++cut;
  }
  return static_cast<double>(cut) / static_cast<double>(trials);
}

}  // namespace vcolor
