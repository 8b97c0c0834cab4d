#include <cmath>

#include <Eigen/Eigenvalues>

#include "vcolor/errors.hpp"
#include "vcolor/sdp.hpp"

namespace vcolor {

VectorColoring VectorColoring::restrict_to(const Graph& sub, std::span<const Vertex> ids) const {
  VectorColoring out;
  out.vectors.resize(static_cast<Eigen::Index>(ids.size()), vectors.cols());
  for (std::size_t i = 0; i < ids.size(); ++i) out.vectors.row(i) = vectors.row(ids[i]);
  out.k_value = implied_k(sub, out.vectors);
  return out;
}

VectorColoring factor_gram(const MatrixColoring& m, double delta) {
  const Eigen::Index n = m.gram.rows();
  if (m.gram.cols() != n) fail(ErrorCode::invalid_argument, "factor_gram: matrix is not square");
  if (!(delta > 0.0)) fail(ErrorCode::invalid_argument, "factor_gram: delta must be positive");
  if (n == 0) return {};
  if ((m.gram - m.gram.transpose()).lpNorm<Eigen::Infinity>() > delta) {
    fail(ErrorCode::numerical, "factor_gram: matrix is not symmetric");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m.gram);
  if (eig.info() != Eigen::Success) fail(ErrorCode::numerical, "factor_gram: eigendecomposition failed");
  const Eigen::VectorXd& values = eig.eigenvalues();  // ascending
  if (values[0] < -100.0 * delta) {
    fail(ErrorCode::numerical, "factor_gram: matrix is not positive semidefinite (smallest eigenvalue " +
                                   std::to_string(values[0]) + ")");
  }
  // Keep eigen-directions above the noise floor; the rest are clipped to 0.
  const double floor = delta * 1e-3;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    if (values[j] > floor) kept.push_back(j);
  }
  if (kept.empty()) fail(ErrorCode::numerical, "factor_gram: matrix is numerically zero");

  VectorMatrix u(n, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    u.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(kept[c]) * std::sqrt(values[kept[c]]);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const double norm = u.row(i).norm();
    if (norm > 0.0) u.row(i) /= norm;
  }

  VectorColoring vc;
  vc.vectors = std::move(u);
  // No edge list here: report the matrix k degraded by the factorization slack.
  const double k = m.k_value;
  vc.k_value = std::isfinite(k) && k > 1.0 ? k + 2.0 * delta * (k - 1.0) * (k - 1.0) : k;
  return vc;
}

VectorMatrix make_simplex_vectors(std::size_t k, std::size_t dim) {
  if (k < 2) fail(ErrorCode::invalid_argument, "simplex needs k >= 2");
  if (dim + 1 < k) fail(ErrorCode::invalid_argument, "simplex needs dim >= k - 1");
  const double kd = static_cast<double>(k);
  const double off = -std::sqrt(1.0 / (kd * (kd - 1.0)));
  const double on = std::sqrt((kd - 1.0) / kd);
  // Coordinate form in R^k. Every vector is orthogonal to the all-ones vector,
  // so an orthonormal basis of that hyperplane maps them into R^(k-1).
  Eigen::MatrixXd raw = Eigen::MatrixXd::Constant(k, k, off);
  raw.diagonal().setConstant(on);

  Eigen::MatrixXd basis(k, k - 1);  // orthonormal basis of 1^perp
  for (std::size_t j = 0; j + 1 < k; ++j) {
    // Helmert contrasts.
    const double jj = static_cast<double>(j + 1);
    basis.col(j).setZero();
    basis.col(j).head(j + 1).setConstant(1.0 / std::sqrt(jj * (jj + 1.0)));
    basis(j + 1, j) = -jj / std::sqrt(jj * (jj + 1.0));
  }
  VectorMatrix out = VectorMatrix::Zero(k, dim);
  out.leftCols(k - 1) = raw * basis;
  return out;
}

NeighborhoodColoring project_neighborhood(const VectorColoring& vc, const Graph& g, Vertex center) {
  if (center >= g.vertex_count()) fail(ErrorCode::invalid_argument, "project_neighborhood: bad vertex");
  if (g.degree(center) == 0) {
    fail(ErrorCode::invalid_argument, "project_neighborhood: vertex " + std::to_string(center) + " has no neighbors");
  }
  NeighborhoodColoring out;
  const auto nb = g.neighbors(center);
  out.vertices.assign(nb.begin(), nb.end());
  out.graph = g.induced(out.vertices);

  const auto c = vc.vectors.row(center);
  out.coloring.vectors.resize(static_cast<Eigen::Index>(nb.size()), vc.vectors.cols());
  for (std::size_t i = 0; i < nb.size(); ++i) {
    Eigen::RowVectorXd w = vc.vectors.row(nb[i]);
    w -= w.dot(c) * c;
    const double norm = w.norm();
    if (norm < 1e-9) {
      fail(ErrorCode::numerical, "project_neighborhood: vector of vertex " + std::to_string(nb[i]) +
                                     " is parallel to the center's");
    }
    out.coloring.vectors.row(static_cast<Eigen::Index>(i)) = w / norm;
  }
  out.coloring.k_value = implied_k(out.graph, out.coloring.vectors);
  return out;
}

}  // namespace vcolor
