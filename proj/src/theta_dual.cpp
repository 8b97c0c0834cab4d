#include <cmath>
#include <limits>

#include "vcolor/errors.hpp"
#include "vcolor/sdp.hpp"

namespace vcolor {
namespace {

constexpr std::size_t kCenteringSteps = 50;

// P(x) = diag(d) + sum_e y_e (E_ab + E_ba) with x = [d; y].
Eigen::MatrixXd assemble(const Graph& g, const Eigen::VectorXd& x) {
  const Eigen::Index n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  p.diagonal() = x.head(n);
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double y = x[n + static_cast<Eigen::Index>(e)];
    p(edges[e].u, edges[e].v) = y;
    p(edges[e].v, edges[e].u) = y;
  }
  return p;
}

struct BarrierPoint {
  bool feasible = false;
  double value = 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt;
};

// phi_t(x) = t * sum d - log det P - log(2 sum y - 1)
BarrierPoint barrier(const Graph& g, const Eigen::VectorXd& x, double t) {
  const Eigen::Index n = static_cast<Eigen::Index>(g.vertex_count());
  BarrierPoint bp;
  const double slack = 2.0 * x.tail(x.size() - n).sum() - 1.0;
  if (!(slack > 0.0)) return bp;
  bp.llt.compute(assemble(g, x));
  if (bp.llt.info() != Eigen::Success) return bp;
  const auto& l = bp.llt.matrixLLT();
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(l(i, i) > 0.0)) return bp;
    logdet += 2.0 * std::log(l(i, i));
  }
  bp.feasible = true;
  bp.value = t * x.head(n).sum() - logdet - std::log(slack);
  return bp;
}

}  // namespace

ThetaResult theta_dual(const Graph& g, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.vertex_count();
  if (n == 0) fail(ErrorCode::invalid_argument, "theta_dual: graph has no vertices");
  ThetaResult res;
  if (g.edge_count() == 0) {
    // The normalization constraint cannot hold; by convention theta = 1.
    res.converged = true;
    return res;
  }

  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const Eigen::Index nn = static_cast<Eigen::Index>(n);
  const Eigen::Index dim = static_cast<Eigen::Index>(n + m);

  Eigen::VectorXd x(dim);
  x.tail(static_cast<Eigen::Index>(m)).setConstant(1.0 / static_cast<double>(m));
  x.head(nn).setOnes();
  for (const Edge& e : edges) {
    x[e.u] += 1.0 / static_cast<double>(m);
    x[e.v] += 1.0 / static_cast<double>(m);
  }

  const double barrier_degree = static_cast<double>(n + 1);
  const double gap_tol = 1e-9;
  const std::size_t step_cap = std::max<std::size_t>(500, cfg.max_iterations / 20);
  double t = 1.0;

  Eigen::VectorXd grad(dim), step(dim), trial(dim);
  Eigen::MatrixXd hess(dim, dim);
  while (res.newton_steps < step_cap) {
    // Centering by damped Newton.
    BarrierPoint here = barrier(g, x, t);
    if (!here.feasible) fail(ErrorCode::numerical, "theta_dual: lost strict feasibility");
    bool centered = false;
    bool stalled = false;
    for (std::size_t inner = 0; inner < kCenteringSteps && res.newton_steps < step_cap; ++inner) {
      const Eigen::MatrixXd s = here.llt.solve(Eigen::MatrixXd::Identity(nn, nn));
      const double slack = 2.0 * x.tail(static_cast<Eigen::Index>(m)).sum() - 1.0;

      for (Eigen::Index i = 0; i < nn; ++i) grad[i] = t - s(i, i);
      for (std::size_t e = 0; e < m; ++e) {
        grad[nn + static_cast<Eigen::Index>(e)] = -2.0 * s(edges[e].u, edges[e].v) - 2.0 / slack;
      }
      hess.topLeftCorner(nn, nn) = s.cwiseProduct(s);
      for (std::size_t e = 0; e < m; ++e) {
        const Eigen::Index a = edges[e].u, b = edges[e].v;
        const Eigen::Index col = nn + static_cast<Eigen::Index>(e);
        for (Eigen::Index i = 0; i < nn; ++i) {
          const double h = 2.0 * s(i, a) * s(i, b);
          hess(i, col) = h;
          hess(col, i) = h;
        }
        for (std::size_t f = 0; f <= e; ++f) {
          const Eigen::Index c = edges[f].u, d = edges[f].v;
          const double h = 2.0 * (s(a, c) * s(b, d) + s(a, d) * s(b, c)) + 4.0 / (slack * slack);
          hess(col, nn + static_cast<Eigen::Index>(f)) = h;
          hess(nn + static_cast<Eigen::Index>(f), col) = h;
        }
      }
      Eigen::LDLT<Eigen::MatrixXd> hldlt(hess);
      if (hldlt.info() != Eigen::Success) {
        stalled = true;
        break;
      }
      step = hldlt.solve(-grad);
      if (!step.allFinite()) {
        stalled = true;
        break;
      }
      const double decrement = -grad.dot(step);
      ++res.newton_steps;
      if (decrement / 2.0 <= 1e-10) {
        centered = true;
        break;
      }
      double beta = 1.0;
      BarrierPoint next;
      for (int tries = 0; tries < 60; ++tries, beta *= 0.5) {
        trial = x + beta * step;
        next = barrier(g, trial, t);
        if (next.feasible && next.value <= here.value - 0.25 * beta * decrement) break;
        next.feasible = false;
      }
      if (!next.feasible) {
        centered = true;  // no further progress possible at this t
        break;
      }
      x = trial;
      here = std::move(next);
    }
    if (stalled) {
      // Newton system too ill-conditioned to continue; accept a small gap.
      res.converged = barrier_degree / t < 1e-7;
      break;
    }
    if (!centered && barrier_degree / t >= 1e-7) break;
    if (barrier_degree / t < gap_tol) {
      res.converged = true;
      break;
    }
    t *= 10.0;
  }

  const double trace = x.head(nn).sum();
  res.dual_value = -trace;
  res.mu = 2.0 * x.tail(static_cast<Eigen::Index>(m)).sum();
  res.theta = 1.0 + 1.0 / trace;
  return res;
}

}  // namespace vcolor
