#pragma once

// Limited-memory BFGS with Armijo backtracking. Internal to the solver.

#include <cmath>
#include <cstddef>
#include <algorithm>
#include <deque>
#include <vector>

#include <Eigen/Dense>

namespace vcolor::detail {

struct LbfgsOptions {
  std::size_t memory = 8;
  std::size_t max_iterations = 1000;
  double gradient_tol = 1e-8;  // on the infinity norm
  std::size_t stall_window = 25;
  double stall_tol = 1e-15;  // relative decrease over the window
};

struct LbfgsReport {
  std::size_t iterations = 0;
  bool converged = false;
  bool line_search_failed = false;
  bool stalled = false;  // no measurable decrease over a stretch of iterations
  double value = 0.0;
  double gradient_norm = 0.0;
};

// `f(x, grad)` returns the value and fills grad. `on_iterate(value)` runs after
// each accepted step and may return false to stop early.
template <class Objective, class OnIterate>
LbfgsReport minimize_lbfgs(Objective&& f, Eigen::VectorXd& x, const LbfgsOptions& opt,
                           OnIterate&& on_iterate) {
  using Eigen::VectorXd;
  const Eigen::Index n = x.size();
  const std::size_t cap = std::max<std::size_t>(1, opt.memory);
  VectorXd g(n), x_new(n), g_new(n), d(n);
  // Ring buffer of correction pairs; slot (head + i) % cap holds the i-th oldest.
  Eigen::MatrixXd s_hist(n, static_cast<Eigen::Index>(cap)), y_hist(n, static_cast<Eigen::Index>(cap));
  std::vector<double> rho_hist(cap), alpha_buf(cap);
  std::size_t head = 0, mem = 0;
  auto slot = [&](std::size_t i) { return static_cast<Eigen::Index>((head + i) % cap); };

  LbfgsReport rep;
  double fx = f(x, g);
  std::deque<double> recent{fx};
  auto finish = [&](LbfgsReport& r) {
    r.value = fx;
    r.gradient_norm = g.template lpNorm<Eigen::Infinity>();
    return r;
  };
  while (true) {
    rep.gradient_norm = g.template lpNorm<Eigen::Infinity>();
    rep.value = fx;
    if (rep.gradient_norm <= opt.gradient_tol) {
      rep.converged = true;
      return rep;
    }
    if (rep.iterations >= opt.max_iterations) return rep;

    d = -g;
    for (std::size_t i = mem; i-- > 0;) {
      const auto k = slot(i);
      alpha_buf[i] = rho_hist[k] * s_hist.col(k).dot(d);
      d -= alpha_buf[i] * y_hist.col(k);
    }
    if (mem > 0) {
      const auto k = slot(mem - 1);
      d *= s_hist.col(k).dot(y_hist.col(k)) / y_hist.col(k).squaredNorm();
    }
    for (std::size_t i = 0; i < mem; ++i) {
      const auto k = slot(i);
      const double beta = rho_hist[k] * y_hist.col(k).dot(d);
      d += (alpha_buf[i] - beta) * s_hist.col(k);
    }
    double slope = g.dot(d);
    if (!(slope < 0.0)) {
      mem = 0;
      d = -g;
      slope = -g.squaredNorm();
    }

    double step = mem == 0 ? std::min(1.0, 1.0 / std::sqrt(g.squaredNorm())) : 1.0;
    double f_new = 0.0;
    bool accepted = false;
    for (int tries = 0; tries < 50; ++tries) {
      x_new = x + step * d;
      f_new = f(x_new, g_new);
      if (std::isfinite(f_new) && f_new <= fx + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      rep.line_search_failed = true;
      return rep;
    }

    // Candidate pair goes into the slot after the newest one.
    const std::size_t target = mem < cap ? mem : 0;
    const auto k = slot(target);
    s_hist.col(k) = x_new - x;
    y_hist.col(k) = g_new - g;
    const double sy = s_hist.col(k).dot(y_hist.col(k));
    if (sy > 1e-12 * std::sqrt(s_hist.col(k).squaredNorm() * y_hist.col(k).squaredNorm())) {
      rho_hist[k] = 1.0 / sy;
      if (mem < cap) {
        ++mem;
      } else {
        head = (head + 1) % cap;
      }
    } else if (mem == cap) {
      // The oldest slot was overwritten by the rejected pair; drop it.
      head = (head + 1) % cap;
      --mem;
    }
    x.swap(x_new);
    g.swap(g_new);
    fx = f_new;
    ++rep.iterations;
    recent.push_back(fx);
    if (recent.size() > opt.stall_window + 1) recent.pop_front();
    if (recent.size() == opt.stall_window + 1 &&
        recent.front() - fx <= opt.stall_tol * std::max(1.0, std::abs(fx))) {
      rep.stalled = true;
      return finish(rep);
    }
    if (!on_iterate(fx)) return finish(rep);
  }
}

}  // namespace vcolor::detail
