#include <algorithm>
#include <functional>
#include <cmath>
#include <limits>
#include <random>

#include "lbfgs.hpp"
#include "vcolor/errors.hpp"
#include "vcolor/sdp.hpp"
#include "vcolor/seed.hpp"

namespace vcolor {
namespace {

enum class Variant { inequality, strict };

constexpr std::size_t kAutoRankCap = 48;
constexpr std::size_t kDenseGramLimit = 5000;
constexpr std::size_t kObjectiveWindow = 50;
constexpr std::size_t kMaxOuter = 300;
constexpr std::size_t kStageIterations = 200;

template <class Rows>
bool normalize_rows(const Rows& u, VectorMatrix& v, std::vector<double>& norms) {
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    norms[i] = u.row(i).norm();
    if (!(norms[i] > 1e-300)) return false;
    v.row(i) = u.row(i) / norms[i];
  }
  return true;
}

// Chain rule through v = u/|u|: project onto the tangent space and scale.
template <class Out>
void tangent_gradient(const VectorMatrix& v, const VectorMatrix& gv, const std::vector<double>& norms,
                      Out& gu) {
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const double radial = gv.row(i).dot(v.row(i));
    gu.row(i) = (gv.row(i) - radial * v.row(i)) / norms[i];
  }
}

// Smooth surrogate of the largest edge dot product over unnormalized rows u_i
// with v_i = u_i / |u_i|:  T log sum_e exp(<v_a, v_b> / T).
class SoftMaxDot {
 public:
  SoftMaxDot(const Graph& g, std::size_t rank)
      : g_(g), n_(g.vertex_count()), p_(rank), dots_(g.edge_count()), weights_(g.edge_count()),
        v_(n_, p_), gv_(n_, p_), norms_(n_) {}

  double evaluate(const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
    Eigen::Map<const VectorMatrix> u(x.data(), n_, p_);
    Eigen::Map<VectorMatrix> gu(grad.data(), n_, p_);
    if (!normalize_rows(u, v_, norms_)) return std::numeric_limits<double>::infinity();
    const auto edges = g_.edges();
    max_dot_ = -std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      dots_[e] = v_.row(edges[e].u).dot(v_.row(edges[e].v));
      max_dot_ = std::max(max_dot_, dots_[e]);
    }
    double total = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      weights_[e] = std::exp((dots_[e] - max_dot_) / temperature_);
      total += weights_[e];
    }
    gv_.setZero();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const double w = weights_[e] / total;
      if (w < 1e-300) continue;
      gv_.row(edges[e].u) += w * v_.row(edges[e].v);
      gv_.row(edges[e].v) += w * v_.row(edges[e].u);
    }
    tangent_gradient(v_, gv_, norms_, gu);
    return max_dot_ + temperature_ * std::log(total);
  }

  double max_dot() const { return max_dot_; }
  double temperature() const { return temperature_; }
  void set_temperature(double t) { temperature_ = t; }
  const VectorMatrix& unit_rows() const { return v_; }

 private:
  const Graph& g_;
  std::size_t n_, p_;
  double temperature_ = 0.05;
  double max_dot_ = 0.0;
  std::vector<double> dots_, weights_;
  VectorMatrix v_, gv_;
  std::vector<double> norms_;
};

// Augmented Lagrangian of  min alpha  s.t.  <v_a, v_b> = alpha  on every edge,
// over unnormalized rows. alpha is minimized out in closed form.
class AugmentedLagrangian {
 public:
  AugmentedLagrangian(const Graph& g, std::size_t rank)
      : g_(g), n_(g.vertex_count()), p_(rank),
        lambda_(g.edge_count(), 1.0 / static_cast<double>(g.edge_count())),
        mu_(g.edge_count()), dots_(g.edge_count()), v_(n_, p_), gv_(n_, p_), norms_(n_) {}

  double evaluate(const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
    Eigen::Map<const VectorMatrix> u(x.data(), n_, p_);
    Eigen::Map<VectorMatrix> gu(grad.data(), n_, p_);
    if (!normalize_rows(u, v_, norms_)) return std::numeric_limits<double>::infinity();
    const auto edges = g_.edges();
    const std::size_t m = edges.size();
    double sum_lambda = 0.0, sum_dots = 0.0;
    for (std::size_t e = 0; e < m; ++e) {
      dots_[e] = v_.row(edges[e].u).dot(v_.row(edges[e].v));
      sum_lambda += lambda_[e];
      sum_dots += dots_[e];
    }
    // d/dalpha = 1 - sum(lambda + rho*gap) = 0.
    alpha_ = (sum_lambda + rho_ * sum_dots - 1.0) / (rho_ * static_cast<double>(m));

    double value = alpha_;
    gv_.setZero();
    for (std::size_t e = 0; e < m; ++e) {
      const double gap = dots_[e] - alpha_;
      const double mu = lambda_[e] + rho_ * gap;
      value += lambda_[e] * gap + 0.5 * rho_ * gap * gap;
      mu_[e] = mu;
      gv_.row(edges[e].u) += mu * v_.row(edges[e].v);
      gv_.row(edges[e].v) += mu * v_.row(edges[e].u);
    }
    tangent_gradient(v_, gv_, norms_, gu);
    return value;
  }

  // Largest |<v_a, v_b> - alpha| at the last evaluation.
  double violation() const {
    double worst = 0.0;
    for (double d : dots_) worst = std::max(worst, std::abs(d - alpha_));
    return worst;
  }

  void update_multipliers() { lambda_ = mu_; }
  double alpha() const { return alpha_; }
  double rho() const { return rho_; }
  void set_rho(double rho) { rho_ = rho; }
  const VectorMatrix& unit_rows() const { return v_; }

 private:
  const Graph& g_;
  std::size_t n_, p_;
  double rho_ = 10.0;
  double alpha_ = 0.0;
  std::vector<double> lambda_, mu_, dots_;
  VectorMatrix v_, gv_;
  std::vector<double> norms_;
};

std::size_t pick_rank(const Graph& g, const SolverConfig& cfg) {
  const std::size_t n = g.vertex_count();
  if (cfg.max_rank > 0) return std::min(cfg.max_rank, n + 1);
  // Smallest r with r(r+1)/2 >= #constraints, plus one.
  const double constraints = static_cast<double>(n + g.edge_count());
  const auto r = static_cast<std::size_t>(std::ceil((std::sqrt(8.0 * constraints + 1.0) - 1.0) / 2.0));
  return std::max<std::size_t>(2, std::min({n + 1, r + 1, kAutoRankCap}));
}

struct RunOutcome {
  VectorMatrix vectors;
  double alpha = 0.0;       // reported objective
  double residual = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
};

Eigen::VectorXd random_start(std::size_t n, std::size_t rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd x(static_cast<Eigen::Index>(n * rank));
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = normal(rng);
  return x;
}

// Change of history.back() over the last kObjectiveWindow entries, relative to
// its magnitude; entries before `floor` are ignored.
double window_change(const std::vector<double>& history, std::size_t floor) {
  if (history.empty()) return std::numeric_limits<double>::infinity();
  std::size_t start = history.size() > kObjectiveWindow ? history.size() - kObjectiveWindow : 0;
  start = std::max(start, std::min(floor, history.size() - 1));
  return std::abs(history.back() - history[start]) / std::max(std::abs(history.back()), 1e-12);
}

// Inequality variant: minimize the soft maximum of edge dot products while the
// temperature is halved down to a level where its bias is below eps.
RunOutcome run_softmax(const Graph& g, std::size_t rank, const SolverConfig& cfg, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  Eigen::VectorXd x = random_start(n, rank, seed);
  SoftMaxDot sm(g, rank);
  auto objective = [&](const Eigen::VectorXd& xx, Eigen::VectorXd& grad) { return sm.evaluate(xx, grad); };

  // The surrogate overshoots the max by at most T log m.
  const double final_temperature =
      std::max(1e-9, 0.1 * cfg.objective_tol / std::log(static_cast<double>(g.edge_count()) + 1.0));
  std::vector<double> history;
  RunOutcome out;
  VectorMatrix best;
  double best_alpha = std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  Eigen::VectorXd grad(x.size());

  while (used < cfg.max_iterations) {
    Eigen::Map<VectorMatrix> u(x.data(), n, rank);
    u.rowwise().normalize();
    const bool last_stage = sm.temperature() <= final_temperature;
    const std::size_t stage_start = history.size();

    detail::LbfgsOptions opt;
    opt.max_iterations = cfg.max_iterations - used;
    if (!last_stage) opt.max_iterations = std::min<std::size_t>(opt.max_iterations, kStageIterations);
    opt.gradient_tol = 1e-3 * sm.temperature();
    const auto rep = detail::minimize_lbfgs(objective, x, opt, [&](double) {
      history.push_back(sm.max_dot());
      return !(last_stage && history.size() - stage_start >= kObjectiveWindow &&
               window_change(history, stage_start) < cfg.objective_tol);
    });
    used += rep.iterations;

    sm.evaluate(x, grad);
    if (sm.max_dot() < best_alpha) {
      best_alpha = sm.max_dot();
      best = sm.unit_rows();
    }
    if (last_stage) {
      out.converged = rep.converged || rep.line_search_failed || rep.stalled ||
                      window_change(history, stage_start) < cfg.objective_tol;
      break;
    }
    sm.set_temperature(std::max(final_temperature, 0.5 * sm.temperature()));
  }

  out.vectors = std::move(best);
  out.alpha = best_alpha;
  out.iterations = used;
  for (Eigen::Index i = 0; i < out.vectors.rows(); ++i) {
    out.residual = std::max(out.residual, std::abs(out.vectors.row(i).squaredNorm() - 1.0));
  }
  out.converged = out.converged && out.residual <= cfg.feasibility_tol;
  return out;
}

// Strict variant: augmented Lagrangian with a shrinking inner tolerance.
RunOutcome run_strict(const Graph& g, std::size_t rank, const SolverConfig& cfg, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  Eigen::VectorXd x = random_start(n, rank, seed);
  AugmentedLagrangian al(g, rank);
  std::vector<double> history;
  auto objective = [&](const Eigen::VectorXd& xx, Eigen::VectorXd& grad) { return al.evaluate(xx, grad); };

  RunOutcome out;
  double prev_violation = std::numeric_limits<double>::infinity();
  double prev_alpha = std::numeric_limits<double>::quiet_NaN();
  const double inner_floor = 1e-3 * cfg.feasibility_tol;
  double inner_tol = std::max(1e-3, inner_floor);
  std::size_t used = 0;
  std::size_t round_start = 0, prev_round_start = 0;
  Eigen::VectorXd grad(x.size());

  for (std::size_t outer = 0; outer < kMaxOuter && used < cfg.max_iterations; ++outer) {
    Eigen::Map<VectorMatrix> u(x.data(), n, rank);
    u.rowwise().normalize();

    detail::LbfgsOptions opt;
    opt.max_iterations = cfg.max_iterations - used;
    opt.gradient_tol = inner_tol;
    const auto rep = detail::minimize_lbfgs(objective, x, opt, [&](double) {
      history.push_back(al.alpha());
      return true;
    });
    used += rep.iterations;

    al.evaluate(x, grad);
    const double violation = al.violation();
    const double alpha = al.alpha();
    // The window never reaches back past the previous outer round.
    const double scale = std::max(std::abs(alpha), 1e-12);
    const bool stable = window_change(history, round_start) <= cfg.objective_tol &&
                        std::abs(alpha - prev_alpha) <= 0.01 * cfg.objective_tol * scale;
    const bool inner_done = rep.converged || rep.line_search_failed || rep.stalled;
    al.update_multipliers();

    if (violation <= cfg.feasibility_tol && inner_done && stable && inner_tol <= inner_floor * 1.5) {
      out.converged = true;
      break;
    }
    if (violation > 0.1 * cfg.feasibility_tol && violation > 0.25 * prev_violation) {
      al.set_rho(std::min(al.rho() * 4.0, 1e8));
    }
    prev_violation = violation;
    prev_alpha = alpha;
    round_start = prev_round_start;
    prev_round_start = history.size();
    inner_tol = std::max(inner_floor, inner_tol * 0.1);
  }

  al.evaluate(x, grad);
  out.vectors = al.unit_rows();
  out.residual = al.violation();
  out.alpha = al.alpha();
  out.iterations = used;
  return out;
}

SolveResult solve(const Graph& g, const SolverConfig& cfg, Variant variant) {
  cfg.validate();
  const std::size_t n = g.vertex_count();
  if (n == 0) fail(ErrorCode::invalid_argument, "solve: graph has no vertices");

  SolveResult result;
  if (g.edge_count() == 0) {
    // No constraints bind: one color, every vector equal.
    result.vectors.vectors = VectorMatrix::Zero(n, 1);
    result.vectors.vectors.col(0).setOnes();
    result.vectors.k_value = 1.0;
    result.matrix.gram = Eigen::MatrixXd::Ones(n, n);
    result.matrix.alpha = 1.0;
    result.matrix.k_value = 1.0;
    result.converged = true;
    result.rank = 1;
    return result;
  }

  const std::size_t rank = pick_rank(g, cfg);
  const std::size_t restarts = std::max<std::size_t>(1, cfg.restarts);
  RunOutcome best;
  bool have_best = false;
  for (std::size_t r = 0; r < restarts; ++r) {
    const std::uint64_t seed = derive_seed(cfg.seed, "restart", r);
    RunOutcome run = variant == Variant::strict ? run_strict(g, rank, cfg, seed) : run_softmax(g, rank, cfg, seed);
    result.iterations += run.iterations;
    bool better = !have_best;
    if (have_best) {
      if (variant == Variant::inequality) {
        better = run.alpha < best.alpha;
      } else {
        const bool run_ok = run.residual <= cfg.feasibility_tol;
        const bool best_ok = best.residual <= cfg.feasibility_tol;
        better = run_ok != best_ok ? run_ok
                                   : (run_ok ? run.alpha < best.alpha : run.residual < best.residual);
      }
    }
    if (better) {
      best = std::move(run);
      have_best = true;
    }
  }

  result.restarts_run = restarts;
  result.rank = rank;
  result.converged = best.converged;
  result.feasibility_residual = best.residual;
  result.matrix.alpha = best.alpha;
  result.matrix.k_value = k_from_alpha(best.alpha);
  if (n <= kDenseGramLimit) result.matrix.gram = best.vectors * best.vectors.transpose();
  result.vectors.k_value = implied_k(g, best.vectors);
  result.vectors.vectors = std::move(best.vectors);
  return result;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(feasibility_tol > 0.0) || !(objective_tol > 0.0)) {
    fail(ErrorCode::invalid_argument, "solver tolerances must be strictly positive");
  }
  if (max_iterations == 0) fail(ErrorCode::invalid_argument, "max_iterations must be positive");
}

double k_from_alpha(double alpha) {
  if (!(alpha < 0.0)) return std::numeric_limits<double>::infinity();
  return 1.0 - 1.0 / alpha;
}

double max_edge_dot(const Graph& g, const VectorMatrix& vectors) {
  double worst = std::numeric_limits<double>::quiet_NaN();
  for (const Edge& e : g.edges()) {
    const double d = vectors.row(e.u).dot(vectors.row(e.v));
    if (!(d <= worst)) worst = d;
  }
  return worst;
}

double implied_k(const Graph& g, const VectorMatrix& vectors) {
  if (g.edge_count() == 0) return 1.0;
  return k_from_alpha(max_edge_dot(g, vectors));
}

SolveResult solve_vector_coloring(const Graph& g, const SolverConfig& cfg) {
  return solve(g, cfg, Variant::inequality);
}

SolveResult solve_strict_vector_coloring(const Graph& g, const SolverConfig& cfg) {
  return solve(g, cfg, Variant::strict);
}

}  // namespace vcolor
