#include <algorithm>
#include <cmath>
#include <set>

#include "vcolor/errors.hpp"
#include "vcolor/rounding.hpp"
#include "vcolor/seed.hpp"

namespace vcolor {

CaptureParams compute_capture_params(double k, std::size_t max_degree, std::size_t greedy_floor) {
  if (!(k > 2.0)) fail(ErrorCode::invalid_argument, "compute_capture_params: k must exceed 2 (use a 2-coloring)");
  CaptureParams p;
  p.a = std::isinf(k) ? std::sqrt(2.0) : std::sqrt(2.0 * (k - 1.0) / (k - 2.0));
  if (max_degree <= greedy_floor || max_degree < 2) return p;
  const double ratio = std::isinf(k) ? 1.0 : (k - 2.0) / k;
  p.c = std::sqrt(2.0 * ratio * std::log(static_cast<double>(max_degree)));
  return p;
}

CaptureResult projection_capture(const VectorColoring& vc, const Graph& g, double c, std::uint64_t seed) {
  if (vc.size() != g.vertex_count()) fail(ErrorCode::invalid_argument, "projection_capture: vector count differs from n");
  if (!(c >= 0.0)) fail(ErrorCode::invalid_argument, "projection_capture: threshold must be >= 0");
  CaptureResult cap;
  cap.threshold_c = c;
  cap.trial_seed = seed;
  if (vc.size() == 0) return cap;
  const Eigen::VectorXd r = sample_standard_normal_vector(vc.dim(), seed);
  const Eigen::VectorXd proj = vc.vectors * r;
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    if (proj[i] >= c) {
      in[i] = 1;
      cap.captured.push_back(i);
    }
  }
  for (Vertex u : cap.captured) {
    for (Vertex w : g.neighbors(u)) cap.induced_edges += (w > u && in[w]);
  }
  return cap;
}

std::vector<Vertex> extract_independent_set(const Graph& g, const CaptureResult& cap) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : cap.captured) {
    if (v >= g.vertex_count()) fail(ErrorCode::invalid_argument, "extract_independent_set: vertex out of range");
    in[v] = 1;
  }
  std::vector<std::size_t> degree(g.vertex_count(), 0);
  // Largest degree first, then lowest index.
  auto key = [](std::size_t d, Vertex v) { return std::pair<long long, Vertex>(-static_cast<long long>(d), v); };
  std::set<std::pair<long long, Vertex>> queue;
  for (Vertex v : cap.captured) {
    for (Vertex w : g.neighbors(v)) degree[v] += in[w];
    if (degree[v] > 0) queue.insert(key(degree[v], v));
  }
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    in[v] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (!in[w]) continue;
      queue.erase(key(degree[w], w));
      if (--degree[w] > 0) queue.insert(key(degree[w], w));
    }
  }
  std::vector<Vertex> out;
  for (Vertex v : cap.captured) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

Semicoloring projection_semicolor(const VectorColoring& vc, const Graph& g, const RoundingConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.vertex_count();
  if (vc.size() != n) fail(ErrorCode::invalid_argument, "projection_semicolor: vector count differs from n");
  const double k = std::max(vc.k_value, 2.0 + 1e-3);
  Semicoloring out;
  out.assignment.assign(n, kUncolored);
  std::vector<Vertex> alive(n);
  for (Vertex i = 0; i < n; ++i) alive[i] = i;
  std::size_t colored = 0;
  const std::size_t target = (n + 1) / 2;
  const std::size_t trials = cfg.trials_for(n);

  for (std::size_t round = 0; colored < target && !alive.empty(); ++round) {
    const Graph sub = g.induced(alive);
    VectorColoring sub_vc;
    sub_vc.vectors.resize(static_cast<Eigen::Index>(alive.size()), vc.vectors.cols());
    for (std::size_t i = 0; i < alive.size(); ++i) sub_vc.vectors.row(i) = vc.vectors.row(alive[i]);
    sub_vc.k_value = k;

    const CaptureParams params = compute_capture_params(k, sub.max_degree(), cfg.greedy_delta_floor);
    if (params.c == 0.0) {
      const std::vector<Color> greedy = greedy_coloring(sub);
      const Color base = static_cast<Color>(out.colors_used);
      Color top = 0;
      for (std::size_t i = 0; i < alive.size(); ++i) {
        out.assignment[alive[i]] = base + greedy[i];
        top = std::max(top, greedy[i] + 1);
      }
      out.colors_used += top;
      break;
    }

    const std::uint64_t round_seed = derive_seed(cfg.seed, "projection", round);
    CaptureResult best;
    long long best_score = std::numeric_limits<long long>::min();
    for (std::size_t t = 0; t < trials; ++t) {
      CaptureResult cap = projection_capture(sub_vc, sub, params.c, derive_seed(round_seed, "trial", t));
      const long long score = static_cast<long long>(cap.captured.size()) - static_cast<long long>(cap.induced_edges);
      if (score > best_score) {  // ties keep the lowest trial index
        best_score = score;
        best = std::move(cap);
      }
    }
    std::vector<Vertex> chosen = extract_independent_set(sub, best);
    if (chosen.empty()) {
      const Eigen::VectorXd proj = sub_vc.vectors * sample_standard_normal_vector(vc.dim(), best.trial_seed);
      Eigen::Index top = 0;
      proj.maxCoeff(&top);
      chosen.push_back(static_cast<Vertex>(top));
    }
    const Color color = static_cast<Color>(out.colors_used++);
    std::vector<char> taken(alive.size(), 0);
    for (Vertex v : chosen) {
      taken[v] = 1;
      out.assignment[alive[v]] = color;
    }
    colored += chosen.size();
    std::vector<Vertex> next;
    next.reserve(alive.size() - chosen.size());
    for (std::size_t i = 0; i < alive.size(); ++i) {
      if (!taken[i]) next.push_back(alive[i]);
    }
    alive.swap(next);
  }
  return out;
}

}  // namespace vcolor
