#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "vcolor/errors.hpp"
#include "vcolor/rounding.hpp"
#include "vcolor/seed.hpp"

namespace vcolor {
namespace {

constexpr double kMinRoundingK = 2.0 + 1e-3;

int exponent_k(double k) { return std::max(3, static_cast<int>(std::ceil(k - 1e-3))); }

Method resolve(Method m, std::size_t max_degree) {
  if (m != Method::automatic) return m;
  return max_degree > 32 ? Method::projection : Method::hyperplane;
}

VectorColoring rows_of(const VectorColoring& vc, std::span<const Vertex> ids, double k) {
  VectorColoring out;
  out.vectors.resize(static_cast<Eigen::Index>(ids.size()), vc.vectors.cols());
  for (std::size_t i = 0; i < ids.size(); ++i) out.vectors.row(i) = vc.vectors.row(ids[i]);
  out.k_value = k;
  return out;
}

// Palette size of a coloring whose colors are 0..c-1 (kUncolored skipped).
std::size_t palette_of(const std::vector<Color>& colors) {
  std::size_t top = 0;
  for (Color c : colors) {
    if (c != kUncolored) top = std::max<std::size_t>(top, c + 1);
  }
  return top;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::hyperplane: return "hyperplane";
    case Method::projection: return "projection";
    case Method::automatic: return "auto";
  }
  return "auto";
}

Method method_from_string(const std::string& s) {
  if (s == "hyperplane") return Method::hyperplane;
  if (s == "projection") return Method::projection;
  if (s == "auto") return Method::automatic;
  fail(ErrorCode::invalid_argument, "unknown rounding method '" + s + "'");
}

SolverConfig rounding_solver_defaults() {
  SolverConfig s;
  s.feasibility_tol = 1e-6;
  s.objective_tol = 1e-3;
  s.max_iterations = 600;
  s.restarts = 1;
  s.max_rank = 16;
  return s;
}

void RoundingConfig::validate() const {
  if (hyperplane_count_override && *hyperplane_count_override == 0) {
    fail(ErrorCode::invalid_argument, "hyperplane count override must be positive");
  }
  if (trials_per_extraction && *trials_per_extraction == 0) {
    fail(ErrorCode::invalid_argument, "trials_per_extraction must be positive");
  }
  if (wigderson_delta_override && !(*wigderson_delta_override > 0.0)) {
    fail(ErrorCode::invalid_argument, "wigderson delta must be positive");
  }
  solver.validate();
}

std::size_t RoundingConfig::trials_for(std::size_t n) const {
  if (trials_per_extraction) return *trials_per_extraction;
  const double scaled = n > 1 ? std::ceil(10.0 * std::log(static_cast<double>(n))) : 0.0;
  return std::max<std::size_t>(20, static_cast<std::size_t>(scaled));
}

std::size_t Semicoloring::colored() const {
  return static_cast<std::size_t>(std::count_if(assignment.begin(), assignment.end(),
                                                [](Color c) { return c != kUncolored; }));
}

std::vector<Vertex> Semicoloring::uncolored() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < assignment.size(); ++v) {
    if (assignment[v] == kUncolored) out.push_back(v);
  }
  return out;
}

std::vector<Color> greedy_coloring(const Graph& g) {
  std::vector<Color> color(g.vertex_count(), kUncolored);
  std::vector<char> taken;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    taken.assign(g.degree(v) + 1, 0);
    for (Vertex w : g.neighbors(v)) {
      if (color[w] != kUncolored && color[w] < taken.size()) taken[color[w]] = 1;
    }
    Color c = 0;
    while (taken[c]) ++c;
    color[v] = c;
  }
  return color;
}

double default_wigderson_delta(std::size_t n, double k, Method method) {
  const double nn = static_cast<double>(std::max<std::size_t>(n, 1));
  const int kk = exponent_k(k);
  if (method == Method::hyperplane) {
    // Balance 2n/delta against delta^{log_{1/q} 2} hyperplane colors.
    const double q = 1.0 - std::acos(-1.0 / (kk - 1.0)) / std::numbers::pi;
    const double levels = std::log(2.0) / std::log(1.0 / q);
    return std::pow(nn, 1.0 / (1.0 + levels));
  }
  return std::pow(nn, static_cast<double>(kk) / (kk + 1.0));
}

WigdersonResult wigderson_reduce(const Graph& g, const VectorColoring& vc, double k, double delta,
                                 const RoundingConfig& cfg) {
  const std::size_t n = g.vertex_count();
  if (vc.size() != n) fail(ErrorCode::invalid_argument, "wigderson_reduce: vector count differs from n");
  if (!(delta > 0.0)) fail(ErrorCode::invalid_argument, "wigderson_reduce: delta must be positive");
  WigdersonResult out;
  out.assignment.assign(n, kUncolored);
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::size_t colored = 0;

  while (2 * colored < n) {
    Vertex center = 0;
    std::size_t best = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && (!found || degree[v] > best)) {
        center = v;
        best = degree[v];
        found = true;
      }
    }
    if (!found || !(static_cast<double>(best) > delta)) break;

    std::vector<Vertex> nbrs;
    for (Vertex w : g.neighbors(center)) {
      if (alive[w]) nbrs.push_back(w);
    }
    const Graph sub = g.induced(nbrs);
    std::vector<Color> local = two_color(sub);
    if (local.empty()) {
      if (k <= 3.0 + 1e-3) {
        std::ostringstream msg;
        msg << "neighborhood of vertex " << center << " is not bipartite although the vectors claim k = " << k;
        fail(ErrorCode::contract_violation, msg.str());
      }
      // Project the neighbors onto the complement of the center's vector; the
      // result is a vector (k-1)-coloring of the neighborhood.
      const Eigen::RowVectorXd c = vc.vectors.row(center);
      VectorColoring nvc;
      nvc.vectors.resize(static_cast<Eigen::Index>(nbrs.size()), vc.vectors.cols());
      bool degenerate = false;
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        Eigen::RowVectorXd w = vc.vectors.row(nbrs[i]);
        w -= w.dot(c) * c;
        const double norm = w.norm();
        degenerate = degenerate || norm < 1e-9;
        nvc.vectors.row(i) = norm > 0.0 ? Eigen::RowVectorXd(w / norm) : w;
      }
      if (degenerate) {
        local = greedy_coloring(sub);
      } else {
        nvc.k_value = implied_k(sub, nvc.vectors);
        RoundingConfig sub_cfg = cfg;
        sub_cfg.seed = derive_seed(cfg.seed, "wigderson", out.phases);
        local = color_with_vectors(sub, nvc, sub_cfg).assignment;
      }
    }
    const Color base = static_cast<Color>(out.colors_used);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      out.assignment[nbrs[i]] = base + local[i];
      alive[nbrs[i]] = 0;
    }
    out.colors_used += palette_of(local);
    for (Vertex w : nbrs) {
      for (Vertex x : g.neighbors(w)) {
        if (alive[x]) --degree[x];
      }
    }
    colored += nbrs.size();
    ++out.phases;
  }

  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) out.residual.push_back(v);
  }
  out.residual_graph = g.induced(out.residual);
  return out;
}

Coloring semicolor_to_color(const Graph& g, const SemicolorFn& semicolor) {
  const std::size_t n = g.vertex_count();
  Coloring out;
  out.assignment.assign(n, kUncolored);
  if (n == 0) return out;
  std::vector<Vertex> ids(n);
  for (Vertex v = 0; v < n; ++v) ids[v] = v;
  const std::size_t max_rounds = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
  std::size_t next_color = 0;

  for (std::size_t round = 0; !ids.empty(); ++round) {
    if (round >= max_rounds) {
      fail(ErrorCode::contract_violation, "semicoloring recursion exceeded ceil(log2 n) + 1 rounds");
    }
    const Graph sub = g.induced(ids);
    const Semicoloring s = semicolor(sub, ids, round);
    if (s.assignment.size() != sub.vertex_count()) {
      fail(ErrorCode::contract_violation, "semicoloring has the wrong number of entries");
    }
    for (const Edge& e : sub.edges()) {
      if (s.assignment[e.u] != kUncolored && s.assignment[e.u] == s.assignment[e.v]) {
        std::ostringstream msg;
        msg << "round " << round << ": edge (" << ids[e.u] << ", " << ids[e.v] << ") is monochromatic";
        fail(ErrorCode::contract_violation, msg.str());
      }
    }
    const std::size_t colored = s.colored();
    if (2 * colored < sub.vertex_count()) {
      std::ostringstream msg;
      msg << "round " << round << " colored " << colored << " of " << sub.vertex_count() << " vertices";
      fail(ErrorCode::contract_violation, msg.str());
    }
    std::vector<Vertex> rest;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const Color c = s.assignment[i];
      if (c == kUncolored) {
        rest.push_back(ids[i]);
        continue;
      }
      if (c >= s.colors_used) fail(ErrorCode::contract_violation, "semicoloring color outside its palette");
      out.assignment[ids[i]] = static_cast<Color>(next_color + c);
    }
    next_color += s.colors_used;
    out.rounds.push_back({s.colors_used, colored});
    ids.swap(rest);
  }

  // Drop palette gaps: relabel by first appearance.
  std::vector<Color> relabel(next_color, kUncolored);
  Color used = 0;
  for (Color& c : out.assignment) {
    if (relabel[c] == kUncolored) relabel[c] = used++;
    c = relabel[c];
  }
  out.colors_used = used;
  return out;
}

Coloring color_with_vectors(const Graph& g, const VectorColoring& vc, const RoundingConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.vertex_count();
  if (vc.size() != n) fail(ErrorCode::invalid_argument, "color_with_vectors: vector count differs from n");
  Coloring out;
  out.seed = cfg.seed;
  out.k_value = vc.k_value;
  out.method = resolve(cfg.method, g.max_degree());
  if (n == 0) return out;
  if (g.edge_count() == 0) {
    out.assignment.assign(n, 0);
    out.colors_used = 1;
    out.rounds.push_back({1, n});
    return out;
  }
  if (std::vector<Color> two = two_color(g); !two.empty()) {
    out.assignment = std::move(two);
    out.colors_used = 2;
    out.rounds.push_back({2, n});
    out.bipartite_shortcut = true;
    return out;
  }

  const Method method = out.method;
  std::size_t wigderson_colors = 0;
  auto round_fn = [&](const Graph& sub, std::span<const Vertex> ids, std::size_t round) {
    const std::size_t sn = sub.vertex_count();
    Semicoloring s;
    if (sub.edge_count() == 0) {
      s.assignment.assign(sn, 0);
      s.colors_used = 1;
      return s;
    }
    if (std::vector<Color> two = two_color(sub); !two.empty()) {
      s.assignment = std::move(two);
      s.colors_used = 2;
      return s;
    }
    VectorColoring svc = vc.restrict_to(sub, ids);
    const double k = std::max(svc.k_value, kMinRoundingK);
    RoundingConfig rc = cfg;
    rc.seed = derive_seed(cfg.seed, "round", round);
    s.assignment.assign(sn, kUncolored);

    std::vector<Vertex> residual;
    Graph residual_graph;
    std::size_t offset = 0;
    if (cfg.wigderson) {
      const double delta = cfg.wigderson_delta_override.value_or(default_wigderson_delta(sn, k, method));
      WigdersonResult w = wigderson_reduce(sub, svc, k, delta, rc);
      s.assignment = std::move(w.assignment);
      offset = w.colors_used;
      wigderson_colors += w.colors_used;
      if (2 * (sn - w.residual.size()) >= sn) {
        s.colors_used = offset;
        return s;
      }
      residual = std::move(w.residual);
      residual_graph = std::move(w.residual_graph);
    } else {
      residual.resize(sn);
      for (Vertex v = 0; v < sn; ++v) residual[v] = v;
      residual_graph = sub;
    }
    VectorColoring rvc = rows_of(svc, residual, k);
    const Semicoloring inner = method == Method::hyperplane ? hyperplane_semicolor(rvc, residual_graph, rc)
                                                            : projection_semicolor(rvc, residual_graph, rc);
    for (std::size_t i = 0; i < residual.size(); ++i) {
      if (inner.assignment[i] != kUncolored) {
        s.assignment[residual[i]] = static_cast<Color>(offset + inner.assignment[i]);
      }
    }
    s.colors_used = offset + inner.colors_used;
    s.conforming = inner.conforming;
    return s;
  };

  Coloring result = semicolor_to_color(g, round_fn);
  result.seed = cfg.seed;
  result.k_value = vc.k_value;
  result.method = method;
  result.wigderson_colors = wigderson_colors;
  return result;
}

Coloring color_graph(const Graph& g, const RoundingConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.vertex_count();
  if (n == 0 || g.edge_count() == 0 || !two_color(g).empty()) {
    // No solve needed: the answer is 1 or 2 colors.
    VectorColoring trivial;
    trivial.vectors = VectorMatrix::Zero(static_cast<Eigen::Index>(n), 1);
    trivial.k_value = g.edge_count() == 0 ? 1.0 : 2.0;
    return color_with_vectors(g, trivial, cfg);
  }
  SolverConfig sc = cfg.solver;
  sc.seed = derive_seed(cfg.seed, "solve");
  const SolveResult solved = solve_vector_coloring(g, sc);
  Coloring out = color_with_vectors(g, solved.vectors, cfg);
  out.solver_converged = solved.converged;
  return out;
}

}  // namespace vcolor
