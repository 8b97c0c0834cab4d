#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "vcolor/analysis.hpp"
#include "vcolor/errors.hpp"

namespace vcolor {
namespace {

std::vector<Edge> conflicts_of(const Graph& g, std::span<const Color> colors) {
  std::vector<Edge> bad;
  for (const Edge& e : g.edges()) {
    if (colors[e.u] != kUncolored && colors[e.u] == colors[e.v]) bad.push_back(e);
  }
  return bad;
}

std::size_t distinct(std::span<const Color> colors) {
  std::unordered_set<Color> seen;
  for (Color c : colors) {
    if (c != kUncolored) seen.insert(c);
  }
  return seen.size();
}

}  // namespace

ColoringReport verify_coloring(const Graph& g, std::span<const Color> colors) {
  if (colors.size() != g.vertex_count()) {
    fail(ErrorCode::invalid_argument, "coloring has " + std::to_string(colors.size()) + " entries for " +
                                          std::to_string(g.vertex_count()) + " vertices");
  }
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] == kUncolored) fail(ErrorCode::invalid_argument, "vertex " + std::to_string(v) + " is uncolored");
  }
  ColoringReport rep;
  rep.conflicts = conflicts_of(g, colors);
  rep.legal = rep.conflicts.empty();
  rep.colors_used = distinct(colors);
  return rep;
}

SemicoloringReport verify_semicoloring(const Graph& g, std::span<const Color> colors) {
  SemicoloringReport rep;
  rep.required = (g.vertex_count() + 1) / 2;
  if (colors.size() != g.vertex_count()) return rep;
  rep.conflicts = conflicts_of(g, colors);
  rep.legal = rep.conflicts.empty();
  rep.colored = static_cast<std::size_t>(
      std::count_if(colors.begin(), colors.end(), [](Color c) { return c != kUncolored; }));
  rep.covering = rep.colored >= rep.required;
  rep.valid = rep.legal && rep.covering;
  return rep;
}

VectorColoringReport verify_vector_coloring(const Graph& g, const VectorColoring& vc, double tol) {
  VectorColoringReport rep;
  if (vc.size() != g.vertex_count()) fail(ErrorCode::invalid_argument, "vector count differs from n");
  for (Eigen::Index i = 0; i < vc.vectors.rows(); ++i) {
    rep.max_norm_deviation = std::max(rep.max_norm_deviation, std::abs(vc.vectors.row(i).norm() - 1.0));
  }
  rep.worst_dot = max_edge_dot(g, vc.vectors);
  rep.bound = vc.k_value > 1.0 ? -1.0 / (vc.k_value - 1.0) : -std::numeric_limits<double>::infinity();
  if (std::isnan(rep.worst_dot)) {
    rep.worst_violation = 0.0;
  } else {
    rep.worst_violation = std::max(0.0, rep.worst_dot - rep.bound);
  }
  rep.valid = rep.max_norm_deviation <= tol && rep.worst_violation <= tol;
  return rep;
}

DotCheck check_adjacent_dots(const Graph& g, const VectorMatrix& vectors, double bound, double tol) {
  if (static_cast<std::size_t>(vectors.rows()) != g.vertex_count()) {
    fail(ErrorCode::invalid_argument, "vector count differs from n");
  }
  DotCheck out;
  out.worst_dot = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
    out.max_norm_violations += std::abs(vectors.row(i).norm() - 1.0) > tol;
  }
  for (const Edge& e : g.edges()) {
    out.worst_dot = std::max(out.worst_dot, vectors.row(e.u).dot(vectors.row(e.v)));
    ++out.pairs_checked;
  }
  out.passed = out.max_norm_violations == 0 && (out.pairs_checked == 0 || out.worst_dot <= bound + tol);
  return out;
}

}  // namespace vcolor
