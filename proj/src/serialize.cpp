#include <cmath>
#include <sstream>

#include "vcolor/serialize.hpp"

namespace vcolor {
namespace {

using nlohmann::json;

// JSON has no infinity; an unbounded k is written as null.
json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json vectors_to_json(const VectorMatrix& v) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < v.cols(); ++j) row.push_back(v(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json certificate_to_json(const KneserCertificate& c, bool emit_vectors) {
  json j;
  j["weight_a"] = to_string(c.weight_a);
  j["weight_a_value"] = c.weight_a.convert_to<double>();
  j["closed_form_dot"] = c.closed_form_dot;
  j["closed_form_vcn"] = c.closed_form_vcn ? json(to_string(*c.closed_form_vcn)) : json(nullptr);
  j["exact_worst_dot"] = c.exact_worst_dot ? json(*c.exact_worst_dot) : json(nullptr);
  j["exact_vcn"] = c.exact_vcn ? json(*c.exact_vcn) : json(nullptr);
  j["vcn_bound"] = c.vcn_bound ? json(*c.vcn_bound) : json(nullptr);
  if (emit_vectors) j["vectors"] = vectors_to_json(c.vectors);
  return j;
}

}  // namespace

json solve_to_json(const SolveResult& r, bool strict) {
  json j;
  j["n"] = r.vectors.size();
  j["k_value"] = number_or_null(r.matrix.k_value);
  j["alpha"] = r.matrix.alpha;
  j["vectors"] = vectors_to_json(r.vectors.vectors);
  j["vector_k_value"] = number_or_null(r.vectors.k_value);
  j["strict"] = strict;
  j["converged"] = r.converged;
  j["feasibility_residual"] = r.feasibility_residual;
  j["iterations"] = r.iterations;
  j["rank"] = r.rank;
  return j;
}

json coloring_stats_to_json(const Coloring& c) {
  json j;
  j["k_value"] = number_or_null(c.k_value);
  j["colors_used"] = c.colors_used;
  json rounds = json::array();
  for (const RoundStats& r : c.rounds) rounds.push_back({{"palette", r.palette}, {"colored", r.colored}});
  j["rounds"] = std::move(rounds);
  j["seed"] = c.seed;
  j["n"] = c.assignment.size();
  j["method"] = to_string(c.method);
  j["wigderson_colors"] = c.wigderson_colors;
  j["bipartite_shortcut"] = c.bipartite_shortcut;
  j["solver_converged"] = c.solver_converged;
  return j;
}

std::string coloring_to_text(const Coloring& c) {
  std::ostringstream out;
  for (std::size_t v = 0; v < c.assignment.size(); ++v) out << "v " << v + 1 << ' ' << c.assignment[v] << '\n';
  return out.str();
}

json kneser_to_json(const KneserCertificate& unweighted, const KneserCertificate* weighted, bool emit_vectors) {
  const KneserSpec& s = unweighted.spec;
  json j;
  j["m"] = s.m;
  j["r"] = s.r;
  j["t"] = s.t;
  j["vertex_count"] = unweighted.vertex_count.str();
  j["milner_bound"] = unweighted.milner_bound.str();
  j["chromatic_lower"] = to_string(unweighted.chromatic_lower);
  j["chromatic_lower_value"] = unweighted.chromatic_lower.convert_to<double>();
  j["log2_chromatic_lower"] = unweighted.log2_chromatic_lower;
  j["weak"] = unweighted.weak;
  j["unweighted"] = certificate_to_json(unweighted, emit_vectors);
  j["weighted"] = weighted ? certificate_to_json(*weighted, emit_vectors) : json(nullptr);
  return j;
}

}  // namespace vcolor
