#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "vcolor/vcolor.h"

namespace {

std::string take(char* s) {
  std::string out = s;
  vc_string_free(s);
  return out;
}

vc_graph* parse(const char* text) {
  vc_graph* g = nullptr;
  REQUIRE(vc_graph_parse_dimacs(text, std::strlen(text), &g, nullptr) == VC_OK);
  return g;
}

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(std::string(vc_version()).size() > 0);
  vc_graph* g = nullptr;
  const char* bad = "p edge 2 1\ne 1 1\n";
  CHECK(vc_graph_parse_dimacs(bad, std::strlen(bad), &g, nullptr) == VC_ERR_INPUT);
  CHECK(g == nullptr);
  CHECK(std::string(vc_last_error()).find("self-loop") != std::string::npos);
  CHECK(vc_graph_parse_dimacs(nullptr, 0, &g, nullptr) == VC_ERR_INVALID_ARGUMENT);
  CHECK(vc_graph_read_dimacs("/no/such/file", &g, nullptr) == VC_ERR_INPUT);
  CHECK(vc_graph_kneser(70, 35, 1, &g) == VC_ERR_SIZE_LIMIT);
  CHECK(vc_graph_planted(10, 2, 2.0, 0, &g, nullptr) == VC_ERR_INVALID_ARGUMENT);
  // Null handles are tolerated by the free functions and the counters.
  vc_graph_free(nullptr);
  vc_vectors_free(nullptr);
  vc_coloring_free(nullptr);
  vc_string_free(nullptr);
  CHECK(vc_graph_vertex_count(nullptr) == 0);
}

TEST_CASE("graph handles") {
  char* warnings = nullptr;
  vc_graph* g = nullptr;
  const char* text = "p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n";
  REQUIRE(vc_graph_parse_dimacs(text, std::strlen(text), &g, &warnings) == VC_OK);
  CHECK(nlohmann::json::parse(take(warnings)).size() >= 1);
  CHECK(vc_graph_vertex_count(g) == 3);
  CHECK(vc_graph_edge_count(g) == 2);
  CHECK(vc_graph_max_degree(g) == 2);
  std::vector<uint32_t> pairs(4);
  REQUIRE(vc_graph_edges(g, pairs.data()) == VC_OK);
  CHECK(pairs == std::vector<uint32_t>{0, 1, 1, 2});

  char* dimacs = nullptr;
  REQUIRE(vc_graph_emit_dimacs(g, &dimacs) == VC_OK);
  const std::string round = take(dimacs);
  vc_graph* back = parse(round.c_str());
  CHECK(vc_graph_edge_count(back) == 2);
  vc_graph_free(back);
  vc_graph_free(g);

  const uint32_t e[] = {0, 1, 1, 2, 2, 0};
  REQUIRE(vc_graph_from_edges(3, e, 3, &g) == VC_OK);
  CHECK(vc_graph_edge_count(g) == 3);
  vc_graph_free(g);

  std::vector<uint32_t> hidden(30);
  REQUIRE(vc_graph_planted(30, 3, 0.5, 9, &g, hidden.data()) == VC_OK);
  CHECK(hidden[4] == 1);
  vc_graph_free(g);
}

TEST_CASE("solve through the C API") {
  vc_graph* tri = parse("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  vc_solver_config cfg;
  vc_solver_config_default(&cfg);
  CHECK(cfg.objective_tol == doctest::Approx(1e-4));
  vc_vectors* v = nullptr;
  vc_solve_info info{};
  REQUIRE(vc_solve(tri, &cfg, 0, &v, &info) == VC_OK);
  CHECK(info.converged == 1);
  CHECK(info.k_value == doctest::Approx(3.0).epsilon(1e-4));
  CHECK(vc_vectors_count(v) == 3);
  const size_t dim = vc_vectors_dim(v);
  std::vector<double> rows(3 * dim);
  REQUIRE(vc_vectors_copy(v, rows.data()) == VC_OK);
  double dot = 0.0;
  for (size_t j = 0; j < dim; ++j) dot += rows[j] * rows[dim + j];
  CHECK(dot == doctest::Approx(-0.5).epsilon(1e-3));

  char* json = nullptr;
  REQUIRE(vc_vectors_json(v, &json) == VC_OK);
  const auto j = nlohmann::json::parse(take(json));
  CHECK(j["strict"] == false);
  CHECK(j["vectors"].size() == 3);
  vc_vectors_free(v);

  cfg.feasibility_tol = -1.0;
  CHECK(vc_solve(tri, &cfg, 0, &v, &info) == VC_ERR_INVALID_ARGUMENT);

  vc_theta_info th{};
  vc_solver_config_default(&cfg);
  REQUIRE(vc_theta(tri, &cfg, &th) == VC_OK);
  CHECK(th.theta == doctest::Approx(3.0).epsilon(1e-5));
  vc_graph_free(tri);
}

TEST_CASE("coloring through the C API") {
  vc_graph* g = nullptr;
  REQUIRE(vc_graph_planted(200, 3, 0.2, 4, &g, nullptr) == VC_OK);
  vc_rounding_config cfg;
  vc_rounding_config_default(&cfg);
  CHECK(cfg.wigderson == 1);
  CHECK(cfg.solver.max_rank == 16);
  cfg.method = VC_METHOD_PROJECTION;
  cfg.seed = 8;
  vc_coloring* c = nullptr;
  REQUIRE(vc_color_graph(g, &cfg, &c) == VC_OK);
  std::vector<uint32_t> colors(200);
  REQUIRE(vc_coloring_assignment(c, colors.data()) == VC_OK);
  int legal = 0;
  size_t conflicts = 7;
  REQUIRE(vc_verify_coloring(g, colors.data(), colors.size(), &legal, &conflicts) == VC_OK);
  CHECK(legal == 1);
  CHECK(conflicts == 0);

  char* stats = nullptr;
  REQUIRE(vc_coloring_stats_json(c, &stats) == VC_OK);
  const auto j = nlohmann::json::parse(take(stats));
  CHECK(j["method"] == "projection");
  CHECK(j["colors_used"] == vc_coloring_colors_used(c));
  char* text = nullptr;
  REQUIRE(vc_coloring_text(c, &text) == VC_OK);
  CHECK(take(text).rfind("v 1 ", 0) == 0);

  // A deliberately broken coloring is reported, not hidden.
  colors.assign(200, 0);
  REQUIRE(vc_verify_coloring(g, colors.data(), colors.size(), &legal, &conflicts) == VC_OK);
  CHECK(legal == 0);
  CHECK(conflicts == vc_graph_edge_count(g));
  CHECK(vc_verify_coloring(g, colors.data(), 5, &legal, nullptr) == VC_ERR_INVALID_ARGUMENT);
  vc_coloring_free(c);

  vc_solver_config scfg;
  vc_solver_config_default(&scfg);
  vc_vectors* v = nullptr;
  REQUIRE(vc_solve(g, &scfg, 0, &v, nullptr) == VC_OK);
  REQUIRE(vc_color_with_vectors(g, v, &cfg, &c) == VC_OK);
  CHECK(vc_coloring_colors_used(c) >= 3);
  vc_coloring_free(c);
  vc_vectors_free(v);

  cfg.method = static_cast<vc_method>(9);
  CHECK(vc_color_graph(g, &cfg, &c) == VC_ERR_INVALID_ARGUMENT);
  vc_graph_free(g);
}

TEST_CASE("Kneser bounds JSON") {
  char* out = nullptr;
  REQUIRE(vc_kneser_bounds_json(8, 4, 1, 1, 0, &out) == VC_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["unweighted"]["vcn_bound"] == 3.0);
  CHECK(j["weighted"]["closed_form_vcn"] == "3");
  CHECK(j["chromatic_lower"] == "5/4");
  REQUIRE(vc_kneser_bounds_json(12, 6, 1, 1, 1, &out) == VC_OK);
  const auto w = nlohmann::json::parse(take(out));
  CHECK(w["weighted"]["closed_form_vcn"] == "5/2");
  CHECK(w["weighted"]["vectors"].size() == 924);
  CHECK(vc_kneser_bounds_json(4, 2, 1, 1, 0, &out) == VC_ERR_INVALID_ARGUMENT);
  CHECK(vc_kneser_bounds_json(3, 4, 1, 0, 0, &out) == VC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("reference bounds match hand arithmetic") {
  double dr = 0.0, nr = 0.0;
  REQUIRE(vc_reference_bounds(1000, 100, 3.0, &dr, &nr) == VC_OK);
  // 100^(1/3) * sqrt(ln 100) * log2(1000) and 1000^(1/4) * sqrt(ln 1000).
  const double d_expected = 4.641588833612779 * 2.145966026289347 * 9.965784284662087;
  const double n_expected = 5.623413251903491 * 2.628260884878923;
  CHECK(dr == doctest::Approx(d_expected).epsilon(1e-12));
  CHECK(nr == doctest::Approx(n_expected).epsilon(1e-12));
  CHECK(dr == doctest::Approx(99.27).epsilon(1e-3));
  CHECK(nr == doctest::Approx(14.78).epsilon(1e-3));
  REQUIRE(vc_reference_bounds(1000, 1, 3.0, &dr, &nr) == VC_OK);
  CHECK(dr == 0.0);
  CHECK(vc_reference_bounds(10, 3, 0.0, &dr, &nr) == VC_ERR_INVALID_ARGUMENT);
}
