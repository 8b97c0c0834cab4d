#include <doctest.h>

#include <bit>
#include <cmath>

#include "fixtures.hpp"
#include "vcolor/analysis.hpp"
#include "vcolor/errors.hpp"
#include "vcolor/serialize.hpp"

using namespace vcolor;

namespace {

BigInt pascal(unsigned m, unsigned r) {
  std::vector<BigInt> row(m + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= m; ++i)
    for (unsigned j = i; j > 0; --j) row[j] += row[j - 1];
  return r <= m ? row[r] : BigInt(0);
}

}  // namespace

TEST_CASE("coloring verifier") {
  const Graph c5 = fixtures::cycle(5);
  std::vector<Color> good = {0, 1, 0, 1, 2};
  auto rep = verify_coloring(c5, good);
  CHECK(rep.legal);
  CHECK(rep.colors_used == 3);
  std::vector<Color> bad = {0, 1, 0, 1, 0};
  rep = verify_coloring(c5, bad);
  CHECK_FALSE(rep.legal);
  REQUIRE(rep.conflicts.size() == 1);
  CHECK(rep.conflicts[0] == Edge{0, 4});
  std::vector<Color> short_one = {0, 1};
  CHECK_THROWS_AS(verify_coloring(c5, short_one), Error);
  std::vector<Color> partial = {0, 1, 0, 1, kUncolored};
  CHECK_THROWS_AS(verify_coloring(c5, partial), Error);
}

TEST_CASE("semicoloring verifier") {
  const Graph p4 = fixtures::path(4);
  std::vector<Color> half = {0, kUncolored, 0, kUncolored};
  auto rep = verify_semicoloring(p4, half);
  CHECK(rep.valid);
  CHECK(rep.colored == 2);
  CHECK(rep.required == 2);
  std::vector<Color> few = {0, kUncolored, kUncolored, kUncolored};
  CHECK_FALSE(verify_semicoloring(p4, few).covering);
  std::vector<Color> clash = {0, 0, kUncolored, kUncolored};
  CHECK_FALSE(verify_semicoloring(p4, clash).legal);
}

TEST_CASE("vector coloring verifier") {
  VectorColoring vc;
  vc.vectors = make_simplex_vectors(3, 3);
  vc.k_value = 3.0;
  auto rep = verify_vector_coloring(fixtures::complete(3), vc, 1e-9);
  CHECK(rep.valid);
  CHECK(rep.worst_dot == doctest::Approx(-0.5));
  vc.k_value = 2.5;
  rep = verify_vector_coloring(fixtures::complete(3), vc, 1e-9);
  CHECK_FALSE(rep.valid);
  CHECK(rep.worst_violation == doctest::Approx(-0.5 + 2.0 / 3.0));
}

TEST_CASE("binomials agree with Pascal's triangle") {
  for (unsigned m = 0; m <= 40; m += 3)
    for (unsigned r = 0; r <= m; ++r) CHECK(binomial(m, r) == pascal(m, r));
  CHECK(binomial(100, 50) == pascal(100, 50));
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("Kneser certificates") {
  SUBCASE("K(8,4,1)") {
    const auto c = kneser_vectors({8, 4, 1});
    REQUIRE(c.closed_form_vcn);
    CHECK(*c.closed_form_vcn == Rational(3));
    CHECK(c.closed_form_dot == doctest::Approx(-0.5));
    REQUIRE(c.exact_worst_dot);
    CHECK(*c.exact_worst_dot == doctest::Approx(-1.0));
    CHECK(*c.vcn_bound == doctest::Approx(3.0));
    const auto check = check_adjacent_dots(generate_kneser({8, 4, 1}), c.vectors, -0.5);
    CHECK(check.passed);
    CHECK(check.max_norm_violations == 0);
    const auto w = kneser_weighted({8, 4, 1});
    CHECK(*w.closed_form_vcn == Rational(3));
  }
  SUBCASE("K(12,6,1) weighted") {
    const auto w = kneser_weighted({12, 6, 1});
    REQUIRE(w.closed_form_vcn);
    CHECK(*w.closed_form_vcn == Rational(5, 2));
    const auto check = check_adjacent_dots(generate_kneser({12, 6, 1}), w.vectors, -2.0 / 3.0);
    CHECK(check.passed);
  }
  SUBCASE("weighted vectors are verified exhaustively") {
    for (KneserSpec spec : {KneserSpec{9, 4, 1}, KneserSpec{10, 5, 2}, KneserSpec{11, 5, 2}}) {
      const auto w = kneser_weighted(spec);
      REQUIRE(w.exact_worst_dot);
      const auto check = check_adjacent_dots(generate_kneser(spec), w.vectors, *w.exact_worst_dot, 1e-9);
      CHECK(check.passed);
      // The closed form bounds every adjacent pair.
      CHECK(*w.exact_worst_dot <= w.closed_form_dot + 1e-12);
    }
  }
  SUBCASE("worst adjacent dot agrees with a direct scan") {
    const KneserSpec spec{9, 4, 2};
    const auto c = kneser_vectors(spec);
    const Graph g = generate_kneser(spec);
    double worst = -2.0;
    for (const Edge& e : g.edges()) worst = std::max(worst, c.vectors.row(e.u).dot(c.vectors.row(e.v)));
    CHECK(*c.exact_worst_dot == doctest::Approx(worst).epsilon(1e-12));
  }
  SUBCASE("degenerate closed form falls back to the exact value") {
    const auto c = kneser_vectors({4, 2, 1});
    CHECK_FALSE(c.closed_form_vcn);
    REQUIRE(c.vcn_bound);
    CHECK(*c.vcn_bound == doctest::Approx(2.0));
    CHECK_THROWS_AS(kneser_weighted({4, 2, 1}), Error);
  }
  SUBCASE("large universes are fine without vectors") {
    const auto c = kneser_vectors({100, 50, 5}, false);
    CHECK(c.vectors.rows() == 0);
    CHECK(c.vertex_count == pascal(100, 50));
  }
}

TEST_CASE("Milner bound and chromatic lower bound") {
  const auto a = kneser_chromatic_lower({8, 4, 1});
  CHECK(a.milner_bound == 56);
  CHECK(a.vertex_count == 70);
  CHECK(a.chromatic_lower == Rational(70, 56));
  CHECK(a.log2_chromatic_lower == doctest::Approx(std::log2(1.25)));
  const auto b = kneser_chromatic_lower({16, 8, 2});
  CHECK(b.milner_bound == 8008);
  CHECK(b.chromatic_lower == Rational(12870, 8008));
  for (unsigned m = 6; m <= 30; m += 4)
    for (unsigned t = 1; t <= 3; ++t) {
      const unsigned r = m / 2;
      const auto x = kneser_chromatic_lower({m, r, t});
      CHECK(x.milner_bound == pascal(m, (m + t + 2) / 2));
      CHECK(x.chromatic_lower == Rational(pascal(m, r), x.milner_bound));
    }
  CHECK(kneser_chromatic_lower({6, 3, 3}).weak);
}

TEST_CASE("exact oracles") {
  const Graph pet = fixtures::petersen();
  CHECK(independence_brute_force(pet) == 4);
  CHECK(clique_brute_force(pet) == 2);
  CHECK(chromatic_brute_force(pet) == 3);
  CHECK(chromatic_brute_force(fixtures::cycle(7)) == 3);
  CHECK(chromatic_brute_force(fixtures::cycle(6)) == 2);
  CHECK(chromatic_brute_force(fixtures::complete(6)) == 6);
  CHECK(chromatic_brute_force(fixtures::wheel(6)) == 4);
  CHECK(chromatic_brute_force(fixtures::wheel(7)) == 3);
  CHECK(independence_brute_force(fixtures::cycle(7)) == 3);
  CHECK(chromatic_brute_force(Graph::from_edges(3, {})) == 1);
  CHECK_THROWS_AS(chromatic_brute_force(fixtures::cycle(21)), Error);
  CHECK_THROWS_AS(independence_brute_force(fixtures::cycle(31)), Error);
}

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(5, 2)) == "5/2");
  CHECK(to_string(Rational(6, 2)) == "3");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
}

TEST_CASE("JSON serialization") {
  const auto r = solve_vector_coloring(Graph::from_edges(3, {}));
  const auto j = solve_to_json(r, false);
  CHECK(j["k_value"] == 1.0);
  CHECK(j["alpha"] == 1.0);
  CHECK(j["n"] == 3);
  CHECK(j["vectors"].size() == 3);

  const auto c = kneser_vectors({8, 4, 1}, false);
  const auto k = kneser_to_json(c, nullptr, false);
  CHECK(k["vertex_count"] == "70");
  CHECK(k["milner_bound"] == "56");
  CHECK(k["chromatic_lower"] == "5/4");
  CHECK(k["weighted"].is_null());
  CHECK_FALSE(k["unweighted"].contains("vectors"));

  Coloring col;
  col.assignment = {0, 1, 0};
  col.colors_used = 2;
  CHECK(coloring_to_text(col) == "v 1 0\nv 2 1\nv 3 0\n");
  CHECK(coloring_stats_to_json(col)["colors_used"] == 2);
}
